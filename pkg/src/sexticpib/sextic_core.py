"""Index formulas for the sextic family built from the simplest cubics.

The base objects are the cubic f(x) = x^3 - a*x^2 - (a+3)*x - 1 over an
imaginary quadratic field M = Q(sqrt(-d)) and the rank-6 order with basis
(1, alpha, alpha^2, w, w*alpha, w*alpha^2).  An element theta of the order
is six integers (x0, x1, x2, y0, y1, y2); relatively it is
c0 + c1*alpha + c2*alpha^2 with c_k = x_k + y_k*w in Z_M.

The absolute index of theta splits into two factors computed here exactly:
the relative index over M (a norm of the cubic form F) and a complementary
factor J measuring how the two conjugate families of M mix.  Everything is
derived from characteristic polynomials and resultants over exact rings;
no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .bigpoly import (
    MPoly,
    NotPerfectSquare,
    UPoly,
    discriminant,
    exact_div,
    isqrt_exact,
)
from .quadring import QuadInt, RingDesc, is_square_free, make_ring


class InternalInconsistency(ArithmeticError):
    """An exactness invariant failed (non-exact root or division): a bug."""


class CrossCheckFailed(ArithmeticError):
    """Two independent index computations disagree: a bug."""


class NotAPolynomialSquare(ArithmeticError):
    """The symbolic pipeline produced a non-square where a square is forced."""


@dataclass(frozen=True)
class FamilyParams:
    """One member of the two-parameter family: integer a and the ring of d."""

    a: int
    ring: RingDesc

    @property
    def d(self) -> int:
        return self.ring.d

    @property
    def k_val(self) -> int:
        """The square root of the cubic's discriminant, a^2 + 3a + 9 (>= 7)."""
        return self.a * self.a + 3 * self.a + 9


def family(a: int, d: int) -> FamilyParams:
    return FamilyParams(a=a, ring=make_ring(d))


@dataclass(frozen=True, order=True)
class ThetaCoords:
    """The six integer coordinates of an order element.

    Field order matches the basis (1, alpha, alpha^2, w, w*alpha, w*alpha^2),
    so dataclass ordering doubles as the deterministic report order.
    """

    x0: int
    x1: int
    x2: int
    y0: int
    y1: int
    y2: int

    def components(self, ring: RingDesc) -> tuple[QuadInt, QuadInt, QuadInt]:
        """Relative view (c0, c1, c2) over Z_M; exact inverse of from_components."""
        return (
            QuadInt(self.x0, self.y0, ring),
            QuadInt(self.x1, self.y1, ring),
            QuadInt(self.x2, self.y2, ring),
        )

    @classmethod
    def from_components(cls, c0: QuadInt, c1: QuadInt, c2: QuadInt) -> "ThetaCoords":
        return cls(c0.u, c1.u, c2.u, c0.v, c1.v, c2.v)

    def translated(self, t: int) -> "ThetaCoords":
        return ThetaCoords(self.x0 + t, self.x1, self.x2, self.y0, self.y1, self.y2)

    def negated(self) -> "ThetaCoords":
        return ThetaCoords(-self.x0, -self.x1, -self.x2, -self.y0, -self.y1, -self.y2)

    def canonical(self) -> "ThetaCoords":
        """Class representative under theta -> +-theta + t: drop x0, fix sign."""
        rest = (self.x1, self.x2, self.y0, self.y1, self.y2)
        sign = 1
        for c in rest:
            if c:
                sign = 1 if c > 0 else -1
                break
        return ThetaCoords(0, *(sign * c for c in rest))


@dataclass(frozen=True)
class SolutionPair:
    """A solution (Y1, Y2) of the cubic unit-norm form, with provenance.

    a_constraint None means the pair solves the equation for every integer a;
    otherwise it is tied to that single parameter value.
    """

    y1: QuadInt
    y2: QuadInt
    a_constraint: int | None = None
    provenance: str = "brute_force"

    def key(self) -> tuple[int, int, int, int]:
        return (self.y1.u, self.y1.v, self.y2.u, self.y2.v)

    def canonical(self) -> "SolutionPair":
        for c in self.key():
            if c:
                if c < 0:
                    return SolutionPair(-self.y1, -self.y2, self.a_constraint, self.provenance)
                break
        return self


@dataclass(frozen=True)
class GeneratorRecord:
    """A verified power-basis generator theta = y0*w + eps*(c1*alpha + c2*alpha^2).

    c1, c2 are the pre-twist relative coefficients, eps the applied unit;
    coords is the canonical six-coordinate form and index the recomputed
    absolute index (1 for every record emitted by the pipelines).
    """

    params: FamilyParams
    y0: int
    c1: QuadInt
    c2: QuadInt
    epsilon: QuadInt
    index: int
    coords: ThetaCoords
    provenance: str = "search"


def simplest_cubic_and_disc(a):
    """The family cubic and its discriminant, checked along two routes.

    Works for integer and symbolic parameters; the discriminant always
    equals (a^2 + 3a + 9)^2.
    """
    f = UPoly([-1, -(a + 3), -a, 1], "x")
    disc = discriminant(f)
    square = (a * a + 3 * a + 9) ** 2
    if disc != square:
        raise InternalInconsistency("cubic discriminant mismatch")
    return f, disc


def thue_form(a, y1, y2):
    """The cubic norm form F(Y1, Y2) = Y1^3 - a*Y1^2*Y2 - (a+3)*Y1*Y2^2 - Y2^3.

    F(Y1, Y2) equals the relative norm of Y1 - alpha*Y2, so the unit
    predicate for the relative equation is norm(F) = 1.
    """
    s1 = y1 * y1
    s2 = y2 * y2
    return y1 * s1 - a * (s1 * y2) - (a + 3) * (y1 * s2) - y2 * s2


def xy_transform(a, pair):
    """Solution pair (Y1, Y2) to generator coefficients (c1, c2) = (Y1 - a*Y2, Y2)."""
    py1, py2 = pair
    return (py1 - a * py2, py2)


def xy_inverse(a, pair):
    """Inverse map: (c1, c2) back to (Y1, Y2) = (c1 + a*c2, c2)."""
    pc1, pc2 = pair
    return (pc1 + a * pc2, pc2)


def char_poly_rel(a, c0, c1, c2) -> UPoly:
    """Monic cubic in t whose roots are the relative conjugates of theta.

    theta = c0 + c1*alpha + c2*alpha^2 acts on the basis (1, alpha, alpha^2)
    by a 3x3 matrix; trace, second symmetric function, and determinant are
    read off division-free, so the computation stays in the coefficient ring
    (ints, Z_M, or polynomials).
    """
    a2 = a * a
    m00 = c0
    m01 = c2
    m02 = c1 + a * c2
    m10 = c1
    m11 = c0 + (a + 3) * c2
    m12 = (a + 3) * c1 + (a2 + 3 * a + 1) * c2
    m20 = c2
    m21 = c1 + a * c2
    m22 = c0 + a * c1 + (a2 + a + 3) * c2
    minor0 = m11 * m22 - m12 * m21
    tr = m00 + m11 + m22
    s2 = (m00 * m11 - m01 * m10) + (m00 * m22 - m02 * m20) + minor0
    det = m00 * minor0 - m01 * (m10 * m22 - m12 * m20) + m02 * (m10 * m21 - m11 * m20)
    return UPoly([-det, s2, -tr, 1], "t")


def char_poly_rel_via_resultant(a: int, c0: QuadInt, c1: QuadInt, c2: QuadInt) -> UPoly:
    """Independent route: eliminate x from (f(x), t - (c0 + c1*x + c2*x^2)).

    Slower than the matrix route and restricted to numeric inputs; kept as
    a cross-checking oracle.
    """
    from .bigpoly import resultant

    ring = c0.ring
    t = MPoly.var("t")
    f = UPoly(
        [QuadInt(-1, 0, ring), QuadInt(-(a + 3), 0, ring), QuadInt(-a, 0, ring), QuadInt(1, 0, ring)],
        "x",
    )
    g = UPoly([(-c0) + t, -c1, -c2], "x")
    r = resultant(f, g)
    coeffs = []
    for k in range(4):
        cu = r.u.coeff_of("t", k) if isinstance(r.u, MPoly) else MPoly.const(r.u if k == 0 else 0)
        cv = r.v.coeff_of("t", k) if isinstance(r.v, MPoly) else MPoly.const(r.v if k == 0 else 0)
        coeffs.append(QuadInt(cu.const_value(), cv.const_value(), ring))
    poly = UPoly(coeffs, "t")
    if poly.lc == -1:
        poly = -poly
    if not poly.is_monic():
        raise InternalInconsistency("resultant route lost monicity")
    return poly


def _cubic_disc(p: UPoly):
    """Discriminant of a monic cubic t^3 + b*t^2 + c*t + e, closed form."""
    if p.degree != 3 or not p.is_monic():
        raise ValueError("monic cubic required")
    e, c, b = p.coeffs[0], p.coeffs[1], p.coeffs[2]
    return (
        18 * (b * c * e) - 4 * (b * b * b * e) + (b * b) * (c * c)
        - 4 * (c * c * c) - 27 * (e * e)
    )


def _as_quad(value, ring: RingDesc) -> QuadInt:
    if isinstance(value, QuadInt):
        if value.ring != ring:
            raise ValueError("component belongs to a different ring")
        return value
    return QuadInt(value, 0, ring)


def rel_index(params: FamilyParams, c1, c2) -> int:
    """Relative index of theta over M; 1 exactly for relative generators.

    Computed as sqrt(norm(disc_t(char poly))) / (a^2+3a+9)^2, which equals
    |N(F(Y1, Y2))| for the transformed pair.  Zero iff c1 = c2 = 0.
    """
    ring = params.ring
    c1 = _as_quad(c1, ring)
    c2 = _as_quad(c2, ring)
    poly = char_poly_rel(params.a, QuadInt(0, 0, ring), c1, c2)
    dsc = _cubic_disc(poly)
    try:
        root = isqrt_exact(dsc.norm())
    except NotPerfectSquare as exc:
        raise InternalInconsistency(f"disc norm is not a square: {exc}") from exc
    ksq = params.k_val ** 2
    quo, rem = divmod(root, ksq)
    if rem:
        raise InternalInconsistency("relative index division not exact")
    return quo


def _conj_coeffs(poly: UPoly) -> UPoly:
    return poly.map_coeffs(lambda c: c.conj() if isinstance(c, QuadInt) else c)


def _bezout_res3(p: UPoly, q: UPoly):
    """Resultant of two monic cubics via the symmetric 3x3 Bezout matrix.

    Agrees with the Sylvester determinant up to a fixed global sign; only
    the norm of the value is consumed downstream.
    """
    p0, p1, p2 = p.coeffs[0], p.coeffs[1], p.coeffs[2]
    q0, q1, q2 = q.coeffs[0], q.coeffs[1], q.coeffs[2]
    b00 = p1 * q0 - p0 * q1
    b01 = p2 * q0 - p0 * q2
    b02 = q0 - p0
    b11 = (p2 * q1 - p1 * q2) + b02
    b12 = q1 - p1
    b22 = q2 - p2
    return (
        b00 * (b11 * b22 - b12 * b12)
        - b01 * (b01 * b22 - b12 * b02)
        + b02 * (b01 * b12 - b11 * b02)
    )


def _check_imaginary(r: QuadInt) -> None:
    # The conjugate-mixing resultant is purely imaginary: branch A forces
    # r = w*c, branch B forces r = (2w-1)*c.
    if r.conj() != -r:
        raise InternalInconsistency("mixing resultant is not anti-invariant")
    if r.ring.branch == "A":
        if not (r.u == 0):
            raise InternalInconsistency("branch A mixing resultant has a real part")
    elif not (r.v == -2 * r.u):
        raise InternalInconsistency("branch B mixing resultant off the (2w-1) line")


def j_factor(params: FamilyParams, coords: ThetaCoords) -> int:
    """The complementary index factor J; invariant under x0 translation.

    J = 0 iff y0 = y1 = y2 = 0 (theta stays in one conjugate family).
    """
    ring = params.ring
    c0, c1, c2 = coords.components(ring)
    poly = char_poly_rel(params.a, c0, c1, c2)
    mixed = _bezout_res3(poly, _conj_coeffs(poly))
    _check_imaginary(mixed)
    dm3 = (-ring.field_disc) ** 3
    quo, rem = divmod(mixed.norm(), dm3)
    if rem:
        raise InternalInconsistency("J normalization division not exact")
    try:
        return isqrt_exact(quo)
    except NotPerfectSquare as exc:
        raise InternalInconsistency(f"J^2 is not a square: {exc}") from exc


def order_disc(params: FamilyParams) -> int:
    """Discriminant of the rank-6 order: (a^2+3a+9)^4 * D_M^3, always negative."""
    return params.k_val ** 4 * params.ring.field_disc ** 3


def abs_index(params: FamilyParams, coords: ThetaCoords) -> int:
    """Absolute index of theta: rel_index * j_factor, independently cross-checked.

    The check compares the product against the degree-6 conjugate-product
    discriminant: index^2 * |order disc| = |disc_t(P * conj(P))|.
    """
    ring = params.ring
    c0, c1, c2 = coords.components(ring)
    total = rel_index(params, c1, c2) * j_factor(params, coords)

    poly = char_poly_rel(params.a, c0, c1, c2)
    sextic = poly * _conj_coeffs(poly)
    plain: list[int] = []
    for c in sextic.coeffs:
        if isinstance(c, QuadInt):
            if not (c.v == 0):
                raise InternalInconsistency("conjugate product has irrational coefficients")
            plain.append(c.u)
        else:
            plain.append(c)
    d6 = discriminant(UPoly(plain, "t"))
    if total * total * abs(order_disc(params)) != abs(d6):
        raise CrossCheckFailed(
            f"index^2 * |order disc| = {total * total * abs(order_disc(params))} "
            f"but |disc(P*Pbar)| = {abs(d6)}"
        )
    return total


def maximal_order_hint(params: FamilyParams) -> dict:
    """Advisory only: when a^2+3a+9 is square-free and coprime to the base
    discriminant, the rank-6 order is the full ring of integers."""
    k = params.k_val
    kfree = is_square_free(k)
    coprime = gcd(k, abs(params.ring.field_disc)) == 1
    return {
        "k_square_free": kfree,
        "discs_coprime": coprime,
        "maximal": kfree and coprime,
    }


def symbolic_j(ring: RingDesc, pair, epsilon: QuadInt, a=None) -> MPoly:
    """J as an exact polynomial, for theta = y0*w + eps*(c1*alpha + c2*alpha^2).

    pair is a solution pair (Y1, Y2) over `ring`; the generator coefficients
    are its transform.  y0 stays symbolic; `a` is symbolic when None, fixed
    otherwise.  With a symbolic ring the result involves d (branch A) or e
    (branch B, where d = 4e - 1); with a numeric ring it involves only the
    symbolic parameters.

    The returned polynomial satisfies J(theta) = |value|; the sign is
    normalized to be positive at a sample admissible point with y0 = 1.
    """
    avar = MPoly.var("a") if a is None else a
    y0 = MPoly.var("y0")
    c1, c2 = xy_transform(avar, pair)
    c1 = epsilon * c1
    c2 = epsilon * c2
    c0 = QuadInt(0, y0, ring)
    poly = char_poly_rel(avar, c0, c1, c2)
    mixed = _bezout_res3(poly, _conj_coeffs(poly))
    _check_imaginary(mixed)
    dm3 = (-ring.field_disc) ** 3
    quo = exact_div(mixed.norm(), dm3)
    try:
        j = quo.sqrt_exact()
    except NotPerfectSquare as exc:
        raise NotAPolynomialSquare(f"norm(R)/|D_M|^3 is not a square: {exc}") from exc
    sample = {"a": 2, "d": 5, "e": 2, "y0": 1}
    value = j.eval_int({name: sample[name] for name in j.variables()})
    if value < 0:
        j = -j
    return j
