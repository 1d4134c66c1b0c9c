"""Exact sparse polynomial arithmetic over unbounded integers.

``MPoly`` is a sparse multivariate polynomial with integer coefficients over
the fixed variable universe ``(a, d, e, y0, t, x, K)``.  ``UPoly`` is a dense
univariate polynomial in one distinguished variable whose coefficients live in
any exact coefficient ring (Python ints, ``MPoly``, or ring elements that
implement the same operator protocol).  Everything here is exact: no floats,
no modular shortcuts, no rounding.

Resultants are computed from the Sylvester matrix with fraction-free Bareiss
elimination, so all intermediate divisions stay in the coefficient ring.  A
plain cofactor-expansion determinant is kept alongside as an independent
route for cross-checking.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Mapping, Sequence, Union

VARS: tuple[str, ...] = ("a", "d", "e", "y0", "t", "x", "K")
_VAR_INDEX = {name: i for i, name in enumerate(VARS)}
_NVARS = len(VARS)
_ZERO_EXP = (0,) * _NVARS


class NonDivisible(ArithmeticError):
    """Exact division was requested but the quotient is not in the ring."""


class NonMonic(ValueError):
    """A monic polynomial was required."""


class ZeroPolynomial(ValueError):
    """The zero polynomial is outside the domain of this operation."""


class NotPerfectSquare(ArithmeticError):
    """Integer or polynomial square root does not exist exactly."""


class NegativeInput(ValueError):
    """A non-negative integer was required."""


class NotExpressible(ValueError):
    """Reduction left a residual term, the input has no exact rewrite.

    The offending linear-term coefficient is attached as ``residual``.
    """

    def __init__(self, message: str, residual: "MPoly"):
        super().__init__(message)
        self.residual = residual


def _grlex_key(exp: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return (sum(exp), exp)


Scalar = Union[int, "MPoly"]


class MPoly:
    """Sparse multivariate polynomial with int coefficients.

    Terms are stored as a map from exponent tuples (one slot per variable in
    ``VARS``) to nonzero integer coefficients.  Instances are immutable by
    convention; all operations return new objects.

    >>> p = MPoly.var("a") + 3
    >>> (p * p).render()
    'a^2 + 6*a + 9'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None):
        if terms:
            self._terms = {e: c for e, c in terms.items() if c}
        else:
            self._terms = {}

    @classmethod
    def const(cls, n: int) -> "MPoly":
        if n == 0:
            return cls()
        return cls({_ZERO_EXP: n})

    @classmethod
    def var(cls, name: str) -> "MPoly":
        idx = _VAR_INDEX[name]
        exp = tuple(1 if i == idx else 0 for i in range(_NVARS))
        return cls({exp: 1})

    @staticmethod
    def _coerce(value: Scalar) -> "MPoly":
        if isinstance(value, MPoly):
            return value
        if isinstance(value, int):
            return MPoly.const(value)
        return NotImplemented  # type: ignore[return-value]

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def is_const(self) -> bool:
        return not self._terms or set(self._terms) == {_ZERO_EXP}

    def const_value(self) -> int:
        if not self._terms:
            return 0
        if set(self._terms) == {_ZERO_EXP}:
            return self._terms[_ZERO_EXP]
        raise ValueError(f"not a constant: {self.render()}")

    def variables(self) -> set[str]:
        used: set[str] = set()
        for exp in self._terms:
            for i, k in enumerate(exp):
                if k:
                    used.add(VARS[i])
        return used

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Scalar) -> "MPoly":
        other = MPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        out = MPoly.__new__(MPoly)
        out._terms = terms
        return out

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        out = MPoly.__new__(MPoly)
        out._terms = {e: -c for e, c in self._terms.items()}
        return out

    def __sub__(self, other: Scalar) -> "MPoly":
        other = MPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "MPoly":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "MPoly":
        other = MPoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return MPoly()
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = terms.get(e, 0) + c1 * c2
                if v:
                    terms[e] = v
                else:
                    del terms[e]
        out = MPoly.__new__(MPoly)
        out._terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative exponent")
        result = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def lift_int(self, n: int) -> "MPoly":
        return MPoly.const(n)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"MPoly({self.render()})"

    # -- structure ----------------------------------------------------------

    def leading(self) -> tuple[tuple[int, ...], int]:
        """Leading (exponent, coefficient) in graded-lexicographic order."""
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        exp = max(self._terms, key=_grlex_key)
        return exp, self._terms[exp]

    def total_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no degree")
        return max(sum(e) for e in self._terms)

    def degree_in(self, var: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        idx = _VAR_INDEX[var]
        if not self._terms:
            return -1
        return max(e[idx] for e in self._terms)

    def coeff_of(self, var: str, k: int) -> "MPoly":
        """Coefficient of ``var**k``, with ``var`` removed from the result."""
        idx = _VAR_INDEX[var]
        terms = {}
        for e, c in self._terms.items():
            if e[idx] == k:
                reduced = tuple(0 if i == idx else x for i, x in enumerate(e))
                terms[reduced] = terms.get(reduced, 0) + c
        return MPoly(terms)

    def as_upoly(self, var: str) -> "UPoly":
        """View as a dense univariate polynomial in ``var``."""
        n = self.degree_in(var)
        coeffs: list[Scalar] = [self.coeff_of(var, k) for k in range(n + 1)]
        return UPoly(coeffs, var)

    def content(self) -> int:
        """Gcd of all coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self._terms.values():
            g = math.gcd(g, c)
        return g

    # -- substitution -------------------------------------------------------

    def subs(self, mapping: Mapping[str, Scalar]) -> "MPoly":
        """Substitute variables by integers or polynomials (partial is fine)."""
        idxmap = [(_VAR_INDEX[name], MPoly._coerce(val)) for name, val in mapping.items()]
        result = MPoly()
        cache: dict[tuple[int, int], MPoly] = {}
        for e, c in self._terms.items():
            term = MPoly.const(c)
            rest = list(e)
            for idx, val in idxmap:
                k = rest[idx]
                if k:
                    rest[idx] = 0
                    key = (idx, k)
                    if key not in cache:
                        cache[key] = val ** k
                    term = term * cache[key]
            term = term * MPoly({tuple(rest): 1})
            result = result + term
        return result

    def eval_int(self, mapping: Mapping[str, int]) -> int:
        """Fully evaluate to an integer; every present variable must be mapped."""
        total = 0
        for e, c in self._terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    v *= mapping[VARS[i]] ** k
            total += v
        return total

    # -- division, roots ----------------------------------------------------

    def exact_div(self, other: Scalar) -> "MPoly":
        """Exact polynomial quotient; raises NonDivisible if none exists."""
        other = MPoly._coerce(other)
        if other.is_zero():
            raise NonDivisible("division by zero polynomial")
        if self.is_zero():
            return MPoly()
        div_exp, div_c = other.leading()
        quo: dict[tuple[int, ...], int] = {}
        rem = dict(self._terms)
        while rem:
            r_exp = max(rem, key=_grlex_key)
            r_c = rem[r_exp]
            diff = tuple(x - y for x, y in zip(r_exp, div_exp))
            if any(x < 0 for x in diff):
                raise NonDivisible("leading monomial does not divide")
            q, r = divmod(r_c, div_c)
            if r:
                raise NonDivisible("leading coefficient does not divide")
            quo[diff] = quo.get(diff, 0) + q
            for e, c in other._terms.items():
                ne = tuple(x + y for x, y in zip(diff, e))
                v = rem.get(ne, 0) - q * c
                if v:
                    rem[ne] = v
                else:
                    rem.pop(ne, None)
        return MPoly(quo)

    def sqrt_exact(self) -> "MPoly":
        """Exact polynomial square root with positive leading coefficient.

        Raises NotPerfectSquare when no such polynomial exists.
        """
        if self.is_zero():
            return MPoly()
        lead_exp, lead_c = self.leading()
        if any(k % 2 for k in lead_exp) or lead_c < 0:
            raise NotPerfectSquare("leading term is not a square")
        half_exp = tuple(k // 2 for k in lead_exp)
        root_c = math.isqrt(lead_c)
        if root_c * root_c != lead_c:
            raise NotPerfectSquare("leading coefficient is not a square")
        s = MPoly({half_exp: root_c})
        rem = self - s * s
        prev_key = _grlex_key(lead_exp)
        while not rem.is_zero():
            r_exp, r_c = rem.leading()
            key = _grlex_key(r_exp)
            if key >= prev_key:
                raise NotPerfectSquare("remainder fails to shrink")
            prev_key = key
            diff = tuple(x - y for x, y in zip(r_exp, half_exp))
            if any(x < 0 for x in diff):
                raise NotPerfectSquare("term outside square support")
            q, r = divmod(r_c, 2 * root_c)
            if r:
                raise NotPerfectSquare("coefficient not divisible")
            t = MPoly({diff: q})
            s_new = s + t
            rem = rem - t * (s + s_new)
            s = s_new
        return s

    # -- rendering ----------------------------------------------------------

    def render(self) -> str:
        """Deterministic text form, graded-lex descending term order."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exp in sorted(self._terms, key=_grlex_key, reverse=True):
            c = self._terms[exp]
            mono = "*".join(
                f"{VARS[i]}^{k}" if k > 1 else VARS[i]
                for i, k in enumerate(exp)
                if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


ZERO = MPoly()
ONE = MPoly.const(1)


def exact_div(p, q):
    """Exact division dispatching on the operand's ring.

    Works for ints, MPoly, UPoly, and any object exposing ``exact_div``;
    integer operands are lifted into the other ring when mixed.
    """
    if isinstance(p, int) and isinstance(q, int):
        if q == 0:
            raise NonDivisible("division by zero")
        quo, rem = divmod(p, q)
        if rem:
            raise NonDivisible(f"{p} not divisible by {q}")
        return quo
    if isinstance(p, int):
        p = q.lift_int(p)
    return p.exact_div(q)


class UPoly:
    """Dense univariate polynomial over an exact coefficient ring.

    ``coeffs[k]`` is the coefficient of the distinguished variable to the
    k-th power.  Trailing zeros are stripped on construction.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Sequence, var: str):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = cs
        self.var = var

    # -- basics -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def lift_int(self, n: int):
        wit = self.coeffs[0] if self.coeffs else 0
        if isinstance(wit, int):
            return UPoly([n], self.var)
        return UPoly([wit.lift_int(n)], self.var)

    def _check_var(self, other: "UPoly") -> None:
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            if other == 0:
                return not self.coeffs
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.var == other.var and len(self.coeffs) == len(other.coeffs) and all(
            x == y for x, y in zip(self.coeffs, other.coeffs)
        )

    def __repr__(self) -> str:
        return f"UPoly({self.coeffs!r}, {self.var!r})"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "UPoly":
        if isinstance(other, int):
            other = self.lift_int(other)
        self._check_var(other)
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for k in range(n):
            x = self.coeffs[k] if k < len(self.coeffs) else 0
            y = other.coeffs[k] if k < len(other.coeffs) else 0
            out.append(x + y)
        return UPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self) -> "UPoly":
        return UPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other) -> "UPoly":
        return self + (-other)

    def __rsub__(self, other) -> "UPoly":
        return (-self) + other

    def __mul__(self, other) -> "UPoly":
        if isinstance(other, int):
            return self.scale(other)
        self._check_var(other)
        if not self.coeffs or not other.coeffs:
            return UPoly([], self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return UPoly(out, self.var)

    __rmul__ = __mul__

    def scale(self, k) -> "UPoly":
        return UPoly([c * k for c in self.coeffs], self.var)

    def derivative(self) -> "UPoly":
        return UPoly([c * k for k, c in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, point):
        """Evaluate by Horner's rule; the point may be any ring element."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * point + c
        return 0 if acc is None else acc

    def map_coeffs(self, fn) -> "UPoly":
        return UPoly([fn(c) for c in self.coeffs], self.var)

    def exact_div(self, other) -> "UPoly":
        """Exact quotient of dense polynomials; remainder must vanish."""
        if isinstance(other, int):
            other = self.lift_int(other)
        self._check_var(other)
        if other.is_zero():
            raise NonDivisible("division by zero polynomial")
        if self.is_zero():
            return UPoly([], self.var)
        if self.degree < other.degree:
            raise NonDivisible("degree too small")
        rem = list(self.coeffs)
        dlc = other.lc
        dd = other.degree
        quo = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = exact_div(c, dlc)
            quo[k - dd] = q
            for j, oc in enumerate(other.coeffs):
                rem[k - dd + j] = rem[k - dd + j] - q * oc
        if any(not (c == 0) for c in rem):
            raise NonDivisible("nonzero remainder")
        return UPoly(quo, self.var)

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            cs = c.render() if hasattr(c, "render") else str(c)
            if k == 0:
                parts.append(f"({cs})")
            elif k == 1:
                parts.append(f"({cs})*{self.var}")
            else:
                parts.append(f"({cs})*{self.var}^{k}")
        return " + ".join(parts)


def sylvester_matrix(p: UPoly, q: UPoly) -> list[list]:
    """Sylvester matrix of two polynomials in the same variable."""
    p._check_var(q)
    n, m = p.degree, q.degree
    if n < 0 or m < 0:
        raise ZeroPolynomial("resultant of a zero polynomial")
    size = n + m
    rows: list[list] = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(m):
        rows.append([0] * i + pc + [0] * (size - i - n - 1))
    for i in range(n):
        rows.append([0] * i + qc + [0] * (size - i - m - 1))
    return rows


def det_bareiss(matrix: Sequence[Sequence]):
    """Fraction-free determinant; divisions are exact in the entry ring."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if not (m[i][k] == 0):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = exact_div(num, prev)
            m[i][k] = 0
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def det_minors(matrix: Sequence[Sequence]):
    """Cofactor-expansion determinant, the independent slow route."""
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    total = None
    for j in range(n):
        entry = matrix[0][j]
        if entry == 0:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in matrix[1:]]
        term = entry * det_minors(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return 0 if total is None else total


def resultant(p: UPoly, q: UPoly):
    """Resultant with respect to the polynomials' shared variable."""
    p._check_var(q)
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomial("resultant of a zero polynomial")
    n, m = p.degree, q.degree
    if n == 0 and m == 0:
        return 1
    if n == 0:
        return p.coeffs[0] ** m
    if m == 0:
        return q.coeffs[0] ** n
    return det_bareiss(sylvester_matrix(p, q))


def discriminant(p: UPoly):
    """Discriminant of a monic polynomial via the derivative resultant."""
    if p.is_zero():
        raise ZeroPolynomial("discriminant of the zero polynomial")
    n = p.degree
    if n < 2:
        raise ValueError("degree must be at least 2")
    if not p.is_monic():
        raise NonMonic("discriminant requires a monic polynomial")
    r = resultant(p, p.derivative())
    if (n * (n - 1) // 2) % 2:
        return -r
    return r


def isqrt_exact(n: int) -> int:
    """Exact integer square root.

    >>> isqrt_exact(6561)
    81
    """
    if n < 0:
        raise NegativeInput(f"square root of negative integer {n}")
    r = math.isqrt(n)
    if r * r != n:
        raise NotPerfectSquare(f"{n} is not a perfect square")
    return r


def divisors(n: int) -> list[int]:
    """Positive divisors of ``abs(n)`` in increasing order; n must be nonzero."""
    n = abs(n)
    if n == 0:
        raise ValueError("zero has no finite divisor list")
    small: list[int] = []
    large: list[int] = []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def _int_coeffs(p: UPoly) -> list[int]:
    out = []
    for c in p.coeffs:
        if isinstance(c, int):
            out.append(c)
        elif isinstance(c, MPoly) and c.is_const():
            out.append(c.const_value())
        else:
            raise ValueError("integer coefficients required")
    return out


def integer_roots(p: UPoly) -> list[int]:
    """All integer roots of a nonzero integer polynomial, ascending.

    Candidates are divisors of the trailing coefficient of the primitive
    part; every candidate is confirmed by direct evaluation.

    >>> integer_roots(UPoly([6, -5, 1], "x"))
    [2, 3]
    """
    coeffs = _int_coeffs(p)
    if not coeffs:
        raise ZeroPolynomial("the zero polynomial has every integer as a root")
    roots: set[int] = set()
    low = 0
    while coeffs[low] == 0:
        low += 1
    if low:
        roots.add(0)
        coeffs = coeffs[low:]
    if len(coeffs) == 1:
        return sorted(roots)
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
    coeffs = [c // g for c in coeffs]
    stripped = UPoly(coeffs, p.var)
    for base in divisors(coeffs[0]):
        for cand in (base, -base):
            if stripped(cand) == 0:
                roots.add(cand)
    return sorted(roots)


def rewrite_in_K(p: MPoly) -> MPoly:
    """Eliminate ``a`` using the relation a^2 = K - 3*a - 9.

    Succeeds exactly when the reduced form has no leftover linear term in
    ``a``; otherwise NotExpressible is raised carrying the residual.

    >>> K2 = (MPoly.var("a") ** 2 + 3 * MPoly.var("a") + 9) ** 2
    >>> rewrite_in_K(K2 * MPoly.var("d")).render()
    'd*K^2'
    """
    replacement = MPoly.var("K") - 3 * MPoly.var("a") - 9
    a_idx = _VAR_INDEX["a"]
    while p.degree_in("a") >= 2:
        reduced = MPoly()
        for e, c in p._terms.items():
            k = e[a_idx]
            if k >= 2:
                lowered = tuple(x - 2 if i == a_idx else x for i, x in enumerate(e))
                reduced = reduced + MPoly({lowered: c}) * replacement
            else:
                reduced = reduced + MPoly({e: c})
        p = reduced
    residual = p.coeff_of("a", 1)
    if not residual.is_zero():
        raise NotExpressible("linear term in a survives reduction", residual)
    return p.coeff_of("a", 0)
