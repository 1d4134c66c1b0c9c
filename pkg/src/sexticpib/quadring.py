"""Arithmetic in imaginary quadratic integer rings.

Elements are written ``u + v*w`` where ``w`` is the standard generator of
the maximal order of Q(sqrt(-d)) for square-free d >= 1.  Two reduction
branches cover the two shapes of that order:

* branch A  (-d = 2 or 3 mod 4):  w*w = -d,     field discriminant -4d
* branch B  (-d = 1 mod 4):       w*w = w - e,  field discriminant -d,
  with e = (1 + d) / 4

Components are plain ints in numeric rings; symbolic rings carry ``MPoly``
components with ``d`` (branch A) or ``e`` (branch B) left as a free
variable, so the same arithmetic serves both concrete computation and
polynomial identity derivations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .bigpoly import MPoly, NonDivisible, exact_div

Component = Union[int, MPoly]


class NotSquareFree(ValueError):
    """The ring parameter d must be square-free and positive."""


class RingMismatch(TypeError):
    """Operands belong to different quadratic rings."""


def is_square_free(n: int) -> bool:
    if n < 1:
        return False
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        while n % k == 0:
            n //= k
        k += 1
    return True


@dataclass(frozen=True)
class RingDesc:
    """Description of one imaginary quadratic integer ring.

    ``d`` is the (possibly symbolic) square-free radicand, ``branch`` selects
    the reduction rule for w*w, ``e`` is the branch-B constant, and
    ``field_disc`` is the field discriminant.
    """

    d: Component
    branch: str
    e: Component | None
    field_disc: Component
    symbolic: bool = False

    @property
    def abs_disc(self) -> Component:
        return -self.field_disc

    def omega_square(self) -> tuple[Component, Component]:
        """Components (u, v) of w*w in the basis (1, w)."""
        if self.branch == "A":
            return (-self.d, 0)
        return (-self.e, 1)


def make_ring(d: int) -> RingDesc:
    """Ring of integers of Q(sqrt(-d)) for a square-free positive d."""
    if not isinstance(d, int) or not is_square_free(d):
        raise NotSquareFree(f"d must be a square-free positive integer, got {d!r}")
    if (-d) % 4 == 1:
        return RingDesc(d=d, branch="B", e=(1 + d) // 4, field_disc=-d)
    return RingDesc(d=d, branch="A", e=None, field_disc=-4 * d)


def symbolic_ring(branch: str) -> RingDesc:
    """Symbolic ring: branch A keeps d free, branch B keeps e free (d = 4e-1)."""
    if branch == "A":
        dv = MPoly.var("d")
        return RingDesc(d=dv, branch="A", e=None, field_disc=-4 * dv, symbolic=True)
    if branch == "B":
        ev = MPoly.var("e")
        dv = 4 * ev - 1
        return RingDesc(d=dv, branch="B", e=ev, field_disc=-1 * dv, symbolic=True)
    raise ValueError(f"unknown branch {branch!r}")


class QuadInt:
    """One element u + v*w of a quadratic ring.

    Immutable; arithmetic never mixes rings (RingMismatch otherwise) and
    never leaves exact integer or polynomial components.
    """

    __slots__ = ("u", "v", "ring")

    def __init__(self, u: Component, v: Component, ring: RingDesc):
        self.u = u
        self.v = v
        self.ring = ring

    def _join(self, other: "QuadInt") -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "QuadInt":
        if isinstance(other, (int, MPoly)):
            return QuadInt(self.u + other, self.v, self.ring)
        if not isinstance(other, QuadInt):
            return NotImplemented
        self._join(other)
        return QuadInt(self.u + other.u, self.v + other.v, self.ring)

    __radd__ = __add__

    def __neg__(self) -> "QuadInt":
        return QuadInt(-self.u, -self.v, self.ring)

    def __sub__(self, other) -> "QuadInt":
        return self + (-other)

    def __rsub__(self, other) -> "QuadInt":
        return (-self) + other

    def __mul__(self, other) -> "QuadInt":
        if isinstance(other, (int, MPoly)):
            return QuadInt(self.u * other, self.v * other, self.ring)
        if not isinstance(other, QuadInt):
            return NotImplemented
        self._join(other)
        u1, v1, u2, v2 = self.u, self.v, other.u, other.v
        cross = u1 * v2 + u2 * v1
        vv = v1 * v2
        if self.ring.branch == "A":
            return QuadInt(u1 * u2 - self.ring.d * vv, cross, self.ring)
        return QuadInt(u1 * u2 - self.ring.e * vv, cross + vv, self.ring)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QuadInt":
        if n < 0:
            raise ValueError("negative exponent")
        result = QuadInt(1, 0, self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, MPoly)):
            return self.u == other and self.v == 0
        if not isinstance(other, QuadInt):
            return NotImplemented
        return self.ring == other.ring and self.u == other.u and self.v == other.v

    def __hash__(self) -> int:
        return hash((self.u, self.v, self.ring))

    def __repr__(self) -> str:
        return f"QuadInt({self.render()}, d={self.ring.d!r}, branch={self.ring.branch})"

    # -- ring maps ----------------------------------------------------------

    def conj(self) -> "QuadInt":
        """The nontrivial ring automorphism (complex conjugation)."""
        if self.ring.branch == "A":
            return QuadInt(self.u, -self.v, self.ring)
        return QuadInt(self.u + self.v, -self.v, self.ring)

    def norm(self) -> Component:
        """Norm to the rationals; non-negative for every numeric element."""
        u, v = self.u, self.v
        if self.ring.branch == "A":
            return u * u + self.ring.d * (v * v)
        return u * u + u * v + self.ring.e * (v * v)

    def trace(self) -> Component:
        if self.ring.branch == "A":
            return 2 * self.u
        return 2 * self.u + self.v

    def is_unit(self) -> bool:
        return self.norm() == 1

    def is_rational(self) -> bool:
        return self.v == 0

    def lift_int(self, n: int) -> "QuadInt":
        return QuadInt(n, 0, self.ring)

    def exact_div(self, other) -> "QuadInt":
        """Exact quotient in the ring; raises NonDivisible otherwise."""
        if isinstance(other, (int, MPoly)):
            return QuadInt(exact_div(self.u, other), exact_div(self.v, other), self.ring)
        if not isinstance(other, QuadInt):
            raise TypeError(f"cannot divide QuadInt by {type(other).__name__}")
        self._join(other)
        num = self * other.conj()
        return num.exact_div(other.norm())

    # -- conversion ---------------------------------------------------------

    def evaluate(self, mapping: dict[str, int], target: RingDesc) -> "QuadInt":
        """Evaluate symbolic components into a concrete ring."""
        def ev(c: Component) -> int:
            return c.eval_int(mapping) if isinstance(c, MPoly) else c
        return QuadInt(ev(self.u), ev(self.v), target)

    def render(self) -> str:
        def s(c: Component) -> str:
            return f"({c.render()})" if isinstance(c, MPoly) else str(c)
        vs = s(self.v)
        joined = f"+{vs}" if not vs.startswith("-") else vs
        return f"{s(self.u)}{joined}*w"


def units(ring: RingDesc) -> list[QuadInt]:
    """All roots of unity in the ring, in a fixed deterministic order."""
    if not ring.symbolic and ring.d == 1:
        comps = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    elif not ring.symbolic and ring.d == 3:
        comps = [(1, 0), (-1, 0), (0, 1), (0, -1), (-1, 1), (1, -1)]
    else:
        comps = [(1, 0), (-1, 0)]
    return [QuadInt(u, v, ring) for u, v in comps]


_QUAD_RE = re.compile(
    r"""^\s*
    (?:(?P<u>[+-]?\d+))?
    (?:\s*(?P<sign>[+-])?\s*(?:(?P<v>\d+)\s*\*\s*)?w)?
    \s*$""",
    re.VERBOSE,
)


def parse_quadint(text: str, ring: RingDesc) -> QuadInt:
    """Parse the ``u+v*w`` text form produced by ``QuadInt.render``.

    >>> parse_quadint("3-2*w", make_ring(1)).norm()
    13
    """
    m = _QUAD_RE.match(text)
    if not m or (m.group("u") is None and "w" not in text):
        raise ValueError(f"cannot parse quadratic integer: {text!r}")
    u = int(m.group("u")) if m.group("u") is not None else 0
    if "w" in text:
        v = int(m.group("v")) if m.group("v") is not None else 1
        if m.group("sign") == "-":
            v = -v
    else:
        v = 0
    return QuadInt(u, v, ring)
