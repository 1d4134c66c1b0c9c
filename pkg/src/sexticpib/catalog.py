"""Literal solution and generator tables, with audit and verification ops.

The tables are transcribed as data, deliberately separated from all
computation, so that any misprint in the source lists surfaces as an audit
FLAG instead of being silently corrected.  The audit evaluates the cubic
norm form under a family of normalization hypotheses (parameter shifts,
coordinate swap, sign flips) and classifies; it asserts nothing by itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bigpoly import MPoly
from .quadring import QuadInt, make_ring
from .sextic_core import ThetaCoords, abs_index, family, thue_form

RATIONAL = "rational"
GAUSSIAN = "gaussian"
EISENSTEIN = "eisenstein"

_APPLICABILITY_RING = {GAUSSIAN: 1, EISENSTEIN: 3}


@dataclass(frozen=True)
class Lemma1Entry:
    """One catalogued solution pair; components are (u, v) in the ring basis."""

    comps1: tuple[int, int]
    comps2: tuple[int, int]
    applicability: str
    a_constraint: int | None
    printed: str

    @property
    def dependent(self) -> bool:
        return self.a_constraint is not None


@dataclass(frozen=True)
class Theorem2Entry:
    """One generator row (a, y, X1, X2) over d = 1, components in (1, w)."""

    a: int
    y: int
    x1: tuple[int, int]
    x2: tuple[int, int]
    printed: str


_INDEPENDENT = [
    ((1, 0), (0, 0), RATIONAL, "(1,0)"),
    ((0, 0), (1, 0), RATIONAL, "(0,1)"),
    ((1, 0), (-1, 0), RATIONAL, "(1,-1)"),
    ((0, 1), (0, -1), GAUSSIAN, "(i,-i)"),
    ((0, 1), (0, 0), GAUSSIAN, "(i,0)"),
    ((0, 0), (0, 1), GAUSSIAN, "(0,i)"),
    ((0, 1), (0, -1), EISENSTEIN, "(w3,-w3)"),
    ((0, 0), (0, 1), EISENSTEIN, "(0,w3)"),
    ((0, 1), (0, 0), EISENSTEIN, "(w3,0)"),
    ((1, -1), (0, 0), EISENSTEIN, "(1-w3,0)"),
    ((0, 0), (1, -1), EISENSTEIN, "(0,1-w3)"),
    ((1, -1), (-1, 1), EISENSTEIN, "(1-w3,-1+w3)"),
]

_DEPENDENT = [
    (-3, 9, -2), (-3, 7, -9), (-3, 2, 7),
    (-1, 3, -1), (-1, 2, -3), (-1, 1, 2),
    (0, 9, -4), (0, 5, -9), (0, 4, 5), (0, 2, -1), (0, 1, 1), (0, 1, -2),
    (1, 9, -5), (1, 5, 4), (1, 4, -9), (1, 2, -1), (1, 1, 1), (1, 1, -2),
    (2, 3, -2), (2, 2, 1), (2, 1, -3),
    (4, 9, -7), (4, 7, 2), (4, 2, -9),
]

_THEOREM2 = [
    (-3, 1, (0, -2), (0, -1), "(-3,1,i+ai,-i)"),
    (-2, 1, (0, -1), (0, -1), "(-2,1,i+ai,-i)"),
    (-1, 1, (0, 0), (0, -1), "(-1,1,i+ai,-i)"),
    (0, 1, (0, 1), (0, -1), "(0,1,i+ai,-i)"),
    (-3, 2, (0, -2), (0, -1), "(-3,2,i+ai,-i)"),
    (-2, 2, (0, -1), (0, -1), "(-2,2,i+ai,-i)"),
    (-1, 2, (0, 0), (0, -1), "(-1,2,i+ai,-i)"),
    (0, 2, (0, 1), (0, -1), "(0,2,i+ai,-i)"),
    (-3, 1, (0, 1), (0, 0), "(-3,1,i,0)"),
    (-2, 1, (0, 1), (0, 0), "(-2,1,i,0)"),
    (-1, 1, (0, 1), (0, 0), "(-1,1,i,0)"),
    (0, 1, (0, 1), (0, 0), "(0,1,i,0)"),
    (-3, 0, (0, 1), (0, 0), "(-3,0,i,0)"),
    (-2, 0, (0, 1), (0, 0), "(-2,0,i,0)"),
    (-1, 0, (0, 1), (0, 0), "(-1,0,i,0)"),
    (0, 0, (0, 1), (0, 0), "(0,0,i,0)"),
    (-2, 0, (0, 2), (0, 1), "(-2,0,-ia,i)"),
    (-1, -1, (0, 1), (0, 1), "(-1,-1,-ia,i)"),
    (0, -2, (0, 0), (0, 1), "(0,-2,-ia,i)"),
    (-3, 1, (0, 3), (0, 1), "(-3,1,-ia,i)"),
    (0, -3, (0, 0), (0, 1), "(0,-3,-ia,i)"),
    (-3, 0, (0, 3), (0, 1), "(-3,0,-ia,i)"),
    (-1, -2, (0, 1), (0, 1), "(-1,-2,-ia,i)"),
    (-2, -1, (0, 2), (0, 1), "(-2,-1,-ia,i)"),
]


def lemma1_entries() -> list[Lemma1Entry]:
    """All 12 parameter-independent pairs and 24 parameter-dependent triples."""
    out = [
        Lemma1Entry(c1, c2, app, None, printed)
        for c1, c2, app, printed in _INDEPENDENT
    ]
    out.extend(
        Lemma1Entry((p1, 0), (p2, 0), RATIONAL, a, f"({a},{p1},{p2})")
        for a, p1, p2 in _DEPENDENT
    )
    return out


def theorem2_entries() -> list[Theorem2Entry]:
    return [Theorem2Entry(a, y, x1, x2, printed) for a, y, x1, x2, printed in _THEOREM2]


@dataclass(frozen=True)
class Hypothesis:
    """One normalization reading: a shift of the parameter, an optional
    coordinate swap, and independent sign flips on the two coordinates."""

    shift: int = 0
    swap: bool = False
    s1: int = 1
    s2: int = 1

    def name(self) -> str:
        if self == Hypothesis():
            return "identity"
        parts = []
        if self.shift:
            parts.append(f"shift{self.shift:+d}")
        if self.swap:
            parts.append("swap")
        if self.s1 < 0:
            parts.append("neg1")
        if self.s2 < 0:
            parts.append("neg2")
        return ",".join(parts)


def standard_hypotheses() -> list[Hypothesis]:
    return [
        Hypothesis(),
        Hypothesis(shift=1),
        Hypothesis(shift=-1),
        Hypothesis(swap=True),
        Hypothesis(s1=-1),
        Hypothesis(s2=-1),
        Hypothesis(s1=-1, s2=-1),
    ]


def all_hypotheses() -> list[Hypothesis]:
    """Full product space; shifts widened to +-2 so the audit can actually
    discover the normalization the dependent triples live in."""
    out = []
    for shift in (-2, -1, 0, 1, 2):
        for swap in (False, True):
            for s1 in (1, -1):
                for s2 in (1, -1):
                    out.append(Hypothesis(shift, swap, s1, s2))
    return out


def _apply_coords(entry: Lemma1Entry, hyp: Hypothesis):
    c1 = (hyp.s1 * entry.comps1[0], hyp.s1 * entry.comps1[1])
    c2 = (hyp.s2 * entry.comps2[0], hyp.s2 * entry.comps2[1])
    if hyp.swap:
        c1, c2 = c2, c1
    return c1, c2


def _audit_one(entry: Lemma1Entry, hyp: Hypothesis) -> dict:
    """Evaluate the form under one hypothesis; symbolic in a when possible."""
    c1, c2 = _apply_coords(entry, hyp)
    if entry.dependent:
        a_eff = entry.a_constraint + hyp.shift
        value = thue_form(a_eff, c1[0], c2[0])
        unit = value in (1, -1)
        shown = str(value)
    else:
        a_sym = MPoly.var("a") + hyp.shift
        if entry.applicability == RATIONAL:
            value = thue_form(a_sym, c1[0], c2[0])
            unit = (value * value) == 1
            shown = value.render()
        else:
            ring = make_ring(_APPLICABILITY_RING[entry.applicability])
            value = thue_form(
                a_sym, QuadInt(c1[0], c1[1], ring), QuadInt(c2[0], c2[1], ring)
            )
            unit = value.norm() == 1
            shown = value.render()
    return {
        "hypothesis": hyp.name(),
        "value": shown,
        "unit": unit,
        "verdict": "PASS" if unit else "FLAGGED",
    }


def audit_lemma1(modes: str = "standard") -> dict:
    """Classify every catalogued pair under every requested hypothesis.

    The report carries per-entry verdict tables, the validating hypothesis
    set of each dependent triple, and the hypotheses that validate all of
    them at once.  Overall status is FLAGGED when any identity-hypothesis
    row fails, which is exactly how table misprints surface.
    """
    if modes == "standard":
        hyps = standard_hypotheses()
    elif modes == "all":
        hyps = all_hypotheses()
    else:
        raise ValueError(f"unknown audit mode {modes!r}")

    independent_rows = []
    dependent_rows = []
    validating_sets: list[set[str]] = []
    flagged = 0
    for entry in lemma1_entries():
        results = [_audit_one(entry, hyp) for hyp in hyps]
        validating = [r["hypothesis"] for r in results if r["unit"]]
        row = {
            "printed": entry.printed,
            "applicability": entry.applicability,
            "results": results,
            "validating": validating,
        }
        identity = next(r for r in results if r["hypothesis"] == "identity")
        if not identity["unit"]:
            flagged += 1
        if entry.dependent:
            row["a"] = entry.a_constraint
            dependent_rows.append(row)
            validating_sets.append(set(validating))
        else:
            independent_rows.append(row)

    uniform = sorted(set.intersection(*validating_sets)) if validating_sets else []
    return {
        "mode": modes,
        "hypothesis_count": len(hyps),
        "independent": independent_rows,
        "dependent": dependent_rows,
        "uniform_validating": uniform,
        "identity_flagged_count": flagged,
        "status": "FLAGGED" if flagged else "PASS",
    }


def verify_theorem2() -> dict:
    """Recompute the absolute index of every listed generator; PASS iff all 1."""
    rows = []
    ok = True
    for entry in theorem2_entries():
        params = family(entry.a, 1)
        coords = ThetaCoords(
            0, entry.x1[0], entry.x2[0], entry.y, entry.x1[1], entry.x2[1]
        )
        idx = abs_index(params, coords)
        good = idx == 1
        ok = ok and good
        rows.append(
            {
                "printed": entry.printed,
                "a": entry.a,
                "y": entry.y,
                "index": idx,
                "verdict": "PASS" if good else "FAILED",
            }
        )
    return {"rows": rows, "all_pass": ok, "status": "PASS" if ok else "FAILED"}


def catalog_csv_rows() -> tuple[list[str], list[list]]:
    """Flat view of both tables for the CSV export."""
    header = ["table", "printed", "applicability", "a", "y", "u1", "v1", "u2", "v2"]
    rows: list[list] = []
    for e in lemma1_entries():
        rows.append(
            [
                "lemma1",
                e.printed,
                e.applicability,
                "" if e.a_constraint is None else e.a_constraint,
                "",
                e.comps1[0],
                e.comps1[1],
                e.comps2[0],
                e.comps2[1],
            ]
        )
    for t in theorem2_entries():
        rows.append(
            ["theorem2", t.printed, GAUSSIAN, t.a, t.y, t.x1[0], t.x1[1], t.x2[0], t.x2[1]]
        )
    return header, rows
