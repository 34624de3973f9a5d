"""Exhaustive solution enumeration, counting, and verification sweeps.

Mod-2 solutions of a given length are enumerated by a depth-first walk over
{0, 1}^n carrying the running product, emitting tuples in lexicographic
order; results agree with the naive filter over all 2^n tuples.  Labeled
tuple counts follow the Jacobsthal numbers, rotation classes are a separate
view.  Bounded integer searches enumerate sequences with entries in
[1, cap] whose product is plus or minus the identity.

``theorem_sweep`` cross-checks the combinatorial characterizations at desk
scale (dissections -> quiddities -> membership, and solutions ->
realization -> round trip) and reports counterexamples, which are expected
to be absent.
"""

from dataclasses import dataclass, field

from .algebra import (
    IntSeq,
    MatClass,
    Mod2Seq,
    classify_pm_identity,
    format_seq,
    is_gamma2_solution,
    m_product,
    min_rotation,
)
from .dissections import (
    CapExceeded,
    DEFAULT_POLYGON_CAP,
    enumerate_dissections,
)
from .surgery import realize_dissection, realize_triangulation

__all__ = [
    "DEFAULT_MOD2_CAP",
    "DEFAULT_INT_CAP",
    "SWEEP_NAMES",
    "SolutionReport",
    "SweepReport",
    "solutions_gamma2",
    "jacobsthal_count",
    "cyclic_classes",
    "solutions_pm_identity",
    "entries_one_check",
    "solution_report",
    "theorem_sweep",
]

DEFAULT_MOD2_CAP = 20
DEFAULT_INT_CAP = 8

SWEEP_NAMES = ("thm1i", "thm1ii", "thm2", "thm3", "remark")


def solutions_gamma2(n: int, cap: int = DEFAULT_MOD2_CAP) -> list[Mod2Seq]:
    """All tuples in {0,1}^n whose mod-2 product is the identity, in lex order."""
    if n < 1:
        raise ValueError(f"length must be at least 1, got {n}")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the mod-2 cap {cap}")

    out: list[Mod2Seq] = []
    prefix: list[int] = []

    # Right-multiplication by the two mod-2 factors: [[0,1],[1,0]] swaps the
    # columns, [[1,1],[1,0]] maps (a,b,c,d) to (a+b, a, c+d, c).
    def rec(i: int, a: int, b: int, c: int, d: int) -> None:
        if i == n:
            if (a, b, c, d) == (1, 0, 0, 1):
                out.append(tuple(prefix))
            return
        prefix.append(0)
        rec(i + 1, b, a, d, c)
        prefix.pop()
        prefix.append(1)
        rec(i + 1, (a + b) & 1, a, (c + d) & 1, c)
        prefix.pop()

    rec(0, 1, 0, 0, 1)
    return out


def jacobsthal_count(n: int) -> int:
    """Closed-form count of length-n mod-2 solutions: (2^(n-1) - (-1)^(n-1)) / 3."""
    if n < 1:
        raise ValueError(f"length must be at least 1, got {n}")
    return (2 ** (n - 1) - (-1) ** (n - 1)) // 3


def cyclic_classes(tuples) -> list[tuple]:
    """Sorted lex-minimal rotation representatives of the given tuples."""
    return sorted({min_rotation(t) for t in tuples})


def solutions_pm_identity(
    n: int, entry_cap: int | None = None, cap: int = DEFAULT_INT_CAP
) -> list[tuple[IntSeq, int]]:
    """All sequences with entries in [1, entry_cap] multiplying to +Id or -Id.

    The default entry cap is n - 2: a quiddity entry counts cells at a
    vertex, and a dissection of an n-gon has at most n - 2 cells.  Returns
    ``(sequence, sign)`` pairs in lexicographic order.
    """
    if n < 1:
        raise ValueError(f"length must be at least 1, got {n}")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the integer-search cap {cap}")
    if entry_cap is None:
        entry_cap = max(1, n - 2)
    if entry_cap < 1:
        raise ValueError(f"entry cap must be at least 1, got {entry_cap}")

    out: list[tuple[IntSeq, int]] = []
    prefix: list[int] = []

    def rec(i: int, a: int, b: int, c: int, d: int) -> None:
        if i == n:
            if (a, b, c, d) == (1, 0, 0, 1):
                out.append((tuple(prefix), 1))
            elif (a, b, c, d) == (-1, 0, 0, -1):
                out.append((tuple(prefix), -1))
            return
        for e in range(1, entry_cap + 1):
            prefix.append(e)
            rec(i + 1, a * e + b, -a, c * e + d, -c)
            prefix.pop()

    rec(0, 1, 0, 0, 1)
    return out


def entries_one_check(solutions) -> bool:
    """True iff every given sequence contains an entry equal to 1."""
    return all(1 in tuple(s) for s in solutions)


@dataclass(frozen=True, slots=True)
class SolutionReport:
    n: int
    tuple_count: int
    class_count: int
    expected_count: int
    match: bool
    tuples: tuple[Mod2Seq, ...]
    class_reps: tuple[Mod2Seq, ...]


def solution_report(n: int, cap: int = DEFAULT_MOD2_CAP) -> SolutionReport:
    tuples = solutions_gamma2(n, cap=cap)
    reps = cyclic_classes(tuples)
    expected = jacobsthal_count(n)
    return SolutionReport(
        n=n,
        tuple_count=len(tuples),
        class_count=len(reps),
        expected_count=expected,
        match=len(tuples) == expected,
        tuples=tuple(tuples),
        class_reps=tuple(reps),
    )


@dataclass(frozen=True, slots=True)
class SweepReport:
    which: str
    n_lo: int
    n_hi: int
    checked: int
    counterexamples: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def theorem_sweep(
    which: str,
    n_lo: int = 3,
    n_hi: int = 8,
    *,
    polygon_cap: int = DEFAULT_POLYGON_CAP,
    mod2_cap: int = DEFAULT_MOD2_CAP,
    int_cap: int = DEFAULT_INT_CAP,
    converse_hi: int = 7,
) -> SweepReport:
    """Run one named verification sweep over n in [n_lo, n_hi].

    thm1i   every triangle/quadrilateral dissection's parity quiddity is a
            mod-2 solution.
    thm1ii  every mod-2 solution is realized by a valid triangle/quadrilateral
            dissection with the exact quiddity.
    thm2    triangulation quiddities multiply to -Id and sum to 3n - 6;
            conversely (for n <= converse_hi) every -Id solution with entries
            <= n - 2 and that sum is a triangulation quiddity.
    thm3    the quiddities of dissections with all cell sizes divisible by 3
            coincide with the +/-Id solutions with entries <= n - 2.
    remark  every solution with an odd entry is realized by a triangulation
            with the exact quiddity.
    """
    if which not in SWEEP_NAMES:
        raise ValueError(f"unknown sweep {which!r}; expected one of {SWEEP_NAMES}")
    checked = 0
    bad: list[str] = []

    for n in range(n_lo, n_hi + 1):
        if which == "thm1i":
            for d in enumerate_dissections(n, kind="34", cap=polygon_cap):
                checked += 1
                q = d.quiddity_mod2()
                if not is_gamma2_solution(q):
                    bad.append(f"n={n}: quiddity {format_seq(q)} of {d!r} is not a solution")
        elif which == "thm1ii":
            if n < 3:
                continue
            for s in solutions_gamma2(n, cap=mod2_cap):
                checked += 1
                d = realize_dissection(s)
                if not d.classify().is_34 or d.quiddity_mod2() != s:
                    bad.append(f"n={n}: realization of {format_seq(s)} gave {d!r}")
        elif which == "thm2":
            tri_quiddities = set()
            for d in enumerate_dissections(n, kind="triangulation", cap=polygon_cap):
                checked += 1
                q = d.quiddity_cc()
                tri_quiddities.add(q)
                if classify_pm_identity(m_product(q)) is not MatClass.MINUS_ID:
                    bad.append(f"n={n}: triangulation quiddity {format_seq(q)} is not -Id")
                if sum(q) != 3 * n - 6:
                    bad.append(f"n={n}: triangulation quiddity {format_seq(q)} sums to {sum(q)}")
            if n <= converse_hi:
                for s, sign in solutions_pm_identity(n, cap=int_cap):
                    checked += 1
                    if sign == -1 and sum(s) == 3 * n - 6 and s not in tri_quiddities:
                        bad.append(
                            f"n={n}: -Id solution {format_seq(s)} with quiddity sum "
                            f"is not a triangulation quiddity"
                        )
        elif which == "thm3":
            quiddities = set()
            for d in enumerate_dissections(n, kind="3d", cap=polygon_cap):
                checked += 1
                quiddities.add(d.quiddity_cc())
            solutions = {s for s, _ in solutions_pm_identity(n, cap=int_cap)}
            checked += len(solutions)
            for q in sorted(quiddities - solutions):
                bad.append(f"n={n}: quiddity {format_seq(q)} is not a +/-Id solution")
            for s in sorted(solutions - quiddities):
                bad.append(f"n={n}: solution {format_seq(s)} is not a 3d quiddity")
        elif which == "remark":
            if n < 3:
                continue
            for s in solutions_gamma2(n, cap=mod2_cap):
                if 1 not in s:
                    continue
                checked += 1
                t = realize_triangulation(s)
                if not t.classify().is_triangulation or t.quiddity_mod2() != s:
                    bad.append(f"n={n}: triangulation of {format_seq(s)} gave {t!r}")

    return SweepReport(which, n_lo, n_hi, checked, tuple(bad))
