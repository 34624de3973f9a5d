"""Local surgery on sequences, the level-2 decision procedure, and realization.

Two families of rewrites act on sequences.  Over the integers:

  alpha: (c_1,...,c_i, c_{i+1},...,c_n) -> (c_1,...,c_i+1, 1, c_{i+1}+1,...,c_n)
  beta:  replaces c_i by (c', 1, 1, c'') where c' + c'' = c_i + 1

``alpha`` leaves the matrix product unchanged and ``beta`` flips its sign.
Over Z/2Z the analogues are ``op_a`` (insert a 1-bar, bumping both cyclic
neighbors) and ``op_b`` (insert a 0-bar, 0-bar pair); both preserve the
mod-2 product, hence solution status.  Combinatorially, ``op_a`` glues a
triangle onto a boundary edge and ``op_b`` glues a quadrilateral.

Running the inverses of ``op_a``/``op_b`` with a fixed pivot rule shrinks
any sequence to a short remainder; a sequence is a solution exactly when
the remainder is (0,0) or (1,1,1).  Replaying the recorded steps forward,
gluing a triangle per inverse-a step and a quadrilateral per inverse-b
step, rebuilds the sequence as the parity quiddity of an explicit
dissection into triangles and quadrilaterals.

Matrix invariance of ``alpha``/``op_a`` is a local two-factor identity, so
it holds for insertion positions 1 <= i <= n-1; at the wrap position i = n
only the (cyclically invariant) solution status survives.  The degenerate
n = 1 case materializes the single wrapped neighbor twice:
alpha((c,), 1) = (c+1, 1, c+1).
"""

from dataclasses import dataclass

from .algebra import (
    IntSeq,
    Mod2Seq,
    as_int_seq,
    as_mod2_seq,
    format_seq,
    is_gamma2_solution,
    parse_mod2_seq,
)
from .dissections import Dissection

__all__ = [
    "SurgeryError",
    "TooShort",
    "PivotNotOne",
    "PairNotZero",
    "NotASolution",
    "AllEven",
    "InvalidSplit",
    "SurgeryStep",
    "SurgeryTrace",
    "ReduceResult",
    "alpha",
    "beta",
    "op_a",
    "op_b",
    "inv_a",
    "inv_b",
    "apply_step",
    "reduce_to_base",
    "replay_trace",
    "realize_dissection",
    "realize_triangulation",
    "trace_to_json_dict",
    "trace_from_json_dict",
]


class SurgeryError(ValueError):
    """Invalid surgery operation."""


class TooShort(SurgeryError):
    pass


class PivotNotOne(SurgeryError):
    pass


class PairNotZero(SurgeryError):
    pass


class InvalidSplit(SurgeryError):
    pass


class NotASolution(SurgeryError):
    """The sequence is not a level-2 solution; carries the terminal remainder."""

    def __init__(self, remainder: Mod2Seq):
        self.remainder = tuple(remainder)
        super().__init__(
            f"not a solution: reduces to {format_seq(self.remainder)}, "
            f"expected 0,0 or 1,1,1"
        )


class AllEven(SurgeryError):
    pass


@dataclass(frozen=True, slots=True)
class SurgeryStep:
    """One rewrite: kind in {"A", "B", "InvA", "InvB"}, 1-based index.

    For an ``InvA`` step the index is the pivot position that was removed;
    for ``InvB`` the position of the first removed zero.  Integer B-splits
    carry the split pair.
    """

    kind: str
    index: int
    split: tuple[int, int] | None = None


@dataclass(frozen=True, slots=True)
class SurgeryTrace:
    """Reduction log: ``steps`` in the order applied, ending at ``base``.

    Replaying the steps from the base (inverting them last-to-first)
    reproduces the original sequence exactly; see ``replay_trace``.
    """

    base: Mod2Seq
    steps: tuple[SurgeryStep, ...]


@dataclass(frozen=True, slots=True)
class ReduceResult:
    is_solution: bool
    trace: SurgeryTrace | None
    remainder: Mod2Seq


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise IndexError(f"index {i} out of range 1..{n}")


def alpha(seq, i: int) -> IntSeq:
    """Insert a 1 after position i (cyclic), adding 1 to both neighbors.

    Leaves ``m_product`` unchanged for 1 <= i <= n-1; at i = n the result
    is the cyclic wrap insertion, which preserves solution status but not
    the matrix itself.
    """
    s = as_int_seq(seq)
    n = len(s)
    _check_index(i, n)
    if n == 1:
        return (s[0] + 1, 1, s[0] + 1)
    if i == n:
        return (s[0] + 1,) + s[1 : n - 1] + (s[n - 1] + 1, 1)
    return s[: i - 1] + (s[i - 1] + 1, 1, s[i] + 1) + s[i + 1 :]


def beta(seq, i: int, split: tuple[int, int] | None = None) -> IntSeq:
    """Replace c_i by (c', 1, 1, c'') with c' + c'' = c_i + 1; flips the sign.

    The default split is ``(c_i, 1)``.  The result has length n + 3 and
    ``m_product`` equal to minus that of the input.
    """
    s = as_int_seq(seq)
    n = len(s)
    _check_index(i, n)
    c = s[i - 1]
    if split is None:
        split = (c, 1)
    left, right = int(split[0]), int(split[1])
    if left < 1 or right < 1 or left + right != c + 1:
        raise InvalidSplit(
            f"split {split} invalid for entry {c}: parts must be positive "
            f"and sum to {c + 1}"
        )
    return s[: i - 1] + (left, 1, 1, right) + s[i:]


def _insert_one(s: Mod2Seq, pos: int) -> Mod2Seq:
    """Insert a 1 at 1-based position pos and flip both cyclic neighbors."""
    t = list(s[: pos - 1]) + [1] + list(s[pos - 1 :])
    m = len(t)
    t[(pos - 2) % m] ^= 1
    t[pos % m] ^= 1
    return tuple(t)


def _insert_zero_pair(s: Mod2Seq, pos: int) -> Mod2Seq:
    """Insert 0, 0 at 1-based positions pos, pos+1."""
    return s[: pos - 1] + (0, 0) + s[pos - 1 :]


def op_a(seq, i: int) -> Mod2Seq:
    """Mod-2 triangle gluing: insert a 1 after position i, flipping neighbors."""
    s = as_mod2_seq(seq)
    n = len(s)
    _check_index(i, n)
    if n == 1:
        return ((s[0] + 1) % 2, 1, (s[0] + 1) % 2)
    return _insert_one(s, i + 1)


def op_b(seq, i: int) -> Mod2Seq:
    """Mod-2 quadrilateral gluing: insert 0, 0 after position i."""
    s = as_mod2_seq(seq)
    _check_index(i, len(s))
    return _insert_zero_pair(s, i + 1)


def inv_a(seq, i: int) -> Mod2Seq:
    """Remove the 1 at position i and flip both cyclic neighbors."""
    s = as_mod2_seq(seq)
    n = len(s)
    if n < 3:
        raise TooShort(f"need length >= 3 to remove a pivot, got {n}")
    _check_index(i, n)
    if s[i - 1] != 1:
        raise PivotNotOne(f"entry {i} of {format_seq(s)} is not 1")
    t = list(s)
    t[(i - 2) % n] ^= 1
    t[i % n] ^= 1
    del t[i - 1]
    return tuple(t)


def inv_b(seq, i: int) -> Mod2Seq:
    """Remove the 0, 0 pair at cyclic positions i, i+1."""
    s = as_mod2_seq(seq)
    n = len(s)
    if n < 3:
        raise TooShort(f"need length >= 3 to remove a pair, got {n}")
    _check_index(i, n)
    j = i % n + 1
    if s[i - 1] != 0 or s[j - 1] != 0:
        raise PairNotZero(f"entries {i},{j} of {format_seq(s)} are not 0,0")
    if i == n:
        return s[1 : n - 1]
    return s[: i - 1] + s[i + 1 :]


def apply_step(seq, step: SurgeryStep):
    """Apply a single surgery step by kind at its index."""
    if step.kind == "A":
        return op_a(seq, step.index)
    if step.kind == "B":
        return op_b(seq, step.index)
    if step.kind == "InvA":
        return inv_a(seq, step.index)
    if step.kind == "InvB":
        return inv_b(seq, step.index)
    raise SurgeryError(f"unknown step kind {step.kind!r}")


def reduce_to_base(seq) -> ReduceResult:
    """Shrink a mod-2 sequence to a terminal remainder and decide solubility.

    While n > 3: remove the 1 at the smallest index if any, else remove the
    0, 0 pair at index 1.  The input is a solution exactly when the
    remainder is (0, 0) or (1, 1, 1); a length-1 remainder always rejects.
    Rejection is a result, not an error.
    """
    s = as_mod2_seq(seq)
    steps: list[SurgeryStep] = []
    while len(s) > 3:
        if 1 in s:
            pivot = s.index(1) + 1
            steps.append(SurgeryStep("InvA", pivot))
            s = inv_a(s, pivot)
        else:
            steps.append(SurgeryStep("InvB", 1))
            s = inv_b(s, 1)
    accepted = s == (0, 0) or s == (1, 1, 1)
    trace = SurgeryTrace(base=s, steps=tuple(steps)) if accepted else None
    return ReduceResult(accepted, trace, s)


def replay_trace(trace: SurgeryTrace) -> Mod2Seq:
    """Rebuild the reduced sequence from the base by inverting the log.

    Each ``InvA`` step is undone by re-inserting a 1 at its recorded
    position (neighbors flipped); each ``InvB`` step by re-inserting the
    0, 0 pair.  Steps are undone last-to-first.
    """
    s = tuple(trace.base)
    for step in reversed(trace.steps):
        if step.kind == "InvA":
            s = _insert_one(s, step.index)
        elif step.kind == "InvB":
            s = _insert_zero_pair(s, step.index)
        else:
            raise SurgeryError(f"cannot replay step kind {step.kind!r}")
    return s


def trace_to_json_dict(trace: SurgeryTrace) -> dict:
    steps = []
    for step in trace.steps:
        entry: dict = {"kind": step.kind, "index": step.index}
        if step.split is not None:
            entry["split"] = list(step.split)
        steps.append(entry)
    return {"schema": 1, "base": format_seq(trace.base), "steps": steps}


def trace_from_json_dict(data: dict) -> SurgeryTrace:
    if data.get("schema", 1) != 1:
        raise SurgeryError(f"unsupported schema {data.get('schema')!r}")
    base = parse_mod2_seq(data["base"])
    steps = tuple(
        SurgeryStep(
            entry["kind"],
            int(entry["index"]),
            tuple(entry["split"]) if "split" in entry else None,
        )
        for entry in data["steps"]
    )
    return SurgeryTrace(base=base, steps=steps)


def _glue_triangle(d: Dissection, pos: int) -> Dissection:
    """Glue a triangle so the new vertex gets label ``pos`` in 1..n+1.

    Old labels >= pos shift up by one; the old boundary edge between the
    new vertex's neighbors becomes a diagonal.
    """
    m = d.n
    diagonals = [
        (a + (a >= pos), b + (b >= pos)) for a, b in d.diagonals
    ]
    if pos == 1:
        diagonals.append((2, m + 1))
    elif pos == m + 1:
        diagonals.append((1, m))
    else:
        diagonals.append((pos - 1, pos + 1))
    return Dissection(m + 1, diagonals)


def _glue_quadrilateral(d: Dissection, pos: int) -> Dissection:
    """Glue a quadrilateral; the two new vertices get labels pos, pos+1."""
    m = d.n
    diagonals = [
        (a + 2 * (a >= pos), b + 2 * (b >= pos)) for a, b in d.diagonals
    ]
    if pos == 1:
        diagonals.append((3, m + 2))
    elif pos == m + 1:
        diagonals.append((1, m))
    else:
        diagonals.append((pos - 1, pos + 2))
    return Dissection(m + 2, diagonals)


def realize_dissection(seq) -> Dissection:
    """Build a triangle/quadrilateral dissection whose parity quiddity is ``seq``.

    Replays the reduction log forward from a base dissection: triangle for
    the (1,1,1) base; for the (0,0) base the first replayed pair insertion
    materializes a plain quadrilateral (no 2-gon is ever built), and every
    later step glues a triangle or a quadrilateral.  The quiddity equality
    is exact on labels, not just up to rotation.
    """
    s = as_mod2_seq(seq)
    if len(s) < 3:
        raise TooShort(f"need length >= 3 to realize a polygon, got {len(s)}")
    result = reduce_to_base(s)
    if not result.is_solution:
        raise NotASolution(result.remainder)
    steps = list(result.trace.steps)
    if result.trace.base == (1, 1, 1):
        d = Dissection(3)
    else:
        # base (0, 0): the last reduction step removed the final 0,0 pair of
        # an all-zero quadruple, so its replay is the quadrilateral itself
        d = Dissection(4)
        steps = steps[:-1]
    for step in reversed(steps):
        if step.kind == "InvA":
            d = _glue_triangle(d, step.index)
        else:
            d = _glue_quadrilateral(d, step.index)
    return d


def realize_triangulation(seq) -> Dissection:
    """Build a triangulation whose parity quiddity is ``seq``.

    Requires a solution with at least one odd entry.  Pivots are chosen as
    the smallest index holding a 1 whose removal does not leave an all-zero
    sequence; when the first candidate fails, the entry right after it is
    also a 1 and succeeds, so the descent always reaches (1, 1, 1).
    """
    s = as_mod2_seq(seq)
    if len(s) < 3:
        raise TooShort(f"need length >= 3 to realize a polygon, got {len(s)}")
    result = reduce_to_base(s)
    if not result.is_solution:
        raise NotASolution(result.remainder)
    if 1 not in s:
        raise AllEven(f"{format_seq(s)} has no odd entry; no triangulation exists")

    pivots: list[int] = []
    t = s
    while len(t) > 3:
        pivot = None
        for i in range(1, len(t) + 1):
            if t[i - 1] != 1:
                continue
            candidate = inv_a(t, i)
            if any(candidate):
                pivot = i
                t = candidate
                break
        if pivot is None:
            raise SurgeryError(f"no usable pivot in {format_seq(t)}")
        pivots.append(pivot)
    if t != (1, 1, 1):
        raise SurgeryError(f"descent ended at {format_seq(t)} instead of 1,1,1")

    d = Dissection(3)
    for pivot in reversed(pivots):
        d = _glue_triangle(d, pivot)
    return d
