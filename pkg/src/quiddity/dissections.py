"""Convex polygon dissections by pairwise non-crossing diagonals.

Vertices are labeled 1..n counterclockwise in convex position.  A diagonal
is an unordered pair {i, j} with j - i >= 2 and (i, j) != (1, n); two
diagonals (a, b) and (c, d) written with a < b, c < d cross exactly when
a < c < b < d or c < a < d < b.  Because the vertices are convex, the cells
cut out by the diagonals can be recovered by splitting vertex intervals,
with no planar embedding machinery.

Quiddities read the dissection back off as a sequence: ``quiddity_cc``
counts the cells meeting each vertex, ``quiddity_mod2`` the parity of the
number of triangle cells meeting each vertex.
"""

import json
import math
from bisect import bisect_right
from typing import Iterator, NamedTuple

from .algebra import Mod2Seq, IntSeq

__all__ = [
    "DEFAULT_POLYGON_CAP",
    "DissectionError",
    "DiagonalOutOfRange",
    "SideAsDiagonal",
    "CrossingDiagonals",
    "CapExceeded",
    "DissectionFlags",
    "Dissection",
    "dissection_from_json",
    "enumerate_dissections",
]

DEFAULT_POLYGON_CAP = 12


class DissectionError(ValueError):
    """Invalid dissection data."""


class DiagonalOutOfRange(DissectionError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"diagonal {pair} is not a pair of distinct vertices in range")


class SideAsDiagonal(DissectionError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"{pair} is a side of the polygon, not a diagonal")


class CrossingDiagonals(DissectionError):
    def __init__(self, first, second):
        self.first = first
        self.second = second
        super().__init__(f"diagonals {first} and {second} cross")


class CapExceeded(ValueError):
    """An enumeration was requested beyond its configured size cap."""


class DissectionFlags(NamedTuple):
    is_triangulation: bool
    is_34: bool
    is_3d: bool


def _crosses(p: tuple[int, int], q: tuple[int, int]) -> bool:
    a, b = p
    c, d = q
    return a < c < b < d or c < a < d < b


class Dissection:
    """A convex n-gon with a set of pairwise non-crossing diagonals."""

    __slots__ = ("_n", "_diagonals")

    def __init__(self, n: int, diagonals=(), check: bool = True):
        self._n = int(n)
        pairs = {(min(int(a), int(b)), max(int(a), int(b))) for a, b in diagonals}
        self._diagonals = tuple(sorted(pairs))
        if check:
            self.validate()

    @property
    def n(self) -> int:
        return self._n

    @property
    def diagonals(self) -> tuple[tuple[int, int], ...]:
        return self._diagonals

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dissection):
            return NotImplemented
        return self._n == other._n and self._diagonals == other._diagonals

    def __hash__(self) -> int:
        return hash((self._n, self._diagonals))

    def __repr__(self) -> str:
        return f"Dissection(n={self._n}, diagonals={list(self._diagonals)})"

    def validate(self) -> None:
        """Check all invariants; raise a DissectionError subclass on failure."""
        if self._n < 3:
            raise DissectionError(f"a polygon needs at least 3 vertices, got n={self._n}")
        for i, j in self._diagonals:
            if not (1 <= i < j <= self._n):
                raise DiagonalOutOfRange((i, j))
            if j - i < 2 or (i == 1 and j == self._n):
                raise SideAsDiagonal((i, j))
        ds = self._diagonals
        for x in range(len(ds)):
            for y in range(x + 1, len(ds)):
                if _crosses(ds[x], ds[y]):
                    raise CrossingDiagonals(ds[x], ds[y])

    def cells(self) -> tuple[tuple[int, ...], ...]:
        """The sub-polygons of the dissection, each as an ascending vertex tuple.

        Splits the vertex interval [lo, hi] below each chord: from a vertex
        u the cell adjacent to the base chord continues to the farthest w in
        (u, hi] joined to u by a side or diagonal.  Every non-side step chord
        spawns the interval below it, so each diagonal is visited from both
        sides exactly once and the d+1 cells come out without duplication.
        """
        n = self._n
        chords: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
        for v in range(1, n):
            chords[v].append(v + 1)
        chords[1].append(n)
        for i, j in self._diagonals:
            chords[i].append(j)
        for v in chords:
            chords[v].sort()

        out = []
        stack = [(1, n)]
        while stack:
            lo, hi = stack.pop()
            cell = [lo]
            u = lo
            while u != hi:
                ws = chords[u]
                # farthest chord endpoint <= hi; the base chord itself is
                # excluded on the first step
                limit = hi - 1 if u == lo else hi
                w = ws[bisect_right(ws, limit) - 1]
                if w > u + 1:
                    stack.append((u, w))
                cell.append(w)
                u = w
            out.append(tuple(cell))
        out.sort()
        return tuple(out)

    def classify(self) -> DissectionFlags:
        """Cell-size flags: all triangles / all in {3,4} / all multiples of 3."""
        sizes = [len(c) for c in self.cells()]
        return DissectionFlags(
            is_triangulation=all(s == 3 for s in sizes),
            is_34=all(s in (3, 4) for s in sizes),
            is_3d=all(s % 3 == 0 for s in sizes),
        )

    def quiddity_cc(self) -> IntSeq:
        """Entry i = number of cells having vertex i as a corner."""
        counts = [0] * self._n
        for cell in self.cells():
            for v in cell:
                counts[v - 1] += 1
        return tuple(counts)

    def quiddity_mod2(self) -> Mod2Seq:
        """Entry i = parity of the number of triangle cells at vertex i."""
        counts = [0] * self._n
        for cell in self.cells():
            if len(cell) == 3:
                for v in cell:
                    counts[v - 1] ^= 1
        return tuple(counts)

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "n": self._n,
            "diagonals": [list(pair) for pair in self._diagonals],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "Dissection":
        if not isinstance(data, dict):
            raise DissectionError("dissection JSON must be an object")
        if data.get("schema", 1) != 1:
            raise DissectionError(f"unsupported schema {data.get('schema')!r}")
        try:
            n = data["n"]
            diagonals = data["diagonals"]
        except KeyError as exc:
            raise DissectionError(f"dissection JSON missing key {exc}") from None
        if not isinstance(diagonals, list) or not all(
            isinstance(p, (list, tuple)) and len(p) == 2 for p in diagonals
        ):
            raise DissectionError("'diagonals' must be a list of vertex pairs")
        return cls(n, diagonals)

    @classmethod
    def from_json(cls, text: str) -> "Dissection":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DissectionError(f"invalid JSON: {exc}") from None
        return cls.from_json_dict(data)

    def to_dot(self, geometry: str | None = None) -> str:
        """DOT graph with one edge per polygon side and per diagonal.

        ``geometry="circle"`` pins vertex k to the unit circle at angle
        2*pi*(k-1)/n so renders are reproducible; otherwise layout is left
        to the renderer.
        """
        if geometry not in (None, "circle"):
            raise ValueError(f"unknown geometry {geometry!r}")
        n = self._n
        lines = ["graph dissection {"]
        if geometry == "circle":
            for v in range(1, n + 1):
                angle = 2.0 * math.pi * (v - 1) / n
                lines.append(f'  {v} [pos="{math.cos(angle):.4f},{math.sin(angle):.4f}!"];')
        for v in range(1, n):
            lines.append(f"  {v} -- {v + 1};")
        lines.append(f"  {n} -- 1;")
        for i, j in self._diagonals:
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def dissection_from_json(text: str) -> Dissection:
    return Dissection.from_json(text)


_KINDS = ("all", "triangulation", "34", "3d")


def _kind_ok(d: Dissection, kind: str) -> bool:
    if kind == "all":
        return True
    flags = d.classify()
    if kind == "triangulation":
        return flags.is_triangulation
    if kind == "34":
        return flags.is_34
    return flags.is_3d


def enumerate_dissections(
    n: int, kind: str = "all", cap: int = DEFAULT_POLYGON_CAP
) -> Iterator[Dissection]:
    """Yield every dissection of the labeled n-gon whose cells match ``kind``.

    ``kind`` is one of ``"all"``, ``"triangulation"``, ``"34"``, ``"3d"``.
    Non-crossing diagonal sets are generated by backtracking over candidate
    diagonals in lexicographic order, so the stream is deterministic and
    sorted lexicographically on the (sorted) diagonal sets, starting with
    the empty set.
    """
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}, got {kind!r}")
    if n < 3:
        raise DissectionError(f"a polygon needs at least 3 vertices, got n={n}")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the polygon cap {cap}")

    candidates = [
        (i, j)
        for i in range(1, n - 1)
        for j in range(i + 2, n + 1)
        if not (i == 1 and j == n)
    ]
    chosen: list[tuple[int, int]] = []

    def rec(start: int) -> Iterator[Dissection]:
        d = Dissection(n, tuple(chosen), check=False)
        if _kind_ok(d, kind):
            yield d
        for k in range(start, len(candidates)):
            cand = candidates[k]
            if all(not _crosses(cand, prev) for prev in chosen):
                chosen.append(cand)
                yield from rec(k + 1)
                chosen.pop()

    yield from rec(0)
