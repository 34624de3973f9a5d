"""Exact 2x2 matrix calculus for words in the modular group.

The central object is the left-to-right product

    M(c_1, ..., c_n) = [[c_1, -1], [1, 0]] ... [[c_n, -1], [1, 0]],

computed either over the integers (``Mat2``, exact bignum entries) or over
``Z/NZ`` (``Mat2Mod``, entries reduced at every step so nothing grows).
On top of that sit the classification of a product against ``+Id``/``-Id``,
the entry-wise congruence test that defines the level-``N`` principal
congruence subgroup, and the rewriting of words in the standard generators
``T``, ``S`` into sequences of positive integers.

Sequences are plain tuples of ints, cyclically indexed where noted; the
indexing convention throughout the package is 1-based, matching the usual
subscripts ``c_1, ..., c_n``.
"""

import enum
from dataclasses import dataclass

IntSeq = tuple[int, ...]
Mod2Seq = tuple[int, ...]

__all__ = [
    "IntSeq",
    "Mod2Seq",
    "Mat2",
    "Mat2Mod",
    "MAT_IDENTITY",
    "MAT_MINUS_IDENTITY",
    "MatClass",
    "GroupWord",
    "elementary_matrix",
    "m_product",
    "m_product_mod",
    "classify_pm_identity",
    "in_principal_congruence",
    "is_gamma2_solution",
    "generator_value",
    "word_value",
    "word_to_sequence",
    "parse_word",
    "as_int_seq",
    "as_mod2_seq",
    "parse_int_seq",
    "parse_mod2_seq",
    "format_seq",
    "rotate",
    "rotations",
    "min_rotation",
    "dihedral_min",
]


@dataclass(frozen=True, slots=True)
class Mat2:
    """2x2 integer matrix [[a, b], [c, d]].

    Entries are ordinary Python ints, so products are exact no matter how
    fast they grow.  Every matrix produced by this module has determinant 1.
    """

    a: int
    b: int
    c: int
    d: int

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def mod(self, modulus: int) -> "Mat2Mod":
        """Project the entries to Z/NZ."""
        return Mat2Mod(self.a, self.b, self.c, self.d, modulus)

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


MAT_IDENTITY = Mat2(1, 0, 0, 1)
MAT_MINUS_IDENTITY = Mat2(-1, 0, 0, -1)


@dataclass(frozen=True, slots=True)
class Mat2Mod:
    """2x2 matrix over Z/NZ with entries stored as canonical residues in [0, N)."""

    a: int
    b: int
    c: int
    d: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, getattr(self, name) % self.modulus)

    @classmethod
    def identity(cls, modulus: int) -> "Mat2Mod":
        return cls(1, 0, 0, 1, modulus)

    def __mul__(self, other: "Mat2Mod") -> "Mat2Mod":
        if self.modulus != other.modulus:
            raise ValueError("cannot multiply matrices over different moduli")
        return Mat2Mod(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            self.modulus,
        )

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


class MatClass(enum.Enum):
    """Outcome of comparing a matrix against plus/minus the identity."""

    PLUS_ID = "PlusId"
    MINUS_ID = "MinusId"
    OTHER = "Other"


def elementary_matrix(c: int) -> Mat2:
    """The factor [[c, -1], [1, 0]]; has determinant 1 for every integer c."""
    return Mat2(c, -1, 1, 0)


def m_product(seq) -> Mat2:
    """Left-to-right product of elementary factors for the given entries."""
    entries = tuple(seq)
    if not entries:
        raise ValueError("m_product requires a nonempty sequence")
    m = MAT_IDENTITY
    for c in entries:
        m = m * elementary_matrix(int(c))
    return m


def m_product_mod(seq, modulus: int) -> Mat2Mod:
    """Same product with entries reduced mod ``modulus`` at every step.

    Agrees with ``m_product(seq).mod(modulus)`` but never builds big integers.
    """
    entries = tuple(seq)
    if not entries:
        raise ValueError("m_product_mod requires a nonempty sequence")
    m = Mat2Mod.identity(modulus)
    for c in entries:
        m = m * Mat2Mod(int(c), -1, 1, 0, modulus)
    return m


def classify_pm_identity(m: Mat2) -> MatClass:
    """Exact comparison of a matrix against +Id and -Id."""
    if m == MAT_IDENTITY:
        return MatClass.PLUS_ID
    if m == MAT_MINUS_IDENTITY:
        return MatClass.MINUS_ID
    return MatClass.OTHER


def in_principal_congruence(m: Mat2, modulus: int) -> bool:
    """True iff every entry of ``m - Id`` is divisible by ``modulus``."""
    if modulus < 2:
        raise ValueError(f"modulus must be at least 2, got {modulus}")
    return (
        (m.a - 1) % modulus == 0
        and m.b % modulus == 0
        and m.c % modulus == 0
        and (m.d - 1) % modulus == 0
    )


def is_gamma2_solution(seq) -> bool:
    """True iff the mod-2 product of the sequence is the identity.

    Entries may be arbitrary integers; only their parities matter.  A
    length-1 sequence is never a solution (the product has a 0 in the
    bottom-right corner).
    """
    return m_product_mod(seq, 2) == Mat2Mod.identity(2)


# Words in the standard generators.  S^-1 = -S because S^2 = -Id, which is
# why its positive-entry expression reuses the one for S with opposite sign.

_GENERATOR_MATRICES = {
    "T": Mat2(1, 1, 0, 1),
    "T^-1": Mat2(1, -1, 0, 1),
    "S": Mat2(0, -1, 1, 0),
    "S^-1": Mat2(0, 1, -1, 0),
}

_GENERATOR_SEQUENCES = {
    "T": (-1, (2, 1, 1)),
    "T^-1": (-1, (1, 1, 2, 1)),
    "S": (-1, (1, 1, 2, 1, 1)),
    "S^-1": (1, (1, 1, 2, 1, 1)),
}


@dataclass(frozen=True, slots=True)
class GroupWord:
    """A word over {T, T^-1, S, S^-1} together with a global sign."""

    sign: int = 1
    letters: tuple[str, ...] = ()

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        for letter in self.letters:
            if letter not in _GENERATOR_MATRICES:
                raise ValueError(f"unknown generator letter {letter!r}")


def generator_value(letter: str) -> Mat2:
    """The standard matrix of a generator letter."""
    try:
        return _GENERATOR_MATRICES[letter]
    except KeyError:
        raise ValueError(f"unknown generator letter {letter!r}") from None


def word_value(word: GroupWord) -> Mat2:
    """Evaluate a word to its matrix."""
    m = MAT_IDENTITY
    for letter in word.letters:
        m = m * _GENERATOR_MATRICES[letter]
    return m if word.sign == 1 else -m


def word_to_sequence(word: GroupWord) -> tuple[int, IntSeq]:
    """Rewrite a word as ``(sign, seq)`` with ``sign * m_product(seq)`` its value.

    Plain concatenation of the per-letter expressions with sign
    accumulation; no simplification of the resulting sequence is attempted.
    The empty word maps to ``(-sign, (1, 1, 1))`` since the length-3 run of
    ones multiplies to -Id.
    """
    sign = word.sign
    parts: list[int] = []
    for letter in word.letters:
        letter_sign, letter_seq = _GENERATOR_SEQUENCES[letter]
        sign *= letter_sign
        parts.extend(letter_seq)
    if not parts:
        return -word.sign, (1, 1, 1)
    return sign, tuple(parts)


def parse_word(text: str) -> GroupWord:
    """Parse a compact word such as ``TS``, ``-T^-1S`` or ``T S' T``.

    An inverse is written ``^-1`` or ``'`` right after its letter; a leading
    ``-`` flips the global sign; whitespace is ignored.
    """
    rest = text.strip()
    sign = 1
    while rest.startswith("-"):
        sign = -sign
        rest = rest[1:].lstrip()
    letters: list[str] = []
    i = 0
    while i < len(rest):
        ch = rest[i]
        if ch.isspace():
            i += 1
            continue
        if ch not in ("T", "S"):
            raise ValueError(f"unexpected character {ch!r} in word {text!r}")
        i += 1
        if rest[i : i + 3] == "^-1":
            letters.append(ch + "^-1")
            i += 3
        elif rest[i : i + 1] == "'":
            letters.append(ch + "^-1")
            i += 1
        else:
            letters.append(ch)
    return GroupWord(sign, tuple(letters))


def as_int_seq(entries) -> IntSeq:
    """Validate and freeze a sequence of positive integers."""
    seq = tuple(int(e) for e in entries)
    if not seq:
        raise ValueError("sequence must be nonempty")
    if any(e < 1 for e in seq):
        raise ValueError(f"entries must be positive integers, got {seq}")
    return seq


def as_mod2_seq(entries) -> Mod2Seq:
    """Validate and freeze a sequence over {0, 1}."""
    seq = tuple(int(e) for e in entries)
    if not seq:
        raise ValueError("sequence must be nonempty")
    if any(e not in (0, 1) for e in seq):
        raise ValueError(f"entries must be 0 or 1, got {seq}")
    return seq


def parse_int_seq(text: str) -> IntSeq:
    """Parse a comma-separated sequence of positive integers, e.g. ``1,3,1,2,2``."""
    try:
        return as_int_seq(part.strip() for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse integer sequence {text!r}: {exc}") from None


def parse_mod2_seq(text: str) -> Mod2Seq:
    """Parse a comma-separated sequence over {0, 1}, e.g. ``0,1,0,1``."""
    try:
        return as_mod2_seq(part.strip() for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse mod-2 sequence {text!r}: {exc}") from None


def format_seq(seq) -> str:
    return ",".join(str(int(e)) for e in seq)


def rotate(seq: tuple, k: int) -> tuple:
    """Cyclic left rotation by k positions."""
    seq = tuple(seq)
    if not seq:
        return seq
    k %= len(seq)
    return seq[k:] + seq[:k]


def rotations(seq: tuple) -> list[tuple]:
    seq = tuple(seq)
    return [rotate(seq, k) for k in range(len(seq))]


def min_rotation(seq: tuple) -> tuple:
    """Lexicographically minimal rotation; canonical cyclic representative."""
    return min(rotations(seq))


def dihedral_min(seq: tuple) -> tuple:
    """Canonical representative under rotation and reflection."""
    seq = tuple(seq)
    return min(min_rotation(seq), min_rotation(seq[::-1]))
