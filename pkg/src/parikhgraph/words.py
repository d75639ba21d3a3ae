"""Words over ordered alphabets.

Letters are 1-based indices into the alphabet ``a_1 < a_2 < ... < a_s``.
When ``s <= 26`` they print as ``a..z``; larger alphabets print as
comma-separated integers.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError

_LOWER = string.ascii_lowercase


@dataclass(frozen=True)
class Word:
    """An immutable word over the ordered alphabet of the given ``size``.

    ``letters`` may be empty (the empty word).
    """

    letters: tuple[int, ...]
    size: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))
        if self.size < 1:
            raise DomainError(f"alphabet size must be positive, got {self.size}")
        for a in self.letters:
            if not 1 <= a <= self.size:
                raise DomainError(f"letter {a} outside alphabet 1..{self.size}")

    @classmethod
    def parse(cls, text: str, size: int | None = None) -> "Word":
        """Read ``"abab"`` or ``"3,1,2"``; the size defaults to the largest letter."""
        text = text.strip()
        if "," in text or text.isdigit():
            try:
                letters = [int(tok) for tok in text.split(",") if tok.strip()]
            except ValueError:
                raise DomainError(f"cannot read {text!r} as comma-separated letter indices") from None
        else:
            letters = []
            for ch in text:
                if ch not in _LOWER:
                    raise DomainError(f"cannot read letter {ch!r} in word {text!r}")
                letters.append(_LOWER.index(ch) + 1)
        if size is None:
            size = max(letters, default=1)
        return cls(tuple(letters), size)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters, max(self.size, other.size))

    def __str__(self) -> str:
        return format_letters(self.letters, self.size)

    def count(self, letter: int) -> int:
        return self.letters.count(letter)

    def with_size(self, size: int) -> "Word":
        return Word(self.letters, size)


def word(text: str, size: int | None = None) -> Word:
    """Shorthand for :meth:`Word.parse`."""
    return Word.parse(text, size)


def letter_name(letter: int, size: int) -> str:
    if size <= 26:
        return _LOWER[letter - 1]
    return str(letter)


def format_letters(letters: Iterable[int], size: int) -> str:
    letters = list(letters)
    if size <= 26:
        return "".join(_LOWER[a - 1] for a in letters)
    return ",".join(str(a) for a in letters)


def _as_word(u, like: Word) -> Word:
    if isinstance(u, Word):
        return u
    if isinstance(u, str):
        return Word.parse(u, max(like.size, max((_LOWER.index(c) + 1 for c in u if c in _LOWER), default=1)))
    letters = tuple(u)
    return Word(letters, max([like.size, *letters]))


def position_of(w: Word, letter: int, k: int) -> int:
    """1-based position of the ``k``-th occurrence of ``letter`` in ``w``."""
    if k >= 1:
        seen = 0
        for i, a in enumerate(w.letters, start=1):
            if a == letter:
                seen += 1
                if seen == k:
                    return i
    raise DomainError(
        f"letter {letter_name(letter, max(w.size, letter))} has no occurrence number {k} "
        f"in {w} (it occurs {w.count(letter)} times)"
    )


def subword_count(w: Word, u) -> int:
    """Number of occurrences of ``u`` as a scattered subword of ``w``.

    Prefix dynamic programme; ``ends[j]`` counts embeddings of ``u[:j]`` in
    the prefix of ``w`` read so far. Python ints keep counts exact.
    """
    u = _as_word(u, w).letters
    ends = [1] + [0] * len(u)
    for a in w.letters:
        for j in range(len(u), 0, -1):
            if u[j - 1] == a:
                ends[j] += ends[j - 1]
    return ends[len(u)]


def project(w: Word, keep: Iterable[int]) -> Word:
    """Erase every letter not in ``keep``; letter indices are preserved."""
    keep = set(keep)
    return Word(tuple(a for a in w.letters if a in keep), w.size)


def support(w: Word) -> frozenset[int]:
    return frozenset(w.letters)


def core_positions(w: Word, v) -> list[int]:
    """0-based positions of ``w`` that take part in some occurrence of ``v``."""
    v = _as_word(v, w).letters
    m = len(v)
    if m == 0:
        raise DomainError("the core is undefined for the empty pattern")
    n = len(w)
    # before[p]: longest prefix of v embeddable in w[:p]
    before = [0] * (n + 1)
    j = 0
    for p, a in enumerate(w.letters):
        if j < m and v[j] == a:
            j += 1
        before[p + 1] = j
    # after[p]: longest suffix of v embeddable in w[p:]
    after = [0] * (n + 2)
    j = 0
    for p in range(n - 1, -1, -1):
        if j < m and v[m - 1 - j] == w.letters[p]:
            j += 1
        after[p] = j
    keep = []
    for p, a in enumerate(w.letters):
        for jj in range(m):
            if v[jj] == a and jj <= before[p] and m - 1 - jj <= after[p + 1]:
                keep.append(p)
                break
    return keep


def core(w: Word, v) -> Word:
    """The ``v``-core of ``w``: the letters contributing to ``|w|_v``."""
    return Word(tuple(w.letters[p] for p in core_positions(w, v)), w.size)


def ascending(i: int, j: int, size: int | None = None) -> Word:
    """The word ``a_i a_{i+1} ... a_j``."""
    return Word(tuple(range(i, j + 1)), size if size is not None else max(j, 1))
