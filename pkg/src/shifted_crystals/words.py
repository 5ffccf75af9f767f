"""Letters, canonical-form words, standardization, and the eta involution.

The alphabet is the totally ordered set 1' < 1 < 2' < 2 < 3' < 3 < ...
A *word* is an equivalence class of strings: two strings are identified
when they agree after replacing the first letter of each value by its
unprimed form.  Words are stored canonically (the first letter of each
value is unprimed).  Everything here is immutable and pure.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence


class Letter(NamedTuple):
    """A primed or unprimed letter: ``Letter(3, True)`` is 3'."""

    value: int
    primed: bool = False

    def __str__(self) -> str:
        return f"{self.value}'" if self.primed else str(self.value)


def letter_key(letter: Letter) -> tuple[int, int]:
    """Sort key realizing the order 1' < 1 < 2' < 2 < 3' < 3 < ..."""
    return (letter.value, 0 if letter.primed else 1)


def letter_lt(a: Letter, b: Letter) -> bool:
    return letter_key(a) < letter_key(b)


def letter_le(a: Letter, b: Letter) -> bool:
    return letter_key(a) <= letter_key(b)


def canonicalize(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    """Unprime the first letter of each value.  Idempotent."""
    seen: set[int] = set()
    out = []
    for l in letters:
        if l.value not in seen:
            seen.add(l.value)
            out.append(Letter(l.value, False))
        else:
            out.append(l)
    return tuple(out)


def is_canonical(letters: Sequence[Letter]) -> bool:
    return tuple(letters) == canonicalize(letters)


class Word:
    """A canonical-form word.  Hashable; compares by its letters."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        self.letters: tuple[Letter, ...] = canonicalize(letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __str__(self) -> str:
        return format_letters(self.letters)

    def __repr__(self) -> str:
        return f"Word({format_letters(self.letters)!r})"

    def max_value(self) -> int:
        return max((l.value for l in self.letters), default=0)

    def weight(self, n: int | None = None) -> tuple[int, ...]:
        """Weight vector: entry i counts letters of value i+1, primed or not.

        With ``n`` given the vector is padded/truncated-checked to length n.
        """
        m = self.max_value() if n is None else n
        wt = [0] * m
        for l in self.letters:
            if l.value > m:
                raise ValueError(f"letter {l} exceeds alphabet bound {m}")
            wt[l.value - 1] += 1
        return tuple(wt)


def format_letters(letters: Sequence[Letter]) -> str:
    """Compact form for single-digit values, space-separated otherwise."""
    if all(l.value <= 9 for l in letters):
        return "".join(str(l) for l in letters)
    return " ".join(str(l) for l in letters)


def _parse_token(tok: str) -> Letter:
    primed = tok.endswith("'")
    digits = tok[:-1] if primed else tok
    if not digits or not digits.isdigit() or int(digits) < 1:
        raise ValueError(f"malformed letter token {tok!r}")
    return Letter(int(digits), primed)


def parse_letters(text: str) -> tuple[Letter, ...]:
    """Parse a letter string as written, without canonicalizing.

    Grammar: ``letter := digits \"'\"?``.  The compact form concatenates
    single-digit letters ("211'12'"); the separated form uses spaces or
    commas ("11 3' 2").  U+2032 PRIME is accepted as an apostrophe.
    """
    text = text.replace("′", "'").strip()
    if not text:
        return ()
    letters = []
    if any(sep in text for sep in (" ", ",")):
        for tok in text.replace(",", " ").split():
            letters.append(_parse_token(tok))
    else:
        i = 0
        while i < len(text):
            ch = text[i]
            if not ch.isdigit() or ch == "0":
                raise ValueError(f"malformed word {text!r}: unexpected {ch!r} at position {i}")
            primed = i + 1 < len(text) and text[i + 1] == "'"
            letters.append(Letter(int(ch), primed))
            i += 2 if primed else 1
    return tuple(letters)


def parse_word(text: str) -> Word:
    """Parse and canonicalize a word."""
    return Word(parse_letters(text))


def representatives(w: Word) -> set[tuple[Letter, ...]]:
    """All strings equivalent to w: the first letter of each value may
    independently be primed or not."""
    firsts = []
    seen: set[int] = set()
    for idx, l in enumerate(w.letters):
        if l.value not in seen:
            seen.add(l.value)
            firsts.append(idx)
    reps = set()
    for mask in itertools.product((False, True), repeat=len(firsts)):
        ls = list(w.letters)
        for idx, primed in zip(firsts, mask):
            ls[idx] = Letter(ls[idx].value, primed)
        reps.add(tuple(ls))
    return reps


def standardize(w: Word | Sequence[Letter]) -> tuple[int, ...]:
    """Standardization: number the letters 1..n from least to greatest,
    ties among unprimed letters in reading order, among primed letters in
    reverse reading order.  Independent of the representative."""
    letters = w.letters if isinstance(w, Word) else tuple(w)
    keyed = []
    for pos, l in enumerate(letters):
        tie = -pos if l.primed else pos
        keyed.append((l.value, 0 if l.primed else 1, tie, pos))
    result = [0] * len(letters)
    for rank, (_, _, _, pos) in enumerate(sorted(keyed), start=1):
        result[pos] = rank
    return tuple(result)


def unstandardize(std: Sequence[int], weight: Sequence[int]) -> Optional[tuple[Letter, ...]]:
    """The unique canonical string with the given standardization and weight,
    or None if no such string exists."""
    n = len(std)
    if sum(weight) != n:
        return None
    pos_of = {num: p for p, num in enumerate(std)}
    letters: list[Letter | None] = [None] * n
    c = 0
    for v, count in enumerate(weight, start=1):
        if count == 0:
            continue
        positions = [pos_of[k] for k in range(c + 1, c + count + 1)]
        lead = positions.index(min(positions))
        primed_part = positions[:lead]
        unprimed_part = positions[lead:]
        # primed letters carry the smaller numbers, in reverse reading order
        if any(primed_part[t] <= primed_part[t + 1] for t in range(len(primed_part) - 1)):
            return None
        if any(unprimed_part[t] >= unprimed_part[t + 1] for t in range(len(unprimed_part) - 1)):
            return None
        for p in primed_part:
            letters[p] = Letter(v, True)
        for p in unprimed_part:
            letters[p] = Letter(v, False)
        c += count
    if any(l is None for l in letters):
        return None
    return tuple(letters)  # type: ignore[arg-type]


def eta(w: Word, i: int = 1) -> Word:
    """The involution swapping values i and i+1 with a prime flip:
    i' -> i+1, i -> (i+1)', (i+1)' -> i, i+1 -> i'."""
    out = []
    for l in w.letters:
        if l.value == i:
            out.append(Letter(i + 1, not l.primed))
        elif l.value == i + 1:
            out.append(Letter(i, not l.primed))
        else:
            out.append(l)
    return Word(out)


def extract_subword(w: Word, i: int) -> tuple[tuple[Letter, ...], tuple[int, ...]]:
    """Letters of value i, i+1 in order, relabeled to values 1, 2, together
    with their positions in w."""
    letters = []
    positions = []
    for pos, l in enumerate(w.letters):
        if l.value in (i, i + 1):
            letters.append(Letter(l.value - i + 1, l.primed))
            positions.append(pos)
    return tuple(letters), tuple(positions)


def subword(w: Word, i: int) -> Word:
    """The word on {1, 2} formed by the letters of value i, i+1."""
    letters, _ = extract_subword(w, i)
    return Word(letters)


def splice_subword(w: Word, i: int, positions: Sequence[int], new_letters: Sequence[Letter]) -> Word:
    """Write a transformed {1,2}-subword back into w at the recorded
    positions (values shifted back to i, i+1); other letters untouched."""
    if len(positions) != len(new_letters):
        raise ValueError("subword length changed during splice")
    full = list(w.letters)
    for pos, nl in zip(positions, new_letters):
        full[pos] = Letter(nl.value + i - 1, nl.primed)
    return Word(full)


def all_canonical_words(length: int, max_value: int) -> Iterator[Word]:
    """All canonical words of exactly the given length over values 1..max_value,
    in a fixed deterministic order."""
    acc: list[Letter] = []

    def rec(pos: int, seen: frozenset[int]) -> Iterator[Word]:
        if pos == length:
            w = Word.__new__(Word)
            w.letters = tuple(acc)
            yield w
            return
        for v in range(1, max_value + 1):
            if v in seen:
                for primed in (False, True):
                    acc.append(Letter(v, primed))
                    yield from rec(pos + 1, seen)
                    acc.pop()
            else:
                acc.append(Letter(v, False))
                yield from rec(pos + 1, seen | {v})
                acc.pop()

    return rec(0, frozenset())


def all_canonical_words_upto(max_length: int, max_value: int) -> Iterator[Word]:
    for length in range(max_length + 1):
        yield from all_canonical_words(length, max_value)
