"""The coplactic primed operators E'_i and F'_i.

Both operators preserve the standardization of the word and shift its
weight by the vector (.., +1, -1, ..) in coordinates i, i+1 (raising) or
the negative (lowering).  Two implementations are provided: a direct
rule on the letters (the default) and a search by unstandardization,
kept as an independent oracle.
"""

from __future__ import annotations

from .words import (
    Letter,
    Word,
    canonicalize,
    extract_subword,
    splice_subword,
    standardize,
    subword,
    unstandardize,
)

RAISE = "raise"
LOWER = "lower"

_ONE = Letter(1, False)
_TWO_PRIME = Letter(2, True)


def _fprime_two(letters: tuple[Letter, ...]) -> tuple[Letter, ...] | None:
    """F' on a canonical {1,2}-valued string: change the last unprimed 1 to
    2' if that preserves the standardization."""
    last_one = None
    for pos, l in enumerate(letters):
        if l == _ONE:
            last_one = pos
    if last_one is None:
        return None
    cand = letters[:last_one] + (_TWO_PRIME,) + letters[last_one + 1:]
    if standardize(cand) != standardize(letters):
        return None
    return canonicalize(cand)


def _eprime_two(letters: tuple[Letter, ...]) -> tuple[Letter, ...] | None:
    """E' on a canonical {1,2}-valued string.

    x is the last 2' (the first value-2 letter may act as 2'), y the first
    unprimed 1.  If x is left of y and y is the only 1, change x to 1 and
    prime y; otherwise change x to 1 when that preserves standardization.
    """
    first_two = None
    last_two_prime = None
    first_one = None
    ones = 0
    for pos, l in enumerate(letters):
        if l.value == 2:
            if first_two is None:
                first_two = pos
            if l.primed:
                last_two_prime = pos
        elif l == _ONE:
            ones += 1
            if first_one is None:
                first_one = pos
    x = last_two_prime if last_two_prime is not None else first_two
    if x is None:
        return None
    if first_one is not None and x < first_one and ones == 1:
        ls = list(letters)
        ls[x] = _ONE
        ls[first_one] = Letter(1, True)
        return canonicalize(ls)
    cand = letters[:x] + (_ONE,) + letters[x + 1:]
    if standardize(cand) != standardize(letters):
        return None
    return canonicalize(cand)


def apply_primed(w: Word, i: int, direction: str) -> Word | None:
    """F'_i (direction LOWER) or E'_i (direction RAISE) on a word over any
    alphabet: act on the {i, i+1} subword and splice the result back."""
    sub, positions = extract_subword(w, i)
    if direction == LOWER:
        new = _fprime_two(sub)
    elif direction == RAISE:
        new = _eprime_two(sub)
    else:
        raise ValueError(f"unknown direction {direction!r}")
    if new is None:
        return None
    return splice_subword(w, i, positions, new)


def apply_primed_by_standardization(w: Word, i: int, direction: str) -> Word | None:
    """Oracle implementation: the unique word with the same standardization
    and the weight shifted by the appropriate root vector, found by
    unstandardization."""
    sub, positions = extract_subword(w, i)
    wt = list(Word(sub).weight(2)) if sub else [0, 0]
    if direction == LOWER:
        wt[0] -= 1
        wt[1] += 1
    elif direction == RAISE:
        wt[0] += 1
        wt[1] -= 1
    else:
        raise ValueError(f"unknown direction {direction!r}")
    if wt[0] < 0 or wt[1] < 0:
        return None
    new = unstandardize(standardize(sub), wt)
    if new is None:
        return None
    return splice_subword(w, i, positions, new)


def primed_chain_length(w: Word, i: int) -> int:
    """Number of times F'_i applies before becoming undefined."""
    count = 0
    cur = w
    while True:
        nxt = apply_primed(cur, i, LOWER)
        if nxt is None:
            return count
        cur = nxt
        count += 1
