"""First-quadrant lattice walks of {1',1,2',2}-words.

Each letter of a word contributes one unit step.  Off the axes the four
letters move in four distinct directions; on the axes primed and unprimed
letters of the same value behave alike:

    on an axis (x*y == 0):   1', 1 -> East     2', 2 -> North
    off the axes:            1' -> East   1 -> South   2' -> West   2 -> North

The walk never leaves the closed first quadrant.  Its endpoint encodes the
shape of the rectification of the word and yields a one-pass ballotness
test.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .words import Letter, Word, extract_subword, subword


class Step(Enum):
    EAST = (1, 0)
    WEST = (-1, 0)
    NORTH = (0, 1)
    SOUTH = (0, -1)

    @property
    def dx(self) -> int:
        return self.value[0]

    @property
    def dy(self) -> int:
        return self.value[1]


@dataclass(frozen=True)
class LatticeWalk:
    letters: tuple[Letter, ...]
    start: tuple[int, int]
    steps: tuple[Step, ...]
    points: tuple[tuple[int, int], ...]

    @property
    def endpoint(self) -> tuple[int, int]:
        return self.points[-1]


@dataclass(frozen=True)
class RectShape:
    """Shape data encoded by a walk: a strict partition with at most two
    rows, the number of 1s in the first row, and whether a 2' occurs."""

    shape: tuple[int, ...]
    first_row_ones: int
    has_two_prime: bool


def _step_for(letter: Letter, x: int, y: int) -> Step:
    if letter.value not in (1, 2):
        raise ValueError(f"walks are defined for values 1 and 2 only, got {letter}")
    if x == 0 or y == 0:
        return Step.EAST if letter.value == 1 else Step.NORTH
    if letter.value == 1:
        return Step.EAST if letter.primed else Step.SOUTH
    return Step.WEST if letter.primed else Step.NORTH


def walk(w: Word | Iterable[Letter], start: tuple[int, int] = (0, 0)) -> LatticeWalk:
    """The lattice walk of a {1,2}-valued word (or raw letter string),
    beginning at ``start``.  From the origin the walk is independent of the
    representative; arbitrary starts are used by the bounded-error tests."""
    letters = w.letters if isinstance(w, Word) else tuple(w)
    x, y = start
    if x < 0 or y < 0:
        raise ValueError("walk must start in the closed first quadrant")
    points = [(x, y)]
    steps = []
    for l in letters:
        s = _step_for(l, x, y)
        x += s.dx
        y += s.dy
        steps.append(s)
        points.append((x, y))
    return LatticeWalk(letters, start, tuple(steps), tuple(points))


def rect_shape(wk: LatticeWalk) -> RectShape:
    """Shape and first-row content of the rectification, read off the walk
    endpoint.  Requires a walk from the origin."""
    if wk.start != (0, 0):
        raise ValueError("rect_shape needs a walk from the origin")
    n = len(wk.letters)
    x, y = wk.endpoint
    if (n + x + y) % 2 != 0:
        raise ValueError("corrupted walk: n + x + y is odd")
    lam1 = (n + x + y) // 2
    lam2 = (n - x - y) // 2
    ones = (n + x - y) // 2
    if lam1 == 0:
        shape: tuple[int, ...] = ()
    elif lam2 == 0:
        shape = (lam1,)
    else:
        shape = (lam1, lam2)
    if lam2 > 0:
        from .primed import LOWER, apply_primed

        has_two_prime = apply_primed(Word(wk.letters), 1, LOWER) is None
    else:
        has_two_prime = False
    return RectShape(shape, ones, has_two_prime)


def is_ballot(w: Word, n: int | None = None) -> bool:
    """True iff every (i, i+1) lattice walk of w ends on the x-axis."""
    bound = w.max_value() if n is None else n
    for i in range(1, max(bound, 1)):
        if walk(subword(w, i)).endpoint[1] != 0:
            return False
    return True


def is_antiballot(w: Word, n: int | None = None) -> bool:
    """True iff every (i, i+1) lattice walk of w ends on the y-axis."""
    bound = w.max_value() if n is None else n
    for i in range(1, max(bound, 1)):
        if walk(subword(w, i)).endpoint[0] != 0:
            return False
    return True


def knuth_moves(w: Word) -> set[Word]:
    """Words one elementary shifted Knuth move away from w.

    The four kinds of move: bac <-> bca and acb <-> cab on adjacent triples
    (a < b < c in the standardization order), interchanging the first two
    letters, and toggling the prime of the second letter when the word
    starts aa or aa'.
    """
    from .words import standardize

    letters = w.letters
    n = len(letters)
    out: set[Word] = set()
    if n >= 3:
        std = standardize(w)
        for k in range(n - 2):
            s1, s2, s3 = std[k], std[k + 1], std[k + 2]
            swapped = None
            if s2 < s1 < s3 or s3 < s1 < s2:
                # bac -> bca, bca -> bac: exchange the last two letters
                swapped = letters[:k + 1] + (letters[k + 2], letters[k + 1]) + letters[k + 3:]
            elif s1 < s3 < s2 or s2 < s3 < s1:
                # acb -> cab, cab -> acb: exchange the first two letters
                swapped = letters[:k] + (letters[k + 1], letters[k]) + letters[k + 2:]
            if swapped is not None:
                out.add(Word(swapped))
    if n >= 2:
        out.add(Word((letters[1], letters[0]) + letters[2:]))
        a, b = letters[0], letters[1]
        if a.value == b.value and not a.primed:
            out.add(Word((a, Letter(b.value, not b.primed)) + letters[2:]))
    out.discard(w)
    return out
