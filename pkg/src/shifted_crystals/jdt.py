"""Shifted jeu de taquin slides and rectification.

The slide path of a slide depends only on the standardization of the
tableau, so a slide is computed in three steps: standardize, slide the
standard tableau (classical shifted jdt, all entries distinct), then
recover the unique semistandard filling with the slid standardization and
the original weight.  The diagonal prime toggle and the canonical-form
special slide both fall out of the unstandardization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tableaux import (
    Cell,
    ShiftedTableau,
    SkewShape,
    reading_word,
    standardize_tableau,
    straight,
    t_high,
    word_as_tableau,
)
from .words import Letter, Word, unstandardize


@dataclass(frozen=True)
class SlideRecord:
    start_cell: Cell
    path: tuple[Cell, ...]          # cells visited by the hole, start included
    special_prime_applied: bool     # some letter changed priming along the way


def inner_corners(shape: SkewShape) -> list[Cell]:
    """Maximal cells of the inner shape: nothing of the inner shape to the
    right or below."""
    inner = set(shape.inner_cells())
    return sorted(c for c in inner
                  if (c[0], c[1] + 1) not in inner and (c[0] + 1, c[1]) not in inner)


def outer_corner_positions(shape: SkewShape) -> list[Cell]:
    """Empty positions with a filled neighbour above or to the left where a
    cell may be added so that the diagram stays a valid shifted skew shape."""
    from .tableaux import shape_from_cells

    cells = set(shape.cells())
    if not cells:
        return [(0, 0)]
    max_col = max(c for _, c in cells)
    out = []
    for r in range(shape.nrows + 1):
        for c in range(r, max_col + 2):
            if (r, c) in cells:
                continue
            if (r - 1, c) not in cells and (r, c - 1) not in cells:
                continue
            try:
                shape_from_cells(cells | {(r, c)})
            except ValueError:
                continue
            out.append((r, c))
    return out


def _slide_std(numbers: dict[Cell, int], shape: SkewShape, corner: Cell,
               outward: bool) -> tuple[dict[Cell, int], SkewShape, tuple[Cell, ...]]:
    """Slide a standard filling.  Inward slides move the smaller of the
    right/below neighbours into the hole; outward slides move the larger of
    the above/left neighbours."""
    numbers = dict(numbers)
    outer = list(shape.outer)
    inner = list(shape.inner) + [0] * (len(shape.outer) - len(shape.inner))
    r, c = corner
    path = [corner]
    if not outward:
        if corner not in inner_corners(shape):
            raise ValueError(f"{corner} is not an empty inner corner of {shape}")
        while True:
            right = numbers.get((r, c + 1))
            below = numbers.get((r + 1, c))
            if right is None and below is None:
                break
            if right is None or (below is not None and below < right):
                numbers[(r, c)] = below
                del numbers[(r + 1, c)]
                r += 1
            else:
                numbers[(r, c)] = right
                del numbers[(r, c + 1)]
                c += 1
            path.append((r, c))
        r0, c0 = corner
        if c0 != r0 + inner[r0] - 1:
            raise AssertionError("inner corner not at the end of its inner row")
        inner[r0] -= 1
        if c != r + outer[r] - 1:
            raise AssertionError("inward slide did not stop at an outer corner")
        outer[r] -= 1
    else:
        if corner not in outer_corner_positions(shape):
            raise ValueError(f"{corner} is not an outer corner position of {shape}")
        if r == len(outer):
            outer.append(0)
            inner.append(0)
        if outer[r] == inner[r]:
            # empty or fresh row: anchor it at the corner's column
            outer[r] = inner[r] = c - r
        if c != r + outer[r]:
            raise AssertionError("outer corner does not extend its row")
        outer[r] += 1
        while True:
            above = numbers.get((r - 1, c))
            left = numbers.get((r, c - 1)) if c - 1 >= r else None
            if above is None and left is None:
                break
            if left is None or (above is not None and above > left):
                numbers[(r, c)] = above
                del numbers[(r - 1, c)]
                r -= 1
            else:
                numbers[(r, c)] = left
                del numbers[(r, c - 1)]
                c -= 1
            path.append((r, c))
        if c != r + inner[r]:
            raise AssertionError("outward slide did not stop next to the inner shape")
        inner[r] += 1
    while outer and outer[-1] == 0:
        outer.pop()
    new_shape = SkewShape(tuple(outer), tuple(inner[:len(outer)]))
    return numbers, new_shape, tuple(path)


def _std_numbers(t: ShiftedTableau) -> dict[Cell, int]:
    st = standardize_tableau(t)
    return {(r, c): st.rows[r][c - t.shape.row_cols(r).start]
            for r in range(t.shape.nrows) for c in t.shape.row_cols(r)}


def _rebuild(t: ShiftedTableau, numbers: dict[Cell, int], shape: SkewShape) -> ShiftedTableau:
    """Unstandardize the slid numbers back to letters with t's weight."""
    wt = t.weight()
    cells = shape.reading_cells()
    std_word = tuple(numbers[c] for c in cells)
    letters = unstandardize(std_word, wt)
    if letters is None:
        raise AssertionError("slide produced a non-semistandard standardization")
    rows: list[list[Letter]] = [[] for _ in range(shape.nrows)]
    assign = dict(zip(cells, letters))
    for (r, c) in shape.cells():
        rows[r].append(assign[(r, c)])
    return ShiftedTableau(shape, tuple(tuple(row) for row in rows), t.variant)


def _compare_primes(t, out, before, after) -> bool:
    letter_by_num_before = {}
    for cell, num in before.items():
        letter_by_num_before[num] = t.entry(*cell)
    for cell, num in after.items():
        if out.entry(*cell).primed != letter_by_num_before[num].primed:
            return True
    return False


def inner_slide(t: ShiftedTableau, corner: Cell) -> tuple[ShiftedTableau, SlideRecord]:
    """One inward slide from an empty inner corner."""
    before = _std_numbers(t)
    after, shape, path = _slide_std(before, t.shape, corner, outward=False)
    out = _rebuild(t, after, shape)
    return out, SlideRecord(corner, path, _compare_primes(t, out, before, after))


def outer_slide(t: ShiftedTableau, corner: Cell) -> tuple[ShiftedTableau, SlideRecord]:
    """One outward slide from an outer corner position."""
    before = _std_numbers(t)
    after, shape, path = _slide_std(before, t.shape, corner, outward=True)
    out = _rebuild(t, after, shape)
    return out, SlideRecord(corner, path, _compare_primes(t, out, before, after))


def _pick_corner(corners: list[Cell], policy: str) -> Cell:
    if policy == "top":
        # rightmost corner in the top-most row that has one
        return min(corners, key=lambda rc: (rc[0], -rc[1]))
    if policy == "bottom":
        # leftmost corner in the bottom-most row that has one
        return min(corners, key=lambda rc: (-rc[0], rc[1]))
    raise ValueError(f"unknown rectification policy {policy!r}")


def rectify(t: ShiftedTableau, policy: str = "top") -> ShiftedTableau:
    """Rectification: slide inward until the shape is straight.  The result
    is independent of the corner policy (checked in the tests)."""
    if t.shape.is_straight:
        return t
    numbers = _std_numbers(t)
    shape = t.shape
    while shape.inner:
        corner = _pick_corner(inner_corners(shape), policy)
        numbers, shape, _ = _slide_std(numbers, shape, corner, outward=False)
    return _rebuild(t, numbers, shape)


def rectify_word(w: Word, policy: str = "top") -> ShiftedTableau:
    """Rectify a word via its antidiagonal tableau."""
    return rectify(word_as_tableau(w), policy)


def is_littlewood_richardson(t: ShiftedTableau) -> bool:
    """True iff the rectification has all entries of row r equal to r+1."""
    rect = rectify(t)
    return rect == t_high(rect.shape.outer)
