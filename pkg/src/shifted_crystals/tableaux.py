"""Strict partitions, shifted skew shapes, and shifted semistandard tableaux.

Cells are indexed (row, column), zero-based, with the shifted convention
that row r occupies columns r .. r + lambda_r - 1; the staircase diagonal
is column == row.  Entries weakly increase along rows and down columns;
primed letters repeat only in columns, unprimed only in rows.

Three variants of "semistandard" are used:
  CANONICAL  - the first letter of each value in reading order is unprimed;
  QVARIANT   - the canonical restriction is lifted (primes anywhere);
  PVARIANT   - no primed entries on the staircase diagonal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .words import Letter, Word, canonicalize, letter_key, standardize, unstandardize

CANONICAL = "canonical"
QVARIANT = "q"
PVARIANT = "p"

Cell = tuple[int, int]


def assert_strict_partition(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(parts[k] <= parts[k + 1] for k in range(len(parts) - 1)):
        raise ValueError(f"partition must be strictly decreasing: {parts}")
    return parts


def strict_partitions(max_size: int) -> list[tuple[int, ...]]:
    """All nonempty strict partitions of size <= max_size, sorted by size
    then lexicographically."""
    found: list[tuple[int, ...]] = []

    def rec(cap: int, total: int, acc: list[int]) -> None:
        for part in range(min(cap, max_size - total), 0, -1):
            acc.append(part)
            found.append(tuple(acc))
            rec(part - 1, total + part, acc)
            acc.pop()

    rec(max_size, 0, [])
    return sorted(found, key=lambda lam: (sum(lam), lam))


def _normalize_presentation(outer: tuple[int, ...],
                            inner: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Canonical presentation of a skew diagram: trailing empty rows are
    dropped and remaining empty rows take the minimal part value, so that
    equal cell sets compare equal."""
    def mu(r: int) -> int:
        return inner[r] if r < len(inner) else 0

    rows_with_cells = [r for r in range(len(outer)) if outer[r] > mu(r)]
    if not rows_with_cells:
        return (), ()
    nrows = max(rows_with_cells) + 1
    new_outer = [0] * nrows
    new_inner = [0] * nrows
    for r in range(nrows - 1, -1, -1):
        if outer[r] > mu(r):
            new_outer[r], new_inner[r] = outer[r], mu(r)
        else:
            prev = new_outer[r + 1] if r + 1 < nrows else 0
            new_outer[r] = new_inner[r] = prev + 1
    while new_inner and new_inner[-1] == 0:
        new_inner.pop()
    return tuple(new_outer), tuple(new_inner)


@dataclass(frozen=True)
class SkewShape:
    """A shifted skew shape outer/inner.  Inner parts may equal outer parts
    (empty rows), which arise from antidiagonal reflection."""

    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()

    def __post_init__(self):
        outer = assert_strict_partition(self.outer) if self.outer else ()
        trimmed = list(self.inner)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        inner = tuple(trimmed)
        if inner:
            assert_strict_partition(inner)
        if len(inner) > len(outer):
            raise ValueError(f"inner shape {inner} longer than outer {outer}")
        for r, mu in enumerate(inner):
            if mu > outer[r]:
                raise ValueError(f"inner shape {inner} not contained in {outer}")
        outer, inner = _normalize_presentation(outer, inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def nrows(self) -> int:
        return len(self.outer)

    def inner_at(self, r: int) -> int:
        return self.inner[r] if r < len(self.inner) else 0

    def row_cols(self, r: int) -> range:
        return range(r + self.inner_at(r), r + self.outer[r])

    def cells(self) -> tuple[Cell, ...]:
        return tuple((r, c) for r in range(self.nrows) for c in self.row_cols(r))

    def reading_cells(self) -> tuple[Cell, ...]:
        """Bottom row first, left to right within each row."""
        return tuple((r, c) for r in range(self.nrows - 1, -1, -1) for c in self.row_cols(r))

    def inner_cells(self) -> tuple[Cell, ...]:
        return tuple((r, c) for r in range(len(self.inner)) for c in range(r, r + self.inner[r]))

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def __str__(self) -> str:
        if self.inner:
            return f"{'/'.join(map(str, [list(self.outer), list(self.inner)]))}"
        return str(list(self.outer))


def straight(outer: Sequence[int]) -> SkewShape:
    return SkewShape(tuple(outer), ())


@dataclass(frozen=True)
class ShiftedTableau:
    """A filling of a shifted skew shape.  rows[r] lists the letters of row
    r in column order (inner cells omitted)."""

    shape: SkewShape
    rows: tuple[tuple[Letter, ...], ...]
    variant: str = CANONICAL

    def __post_init__(self):
        if len(self.rows) != self.shape.nrows:
            raise ValueError("row count does not match shape")
        for r, row in enumerate(self.rows):
            if len(row) != len(self.shape.row_cols(r)):
                raise ValueError(f"row {r} has {len(row)} entries, shape wants "
                                 f"{len(self.shape.row_cols(r))}")

    def entry(self, r: int, c: int) -> Letter | None:
        if 0 <= r < self.shape.nrows:
            cols = self.shape.row_cols(r)
            if cols.start <= c < cols.stop:
                return self.rows[r][c - cols.start]
        return None

    def entries(self) -> dict[Cell, Letter]:
        return {(r, c): self.rows[r][c - self.shape.row_cols(r).start]
                for r in range(self.shape.nrows) for c in self.shape.row_cols(r)}

    def reading_letters(self) -> tuple[Letter, ...]:
        out = []
        for r in range(self.shape.nrows - 1, -1, -1):
            out.extend(self.rows[r])
        return tuple(out)

    def column_letters(self) -> tuple[Letter, ...]:
        """Columns left to right, each read bottom to top."""
        by_col: dict[int, list[tuple[int, Letter]]] = {}
        for (r, c), l in self.entries().items():
            by_col.setdefault(c, []).append((r, l))
        out = []
        for c in sorted(by_col):
            for r, l in sorted(by_col[c], reverse=True):
                out.append(l)
        return tuple(out)

    def weight(self, n: int | None = None) -> tuple[int, ...]:
        letters = self.reading_letters()
        m = n if n is not None else max((l.value for l in letters), default=0)
        wt = [0] * m
        for l in letters:
            wt[l.value - 1] += 1
        return tuple(wt)

    def size(self) -> int:
        return self.shape.size

    def with_reading_letters(self, letters: Sequence[Letter]) -> "ShiftedTableau":
        """Same shape, new letters assigned along the reading order."""
        if len(letters) != self.shape.size:
            raise ValueError("letter count does not match shape size")
        rows: list[list[Letter]] = [[] for _ in range(self.shape.nrows)]
        idx = 0
        for r in range(self.shape.nrows - 1, -1, -1):
            take = len(self.shape.row_cols(r))
            rows[r] = list(letters[idx:idx + take])
            idx += take
        return ShiftedTableau(self.shape, tuple(tuple(row) for row in rows), self.variant)

    def canonicalized(self) -> "ShiftedTableau":
        return self.with_reading_letters(canonicalize(self.reading_letters()))

    def __str__(self) -> str:
        lines = []
        for r in range(self.shape.nrows):
            toks = ["."] * self.shape.inner_at(r) + [str(l) for l in self.rows[r]]
            lines.append(" " * (2 * r) + " ".join(toks))
        return "\n".join(lines) if lines else "(empty)"


def reading_word(t: ShiftedTableau) -> Word:
    """Row reading word: rows concatenated bottom to top."""
    return Word(t.reading_letters())


def column_word(t: ShiftedTableau) -> Word:
    return Word(t.column_letters())


@dataclass(frozen=True)
class StandardShiftedTableau:
    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def entry(self, r: int, c: int) -> int | None:
        if 0 <= r < self.shape.nrows:
            cols = self.shape.row_cols(r)
            if cols.start <= c < cols.stop:
                return self.rows[r][c - cols.start]
        return None

    def is_standard(self) -> bool:
        nums = [x for row in self.rows for x in row]
        if sorted(nums) != list(range(1, len(nums) + 1)):
            return False
        for r in range(self.shape.nrows):
            cols = self.shape.row_cols(r)
            for c in cols:
                v = self.entry(r, c)
                right = self.entry(r, c + 1)
                below = self.entry(r + 1, c)
                if right is not None and not v < right:
                    return False
                if below is not None and not v < below:
                    return False
        return True


def standardize_tableau(t: ShiftedTableau) -> StandardShiftedTableau:
    """Standardize the reading word and perform the same changes cellwise."""
    std = standardize(t.reading_letters())
    rows: list[list[int]] = [[] for _ in range(t.shape.nrows)]
    idx = 0
    for r in range(t.shape.nrows - 1, -1, -1):
        take = len(t.shape.row_cols(r))
        rows[r] = list(std[idx:idx + take])
        idx += take
    return StandardShiftedTableau(t.shape, tuple(tuple(row) for row in rows))


def _row_ok(a: Letter, b: Letter) -> bool:
    # a immediately left of b
    ka, kb = letter_key(a), letter_key(b)
    return ka < kb or (a == b and not a.primed)


def _col_ok(a: Letter, b: Letter) -> bool:
    # a immediately above b
    ka, kb = letter_key(a), letter_key(b)
    return ka < kb or (a == b and a.primed)


def is_semistandard(shape: SkewShape, entries: Mapping[Cell, Letter],
                    variant: str = CANONICAL) -> bool:
    """Check a filling against the row/column rules and the variant rule.
    The filling must cover exactly the shape's cells."""
    cells = shape.cells()
    if set(entries) != set(cells):
        raise ValueError("entries do not fill exactly the cells of the shape")
    for (r, c) in cells:
        v = entries[(r, c)]
        right = entries.get((r, c + 1))
        below = entries.get((r + 1, c))
        if right is not None and not _row_ok(v, right):
            return False
        if below is not None and not _col_ok(v, below):
            return False
    if variant == PVARIANT:
        if any(entries[(r, c)].primed for (r, c) in cells if r == c):
            return False
    elif variant == CANONICAL:
        seen: set[int] = set()
        for r in range(shape.nrows - 1, -1, -1):
            for c in shape.row_cols(r):
                l = entries[(r, c)]
                if l.value not in seen:
                    if l.primed:
                        return False
                    seen.add(l.value)
    elif variant != QVARIANT:
        raise ValueError(f"unknown variant {variant!r}")
    return True


def is_semistandard_tableau(t: ShiftedTableau) -> bool:
    return is_semistandard(t.shape, t.entries(), t.variant)


def is_semistandard_via_standardization(t: ShiftedTableau) -> bool:
    """Alternative criterion for the canonical variant: the reading word is
    in canonical form and the standardization is a standard shifted tableau."""
    letters = t.reading_letters()
    if tuple(letters) != canonicalize(letters):
        return False
    return standardize_tableau(t).is_standard()


def enumerate_tableaux(shape: SkewShape, n: int, variant: str = CANONICAL) -> Iterator[ShiftedTableau]:
    """All semistandard fillings with values <= n in a fixed deterministic
    order: cells filled in reading order, letters ascending."""
    if variant not in (CANONICAL, QVARIANT, PVARIANT):
        raise ValueError(f"unknown variant {variant!r}")
    cells = shape.reading_cells()
    entries: dict[Cell, Letter] = {}
    value_counts = [0] * (n + 1)
    alphabet = [Letter(v, p) for v in range(1, n + 1) for p in (True, False)]

    def ok(cell: Cell, l: Letter) -> bool:
        r, c = cell
        if variant == PVARIANT and l.primed and r == c:
            return False
        if variant == CANONICAL and l.primed and value_counts[l.value] == 0:
            return False
        left = entries.get((r, c - 1))
        if left is not None and not _row_ok(left, l):
            return False
        below = entries.get((r + 1, c))
        if below is not None and not _col_ok(l, below):
            return False
        return True

    def rec(idx: int) -> Iterator[ShiftedTableau]:
        if idx == len(cells):
            rows: list[list[Letter]] = [[] for _ in range(shape.nrows)]
            for (r, c) in shape.cells():
                rows[r].append(entries[(r, c)])
            yield ShiftedTableau(shape, tuple(tuple(row) for row in rows), variant)
            return
        cell = cells[idx]
        for l in alphabet:
            if ok(cell, l):
                entries[cell] = l
                value_counts[l.value] += 1
                yield from rec(idx + 1)
                value_counts[l.value] -= 1
                del entries[cell]

    return rec(0)


def t_high(outer: Sequence[int]) -> ShiftedTableau:
    """The tableau whose r-th row is filled with the value r+1."""
    shape = straight(outer)
    rows = tuple(tuple(Letter(r + 1, False) for _ in shape.row_cols(r))
                 for r in range(shape.nrows))
    return ShiftedTableau(shape, rows)


def word_as_tableau(w: Word) -> ShiftedTableau:
    """A word of length n placed on the antidiagonal skew shape
    (2n-1, 2n-3, ..., 1)/(2n-2, 2n-4, ..., 2): one cell per row and column,
    reading word equal to w."""
    n = len(w)
    if n == 0:
        return ShiftedTableau(SkewShape((), ()), ())
    outer = tuple(2 * n - 1 - 2 * r for r in range(n))
    inner = tuple(2 * n - 2 - 2 * r for r in range(n - 1))
    rows = tuple((w.letters[n - 1 - r],) for r in range(n))
    return ShiftedTableau(SkewShape(outer, inner), rows)


def shape_from_cells(cells: Iterable[Cell]) -> SkewShape:
    """Reconstruct a skew shape from a set of cells, inserting empty rows
    (outer part == inner part) where needed."""
    cells = sorted(cells)
    if not cells:
        return SkewShape((), ())
    nrows = max(r for r, _ in cells) + 1
    by_row: dict[int, list[int]] = {}
    for r, c in cells:
        by_row.setdefault(r, []).append(c)
    outer = [0] * nrows
    inner = [0] * nrows
    for r in range(nrows - 1, -1, -1):
        if r in by_row:
            cols = by_row[r]
            if cols != list(range(min(cols), max(cols) + 1)):
                raise ValueError(f"row {r} cells not contiguous: {cols}")
            if min(cols) < r:
                raise ValueError(f"cell ({r},{min(cols)}) left of the diagonal")
            outer[r] = max(cols) - r + 1
            inner[r] = min(cols) - r
        else:
            prev = outer[r + 1] if r + 1 < nrows else 0
            outer[r] = inner[r] = prev + 1
    return SkewShape(tuple(outer), tuple(inner))


def eta_tableau(t: ShiftedTableau, staircase_n: int | None = None) -> ShiftedTableau:
    """Apply the eta involution to a {1,2}-valued tableau: flip the entries
    (1 <-> 2' and 1' <-> 2), reflect across the antidiagonal of the n x n
    staircase, and canonicalize."""
    letters = t.reading_letters()
    if any(l.value not in (1, 2) for l in letters):
        raise ValueError("eta on tableaux needs entries of value 1 and 2 only")
    if t.shape.nrows == 0:
        return t
    n = staircase_n if staircase_n is not None else t.shape.outer[0]
    ent = t.entries()
    if any(c > n - 1 for _, c in ent) or t.shape.nrows > n:
        raise ValueError(f"shape does not embed in the {n}x{n} staircase")
    reflected: dict[Cell, Letter] = {}
    for (r, c), l in ent.items():
        nl = Letter(3 - l.value, not l.primed)
        reflected[(n - 1 - c, n - 1 - r)] = nl
    shape = shape_from_cells(reflected)
    rows: list[list[Letter]] = [[] for _ in range(shape.nrows)]
    for (r, c) in shape.cells():
        rows[r].append(reflected[(r, c)])
    out = ShiftedTableau(shape, tuple(tuple(row) for row in rows), t.variant)
    return out.canonicalized()


def substrict_partitions(outer: Sequence[int]) -> list[tuple[int, ...]]:
    """All strict inner shapes contained in outer (componentwise), the empty
    shape included; parts equal to the outer part are allowed (empty rows)."""
    outer = tuple(outer)
    found: list[tuple[int, ...]] = [()]

    def rec(r: int, prev: int, acc: list[int]) -> None:
        if r >= len(outer):
            return
        for part in range(min(prev - 1, outer[r]), 0, -1):
            acc.append(part)
            found.append(tuple(acc))
            rec(r + 1, part, acc)
            acc.pop()

    rec(0, 10 ** 9, [])
    return sorted(set(found), key=lambda mu: (sum(mu), mu))
