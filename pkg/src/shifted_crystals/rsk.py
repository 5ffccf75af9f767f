"""Mixed insertion, shifted RSK with circled recording tableaux, and
dual-equivalence testing.

Mixed insertion bumps along rows with the order a <row b (a primed and
a <= b, or a unprimed and a < b) until a leftmost row entry is bumped,
then switches to column bumping with a <col b (a primed and a < b, or a
unprimed and a <= b).  An insertion is Schensted when no column phase
occurs; the recording tableau circles the non-Schensted steps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tableaux import CANONICAL, ShiftedTableau, SkewShape, reading_word
from .walks import Step, walk
from .words import Letter, Word, canonicalize, letter_key

Cell = tuple[int, int]


def row_precedes(a: Letter, b: Letter) -> bool:
    return letter_key(a) <= letter_key(b) if a.primed else letter_key(a) < letter_key(b)


def col_precedes(a: Letter, b: Letter) -> bool:
    return letter_key(a) < letter_key(b) if a.primed else letter_key(a) <= letter_key(b)


@dataclass(frozen=True)
class CircledRecordingTableau:
    """Standard shifted recording tableau with a set of circled entries."""

    shape: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]
    circled: frozenset[int]

    def __str__(self) -> str:
        lines = []
        for r, row in enumerate(self.rows):
            toks = [f"({k})" if k in self.circled else str(k) for k in row]
            lines.append(" " * (2 * r) + " ".join(toks))
        return "\n".join(lines) if lines else "(empty)"


@dataclass(frozen=True)
class InsertionResult:
    tableau: ShiftedTableau
    cell: Cell
    schensted: bool
    path: tuple[tuple[str, Cell, Letter], ...]   # (phase, cell written, letter placed)


def _rows_to_tableau(rows: list[list[Letter]]) -> ShiftedTableau:
    outer = tuple(len(row) for row in rows)
    return ShiftedTableau(SkewShape(outer, ()), tuple(tuple(r) for r in rows), CANONICAL)


def _canonicalize_rows(rows: list[list[Letter]]) -> None:
    letters = []
    for r in range(len(rows) - 1, -1, -1):
        letters.extend(rows[r])
    fixed = canonicalize(letters)
    idx = 0
    for r in range(len(rows) - 1, -1, -1):
        for c in range(len(rows[r])):
            rows[r][c] = fixed[idx]
            idx += 1


def _column_cells(rows: list[list[Letter]], col: int) -> list[int]:
    return [r for r in range(len(rows)) if r <= col < r + len(rows[r])]


def mixed_insert(p: ShiftedTableau, a: Letter) -> InsertionResult:
    """Mixed-insert one letter into a straight-shape tableau."""
    if not p.shape.is_straight:
        raise ValueError("mixed insertion needs a straight-shape tableau")
    rows: list[list[Letter]] = [list(row) for row in p.rows]
    path: list[tuple[str, Cell, Letter]] = []
    schensted = True
    cur = a
    r = 0
    new_cell: Cell | None = None
    while True:
        if r == len(rows):
            rows.append([cur])
            new_cell = (r, r)
            path.append(("row", new_cell, cur))
            break
        row = rows[r]
        hit = next((k for k, b in enumerate(row) if row_precedes(cur, b)), None)
        if hit is None:
            row.append(cur)
            new_cell = (r, r + len(row) - 1)
            path.append(("row", new_cell, cur))
            break
        bumped = row[hit]
        row[hit] = cur
        path.append(("row", (r, r + hit), cur))
        if hit == 0:
            schensted = False
            cur = bumped
            col = r + 1
            while True:
                cells = _column_cells(rows, col)
                target = next((rr for rr in cells if col_precedes(cur, rows[rr][col - rr])), None)
                if target is None:
                    # place at the bottom of the column
                    if cells:
                        rr = max(cells) + 1
                        if rr == len(rows):
                            if rr != col:
                                raise AssertionError("column placement would leave the column")
                            rows.append([cur])
                        else:
                            if rr + len(rows[rr]) != col:
                                raise AssertionError("column placement does not align")
                            rows[rr].append(cur)
                    else:
                        rr = min(k for k in range(len(rows)) if k + len(rows[k]) == col)
                        rows[rr].append(cur)
                    new_cell = (rr, col)
                    path.append(("col", new_cell, cur))
                    break
                nxt = rows[target][col - target]
                rows[target][col - target] = cur
                path.append(("col", (target, col), cur))
                cur = nxt
                col += 1
            break
        cur = bumped
        r += 1
    _canonicalize_rows(rows)
    return InsertionResult(_rows_to_tableau(rows), new_cell, schensted, tuple(path))


def shifted_rsk(w: Word) -> tuple[ShiftedTableau, CircledRecordingTableau]:
    """Insert the letters of w in order; the recording tableau marks each
    new cell with its step index, circled when the step was non-Schensted."""
    p = ShiftedTableau(SkewShape((), ()), ())
    q_entries: dict[Cell, int] = {}
    circled = set()
    for idx, letter in enumerate(w.letters, start=1):
        res = mixed_insert(p, letter)
        p = res.tableau
        q_entries[res.cell] = idx
        if not res.schensted:
            circled.add(idx)
    shape = p.shape.outer
    rows = tuple(tuple(q_entries[(r, c)] for c in range(r, r + shape[r]))
                 for r in range(len(shape)))
    return p, CircledRecordingTableau(shape, rows, frozenset(circled))


def recording_tableau(w: Word) -> CircledRecordingTableau:
    return shifted_rsk(w)[1]


def circled_positions_fast(w: Word) -> frozenset[int]:
    """Circled indices of the recording tableau of a {1,2}-valued word,
    computed in one pass: an index i is circled iff w_i = 1', or w_i is a
    1 or 2' preceded only by 2/2', or w_i is a 1 or 2' occurring after the
    first South/West step with the previous 1-or-2' being a 2'."""
    letters = w.letters
    if any(l.value not in (1, 2) for l in letters):
        raise ValueError("the one-pass circling rule needs a {1,2}-valued word")
    steps = walk(w).steps
    first_sw = next((k for k, s in enumerate(steps) if s in (Step.SOUTH, Step.WEST)), None)
    circled = set()
    prev_one_or_twoprime: Letter | None = None
    all_twos_so_far = True
    for idx, l in enumerate(letters):
        if l == Letter(1, True):
            circled.add(idx + 1)
        elif l in (Letter(1, False), Letter(2, True)):
            if idx > 0 and all_twos_so_far:
                circled.add(idx + 1)
            elif first_sw is not None and idx > first_sw and \
                    prev_one_or_twoprime == Letter(2, True):
                circled.add(idx + 1)
            prev_one_or_twoprime = l
        if l.value != 2:
            all_twos_so_far = False
    return frozenset(circled)


def dual_equivalent(t1: ShiftedTableau, t2: ShiftedTableau) -> bool:
    """Same shape and equal circled recording tableaux of the reading words."""
    if t1.shape != t2.shape:
        raise ValueError(f"shape mismatch: {t1.shape} vs {t2.shape}")
    return recording_tableau(reading_word(t1)) == recording_tableau(reading_word(t2))
