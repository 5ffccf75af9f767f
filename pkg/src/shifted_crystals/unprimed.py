"""The coplactic unprimed operators E_i and F_i via critical substrings.

A critical substring is a short pattern in some representative of the
word whose lattice-walk location sits on one of the lines x=0, x=1, y=0,
y=1.  The final one (latest start, then longest) is transformed; types
5F/5E block the operator.  Patterns are matched over all representatives
of the {1,2}-subword (at most four: only the first letter of each value
may switch priming), and candidates are merged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .primed import LOWER, RAISE, apply_primed
from .walks import Step, walk
from .words import Letter, Word, extract_subword, splice_subword

_ONE = Letter(1, False)
_ONE_P = Letter(1, True)
_TWO = Letter(2, False)
_TWO_P = Letter(2, True)

F_DIR = "F"
E_DIR = "E"

#: partial inverses pair up case by case
INVERSE_KIND = {"1F": "2E", "2F": "1E", "3F": "4E", "4F": "3E",
                "1E": "2F", "2E": "1F", "3E": "4F", "4E": "3F"}


@dataclass(frozen=True)
class CriticalSubstring:
    kind: str             # '1F'..'5F' or '1E'..'5E'
    start: int            # 0-based index into the word
    length: int
    location: tuple[int, int]   # walk point just before the substring
    pattern: tuple[Letter, ...]  # the letters in the representative that matched

    @property
    def blocking(self) -> bool:
        return self.kind in ("5F", "5E")


def _representatives_two(letters: tuple[Letter, ...]):
    """The <= 4 representatives of a canonical {1,2}-valued string."""
    first1 = next((p for p, l in enumerate(letters) if l.value == 1), None)
    first2 = next((p for p, l in enumerate(letters) if l.value == 2), None)
    reps = [letters]
    for mask in range(1, 4):
        ls = list(letters)
        changed = False
        if mask & 1 and first1 is not None:
            ls[first1] = _ONE_P
            changed = True
        if mask & 2 and first2 is not None:
            ls[first2] = _TWO_P
            changed = True
        if changed:
            reps.append(tuple(ls))
    return reps


def _scan_representative(rep, points, direction, add):
    n = len(rep)
    for start in range(n):
        x, y = points[start]
        a = rep[start]
        if direction == F_DIR:
            if a == _ONE:
                if y == 0:
                    add("3F", start, 1, rep)
                if x == 1 and y >= 1:
                    add("5F", start, 1, rep)
                j = start + 1
                while j < n and rep[j] == _ONE_P:
                    j += 1
                if j < n and rep[j] == _TWO_P and (y == 0 or (y == 1 and x >= 1)):
                    add("1F", start, j - start + 1, rep)
                j = start + 1
                while j < n and rep[j] == _TWO:
                    j += 1
                if j < n and rep[j] == _ONE_P and (x == 0 or (x == 1 and y >= 1)):
                    add("2F", start, j - start + 1, rep)
            elif a == _ONE_P:
                if x == 0:
                    add("4F", start, 1, rep)
            elif a == _TWO_P:
                if x == 1 and y >= 1:
                    add("5F", start, 1, rep)
        else:
            if a == _TWO:
                if y == 0:
                    add("4E", start, 1, rep)
            elif a == _TWO_P:
                if x == 0:
                    add("3E", start, 1, rep)
                if y == 1 and x >= 1:
                    add("5E", start, 1, rep)
                j = start + 1
                while j < n and rep[j] == _TWO:
                    j += 1
                if j < n and rep[j] == _ONE and (x == 0 or (x == 1 and y >= 1)):
                    add("1E", start, j - start + 1, rep)
                j = start + 1
                while j < n and rep[j] == _ONE_P:
                    j += 1
                if j < n and rep[j] == _TWO and (y == 0 or (y == 1 and x >= 1)):
                    add("2E", start, j - start + 1, rep)
            elif a == _ONE:
                if y == 1 and x >= 1:
                    add("5E", start, 1, rep)


def find_criticals(w: Word, direction: str) -> list[CriticalSubstring]:
    """All critical substrings of a {1,2}-valued word over all of its
    representatives, deduplicated by (kind, start, length)."""
    if direction not in (F_DIR, E_DIR):
        raise ValueError(f"direction must be 'F' or 'E', got {direction!r}")
    letters = w.letters
    if any(l.value not in (1, 2) for l in letters):
        raise ValueError("critical substrings are defined for {1,2}-valued words")
    points = walk(w).points
    found: dict[tuple[str, int, int], CriticalSubstring] = {}

    def add(kind, start, length, rep):
        key = (kind, start, length)
        if key not in found:
            found[key] = CriticalSubstring(kind, start, length, points[start],
                                           rep[start:start + length])

    for rep in _representatives_two(letters):
        _scan_representative(rep, points, direction, add)
    return sorted(found.values(), key=lambda c: (c.start, c.length, c.kind))


def final_critical(w: Word, direction: str) -> CriticalSubstring | None:
    """Latest starting index wins; among equal starts, the longest.  A tie
    between the length-1 kinds at the first letter (3F/4F, or 4E/3E) is
    resolved toward the unprimed-letter kind; both transforms agree."""
    cands = find_criticals(w, direction)
    if not cands:
        return None
    return max(cands, key=lambda c: (c.start, c.length, c.kind in ("3F", "4E"), c.kind))


_MIDDLE = {"1F": _ONE_P, "2F": _TWO, "1E": _TWO, "2E": _ONE_P}
_ENDS = {"1F": (_TWO_P, _TWO), "2F": (_TWO_P, _ONE),
         "1E": (_ONE, _ONE_P), "2E": (_ONE, _TWO_P)}
_SINGLE = {"3F": _TWO, "4F": _TWO_P, "3E": _ONE_P, "4E": _ONE}


def transform(critical: CriticalSubstring) -> tuple[Letter, ...]:
    """The replacement letters for a non-blocking critical substring."""
    kind = critical.kind
    if kind in _SINGLE:
        return (_SINGLE[kind],)
    first, last = _ENDS[kind]
    return (first,) + (_MIDDLE[kind],) * (critical.length - 2) + (last,)


def _apply_two(w: Word, direction: str) -> Word | None:
    crit = final_critical(w, direction)
    if crit is None or crit.blocking:
        return None
    new = transform(crit)
    letters = w.letters[:crit.start] + new + w.letters[crit.start + crit.length:]
    return Word(letters)


def apply_unprimed(w: Word, i: int, direction: str) -> Word | None:
    """F_i (direction LOWER) or E_i (direction RAISE): transform the final
    critical substring of the {i, i+1} subword and splice back."""
    if direction == LOWER:
        d = F_DIR
    elif direction == RAISE:
        d = E_DIR
    else:
        raise ValueError(f"unknown direction {direction!r}")
    sub, positions = extract_subword(w, i)
    if not sub:
        return None
    res = _apply_two(Word(sub), d)
    if res is None:
        return None
    return splice_subword(w, i, positions, res.letters)


def definedness_by_endpoint(w: Word, direction: str) -> bool:
    """Whether F (direction 'F') or E (direction 'E') is defined on a
    {1,2}-valued word, read off the walk endpoint:

    F: undefined at x=0; defined at x=1 with no South/West step; at x=1
    with such a step, defined iff F' is undefined; defined for x>=2.
    E is the mirror statement (swap x and y, F' and E').
    """
    wk = walk(w)
    x, y = wk.endpoint
    has_sw = any(s in (Step.SOUTH, Step.WEST) for s in wk.steps)
    if direction == F_DIR:
        coord, prime_dir = x, LOWER
    elif direction == E_DIR:
        coord, prime_dir = y, RAISE
    else:
        raise ValueError(f"direction must be 'F' or 'E', got {direction!r}")
    if coord == 0:
        return False
    if coord == 1 and not has_sw:
        return True
    if coord == 1:
        return apply_primed(w, 1, prime_dir) is None
    return True


_KINDS = {"f": (apply_unprimed, LOWER), "e": (apply_unprimed, RAISE),
          "fprime": (apply_primed, LOWER), "eprime": (apply_primed, RAISE)}


def apply_operator(w: Word, i: int, kind: str) -> Word | None:
    """Dispatch by name: kind is one of f, e, fprime, eprime."""
    try:
        fn, direction = _KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown operator kind {kind!r}") from None
    return fn(w, i, direction)
