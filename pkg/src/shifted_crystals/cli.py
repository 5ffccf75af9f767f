"""Command-line interface.

Exit codes: 0 success, 1 domain error (bad input), 2 verification failure,
64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .axioms import (
    canonical_isomorphism,
    check_all,
    crystal_to_labeled,
    labeled_graph_from_json,
)
from .crystal import build_crystal, lr_coefficients, schur_q
from .jdt import inner_slide, outer_slide, rectify
from .polynomials import QPolynomial
from .primed import LOWER, RAISE
from .rsk import shifted_rsk
from .selftest import run_selftest
from .tableaux import CANONICAL, ShiftedTableau, SkewShape, reading_word
from .unprimed import apply_operator, find_criticals
from .walks import walk
from .words import Letter, Word, parse_word, _parse_token

USAGE_EXIT = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(USAGE_EXIT)


def _parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(tok) for tok in text.replace(",", " ").split())


def parse_tableau_text(text: str) -> ShiftedTableau:
    """One row per line, top row first, '.' marking inner cells, letters in
    the word grammar, tokens separated by whitespace."""
    outer, inner, rows = [], [], []
    lines = [ln for ln in text.splitlines() if ln.strip()]
    for r, line in enumerate(lines):
        toks = line.split()
        mu = 0
        letters = []
        for tok in toks:
            if tok == ".":
                if letters:
                    raise ValueError(f"row {r}: '.' after a letter")
                mu += 1
            else:
                letters.append(_parse_token(tok))
        outer.append(mu + len(letters))
        inner.append(mu)
        rows.append(tuple(letters))
    shape = SkewShape(tuple(outer), tuple(inner))
    return ShiftedTableau(shape, tuple(rows))


def format_tableau_text(t: ShiftedTableau) -> str:
    lines = []
    for r in range(t.shape.nrows):
        toks = ["."] * t.shape.inner_at(r) + [str(l) for l in t.rows[r]]
        lines.append(" ".join(toks))
    return "\n".join(lines)


def tableau_from_json(data: dict) -> ShiftedTableau:
    shape = SkewShape(tuple(data["outer"]), tuple(data.get("inner", ())))
    rows = tuple(tuple(_parse_token(tok) for tok in row) for row in data["rows"])
    return ShiftedTableau(shape, rows)


def tableau_to_json(t: ShiftedTableau) -> dict:
    return {"outer": list(t.shape.outer), "inner": list(t.shape.inner),
            "rows": [[str(l) for l in row] for row in t.rows]}


def _load_tableau(path: str) -> ShiftedTableau:
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return tableau_from_json(json.loads(text))
    return parse_tableau_text(text)


def _cmd_walk(args) -> int:
    wk = walk(parse_word(args.word))
    if args.format == "json":
        print(json.dumps({"steps": [s.name for s in wk.steps],
                          "points": [list(p) for p in wk.points],
                          "endpoint": list(wk.endpoint)}))
    else:
        print("points: " + " ".join(f"({x},{y})" for x, y in wk.points))
        print(f"({wk.endpoint[0]},{wk.endpoint[1]})")
    return 0


def _cmd_op(args) -> int:
    res = apply_operator(parse_word(args.word), args.i, args.kind)
    print("∅" if res is None else str(res))
    return 0


def _cmd_criticals(args) -> int:
    direction = args.dir.upper()
    crits = find_criticals(parse_word(args.word), direction)
    for c in crits:
        pattern = "".join(str(l) for l in c.pattern)
        print(f"{c.kind} start={c.start + 1} length={c.length} "
              f"location=({c.location[0]},{c.location[1]}) pattern={pattern}")
    if not crits:
        print("(none)")
    return 0


def _cmd_rectify(args) -> int:
    t = _load_tableau(args.tableau)
    print(format_tableau_text(rectify(t)))
    return 0


def _cmd_slide(args) -> int:
    t = _load_tableau(args.tableau)
    r, c = (int(x) for x in args.corner.split(","))
    slide = inner_slide if args.dir == "in" else outer_slide
    out, record = slide(t, (r, c))
    print(format_tableau_text(out))
    print("path: " + " ".join(f"({r},{c})" for r, c in record.path))
    return 0


def _cmd_rsk(args) -> int:
    w = parse_word(args.word)
    if args.trace:
        from .rsk import mixed_insert
        from .tableaux import ShiftedTableau as _T, SkewShape as _S
        p = _T(_S((), ()), ())
        for k, letter in enumerate(w.letters, start=1):
            res = mixed_insert(p, letter)
            steps = " ".join(f"{phase}({r},{c})<-{l}" for phase, (r, c), l in res.path)
            print(f"insert {letter}: {steps}")
            p = res.tableau
    p, q = shifted_rsk(w)
    print("P:")
    print(format_tableau_text(p) if p.shape.nrows else "(empty)")
    print("Q:")
    print(str(q))
    print("circles: {" + ", ".join(map(str, sorted(q.circled))) + "}")
    return 0


def _cmd_crystal(args) -> int:
    shape = SkewShape(_parse_partition(args.outer), _parse_partition(args.inner))
    graph = build_crystal(shape, args.n)
    if args.format == "dot":
        print(graph.to_dot())
    else:
        print(graph.to_json())
    return 0


def _cmd_lr(args) -> int:
    shape = SkewShape(_parse_partition(args.outer), _parse_partition(args.inner))
    coeffs = lr_coefficients(shape, args.n)
    for nu, f in coeffs.items():
        print(f"{','.join(map(str, nu)) or '-'}: {f}")
    return 0


def _cmd_schurq(args) -> int:
    shape = SkewShape(_parse_partition(args.outer), _parse_partition(args.inner))
    print(str(schur_q(shape, args.n)))
    return 0


def _cmd_verify_axioms(args) -> int:
    with open(args.graph) as fh:
        g = labeled_graph_from_json(fh.read())
    reports = check_all(g)
    for r in reports:
        print(str(r))
    return 0 if all(r.ok for r in reports) else 2


def _cmd_isomorphism(args) -> int:
    with open(args.g) as fh:
        g = labeled_graph_from_json(fh.read())
    with open(args.h) as fh:
        h = labeled_graph_from_json(fh.read())
    result = canonical_isomorphism(g, h)
    if isinstance(result, dict):
        print(json.dumps({str(k): str(v) for k, v in sorted(result.items(), key=str)},
                         indent=2))
        return 0
    print(f"no isomorphism: {result}", file=sys.stderr)
    return 2


def _cmd_selftest(args) -> int:
    ok = run_selftest(max_size=args.max_size, seed=args.seed)
    return 0 if ok else 2


def build_parser() -> _Parser:
    parser = _Parser(prog="shifted-crystals")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("walk", help="lattice walk of a {1',1,2',2} word")
    p.add_argument("word")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_cmd_walk)

    p = sub.add_parser("op", help="apply a raising/lowering operator")
    p.add_argument("word")
    p.add_argument("--kind", choices=("f", "e", "fprime", "eprime"), required=True)
    p.add_argument("--i", type=int, default=1)
    p.set_defaults(fn=_cmd_op)

    p = sub.add_parser("criticals", help="critical substrings of a word")
    p.add_argument("word")
    p.add_argument("--dir", choices=("f", "e"), default="f")
    p.set_defaults(fn=_cmd_criticals)

    p = sub.add_parser("rectify", help="rectify a tableau file")
    p.add_argument("tableau")
    p.set_defaults(fn=_cmd_rectify)

    p = sub.add_parser("slide", help="one jeu de taquin slide")
    p.add_argument("tableau")
    p.add_argument("--corner", required=True, help="row,col")
    p.add_argument("--dir", choices=("in", "out"), default="in")
    p.set_defaults(fn=_cmd_slide)

    p = sub.add_parser("rsk", help="shifted RSK insertion")
    p.add_argument("word")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(fn=_cmd_rsk)

    p = sub.add_parser("crystal", help="build a crystal graph")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", default="")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(fn=_cmd_crystal)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficients")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", default="")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_lr)

    p = sub.add_parser("schurq", help="Schur Q polynomial")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", default="")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_schurq)

    p = sub.add_parser("verify-axioms", help="check axioms A1-A4 on a graph file")
    p.add_argument("graph")
    p.set_defaults(fn=_cmd_verify_axioms)

    p = sub.add_parser("isomorphism", help="canonical isomorphism between graph files")
    p.add_argument("g")
    p.add_argument("h")
    p.set_defaults(fn=_cmd_isomorphism)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
