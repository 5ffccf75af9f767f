"""Acceptance checks, runnable from the test suite or the CLI.

Each criterion function returns a list of failure messages (empty means
pass).  Sizes default to the full advertised ranges; the CLI's selftest
can cap them for a quick run.
"""

from __future__ import annotations

import random
import time
from typing import Callable

from .axioms import (
    AxiomReport,
    LabeledGraph,
    canonical_isomorphism,
    check_all,
    crystal_to_labeled,
    is_strict_with_trailing_zeros,
    string_lengths,
    unique_maximum,
)
from .crystal import (
    build_crystal,
    character,
    lr_coefficients,
    schur_q,
    seminormality_witnesses,
    strip_zeros,
    verify_kashiwara,
)
from .jdt import inner_corners, inner_slide, is_littlewood_richardson, outer_corner_positions, outer_slide, rectify, rectify_word
from .polynomials import QPolynomial
from .primed import LOWER, RAISE, apply_primed
from .rsk import circled_positions_fast, shifted_rsk
from .tableaux import (
    CANONICAL,
    ShiftedTableau,
    SkewShape,
    enumerate_tableaux,
    reading_word,
    strict_partitions,
    substrict_partitions,
    t_high,
)
from .unprimed import apply_unprimed
from .walks import is_ballot, knuth_moves, rect_shape, walk
from .words import Word, all_canonical_words_upto, parse_word, subword

Failures = list[str]


def criterion_1a() -> Failures:
    """Walk of 211'12'22'1'1' ends at (3,2)."""
    end = walk(parse_word("211'12'22'1'1'")).endpoint
    return [] if end == (3, 2) else [f"endpoint {end} != (3, 2)"]


def criterion_1b() -> Failures:
    """Lowering the long example word rewrites positions 7-10 to 2'1'1'2 and
    reaches the undefined state after four steps."""
    fails = []
    w = parse_word("1221'1'111'1'2'2222'2'11'1")
    chain = ["1221'1'12'1'1'22222'2'11'1",
             "22211'12'1'1'22222'2'11'1",
             "22211'12'1'1'22222'2'2'11"]
    cur = w
    for k, expected in enumerate(chain, start=1):
        cur = apply_unprimed(cur, 1, LOWER)
        if cur is None or cur != parse_word(expected):
            fails.append(f"F^{k} gave {cur}, expected {expected}")
            return fails
    if apply_unprimed(cur, 1, LOWER) is not None:
        fails.append("F^4 should be undefined")
    return fails


def criterion_1c() -> Failures:
    """F(121) = 221 as printed in the source example."""
    got = apply_unprimed(parse_word("121"), 1, LOWER)
    return [] if got == parse_word("221") else [f"F(121) gave {got}, expected 221"]


def criterion_1d() -> Failures:
    fails = []
    w = parse_word("2112'3")
    f1 = apply_unprimed(w, 1, LOWER)
    if f1 != parse_word("212'23"):
        fails.append(f"F_1(2112'3) gave {f1}, expected 212'23")
    f2 = apply_unprimed(w, 2, LOWER)
    if f2 != parse_word("31123"):
        fails.append(f"F_2(2112'3) gave {f2}, expected 31123")
    return fails


def criterion_1e() -> Failures:
    fails = []
    p, q = shifted_rsk(parse_word("22111'2'1"))
    if q.circled != frozenset({3, 5, 7}):
        fails.append(f"circles {sorted(q.circled)} != [3, 5, 7]")
    expect_p = ShiftedTableau(SkewShape((4, 3), ()),
                              ((tuple(parse_word("1111").letters)),
                               (tuple(parse_word("222").letters))))
    if p != expect_p:
        fails.append(f"P tableau differs:\n{p}")
    if q.rows != ((1, 2, 3, 5), (4, 6, 7)):
        fails.append(f"Q rows {q.rows} != ((1,2,3,5),(4,6,7))")
    return fails


def criterion_1f() -> Failures:
    fails = []
    chains = [["12211'", "1222'1'"],
              ["1111'1'", "1121'1'", "1221'1'", "22211'", "2222'1", "2222'2'"]]
    for chain in chains:
        for cur_text, nxt_text in zip(chain, chain[1:]):
            got = apply_primed(parse_word(cur_text), 1, LOWER)
            if got != parse_word(nxt_text):
                fails.append(f"F'({cur_text}) gave {got}, expected {nxt_text}")
        if apply_primed(parse_word(chain[-1]), 1, LOWER) is not None:
            fails.append(f"F'({chain[-1]}) should be undefined")
    return fails


def criterion_1_paper_examples() -> Failures:
    t0 = time.monotonic()
    fails = []
    for name, fn in (("1a", criterion_1a), ("1b", criterion_1b), ("1c", criterion_1c),
                     ("1d", criterion_1d), ("1e", criterion_1e), ("1f", criterion_1f)):
        fails.extend(f"{name}: {msg}" for msg in fn())
    elapsed = time.monotonic() - t0
    if elapsed >= 1.0:
        fails.append(f"example checks took {elapsed:.2f}s, budget is 1s")
    return fails


_OPS: list[tuple[str, Callable]] = [
    ("F", lambda w, i: apply_unprimed(w, i, LOWER)),
    ("E", lambda w, i: apply_unprimed(w, i, RAISE)),
    ("F'", lambda w, i: apply_primed(w, i, LOWER)),
    ("E'", lambda w, i: apply_primed(w, i, RAISE)),
]

_INVERSE = {"F": "E", "E": "F", "F'": "E'", "E'": "F'"}


def criterion_2_partial_inverses(max_len_two: int = 8, max_len_three: int = 6) -> Failures:
    fails = []
    ops = dict(_OPS)
    for max_len, values in ((max_len_two, 2), (max_len_three, 3)):
        for w in all_canonical_words_upto(max_len, values):
            for i in range(1, values):
                for name, op in _OPS:
                    v = op(w, i)
                    if v is None:
                        continue
                    back = ops[_INVERSE[name]](v, i)
                    if back != w:
                        fails.append(f"{_INVERSE[name]}_{i}({name}_{i}({w})) = {back} != {w}")
                        if len(fails) > 5:
                            return fails
    return fails


def criterion_3_walk_rectification(max_len: int = 8) -> Failures:
    fails = []
    for w in all_canonical_words_upto(max_len, 2):
        shape_info = rect_shape(walk(w))
        rect = rectify_word(w)
        p, q = shifted_rsk(w)
        for label, t in (("rectify", rect), ("rsk", p)):
            if t.shape.outer != shape_info.shape:
                fails.append(f"{label}({w}) shape {t.shape.outer} != {shape_info.shape}")
            else:
                ones = sum(1 for l in (t.rows[0] if t.rows else ()) if l.value == 1)
                if ones != shape_info.first_row_ones:
                    fails.append(f"{label}({w}) first-row ones {ones} != "
                                 f"{shape_info.first_row_ones}")
                has2p = any(l.primed for row in t.rows for l in row)
                if has2p != shape_info.has_two_prime:
                    fails.append(f"{label}({w}) two-prime flag {has2p} != "
                                 f"{shape_info.has_two_prime}")
        if rect != p:
            fails.append(f"rectify({w}) != rsk insertion tableau")
        if circled_positions_fast(w) != q.circled:
            fails.append(f"one-pass circling differs from rsk circles on {w}")
        if len(fails) > 10:
            return fails
    return fails


def criterion_4_knuth_invariance(max_len: int = 7) -> Failures:
    fails = []
    for w in all_canonical_words_upto(max_len, 2):
        end = walk(w).endpoint
        for v in knuth_moves(w):
            if walk(v).endpoint != end:
                fails.append(f"move {w} -> {v} changes the endpoint "
                             f"{end} -> {walk(v).endpoint}")
                if len(fails) > 5:
                    return fails
    return fails


def _raising_killed(w: Word, n: int) -> bool:
    return all(apply_unprimed(w, i, RAISE) is None and apply_primed(w, i, RAISE) is None
               for i in range(1, n))


def _rect_rows_constant(p: ShiftedTableau) -> bool:
    return all(l.value == r + 1 and not l.primed
               for r, row in enumerate(p.rows) for l in row)


def criterion_5_ballot_agreement(max_cells: int = 7, n: int = 3,
                                 max_word_len: int = 8) -> Failures:
    fails = []
    for lam in strict_partitions(max_cells):
        for mu in substrict_partitions(lam):
            shape = SkewShape(lam, mu)
            for t in enumerate_tableaux(shape, n, CANONICAL):
                w = reading_word(t)
                b1 = is_ballot(w, n)
                b2 = is_littlewood_richardson(t)
                b3 = _raising_killed(w, n)
                if not b1 == b2 == b3:
                    fails.append(f"tableau of shape {shape} word {w}: "
                                 f"walk={b1} rect={b2} killed={b3}")
                    if len(fails) > 5:
                        return fails
    for w in all_canonical_words_upto(max_word_len, n):
        b1 = is_ballot(w, n)
        b2 = _rect_rows_constant(shifted_rsk(w)[0])
        b3 = _raising_killed(w, n)
        if not b1 == b2 == b3:
            fails.append(f"word {w}: walk={b1} rect={b2} killed={b3}")
            if len(fails) > 5:
                return fails
    return fails


def criterion_6_coplacticity(max_cells: int = 7, n: int = 2) -> Failures:
    from .crystal import apply_tableau_operator

    fails = []
    kinds = [(i, primed, direction)
             for i in range(1, n) for primed in (False, True)
             for direction in (LOWER, RAISE)]
    for lam in strict_partitions(max_cells):
        for mu in substrict_partitions(lam):
            shape = SkewShape(lam, mu)
            if shape.size == 0:
                continue
            for t in enumerate_tableaux(shape, n, CANONICAL):
                slides = [(inner_slide, c) for c in inner_corners(shape)]
                slides += [(outer_slide, c) for c in outer_corner_positions(shape)]
                for slide, corner in slides:
                    s_t = slide(t, corner)[0]
                    for (i, primed, direction) in kinds:
                        ot = apply_tableau_operator(t, i, primed, direction)
                        o_st = apply_tableau_operator(s_t, i, primed, direction)
                        if (ot is None) != (o_st is None):
                            fails.append(f"definedness differs across slide {corner} "
                                         f"on {reading_word(t)}")
                        elif ot is not None and slide(ot, corner)[0] != o_st:
                            fails.append(f"slide {corner} does not commute with "
                                         f"({i},{primed},{direction}) on {reading_word(t)}")
                        if len(fails) > 5:
                            return fails
    return fails


def criterion_7_kashiwara(max_size: int = 6, max_n: int = 3) -> Failures:
    fails = []
    for lam in strict_partitions(max_size):
        for n in range(1, max_n + 1):
            graph = build_crystal(SkewShape(lam, ()), n)
            for primed in (False, True):
                fails.extend(f"ShST({lam},{n}) {'primed' if primed else 'unprimed'}: {v}"
                             for v in verify_kashiwara(graph, primed))
            if len(fails) > 5:
                return fails
    return fails


def criterion_8_decomposition(max_size: int = 6, n: int = 3) -> Failures:
    from .rsk import recording_tableau

    fails = []
    for lam in strict_partitions(max_size):
        for mu in substrict_partitions(lam):
            shape = SkewShape(lam, mu)
            graph = build_crystal(shape, n)
            try:
                coeffs = lr_coefficients(shape, n)
            except ValueError as exc:
                fails.append(f"{shape}: {exc}")
                continue
            # unique raising-killed vertex per component, which is the unique
            # ballot member of its dual-equivalence class
            comap = {}
            for comp in graph.components():
                try:
                    top = graph.highest_weight_vertex(comp)
                except ValueError as exc:
                    fails.append(f"{shape}: {exc}")
                    continue
                if not is_littlewood_richardson(graph.vertices[top]):
                    fails.append(f"{shape}: highest vertex {graph.word(top)} not ballot")
                for v in comp:
                    comap[v] = frozenset(comp)
            by_class: dict = {}
            for v in range(len(graph.vertices)):
                key = recording_tableau(graph.word(v))
                by_class.setdefault(key, set()).add(v)
            classes = {frozenset(vs) for vs in by_class.values()}
            if classes != set(comap.values()):
                fails.append(f"{shape}: components differ from dual-equivalence classes")
            # character identity
            lhs = schur_q(shape, n)
            rhs = QPolynomial.zero(n)
            for nu, f in coeffs.items():
                rhs = rhs + f * schur_q(SkewShape(nu, ()), n)
            if lhs != rhs:
                fails.append(f"{shape}: Q_skew != sum of f * Q_nu")
            if character(graph) != lhs:
                fails.append(f"{shape}: crystal character != Q polynomial")
            if len(fails) > 5:
                return fails
    return fails


def criterion_9_symmetry(max_size: int = 6, n: int = 3) -> Failures:
    fails = []
    for lam in strict_partitions(max_size):
        for mu in substrict_partitions(lam):
            poly = schur_q(SkewShape(lam, mu), n)
            if not poly.is_symmetric():
                fails.append(f"Q_{lam}/{mu} not symmetric")
                if len(fails) > 5:
                    return fails
    return fails


def _mutations(g: LabeledGraph, rng: random.Random) -> LabeledGraph | None:
    """One random structural mutation; returns None when not applicable."""
    ids = sorted(g.weights, key=str)
    kind = rng.randrange(5)
    edges = list(g.edges)
    if kind == 0 and edges:  # delete an edge
        edges.pop(rng.randrange(len(edges)))
        return LabeledGraph(g.n, dict(g.weights), tuple(edges))
    if kind == 1 and edges:  # flip the primed flag
        k = rng.randrange(len(edges))
        s, d, i, p = edges[k]
        edges[k] = (s, d, i, not p)
        try:
            return LabeledGraph(g.n, dict(g.weights), tuple(edges))
        except ValueError:
            return None
    if kind == 2 and edges:  # redirect an edge
        k = rng.randrange(len(edges))
        s, d, i, p = edges[k]
        d2 = rng.choice(ids)
        if d2 == d:
            return None
        edges[k] = (s, d2, i, p)
        try:
            return LabeledGraph(g.n, dict(g.weights), tuple(edges))
        except ValueError:
            return None
    if kind == 3:  # perturb a weight
        v = rng.choice(ids)
        wt = list(g.weights[v])
        j = rng.randrange(len(wt))
        wt[j] += rng.choice((-1, 1))
        weights = dict(g.weights)
        weights[v] = tuple(wt)
        return LabeledGraph(g.n, weights, g.edges)
    if kind == 4 and len(ids) >= 2:  # add an extra edge
        s, d = rng.sample(ids, 2)
        i = rng.randrange(1, g.n) if g.n > 1 else 1
        p = rng.random() < 0.5
        try:
            return LabeledGraph(g.n, dict(g.weights), g.edges + ((s, d, i, p),))
        except ValueError:
            return None
    return None


def _trips_a_checker(g: LabeledGraph) -> bool:
    reports = check_all(g)
    if any(not r.ok for r in reports):
        return True
    try:
        top = unique_maximum(g)
    except ValueError:
        return True
    return not is_strict_with_trailing_zeros(g.weight(top))


def criterion_10_axiom_suite(mutations: int = 1000, seed: int = 0,
                             max_size: int = 6, n: int = 3) -> Failures:
    fails = []
    models = []
    for lam in strict_partitions(max_size):
        models.append((lam, 3, crystal_to_labeled(build_crystal(SkewShape(lam, ()), 3))))
    models.append(((3, 2, 1), 4, crystal_to_labeled(build_crystal(SkewShape((3, 2, 1), ()), 4))))
    for lam, nn, g in models:
        for report in check_all(g):
            if not report.ok:
                fails.append(f"model ShST({lam},{nn}) fails {report.axiom}: "
                             f"{report.witnesses[:1]}")
    if fails:
        return fails
    # skew components vs straight models
    for lam in strict_partitions(min(max_size, 5)):
        for mu in substrict_partitions(lam):
            if not mu:
                continue
            graph = build_crystal(SkewShape(lam, mu), n)
            labeled = crystal_to_labeled(graph)
            for comp in graph.components():
                ids = {str(graph.word(v)) for v in comp}
                sub = LabeledGraph(n, {v: labeled.weights[v] for v in ids},
                                   tuple(e for e in labeled.edges if e[0] in ids))
                top = unique_maximum(sub)
                nu = strip_zeros(sub.weight(top))
                model = crystal_to_labeled(build_crystal(SkewShape(nu, ()), n))
                result = canonical_isomorphism(sub, model)
                if not isinstance(result, dict):
                    fails.append(f"{lam}/{mu} component of {top}: {result}")
                    if len(fails) > 5:
                        return fails
    # mutation fuzz
    rng = random.Random(seed)
    fuzz_models = [g for lam, nn, g in models if 2 <= len(g.weights) <= 40]
    done = 0
    while done < mutations:
        g = rng.choice(fuzz_models)
        mutated = _mutations(g, rng)
        if mutated is None:
            continue
        done += 1
        if not _trips_a_checker(mutated):
            fails.append(f"mutation #{done} slipped past every checker")
            if len(fails) > 5:
                return fails
    return fails


def criterion_11_not_seminormal() -> Failures:
    graph = build_crystal(SkewShape((4, 1), ()), 2)
    witnesses = seminormality_witnesses(graph, 1, primed=False)
    if not witnesses:
        return ["no vertex of ShST((4,1),2) has hat-phi_1 != phi_1"]
    return []


CRITERIA: list[tuple[str, Callable[..., Failures]]] = [
    ("1a walk endpoint", criterion_1a),
    ("1b long F-chain", criterion_1b),
    ("1c F(121)", criterion_1c),
    ("1d F_1/F_2 splice", criterion_1d),
    ("1e RSK circles", criterion_1e),
    ("1f primed chains", criterion_1f),
    ("2 partial inverses", criterion_2_partial_inverses),
    ("3 walk vs rectification", criterion_3_walk_rectification),
    ("4 Knuth invariance", criterion_4_knuth_invariance),
    ("5 ballot agreement", criterion_5_ballot_agreement),
    ("6 coplacticity", criterion_6_coplacticity),
    ("7 Kashiwara axioms", criterion_7_kashiwara),
    ("8 decomposition", criterion_8_decomposition),
    ("9 symmetry", criterion_9_symmetry),
    ("10 axiom suite", criterion_10_axiom_suite),
    ("11 not seminormal", criterion_11_not_seminormal),
]


def run_selftest(max_size: int | None = None, seed: int = 0,
                 out=print) -> bool:
    """Run every criterion, printing one line each; True iff all pass.
    max_size caps the exhaustive ranges for a faster run."""
    cap = (lambda k: k) if max_size is None else (lambda k: min(k, max_size))
    sized: dict[str, Callable[[], Failures]] = {
        "2 partial inverses": lambda: criterion_2_partial_inverses(cap(8), cap(6)),
        "3 walk vs rectification": lambda: criterion_3_walk_rectification(cap(8)),
        "4 Knuth invariance": lambda: criterion_4_knuth_invariance(cap(7)),
        "5 ballot agreement": lambda: criterion_5_ballot_agreement(cap(7), 3, cap(8)),
        "6 coplacticity": lambda: criterion_6_coplacticity(cap(7)),
        "7 Kashiwara axioms": lambda: criterion_7_kashiwara(cap(6)),
        "8 decomposition": lambda: criterion_8_decomposition(cap(6)),
        "9 symmetry": lambda: criterion_9_symmetry(cap(6)),
        "10 axiom suite": lambda: criterion_10_axiom_suite(
            1000 if max_size is None else 100, seed, cap(6)),
    }
    all_ok = True
    for name, fn in CRITERIA:
        runner = sized.get(name, fn)
        t0 = time.monotonic()
        fails = runner()
        dt = time.monotonic() - t0
        if fails:
            all_ok = False
            out(f"criterion {name}: FAIL ({dt:.1f}s) - {fails[0]}")
        else:
            out(f"criterion {name}: PASS ({dt:.1f}s)")
    return all_ok
