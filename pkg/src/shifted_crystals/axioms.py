"""Local-axiom checking for weighted, edge-labeled digraphs, and the
canonical isomorphism between axiom-satisfying graphs.

A graph to be checked has vertices weighted by Z^n and directed edges
labeled (i, primed) for 1 <= i <= n-1.  The four axioms:

  A1  at most one incoming and one outgoing edge per label at each vertex,
      and every (i, .) edge drops the weight by the simple root alpha_i;
  A2  each (i, i')-connected piece is a two-row grid (i-chains joined by
      vertical i'-edges) or a single row with coinciding i and i' edges;
  A3  edge families with |i - j| > 1 commute;
  A4  each component of the (i, i+1)-edge subgraph is isomorphic to the
      tableau crystal of its maximum's truncated weight on a 3-letter
      alphabet.

A connected graph passing all four has a unique maximal element whose
weight is a strict partition, and any two such graphs with equal maximal
weight are canonically isomorphic (matched layer by layer from the top).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Sequence

Label = tuple[int, bool]


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    weights: dict  # id -> tuple[int, ...]
    edges: tuple   # (src, dst, i, primed)

    def __post_init__(self):
        out: dict[tuple, object] = {}
        inc: dict[tuple, object] = {}
        multi = []
        for (src, dst, i, primed) in self.edges:
            if src not in self.weights or dst not in self.weights:
                raise ValueError(f"edge ({src},{dst}) references unknown vertex")
            if (src, i, primed) in out:
                multi.append(("out", src, i, primed))
            if (dst, i, primed) in inc:
                multi.append(("in", dst, i, primed))
            out[(src, i, primed)] = dst
            inc[(dst, i, primed)] = src
        object.__setattr__(self, "_out", out)
        object.__setattr__(self, "_in", inc)
        object.__setattr__(self, "_multi", tuple(multi))

    def vertices(self):
        return self.weights.keys()

    def f(self, v, i: int, primed: bool):
        return self._out.get((v, i, primed))

    def e(self, v, i: int, primed: bool):
        return self._in.get((v, i, primed))

    def weight(self, v) -> tuple[int, ...]:
        return self.weights[v]

    def components(self, labels: Iterable[Label] | None = None) -> list[list]:
        allowed = set(labels) if labels is not None else None
        adj: dict = {v: [] for v in self.weights}
        for (src, dst, i, primed) in self.edges:
            if allowed is None or (i, primed) in allowed:
                adj[src].append(dst)
                adj[dst].append(src)
        seen = set()
        comps = []
        for v in sorted(self.weights, key=str):
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                u = stack.pop()
                comp.append(u)
                for nb in adj[u]:
                    if nb not in seen:
                        seen.add(nb)
                        stack.append(nb)
            comps.append(sorted(comp, key=str))
        return comps

    def to_json_dict(self) -> dict:
        verts = [{"id": str(v), "weight": list(wt)}
                 for v, wt in sorted(self.weights.items(), key=lambda kv: str(kv[0]))]
        edges = [{"src": str(s), "dst": str(d), "i": i, "primed": p}
                 for (s, d, i, p) in sorted(self.edges, key=str)]
        return {"n": self.n, "vertices": verts, "edges": edges}


def labeled_graph_from_json(data: dict | str) -> LabeledGraph:
    if isinstance(data, str):
        data = json.loads(data)
    weights = {v["id"]: tuple(v["weight"]) for v in data["vertices"]}
    edges = tuple((e["src"], e["dst"], e["i"], bool(e["primed"])) for e in data["edges"])
    return LabeledGraph(int(data["n"]), weights, edges)


def crystal_to_labeled(graph) -> LabeledGraph:
    """Shared ingestion format with the crystal builder."""
    data = graph.to_json_dict()
    return labeled_graph_from_json(data)


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    ok: bool
    witnesses: tuple[str, ...] = ()

    def __str__(self) -> str:
        head = f"{self.axiom}: {'pass' if self.ok else 'FAIL'}"
        return head if self.ok else head + "".join(f"\n  {w}" for w in self.witnesses)


def _alpha(n: int, i: int) -> tuple[int, ...]:
    a = [0] * n
    a[i - 1] = 1
    if i < n:
        a[i] = -1
    return tuple(a)


def check_a1(g: LabeledGraph) -> AxiomReport:
    witnesses = [f"multiple {kind} edges labeled ({i}{'~' if p else ''}) at {v}"
                 for (kind, v, i, p) in g._multi]
    for (src, dst, i, primed) in g.edges:
        if not 1 <= i <= g.n - 1:
            witnesses.append(f"edge label {i} out of range at ({src},{dst})")
            continue
        expect = tuple(a - b for a, b in zip(g.weight(src), _alpha(g.n, i)))
        if g.weight(dst) != expect:
            witnesses.append(f"edge {src}->{dst} ({i}{chr(39) if primed else ''}) breaks "
                             f"the weight rule: {g.weight(dst)} != {expect}")
    return AxiomReport("A1", not witnesses, tuple(witnesses))


def _grid_or_row(g: LabeledGraph, comp: list, i: int) -> tuple[bool, str]:
    """Match a component of the (i, i')-edges against the two templates."""
    single = all(g.f(v, i, False) == g.f(v, i, True) and
                 g.e(v, i, False) == g.e(v, i, True) for v in comp)
    if single:
        heads = [v for v in comp if g.e(v, i, False) is None]
        if len(heads) != 1:
            return False, f"coinciding-edge row with {len(heads)} heads"
        cur, count = heads[0], 1
        while g.f(cur, i, False) is not None:
            cur = g.f(cur, i, False)
            count += 1
        if count != len(comp):
            return False, "coinciding-edge row does not cover its component"
        return True, ""
    top = [v for v in comp if g.e(v, i, True) is None]
    bottom = [v for v in comp if g.f(v, i, True) is None]
    if len(top) + len(bottom) != len(comp) or set(top) & set(bottom):
        return False, "vertices not split into grid rows by the primed edges"
    heads = [v for v in top if g.e(v, i, False) is None]
    if len(heads) != 1:
        return False, f"grid top row with {len(heads)} heads"
    t, b = heads[0], g.f(heads[0], i, True)
    if b is None:
        return False, "grid top head has no primed edge down"
    seen = 0
    while True:
        seen += 2
        if g.f(t, i, True) != b or (b is not None and g.e(b, i, True) != t):
            return False, f"primed edge mismatch at column of {t}"
        nt, nb = g.f(t, i, False), g.f(b, i, False)
        if (nt is None) != (nb is None):
            return False, f"grid rows have different lengths after {t}"
        if nt is None:
            break
        t, b = nt, nb
    if seen != len(comp):
        return False, "grid does not cover its component"
    return True, ""


def check_a2(g: LabeledGraph) -> AxiomReport:
    witnesses = []
    for i in range(1, g.n):
        for comp in g.components([(i, False), (i, True)]):
            ok, why = _grid_or_row(g, comp, i)
            if not ok:
                witnesses.append(f"i={i}, component of {comp[0]}: {why}")
    return AxiomReport("A2", not witnesses, tuple(witnesses))


def string_lengths(g: LabeledGraph, v, i: int) -> dict[str, int]:
    """hat-phi/phi'/phi and the eps analogues at v for index i.  phi is the
    total distance to the bottom of the (i, i')-piece, so in a two-row grid
    it is the sum of the unprimed and primed chain distances."""
    def chain(start, step) -> int:
        count, cur = 0, start
        while True:
            nxt = step(cur)
            if nxt is None:
                return count
            cur, count = nxt, count + 1

    hat_phi = chain(v, lambda u: g.f(u, i, False))
    phi_p = chain(v, lambda u: g.f(u, i, True))
    hat_eps = chain(v, lambda u: g.e(u, i, False))
    eps_p = chain(v, lambda u: g.e(u, i, True))
    coinciding = g.f(v, i, False) == g.f(v, i, True) and g.e(v, i, False) == g.e(v, i, True)
    if coinciding:
        phi, eps = hat_phi, hat_eps
    else:
        phi, eps = hat_phi + phi_p, hat_eps + eps_p
    return {"hat_phi": hat_phi, "phi_prime": phi_p, "phi": phi,
            "hat_eps": hat_eps, "eps_prime": eps_p, "eps": eps}


def check_a3(g: LabeledGraph) -> AxiomReport:
    witnesses = []
    for v in g.vertices():
        for i in range(1, g.n):
            for j in range(i + 2, g.n):
                for a in ((i, False), (i, True)):
                    for b in ((j, False), (j, True)):
                        for move_a, move_b, word in ((g.f, g.f, "lowering"),
                                                     (g.e, g.e, "raising")):
                            va = move_a(v, *a)
                            vb = move_b(v, *b)
                            if va is None or vb is None:
                                continue
                            ab = move_b(va, *b)
                            ba = move_a(vb, *a)
                            if ab is None or ab != ba:
                                witnesses.append(
                                    f"{word} {a} and {b} do not commute at {v}")
    return AxiomReport("A3", not witnesses, tuple(witnesses))


def _truncated_weights(g: LabeledGraph, i: int) -> dict:
    out = {}
    for v, wt in g.weights.items():
        padded = tuple(wt) + (0, 0)
        out[v] = padded[i - 1:i + 2]
    return out


def _subgraph_two_labels(g: LabeledGraph, i: int) -> LabeledGraph:
    """The (i, i+1)-edge subgraph, relabeled to 1, 2 with weights truncated
    to coordinates i, i+1, i+2."""
    weights = _truncated_weights(g, i)
    edges = tuple((s, d, ii - i + 1, p) for (s, d, ii, p) in g.edges if ii in (i, i + 1))
    return LabeledGraph(3, weights, edges)


@lru_cache(maxsize=None)
def _model_crystal(lam: tuple[int, ...], n: int) -> LabeledGraph:
    from .crystal import build_crystal
    from .tableaux import SkewShape

    return crystal_to_labeled(build_crystal(SkewShape(lam, ()), n))


def is_strict_with_trailing_zeros(wt: Sequence[int]) -> bool:
    core = list(wt)
    while core and core[-1] == 0:
        core.pop()
    if any(a <= 0 for a in core):
        return False
    return all(core[k] > core[k + 1] for k in range(len(core) - 1))


def unique_maximum(g: LabeledGraph):
    """The unique vertex with no incoming edge; raises when not unique."""
    maxima = [v for v in g.vertices()
              if not any((v, i, p) in g._in for i in range(1, g.n) for p in (False, True))]
    if len(maxima) != 1:
        raise ValueError(f"expected a unique maximal vertex, found {len(maxima)}")
    return maxima[0]


def check_a4(g: LabeledGraph,
             model: Callable[[tuple[int, ...]], LabeledGraph] | None = None) -> AxiomReport:
    """Components of each (i, i+1)-edge subgraph must match the 3-letter
    tableau crystal of their maximum's truncated weight; vacuous for n < 3."""
    witnesses = []
    builder = model or (lambda lam: _model_crystal(lam, 3))
    for i in range(1, g.n - 1):
        sub = _subgraph_two_labels(g, i)
        for comp in sub.components():
            restricted = LabeledGraph(
                3, {v: sub.weights[v] for v in comp},
                tuple(e for e in sub.edges if e[0] in set(comp)))
            try:
                top = unique_maximum(restricted)
            except ValueError as exc:
                witnesses.append(f"i={i}, component of {comp[0]}: {exc}")
                continue
            wt = restricted.weight(top)
            if not is_strict_with_trailing_zeros(wt):
                witnesses.append(f"i={i}: maximum weight {wt} is not a strict partition")
                continue
            lam = tuple(a for a in wt if a)
            result = canonical_isomorphism(restricted, builder(lam))
            if not isinstance(result, dict):
                witnesses.append(f"i={i}, component of {comp[0]}: {result}")
    return AxiomReport("A4", not witnesses, tuple(witnesses))


def check_all(g: LabeledGraph) -> list[AxiomReport]:
    reports = [check_a1(g)]
    if reports[0].ok:
        reports.append(check_a2(g))
        reports.append(check_a3(g))
        reports.append(check_a4(g))
    return reports


def canonical_isomorphism(g: LabeledGraph, h: LabeledGraph):
    """Match two connected axiom-satisfying graphs layer by layer from
    their maxima.  Returns the vertex bijection as a dict, or a string
    witness describing the first mismatch."""
    if g.n != h.n:
        return f"variable counts differ: {g.n} vs {h.n}"
    if len(g.weights) != len(h.weights):
        return f"vertex counts differ: {len(g.weights)} vs {len(h.weights)}"
    try:
        gstar, hstar = unique_maximum(g), unique_maximum(h)
    except ValueError as exc:
        return str(exc)
    if g.weight(gstar) != h.weight(hstar):
        return (f"maximal weights differ: {g.weight(gstar)} vs {h.weight(hstar)}")
    mapping = {gstar: hstar}
    queue = [gstar]
    labels = [(i, p) for i in range(1, g.n) for p in (False, True)]
    while queue:
        nxt = []
        for u in queue:
            for (i, p) in labels:
                gu = g.f(u, i, p)
                hu = h.f(mapping[u], i, p)
                if (gu is None) != (hu is None):
                    return f"edge ({i},{p}) present at only one of {u}/{mapping[u]}"
                if gu is None:
                    continue
                if gu in mapping:
                    if mapping[gu] != hu:
                        return f"two paths to {gu} map to different vertices"
                else:
                    mapping[gu] = hu
                    nxt.append(gu)
        queue = nxt
    if len(mapping) != len(g.weights):
        return "graph is not connected below its maximum"
    if len(set(mapping.values())) != len(mapping):
        return "mapping is not injective"
    for v, w in mapping.items():
        if g.weight(v) != h.weight(w):
            return f"weights differ at {v}: {g.weight(v)} vs {h.weight(w)}"
        for i in range(1, g.n):
            if string_lengths(g, v, i) != string_lengths(h, w, i):
                return f"string lengths differ at {v} for i={i}"
    for (src, dst, i, p) in g.edges:
        if h.f(mapping[src], i, p) != mapping[dst]:
            return f"edge {src}->{dst} ({i},{p}) not matched in the image"
    return mapping
