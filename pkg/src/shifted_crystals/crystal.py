"""Doubled crystal graphs on shifted tableaux or word sets.

Vertices carry weights in Z^n; for each index i = 1..n-1 there are two
lowering edge families, i (unprimed) and i' (primed).  Raising edges are
the reverses.  The auxiliary functions phi_i, eps_i of a vertex are the
endpoint coordinates of the (i, i+1) lattice walk of its reading word.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple, Sequence

from .jdt import is_littlewood_richardson
from .polynomials import QPolynomial
from .primed import LOWER, RAISE, apply_primed
from .rsk import recording_tableau
from .tableaux import (
    CANONICAL,
    PVARIANT,
    QVARIANT,
    ShiftedTableau,
    SkewShape,
    enumerate_tableaux,
    reading_word,
)
from .unprimed import apply_unprimed
from .walks import walk
from .words import Word, subword


class Edge(NamedTuple):
    src: int
    dst: int
    i: int
    primed: bool


def apply_word_operator(w: Word, i: int, primed: bool, direction: str) -> Word | None:
    if primed:
        return apply_primed(w, i, direction)
    return apply_unprimed(w, i, direction)


def apply_tableau_operator(t: ShiftedTableau, i: int, primed: bool,
                           direction: str) -> ShiftedTableau | None:
    """Apply a raising/lowering operator through the reading word; the
    changed letters are written back into the same cells."""
    w = reading_word(t)
    res = apply_word_operator(w, i, primed, direction)
    if res is None:
        return None
    return t.with_reading_letters(res.letters)


def _vertex_word(v) -> Word:
    return reading_word(v) if isinstance(v, ShiftedTableau) else v


def _apply(v, i: int, primed: bool, direction: str):
    if isinstance(v, ShiftedTableau):
        return apply_tableau_operator(v, i, primed, direction)
    return apply_word_operator(v, i, primed, direction)


@dataclass(frozen=True)
class CrystalGraph:
    vertices: tuple
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        out: dict[tuple[int, int, bool], int] = {}
        inc: dict[tuple[int, int, bool], int] = {}
        for e in self.edges:
            key = (e.src, e.i, e.primed)
            if key in out:
                raise ValueError(f"duplicate outgoing edge {key}")
            out[key] = e.dst
            key = (e.dst, e.i, e.primed)
            if key in inc:
                raise ValueError(f"duplicate incoming edge {key}")
            inc[key] = e.src
        object.__setattr__(self, "_out", out)
        object.__setattr__(self, "_in", inc)

    def lower(self, v: int, i: int, primed: bool) -> int | None:
        return self._out.get((v, i, primed))

    def raise_(self, v: int, i: int, primed: bool) -> int | None:
        return self._in.get((v, i, primed))

    def weight(self, v: int) -> tuple[int, ...]:
        return _vertex_word(self.vertices[v]).weight(self.n)

    def word(self, v: int) -> Word:
        return _vertex_word(self.vertices[v])

    def epsilon_phi(self, v: int, i: int) -> tuple[int, int]:
        """(phi_i, eps_i): endpoint of the (i, i+1) walk of the reading word.
        The empty subword gives (0, 0)."""
        x, y = walk(subword(self.word(v), i)).endpoint
        return (x, y)

    def chain_length(self, v: int, i: int, primed: bool, direction: str) -> int:
        """Distance to the end of the single-operator chain through v."""
        count = 0
        cur = v
        step = self.lower if direction == LOWER else self.raise_
        while True:
            nxt = step(cur, i, primed)
            if nxt is None:
                return count
            cur = nxt
            count += 1

    def components(self) -> list[list[int]]:
        """Connected components under all edges, each sorted, listed by
        their smallest vertex."""
        adj: dict[int, set[int]] = {v: set() for v in range(len(self.vertices))}
        for e in self.edges:
            adj[e.src].add(e.dst)
            adj[e.dst].add(e.src)
        seen: set[int] = set()
        comps = []
        for v in range(len(self.vertices)):
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
            comps.append(sorted(comp))
        return comps

    def highest_weight_vertex(self, component: Sequence[int]) -> int:
        """The unique vertex of the component with no incoming edges."""
        killed = [v for v in component
                  if not any((v, i, primed) in self._in
                             for i in range(1, self.n) for primed in (False, True))]
        if len(killed) != 1:
            raise ValueError(f"component has {len(killed)} raising-killed vertices, "
                             f"expected exactly 1: {sorted(killed)}")
        return killed[0]

    def to_json_dict(self) -> dict:
        verts = [{"id": str(self.word(v)), "word": str(self.word(v)),
                  "weight": list(self.weight(v))} for v in range(len(self.vertices))]
        edges = [{"src": str(self.word(e.src)), "dst": str(self.word(e.dst)),
                  "i": e.i, "primed": e.primed} for e in self.edges]
        edges.sort(key=lambda d: (d["src"], d["i"], d["primed"], d["dst"]))
        return {"n": self.n, "vertices": verts, "edges": edges}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    def to_dot(self) -> str:
        lines = ["digraph crystal {"]
        for v in range(len(self.vertices)):
            wt = ",".join(map(str, self.weight(v)))
            lines.append(f'  v{v} [label="{self.word(v)}\\n({wt})"];')
        for e in sorted(self.edges):
            style = "dashed" if e.primed else "solid"
            label = f"{e.i}'" if e.primed else str(e.i)
            lines.append(f'  v{e.src} -> v{e.dst} [label="{label}", style={style}];')
        lines.append("}")
        return "\n".join(lines)


def _build(vertices: list, n: int) -> CrystalGraph:
    index = {v: k for k, v in enumerate(vertices)}
    if len(index) != len(vertices):
        raise ValueError("duplicate vertices")
    edges = []
    for k, v in enumerate(vertices):
        for i in range(1, n):
            for primed in (False, True):
                tgt = _apply(v, i, primed, LOWER)
                if tgt is not None:
                    if tgt not in index:
                        raise ValueError(f"vertex set not closed: {v} -{i}{primed}-> {tgt}")
                    j = index[tgt]
                    back = _apply(tgt, i, primed, RAISE)
                    if back != v:
                        raise ValueError(f"raising edge does not invert lowering at {v}")
                    edges.append(Edge(k, j, i, primed))
    return CrystalGraph(tuple(vertices), n, tuple(edges))


def build_crystal(shape: SkewShape, n: int) -> CrystalGraph:
    """The doubled crystal on all canonical tableaux of the shape."""
    return _build(list(enumerate_tableaux(shape, n, CANONICAL)), n)


def build_word_crystal(words: Iterable[Word], n: int) -> CrystalGraph:
    """The doubled crystal on a set of words closed under all operators."""
    return _build(list(words), n)


def character(source: CrystalGraph | Iterable, n: int | None = None) -> QPolynomial:
    """Sum of 2^(nonzero weight parts) x^wt over the vertices."""
    if isinstance(source, CrystalGraph):
        nn = source.n
        weights = [source.weight(v) for v in range(len(source.vertices))]
    else:
        items = list(source)
        if n is None:
            raise ValueError("character of a plain collection needs n")
        nn = n
        weights = [_vertex_word(v).weight(nn) for v in items]
    poly = QPolynomial.zero(nn)
    for wt in weights:
        k = sum(1 for a in wt if a)
        poly.add_term(wt, 2 ** k)
    return poly


def schur_q(shape: SkewShape, n: int) -> QPolynomial:
    """Generating function of the Q-variant tableaux (primes anywhere)."""
    poly = QPolynomial.zero(n)
    for t in enumerate_tableaux(shape, n, QVARIANT):
        poly.add_term(t.weight(n), 1)
    return poly


def schur_p(shape: SkewShape, n: int) -> QPolynomial:
    """Generating function of the P-variant tableaux (no diagonal primes)."""
    poly = QPolynomial.zero(n)
    for t in enumerate_tableaux(shape, n, PVARIANT):
        poly.add_term(t.weight(n), 1)
    return poly


def strip_zeros(wt: Sequence[int]) -> tuple[int, ...]:
    wt = list(wt)
    while wt and wt[-1] == 0:
        wt.pop()
    return tuple(wt)


def lr_coefficients(shape: SkewShape, n: int) -> dict[tuple[int, ...], int]:
    """Coefficients f of Q_shape = sum_nu f * Q_nu, computed two ways that
    must agree: by counting crystal components by highest weight, and by
    counting skew tableaux whose rectification rows are constant."""
    graph = build_crystal(shape, n)
    by_components: dict[tuple[int, ...], int] = {}
    for comp in graph.components():
        top = graph.highest_weight_vertex(comp)
        nu = strip_zeros(graph.weight(top))
        if any(nu[k] <= nu[k + 1] for k in range(len(nu) - 1)):
            raise ValueError(f"highest weight {nu} is not a strict partition")
        by_components[nu] = by_components.get(nu, 0) + 1
    direct: dict[tuple[int, ...], int] = {}
    for t in enumerate_tableaux(shape, n, CANONICAL):
        if is_littlewood_richardson(t):
            nu = strip_zeros(t.weight(n))
            direct[nu] = direct.get(nu, 0) + 1
    if by_components != direct:
        raise ValueError("component counts and direct Littlewood-Richardson counts "
                         f"disagree: {by_components} vs {direct}")
    return dict(sorted(by_components.items()))


def verify_kashiwara(graph: CrystalGraph, primed: bool) -> list[str]:
    """Check the Kashiwara axioms for one operator family, sharing the
    weight and the walk-endpoint auxiliary functions.

    K1: lowering edges are inverted by the raising operator and shift
    phi by -1, eps by +1 and the weight by the negative simple root.
    K2: phi_i - eps_i = wt_i - wt_{i+1} at every vertex.  (K3 is vacuous:
    the auxiliary functions never take the value -infinity.)
    """
    violations = []
    nverts = len(graph.vertices)
    for v in range(nverts):
        wt = graph.weight(v)
        for i in range(1, graph.n):
            phi, eps = graph.epsilon_phi(v, i)
            if phi - eps != wt[i - 1] - wt[i]:
                violations.append(f"K2 fails at vertex {v}, i={i}: "
                                  f"phi-eps={phi - eps}, wt_i-wt_i+1={wt[i - 1] - wt[i]}")
            w = graph.lower(v, i, primed)
            recomputed = _apply(graph.vertices[v], i, primed, LOWER)
            stored = graph.vertices[w] if w is not None else None
            if stored != recomputed:
                violations.append(f"K1 fails at vertex {v}, i={i}: stored lowering edge "
                                  f"disagrees with the operator")
                continue
            if w is None:
                continue
            back = _apply(graph.vertices[w], i, primed, RAISE)
            if back != graph.vertices[v]:
                violations.append(f"K1 fails at vertex {v}, i={i}: raising does not invert")
            phi2, eps2 = graph.epsilon_phi(w, i)
            wt2 = graph.weight(w)
            alpha = [0] * graph.n
            alpha[i - 1], alpha[i] = 1, -1
            if phi2 != phi - 1 or eps2 != eps + 1:
                violations.append(f"K1 fails at vertex {v}, i={i}: phi/eps do not shift by 1")
            if list(map(lambda a, b: a - b, wt, wt2)) != alpha:
                violations.append(f"K1 fails at vertex {v}, i={i}: weight does not drop by alpha_i")
    return violations


def seminormality_witnesses(graph: CrystalGraph, i: int = 1,
                            primed: bool = False) -> list[int]:
    """Vertices where the chain distance to the end of the i-string differs
    from phi_i (the crystals are not seminormal, so these exist)."""
    out = []
    for v in range(len(graph.vertices)):
        phi, _ = graph.epsilon_phi(v, i)
        if graph.chain_length(v, i, primed, LOWER) != phi:
            out.append(v)
    return out
