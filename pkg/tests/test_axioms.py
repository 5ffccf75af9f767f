import random

import pytest

from shifted_crystals.axioms import (
    LabeledGraph,
    canonical_isomorphism,
    check_a1,
    check_a2,
    check_a3,
    check_a4,
    check_all,
    crystal_to_labeled,
    is_strict_with_trailing_zeros,
    labeled_graph_from_json,
    string_lengths,
    unique_maximum,
)
from shifted_crystals.crystal import build_crystal
from shifted_crystals.selftest import _mutations, _trips_a_checker
from shifted_crystals.tableaux import SkewShape, straight, strict_partitions


def model(lam, n):
    return crystal_to_labeled(build_crystal(straight(lam), n))


class TestA1:
    def test_models_pass(self):
        for lam, n in (((3, 1), 2), ((2, 1), 3)):
            assert check_a1(model(lam, n)).ok

    def test_single_vertex(self):
        g = LabeledGraph(2, {"v": (1, 0)}, ())
        assert check_a1(g).ok

    def test_duplicate_edge_label(self):
        g = LabeledGraph(2, {"a": (1, 0), "b": (0, 1), "c": (0, 1)},
                         (("a", "b", 1, False), ("a", "c", 1, False)))
        report = check_a1(g)
        assert not report.ok and report.witnesses

    def test_weight_rule(self):
        g = LabeledGraph(2, {"a": (1, 0), "b": (1, 0)}, (("a", "b", 1, False),))
        assert not check_a1(g).ok


class TestA2:
    def test_model_passes(self):
        assert check_a2(model((4, 1), 2)).ok

    def test_empty_graph(self):
        assert check_a2(LabeledGraph(2, {}, ())).ok

    def test_three_cycle_fails(self):
        ws = {"a": (2, 1), "b": (1, 2), "c": (0, 3)}
        g = LabeledGraph(2, ws, (("a", "b", 1, False), ("b", "c", 1, False),
                                 ("c", "a", 1, False)))
        assert not check_a2(g).ok

    def test_string_lengths_on_grid(self):
        g = model((4, 1), 2)
        top = unique_maximum(g)
        lengths = string_lengths(g, top, 1)
        assert lengths["phi"] == lengths["hat_phi"] + lengths["phi_prime"]
        assert lengths["eps"] == 0


class TestA3:
    def test_model_passes(self):
        assert check_a3(model((2, 1), 4)).ok
        assert check_a3(model((3, 2, 1), 4)).ok

    def test_vacuous_for_small_n(self):
        assert check_a3(model((3, 1), 2)).ok

    def test_broken_square_fails(self):
        base = model((2, 1), 4)
        edges = [e for e in base.edges]
        # remove one closing edge of a commuting square with |i-j| > 1
        removed = None
        for (s, d, i, p) in edges:
            if i == 3:
                partner = base.f(s, 1, False)
                if partner is not None and base.f(partner, 3, p) is not None:
                    removed = (partner, base.f(partner, 3, p), 3, p)
                    break
        assert removed is not None
        edges.remove(removed)
        g = LabeledGraph(base.n, dict(base.weights), tuple(edges))
        assert not (check_a3(g).ok and check_a2(g).ok)


class TestA4:
    def test_models_pass(self):
        assert check_a4(model((3, 1), 3)).ok
        assert check_a4(model((2, 1), 4)).ok

    def test_vacuous_for_n2(self):
        assert check_a4(model((5, 1), 2)).ok

    def test_single_vertex(self):
        assert check_a4(LabeledGraph(3, {"v": (2, 1, 0)}, ())).ok

    def test_nonstrict_max_weight_fails(self):
        g = LabeledGraph(3, {"v": (1, 0, 1)}, ())
        assert not check_a4(g).ok


class TestUniqueMaximum:
    def test_model(self):
        g = model((4, 1), 2)
        top = unique_maximum(g)
        assert g.weight(top) == (4, 1)
        assert is_strict_with_trailing_zeros(g.weight(top))

    def test_single_vertex(self):
        g = LabeledGraph(2, {"v": (1, 0)}, ())
        assert unique_maximum(g) == "v"

    def test_not_unique(self):
        g = LabeledGraph(2, {"a": (1, 0), "b": (1, 0)}, ())
        with pytest.raises(ValueError):
            unique_maximum(g)


class TestIsomorphism:
    def test_self_isomorphism_is_identity(self):
        g = model((3, 1), 2)
        result = canonical_isomorphism(g, g)
        assert isinstance(result, dict)
        assert all(k == v for k, v in result.items())

    def test_skew_component_isomorphic_to_model(self):
        graph = build_crystal(SkewShape((3, 1), (1,)), 2)
        labeled = crystal_to_labeled(graph)
        for comp in graph.components():
            ids = {str(graph.word(v)) for v in comp}
            sub = LabeledGraph(2, {v: labeled.weights[v] for v in ids},
                               tuple(e for e in labeled.edges if e[0] in ids))
            top = unique_maximum(sub)
            lam = tuple(a for a in sub.weight(top) if a)
            result = canonical_isomorphism(sub, model(lam, 2))
            assert isinstance(result, dict)

    def test_different_maxima_rejected(self):
        assert isinstance(canonical_isomorphism(model((2,), 2), model((3,), 2)), str)

    def test_roundtrip_inverse(self):
        g, h = model((3, 1), 2), model((3, 1), 2)
        fwd = canonical_isomorphism(g, h)
        back = canonical_isomorphism(h, g)
        assert {v: k for k, v in fwd.items()} == back


class TestJson:
    def test_roundtrip(self):
        g = model((3, 1), 2)
        again = labeled_graph_from_json(g.to_json_dict())
        assert again.weights == g.weights
        assert sorted(again.edges, key=str) == sorted(g.edges, key=str)


class TestMutations:
    def test_hundred_mutations_all_caught(self):
        rng = random.Random(7)
        models = [model((3, 1), 2), model((2, 1), 3)]
        done = 0
        while done < 100:
            g = rng.choice(models)
            mutated = _mutations(g, rng)
            if mutated is None:
                continue
            done += 1
            assert _trips_a_checker(mutated)
