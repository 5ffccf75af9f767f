"""Acceptance gate: every criterion at its full advertised size, one
pass/fail line each (run pytest with -s to see the lines)."""

import pytest

from shifted_crystals import selftest


def _check(name, failures):
    if failures:
        print(f"criterion {name}: FAIL - {failures[0]}")
    else:
        print(f"criterion {name}: PASS")
    assert not failures, f"criterion {name}: {failures[:5]}"


def test_criterion_1a_walk_endpoint():
    _check("1a", selftest.criterion_1a())


def test_criterion_1b_long_lowering_chain():
    _check("1b", selftest.criterion_1b())


def test_criterion_1c_f_of_121():
    _check("1c", selftest.criterion_1c())


def test_criterion_1d_operator_splice():
    _check("1d", selftest.criterion_1d())


def test_criterion_1e_rsk_circles():
    _check("1e", selftest.criterion_1e())


def test_criterion_1f_primed_chains():
    _check("1f", selftest.criterion_1f())


def test_criterion_1_runtime_budget():
    _check("1 (timing)", [f for f in selftest.criterion_1_paper_examples()
                          if "took" in f])


def test_criterion_2_partial_inverses():
    _check("2", selftest.criterion_2_partial_inverses(8, 6))


def test_criterion_3_walk_rectification():
    _check("3", selftest.criterion_3_walk_rectification(8))


def test_criterion_4_knuth_invariance():
    _check("4", selftest.criterion_4_knuth_invariance(7))


def test_criterion_5_ballot_agreement():
    _check("5", selftest.criterion_5_ballot_agreement(7, 3, 8))


def test_criterion_6_coplacticity():
    _check("6", selftest.criterion_6_coplacticity(7, 2))


def test_criterion_7_kashiwara():
    _check("7", selftest.criterion_7_kashiwara(6, 3))


def test_criterion_8_decomposition():
    _check("8", selftest.criterion_8_decomposition(6, 3))


def test_criterion_9_symmetry():
    _check("9", selftest.criterion_9_symmetry(6, 3))


def test_criterion_10_axiom_suite():
    _check("10", selftest.criterion_10_axiom_suite(1000, seed=0, max_size=6))


def test_criterion_11_not_seminormal():
    _check("11", selftest.criterion_11_not_seminormal())
