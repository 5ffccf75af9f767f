import itertools

import pytest

from shifted_crystals.primed import LOWER, RAISE, apply_primed
from shifted_crystals.unprimed import (
    E_DIR,
    F_DIR,
    INVERSE_KIND,
    apply_operator,
    apply_unprimed,
    definedness_by_endpoint,
    final_critical,
    find_criticals,
)
from shifted_crystals.walks import Step, is_antiballot, is_ballot, knuth_moves, walk
from shifted_crystals.words import all_canonical_words_upto, eta, parse_word

W = parse_word
LONG = "1221'1'111'1'2'2222'2'11'1"


class TestFindCriticals:
    def test_long_example_list(self):
        crits = {(c.kind, c.start, c.length) for c in find_criticals(W(LONG), F_DIR)}
        assert ("3F", 0, 1) in crits
        assert ("4F", 0, 1) in crits          # first letter in another representative
        assert ("1F", 0, 2) in crits          # 12' via the primed-2 representative
        assert ("2F", 0, 4) in crits          # 1221'
        assert ("1F", 6, 4) in crits          # 11'1'2' at location (3,1)

    def test_long_example_final(self):
        c = final_critical(W(LONG), F_DIR)
        assert (c.kind, c.start, c.length) == ("1F", 6, 4)
        assert c.location == (3, 1)

    def test_word_without_ones_has_no_f_criticals(self):
        assert find_criticals(W("22"), F_DIR) == []
        assert final_critical(W("22"), F_DIR) is None

    def test_121_final_is_blocking(self):
        # the letter 1 at position 3 sits at (1,1) and steps South: a
        # terminal configuration that blocks the lowering operator
        c = final_critical(W("121"), F_DIR)
        assert (c.kind, c.start) == ("5F", 2)

    def test_rejects_other_values(self):
        with pytest.raises(ValueError):
            find_criticals(W("3"), F_DIR)

    def test_locations_on_the_four_lines(self):
        for w in all_canonical_words_upto(6, 2):
            for c in find_criticals(w, F_DIR) + find_criticals(w, E_DIR):
                x, y = c.location
                assert x in (0, 1) or y in (0, 1)


class TestApply:
    def test_long_chain(self):
        w = W(LONG)
        chain = [
            "1221'1'12'1'1'22222'2'11'1",
            "22211'12'1'1'22222'2'11'1",
            "22211'12'1'1'22222'2'2'11",
        ]
        for expected in chain:
            w = apply_unprimed(w, 1, LOWER)
            assert w == W(expected)
        assert apply_unprimed(w, 1, LOWER) is None

    def test_121_family(self):
        assert apply_unprimed(W("121"), 1, LOWER) is None
        assert apply_unprimed(W("121'"), 1, LOWER) == W("221")
        assert apply_unprimed(W("221"), 1, RAISE) == W("121'")

    def test_splice_examples(self):
        assert apply_unprimed(W("2112'3"), 1, LOWER) == W("212'23")
        assert apply_unprimed(W("2112'3"), 2, LOWER) == W("31123")

    def test_simple_values(self):
        assert apply_unprimed(W("12"), 1, LOWER) == W("22")
        assert apply_unprimed(W("1"), 1, LOWER) == W("2")
        assert apply_unprimed(W("112"), 1, RAISE) == W("111")

    def test_empty_subword(self):
        assert apply_unprimed(W("11"), 2, LOWER) is None

    def test_operator_dispatch(self):
        w = W("2112'3")
        assert apply_operator(w, 1, "f") == W("212'23")
        assert apply_operator(w, 1, "e") == apply_unprimed(w, 1, RAISE)
        assert apply_operator(w, 1, "fprime") == apply_primed(w, 1, LOWER)
        with pytest.raises(ValueError):
            apply_operator(w, 1, "g")


class TestPartialInverses:
    def test_exhaustive_with_case_pairing(self):
        for w in all_canonical_words_upto(6, 2):
            down = apply_unprimed(w, 1, LOWER)
            if down is not None:
                assert apply_unprimed(down, 1, RAISE) == w
                cf = final_critical(w, F_DIR)
                ce = final_critical(down, E_DIR)
                assert ce.kind == INVERSE_KIND[cf.kind]
                assert (ce.start, ce.length) == (cf.start, cf.length)
            up = apply_unprimed(w, 1, RAISE)
            if up is not None:
                assert apply_unprimed(up, 1, LOWER) == w


class TestInvariants:
    def test_eta_conjugation_exact(self):
        for w in all_canonical_words_upto(6, 2):
            via = apply_unprimed(eta(w, 1), 1, LOWER)
            via = eta(via, 1) if via is not None else None
            assert apply_unprimed(w, 1, RAISE) == via

    def test_walk_step_change(self):
        for w in all_canonical_words_upto(6, 2):
            down = apply_unprimed(w, 1, LOWER)
            if down is None:
                continue
            w1, w2 = walk(w), walk(down)
            assert (w1.endpoint[0] - 1, w1.endpoint[1] + 1) == w2.endpoint
            changed = [(a, b) for a, b in zip(w1.steps, w2.steps) if a != b]
            assert len(changed) == 1
            assert changed[0] in ((Step.SOUTH, Step.WEST), (Step.EAST, Step.NORTH))
            # coordinate sums of every walk point are preserved
            assert all(x1 + y1 == x2 + y2 for (x1, y1), (x2, y2)
                       in zip(w1.points, w2.points))

    def test_ballot_iff_raising_killed(self):
        for w in all_canonical_words_upto(6, 2):
            killed = apply_unprimed(w, 1, RAISE) is None and apply_primed(w, 1, RAISE) is None
            assert is_ballot(w, 2) == killed
            lowered = apply_unprimed(w, 1, LOWER) is None and apply_primed(w, 1, LOWER) is None
            assert is_antiballot(w, 2) == lowered

    def test_knuth_equivalent_words_agree_on_definedness(self):
        for w in all_canonical_words_upto(6, 2):
            defined = apply_unprimed(w, 1, LOWER) is not None
            for v in knuth_moves(w):
                assert (apply_unprimed(v, 1, LOWER) is not None) == defined

    def test_definedness_by_endpoint(self):
        for w in all_canonical_words_upto(7, 2):
            assert definedness_by_endpoint(w, F_DIR) == \
                (apply_unprimed(w, 1, LOWER) is not None)
            assert definedness_by_endpoint(w, E_DIR) == \
                (apply_unprimed(w, 1, RAISE) is not None)

    def test_commutation_same_index(self):
        ops = {"F": lambda w: apply_unprimed(w, 1, LOWER),
               "E": lambda w: apply_unprimed(w, 1, RAISE),
               "F'": lambda w: apply_primed(w, 1, LOWER),
               "E'": lambda w: apply_primed(w, 1, RAISE)}
        for w in all_canonical_words_upto(6, 2):
            for a, b in itertools.combinations(ops, 2):
                x = ops[a](w)
                y = ops[b](w)
                xy = ops[b](x) if x is not None else None
                yx = ops[a](y) if y is not None else None
                if xy is not None and yx is not None:
                    assert xy == yx

    def test_one_row_rect_degenerates(self):
        from shifted_crystals.walks import rect_shape
        for w in all_canonical_words_upto(6, 2):
            if len(rect_shape(walk(w)).shape) <= 1:
                assert apply_unprimed(w, 1, LOWER) == apply_primed(w, 1, LOWER)
                assert apply_unprimed(w, 1, RAISE) == apply_primed(w, 1, RAISE)

    def test_tie_at_first_letter_transforms_agree(self):
        from shifted_crystals.unprimed import CriticalSubstring, transform
        from shifted_crystals.words import Word
        ties = 0
        for w in all_canonical_words_upto(6, 2):
            crits = {(c.kind, c.start, c.length): c for c in find_criticals(w, F_DIR)}
            if ("3F", 0, 1) in crits and ("4F", 0, 1) in crits:
                ties += 1
                out3 = Word(transform(crits[("3F", 0, 1)]) + w.letters[1:])
                out4 = Word(transform(crits[("4F", 0, 1)]) + w.letters[1:])
                assert out3 == out4
        assert ties > 0
