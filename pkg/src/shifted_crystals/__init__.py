"""Coplactic operators, lattice walks, shifted jeu de taquin, mixed
insertion, doubled crystal graphs and Schur Q-function combinatorics."""

from .words import (
    Letter,
    Word,
    all_canonical_words,
    all_canonical_words_upto,
    canonicalize,
    eta,
    parse_word,
    representatives,
    standardize,
    subword,
    unstandardize,
)
from .walks import LatticeWalk, RectShape, Step, is_antiballot, is_ballot, knuth_moves, rect_shape, walk
from .primed import LOWER, RAISE, apply_primed, apply_primed_by_standardization, primed_chain_length
from .unprimed import (
    CriticalSubstring,
    apply_operator,
    apply_unprimed,
    definedness_by_endpoint,
    final_critical,
    find_criticals,
)
from .tableaux import (
    CANONICAL,
    PVARIANT,
    QVARIANT,
    ShiftedTableau,
    SkewShape,
    StandardShiftedTableau,
    column_word,
    enumerate_tableaux,
    eta_tableau,
    is_semistandard,
    is_semistandard_tableau,
    reading_word,
    standardize_tableau,
    straight,
    strict_partitions,
    substrict_partitions,
    t_high,
    word_as_tableau,
)
from .jdt import (
    SlideRecord,
    inner_corners,
    inner_slide,
    is_littlewood_richardson,
    outer_corner_positions,
    outer_slide,
    rectify,
    rectify_word,
)
from .rsk import (
    CircledRecordingTableau,
    circled_positions_fast,
    dual_equivalent,
    mixed_insert,
    recording_tableau,
    shifted_rsk,
)
from .polynomials import QPolynomial
from .crystal import (
    CrystalGraph,
    apply_tableau_operator,
    apply_word_operator,
    build_crystal,
    build_word_crystal,
    character,
    lr_coefficients,
    schur_p,
    schur_q,
    seminormality_witnesses,
    verify_kashiwara,
)
from .axioms import (
    AxiomReport,
    LabeledGraph,
    canonical_isomorphism,
    check_a1,
    check_a2,
    check_a3,
    check_a4,
    check_all,
    crystal_to_labeled,
    labeled_graph_from_json,
    string_lengths,
    unique_maximum,
)
