"""Pattern-avoiding words and 0-1 fillings of Ferrers shapes.

Exhaustive counting under three content regimes, word counting, the border
chain statistics with the alpha correspondence between 231- and 312-avoiding
full rook placements, the band blowup/shrink conjugations that extend it to
general contents, and scan/reproduction commands for the published tables.
"""

from .core import (
    BadComposition,
    BorderVertexPath,
    Composition,
    ContentMismatch,
    FerrersShape,
    Filling,
    FullRookPlacement,
    InvalidPattern,
    NotAvoiding,
    NotFerrers,
    ShapeMismatch,
    Word,
    border_path,
    column_heights,
    direct_sum,
    filling_content,
    format_composition,
    format_patterns,
    format_shape,
    format_word,
    make_composition,
    make_shape,
    make_word,
    parse_composition,
    parse_patterns,
    parse_shape,
    parse_word,
    validate_pattern,
    word_to_filling,
)
from .matcher import (
    avoids_all,
    contains,
    contains_using_last_column,
    word_contains,
)
from .enumeration import (
    POSITIVE_ROWS,
    UNCONSTRAINED,
    CountRecord,
    ResultCache,
    brute_count_fillings,
    compositions,
    count_all_fillings,
    count_fillings,
    count_positive_fillings,
    count_words,
    count_words_direct,
    counted,
    enumerate_fillings,
)
from .bijection import (
    BandStructure,
    BijectionFailure,
    BorderSequence,
    Direction,
    EquivalenceVariant,
    NoSuchPlacement,
    VARIANTS,
    alpha,
    alpha_inverse,
    alpha_sequence,
    band_monotone,
    bands_from_composition,
    blowup,
    i_sequence,
    n_sequence,
    reconstruct,
    shrink,
    to_231_121_avoider,
    to_231_221_avoider,
    to_312_211_avoider,
    to_312_212_avoider,
)
from .harness import (
    Mismatch,
    ScanReport,
    check_equivalence,
    iter_shapes,
    reproduce_table,
    scan_conjecture1,
    scan_conjecture2,
)

__version__ = "0.1.0"
