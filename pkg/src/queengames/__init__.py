"""P-positions of Wythoff-type queen games: search, morphic words and closed forms."""

from .game import (
    KQueen,
    KQueenDee,
    ParameterError,
    Position,
    QueenBee,
    QueenVariant,
    RestrictedStroll,
    Standard,
    WidenedQueen,
    is_legal_move,
    legal_moves,
    parse_variant,
    variant_name,
)
from .solver import (
    CapacityError,
    ClassifiedRegion,
    Outcome,
    PTable,
    classify_region,
    iter_p_positions,
    p_positions,
)
from .words import (
    Coding,
    InsufficientLengthError,
    Morphism,
    MorphismError,
    apply_coding,
    catalog,
    erase_letters,
    fixed_point,
    table_from_morphism,
    word_table,
)

__version__ = "0.1.0"
