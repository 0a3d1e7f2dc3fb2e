"""Sets of natural numbers recognized by finite automata over base-p digit words.

The library covers the constructive toolkit around such sets: positional
encoding, automaton normal forms, per-state length-set periodicity, uniformly
nonempty/empty interval witnesses, a complete syndeticity decision with an
explicit gap bound, and nested-interval certificates separating automata over
multiplicatively independent bases.
"""

from .automata import (
    Dfa,
    RecognizableSet,
    accepts,
    canonical_words_dfa,
    complete,
    empty_dfa,
    enumerate_elements,
    equivalent,
    example1,
    has_infinite_language,
    is_empty_language,
    iter_elements,
    member,
    minimize,
    product,
    restrict_to_canonical,
    right_dense,
    trim,
)
from .errors import (
    FiniteSetError,
    InsufficientDataError,
    PreconditionError,
    RecsetError,
    SearchCapExceededError,
    ValidationError,
)
from .fileformat import (
    FORMAT_VERSION,
    document_from_set,
    dumps_automaton,
    loads_automaton,
    read_automaton,
    set_from_document,
    write_automaton,
)
from .lengths import (
    SubsetState,
    UltimatePeriod,
    cofinite_threshold,
    length_profile,
    subset_step,
)
from .numeration import (
    DigitWord,
    IndependenceVerdict,
    KroneckerWitness,
    decode,
    encode,
    kronecker_witness,
    mult_independent,
    verify_kronecker,
)
from .witnesses import (
    ContradictionCertificate,
    Finite,
    GapScanResult,
    IntervalWitness,
    NotSyndetic,
    Syndetic,
    SyndeticCertificate,
    SyndeticVerdict,
    cross_base_refute,
    empty_interval_witness,
    gap_scan,
    nonempty_interval_witness,
    syndetic_decide,
    verify_contradiction,
    verify_interval_witness,
)

__version__ = "0.1.0"

__all__ = [
    "ContradictionCertificate",
    "Dfa",
    "DigitWord",
    "FORMAT_VERSION",
    "Finite",
    "FiniteSetError",
    "GapScanResult",
    "IndependenceVerdict",
    "InsufficientDataError",
    "IntervalWitness",
    "KroneckerWitness",
    "NotSyndetic",
    "PreconditionError",
    "RecognizableSet",
    "RecsetError",
    "SearchCapExceededError",
    "SubsetState",
    "Syndetic",
    "SyndeticCertificate",
    "SyndeticVerdict",
    "UltimatePeriod",
    "ValidationError",
    "accepts",
    "canonical_words_dfa",
    "cofinite_threshold",
    "complete",
    "cross_base_refute",
    "decode",
    "document_from_set",
    "dumps_automaton",
    "empty_dfa",
    "empty_interval_witness",
    "encode",
    "enumerate_elements",
    "equivalent",
    "example1",
    "gap_scan",
    "has_infinite_language",
    "is_empty_language",
    "iter_elements",
    "kronecker_witness",
    "length_profile",
    "loads_automaton",
    "member",
    "minimize",
    "mult_independent",
    "nonempty_interval_witness",
    "product",
    "read_automaton",
    "restrict_to_canonical",
    "right_dense",
    "set_from_document",
    "subset_step",
    "syndetic_decide",
    "trim",
    "verify_contradiction",
    "verify_interval_witness",
    "verify_kronecker",
    "write_automaton",
]
