"""Structure of Leavitt path algebras of finite graphs, computed from the graph.

Hereditary saturated sets, maximal tails, Condition (L), the prime
spectrum and the prime / primitive / simple decisions.
"""

from .constructions import extended_graph, hedge_graph, quotient_graph, restriction_graph
from .cycles import (
    Cycle,
    comet_matrix_size,
    condition_L,
    enumerate_cycles,
    exits_of,
    is_comet,
    pc_set,
)
from .errors import (
    DomainError,
    GraphFormatError,
    InvariantViolation,
    LpaError,
    NotEnumerableError,
    NotHereditaryError,
    PolyFormatError,
    ThresholdError,
    UndecidedError,
    UnknownVertexError,
)
from .graph import Edge, Graph, parse_graph, reaches, serialize_graph, sinks, tree
from .hsat import closure, closure_stages, enumerate_hsat, is_hereditary, is_saturated, omega
from .kernels import BACKEND
from .laurent import (
    RATIONALS,
    FieldSpec,
    LaurentPrime,
    enumerate_laurent_primes,
    is_irreducible,
    parse_field,
    parse_poly,
    prime_field,
)
from .spectrum import (
    Graded,
    NonGraded,
    graded_primes,
    is_prime_algebra,
    is_primitive_algebra,
    is_simple_algebra,
    recognize_algebra,
    spectrum,
)
from .tails import MaximalTail, TailKind, check_mt, enumerate_maximal_tails, tail_kind

__version__ = "0.1.0"
