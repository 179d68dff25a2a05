"""Exact-arithmetic engine for the quasisymmetric and shuffle Hopf algebras.

Composition combinatorics, quasi-shuffle and shuffle products,
deconcatenation coproducts and antipodes, the convolution calculus of
functionals, shuffle characters with their triangular f <-> g data,
quasisymmetric power sum bases, universal morphisms from arbitrary
connected graded Hopf algebras (with graph and poset demos), and a batch
CLI.  All arithmetic is over Fraction; nothing floats.
"""

from .compositions import (
    Composition,
    CompositionStats,
    EMPTY,
    coarsenings,
    compositions_of,
    compositions_up_to,
    partitions_of,
    quasi_shuffle,
    rearrangements,
    refinement_split,
    refines,
    shuffle,
    stats,
)
from .elements import (
    GradedElement,
    MONOMIAL,
    TensorElement,
    WORD,
    antipode_by_recursion,
    antipode_monomial,
    antipode_word,
    coproduct,
    counit,
    delta_alpha,
    expand_polynomial,
    format_element,
    power_sum,
    product,
    tensor_outer,
)
from .functionals import (
    Functional,
    convolve,
    counit_functional,
    exp_functional,
    functional_inverse,
    is_character,
    is_infinitesimal_character,
    lie_bracket,
    log_functional,
)
from .characters import (
    BUILTIN_NAMES,
    CharacterData,
    InfinitesimalData,
    OrderedPartitionSpec,
    basis_contract,
    basis_expand,
    builtin,
    check_integral_nonneg,
    closed_form_g,
    even_odd_character,
    f_to_g,
    g_to_f,
    is_shuffle_character,
    normalize,
    order_basis_character,
    ordered_partition_character,
    prefix_sum_character,
    qps_expand,
    resolve_basis,
    verify_qps,
)
from .universal import (
    CANONICAL_NAMES,
    CharacterPowerEvaluator,
    HopfProvider,
    canonical,
    char_to_infchar,
    infchar_to_char,
    nu_via_convolution,
    qsym_provider,
    sh_provider,
    theta,
    theta_eigencheck,
    universal_to_qsym,
    universal_to_sh,
)
from .demos import (
    SmallGraph,
    SmallPoset,
    all_graphs,
    all_posets,
    chromatic_polynomial,
    chromatic_symmetric,
    eta_check,
    format_polynomial,
    graph_infchar,
    graph_infchar_two_ways,
    graph_provider,
    kp_generating_function,
    phi_on_graph,
    phi_on_poset,
    poset_provider,
    xi_unique_min,
    zeta_no_edges,
    zeta_ones,
)
from .report import CheckResult, VerifyReport
from .errors import (
    BasisMismatch,
    DegreeMismatch,
    EngineError,
    EvenSizeUnsupported,
    NonvanishingAtEmpty,
    NotACharacter,
    NotAnInfinitesimalCharacter,
    NotAPartition,
    NotARefinement,
    NotInvertible,
    NotNormalized,
    PartOutOfRange,
    SingularCharacter,
    WrongValueAtEmpty,
    ZeroPrefixSum,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
