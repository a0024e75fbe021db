"""twistcomm: commutators relative to a cospan, twisted by group actions, and
crossed-module checks for finite groups given as multiplication tables.

Every theorem-shaped fact the package relies on is computed by two
independent algorithms and cross-checked; `twistcomm verify-paper` runs the
whole battery from the command line.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .actions import (
    Action,
    SplitExtension,
    action_from_extension,
    all_actions,
    canonical_action,
    conjugation_action,
    is_equivariant,
    make_split_extension,
    semidirect_product,
    trivial_action,
    validate_action,
)
from .commutators import (
    CommutatorResult,
    cooperator,
    difference_commutator,
    extension_cospan,
    huq_commutator,
    product_cospan,
    relative_commutator,
    saturate_word_oracle,
    subtractor,
    twisted_commutator,
    word_oracle_commutator,
)
from .graphs import (
    Pullback,
    ReflexiveGraph,
    graph_of_precrossed,
    is_connected,
    is_multiplicative,
    is_reflexive_relation,
    is_star_multiplicative,
    normalization,
    pi0,
    pullback,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    all_subgroups,
    automorphism_group,
    builtin_group,
    center,
    direct_product,
    element_orders,
    generating_sequence,
    is_abelian,
    is_normal,
    normal_closure,
    quotient,
    subgroup_as_group,
    subgroup_closure,
    validate_group,
)
from .homs import (
    Cospan,
    Homomorphism,
    all_homomorphisms,
    compose,
    find_isomorphism,
    identity_hom,
    is_jointly_generating,
    kernel_image,
    make_hom,
    zero_hom,
)
from .verify import StatementResult, VerifyConfig, run_all
from .workspace import Workspace, catalog, parse, serialize
from .xmod import (
    PrecrossedCandidate,
    XModReport,
    action_for_central_extension,
    analyze,
    census,
    census_summary,
    check_pcm,
    check_pff,
    is_central,
    normal_subobject_action,
)

__version__ = "0.1.0"
