"""Property testing for finite posets and comparability graphs."""

from .core import Poset, from_relations, is_isomorphic
from .generators import (
    alternating,
    antichain,
    chain,
    complete_multipartite,
    k_hw,
    random_closure,
    random_layered,
    sharp_layered,
    union_of_chains,
)
from .hom import (
    Embedding,
    HomDensity,
    check_density_inequality,
    contains_subposet,
    density_exact,
    density_mc,
    hom_count_exact,
)
from .removal import (
    DensityTooHigh,
    RankAssignment,
    RemovalResult,
    chain_removal,
    edge_removal,
    indistinguishability_bound,
    interval_closeness,
    min_removal_oracle,
    poset_removal,
    rank_function,
)
from .testers import (
    FamilySpec,
    TestOutcome,
    basic_test,
    family_tester,
    iterated_basic_test,
    subposet_test,
    subposet_test_samples,
)

__version__ = "0.1.0"

__all__ = [
    "Poset", "from_relations", "is_isomorphic",
    "chain", "antichain", "complete_multipartite", "k_hw", "alternating",
    "union_of_chains", "sharp_layered", "random_layered", "random_closure",
    "HomDensity", "Embedding", "hom_count_exact", "density_exact",
    "density_mc", "contains_subposet", "check_density_inequality",
    "RankAssignment", "RemovalResult", "DensityTooHigh", "rank_function",
    "edge_removal", "chain_removal", "poset_removal", "interval_closeness",
    "min_removal_oracle", "indistinguishability_bound",
    "TestOutcome", "FamilySpec", "basic_test", "iterated_basic_test",
    "subposet_test", "subposet_test_samples", "family_tester",
]
