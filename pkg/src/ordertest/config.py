"""Size caps and budgets for the brute-force oracles and backtracking searches.

Every cap can be overridden through an environment variable of the same name
prefixed with ``ORDERTEST_`` (read once at import time).
"""

import os


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(f"ORDERTEST_{name}")
    return int(raw) if raw is not None else default


# Maximum poset size for the permutation-search isomorphism oracle.
ISO_ORACLE_CAP = _env_int("ISO_ORACLE_CAP", 10)

# Maximum poset size for the exhaustive chain-cover / antichain-cover oracles.
COVER_ORACLE_CAP = _env_int("COVER_ORACLE_CAP", 8)

# Maximum edge count for the brute-force minimum-removal oracle.
MIN_REMOVAL_EDGE_CAP = _env_int("MIN_REMOVAL_EDGE_CAP", 20)

# Node-expansion budget for the homomorphism-counting backtracker.
HOM_BUDGET = _env_int("HOM_BUDGET", 50_000_000)

# Ceiling on the repetition count of the iterated basic test.
MAX_ITERATIONS = _env_int("MAX_ITERATIONS", 1_000_000)

# Maximum vertex count for exact chromatic/independence number of
# arbitrary (source-less) graphs.
GRAPH_EXACT_CAP = _env_int("GRAPH_EXACT_CAP", 16)
