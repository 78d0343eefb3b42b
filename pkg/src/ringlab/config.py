"""Run-wide limits and tunables.

All caps are deliberate: operations refuse oversized constructions instead
of degrading, and every bounded search records the bound it ran with.
"""

import os

SIZE_LIMIT_ENV = "RINGLAB_SIZE_LIMIT"
DEFAULT_SIZE_LIMIT = 256

# Polynomial searches: default working degree and a hard cap.
DEFAULT_DEGREE = 3
MAX_DEGREE = 8

# Finite-annihilator-condition sweep: subsets of size <= this cap.
FAC_SUBSET_CAP = 3

# Seeded content-identity sweeps (documented fixed seed for reproducibility).
DM_SEED = 24103
DM_PAIRS = 1000
DM_MAX_DEGREE = 4

# Truncated-window oracle for arithmetic rings.
ARITH_ORACLE_BOUND = 10
ARITH_WITNESS_BOUND = 100

# Per-ring cap on (ideal, m.c.s.) annotation combinations; beyond it the
# verifier subsamples deterministically with the recorded seed.
ANNOTATION_CAP = 4096
SUBSAMPLE_SEED = 49374
MCS_CANDIDATE_CAP = 24


def size_limit() -> int:
    """Element-count cap for ring constructions; env override allowed."""
    raw = os.environ.get(SIZE_LIMIT_ENV)
    if raw is None:
        return DEFAULT_SIZE_LIMIT
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_SIZE_LIMIT
    return value if value >= 1 else DEFAULT_SIZE_LIMIT
