"""Exact computations with symplectic derivation Lie algebras.

The heavy lifting lives in the compiled extension ``_symderiv``; the
``run_*`` helpers return parsed report dictionaries.
"""

import json as _json

from ._symderiv import (  # noqa: F401
    RankDisagreement,
    Tensor,
    UsageError,
    __version__,
    bracket,
    cyclic_shift,
    degree_basis,
    dim_a,
    dim_l,
    disconnected_contract,
    h1_weight,
    is_cyclic_invariant,
    lyndon_words,
    named_vector_identities,
    necklace_count,
    omega0,
    polygon_contract,
    verify_exact_sequence,
    weyl_dim,
    witt_number,
)
from . import _symderiv as _ext


def dims(genus=None, plain=None, max_degree=3):
    return _json.loads(_ext.run_dims(genus, plain, max_degree))


def polygon(k_min, k_max, symmetric=False):
    return _json.loads(_ext.run_polygon(k_min, k_max, symmetric))


def conjecture(n):
    return _json.loads(_ext.run_conjecture(n))


def decompose(genus):
    return _json.loads(_ext.run_decompose(genus))


def verify_paper(tier="fast", cache_dir=None):
    return _json.loads(_ext.run_verify_paper(tier, cache_dir))
