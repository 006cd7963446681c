"""Classical and quantum Schubert calculus of the type A flag manifold, in exact arithmetic."""

from .grobner import bracket, expand_qschubert, groebner_basis, gw_invariant, gw_table, normal_form
from .polyring import Polynomial, parse_polynomial
from .quadratic import eval_at_dunkl, gw_via_bruhat, nonneg_decompose
from .quantization import qschubert, quantize, quantum_e, quantum_multiply
from .schubert import schubert_poly
from .symgroup import Permutation, parse_permutation

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop every memo table (used to time computations from a cold start)."""
    from functools import _lru_cache_wrapper

    from . import grobner, polyring, quadratic, quantization, schubert

    for mod in (polyring, schubert, quantization, grobner, quadratic):
        for obj in vars(mod).values():
            if isinstance(obj, _lru_cache_wrapper):
                obj.cache_clear()
    quadratic._component_cache.clear()
