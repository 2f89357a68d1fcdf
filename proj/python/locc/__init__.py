"""Exact LOCC transformability of bipartite pure states and multi-copy counterexample search."""

from ._locc import (
    LoccError,
    Verdict,
    binomial_stderr,
    classify_pair,
    embed,
    entropy,
    make_spectrum,
    majorizes,
    necessary_condition,
    prefix_sums,
    run_search,
    sample_oriented_pair,
    sample_spectrum,
    tensor_power,
    transformable_k,
    verify_paper,
)

__all__ = [
    "LoccError",
    "Verdict",
    "binomial_stderr",
    "classify_pair",
    "embed",
    "entropy",
    "make_spectrum",
    "majorizes",
    "necessary_condition",
    "prefix_sums",
    "run_search",
    "sample_oriented_pair",
    "sample_spectrum",
    "tensor_power",
    "transformable_k",
    "verify_paper",
]
