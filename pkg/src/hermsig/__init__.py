"""Exact signatures of invariant Hermitian forms on finite-dimensional representations.

Typical use::

    >>> from hermsig import builtin_group, compute_signature, gl_split_to_fundamental
    >>> compute_signature(builtin_group("GL(4)"), gl_split_to_fundamental(4, (1, 0, 0, -1))).sig
    3
"""
from .oracle import (construct_irrep, inertia, invariant_symmetric_form, kernel_signature,
                     oracle_sig_equal_rank, oracle_sig_split)
from .realform import (HighestWeightSpec, RealForm, builtin_group, from_json, gl_split_to_fundamental,
                       hermitian_existence, to_json)
from .restricted import fold_diagram, highest_weight_spec, restrict, restricted_type
from .rootdata import RootDatum, build_root_system, freudenthal_multiplicities, weyl_dimension
from .signature import (SignatureResult, compute_signature, epsilon, gl_closed_form, gl_signature,
                        invariance_level, ratio_identity, sig_degree_probe)
from .weylres import build_W_theta, component_group, enumerate_W1

__version__ = "0.1.0"

__all__ = [
    "HighestWeightSpec", "RealForm", "RootDatum", "SignatureResult",
    "build_W_theta", "build_root_system", "builtin_group", "component_group", "compute_signature",
    "construct_irrep", "enumerate_W1", "epsilon", "fold_diagram", "freudenthal_multiplicities",
    "from_json", "gl_closed_form", "gl_signature", "gl_split_to_fundamental", "hermitian_existence",
    "highest_weight_spec", "inertia", "invariance_level", "invariant_symmetric_form", "kernel_signature",
    "oracle_sig_equal_rank", "oracle_sig_split", "ratio_identity", "restrict", "restricted_type",
    "sig_degree_probe", "to_json", "weyl_dimension",
]
