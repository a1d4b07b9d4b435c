"""Right-angled Artin group toolkit: word problem, secret sharing, authentication.

Graphs, words and vertex maps use the same text formats as the `raag` CLI.
"""

from ._raagcrypt import (
    OracleBoundExceeded,
    ParseError,
    decode_column,
    encode_column,
    find_graph_homomorphism,
    is_trivial,
    lagrange_reconstruct,
    oracle_is_trivial,
    random_graph,
    reconstruct_nn,
    run_protocol,
    sample_nontrivial_word,
    sample_trivial_word,
    shamir_split,
    simulate,
    split_bits_nn,
    validate_graph,
    verify_graph_homomorphism,
)

__all__ = [
    "OracleBoundExceeded",
    "ParseError",
    "decode_column",
    "encode_column",
    "find_graph_homomorphism",
    "is_trivial",
    "lagrange_reconstruct",
    "oracle_is_trivial",
    "random_graph",
    "reconstruct_nn",
    "run_protocol",
    "sample_nontrivial_word",
    "sample_trivial_word",
    "shamir_split",
    "simulate",
    "split_bits_nn",
    "validate_graph",
    "verify_graph_homomorphism",
]
