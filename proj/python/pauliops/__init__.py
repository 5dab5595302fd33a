"""Pauli-string operator algebra: truncated Heisenberg evolution and the
Lanczos recursion on spin models, backed by a C++ core."""

from pauliops._core import (
    EvolutionTrace,
    LanczosResult,
    Operator,
    SymLanczosResult,
    SymOperator1D,
    add_noise,
    commutator,
    cutoff,
    dagger,
    dense_lanczos,
    evolve,
    evolve_two_point,
    from_json,
    lanczos,
    models,
    norm_lanczos,
    product,
    sym_commutator,
    sym_product,
    to_dense,
    to_json,
    trace,
    trace_product,
    trim,
    truncate_weight,
)

__all__ = [
    "EvolutionTrace",
    "LanczosResult",
    "Operator",
    "SymLanczosResult",
    "SymOperator1D",
    "add_noise",
    "commutator",
    "cutoff",
    "dagger",
    "dense_lanczos",
    "evolve",
    "evolve_two_point",
    "from_json",
    "lanczos",
    "models",
    "norm_lanczos",
    "product",
    "sym_commutator",
    "sym_product",
    "to_dense",
    "to_json",
    "trace",
    "trace_product",
    "trim",
    "truncate_weight",
]

__version__ = "0.1.0"
