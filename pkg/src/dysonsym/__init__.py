"""Exact arithmetic for Dyson symbols, crank statistics, and congruences."""

from .congruence import (
    CongruenceWitness,
    CrankTableCache,
    crank_residue_table,
    is_prime,
    scan_progressions,
    verify_modular_identity,
)
from .dyson import (
    DysonSymbol,
    count_f1,
    dyson_crank,
    enumerate_dyson_symbols,
    from_dyson_symbol,
    to_dyson_symbol,
    validate_dyson,
)
from .fullcrank import (
    Verdict,
    barck_brute,
    barck_closed_form,
    ck_brute,
    ck_closed_form,
    count_full_crank,
    count_full_crank_residue,
    full_crank,
    series_coefficients,
    theorem43_rhs,
    verify_theorem31,
)
from .marked import (
    MarkedDysonSymbol,
    SymbolStats,
    balanced_count,
    count_fk,
    count_fk_strict,
    count_fk_with_balance,
    crank_vector,
    enumerate_marked,
    is_strict,
    mirror,
    phi,
    phi_inverse,
    statistics,
    theorem21_rhs,
    validate_marked,
    weight,
)
from .partitions import (
    CountTable,
    Partition,
    conjugate,
    crank,
    crank_counts,
    crank_moment,
    gen_binomial,
    partition_count,
    partitions_of,
    rank,
    rank_counts,
    rank_moment,
)

__version__ = "1.0.0"

__all__ = [
    "CongruenceWitness",
    "CountTable",
    "CrankTableCache",
    "DysonSymbol",
    "MarkedDysonSymbol",
    "Partition",
    "SymbolStats",
    "Verdict",
    "balanced_count",
    "barck_brute",
    "barck_closed_form",
    "ck_brute",
    "ck_closed_form",
    "conjugate",
    "count_f1",
    "count_fk",
    "count_fk_strict",
    "count_fk_with_balance",
    "count_full_crank",
    "count_full_crank_residue",
    "crank",
    "crank_counts",
    "crank_moment",
    "crank_residue_table",
    "crank_vector",
    "dyson_crank",
    "enumerate_dyson_symbols",
    "enumerate_marked",
    "from_dyson_symbol",
    "full_crank",
    "gen_binomial",
    "is_prime",
    "is_strict",
    "mirror",
    "partition_count",
    "partitions_of",
    "phi",
    "phi_inverse",
    "rank",
    "rank_counts",
    "rank_moment",
    "scan_progressions",
    "series_coefficients",
    "statistics",
    "theorem21_rhs",
    "theorem43_rhs",
    "to_dyson_symbol",
    "validate_dyson",
    "validate_marked",
    "verify_modular_identity",
    "verify_theorem31",
    "weight",
]
