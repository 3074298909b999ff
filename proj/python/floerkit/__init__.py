from ._floerkit import (
    FloerkitError,
    Series,
    boundary_check,
    check_datum,
    f_vector,
    floer_cohomology,
    is_exact,
    maslov_index,
    sft_index_bound,
    sphere_fixture,
)

__all__ = [
    "FloerkitError",
    "Series",
    "boundary_check",
    "check_datum",
    "f_vector",
    "floer_cohomology",
    "is_exact",
    "maslov_index",
    "sft_index_bound",
    "sphere_fixture",
]
