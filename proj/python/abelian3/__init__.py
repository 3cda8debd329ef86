"""Counting and listing subgroups of Z_m x Z_n x Z_r."""

from ._core import (
    asymptotic,
    count,
    count_by_order,
    count_cyclic,
    count_direct,
    count_rank2,
    dirichlet_constants,
    enumerate,
    gaussian_binomial,
    general_form,
    h_closed_form,
    h_values,
    main_term,
    sieve_s,
    subgroup_elements,
    symbolic_count,
    type_count,
    verify,
)

__all__ = [
    "asymptotic",
    "count",
    "count_by_order",
    "count_cyclic",
    "count_direct",
    "count_rank2",
    "dirichlet_constants",
    "enumerate",
    "gaussian_binomial",
    "general_form",
    "h_closed_form",
    "h_values",
    "main_term",
    "sieve_s",
    "subgroup_elements",
    "symbolic_count",
    "type_count",
    "verify",
]
