"""Exact cluster algebra seeds, mutation and Weil-Petersson forms."""

from ._core import (
    FileError,
    Seed,
    SeedError,
    catalog_keys,
    catalog_point,
    check_invariance,
    difference,
    explore,
    form_degree,
    forms_equal,
    is_acyclic,
    presentation,
    reduce,
    regularize,
    run_cli,
    tangent_dimension,
    wp_form,
)

__all__ = [
    "FileError",
    "Seed",
    "SeedError",
    "catalog_keys",
    "catalog_point",
    "check_invariance",
    "difference",
    "explore",
    "form_degree",
    "forms_equal",
    "is_acyclic",
    "presentation",
    "reduce",
    "regularize",
    "run_cli",
    "tangent_dimension",
    "wp_form",
]
