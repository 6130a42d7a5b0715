"""Andrews-Curtis graphs of finite groups."""

from ._acgraph import (
    ENGINE_VERSION,
    BudgetExceeded,
    Group,
    abelian_components,
    abelian_group,
    catalog_group,
    catalog_names,
    components,
    default_matrix,
    equivalent,
    load_group,
    sample,
    structure,
    verify,
    verify_all,
)

__all__ = [
    "ENGINE_VERSION",
    "BudgetExceeded",
    "Group",
    "abelian_components",
    "abelian_group",
    "catalog_group",
    "catalog_names",
    "components",
    "default_matrix",
    "equivalent",
    "load_group",
    "sample",
    "structure",
    "verify",
    "verify_all",
]
