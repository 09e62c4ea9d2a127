from ._core import (
    ConfigurationError,
    DomainError,
    InvalidInput,
    __version__,
    admissible_orders,
    classify,
    fixed_locus,
    hodge_classes,
    orbit_representatives,
    order_count,
    polarize,
    primary_families,
    run_cli,
    search_lambda,
    suite_names,
    totient,
    verify,
)

__all__ = [
    "ConfigurationError",
    "DomainError",
    "InvalidInput",
    "__version__",
    "admissible_orders",
    "classify",
    "fixed_locus",
    "hodge_classes",
    "orbit_representatives",
    "order_count",
    "polarize",
    "primary_families",
    "run_cli",
    "search_lambda",
    "suite_names",
    "totient",
    "verify",
]
