from ._cedille_core import (
    DEFAULT_FUEL,
    CedilleError,
    Checker,
    FuelExhausted,
    ParseError,
    Term,
    TypeCheckError,
    alpha_eq,
    check_module,
    def_eq,
    erase,
    free_vars,
    infer,
    is_pure,
    nf,
    parse_term,
    print_term,
    subst,
)

__all__ = [
    "DEFAULT_FUEL",
    "CedilleError",
    "Checker",
    "FuelExhausted",
    "ParseError",
    "Term",
    "TypeCheckError",
    "alpha_eq",
    "check_module",
    "def_eq",
    "erase",
    "free_vars",
    "infer",
    "is_pure",
    "nf",
    "parse_term",
    "print_term",
    "subst",
]
