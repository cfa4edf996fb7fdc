"""Exact invariants of the Mosher / singularity spectral sequences."""

from .abelian import Element, FinAbGroup, GroupHom, PartialHom
from .errors import DomainError, Indeterminate, OutOfTableError
from .jtheory import atiyah_todd, first_nonzero_diff, u_mod1

__all__ = [
    "DomainError", "Element", "FinAbGroup", "GroupHom", "Indeterminate",
    "OutOfTableError", "PartialHom", "atiyah_todd", "first_nonzero_diff", "u_mod1",
]
__version__ = "0.1.0"
