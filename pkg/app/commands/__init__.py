"""Command modules for the vgalg CLI."""

from .charval import charval
from .dim_identity import dim_identity
from .eigentable import eigentable
from .group_template import group_template
from .limit import limit
from .spectrum import spectrum
from .sstar_table import sstar_table
from .verify_central import verify_central
from .verify_hecke import verify_hecke

__all__ = [
    "charval",
    "dim_identity",
    "eigentable",
    "group_template",
    "limit",
    "spectrum",
    "sstar_table",
    "verify_central",
    "verify_hecke",
]
