"""Exact computations with semisimple Hopf algebras over cyclotomic fields."""

__version__ = "0.1.0"

from .cyclotomic import CycNumber, zeta  # noqa: E402
from .hopf import FiniteDimHopf, drinfeld_double, dual_hopf, group_algebra  # noqa: E402
from .catalog import get as catalog_get  # noqa: E402
from .characters import integrals, irr_data, fourier  # noqa: E402
from .subnormal import SubHopf, subgroup_hopf, is_normal  # noqa: E402
from .indres import ind_char, res_char  # noqa: E402

__all__ = [
    "CycNumber", "zeta", "FiniteDimHopf", "drinfeld_double", "dual_hopf", "group_algebra",
    "catalog_get", "integrals", "irr_data", "fourier", "SubHopf", "subgroup_hopf", "is_normal",
    "ind_char", "res_char", "__version__",
]
