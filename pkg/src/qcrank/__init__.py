"""Exact truncated q-series arithmetic for crank congruences and Lerch-sum identities."""

from .crank import crank_gf
from .lerch import BilateralSpec, appell_change_z, appell_m, build_master_lhs, eval_bilateral, lambert
from .partitions import crank, enumerate_partitions, p_count, rank, stats
from .products import jtheta, named_product, qprod, qquot
from .rings import DD, QQ, Dual, ZLaurent
from .series import QSeries, dilate, dissect, invert, monomial, mul, reduce_mod
from .verify import IdentityCheck, IdentityReport, run_check, run_suite

__version__ = "0.1.0"

__all__ = [
    "BilateralSpec", "DD", "Dual", "IdentityCheck", "IdentityReport", "QQ", "QSeries", "ZLaurent",
    "appell_change_z", "appell_m", "build_master_lhs", "crank", "crank_gf", "dilate", "dissect",
    "enumerate_partitions", "eval_bilateral", "invert", "jtheta", "lambert", "monomial", "mul",
    "named_product", "p_count", "qprod", "qquot", "rank", "reduce_mod", "run_check", "run_suite", "stats",
]
