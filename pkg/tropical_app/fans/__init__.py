"""
Éventails polyédraux : cônes exacts, étoiles, orbites sous S_n et
éventail des arbres.
"""

from .cones import Cone, LineTestResult, cone_dim, lineality_NH, pair_line_test, symmetric_action
from .fan_scan import (
    StarScanReport,
    convert_fan,
    dump_fan,
    f_vector,
    load_fan,
    orbit_fvector,
    star_scan,
    tgr2_fan_builder,
)

__all__ = [
    "Cone",
    "LineTestResult",
    "StarScanReport",
    "cone_dim",
    "convert_fan",
    "dump_fan",
    "f_vector",
    "lineality_NH",
    "load_fan",
    "orbit_fvector",
    "pair_line_test",
    "star_scan",
    "symmetric_action",
    "tgr2_fan_builder",
]
