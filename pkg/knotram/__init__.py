from .logger import logger  # noqa
from .config import FactorBudget, RunConfig  # noqa
from .engine.poly_core import IntPoly, resultant, factorize  # noqa
from .engine.knotpoly import f_poly, g_poly, alexander  # noqa
from .engine.cyclonorm import norm_real, s_seq, omega  # noqa
from .executors.ramify import certify, table  # noqa
from .executors.flipsearch import search  # noqa

__version__ = "0.1.0"
