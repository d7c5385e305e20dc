"""Exact linear algebra for symmetric Pascal matrices over Z, Q and prime fields."""

from .autosimilar import *  # noqa: F401,F403
from .domains import GF, QQ, ZZ, Domain, parse_domain
from .errors import (
    ConjectureViolation,
    DegeneracyError,
    DegreeMismatchError,
    DomainError,
    InvalidBaseError,
    InvalidModulusError,
    NonUnimodularError,
    ParameterError,
    PascalModError,
    ShapeError,
    SingularMatrixError,
)
from .exactmat import *  # noqa: F401,F403
from .groups import *  # noqa: F401,F403
from .numtheory import *  # noqa: F401,F403
from .pascal import *  # noqa: F401,F403
from .polyring import *  # noqa: F401,F403
from .reports import FAIL, NOT_APPLICABLE, PASS, CheckReport
from .spectra import *  # noqa: F401,F403

__version__ = "0.1.0"
