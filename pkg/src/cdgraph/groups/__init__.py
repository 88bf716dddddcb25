"""Finite matrix groups over prime fields, enumerated element by element."""

from .action import (
    ModuleAction,
    NqReport,
    check_Nq,
    counting_identity,
    orbits,
    sl2_generators,
    sl2_natural,
    sylow_count,
)
from .lemmas import (
    SYLOW_COUNTS,
    CentralizerReport,
    SingerReport,
    admits_nq,
    nq_expansions,
    sl2_centralizer_check,
    singer_check,
)
from .matrices import (
    DEFAULT_CAP,
    FqMatrix,
    GroupOverflowError,
    MatrixGroup,
    enumerate_gl,
    enumeration_cap,
    generate,
    gl_order,
)

__all__ = [
    "DEFAULT_CAP",
    "SYLOW_COUNTS",
    "CentralizerReport",
    "FqMatrix",
    "GroupOverflowError",
    "MatrixGroup",
    "ModuleAction",
    "NqReport",
    "SingerReport",
    "admits_nq",
    "check_Nq",
    "counting_identity",
    "enumerate_gl",
    "enumeration_cap",
    "generate",
    "gl_order",
    "nq_expansions",
    "orbits",
    "sl2_centralizer_check",
    "sl2_generators",
    "sl2_natural",
    "singer_check",
    "sylow_count",
]
