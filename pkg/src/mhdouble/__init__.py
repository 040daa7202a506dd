"""Exact computation with paired multiplier Hopf algebras and their doubles."""

from .doubles import (
    DrinfeldDouble,
    HeisenbergDouble,
    HeisenbergYD,
    RestrictedA,
    RestrictedB,
    braided_mul,
    build_doubles,
)
from .errors import (
    ConfigError,
    MhaError,
    PresentationError,
    RegularityError,
    UnderCoveredError,
    UnsupportedParameterError,
)
from .groups import FunctionAlgebra, GroupAlgebra, canonical_pair, group_pairing, make_group, parse_group
from .lincomb import Accumulator, LinComb
from .mha import MultiplierHopfAlgebra, Variant
from .pairing import ActionVariant, Pairing
from .scalars import QQ, PrimeField, parse_field
from .taft import TaftA, TaftB, TaftParams, taft_pairing
from .verify import CheckReport, Instance, SamplePlan, build_instance, run_suite

__all__ = [
    "QQ",
    "Accumulator",
    "ActionVariant",
    "CheckReport",
    "ConfigError",
    "DrinfeldDouble",
    "FunctionAlgebra",
    "GroupAlgebra",
    "HeisenbergDouble",
    "HeisenbergYD",
    "Instance",
    "LinComb",
    "MhaError",
    "MultiplierHopfAlgebra",
    "Pairing",
    "PresentationError",
    "PrimeField",
    "RegularityError",
    "RestrictedA",
    "RestrictedB",
    "SamplePlan",
    "TaftA",
    "TaftB",
    "TaftParams",
    "UnderCoveredError",
    "UnsupportedParameterError",
    "Variant",
    "braided_mul",
    "build_doubles",
    "build_instance",
    "canonical_pair",
    "group_pairing",
    "make_group",
    "parse_field",
    "parse_group",
    "run_suite",
    "taft_pairing",
]
