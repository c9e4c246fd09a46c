"""Self-dual codes from bordered group-ring generators over small chain rings.

Build a code, Gray-map it to binary, count low weights, and derive longer or
neighboring self-dual codes from it.
"""

from .bincode import BinaryCode, WeightProfile, classify_enumerator, count_weight, min_weight
from .construct import ConstructionParams, build_generator, check_conditions
from .groupring import GroupRingElem, GroupSpec, RingMatrix, sigma
from .kernel import COMPILED
from .rings import RingElem, RingId

__version__ = "0.1.0"

__all__ = [
    "BinaryCode",
    "COMPILED",
    "ConstructionParams",
    "GroupRingElem",
    "GroupSpec",
    "RingElem",
    "RingId",
    "RingMatrix",
    "WeightProfile",
    "build_generator",
    "check_conditions",
    "classify_enumerator",
    "count_weight",
    "min_weight",
    "sigma",
]
