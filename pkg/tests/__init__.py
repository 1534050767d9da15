from .cli_test import CliTest
from .codes_test import CodesTest
from .curve_test import CurveTest
from .field_test import FieldTest
from .ghw_test import GhwTest
from .monomial_test import MonomialTest
from .oracle_test import BruteforceTest, SubspaceTest, WitnessTest
from .quantum_test import QuantumTest
from .rghw_test import RghwTest
from .utils_test import LoadTest, ParsingTest, ProcessingTest
from .wei_test import WeiTest


__all__ = [
    "BruteforceTest",
    "CliTest",
    "CodesTest",
    "CurveTest",
    "FieldTest",
    "GhwTest",
    "LoadTest",
    "MonomialTest",
    "ParsingTest",
    "ProcessingTest",
    "QuantumTest",
    "RghwTest",
    "SubspaceTest",
    "WeiTest",
    "WitnessTest",
]
