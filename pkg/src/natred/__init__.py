"""Tools for skew torsion 3-forms and reductive homogeneous models in
dimensions 3 to 6: exterior and Clifford algebra, case classification,
invariant connection calculus, Lie algebra identification, and a catalog
of worked model families."""

__version__ = "0.1.0"

from .config import ToleranceConfig, DEFAULT_TOLS
from .exterior import Multivector
from .torsion import classify, sigma_T
from .homogeneous import HomogeneousModel
from .nomizu import NomizuData, LieAlgebraData, CurvatureOperator
