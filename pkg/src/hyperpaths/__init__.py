__version__ = "1.0.0"

from .path_utils import (Direction, Support, EnhancedStep, MonotonePath, PathUtils,
                         HyperpathsError, InvalidParameter, InvalidSupport, InvalidStepSequence, InvalidLatticePath,
                         Unsupported, ResourceLimit, NonGenericOmega, ClassificationError)
from .hypersimplex import HypersimplexCore
from .lattice_paths import LatticePath, LatticePaths
from .coherence import CoherenceOracle
from .lifting import ESPath, Lifting
from .generator import EndingType, CoherentGenerator
from .counting import CoherentCounting
from .geometry import MonotonePathPolytope
