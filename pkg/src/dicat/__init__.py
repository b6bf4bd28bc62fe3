"""Double categories with dinatural transformations, folds and zigzags,
machine-checked on finite instances."""
from .core import (Budget, CompositionError, ConstructionError, DicatError, DoubleCategory,
                   LawReport, MissingComponentError, SquareBoundary, check_axioms, co, dual_pairing,
                   empty, product, singleton)
from .functor import DFunctor, check_functor, dummy_difunctor

__version__ = "0.1.0"
