from ._hopnorms import *  # noqa: F401,F403
from ._hopnorms import HopnormsError, InvalidInput, NumericalFailure, SingularEvaluation, UnsupportedByTheory

__all__ = [name for name in dir() if not name.startswith("_")]
