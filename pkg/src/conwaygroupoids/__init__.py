"""Toolkit for moving-counter puzzles on designs and their groupoids and codes."""

__version__ = "0.1.0"

from .perms import Permutation
from .permgroup import PermutationGroup, BlockSystem, bsgs

__all__ = ["Permutation", "PermutationGroup", "BlockSystem", "bsgs", "__version__"]
