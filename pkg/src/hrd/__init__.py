"""Hierarchical rectangular dissections.

Permutation predicates (Baxter, simple), substitution decomposition, mosaic
floorplan geometry with the deletion-order labeling bijection, skewed
generating trees, exact counting of order-k dissections, and the insertion
families behind the 3**(n-k) lower bound.
"""

__version__ = "0.1.0"

from .perm import Permutation

__all__ = ["Permutation", "__version__"]
