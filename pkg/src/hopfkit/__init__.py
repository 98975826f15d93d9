"""Exact finite-dimensional Hopf algebra toolkit.

Scalars live in cyclotomic fields Q(zeta_N); every structure map is an exact
sparse matrix.  Main entry points: group algebras and their duals
(:mod:`hopfkit.hopf`), Drinfeld doubles and their morphisms
(:mod:`hopfkit.double`) and tensor decompositions (:mod:`hopfkit.decomposition`).
"""
__version__ = "0.1.0"

from .cyclotomic import CycNumber
from .linalg import Mat
from .groups import FiniteGroup, parse_group_spec
from .hopf import FinHopf, HopfMap, build_group_algebra, build_dual_group_algebra, tensor_hopf
from .double import drinfeld_double, tensor_form, block_aut_order, dihedral_aut_order

__all__ = ["CycNumber", "Mat", "FiniteGroup", "parse_group_spec", "FinHopf", "HopfMap",
           "build_group_algebra", "build_dual_group_algebra", "tensor_hopf",
           "drinfeld_double", "tensor_form", "block_aut_order", "dihedral_aut_order",
           "__version__"]
