"""Standard monomial theory for determinantal varieties and the symplectic nullcone.

The package computes with double tableaux and their distributive lattices,
Gelfand-Tsetlin patterns and lattice cones, exact straightening of products
of minors, and the rewriting of minors modulo the nullcone ideal.
"""

from .errors import DomainError, InvariantViolation, NullconeError, ParameterError, ResourceError
from .nullcone import (
    IndependenceReport,
    NullconeContext,
    OmegaSum,
    basic_invariant,
    basis_independence_check,
    dim_gl,
    dim_sp,
    enumerate_n_standard,
    in_ideal_exact,
    n_straighten,
    omega_sum_for,
    sample_nullcone_point,
    theta_element,
    vanishes_on_nullcone,
)
from .patterns import (
    GTPattern,
    GTPoset,
    cone_inequalities,
    enumerate_cone_points,
    glue,
    in_nullcone_poset,
    pattern_add,
    pattern_from_tableau,
    pattern_of_standard,
    reduce_mod_top,
    split_glued,
    tableau_from_pattern,
)
from .poly import Exterior, Poly, minor, omega, wedge
from .straighten import StandardCombination, WeightConfig, leading_term, shape_leading, straighten, weight
from .tableaux import (
    DoubleTableau,
    Lattice,
    OneLineTableau,
    SemistandardTableau,
    Shape,
    compare,
    enumerate_lattice,
    enumerate_ssyt,
    enumerate_standard,
    precedes,
    xi,
    xi_inverse,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
