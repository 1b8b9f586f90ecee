"""Exact computations for real cyclic and abelian coverings.

Modules:
  abelian       finite abelian groups, homomorphisms, subgroups
  involutions   involutions of Z/n and of general finite abelian groups
  group_ext     the semidirect product G x| Z/2 and the basic case types
  funcfield     Q(i)(t1..tk), its conjugation, quadratic extensions
  extensions    the four basic extension types, power criterion, fibre products
  building_data carry bits, character classes and reality checks
  cli           command-line front end
"""

from .abelian import FinAbGroup, GroupHom, Subgroup, element_order, hom_kernel_image, n_torsion, primary_decompose
from .building_data import (
    CyclicBuildingData,
    PicModel,
    TauAction,
    abelian_building_data_verify,
    epsilon,
    epsilon_abelian,
    epsilon_identities,
    lchi_all,
    verify_connectedness,
    verify_real_building_data,
)
from .errors import InputError, RealCyclicError, TheoremViolation
from .extensions import (
    FactoredRatFunc,
    build_dihedral_like,
    build_esoteric,
    build_standard,
    build_twisted,
    check_power_criterion,
    decompose_to_basic,
    fibre_product,
)
from .funcfield import GaussRational, MultiPoly, QuadExtElement, RatFunc, parse_ratfunc, quad_pow, rf_conj, rf_eq
from .funcfield import rf_is_imaginary, rf_is_real, rf_is_square
from .group_ext import SemidirectElement, SemidirectGroup, basic_case_type, even_subgroup, sd_multiply, verify_presentation
from .involutions import (
    analyze_involution,
    classify_cyclic_involution,
    enumerate_compatible_involutions,
    enumerate_cyclic_involutions,
    split_odd_primary,
)

__all__ = [
    "abelian_building_data_verify",
    "analyze_involution",
    "basic_case_type",
    "build_dihedral_like",
    "build_esoteric",
    "build_standard",
    "build_twisted",
    "check_power_criterion",
    "classify_cyclic_involution",
    "CyclicBuildingData",
    "decompose_to_basic",
    "element_order",
    "enumerate_compatible_involutions",
    "enumerate_cyclic_involutions",
    "epsilon",
    "epsilon_abelian",
    "epsilon_identities",
    "even_subgroup",
    "FactoredRatFunc",
    "fibre_product",
    "FinAbGroup",
    "GaussRational",
    "GroupHom",
    "hom_kernel_image",
    "InputError",
    "lchi_all",
    "MultiPoly",
    "n_torsion",
    "parse_ratfunc",
    "PicModel",
    "primary_decompose",
    "quad_pow",
    "QuadExtElement",
    "RatFunc",
    "RealCyclicError",
    "rf_conj",
    "rf_eq",
    "rf_is_imaginary",
    "rf_is_real",
    "rf_is_square",
    "sd_multiply",
    "SemidirectElement",
    "SemidirectGroup",
    "split_odd_primary",
    "Subgroup",
    "TauAction",
    "TheoremViolation",
    "verify_connectedness",
    "verify_presentation",
    "verify_real_building_data",
]

__version__ = "0.1.0"
