"""Finite quantales, quantale modules, tense operators and the three
adjunctions between frames, operator modules and powers."""

from .errors import (BudgetExceeded, ParseError, SizeLimitExceeded,
                     TensalgError, UnknownReference, ValidationError)
from .lattice import (FinLattice, enumerate_join_preserving_maps,
                      validate_lattice)
from .quantale import Quantale, is_commutative, residuate, validate_quantale
from .vmodule import (ModuleHom, VModule, compose_module_homs,
                      enumerate_module_homs, identity_module_hom,
                      is_module_hom, module_residuate, power_module,
                      validate_module)
from .frames import (FrameHom, VFrame, compose_frame_homs,
                     enumerate_frame_homs, is_frame_hom, validate_frame)
from .fsemilattice import (FSemilattice, construct_FJ, fj_apply_tuple,
                           is_lax_morphism, lift_hom_FJ,
                           restrict_along_frame_hom, validate_fsemilattice)
from .nucleus import (Congruence, EndoOperator, closure_of,
                      congruence_from_nucleus, factor_through, is_nucleus,
                      is_prenucleus, nucleus_from_congruence,
                      prenucleus_from_pairs, quotient)
from .functors import (HomFrame, TensorModule, hom_frame,
                       hom_frame_contravariant, hom_frame_covariant, tensor,
                       tensor_frame_hom, tensor_lax_hom)
from .adjunctions import (CheckReport, CheckResult, run_all_triangles)
from .workspace import Workspace, document, load, loads, save

__all__ = [
    "BudgetExceeded", "ParseError", "SizeLimitExceeded", "TensalgError",
    "UnknownReference", "ValidationError",
    "FinLattice", "enumerate_join_preserving_maps", "validate_lattice",
    "Quantale", "is_commutative", "residuate", "validate_quantale",
    "ModuleHom", "VModule", "compose_module_homs", "enumerate_module_homs",
    "identity_module_hom", "is_module_hom", "module_residuate",
    "power_module", "validate_module",
    "FrameHom", "VFrame", "compose_frame_homs", "enumerate_frame_homs",
    "is_frame_hom", "validate_frame",
    "FSemilattice", "construct_FJ", "fj_apply_tuple", "is_lax_morphism",
    "lift_hom_FJ", "restrict_along_frame_hom", "validate_fsemilattice",
    "Congruence", "EndoOperator", "closure_of", "congruence_from_nucleus",
    "factor_through", "is_nucleus", "is_prenucleus",
    "nucleus_from_congruence", "prenucleus_from_pairs", "quotient",
    "HomFrame", "TensorModule", "hom_frame", "hom_frame_contravariant",
    "hom_frame_covariant", "tensor", "tensor_frame_hom", "tensor_lax_hom",
    "CheckReport", "CheckResult", "run_all_triangles",
    "Workspace", "document", "load", "loads", "save",
]
