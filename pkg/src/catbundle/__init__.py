"""Categorical principal bundles from local cocycle data over finite bases.

The pipeline: finite groups wired into two chained crossed modules, a covered
base graph, gerbal (h, j) data on overlaps, the derived functorial cocycle,
the coset quotient that turns it into an honest transition cocycle, and the
glued total category with its fiberwise group action, local trivializations,
and a decidable morphism equality cross-checked by exact linear algebra.
"""

from .bundle import (
    BundleMorphism,
    BundleObject,
    BundleSpace,
    LocalTrivialization,
    QuiverEdge,
    check_bundle_axioms,
)
from .complexes import CoverComplex, PathMor, enumerate_paths
from .crossed import (
    Arrow,
    ChainedCrossedModules,
    CrossedModule,
    SemidirectProduct,
    check_tau_image_normal,
    validate_peiffer,
)
from .errors import (
    CompositionError,
    DomainError,
    InternalInvariantError,
    PreconditionError,
    SchemaError,
)
from .functorial import FunctorialCocycle, check_naturality, check_theta_functorial
from .gerbal import (
    GerbalCocycle,
    check_second_gerbe,
    derive_tower,
    generate_gerbal,
    validate_gerbal,
)
from .groups import FiniteGroup, GroupAction, GroupHom
from .presets import build_instance, preset_names
from .quotient import QuotientCatGroup, build_quotient, check_JH_normal
from .report import Report
from .schema import Instance, instance_from_json, instance_to_json
from .suites import run_suite
from .wordalg import WordOracle, check_oracle_agreement

__version__ = "0.1.0"

__all__ = [
    "Arrow",
    "BundleMorphism",
    "BundleObject",
    "BundleSpace",
    "ChainedCrossedModules",
    "CompositionError",
    "CoverComplex",
    "CrossedModule",
    "DomainError",
    "FiniteGroup",
    "FunctorialCocycle",
    "GerbalCocycle",
    "GroupAction",
    "GroupHom",
    "Instance",
    "InternalInvariantError",
    "LocalTrivialization",
    "PathMor",
    "PreconditionError",
    "QuiverEdge",
    "QuotientCatGroup",
    "Report",
    "SchemaError",
    "SemidirectProduct",
    "WordOracle",
    "build_instance",
    "build_quotient",
    "check_JH_normal",
    "check_bundle_axioms",
    "check_naturality",
    "check_oracle_agreement",
    "check_second_gerbe",
    "check_tau_image_normal",
    "check_theta_functorial",
    "derive_tower",
    "enumerate_paths",
    "generate_gerbal",
    "instance_from_json",
    "instance_to_json",
    "preset_names",
    "run_suite",
    "validate_gerbal",
    "validate_peiffer",
]
