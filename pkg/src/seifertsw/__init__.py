"""Exact computations for Seifert fibered spaces: critical sets of the
Chern-Simons flow, levels, expected flow dimensions via the resolved ruled
surface, and irreducible Floer homology tables for Seifert homology
spheres. All arithmetic is exact rational."""

from .errors import (
    BaseMismatch,
    DegenerateReducible,
    DomainError,
    FromReducible,
    InvalidPair,
    JOutOfRange,
    NonCoprime,
    NonCoprimeModuli,
    NonIsolatedCritical,
    OppositeSign,
    ParseError,
    SingularMatrix,
    WrongOrientation,
    ZeroDegree,
)
from .hj import (
    Decomposition,
    HJChain,
    decompose,
    expand,
    lattice_hull,
    pullback_chern_numbers,
)
from .linalg import Rational, crt_solve, smith_normal_form, solve_exact
from .moduli import (
    REDUCIBLE,
    BoundaryDegreeWarning,
    CriticalComponent,
    FloerTable,
    chern_simons_coefficient,
    enumerate_components,
    floer_table,
    half_canonical_floor,
    interpolation_dimension,
)
from .notation import (
    format_bundle,
    format_manifold,
    parse_bundle,
    parse_manifold,
)
from .orbifold import (
    BundleData,
    OrbifoldBase,
    ReducibleStatus,
    SeifertFibration,
    brieskorn_fibration,
    canonical_bundle,
    euler_characteristic,
    in_picard_image,
    orbi_spin_bundle,
    picard_quotient,
    reducible_nondegeneracy,
    same_spinc_class,
    sheaf_euler_characteristic,
    trivial_bundle,
)
from .resolution import (
    ChernVector,
    PlumbingLattice,
    build_lattice,
    canonical_evaluations,
    chern_coordinates,
    chern_evaluations,
    expected_dimension,
    expected_dimension_series,
    flow_dimension,
    lattice_dimension,
)

__version__ = "0.1.0"

__all__ = [
    "BaseMismatch",
    "BoundaryDegreeWarning",
    "BundleData",
    "ChernVector",
    "CriticalComponent",
    "Decomposition",
    "DegenerateReducible",
    "DomainError",
    "FloerTable",
    "FromReducible",
    "HJChain",
    "InvalidPair",
    "JOutOfRange",
    "NonCoprime",
    "NonCoprimeModuli",
    "NonIsolatedCritical",
    "OppositeSign",
    "OrbifoldBase",
    "ParseError",
    "PlumbingLattice",
    "Rational",
    "REDUCIBLE",
    "ReducibleStatus",
    "SeifertFibration",
    "SingularMatrix",
    "WrongOrientation",
    "ZeroDegree",
    "brieskorn_fibration",
    "build_lattice",
    "canonical_bundle",
    "canonical_evaluations",
    "chern_coordinates",
    "chern_evaluations",
    "chern_simons_coefficient",
    "crt_solve",
    "decompose",
    "enumerate_components",
    "euler_characteristic",
    "expand",
    "expected_dimension",
    "expected_dimension_series",
    "floer_table",
    "flow_dimension",
    "format_bundle",
    "format_manifold",
    "half_canonical_floor",
    "in_picard_image",
    "interpolation_dimension",
    "lattice_dimension",
    "lattice_hull",
    "orbi_spin_bundle",
    "parse_bundle",
    "parse_manifold",
    "picard_quotient",
    "pullback_chern_numbers",
    "reducible_nondegeneracy",
    "same_spinc_class",
    "sheaf_euler_characteristic",
    "smith_normal_form",
    "solve_exact",
    "trivial_bundle",
]
