"""Maslov-type intersection indices for linear Hamiltonian systems.

The package computes the Maslov index of Lagrangian paths through a
regular-crossing form, the Conley-Zehnder index of symplectic paths via
the graph construction, Krein signatures of imaginary eigenvalues, and
the Kashiwara triple index with its symplectic-reduction and Hormander
variants.  For an autonomous system w'(x) = H w(x) the two path routes
are tied together by a closed formula through an explicit correction
matrix, and `validate` cross-checks every route on one system.
"""

from .errors import (
    AsymmetricInput,
    CalibrationFailure,
    ComplementFailure,
    DegenerateForm,
    DimensionMismatch,
    EmptyKernel,
    GridTooCoarse,
    InputError,
    InternalMismatch,
    KNotAdmissible,
    NonHermitianInput,
    NonRegularCrossing,
    NotAnEigenvalue,
    NotHamiltonian,
    NotIsotropic,
    NotLagrangian,
    NotOnUnitCircle,
    NotSemisimple,
    NotSymplectic,
    OddDimension,
    SingularA,
    SymindexError,
    SymmetryDefect,
    TransversalityViolated,
    UnclassifiableSpectrum,
)
from .halfint import HalfInt
from .numerics import (
    DEFAULT_TOL,
    Inertia,
    Tolerances,
    herm_signature,
    sym_signature,
)
from .symplectic import (
    LagrangianFrame,
    SymplecticReduction,
    SymplecticSpace,
    darboux_frame,
    diagonal_lagrangian,
    graph_lagrangian,
    horizontal_lagrangian,
    intersection_dim,
    is_hamiltonian,
    is_symplectic,
    lagrangian_frame,
    plane_block_generator,
    random_hamiltonian,
    random_lagrangian,
    random_symplectic,
    standard_J,
    subspace_intersection,
    symplectic_orthogonal,
    symplectic_reduction,
    vertical_lagrangian,
)
from .krein import (
    KreinEigenvalue,
    NormalFormBlock,
    classify_normal_form,
    is_semisimple,
    krein_positive_angles,
    krein_signature,
    krein_spectrum,
    normal_form_matrix,
    standard_direct_sum,
)
from .maslov import (
    Crossing,
    CrossingScan,
    LagrangianPath,
    conley_zehnder,
    crossing_form,
    find_crossings,
    graph_path,
    maslov_index,
    maslov_index_symplectic,
    orbit_path,
    path_from_frames,
    rotation_graph_index,
    rotation_orbit_index,
    spectral_conley_zehnder,
    spectral_maslov,
    unitary_geodesic,
)
from .kashiwara import (
    hormander_index,
    kashiwara_form,
    kashiwara_index,
    kashiwara_reduced,
    kashiwara_transversal,
    transversal_triple,
)
from .autonomous import (
    PUBLISHED_SIGN,
    HamiltonianSystem,
    IndexReport,
    TripleCheck,
    calibrate_sign,
    correction_matrix,
    correction_sign,
    fundamental_solution,
    make_system,
    maslov_via_formula,
    transversality_H,
    triple_index_cross_check,
    triple_routes_from,
    validate,
)

__all__ = [
    "AsymmetricInput",
    "CalibrationFailure",
    "ComplementFailure",
    "Crossing",
    "CrossingScan",
    "DEFAULT_TOL",
    "DegenerateForm",
    "DimensionMismatch",
    "EmptyKernel",
    "GridTooCoarse",
    "HalfInt",
    "HamiltonianSystem",
    "IndexReport",
    "Inertia",
    "InputError",
    "InternalMismatch",
    "KNotAdmissible",
    "KreinEigenvalue",
    "LagrangianFrame",
    "LagrangianPath",
    "NonHermitianInput",
    "NonRegularCrossing",
    "NormalFormBlock",
    "NotAnEigenvalue",
    "NotHamiltonian",
    "NotIsotropic",
    "NotLagrangian",
    "NotOnUnitCircle",
    "NotSemisimple",
    "NotSymplectic",
    "OddDimension",
    "PUBLISHED_SIGN",
    "SingularA",
    "SymindexError",
    "SymmetryDefect",
    "SymplecticReduction",
    "SymplecticSpace",
    "Tolerances",
    "TransversalityViolated",
    "TripleCheck",
    "UnclassifiableSpectrum",
    "calibrate_sign",
    "classify_normal_form",
    "conley_zehnder",
    "correction_matrix",
    "correction_sign",
    "crossing_form",
    "darboux_frame",
    "diagonal_lagrangian",
    "find_crossings",
    "fundamental_solution",
    "graph_lagrangian",
    "graph_path",
    "herm_signature",
    "hormander_index",
    "horizontal_lagrangian",
    "intersection_dim",
    "is_hamiltonian",
    "is_semisimple",
    "is_symplectic",
    "kashiwara_form",
    "kashiwara_index",
    "kashiwara_reduced",
    "kashiwara_transversal",
    "krein_positive_angles",
    "krein_signature",
    "krein_spectrum",
    "lagrangian_frame",
    "make_system",
    "maslov_index",
    "maslov_index_symplectic",
    "maslov_via_formula",
    "normal_form_matrix",
    "orbit_path",
    "path_from_frames",
    "plane_block_generator",
    "random_hamiltonian",
    "random_lagrangian",
    "random_symplectic",
    "rotation_graph_index",
    "rotation_orbit_index",
    "spectral_conley_zehnder",
    "spectral_maslov",
    "standard_J",
    "standard_direct_sum",
    "subspace_intersection",
    "symplectic_orthogonal",
    "symplectic_reduction",
    "sym_signature",
    "transversal_triple",
    "transversality_H",
    "triple_index_cross_check",
    "triple_routes_from",
    "unitary_geodesic",
    "validate",
    "vertical_lagrangian",
]

__version__ = "0.1.0"
