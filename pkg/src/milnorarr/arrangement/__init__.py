from .builders import BUILDERS, build_boolean, build_g31, build_gm1, build_gmm
from .core import (
    Arrangement,
    ArrangementError,
    ArrangementFormatError,
    DuplicateHyperplaneError,
    arrangement_from_json,
    load_arrangement,
    loads_arrangement,
    make_arrangement,
    normalize_form,
)
from .lattice import (
    DEFAULT_PROFILE_LIMIT,
    Edge,
    Incidence,
    Lattice,
    ProfileUnavailable,
    codim2_edges,
    codim3_edges,
    compute_lattice,
    decomposition_profile,
    e_gcd,
    incidences,
)

__all__ = [
    "Arrangement",
    "ArrangementError",
    "ArrangementFormatError",
    "BUILDERS",
    "DEFAULT_PROFILE_LIMIT",
    "DuplicateHyperplaneError",
    "Edge",
    "Incidence",
    "Lattice",
    "ProfileUnavailable",
    "arrangement_from_json",
    "build_boolean",
    "build_g31",
    "build_gm1",
    "build_gmm",
    "codim2_edges",
    "codim3_edges",
    "compute_lattice",
    "decomposition_profile",
    "e_gcd",
    "incidences",
    "load_arrangement",
    "loads_arrangement",
    "make_arrangement",
    "normalize_form",
]
