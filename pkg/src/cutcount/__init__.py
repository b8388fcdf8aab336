"""Intersection lattices, Möbius polynomials, and exact face counts for
hyperplane and pseudoline arrangements."""

from .errors import (
    CapExceeded,
    CutcountError,
    DimensionMismatch,
    DuplicateHyperplane,
    FlatNotInLattice,
    MissingMeet,
    NegativeCoefficient,
    NoMinimum,
    NotAPartialOrder,
    OutOfRange,
    ParamError,
    ParseError,
    RankViolation,
    RepeatedCrossing,
    UnknownFlat,
    UnsupportedKind,
)
from .exactgeom import (
    AffineFlat,
    Arrangement,
    Hyperplane,
    arrangement_from_json,
    arrangement_to_json,
    build_lattice,
    intersect,
    parse_rational,
    restrict,
    rref,
)
from .faces import (
    FaceRecord,
    chambers,
    enumerate_faces,
    f_vector_oracle,
    faces_to_json,
    feasible,
)
from .poset import (
    BiPolynomial,
    Flat,
    MobiusTable,
    Semilattice,
    chamber_count,
    f_from_mobius,
    f_vector_from_semilattice,
    mobius,
    mobius_polynomial,
    mobius_table,
    semilattice_from_json,
    semilattice_to_json,
    upper_set,
    validate_semilattice,
)
from .wiring import (
    CrossingEvent,
    WiringDiagram,
    lattice_from_wiring,
    sweep_f_vector,
    validate_wiring,
    wiring_from_json,
    wiring_to_json,
)

__version__ = "0.1.0"
