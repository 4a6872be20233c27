"""Exact structure theory of small Lie algebras over GF(p) and Q."""

from .algebra import (
    LieAlgebra,
    Subalgebra,
    adjoint,
    bracket,
    change_basis,
    closure_space,
    generated_subalgebra,
    ideal_closure,
    is_ideal,
    is_subalgebra,
    quotient,
    restrict,
    validate,
)
from .config import DEFAULT, ScanConfig
from .errors import (
    CapExceeded,
    JacobiViolation,
    LieError,
    Unsupported,
)
from .fields import GF, Q, Field
from .fileformat import parse, serialize
from .linalg import Matrix, Subspace
from .props import (
    decide,
    derived_series,
    frattini,
    is_nilpotent,
    is_simple,
    is_solvable,
    is_strongly_solvable,
    is_supersolvable,
    lower_central_series,
    property_report,
    supersolvable_flag,
)
from .scans import (
    enumerate_subalgebras,
    is_two_generated,
    maximal_subalgebras,
    twogen_subalgebra_scan,
)
from .triang import fitting_decomposition, is_nil_on, is_triangulable_on, nil_ideal

__all__ = [name for name in dir() if not name.startswith("_")]
