"""Surface-code dislocation lattices and exact code-distance search."""

from .pauli import (
    ErrorModel,
    PauliOperator,
    commutes,
    compose,
    format_pauli,
    identity,
    parse_pauli,
    weight,
)
from .lattice import (
    Boundary,
    DislocationSpec,
    GeneratorKind,
    LatticeError,
    LatticeSpec,
    SchemaError,
    StabilizerCode,
    build_code,
    build_dislocation_code,
    build_plain_patch,
    default_dislocation_spec,
    load_code,
    qubit_on_dislocation,
    save_code,
)
from .codecheck import (
    CodeError,
    ErrorClass,
    ErrorKind,
    LogicalPair,
    ValidationReport,
    classify,
    extract_logicals,
    logical_count,
    syndrome,
    validate,
)

__version__ = "0.1.0"
