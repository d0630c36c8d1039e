"""Two-coefficient causal interfaces for 2x2 interaction tables."""

from .curve import (
    ConfusionDistribution,
    CurveGeometry,
    GeometryKind,
    InterfaceDecomposition,
    InterfacePoint,
    decompose,
    eps1_of_eps0,
    geometry,
    on_curve,
    point_from_sigma,
    sample_curve,
    sigma_from_point,
)
from .epistemologies import (
    Custom,
    Epistemology,
    InterfaceSolution,
    Status,
    compare_all,
    solve,
)
from .errors import (
    DegenerateGeometry,
    DegenerateInterface,
    DiagonalTable,
    InterfaceError,
    InvalidTable,
    NotCanonical,
    OffCurve,
    OutOfRange,
    SigmaOutOfRange,
    ZeroColumn,
    ZeroRow,
    ZeroTotal,
)
from .generative import (
    GenerativeSpec,
    SimulationResult,
    expected_table,
    maxcause_numeric,
    round_trip,
    sample_counts,
)
from .measures import (
    EffectMeasures,
    SymmetricDecomposition,
    effect_index,
    measures,
    negative_effect_index,
    symmetric_confusion,
)
from .tables import (
    CanonicalizationRecord,
    CountTable,
    FrequencyTable,
    RowStochasticTable,
    ValidationReport,
    canonicalize,
    from_counts,
    margins,
    row_normalize,
    validate,
)

__version__ = "0.1.0"
