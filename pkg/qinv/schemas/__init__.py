from qinv.schemas.modules import (
    DegreeCheck,
    ModuleFingerprint,
    RepLabel,
    VerifyFailure,
    VerifyReport,
)
from qinv.schemas.renxu import (
    CounterexampleSpec,
    RemarkEstimate,
    StaircaseInfo,
    StaircaseRow,
)
from qinv.schemas.requests import CommandRequest
from qinv.schemas.results import (
    CheckRead,
    ClassifyRead,
    CounterexampleRead,
    DimRead,
    GeneratorRead,
    HilbertRead,
    NoCounterexampleRead,
)
from qinv.schemas.series import HilbertShape, TruncatedSeries

__all__ = (
    "CheckRead",
    "ClassifyRead",
    "CommandRequest",
    "CounterexampleRead",
    "CounterexampleSpec",
    "DegreeCheck",
    "DimRead",
    "GeneratorRead",
    "HilbertRead",
    "HilbertShape",
    "ModuleFingerprint",
    "NoCounterexampleRead",
    "RemarkEstimate",
    "RepLabel",
    "StaircaseInfo",
    "StaircaseRow",
    "TruncatedSeries",
    "VerifyFailure",
    "VerifyReport",
)
