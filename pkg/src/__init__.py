"""hooklab - exact verification of hook-length formula identities"""

from .shapes import (
    Cell,
    Partition,
    SkewShape,
    hook,
    hooks,
    parse_partition,
    parse_skew,
)

from .tableaux import (
    Tableau,
    SetValuedTableau,
    enum_SYT,
    enum_SIT,
    enum_SSYT_maxentry,
    enum_IT_maxentry,
    enum_weight_bounded,
    enum_BSYT,
    enum_SSVT,
)

from .diagrams import (
    Diagram,
    excited_diagrams,
    generalized_excited_diagrams,
    excited_peaks,
    pleasant_diagrams,
)

from .grothendieck import (
    EvalContext,
    G_tableau,
    G_determinant,
    double_grothendieck_vexillary,
    principal_specialization,
)

from .permutations import (
    Permutation,
    parse_permutation,
)

from .verifiers import (
    REGISTRY,
    VerifyOptions,
    VerificationReport,
    run_identity,
)

from .errors import (
    HooklabError,
    PoleError,
    UnsupportedMode,
)

__version__ = "0.1.0"
__all__ = [
    "Cell",
    "Partition",
    "SkewShape",
    "hook",
    "hooks",
    "parse_partition",
    "parse_skew",
    "Tableau",
    "SetValuedTableau",
    "enum_SYT",
    "enum_SIT",
    "enum_SSYT_maxentry",
    "enum_IT_maxentry",
    "enum_weight_bounded",
    "enum_BSYT",
    "enum_SSVT",
    "Diagram",
    "excited_diagrams",
    "generalized_excited_diagrams",
    "excited_peaks",
    "pleasant_diagrams",
    "EvalContext",
    "G_tableau",
    "G_determinant",
    "double_grothendieck_vexillary",
    "principal_specialization",
    "Permutation",
    "parse_permutation",
    "REGISTRY",
    "VerifyOptions",
    "VerificationReport",
    "run_identity",
    "HooklabError",
    "PoleError",
    "UnsupportedMode",
]
