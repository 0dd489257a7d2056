"""Exact tools for a piecewise-linear plateau construction and the shift
orbit it generates: ladder evaluation, window serialization, finite
certificates, and orbit-pair relation verdicts."""

from .certify import (
    REPORT_SCHEMA,
    OnesRunReport,
    ReturnReport,
    RigidityReport,
    WMReport,
    check_ones_runs,
    check_returns,
    check_rigidity,
    check_shift_defect,
    check_wm_returns,
)
from .cli import console_main
from .ladder import (
    DomainError,
    Ladder,
    LadderDepthError,
    LadderError,
    ScheduleViolationError,
    eval_a,
    eval_a0,
    eval_ainf,
    eval_b,
    eval_b0,
    eval_c,
    ladder_new,
)
from .plfunc import PLFunc, make_plfunc, pointwise_max, splice
from .relations import (
    DELTA_SEPARATED_WITNESSED,
    INCONCLUSIVE,
    PAIR_RECURRENT_WITNESSED,
    PROXIMAL_WITNESSED,
    NotFoundInHorizonError,
    OrbitSource,
    OrbitView,
    PairVerdict,
    alpha_source,
    classify_pair,
    constant_source,
    fixture_source,
    ones_source,
    pair_recur_defect,
    prox_defect,
    sep_sup,
    thmB_witnesses,
    thmC_witnesses,
    window_source,
    zeros_source,
)
from .seqio import (
    WINDOW_SCHEMA,
    WindowFormatError,
    dumps_csv,
    dumps_json,
    load_window,
    loads_csv,
    loads_json,
    render_decimal,
)
from .sequence import (
    ClassicKWSpec,
    DistBracket,
    InvalidSpecError,
    SeqWindow,
    alpha,
    alpha_window,
    bebutov_dist_bracket,
    classic_kw_eval,
    constant_window,
    full_shift_rigidity_witness,
    full_shift_transitive_point,
    shift,
)

__version__ = "0.1.0"

__all__ = [
    "REPORT_SCHEMA",
    "WINDOW_SCHEMA",
    "ClassicKWSpec",
    "DELTA_SEPARATED_WITNESSED",
    "DistBracket",
    "DomainError",
    "INCONCLUSIVE",
    "InvalidSpecError",
    "Ladder",
    "LadderDepthError",
    "LadderError",
    "NotFoundInHorizonError",
    "OnesRunReport",
    "OrbitSource",
    "OrbitView",
    "PAIR_RECURRENT_WITNESSED",
    "PLFunc",
    "PROXIMAL_WITNESSED",
    "PairVerdict",
    "ReturnReport",
    "RigidityReport",
    "ScheduleViolationError",
    "SeqWindow",
    "WMReport",
    "WindowFormatError",
    "alpha",
    "alpha_source",
    "alpha_window",
    "bebutov_dist_bracket",
    "check_ones_runs",
    "check_returns",
    "check_rigidity",
    "check_shift_defect",
    "check_wm_returns",
    "classic_kw_eval",
    "classify_pair",
    "console_main",
    "constant_source",
    "constant_window",
    "dumps_csv",
    "dumps_json",
    "eval_a",
    "eval_a0",
    "eval_ainf",
    "eval_b",
    "eval_b0",
    "eval_c",
    "fixture_source",
    "full_shift_rigidity_witness",
    "full_shift_transitive_point",
    "ladder_new",
    "load_window",
    "loads_csv",
    "loads_json",
    "make_plfunc",
    "ones_source",
    "pair_recur_defect",
    "pointwise_max",
    "prox_defect",
    "render_decimal",
    "sep_sup",
    "shift",
    "splice",
    "thmB_witnesses",
    "thmC_witnesses",
    "window_source",
    "zeros_source",
]
