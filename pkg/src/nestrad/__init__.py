"""Elementary functions from one doubled-angle polynomial and its radical inverse.

cos and cosh come from iterating -1 + 2*y**2 on a short series seed;
acos and acosh run the chain backwards as nested square roots.  Sign
choices on the radicals, ordered by a Gray code, select every other
branch of the inverses.  The remaining elementary functions (sin, tan,
log, exp, their inverses and hyperbolic twins) reduce to these four.
Exact rational expansion, closed-form oracles, and a CLI round it out.
"""

from .branches import (
    branch_oracle_acos,
    extract_branch,
    gray_adjacent_distance,
    gray_signs,
    nested_acos_branch,
    nested_acosh_branch,
)
from .core import (
    DEFAULT_CONFIG,
    DEPTH_CAP,
    EvalConfig,
    Scalar,
    acos_outer,
    acosh_outer,
    check_depth,
    cos_seed,
    cosh_seed,
    double_angle_step,
    half_angle_step,
    nested_acos,
    nested_acos_sequence,
    nested_acosh,
    nested_acosh_sequence,
    nested_cos,
    nested_cos_sequence,
    nested_cosh,
    nested_cosh_sequence,
    principal_sqrt,
)
from .derived import (
    exp_limit,
    log_limit,
    nested_asin,
    nested_asinh,
    nested_atan,
    nested_atanh,
    nested_exp,
    nested_log,
    nested_sin,
    nested_sinh,
    nested_tan,
    nested_tanh,
)
from .expand import (
    EXPANSION_DEPTH_CAP,
    RationalPoly,
    expand_nested_cos,
    maclaurin_error_profile,
)
from .verify import (
    FUNCTIONS,
    ConvergenceRow,
    EvalReport,
    FunctionSpec,
    Table1Row,
    Table2Row,
    converge,
    eval_report,
    make_report,
    ref_acos,
    ref_acosh,
    reproduce_table1,
    reproduce_table2,
    sweep_branches,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CONFIG",
    "DEPTH_CAP",
    "EXPANSION_DEPTH_CAP",
    "ConvergenceRow",
    "EvalConfig",
    "EvalReport",
    "FUNCTIONS",
    "FunctionSpec",
    "RationalPoly",
    "Scalar",
    "Table1Row",
    "Table2Row",
    "acos_outer",
    "acosh_outer",
    "branch_oracle_acos",
    "check_depth",
    "converge",
    "cos_seed",
    "cosh_seed",
    "double_angle_step",
    "eval_report",
    "exp_limit",
    "expand_nested_cos",
    "extract_branch",
    "gray_adjacent_distance",
    "gray_signs",
    "half_angle_step",
    "log_limit",
    "maclaurin_error_profile",
    "make_report",
    "nested_acos",
    "nested_acos_branch",
    "nested_acos_sequence",
    "nested_acosh",
    "nested_acosh_branch",
    "nested_acosh_sequence",
    "nested_asin",
    "nested_asinh",
    "nested_atan",
    "nested_atanh",
    "nested_cos",
    "nested_cos_sequence",
    "nested_cosh",
    "nested_cosh_sequence",
    "nested_exp",
    "nested_log",
    "nested_sin",
    "nested_sinh",
    "nested_tan",
    "nested_tanh",
    "principal_sqrt",
    "ref_acos",
    "ref_acosh",
    "reproduce_table1",
    "reproduce_table2",
    "sweep_branches",
]
