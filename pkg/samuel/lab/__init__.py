# flake8: noqa
from samuel.lab.checks import (
    check_bounds,
    check_e2_equivalences,
    check_ed_colon_formula,
    check_ed_vanishing_necessary,
    check_expectations,
    check_vanishing_chain,
    run_checks,
)
from samuel.lab.corpus import BUILTIN_CORPUS, load_corpus, run_corpus, run_instance
from samuel.lab.formulas import (
    colon_formula_value,
    ed_colon_formula,
    idealization_coeffs,
    idealization_cross_check,
    lower_bound_surrogate,
)
from samuel.lab.instance import CorpusInstance, InstanceAnalysis
from samuel.lab.report import (
    AggregateReport,
    ClaimRecord,
    HilbertReport,
    HypothesisStatus,
    InstanceReport,
    TheoremReport,
    Verdict,
)
