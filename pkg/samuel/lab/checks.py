import logging
from typing import Any, Iterable, Optional, Union

from samuel.lab.formulas import colon_formula_hypotheses, colon_formula_value
from samuel.lab.instance import CorpusInstance, InstanceAnalysis
from samuel.lab.report import HypothesisStatus, TheoremReport, Verdict, weakest

_LOG = logging.getLogger(__name__)

AnyInstance = Union[CorpusInstance, InstanceAnalysis]


def analyze(instance: AnyInstance, conf: Any = None) -> InstanceAnalysis:
    if isinstance(instance, InstanceAnalysis):
        return instance
    return InstanceAnalysis(instance, conf)


def check_bounds(instance: AnyInstance) -> TheoremReport:
    """Sign bounds of the Hilbert coefficients under ``depth R >= d-1``:
    ``e_1 <= 0``, ``e_2 <= 0``, ``e_3 <= 0`` (``d >= 3``),
    ``e_i <= 0`` for ``2 <= i <= d`` when ``depth G(Q) >= d-2``, and
    ``e_d >= -λ(H^0_m(R/(x_1..x_(d-1))))`` when ``depth G(Q) >= d-1``.
    Claims whose hypotheses fail are SKIPPED with the computed values
    """
    a = analyze(instance)
    d, e = a.d, a.e
    depth = a.instance.depth_status()
    report = TheoremReport(instance=a.name)

    def bound(claim: str, status: HypothesisStatus, holds: bool, **values: Any):
        if status == HypothesisStatus.UNMET:
            verdict = Verdict.SKIPPED
        else:
            verdict = Verdict.VERIFIED if holds else Verdict.FAILURE
        report.add(claim, status, verdict, **values)

    for i in [1, 2, 3]:
        if i <= d:
            bound(f"e_{i} <= 0", depth, e[i] <= 0, **{f"e_{i}": e[i]})
    if d >= 2:
        status = weakest(depth, a.vv_status(d - 2))
        bound(
            "e_i <= 0 for 2 <= i <= d",
            status,
            all(x <= 0 for x in e[2:]),
            e=list(e[2:]),
            vv_depth=a.vv.k,
        )
    status = weakest(depth, a.vv_status(d - 1))
    if status != HypothesisStatus.UNMET and not a.regular_prefix(d - 1):
        status = HypothesisStatus.UNMET
    lower = a.surrogate if status != HypothesisStatus.UNMET else None
    bound(
        "e_d >= surrogate",
        status,
        lower is not None and e[d] >= lower,
        e_d=e[d],
        surrogate=lower,
        vv_depth=a.vv.k,
    )
    return report


def check_ed_colon_formula(instance: AnyInstance) -> TheoremReport:
    """Compare the colon length formula on the generators of ``Q`` with the
    fitted ``e_d``; SKIPPED for ``d < 2`` or uncertified hypotheses
    """
    a = analyze(instance)
    report = TheoremReport(instance=a.name)
    if a.d < 2:
        report.add(
            "e_d colon formula",
            HypothesisStatus.UNMET,
            Verdict.SKIPPED,
            note="needs d >= 2",
        )
        return report
    ring, ideal, xs = a.instance.ring, a.instance.ideal, a.instance.xs
    unmet = colon_formula_hypotheses(
        ring,
        ideal,
        xs,
        c_window=a.c_window,
        superficial_nmax=a.superficial_nmax,
        vv_nmax=a.vv_nmax,
    )
    if len(unmet) > 0:
        report.add(
            "e_d colon formula",
            HypothesisStatus.UNMET,
            Verdict.SKIPPED,
            note="uncertified: " + ", ".join(unmet),
            e_d=a.e[a.d],
        )
        return report
    value = colon_formula_value(ring, ideal, xs, a.n_cap)
    report.add(
        "e_d colon formula",
        HypothesisStatus.WINDOW_CERTIFIED,
        Verdict.VERIFIED if value == a.e[a.d] else Verdict.FAILURE,
        e_d=a.e[a.d],
        formula=value,
    )
    return report


def check_e2_equivalences(
    instance: AnyInstance, l_set: Optional[Iterable[int]] = None
) -> TheoremReport:
    """Evaluate the four conditions that are equivalent when
    ``depth R >= d-1``, ``d >= 2`` and ``x_1..x_(d-1)`` is superficial:

    * (a) ``e_2 = 0``
    * (b) ``x_1..x_(d-2), x_(d-1)^l, x_d^l`` is a d-sequence for ``l`` in
      ``l_set``
    * (c) ``x_1..x_d`` is a d-sequence
    * (d) ``depth G(Q) >= d-1`` and ``eta < 2-d``

    All four must agree, a disagreement is a FAILURE. The vanishing chain
    ``e_2 = 0 => e_i = 0`` is appended, see :func:`check_vanishing_chain`
    """
    a = analyze(instance)
    l_set = tuple(a.l_set if l_set is None else l_set)
    report = TheoremReport(instance=a.name)
    status = _equivalence_status(a)
    if status == HypothesisStatus.UNMET:
        report.add(
            "e_2 equivalences",
            status,
            Verdict.SKIPPED,
            note=_equivalence_note(a),
            e_2=a.e[2] if a.d >= 2 else None,
        )
        return report.extend(check_vanishing_chain(a))
    d = a.d
    cond_a = a.e[2] == 0
    witness = {}
    cond_b = True
    for p in l_set:
        rep = a.d_sequence([1] * (d - 2) + [p, p])
        if not rep:
            cond_b = False
            witness["b"] = dict(l=p, index=rep.failing_index, colons=rep.witness)
            break
    rep = a.d_sequence([1] * d)
    cond_c = rep.verdict
    if not cond_c:
        witness["c"] = dict(index=rep.failing_index, colons=rep.witness)
    cond_d = a.vv.k >= d - 1 and a.coefficients.eta < 2 - d
    conds = [cond_a, cond_b, cond_c, cond_d]
    report.add(
        "e_2 equivalences",
        status,
        Verdict.VERIFIED if len(set(conds)) == 1 else Verdict.FAILURE,
        a=cond_a,
        b=cond_b,
        c=cond_c,
        d=cond_d,
        e_2=a.e[2],
        eta=a.coefficients.eta,
        vv_depth=a.vv.k,
        l_set=list(l_set),
        witness=witness,
    )
    return report.extend(check_vanishing_chain(a))


def check_vanishing_chain(instance: AnyInstance) -> TheoremReport:
    """``e_2 = 0`` implies ``e_i = 0`` for ``2 <= i <= d``, under the
    hypotheses of :func:`check_e2_equivalences`; VACUOUS when ``e_2 != 0``
    """
    a = analyze(instance)
    report = TheoremReport(instance=a.name)
    status = _equivalence_status(a)
    if status == HypothesisStatus.UNMET:
        report.add(
            "e_2 = 0 => e_i = 0",
            status,
            Verdict.SKIPPED,
            note=_equivalence_note(a),
        )
    elif a.e[2] != 0:
        report.add("e_2 = 0 => e_i = 0", status, Verdict.VACUOUS, e_2=a.e[2])
    else:
        report.add(
            "e_2 = 0 => e_i = 0",
            status,
            Verdict.VERIFIED if all(x == 0 for x in a.e[2:]) else Verdict.FAILURE,
            e=list(a.e[2:]),
        )
    return report


def check_ed_vanishing_necessary(
    instance: AnyInstance, l_set: Optional[Iterable[int]] = None
) -> TheoremReport:
    """When ``e_d = 0`` (``d >= 2``, ``depth R >= d-1``,
    ``depth G(Q) >= d-2``), ``x_1^l..x_(d-1)^l, x_d^((d-1)l)`` must be a
    d-sequence for every ``l`` in ``l_set``; VACUOUS when ``e_d != 0``
    """
    a = analyze(instance)
    l_set = tuple(a.l_set if l_set is None else l_set)
    report = TheoremReport(instance=a.name)
    claim = "e_d = 0 => powers d-sequence"
    if a.d < 2:
        report.add(claim, HypothesisStatus.UNMET, Verdict.SKIPPED, note="needs d >= 2")
        return report
    d = a.d
    status = weakest(a.instance.depth_status(), a.vv_status(d - 2))
    if status == HypothesisStatus.UNMET:
        report.add(claim, status, Verdict.SKIPPED, e_d=a.e[d])
    elif a.e[d] != 0:
        report.add(claim, status, Verdict.VACUOUS, e_d=a.e[d])
    else:
        failed = [
            p for p in l_set if not a.d_sequence([p] * (d - 1) + [(d - 1) * p])
        ]
        report.add(
            claim,
            status,
            Verdict.VERIFIED if len(failed) == 0 else Verdict.FAILURE,
            l_set=list(l_set),
            failed=failed,
        )
    return report


def check_expectations(instance: AnyInstance) -> TheoremReport:
    """Compare the ``expect`` lines of the definition with computed values"""
    a = analyze(instance)
    definition = a.instance.definition
    report = TheoremReport(instance=a.name)
    expected_e = definition.expected_e()
    if expected_e is not None:
        report.add(
            "expect e",
            HypothesisStatus.CERTIFIED,
            Verdict.VERIFIED if expected_e == list(a.e) else Verdict.FAILURE,
            expected=expected_e,
            computed=list(a.e),
        )
    for key, computed in [("d", a.d), ("eta", None)]:
        expected = definition.expected_int(key)
        if expected is None:
            continue
        if computed is None:
            computed = a.coefficients.eta
        report.add(
            f"expect {key}",
            HypothesisStatus.CERTIFIED,
            Verdict.VERIFIED if expected == computed else Verdict.FAILURE,
            expected=expected,
            computed=computed,
        )
    return report


def run_checks(instance: AnyInstance, conf: Any = None) -> TheoremReport:
    """All checks of one instance in pipeline order"""
    a = analyze(instance, conf)
    _LOG.info("%s: checking, e = %s", a.name, list(a.e))
    report = TheoremReport(instance=a.name)
    report.extend(check_expectations(a))
    report.extend(check_bounds(a))
    report.extend(check_ed_colon_formula(a))
    report.extend(check_e2_equivalences(a))
    report.extend(check_ed_vanishing_necessary(a))
    _LOG.info(
        "%s: %s verified, %s failed, %s skipped",
        a.name,
        report.count(Verdict.VERIFIED),
        report.count(Verdict.FAILURE),
        report.count(Verdict.SKIPPED),
    )
    return report


def _equivalence_status(a: InstanceAnalysis) -> HypothesisStatus:
    if a.d < 2:
        return HypothesisStatus.UNMET
    superficial = (
        HypothesisStatus.WINDOW_CERTIFIED
        if a.superficial_failure() is None
        else HypothesisStatus.UNMET
    )
    return weakest(a.instance.depth_status(), superficial)


def _equivalence_note(a: InstanceAnalysis) -> str:
    if a.d < 2:
        return "needs d >= 2"
    if a.instance.depth_status() == HypothesisStatus.UNMET:
        return "needs depth R >= d-1"
    return f"x_{a.superficial_failure()} is not window superficial"
