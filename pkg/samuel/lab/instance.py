import logging
from typing import Any, List, Optional, Sequence, Tuple

from samuel.collections.dict import ParamDict
from samuel.constants import (
    CONF_C_WINDOW,
    CONF_L_SET,
    CONF_NCAP,
    CONF_NMAX,
    CONF_SUPERFICIAL_NMAX,
    CONF_VV_NMAX,
    CONF_WORKERS,
    SAMUEL_DEFAULT_C_WINDOW,
    SAMUEL_DEFAULT_L_SET,
    SAMUEL_DEFAULT_NCAP,
    SAMUEL_DEFAULT_WORKERS,
    SAMUEL_LAB_SUPERFICIAL_NMAX,
    SAMUEL_LAB_VV_NMAX,
)
from samuel.hilbert import (
    GradedSeries,
    HilbertCoefficients,
    HilbertTable,
    VVDepthCertificate,
    fit_coefficients,
    graded_series,
    hilbert_samuel_table,
    vv_depth_certificate,
)
from samuel.lab.formulas import lower_bound_surrogate, superficial_sequence_status
from samuel.lab.report import HilbertReport, HypothesisStatus, VVDepthRecord
from samuel.local.definition import RingDefinition
from samuel.local.length import is_parameter_ideal
from samuel.local.ring import RingElement
from samuel.sequences import SequenceReport, is_d_sequence, is_regular_sequence
from samuel.utils.assertion import assert_or_throw
from samuel.utils.threading import RunOnce

_LOG = logging.getLogger(__name__)


class CorpusInstance(object):
    """A ring definition with its parameter ideal ``Q`` (the ideal named ``Q``
    or the first declared one) and the declared metadata

    :param definition: the parsed definition
    """

    def __init__(self, definition: RingDefinition):
        self.definition = definition
        self.name = definition.name
        self.ring, self.ideals = definition.build()
        self.ideal = self.ideals[definition.parameter_ideal_name()]
        self.declared_d = definition.expected_int("d")
        self.depth_class: Optional[str] = definition.expect.get("depth_class")

    @property
    def d(self) -> int:
        return self.ring.dim

    @property
    def xs(self) -> List[RingElement]:
        return self.ideal.generators

    def validate(self, n_cap: int = SAMUEL_DEFAULT_NCAP) -> "CorpusInstance":
        """Check that ``Q`` is a parameter ideal and the declared dimension
        matches

        :raises ValueError: if not
        """
        assert_or_throw(
            self.declared_d is None or self.declared_d == self.d,
            ValueError(f"{self.name}: declared d={self.declared_d}, found {self.d}"),
        )
        assert_or_throw(
            is_parameter_ideal(self.ring, self.xs, n_cap),
            ValueError(f"{self.name}: {self.ideal} is not a parameter ideal"),
        )
        return self

    def depth_status(self) -> HypothesisStatus:
        """Status of the running hypothesis ``depth R >= d-1``"""
        if self.ring.is_regular():
            return HypothesisStatus.CERTIFIED
        if self.depth_class in ["cm", "d-1"]:
            return HypothesisStatus.DECLARED
        return HypothesisStatus.UNMET


class InstanceAnalysis(object):
    """Lazily computed invariants of a corpus instance, shared by all checks.
    Every value is computed once; windows and caps come from ``conf``

    :param instance: the instance
    :param conf: settings, see :mod:`samuel.constants`
    """

    def __init__(self, instance: CorpusInstance, conf: Any = None):
        self.instance = instance
        self.conf = ParamDict(conf)
        d = instance.d
        # the fit needs 2d+3 values, one extra index certifies eta
        self.n_max = self.conf.get(CONF_NMAX, 2 * d + 4)
        self.n_cap = self.conf.get(CONF_NCAP, SAMUEL_DEFAULT_NCAP)
        self.c_window = self.conf.get(CONF_C_WINDOW, SAMUEL_DEFAULT_C_WINDOW)
        self.superficial_nmax = self.conf.get(
            CONF_SUPERFICIAL_NMAX, SAMUEL_LAB_SUPERFICIAL_NMAX
        )
        self.vv_nmax = self.conf.get(CONF_VV_NMAX, SAMUEL_LAB_VV_NMAX)
        self.l_set: Tuple[int, ...] = self.conf.get(CONF_L_SET, SAMUEL_DEFAULT_L_SET)
        self.workers = self.conf.get(CONF_WORKERS, SAMUEL_DEFAULT_WORKERS)
        self._table = RunOnce(self._compute_table)
        self._coeffs = RunOnce(lambda: fit_coefficients(self.table, d))
        self._vv = RunOnce(
            lambda: vv_depth_certificate(
                instance.ring, instance.ideal, instance.xs, self.vv_nmax
            )
        )
        self._superficial = RunOnce(self._compute_superficial)
        self._surrogate = RunOnce(
            lambda: lower_bound_surrogate(instance.ring, instance.xs, self.n_cap)
        )
        self._regular = RunOnce(
            lambda k: is_regular_sequence(instance.ring, instance.xs[:k])
        )
        self._dseq = RunOnce(self._compute_d_sequence)

    @property
    def name(self) -> str:
        return self.instance.name

    @property
    def d(self) -> int:
        return self.instance.d

    @property
    def table(self) -> HilbertTable:
        return self._table()

    @property
    def coefficients(self) -> HilbertCoefficients:
        return self._coeffs()

    @property
    def e(self) -> Tuple[int, ...]:
        return self.coefficients.e

    @property
    def series(self) -> GradedSeries:
        return graded_series(self.table, self.d)

    @property
    def vv(self) -> VVDepthCertificate:
        return self._vv()

    @property
    def surrogate(self) -> int:
        return self._surrogate()

    def superficial_failure(self) -> Optional[int]:
        """Failing position of ``x_1..x_(d-1)`` as a superficial sequence, or
        None when window certified
        """
        return self._superficial()

    def regular_prefix(self, k: int) -> SequenceReport:
        """Regular sequence report of the first ``k`` generators"""
        return self._regular(k)

    def d_sequence(self, exponents: Sequence[int]) -> SequenceReport:
        """d-sequence report of ``x_1^a_1, .., x_d^a_d``"""
        return self._dseq(tuple(exponents))

    def vv_status(self, k: int) -> HypothesisStatus:
        """Status of ``depth G(Q) >= k``"""
        if k <= 0:
            return HypothesisStatus.CERTIFIED
        if self.vv.k >= k:
            return HypothesisStatus.WINDOW_CERTIFIED
        return HypothesisStatus.UNMET

    def hilbert_report(self) -> HilbertReport:
        series = self.series
        return HilbertReport(
            ring=str(self.instance.ring),
            ideal=str(self.instance.ideal),
            d=self.d,
            table=list(self.table.values),
            e=list(self.e),
            eta=self.coefficients.eta,
            vv_depth=VVDepthRecord(**self.vv.to_dict()),
            series=series.closed_form,
        )

    def _compute_table(self) -> HilbertTable:
        _LOG.info("%s: table up to n=%s", self.name, self.n_max)
        return hilbert_samuel_table(
            self.instance.ring,
            self.instance.ideal,
            self.n_max,
            self.n_cap,
            self.workers,
        )

    def _compute_superficial(self) -> Optional[int]:
        return superficial_sequence_status(
            self.instance.ring,
            self.instance.ideal,
            self.instance.xs[: max(self.d - 1, 0)],
            self.c_window,
            self.superficial_nmax,
        )

    def _compute_d_sequence(self, exponents: Tuple[int, ...]) -> SequenceReport:
        xs = [x ** a for x, a in zip(self.instance.xs, exponents)]
        return is_d_sequence(self.instance.ring, xs)
