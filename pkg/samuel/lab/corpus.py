import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, List, Optional

from samuel.collections.dict import ParamDict
from samuel.collections.fs import FileSystem
from samuel.constants import CONF_NCAP, CONF_WORKERS, SAMUEL_DEFAULT_NCAP
from samuel.exceptions import SamuelError
from samuel.lab.checks import run_checks
from samuel.lab.instance import CorpusInstance, InstanceAnalysis
from samuel.lab.report import AggregateReport, InstanceReport
from samuel.local.definition import RingDefinition, parse_corpus

_LOG = logging.getLogger(__name__)

BUILTIN = "builtin"

BUILTIN_CORPUS = """
# Cohen-Macaulay: regular rings
instance regular2
vars x y
ideal Q = x, y
expect d = 2
expect e = 1,0,0
expect eta = -2
expect depth_class = cm

instance regular3
vars x y z
ideal Q = x, y, z
expect d = 3
expect e = 1,0,0,0
expect eta = -3
expect depth_class = cm

# Cohen-Macaulay of dimension one, a triple line
instance cubic_line
vars x y
relations y^3
ideal Q = x
expect d = 1
expect e = 3,0
expect depth_class = cm

# a hyperplane meeting a thickened line, depth 1 < d - 1
instance hyperplane_and_line
vars x y z w
relations x*y^3, x*z, x*w
ideal Q = x - y, x - z, x - w
expect d = 3
expect e = 1,0,3,3
expect depth_class = lt

# two planes meeting in a point, depth 1 = d - 1
instance two_planes
vars x y u v
relations x*u, x*v, y*u, y*v
ideal Q = x - u, y - v
expect d = 2
expect e = 2,-1,0
expect eta = -1
expect depth_class = d-1

# a line with an embedded point, depth 0 = d - 1
instance embedded_point
vars u x
relations u^2, u*x
ideal Q = x
expect d = 1
expect e = 1,-1
expect depth_class = d-1
"""


def load_corpus(path: str, fs: Optional[FileSystem] = None) -> List[RingDefinition]:
    """Parse the corpus at ``path``; ``builtin`` gives the built-in corpus

    :raises ParseError: on invalid content
    """
    if path == BUILTIN:
        return parse_corpus(BUILTIN_CORPUS)
    fs = fs or FileSystem()
    return parse_corpus(fs.read_text(path))


def run_instance(definition: RingDefinition, conf: Any = None) -> InstanceReport:
    """Run table, fit, bounds, equivalences and e_d checks on one instance.
    Errors are recorded in the report instead of raised
    """
    conf = ParamDict(conf)
    try:
        instance = CorpusInstance(definition).validate(
            conf.get(CONF_NCAP, SAMUEL_DEFAULT_NCAP)
        )
        analysis = InstanceAnalysis(instance, conf)
        theorem = run_checks(analysis)
        return InstanceReport(
            name=definition.name, hilbert=analysis.hilbert_report(), theorem=theorem
        )
    except (SamuelError, ValueError) as e:
        _LOG.warning("%s failed: %s: %s", definition.name, type(e).__name__, e)
        return InstanceReport(name=definition.name, error=f"{type(e).__name__}: {e}")


def run_corpus(
    corpus: Any, conf: Any = None, fs: Optional[FileSystem] = None
) -> AggregateReport:
    """Run every instance of a corpus and aggregate the verdicts. Instances
    are independent and run on ``samuel.workers`` threads; the aggregate is
    ordered by instance name

    :param corpus: a path, ``builtin``, or parsed definitions
    :param conf: settings, see :mod:`samuel.constants`
    :param fs: file system used to read a path
    :return: the aggregate report, ``failures`` counts FAILURE verdicts

    :Examples:
    >>> report = run_corpus("builtin")
    >>> assert report.failures == 0
    """
    definitions = (
        load_corpus(corpus, fs) if isinstance(corpus, str) else list(corpus)
    )
    conf = ParamDict(conf)
    workers = conf.get(CONF_WORKERS, 1)
    if workers > 1 and len(definitions) > 1:
        # each instance runs its table sequentially
        inner = ParamDict(conf)
        inner[CONF_WORKERS] = 1
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda x: run_instance(x, inner), definitions))
    else:
        reports = [run_instance(x, conf) for x in definitions]
    res = AggregateReport.build(reports)
    _LOG.info("corpus of %s instances: %s", len(reports), res.counts)
    return res
