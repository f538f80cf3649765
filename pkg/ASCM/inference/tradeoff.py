'''
Interpretability/accuracy tradeoff of Bayes-optimal classifiers over different feature sets.
'''
import sys
import typing as tp
from dataclasses import dataclass
from fractions import Fraction
from ..model import Scm, observational_joint
from ..graph import ArchSpec, PreconditionError, induce_diagram, is_interpretable
from ..report import Table
from .query import Query
from .oracle import oracle
from .closed_form import closed_form

COLUMNS = ['arch', 'query', 'accuracy', 'admissible', 'estimate', 'oracle', 'abs_error']
FRACTION_COLUMNS = ['accuracy', 'estimate', 'oracle', 'abs_error']


@dataclass(frozen=True)
class TradeoffRow:
    arch: ArchSpec
    query: str
    accuracy: Fraction
    admissible: bool
    estimate: tp.Optional[Fraction]
    oracle: tp.Optional[Fraction]
    abs_error: Fraction


class TradeoffReport(object):
    '''
    For every architecture the classifier is re-fitted as bayes(target) over the architecture's features.
    One row per (architecture, query), followed by a `mean:<query>` row holding the error averaged over
    every mixture instance with positive mass, weighted by its probability.
    '''
    def __init__(self, scm: Scm, queries: tp.Sequence[Query], archs: tp.Sequence[ArchSpec],
                 target: tp.Optional[str] = None, file=sys.stdout, verbose: bool = False) -> None:
        self.scm = scm
        self.queries = list(queries)
        self.archs = list(archs)
        self.target = target or scm.classifier.target or (scm.outcomes[0] if scm.outcomes else None)
        if self.target is None:
            raise PreconditionError('%s declares no true label to fit classifiers against' % scm.name)
        self.file = file
        self.verbose = verbose
        self.diagram = induce_diagram(scm)
        self.rows: tp.List[TradeoffRow] = []
        self.means: tp.List[TradeoffRow] = []
        self._run()

    def _fit(self, arch: ArchSpec) -> Scm:
        features = [self.scm.mixture] if arch.all_pixels else sorted(arch.features)
        return self.scm.with_classifier(features, target=self.target)

    def _run(self) -> None:
        instances = observational_joint(self.scm, list(self.scm.components)).rows()
        for arch in self.archs:
            fitted = self._fit(arch)
            accuracy = fitted.fitted_classifier().accuracy
            joint = observational_joint(fitted, fitted.observables + [fitted.mixture])
            T = set(fitted.classifier.features)
            for q in self.queries:
                admissible = not arch.all_pixels and is_interpretable(self.diagram, arch, q.W)
                estimate = closed_form(joint, T, q).value
                truth = oracle(fitted, q).value
                self.rows.append(TradeoffRow(arch, str(q), accuracy, admissible, estimate, truth, abs(estimate - truth)))

                error = Fraction(0)
                for row, p in instances:
                    instance = q.with_evidence(zip(self.scm.components, row))
                    error += p * abs(closed_form(joint, T, instance).value - oracle(fitted, instance).value)
                self.means.append(TradeoffRow(arch, 'mean:' + str(q), accuracy, admissible, None, None, error))
                if self.verbose:
                    print('%s %s: estimate %s, oracle %s, mean error %s' % (arch, q, estimate, truth, error),
                          file=self.file, flush=True)

    def mean_error(self, arch: ArchSpec, q: Query) -> Fraction:
        for row in self.means:
            if row.arch == arch and row.query == 'mean:' + str(q):
                return row.abs_error
        raise KeyError((arch, q))

    def accuracy(self, arch: ArchSpec) -> Fraction:
        for row in self.rows:
            if row.arch == arch:
                return row.accuracy
        raise KeyError(arch)

    def table(self) -> Table:
        table = Table(COLUMNS, FRACTION_COLUMNS, title='tradeoff on %s (label fitted to %s)' % (self.scm.name, self.target))
        for row in self.rows + self.means:
            table.add(row.arch.name, row.query, row.accuracy, row.admissible, row.estimate, row.oracle, row.abs_error)
        return table


def tradeoff_report(scm: Scm, queries: tp.Sequence[Query], archs: tp.Sequence[ArchSpec], **kwargs) -> TradeoffReport:
    return TradeoffReport(scm, queries, archs, **kwargs)
