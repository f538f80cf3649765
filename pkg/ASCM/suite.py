'''
Golden checks over the bundled corpus plus seed-pinned randomized property checks.

Each check prints one verdict line; the suite passes when every check does.
'''
import sys
import typing as tp
from dataclasses import dataclass
from fractions import Fraction
import numpy as np
from .dsl import render, parse
from .model import Scm, load_scms, observational_joint
from .graph import (ArchSpec, induce_diagram, t_admissible, max_t_admissible, w_admissible, is_interpretable,
                    check_tradeoff)
from .inference import (Query, load_queries, oracle, closed_form, obs_equivalent, observable_joint,
                        divergence_witness, TradeoffReport)
from .corpus import load_corpus, read_corpus_file, CORPUS_FILES
from . import random_models, utils

F = Fraction


@dataclass(frozen=True)
class Verdict:
    cite: str
    tag: str
    passed: bool
    detail: str = ''

    def line(self) -> str:
        return '%s  [%s] %s%s' % ('PASS' if self.passed else 'FAIL', self.cite, self.tag,
                                  (': ' + self.detail) if self.detail else '')


# randomized property checks, also driven directly by the test suite

def max_t_violations(rng: np.random.RandomState, n_graphs: int, max_nodes: int = 8) -> tp.List[str]:
    violations = []
    for k in range(n_graphs):
        g = random_models.random_diagram(int(rng.randint(1, max_nodes + 1)), rng)
        fam = random_models.random_family(g.features, rng)
        admissible = set(t_admissible(g, fam))
        best = max_t_admissible(g, fam)
        expected = set(utils.subsets(best))
        if best not in admissible or admissible != expected:
            violations.append('graph %d: max %s, family %s' % (k, utils.format_set(best), utils.format_family(fam)))
    return violations


def _random_subset(names: tp.Sequence[str], rng: np.random.RandomState) -> utils.NameSet:
    return frozenset(n for n in names if rng.rand() < 0.5)


def tradeoff_violations(rng: np.random.RandomState, n_graphs: int, max_nodes: int = 8) -> tp.List[str]:
    violations = []
    for k in range(n_graphs):
        g = random_models.random_diagram(int(rng.randint(1, max_nodes + 1)), rng)
        T2 = _random_subset(g.features, rng)
        T1 = _random_subset(sorted(T2), rng)
        fam1 = random_models.random_family(g.features, rng)
        fam2 = utils.sort_family(set(fam1) | set(random_models.random_family(g.features, rng)))
        report = check_tradeoff(g, T1, T2, fam1, fam2)
        if not report.ok:
            violations.append('graph %d: witnesses %s / %s' % (k, utils.format_family(report.w_witnesses),
                                                                utils.format_set(report.max_witnesses)))
    return violations


def identifiability_cases(scm: Scm, rng: np.random.RandomState) -> tp.Iterator[tp.Tuple[Scm, Query]]:
    '''
    For every single-feature query target W: the maximal admissible classifier and one random admissible
    classifier, each queried under every positive-mass full feature assignment and both outcome values.
    '''
    g = induce_diagram(scm)
    for v in scm.features:
        W = frozenset([v])
        members = t_admissible(g, [W]).members
        choices = [max_t_admissible(g, [W]), members[int(rng.randint(0, len(members)))]]
        for T in choices:
            fitted = scm.with_classifier(T, expr=random_models.random_classifier(T, rng))
            base = Query.make(scm.name, fitted.label, 1, {v: int(rng.randint(0, 2))})
            for row, _ in observational_joint(fitted, list(scm.components)).rows():
                q = base.with_evidence(zip(scm.components, row))
                for y in (0, 1):
                    yield fitted, q.with_value(y)


def all_identifiability_cases(scm: Scm, rng: np.random.RandomState) -> tp.Iterator[tp.Tuple[Scm, Query]]:
    '''
    Every nonempty W, every nonempty T-admissible classifier input set for it, and every positive-mass
    evidence assignment over every subset of the mixture components (the empty one included).
    '''
    g = induce_diagram(scm)
    components = list(scm.components)
    for W in utils.subsets(scm.features, nonempty=True):
        for T in t_admissible(g, [W]).nonempty():
            fitted = scm.with_classifier(T, expr=random_models.random_classifier(T, rng))
            base = Query.make(scm.name, fitted.label, 1, {v: int(rng.randint(0, 2)) for v in sorted(W)})
            for observed in utils.subsets(components):
                names = [c for c in components if c in observed]
                rows = observational_joint(fitted, names).rows() if names else [((), F(1))]
                for row, _ in rows:
                    q = base.with_evidence(zip(names, row))
                    for y in (0, 1):
                        yield fitted, q.with_value(y)


def identifiability_violations(rng: np.random.RandomState, n_scms: int, max_features: int = 5,
                               exhaustive: bool = False) -> tp.Tuple[int, tp.List[str]]:
    '''Admissible classifiers: the closed form equals the oracle exactly. Returns (cases checked, violations).'''
    generate = all_identifiability_cases if exhaustive else identifiability_cases
    violations = []
    cases = 0
    for k in range(n_scms):
        scm = random_models.random_scm(int(rng.randint(2, max_features + 1)), rng, name='random%d' % k)
        joints: tp.Dict[tp.Any, tp.Any] = {}
        for fitted, q in generate(scm, rng):
            key = id(fitted)
            if key not in joints:
                joints[key] = (fitted, observable_joint(fitted))
            estimate = closed_form(joints[key][1], fitted.classifier.features, q).value
            truth = oracle(fitted, q).value
            cases += 1
            if estimate != truth:
                violations.append('%s, T=%s, %s: %s vs %s' % (scm.name, utils.format_set(fitted.classifier.features),
                                                               q.render(), estimate, truth))
    return cases, violations


class GoldenSuite(object):
    def __init__(self, seed: int = 0, n_graphs: int = 1000, n_scms: int = 40, file=sys.stdout, verbose: bool = True) -> None:
        self.seed = seed
        self.n_graphs = n_graphs
        self.n_scms = n_scms
        self.file = file
        self.verbose = verbose
        self.source = load_corpus()
        self.scms = load_scms(self.source)
        self.queries = load_queries(self.source)
        self.verdicts: tp.List[Verdict] = []

    def checks(self) -> tp.List[tp.Tuple[str, str, tp.Callable[[], tp.Tuple[bool, str]]]]:
        return [
            ('Appendix B.1.1', 'corpus renders and re-parses to itself', self.check_round_trip),
            ('Ex. 3', 'blackbox witness faces_bp/faces_bp_alt = (0, 1)',
             self.witness('faces_bp', 'faces_bp_alt', 'q_smile_bp', (F(0), F(1)))),
            ('Ex. 4', 'concept witness faces_cp/faces_cp_alt = (3/10, 1/2)',
             self.witness('faces_cp', 'faces_cp_alt', 'q_smile_cp', (F(3, 10), F(1, 2)))),
            ('Appendix Ex. 7', 'generalized pair fig2/fig2_alt = (0, 0)',
             self.witness('fig2', 'fig2_alt', 'q_smile', (F(0), F(0)))),
            ('Thm. 3, Appendix Ex. 7', 'closed form on fig2 with T={F, S} = 0', self.check_fig2_closed_form),
            ('Appendix probability table', 'joint of (F, S, C) in fig2 and fig2_alt, 8 rows', self.check_fig2_joint),
            ('§3.1', 'T-admissible family for W={S} on fig2', self.check_fig2_t_admissible),
            ('§3.2', 'W-admissible families of {F, S} and {C, F, S} on fig2', self.check_fig2_w_admissible),
            ('Thm. 1, §5.1', 'barmnist admissibility for digit and colour queries', self.check_barmnist_flags),
            ('Thm. 2, §5.1', 'barmnist max admissible set for W={D} = {C, D}', self.check_barmnist_max),
            ('Fig. 4c, Fig. 5', 'barmnist tradeoff: exact when admissible, accuracy monotone', self.check_barmnist_tradeoff),
            ('Fig. 8b', 'barmnist_rev: {B} exact, {B, C} diverges', self.check_barmnist_rev),
            ('Thm. 2', 'random DAGs: max admissible set formula (seed %d)' % self.seed, self.check_max_t),
            ('Thm. 4', 'random DAGs: tradeoff monotonicity (seed %d)' % self.seed, self.check_tradeoff_monotone),
            ('Thm. 1, Thm. 3', 'random SCMs: closed form equals oracle when admissible (seed %d)' % self.seed,
             self.check_identifiability),
        ]

    def run(self) -> bool:
        self.verdicts = []
        for cite, tag, check in self.checks():
            try:
                passed, detail = check()
            except Exception as e:
                passed, detail = False, '%s: %s' % (type(e).__name__, e)
            verdict = Verdict(cite, tag, passed, detail)
            self.verdicts.append(verdict)
            if self.verbose:
                print(verdict.line(), file=self.file, flush=True)
        passed = sum(v.passed for v in self.verdicts)
        if self.verbose:
            print('%d/%d checks passed' % (passed, len(self.verdicts)), file=self.file, flush=True)
        return passed == len(self.verdicts)

    def check_round_trip(self) -> tp.Tuple[bool, str]:
        for name in CORPUS_FILES:
            source = parse(read_corpus_file(name))
            if parse(render(source)) != source:
                return False, name
        return True, '%d files' % len(CORPUS_FILES)

    def witness(self, a: str, b: str, query: str, expected: tp.Tuple[Fraction, Fraction]):
        def check() -> tp.Tuple[bool, str]:
            ma, mb = self.scms[a], self.scms[b]
            if not obs_equivalent(ma, mb):
                return False, 'not observationally equivalent'
            x, y, diff = divergence_witness(ma, mb, self.queries[query])
            detail = '(%s, %s, %s)' % (x, y, diff)
            return (x, y) == expected and diff == abs(expected[0] - expected[1]), detail
        return check

    def check_fig2_closed_form(self) -> tp.Tuple[bool, str]:
        scm = self.scms['fig2']
        result = closed_form(observable_joint(scm), {'S', 'F'}, self.queries['q_smile'], induce_diagram(scm))
        return result.value == 0 and result.admissible, str(result.value)

    def check_fig2_joint(self) -> tp.Tuple[bool, str]:
        expected = {(0, 0, 0): '0.168', (0, 0, 1): '0.072', (0, 1, 0): '0.096', (0, 1, 1): '0.144',
                    (1, 0, 0): '0.112', (1, 0, 1): '0.048', (1, 1, 0): '0.144', (1, 1, 1): '0.216'}
        matched = 0
        for name in ('fig2', 'fig2_alt'):
            joint = observational_joint(self.scms[name], ['F', 'S', 'C'])
            matched += sum(joint.probs.get(row, F(0)) == F(p) for row, p in expected.items())
        return matched == 16, '%d/8 rows in each model' % (matched // 2)

    def check_fig2_t_admissible(self) -> tp.Tuple[bool, str]:
        g = induce_diagram(self.scms['fig2'])
        members = set(t_admissible(g, [{'S'}]).nonempty())
        best = max_t_admissible(g, [{'S'}])
        expected = {frozenset('S'), frozenset('F'), frozenset('SF')}
        return members == expected and best == frozenset('SF'), 'max %s' % utils.format_set(best)

    def check_fig2_w_admissible(self) -> tp.Tuple[bool, str]:
        g = induce_diagram(self.scms['fig2'])
        small = set(w_admissible(g, {'S', 'F'}))
        full = set(w_admissible(g, {'F', 'S', 'C'}))
        expected_full = {frozenset('F'), frozenset('C'), frozenset('FC'), frozenset('SC'), frozenset('FSC')}
        ok = small == set(utils.subsets('FSC', nonempty=True)) and full == expected_full
        return ok, '%d and %d members' % (len(small), len(full))

    def _barmnist_archs(self) -> tp.List[ArchSpec]:
        return [ArchSpec.of(t) for t in ('BDC', 'BD', 'DC', 'D')]

    def check_barmnist_flags(self) -> tp.Tuple[bool, str]:
        g = induce_diagram(self.scms['barmnist'])
        digit = [is_interpretable(g, a, {'D'}) for a in self._barmnist_archs()]
        colour = [is_interpretable(g, a, {'C'}) for a in self._barmnist_archs()]
        return digit == [False, False, True, True] and all(colour), 'digit %s, colour %s' % (digit, colour)

    def check_barmnist_max(self) -> tp.Tuple[bool, str]:
        best = max_t_admissible(induce_diagram(self.scms['barmnist']), [{'D'}])
        return best == frozenset('CD'), utils.format_set(best)

    def check_barmnist_tradeoff(self) -> tp.Tuple[bool, str]:
        scm = self.scms['barmnist']
        queries = [self.queries[n] for n in ('q_digit', 'q_color_off', 'q_color_on')]
        report = TradeoffReport(scm, queries, self._barmnist_archs())
        exact = all(row.abs_error == 0 for row in report.means if row.admissible)
        diverges = any(row.abs_error > 0 for row in report.means if not row.admissible)
        acc = {a.name: report.accuracy(a) for a in self._barmnist_archs()}
        monotone = acc['{B, C, D}'] >= acc['{B, D}'] >= acc['{D}'] and acc['{B, C, D}'] >= acc['{C, D}'] >= acc['{D}']
        return exact and diverges and monotone, 'accuracies ' + ', '.join('%s %s' % kv for kv in acc.items())

    def check_barmnist_rev(self) -> tp.Tuple[bool, str]:
        scm = self.scms['barmnist_rev']
        q = self.queries['q_bar']
        report = TradeoffReport(scm, [q], [ArchSpec.of('B'), ArchSpec.of('BC')])
        small, large = report.means
        return small.abs_error == 0 and large.abs_error > 0, 'mean errors %s and %s' % (small.abs_error, large.abs_error)

    def check_max_t(self) -> tp.Tuple[bool, str]:
        violations = max_t_violations(np.random.RandomState(self.seed), self.n_graphs)
        return not violations, '%d graphs, %d violations' % (self.n_graphs, len(violations))

    def check_tradeoff_monotone(self) -> tp.Tuple[bool, str]:
        violations = tradeoff_violations(np.random.RandomState(self.seed), self.n_graphs)
        return not violations, '%d graphs, %d violations' % (self.n_graphs, len(violations))

    def check_identifiability(self) -> tp.Tuple[bool, str]:
        cases, violations = identifiability_violations(np.random.RandomState(self.seed), self.n_scms)
        return not violations, '%d models, %d cases, %d violations' % (self.n_scms, cases, len(violations))
