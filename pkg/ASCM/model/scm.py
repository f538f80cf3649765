'''
Finite discrete augmented structural causal models.

An Scm holds independent exogenous variables, structural equations for the endogenous variables
(features V and true-label variables), a mixture X = tuple(components) and a classifier producing
the predicted label from its feature set T.
'''
import typing as tp
import itertools
from dataclasses import dataclass
from fractions import Fraction
import networkx as nx
from ..dsl import Expr, DistSpec, ScmBlock
from ..cache import Cache
from .. import utils

Assignment = tp.Dict[str, tp.Any]
World = tp.Tuple[Assignment, Fraction, Assignment]


class UnknownVariableError(ValueError):
    pass


class InterventionError(ValueError):
    pass


@dataclass(frozen=True)
class ClassifierSpec:
    '''Predicted label `name` computed from `features` by `expr`, or the Bayes-optimal predictor of `target`.'''
    name: str
    features: tp.Tuple[str, ...]
    expr: tp.Optional[Expr] = None
    target: tp.Optional[str] = None

    def __post_init__(self):
        assert (self.expr is None) != (self.target is None)

    @property
    def is_bayes(self) -> bool:
        return self.target is not None


class Scm(object):
    def __init__(self, name: str,
                 exogenous: tp.Sequence[tp.Tuple[str, DistSpec]],
                 endogenous: tp.Sequence[tp.Tuple[str, Expr]],
                 mixture: tp.Tuple[str, tp.Sequence[str]],
                 classifier: ClassifierSpec) -> None:
        self.name = name
        self.exogenous = tuple(exogenous)
        self.endogenous = self._evaluation_order(endogenous)
        self.mixture = mixture[0]
        self.components = tuple(mixture[1])
        self.classifier = classifier
        self.label = classifier.name
        self.intervention: tp.Dict[str, int] = {}
        self.cache_state = True
        self.cache_data: tp.Dict[str, tp.Any] = {}

        exo_names = [n for n, _ in self.exogenous]
        endo_names = [n for n, _ in self.endogenous]
        assert len(set(exo_names + endo_names + [self.mixture, self.label])) == len(exo_names) + len(endo_names) + 2
        for _, dist in self.exogenous:
            assert len(dist.domain()) > 0
        self._check_classifier(classifier)

    @staticmethod
    def _evaluation_order(endogenous: tp.Sequence[tp.Tuple[str, Expr]]) -> tp.Tuple[tp.Tuple[str, Expr], ...]:
        # ties broken by declaration order so the stored order is deterministic
        index = {name: i for i, (name, _) in enumerate(endogenous)}
        equations = dict(endogenous)
        graph = nx.DiGraph()
        graph.add_nodes_from(index)
        for name, expr in endogenous:
            for parent in expr.names():
                if parent in index:
                    graph.add_edge(parent, name)
        order = nx.lexicographical_topological_sort(graph, key=index.get)
        return tuple((name, equations[name]) for name in order)

    def _check_classifier(self, classifier: ClassifierSpec) -> None:
        features = set(classifier.features)
        if self.mixture in features:
            assert features == {self.mixture}, 'a classifier reading X reads nothing else'
        else:
            unknown = features - set(self.features)
            if unknown:
                raise UnknownVariableError('classifier inputs %s are not features of %s' % (utils.format_set(unknown), self.name))
        if classifier.is_bayes and classifier.target not in dict(self.endogenous):
            raise UnknownVariableError('bayes target %s is not an endogenous variable of %s' % (classifier.target, self.name))

    @classmethod
    def from_block(cls, block: ScmBlock) -> 'Scm':
        label = block.label
        classifier = ClassifierSpec(label.name, tuple(label.features), label.expr, label.bayes_target)
        return cls(block.name,
                   [(d.name, d.dist) for d in block.exogenous],
                   [(d.name, d.expr) for d in block.endogenous],
                   (block.mixture.name, block.mixture.components),
                   classifier)

    @property
    def base(self) -> 'Scm':
        return self

    @property
    def exogenous_names(self) -> tp.List[str]:
        return [n for n, _ in self.exogenous]

    @property
    def endogenous_names(self) -> tp.List[str]:
        return [n for n, _ in self.endogenous]

    @property
    def features(self) -> tp.List[str]:
        components = set(self.components)
        return [n for n in self.endogenous_names if n in components]

    @property
    def outcomes(self) -> tp.List[str]:
        components = set(self.components)
        return [n for n in self.endogenous_names if n not in components]

    @property
    def observables(self) -> tp.List[str]:
        names = self.features
        names = names + [c for c in self.components if c not in names]
        return names + [self.label]

    def variables(self) -> tp.List[str]:
        return self.exogenous_names + self.endogenous_names + [self.mixture, self.label]

    def domain(self, name: str) -> tp.List[tp.Any]:
        exogenous = dict(self.exogenous)
        if name in exogenous:
            return exogenous[name].domain()
        if name not in self.variables():
            raise UnknownVariableError('%s is not a variable of %s' % (name, self.name))
        return sorted(set(env[name] for _, _, env in self.worlds()))

    def enumerate_u(self, part: tp.Optional[tp.Tuple[int, int]] = None) -> tp.Iterator[tp.Tuple[Assignment, Fraction]]:
        '''
        Every exogenous assignment with positive probability, each once, with its product probability.
        With part=(i, n) only the i-th of n contiguous slices of that stream is produced.
        '''
        names = self.exogenous_names
        supports = [[(v, p) for v, p in dist.pmf() if p > 0] for _, dist in self.exogenous]
        states = itertools.product(*supports)
        if part is not None:
            size = 1
            for s in supports:
                size *= len(s)
            sl = utils.part_slice(size, part)
            states = itertools.islice(states, sl.start, sl.stop)
        for state in states:
            prob = Fraction(1)
            for _, p in state:
                prob *= p
            yield {name: v for name, (v, _) in zip(names, state)}, prob

    def evaluate_structural(self, u: Assignment) -> Assignment:
        env = dict(u)
        for name, expr in self.endogenous:
            if name in self.intervention:
                env[name] = self.intervention[name]
            else:
                env[name] = expr.evaluate(env)
        env[self.mixture] = tuple(env[c] for c in self.components)
        return env

    def predict(self, env: Assignment) -> int:
        classifier = self.classifier
        if classifier.is_bayes:
            return self.base.fitted_classifier().predict(tuple(env[f] for f in classifier.features))
        return classifier.expr.evaluate(env)

    def evaluate(self, u: Assignment) -> Assignment:
        env = self.evaluate_structural(u)
        env[self.label] = self.predict(env)
        return env

    @Cache('worlds')
    def structural_worlds(self) -> tp.List[World]:
        return [(u, p, self.evaluate_structural(u)) for u, p in self.enumerate_u()]

    @Cache('worlds')
    def worlds(self) -> tp.List[World]:
        result = []
        for u, p, env in self.structural_worlds():
            env = dict(env)
            env[self.label] = self.predict(env)
            result.append((u, p, env))
        return result

    @Cache('classifier')
    def fitted_classifier(self):
        from .bayes import bayes_classifier
        classifier = self.classifier
        assert classifier.is_bayes
        return bayes_classifier(self, classifier.target, classifier.features)

    def intervene(self, w: tp.Mapping[str, int]) -> 'Submodel':
        return self._submodel(tuple(sorted(w.items())))

    @Cache('submodel')
    def _submodel(self, pairs: tp.Tuple[tp.Tuple[str, int], ...]) -> 'Submodel':
        # one Submodel per intervention, so its worlds are enumerated once
        return Submodel(self, dict(pairs))

    def with_classifier(self, features: tp.Iterable[str], expr: tp.Optional[Expr] = None,
                        target: tp.Optional[str] = None, label: tp.Optional[str] = None) -> 'Scm':
        '''Same generative mechanisms, different classifier: an expression over `features` or bayes(target).'''
        features = tuple(features)
        features = (self.mixture,) if self.mixture in features else tuple(sorted(features))
        classifier = ClassifierSpec(label or self.label, features, expr, target)
        return Scm(self.name, self.exogenous, self.endogenous, (self.mixture, self.components), classifier)

    def set_cache_state(self, state: bool) -> None:
        self.cache_state = state

    def clear_cache(self) -> None:
        self.cache_data = {}

    def __repr__(self) -> str:
        return 'Scm(%s)' % self.name


class Submodel(Scm):
    def __init__(self, base: Scm, w: tp.Mapping[str, int]) -> None:
        for name, value in w.items():
            if name == base.mixture or name == base.label:
                raise InterventionError('cannot intervene on %s, only on features' % name)
            if name in base.exogenous_names:
                raise InterventionError('cannot intervene on exogenous variable %s' % name)
            if name not in base.features:
                raise InterventionError('%s is not a feature of %s' % (name, base.name))
            if not isinstance(value, int):
                raise InterventionError('intervention value for %s must be an integer' % name)
        self._base = base.base
        self.name = base.name
        self.exogenous = base.exogenous
        self.endogenous = base.endogenous
        self.mixture = base.mixture
        self.components = base.components
        self.classifier = base.classifier
        self.label = base.label
        self.intervention = dict(base.intervention)
        self.intervention.update(w)
        self.cache_state = True
        self.cache_data = {}

    @property
    def base(self) -> Scm:
        return self._base

    def __repr__(self) -> str:
        return 'Submodel(%s, do(%s))' % (self.name, ', '.join('%s=%d' % kv for kv in sorted(self.intervention.items())))


def load_scms(source) -> tp.Dict[str, Scm]:
    return {block.name: Scm.from_block(block) for block in source.scms()}


def enumerate_u(scm: Scm, part: tp.Optional[tp.Tuple[int, int]] = None) -> tp.Iterator[tp.Tuple[Assignment, Fraction]]:
    return scm.enumerate_u(part)


def evaluate(scm: Scm, u: Assignment) -> Assignment:
    return scm.evaluate(u)


def intervene(scm: Scm, w: tp.Mapping[str, int]) -> Submodel:
    return scm.intervene(w)
