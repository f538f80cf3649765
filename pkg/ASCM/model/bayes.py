import typing as tp
from dataclasses import dataclass
from fractions import Fraction
from .scm import Scm, UnknownVariableError

Key = tp.Tuple[tp.Any, ...]


def _argmax(dist: tp.Mapping[int, Fraction]) -> int:
    # ties go to the smaller label
    return min(dist, key=lambda y: (-dist[y], y))


@dataclass(frozen=True)
class BayesTable:
    target: str
    features: tp.Tuple[str, ...]
    table: tp.Dict[Key, int]
    fallback: int
    accuracy: Fraction

    def predict(self, key: Key) -> int:
        # strata with zero observational mass are only reached under intervention
        return self.table.get(tuple(key), self.fallback)

    def __len__(self) -> int:
        return len(self.table)


def bayes_classifier(scm: Scm, target: str, features: tp.Iterable[str]) -> BayesTable:
    '''
    Fit the Bayes-optimal classifier of `target` from `features` under the observational distribution of scm.
    Its accuracy is sum_t max_y P(y, t).
    '''
    features = tuple(features)
    if target not in scm.endogenous_names:
        raise UnknownVariableError('%s is not an endogenous variable of %s' % (target, scm.name))
    for name in features:
        if name not in scm.features and name != scm.mixture:
            raise UnknownVariableError('%s is not a feature of %s' % (name, scm.name))
    strata: tp.Dict[Key, tp.Dict[int, Fraction]] = {}
    marginal: tp.Dict[int, Fraction] = {}
    for _, p, env in scm.base.structural_worlds():
        key = tuple(env[f] for f in features)
        y = env[target]
        counts = strata.setdefault(key, {})
        counts[y] = counts.get(y, Fraction(0)) + p
        marginal[y] = marginal.get(y, Fraction(0)) + p
    table = {key: _argmax(counts) for key, counts in strata.items()}
    accuracy = sum((counts[table[key]] for key, counts in strata.items()), Fraction(0))
    return BayesTable(target, features, table, _argmax(marginal), accuracy)


def bayes_accuracy(scm: Scm, target: str, features: tp.Iterable[str]) -> Fraction:
    return bayes_classifier(scm, target, features).accuracy
