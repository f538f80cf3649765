import typing as tp
from dataclasses import dataclass
from fractions import Fraction
from .errors import ProbabilityError
from .. import utils


class DistSpec(object):
    '''Finite distribution over the integer domain {0, ..., k-1} of an exogenous variable.'''
    name: str

    def pmf(self) -> tp.List[tp.Tuple[int, Fraction]]:
        raise NotImplementedError

    def domain(self) -> tp.List[int]:
        return [value for value, _ in self.pmf()]

    def render(self) -> str:
        raise NotImplementedError


def _check_prob(p: Fraction, line=None, column=None) -> Fraction:
    if p < 0 or p > 1:
        raise ProbabilityError('probability %s is outside [0, 1]' % p, line, column)
    return p


@dataclass(frozen=True)
class Bernoulli(DistSpec):
    p: Fraction
    name = 'bernoulli'

    def pmf(self) -> tp.List[tp.Tuple[int, Fraction]]:
        return [(0, 1 - self.p), (1, self.p)]

    def render(self) -> str:
        return 'bernoulli(%s)' % utils.format_fraction(self.p)


@dataclass(frozen=True)
class Categorical(DistSpec):
    probs: tp.Tuple[Fraction, ...]
    name = 'categorical'

    def pmf(self) -> tp.List[tp.Tuple[int, Fraction]]:
        return list(enumerate(self.probs))

    def render(self) -> str:
        return 'categorical(%s)' % ', '.join(utils.format_fraction(p) for p in self.probs)


def bernoulli(p: utils.general_prob, line=None, column=None) -> Bernoulli:
    return Bernoulli(_check_prob(utils.to_fraction(p), line, column))


def categorical(probs: tp.Sequence[utils.general_prob], line=None, column=None) -> Categorical:
    values = tuple(_check_prob(utils.to_fraction(p), line, column) for p in probs)
    if len(values) == 0:
        raise ProbabilityError('categorical distribution needs at least one outcome', line, column)
    if sum(values) != 1:
        raise ProbabilityError('categorical probabilities sum to %s, not 1' % sum(values), line, column)
    return Categorical(values)


DISTRIBUTIONS: tp.Dict[str, tp.Callable[..., DistSpec]] = {
    'bernoulli': bernoulli,
    'categorical': categorical,
}


def get_dist(name: str) -> tp.Callable[..., DistSpec]:
    return DISTRIBUTIONS[name]
