import typing as tp
from fractions import Fraction
from ..model import Scm, JointTable, observational_joint
from .query import Query, SignatureError
from .oracle import oracle


def signature(scm: Scm) -> tp.Tuple[tp.Any, ...]:
    return (tuple(sorted(scm.features)), scm.mixture, scm.components, scm.label)


def observable_joint(scm: Scm) -> JointTable:
    return observational_joint(scm, scm.observables)


def obs_equivalent(a: Scm, b: Scm) -> bool:
    if signature(a) != signature(b):
        raise SignatureError('%s and %s disagree on features, mixture or label: %s vs %s'
                             % (a.name, b.name, signature(a), signature(b)))
    names = a.observables
    return observational_joint(a, names) == observational_joint(b, names)


def divergence_witness(a: Scm, b: Scm, q: Query) -> tp.Tuple[Fraction, Fraction, Fraction]:
    assert obs_equivalent(a, b), 'witness pairs must agree observationally'
    x = oracle(a, q).value
    y = oracle(b, q).value
    return (x, y, abs(x - y))
