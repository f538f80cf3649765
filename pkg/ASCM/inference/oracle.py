'''
Ground-truth counterfactuals by abduction, action and prediction over the exogenous state space.
'''
import typing as tp
from fractions import Fraction
from ..model import Scm, UnknownVariableError
from .query import Query, CtfResult, ZeroEvidenceError


def check_query(scm: Scm, q: Query) -> None:
    if q.outcome != scm.label:
        raise UnknownVariableError('%s is not the predicted label of %s' % (q.outcome, scm.name))
    observable = set(scm.features) | set(scm.components)
    unknown = set(name for name, _ in q.evidence) - observable
    if unknown:
        raise UnknownVariableError('evidence on %s, which is neither a feature nor a mixture component of %s'
                                   % (', '.join(sorted(unknown)), scm.name))


def oracle(scm: Scm, q: Query) -> CtfResult:
    '''
    Posterior over exogenous states given the evidence (abduction), the model with the features W
    fixed to the intervention values (action), and the probability of the outcome there (prediction).
    '''
    check_query(scm, q)
    submodel = scm.intervene(q.do)
    evidence = q.given
    mass = Fraction(0)
    hit = Fraction(0)
    for (u, p, env), (u_sub, _, env_sub) in zip(scm.worlds(), submodel.worlds()):
        assert u == u_sub
        if all(env[name] == value for name, value in evidence.items()):
            mass += p
            if env_sub[q.outcome] == q.value:
                hit += p
    if mass == 0:
        raise ZeroEvidenceError('evidence %s has probability zero in %s' % (dict(q.evidence), scm.name))
    return CtfResult(hit / mass, 'oracle', None, mass)


def factual(scm: Scm, q: Query) -> Fraction:
    check_query(scm, q)
    evidence = q.given
    mass = Fraction(0)
    hit = Fraction(0)
    for _, p, env in scm.worlds():
        if all(env[name] == value for name, value in evidence.items()):
            mass += p
            if env[q.outcome] == q.value:
                hit += p
    if mass == 0:
        raise ZeroEvidenceError('evidence %s has probability zero in %s' % (dict(q.evidence), scm.name))
    return hit / mass
