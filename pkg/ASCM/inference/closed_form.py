'''
Counterfactual estimate from the observational joint alone:

    P(Yhat_{w'} = y | e) = sum_t P(Yhat = y | W & T = w' & T, T \\ W = t \\ W) * P(T = t | e)

Strata with P(t | e) = 0 contribute nothing; a stratum with positive weight whose conditioning
event has zero mass is a positivity violation.
'''
import typing as tp
from fractions import Fraction
from ..model import JointTable, UnknownVariableError
from ..graph import CausalDiagram, is_interpretable
from .query import Query, CtfResult, ZeroEvidenceError, PositivityError


def closed_form(joint: JointTable, T: tp.Iterable[str], q: Query,
                diagram: tp.Optional[CausalDiagram] = None) -> CtfResult:
    T = sorted(set(T))
    do = q.do
    evidence = q.given
    needed = set(T) | set(do) | set(evidence) | {q.outcome}
    missing = needed - set(joint.variables)
    if missing:
        raise UnknownVariableError('joint does not cover %s' % ', '.join(sorted(missing)))

    weights = joint.masses(T, evidence)
    mass = sum(weights.values(), Fraction(0))
    if mass == 0:
        raise ZeroEvidenceError('evidence %s has probability zero' % evidence)
    # P(T, Yhat) once; every stratum's conditional is read from it
    by_stratum: tp.Dict[tp.Tuple[tp.Any, ...], tp.List[Fraction]] = {}
    for row, p in joint.masses(T + [q.outcome]).items():
        entry = by_stratum.setdefault(row[:-1], [Fraction(0), Fraction(0)])
        entry[0] += p
        if row[-1] == q.value:
            entry[1] += p

    value = Fraction(0)
    for t, weight in weights.items():
        condition = tuple(do[name] if name in do else v for name, v in zip(T, t))
        entry = by_stratum.get(condition)
        if entry is None:
            raise PositivityError('P(%s) is zero but the stratum %s has weight %s'
                                  % (', '.join('%s=%s' % kv for kv in zip(T, condition)), dict(zip(T, t)), weight / mass))
        value += entry[1] / entry[0] * (weight / mass)
    skipped = len(by_stratum) - len(weights)

    admissible = None
    if diagram is not None:
        admissible = diagram.mixture not in T and is_interpretable(diagram, T, q.W)
    return CtfResult(value, 'closed_form', admissible, mass, skipped)
