import typing as tp
from dataclasses import dataclass, field
from fractions import Fraction
from ..dsl import QueryBlock
from ..graph import EmptyInterventionError
from .. import utils

Pairs = tp.Tuple[tp.Tuple[str, int], ...]


class ZeroEvidenceError(ValueError):
    pass


class PositivityError(ValueError):
    pass


class SignatureError(ValueError):
    pass


def _pairs(assignment: tp.Union[tp.Mapping[str, int], tp.Iterable[tp.Tuple[str, int]]]) -> Pairs:
    if isinstance(assignment, tp.Mapping):
        assignment = assignment.items()
    return tuple(sorted((name, int(value)) for name, value in assignment))


@dataclass(frozen=True)
class Query:
    '''P(outcome_{do(intervention)} = value | evidence) on the model named `scm`.'''
    scm: str
    outcome: str
    value: int
    intervention: Pairs
    evidence: Pairs = ()
    name: str = field(default='', compare=False)

    def __post_init__(self):
        if not self.intervention:
            raise EmptyInterventionError('query %s intervenes on nothing' % self.name)

    @classmethod
    def make(cls, scm: str, outcome: str, value: int, intervention, evidence=(), name: str = '') -> 'Query':
        return cls(scm, outcome, int(value), _pairs(intervention), _pairs(evidence), name)

    @classmethod
    def from_block(cls, block: QueryBlock) -> 'Query':
        return cls.make(block.scm, block.outcome, block.outcome_value, block.intervention, block.evidence, block.name)

    @property
    def W(self) -> utils.NameSet:
        return frozenset(name for name, _ in self.intervention)

    @property
    def do(self) -> tp.Dict[str, int]:
        return dict(self.intervention)

    @property
    def given(self) -> tp.Dict[str, int]:
        return dict(self.evidence)

    def with_evidence(self, evidence) -> 'Query':
        return Query(self.scm, self.outcome, self.value, self.intervention, _pairs(evidence), self.name)

    def with_value(self, value: int) -> 'Query':
        return Query(self.scm, self.outcome, int(value), self.intervention, self.evidence, self.name)

    def render(self) -> str:
        do = ', '.join('%s=%d' % p for p in self.intervention)
        text = 'P(%s=%d | do(%s)' % (self.outcome, self.value, do)
        if self.evidence:
            text += '; ' + ', '.join('%s=%d' % p for p in self.evidence)
        return text + ')'

    def __str__(self) -> str:
        return self.name or self.render()


@dataclass(frozen=True)
class CtfResult:
    value: Fraction
    method: str
    admissible: tp.Optional[bool] = None
    evidence_mass: Fraction = Fraction(1)
    strata_skipped: int = 0

    def __post_init__(self):
        assert 0 <= self.value <= 1
        assert self.method in ('oracle', 'closed_form')


def load_queries(source) -> tp.Dict[str, Query]:
    return {block.name: Query.from_block(block) for block in source.queries()}
