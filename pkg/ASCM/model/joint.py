import typing as tp
import csv
from fractions import Fraction
from .scm import Scm, UnknownVariableError
from .. import utils

Row = tp.Tuple[tp.Any, ...]


class JointTable(object):
    '''
    Exact joint distribution over `variables`. Only assignments with positive mass are stored;
    the total mass is exactly 1.
    '''
    def __init__(self, variables: tp.Sequence[str], probs: tp.Mapping[Row, Fraction]) -> None:
        self.variables = tuple(variables)
        assert len(set(self.variables)) == len(self.variables), 'duplicate variable'
        self.probs: tp.Dict[Row, Fraction] = {}
        for row, p in probs.items():
            assert len(row) == len(self.variables)
            if p < 0:
                raise ValueError('negative probability %s for %s' % (p, row))
            if p > 0:
                self.probs[tuple(row)] = Fraction(p)
        total = sum(self.probs.values(), Fraction(0))
        if total != 1:
            raise ValueError('joint mass is %s, not 1' % total)

    @classmethod
    def from_worlds(cls, variables: tp.Sequence[str], worlds) -> 'JointTable':
        probs: tp.Dict[Row, Fraction] = {}
        for _, p, env in worlds:
            row = tuple(env[v] for v in variables)
            probs[row] = probs.get(row, Fraction(0)) + p
        return cls(variables, probs)

    def _index(self, names: tp.Iterable[str]) -> tp.List[int]:
        index = []
        for name in names:
            if name not in self.variables:
                raise UnknownVariableError('%s is not covered by the joint over %s' % (name, ', '.join(self.variables)))
            index.append(self.variables.index(name))
        return index

    def rows(self) -> tp.List[tp.Tuple[Row, Fraction]]:
        return sorted(self.probs.items())

    def marginal(self, names: tp.Sequence[str]) -> 'JointTable':
        index = self._index(names)
        probs: tp.Dict[Row, Fraction] = {}
        for row, p in self.probs.items():
            key = tuple(row[i] for i in index)
            probs[key] = probs.get(key, Fraction(0)) + p
        return JointTable(names, probs)

    def masses(self, names: tp.Sequence[str], where: tp.Optional[tp.Mapping[str, tp.Any]] = None) -> tp.Dict[Row, Fraction]:
        '''Unnormalised P(names, where) for every value of `names` with positive mass.'''
        index = self._index(names)
        items = list((where or {}).items())
        where_index = self._index(name for name, _ in items)
        result: tp.Dict[Row, Fraction] = {}
        for row, p in self.probs.items():
            if all(row[i] == value for i, (_, value) in zip(where_index, items)):
                key = tuple(row[i] for i in index)
                result[key] = result.get(key, Fraction(0)) + p
        return result

    def prob(self, event: tp.Mapping[str, tp.Any]) -> Fraction:
        items = list(event.items())
        index = self._index(name for name, _ in items)
        total = Fraction(0)
        for row, p in self.probs.items():
            if all(row[i] == value for i, (_, value) in zip(index, items)):
                total += p
        return total

    def conditional(self, event: tp.Mapping[str, tp.Any], given: tp.Mapping[str, tp.Any]) -> tp.Optional[Fraction]:
        denominator = self.prob(given)
        if denominator == 0:
            return None
        joint = dict(given)
        for name, value in event.items():
            if name in joint and joint[name] != value:
                return Fraction(0)
            joint[name] = value
        return self.prob(joint) / denominator

    def values(self, name: str) -> tp.List[tp.Any]:
        i = self._index([name])[0]
        return sorted(set(row[i] for row in self.probs))

    def __eq__(self, other) -> bool:
        if not isinstance(other, JointTable):
            return NotImplemented
        return self.variables == other.variables and self.probs == other.probs

    def __len__(self) -> int:
        return len(self.probs)

    def csv_rows(self) -> tp.List[tp.List[str]]:
        header = list(self.variables) + ['prob', 'prob_decimal']
        lines = [header]
        for row, p in self.rows():
            cells = [_cell(v) for v in row]
            lines.append(cells + [utils.format_fraction(p), utils.format_decimal(p)])
        return lines

    def to_csv(self, file) -> None:
        writer = csv.writer(file, lineterminator='\n')
        writer.writerows(self.csv_rows())

    def __repr__(self) -> str:
        return 'JointTable(%s, %d rows)' % (', '.join(self.variables), len(self.probs))


def _cell(value) -> str:
    if isinstance(value, tuple):
        return '(' + ' '.join(str(v) for v in value) + ')'
    return str(value)


def observational_joint(scm: Scm, names: tp.Sequence[str]) -> JointTable:
    '''Pushforward of P(U) through the model, marginalised to `names`.'''
    allowed = set(scm.features) | set(scm.outcomes) | set(scm.components) | {scm.mixture, scm.label}
    for name in names:
        if name not in allowed:
            raise UnknownVariableError('%s is not an observable variable of %s' % (name, scm.name))
    return JointTable.from_worlds(names, scm.worlds())
