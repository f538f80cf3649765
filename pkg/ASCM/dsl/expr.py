'''
Expression trees for structural equations and classifiers.

Values are integers throughout; boolean operators read any non-zero value as true and produce 0/1.
'''
import typing as tp
import operator
from dataclasses import dataclass

Env = tp.Mapping[str, tp.Any]


def _truth(x: int) -> bool:
    return x != 0


BINARY_OPS: tp.Dict[str, tp.Callable[[int, int], int]] = {
    'or': lambda a, b: int(_truth(a) or _truth(b)),
    'xor': lambda a, b: int(_truth(a) != _truth(b)),
    'and': lambda a, b: int(_truth(a) and _truth(b)),
    '<': lambda a, b: int(a < b),
    '>': lambda a, b: int(a > b),
    '=': lambda a, b: int(a == b),
    '+': operator.add,
    '-': operator.sub,
    '*': operator.mul,
}
BOOLEAN_OPS = ('or', 'xor', 'and')


class Expr(object):
    def evaluate(self, env: Env) -> int:
        raise NotImplementedError

    def names(self) -> tp.FrozenSet[str]:
        raise NotImplementedError

    def render(self) -> str:
        raise NotImplementedError

    def is_atomic(self) -> bool:
        return True

    def __str__(self) -> str:
        return self.render()


def _wrap(e: Expr) -> str:
    if e.is_atomic():
        return e.render()
    return '(' + e.render() + ')'


@dataclass(frozen=True)
class Const(Expr):
    value: int

    def __post_init__(self):
        assert self.value >= 0, 'literals are non-negative; build negatives with subtraction'

    def evaluate(self, env: Env) -> int:
        return self.value

    def names(self) -> tp.FrozenSet[str]:
        return frozenset()

    def render(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class BoolConst(Expr):
    value: bool

    def evaluate(self, env: Env) -> int:
        return int(self.value)

    def names(self) -> tp.FrozenSet[str]:
        return frozenset()

    def render(self) -> str:
        return 'true' if self.value else 'false'


@dataclass(frozen=True)
class Ref(Expr):
    name: str

    def evaluate(self, env: Env) -> int:
        return env[self.name]

    def names(self) -> tp.FrozenSet[str]:
        return frozenset([self.name])

    def render(self) -> str:
        return self.name


@dataclass(frozen=True)
class Not(Expr):
    operand: Expr

    def evaluate(self, env: Env) -> int:
        return int(not _truth(self.operand.evaluate(env)))

    def names(self) -> tp.FrozenSet[str]:
        return self.operand.names()

    def render(self) -> str:
        return 'not ' + _wrap(self.operand)

    def is_atomic(self) -> bool:
        return False


@dataclass(frozen=True)
class Indicator(Expr):
    operand: Expr

    def evaluate(self, env: Env) -> int:
        return int(_truth(self.operand.evaluate(env)))

    def names(self) -> tp.FrozenSet[str]:
        return self.operand.names()

    def render(self) -> str:
        return 'ind(' + self.operand.render() + ')'


@dataclass(frozen=True)
class BinOp(Expr):
    op: str
    left: Expr
    right: Expr

    def __post_init__(self):
        assert self.op in BINARY_OPS, self.op

    def evaluate(self, env: Env) -> int:
        return BINARY_OPS[self.op](self.left.evaluate(env), self.right.evaluate(env))

    def names(self) -> tp.FrozenSet[str]:
        return self.left.names() | self.right.names()

    def render(self) -> str:
        return '%s %s %s' % (_wrap(self.left), self.op, _wrap(self.right))

    def is_atomic(self) -> bool:
        return False


def fold(op: str, operands: tp.Sequence[Expr]) -> Expr:
    '''Left fold of `op` over operands, e.g. fold('xor', [a, b, c]) == (a xor b) xor c.'''
    assert len(operands) > 0
    result = operands[0]
    for item in operands[1:]:
        result = BinOp(op, result, item)
    return result
