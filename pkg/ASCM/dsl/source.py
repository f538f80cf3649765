'''
Parsed form of a description file.

Positions (`pos`, a character offset) are diagnostics only and take no part in equality,
so a file and the re-parse of its rendering compare equal.
'''
import typing as tp
from dataclasses import dataclass, field
from .expr import Expr
from .dist import DistSpec


@dataclass(frozen=True)
class ExoDecl:
    name: str
    dist: DistSpec
    pos: tp.Optional[int] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class VarDecl:
    name: str
    expr: Expr
    pos: tp.Optional[int] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class MixtureDecl:
    name: str
    components: tp.Tuple[str, ...]
    pos: tp.Optional[int] = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class LabelDecl:
    name: str
    features: tp.Tuple[str, ...]
    expr: tp.Optional[Expr] = None
    bayes_target: tp.Optional[str] = None
    pos: tp.Optional[int] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        assert (self.expr is None) != (self.bayes_target is None)


@dataclass(frozen=True)
class ScmBlock:
    name: str
    exogenous: tp.Tuple[ExoDecl, ...]
    endogenous: tp.Tuple[VarDecl, ...]
    mixture: MixtureDecl
    label: LabelDecl
    pos: tp.Optional[int] = field(default=None, compare=False, repr=False)

    @property
    def declared_names(self) -> tp.List[str]:
        return [d.name for d in self.exogenous] + [d.name for d in self.endogenous] + [self.mixture.name, self.label.name]


@dataclass(frozen=True)
class QueryBlock:
    name: str
    scm: str
    outcome: str
    outcome_value: int
    intervention: tp.Tuple[tp.Tuple[str, int], ...]
    evidence: tp.Tuple[tp.Tuple[str, int], ...] = ()
    pos: tp.Optional[int] = field(default=None, compare=False, repr=False)


Block = tp.Union[ScmBlock, QueryBlock]


@dataclass(frozen=True)
class SourceFile:
    blocks: tp.Tuple[Block, ...]

    def scms(self) -> tp.List[ScmBlock]:
        return [b for b in self.blocks if isinstance(b, ScmBlock)]

    def queries(self) -> tp.List[QueryBlock]:
        return [b for b in self.blocks if isinstance(b, QueryBlock)]

    def get(self, name: str) -> Block:
        for b in self.blocks:
            if b.name == name:
                return b
        raise KeyError(name)

    def __add__(self, other: 'SourceFile') -> 'SourceFile':
        return SourceFile(self.blocks + other.blocks)
