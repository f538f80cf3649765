'''
Causal interpretability of classifier architectures against counterfactual queries Q(W).

A classifier reading features T answers Q(W) identically across observationally equivalent models
exactly when T is a subset of W together with the non-descendants of W. A classifier reading the
raw mixture never does.
'''
import typing as tp
from dataclasses import dataclass
from .diagram import CausalDiagram, UnknownNodeError, EmptyInterventionError
from .. import utils

NameSet = utils.NameSet
DEFAULT_CAP = 65536


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class ArchSpec:
    features: NameSet = frozenset()
    all_pixels: bool = False

    @property
    def hybrid(self) -> bool:
        return self.all_pixels and len(self.features) > 0

    @classmethod
    def of(cls, features: tp.Iterable[str]) -> 'ArchSpec':
        return cls(frozenset(features))

    @classmethod
    def parse(cls, text: str, mixture: str = 'X') -> 'ArchSpec':
        names = utils.parse_names(text)
        if mixture in names:
            return cls(frozenset(n for n in names if n != mixture), True)
        return cls(frozenset(names))

    @property
    def name(self) -> str:
        if self.all_pixels:
            return 'X' if not self.features else 'X+' + utils.format_set(self.features)
        return utils.format_set(self.features)

    def __str__(self) -> str:
        return self.name


ALL_PIXELS = ArchSpec(frozenset(), True)


def _arch(arch: tp.Union[ArchSpec, tp.Iterable[str]]) -> ArchSpec:
    if isinstance(arch, ArchSpec):
        return arch
    return ArchSpec.of(arch)


def _family(g: CausalDiagram, fam: tp.Iterable[tp.Iterable[str]]) -> tp.List[NameSet]:
    members = utils.sort_family(fam)
    for W in members:
        if not W:
            raise EmptyInterventionError('query families contain nonempty target sets only')
        unknown = W - set(g.features)
        if unknown:
            raise UnknownNodeError('unknown node %s' % utils.format_set(unknown))
    # dedupe, keeping the sorted order
    return list(dict.fromkeys(members))


@dataclass(frozen=True)
class Verdict:
    admissible: bool
    reason: str
    violators: NameSet = frozenset()

    def __bool__(self) -> bool:
        return self.admissible


def interpretability_verdict(g: CausalDiagram, arch: tp.Union[ArchSpec, tp.Iterable[str]],
                             W: tp.Iterable[str]) -> Verdict:
    '''
    Reason codes: ok, blackbox (classifier reads X), hybrid (X plus features),
    descendant (T holds descendants of W outside W; these are the violators).
    '''
    arch = _arch(arch)
    W = frozenset(W)
    if not W:
        raise EmptyInterventionError('a query needs a nonempty intervention set')
    nd = g.non_descendants(W)
    unknown = arch.features - set(g.features)
    if unknown:
        raise UnknownNodeError('unknown node %s' % utils.format_set(unknown))
    if arch.hybrid:
        return Verdict(False, 'hybrid', frozenset([g.mixture]))
    if arch.all_pixels:
        return Verdict(False, 'blackbox', frozenset([g.mixture]))
    violators = arch.features - W - nd
    if violators:
        return Verdict(False, 'descendant', frozenset(violators))
    return Verdict(True, 'ok')


def is_interpretable(g: CausalDiagram, arch: tp.Union[ArchSpec, tp.Iterable[str]], W: tp.Iterable[str]) -> bool:
    return interpretability_verdict(g, arch, W).admissible


@dataclass(frozen=True)
class Enumeration:
    members: tp.Tuple[NameSet, ...]
    truncated: bool = False

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item) -> bool:
        return frozenset(item) in self.members

    def nonempty(self) -> tp.List[NameSet]:
        return [m for m in self.members if m]


def _enumerate(candidates: tp.Iterator[NameSet], accept: tp.Callable[[NameSet], bool], cap: int) -> Enumeration:
    assert cap >= 1
    members = []
    for count, candidate in enumerate(candidates):
        if count >= cap:
            return Enumeration(tuple(members), True)
        if accept(candidate):
            members.append(candidate)
    return Enumeration(tuple(members), False)


def t_admissible(g: CausalDiagram, fam: tp.Iterable[tp.Iterable[str]], cap: int = DEFAULT_CAP) -> Enumeration:
    '''Every T over V (the empty set included) interpretable for every member of the family.'''
    fam = _family(g, fam)
    allowed = [frozenset(W) | g.non_descendants(W) for W in fam]
    return _enumerate(utils.subsets(g.features), lambda T: all(T <= a for a in allowed), cap)


def max_t_admissible(g: CausalDiagram, fam: tp.Iterable[tp.Iterable[str]]) -> NameSet:
    '''The unique maximal T-admissible set, the intersection of W_i and ND(W_i) over the family.'''
    result = frozenset(g.features)
    for W in _family(g, fam):
        result &= frozenset(W) | g.non_descendants(W)
    return result


def w_admissible(g: CausalDiagram, arch: tp.Union[ArchSpec, tp.Iterable[str]], cap: int = DEFAULT_CAP) -> Enumeration:
    arch = _arch(arch)
    return _enumerate(utils.subsets(g.features, nonempty=True), lambda W: is_interpretable(g, arch, W), cap)


@dataclass(frozen=True)
class TradeoffCheck:
    w_ad_small: Enumeration
    w_ad_large: Enumeration
    max_small: NameSet
    max_large: NameSet
    w_witnesses: tp.Tuple[NameSet, ...]
    max_witnesses: NameSet

    @property
    def ok(self) -> bool:
        return not self.w_witnesses and not self.max_witnesses


def check_tradeoff(g: CausalDiagram, T1: tp.Iterable[str], T2: tp.Iterable[str],
                   fam1: tp.Iterable[tp.Iterable[str]], fam2: tp.Iterable[tp.Iterable[str]],
                   cap: int = DEFAULT_CAP) -> TradeoffCheck:
    '''
    More features answer fewer queries, and more queries allow fewer features:
    W-Ad(T2) is inside W-Ad(T1), and the maximal admissible set of fam2 is inside that of fam1.
    Any element breaking an inclusion is reported as a witness.
    '''
    T1, T2 = _arch(T1), _arch(T2)
    if not (T1.features <= T2.features and (T2.all_pixels or not T1.all_pixels)):
        raise PreconditionError('%s is not a subset of %s' % (T1, T2))
    fam1, fam2 = _family(g, fam1), _family(g, fam2)
    if not set(fam1) <= set(fam2):
        raise PreconditionError('%s is not a subfamily of %s' % (utils.format_family(fam1), utils.format_family(fam2)))
    w1 = w_admissible(g, T1, cap)
    w2 = w_admissible(g, T2, cap)
    m1 = max_t_admissible(g, fam1)
    m2 = max_t_admissible(g, fam2)
    w_witnesses = tuple(W for W in w2 if W not in w1.members)
    return TradeoffCheck(w1, w2, m1, m2, w_witnesses, frozenset(m2 - m1))
