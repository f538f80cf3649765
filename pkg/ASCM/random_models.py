'''
Seeded generators of random causal diagrams and random binary SCMs, shared by the property tests and
the bundled suite. Every generator takes a numpy RandomState so runs are reproducible.
'''
import typing as tp
from fractions import Fraction
import numpy as np
from .dsl import Expr, Const, Ref, Not, BinOp, bernoulli, fold
from .model import Scm, ClassifierSpec
from .graph import CausalDiagram
from . import utils


def feature_names(n: int) -> tp.List[str]:
    return ['V%d' % i for i in range(n)]


def random_diagram(n: int, rng: np.random.RandomState, p: float = 0.4) -> CausalDiagram:
    names = [str(v) for v in rng.permutation(feature_names(n))]
    edges = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n) if rng.rand() < p]
    return CausalDiagram.from_edges(names, edges)


def random_family(features: tp.Sequence[str], rng: np.random.RandomState, max_members: int = 3,
                  max_size: int = 2) -> tp.List[utils.NameSet]:
    features = sorted(features)
    family = []
    for _ in range(rng.randint(1, max_members + 1)):
        size = rng.randint(1, min(max_size, len(features)) + 1)
        family.append(frozenset(str(v) for v in rng.choice(features, size=size, replace=False)))
    return utils.sort_family(set(family))


def random_prob(rng: np.random.RandomState) -> Fraction:
    '''k/10 with k in 1..9, so every exogenous value has positive mass.'''
    return Fraction(int(rng.randint(1, 10)), 10)


def random_expr(names: tp.Sequence[str], rng: np.random.RandomState, max_leaves: int = 3) -> Expr:
    names = sorted(names)
    if not names:
        return Const(0)
    count = rng.randint(1, min(max_leaves, len(names)) + 1)
    leaves: tp.List[Expr] = [Ref(str(v)) for v in rng.choice(names, size=count, replace=False)]
    leaves = [Not(leaf) if rng.rand() < 0.3 else leaf for leaf in leaves]
    op = str(rng.choice(['and', 'or', 'xor']))
    return fold(op, leaves)


def random_classifier(features: tp.Iterable[str], rng: np.random.RandomState) -> Expr:
    return random_expr(sorted(features), rng, max_leaves=4)


def random_scm(n: int, rng: np.random.RandomState, name: str = 'random', p_edge: float = 0.5,
               n_shared: tp.Optional[int] = None) -> Scm:
    '''
    Binary SCM over features V0..V{n-1} (in that causal order). Each feature is a random formula of
    earlier features and shared exogenous variables, xor a private exogenous noise bit; the noise makes
    every feature assignment reachable with positive mass. The mixture holds all features and the
    classifier is a random formula over all of them.
    '''
    features = feature_names(n)
    if n_shared is None:
        n_shared = int(rng.randint(0, 3))
    exogenous = []
    shared = ['U_S%d' % k for k in range(n_shared)]
    for u in shared:
        exogenous.append((u, bernoulli(random_prob(rng))))
    readers: tp.Dict[str, tp.List[str]] = {v: [] for v in features}
    for u in shared:
        # each shared variable confounds a random pair of features
        if n >= 2:
            for v in rng.choice(features, size=2, replace=False):
                readers[str(v)].append(u)
    endogenous = []
    for i, v in enumerate(features):
        parents = [f for f in features[:i] if rng.rand() < p_edge]
        noise = 'U_%s' % v
        exogenous.append((noise, bernoulli(random_prob(rng))))
        inputs = parents + readers[v]
        body = random_expr(inputs, rng) if inputs else Const(0)
        endogenous.append((v, BinOp('xor', body, Ref(noise))))
    classifier = ClassifierSpec('Yhat', tuple(features), random_classifier(features, rng))
    return Scm(name, exogenous, endogenous, ('X', features), classifier)
