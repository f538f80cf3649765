'''
Causal diagram of an augmented SCM.

Nodes are the features V plus the mixture X and the predicted label. A directed edge A -> B means
B's equation reads A; every feature points into X; the classifier inputs point into the label.
Two endogenous nodes whose equations read a common exogenous variable share a bidirected edge.
'''
import typing as tp
import networkx as nx
from ..model import Scm
from .. import utils

Edge = tp.Tuple[str, str]


class UnknownNodeError(ValueError):
    pass


class EmptyInterventionError(ValueError):
    pass


class CausalDiagram(object):
    def __init__(self, features: tp.Sequence[str], directed: tp.Iterable[Edge],
                 bidirected: tp.Iterable[Edge] = (), mixture: str = 'X', label: tp.Optional[str] = None) -> None:
        self.features = tuple(features)
        self.mixture = mixture
        self.label = label
        self.graph = nx.DiGraph()
        self.graph.add_nodes_from(self.features)
        self.graph.add_node(mixture)
        if label is not None:
            self.graph.add_node(label)
        for a, b in directed:
            for node in (a, b):
                if node not in self.graph:
                    raise UnknownNodeError('edge %s -> %s mentions unknown node %s' % (a, b, node))
            self.graph.add_edge(a, b)
        for v in self.features:
            self.graph.add_edge(v, mixture)
        self.bidirected: tp.FrozenSet[tp.FrozenSet[str]] = frozenset(frozenset(e) for e in bidirected)
        assert nx.is_directed_acyclic_graph(self.graph), 'directed part must be acyclic'
        assert set(self.graph.successors(mixture)) <= {label}

    @classmethod
    def from_edges(cls, features: tp.Iterable[str], edges: tp.Iterable[Edge]) -> 'CausalDiagram':
        return cls(sorted(features), [(a, b) for a, b in edges])

    @property
    def nodes(self) -> tp.List[str]:
        return list(self.graph.nodes)

    @property
    def directed(self) -> tp.List[Edge]:
        return sorted(self.graph.edges)

    def latent_graph(self) -> nx.DiGraph:
        return self.graph.subgraph(self.features).copy()

    def parents(self, node: str) -> tp.Set[str]:
        self._check([node])
        return set(self.graph.predecessors(node))

    def _check(self, nodes: tp.Iterable[str], features_only: bool = False) -> None:
        allowed = set(self.features) if features_only else set(self.graph.nodes)
        unknown = set(nodes) - allowed
        if unknown:
            raise UnknownNodeError('unknown node %s' % utils.format_set(unknown))

    def descendants(self, W: tp.Iterable[str]) -> tp.Set[str]:
        '''Union of the directed reachability closures of the members of W, each including itself.'''
        W = set(W)
        self._check(W)
        result: tp.Set[str] = set()
        for w in W:
            result |= nx.descendants(self.graph, w)
            result.add(w)
        return result

    def non_descendants(self, W: tp.Iterable[str]) -> tp.Set[str]:
        W = set(W)
        if not W:
            raise EmptyInterventionError('non-descendants are only defined for a nonempty W')
        self._check(W, features_only=True)
        return set(self.features) - self.descendants(W)

    def to_text(self) -> str:
        lines = ['%s -> %s' % e for e in self.directed]
        lines += ['%s <-> %s' % tuple(sorted(e)) for e in sorted(self.bidirected, key=lambda e: tuple(sorted(e)))]
        return '\n'.join(lines) + '\n'

    def __repr__(self) -> str:
        return 'CausalDiagram(V=%s, %d edges, %d bidirected)' % (utils.format_set(self.features),
                                                                  self.graph.number_of_edges(), len(self.bidirected))


def induce_diagram(scm: Scm) -> CausalDiagram:
    features = scm.features
    feature_set = set(features)
    exogenous = set(scm.exogenous_names)
    equations = dict(scm.endogenous)
    directed = []
    shared: tp.Dict[str, tp.Set[str]] = {}
    for v in features:
        reads = equations[v].names()
        directed += [(parent, v) for parent in sorted(reads & feature_set)]
        shared[v] = set(reads & exogenous)
    shared[scm.mixture] = set(scm.components) & exogenous
    classifier = scm.classifier
    if scm.mixture in classifier.features:
        directed.append((scm.mixture, scm.label))
    else:
        directed += [(t, scm.label) for t in classifier.features]
    nodes = sorted(shared)
    bidirected = [(a, b) for i, a in enumerate(nodes) for b in nodes[i + 1:] if shared[a] & shared[b]]
    return CausalDiagram(features, directed, bidirected, scm.mixture, scm.label)


def _as_diagram(g: tp.Union[CausalDiagram, tp.Iterable[Edge]], W: tp.Iterable[str] = ()) -> CausalDiagram:
    if isinstance(g, CausalDiagram):
        return g
    edges = list(g)
    features = set(W)
    for a, b in edges:
        features.update((a, b))
    return CausalDiagram.from_edges(features, edges)


def descendants(g: tp.Union[CausalDiagram, tp.Iterable[Edge]], W: tp.Iterable[str]) -> tp.Set[str]:
    W = list(W)
    return _as_diagram(g, W).descendants(W)


def non_descendants(g: tp.Union[CausalDiagram, tp.Iterable[Edge]], W: tp.Iterable[str]) -> tp.Set[str]:
    '''ND(W) over V; `g` may be a diagram or a bare list of directed feature edges.'''
    W = list(W)
    return _as_diagram(g, W).non_descendants(W)
