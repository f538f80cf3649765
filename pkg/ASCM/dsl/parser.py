import typing as tp
import threading
import functools
from fractions import Fraction
import networkx as nx
from parglare import Grammar, Parser
from parglare import exceptions as parglare_exceptions
from .grammar import GRAMMAR
from .expr import Expr, Const, BoolConst, Ref, Not, Indicator, BinOp
from .dist import get_dist
from .source import ExoDecl, VarDecl, MixtureDecl, LabelDecl, ScmBlock, QueryBlock, SourceFile
from .errors import (DslSyntaxError, UndeclaredIdentifierError, CyclicDefinitionError, ProbabilityError,
                     DuplicateDeclarationError, InvalidDeclarationError)


class _RawScm(object):
    def __init__(self, name: str, statements: tp.List[tp.Any], pos: int) -> None:
        self.name = name
        self.statements = statements
        self.pos = pos


class _RawExo(object):
    def __init__(self, name: str, kind: str, probs: tp.List[tp.Tuple[int, int]], pos: int) -> None:
        self.name = name
        self.kind = kind
        self.probs = probs
        self.pos = pos


class _RawLabel(object):
    def __init__(self, name: str, features: tp.List[str], body: tp.Tuple[str, tp.Any], pos: int) -> None:
        self.name = name
        self.features = features
        self.body = body
        self.pos = pos


def _append(_, n):
    return n[0] + [n[-1]]


def _single(_, n):
    return [n[0]]


def _pass(_, n):
    return n[0]


def _empty(_, n):
    return []


def _binary(op):
    def action(_, n):
        return BinOp(op, n[0], n[2])
    return action


ACTIONS: tp.Dict[str, tp.Any] = {
    'Name': lambda _, value: value,
    'Integer': lambda _, value: int(value),
    'Decimal': lambda _, value: Fraction(value),
    'File': [_pass, _empty],
    'Blocks': [_append, _single],
    'Block': _pass,
    'ScmBlock': lambda ctx, n: _RawScm(n[1], n[3], ctx.start_position),
    'Statements': [_append, _single],
    'Statement': _pass,
    'ExoDecl': lambda ctx, n: _RawExo(n[1], n[3][0], n[3][1], ctx.start_position),
    'Dist': [lambda _, n: ('bernoulli', [n[2]]), lambda _, n: ('categorical', n[2])],
    'Probs': [_append, _single],
    'Prob': [lambda _, n: (n[0], n[2]),
             lambda _, n: (n[0].numerator, n[0].denominator),
             lambda _, n: (n[0], 1)],
    'VarDecl': lambda ctx, n: VarDecl(n[1], n[3], ctx.start_position),
    'MixtureDecl': lambda ctx, n: MixtureDecl(n[1], tuple(n[5]), ctx.start_position),
    'LabelDecl': lambda ctx, n: _RawLabel(n[1], n[4], n[7], ctx.start_position),
    'ClassifierBody': [lambda _, n: ('bayes', n[2]), lambda _, n: ('expr', n[0])],
    'NameList': [_pass, _empty],
    'Names': [_append, _single],
    'QueryBlock': lambda ctx, n: QueryBlock(n[1], n[3], n[7], n[9], tuple(n[13]), tuple(n[15]), ctx.start_position),
    'Given': [lambda _, n: n[2], _empty],
    'Assignments': [_append, _single],
    'Assignment': lambda _, n: (n[0], n[2]),
    'Expr': [_binary('or'), _pass],
    'XorExpr': [_binary('xor'), _pass],
    'AndExpr': [_binary('and'), _pass],
    'NotExpr': [lambda _, n: Not(n[1]), _pass],
    'Comparison': [_binary('<'), _binary('>'), _binary('='), _pass],
    'Sum': [_binary('+'), _binary('-'), _pass],
    'Product': [_binary('*'), _pass],
    'Atom': [lambda _, n: Const(n[0]),
             lambda _, n: BoolConst(True),
             lambda _, n: BoolConst(False),
             lambda _, n: Ref(n[0]),
             lambda _, n: Indicator(n[2]),
             lambda _, n: n[1]],
}


@functools.lru_cache(maxsize=None)
def _grammar() -> Grammar:
    return Grammar.from_string(GRAMMAR)


# SyntaxError in current parglare, ParseError in older releases
PARSE_ERRORS = tuple(getattr(parglare_exceptions, name) for name in ('SyntaxError', 'ParseError')
                     if hasattr(parglare_exceptions, name))

_local = threading.local()


def _parser() -> Parser:
    # parglare parsers keep per-parse state, so each thread gets its own
    if not hasattr(_local, 'parser'):
        _local.parser = Parser(_grammar(), actions=ACTIONS)
    return _local.parser


def line_col(text: tp.Optional[str], pos: tp.Optional[int]) -> tp.Tuple[tp.Optional[int], tp.Optional[int]]:
    if text is None or pos is None:
        return (None, None)
    line = text.count('\n', 0, pos) + 1
    column = pos - (text.rfind('\n', 0, pos) + 1) + 1
    return (line, column)


def parse(text: str) -> SourceFile:
    '''
    Parse and validate a description file.

    Raises a DslError subclass (with 1-based line/column) for syntax errors, undeclared identifiers,
    cyclic definitions, out-of-range probabilities and duplicate declarations.
    '''
    try:
        raw_blocks = _parser().parse(text)
    except PARSE_ERRORS as e:
        location = getattr(e, 'location', None)
        pos = getattr(location, 'start_position', None)
        expected = [getattr(s, 'name', str(s)) for s in (getattr(e, 'symbols_expected', None) or [])]
        line, column = line_col(text, pos)
        raise DslSyntaxError('syntax error', line, column, expected) from e
    blocks = []
    for raw in raw_blocks:
        if isinstance(raw, _RawScm):
            blocks.append(_assemble_scm(raw, text))
        else:
            blocks.append(raw)
    source = SourceFile(tuple(blocks))
    validate(source, text)
    return source


def parse_file(path: str) -> SourceFile:
    with open(path, 'r', encoding='utf-8') as f:
        return parse(f.read())


def _assemble_scm(raw: _RawScm, text: str) -> ScmBlock:
    seen: tp.Dict[str, int] = {}
    exogenous = []
    endogenous = []
    mixtures = []
    labels = []
    for stmt in raw.statements:
        if stmt.name in seen:
            raise DuplicateDeclarationError('%s is declared twice in scm %s' % (stmt.name, raw.name), *line_col(text, stmt.pos))
        seen[stmt.name] = stmt.pos
        if isinstance(stmt, _RawExo):
            exogenous.append(ExoDecl(stmt.name, _make_dist(stmt, text), stmt.pos))
        elif isinstance(stmt, VarDecl):
            endogenous.append(stmt)
        elif isinstance(stmt, MixtureDecl):
            mixtures.append(stmt)
        else:
            labels.append(stmt)
    for kind, decls in (('mixture', mixtures), ('label', labels)):
        if len(decls) == 0:
            raise InvalidDeclarationError('scm %s declares no %s' % (raw.name, kind), *line_col(text, raw.pos))
        if len(decls) > 1:
            raise DuplicateDeclarationError('scm %s declares more than one %s' % (raw.name, kind), *line_col(text, decls[1].pos))
    label = labels[0]
    kind, value = label.body
    if kind == 'bayes':
        label_decl = LabelDecl(label.name, tuple(label.features), bayes_target=value, pos=label.pos)
    else:
        label_decl = LabelDecl(label.name, tuple(label.features), expr=value, pos=label.pos)
    return ScmBlock(raw.name, tuple(exogenous), tuple(endogenous), mixtures[0], label_decl, raw.pos)


def _make_dist(raw: _RawExo, text: str):
    line, column = line_col(text, raw.pos)
    probs = []
    for numerator, denominator in raw.probs:
        if denominator == 0:
            raise ProbabilityError('zero denominator in probability of %s' % raw.name, line, column)
        probs.append(Fraction(numerator, denominator))
    if raw.kind == 'bernoulli':
        return get_dist('bernoulli')(probs[0], line, column)
    return get_dist('categorical')(probs, line, column)


def validate(source: SourceFile, text: tp.Optional[str] = None) -> None:
    '''Check name uniqueness, reference resolution and acyclicity of a (possibly merged) SourceFile.'''
    names: tp.Dict[str, tp.Any] = {}
    for block in source.blocks:
        if block.name in names:
            raise DuplicateDeclarationError('block %s is declared twice' % block.name, *line_col(text, block.pos))
        names[block.name] = block
    for block in source.scms():
        _validate_scm(block, text)
    for query in source.queries():
        _validate_query(query, names, text)


def _undeclared(names: tp.Iterable[str], known: tp.Collection[str]) -> tp.List[str]:
    return sorted(set(names) - set(known))


def _validate_scm(block: ScmBlock, text: tp.Optional[str]) -> None:
    exo = [d.name for d in block.exogenous]
    var = [d.name for d in block.endogenous]
    known = set(exo) | set(var)
    if len(block.declared_names) != len(set(block.declared_names)):
        duplicated = sorted(n for n in set(block.declared_names) if block.declared_names.count(n) > 1)
        raise DuplicateDeclarationError('duplicate declaration of %s in scm %s' % (', '.join(duplicated), block.name),
                                        *line_col(text, block.pos))
    for decl in block.endogenous:
        missing = _undeclared(decl.expr.names(), known)
        if missing:
            raise UndeclaredIdentifierError('undeclared identifier %s in definition of %s' % (', '.join(missing), decl.name),
                                            *line_col(text, decl.pos))
    mixture = block.mixture
    missing = _undeclared(mixture.components, known)
    if missing:
        raise UndeclaredIdentifierError('undeclared mixture component %s' % ', '.join(missing), *line_col(text, mixture.pos))
    if len(set(mixture.components)) != len(mixture.components):
        raise DuplicateDeclarationError('mixture %s repeats a component' % mixture.name, *line_col(text, mixture.pos))

    graph = nx.DiGraph()
    graph.add_nodes_from(var)
    for decl in block.endogenous:
        for name in decl.expr.names():
            if name in graph:
                graph.add_edge(name, decl.name)
    try:
        cycle_edges = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        cycle_edges = []
    if cycle_edges:
        cycle = [u for u, _ in cycle_edges]
        first = next(d for d in block.endogenous if d.name in cycle)
        raise CyclicDefinitionError(cycle, *line_col(text, first.pos))

    features = set(mixture.components) & set(var)
    for decl in block.endogenous:
        if decl.name in features:
            readable = set(exo) | features
            hidden = _undeclared(decl.expr.names(), readable)
            if hidden:
                raise InvalidDeclarationError('feature %s reads label variable %s, which is not a mixture component'
                                              % (decl.name, ', '.join(hidden)), *line_col(text, decl.pos))

    label = block.label
    line, column = line_col(text, label.pos)
    missing = _undeclared(label.features, features | {mixture.name} | known)
    if missing:
        raise UndeclaredIdentifierError('undeclared classifier input %s' % ', '.join(missing), line, column)
    if len(set(label.features)) != len(label.features):
        raise DuplicateDeclarationError('classifier %s repeats an input' % label.name, line, column)
    if mixture.name in label.features:
        if len(label.features) > 1:
            raise InvalidDeclarationError('classifier %s mixes the mixture %s with features' % (label.name, mixture.name),
                                          line, column)
        readable = set(mixture.components)
    else:
        not_features = _undeclared(label.features, features)
        if not_features:
            raise InvalidDeclarationError('classifier input %s is not a feature (mixture component)' % ', '.join(not_features),
                                          line, column)
        readable = set(label.features)
    if label.expr is not None:
        missing = _undeclared(label.expr.names(), known)
        if missing:
            raise UndeclaredIdentifierError('undeclared identifier %s in classifier %s' % (', '.join(missing), label.name),
                                            line, column)
        unread = _undeclared(label.expr.names(), readable)
        if unread:
            raise InvalidDeclarationError('classifier %s reads %s outside its inputs' % (label.name, ', '.join(unread)),
                                          line, column)
    elif label.bayes_target not in var:
        raise UndeclaredIdentifierError('bayes target %s is not an endogenous variable' % label.bayes_target, line, column)


def _validate_query(query: QueryBlock, blocks: tp.Dict[str, tp.Any], text: tp.Optional[str]) -> None:
    line, column = line_col(text, query.pos)
    scm = blocks.get(query.scm)
    if not isinstance(scm, ScmBlock):
        raise UndeclaredIdentifierError('query %s refers to undeclared scm %s' % (query.name, query.scm), line, column)
    if query.outcome != scm.label.name:
        raise UndeclaredIdentifierError('query %s asks about %s, but the label of %s is %s'
                                        % (query.name, query.outcome, scm.name, scm.label.name), line, column)
    var = set(d.name for d in scm.endogenous)
    features = var & set(scm.mixture.components)
    observable = features | set(scm.mixture.components)
    for kind, assignments, allowed in (('intervention', query.intervention, features),
                                       ('evidence', query.evidence, observable)):
        names = [name for name, _ in assignments]
        if len(names) != len(set(names)):
            raise DuplicateDeclarationError('query %s assigns a variable twice in its %s' % (query.name, kind), line, column)
        missing = _undeclared(names, set(scm.declared_names))
        if missing:
            raise UndeclaredIdentifierError('query %s: undeclared identifier %s' % (query.name, ', '.join(missing)), line, column)
        misplaced = _undeclared(names, allowed)
        if misplaced:
            raise InvalidDeclarationError('query %s: %s cannot appear in the %s' % (query.name, ', '.join(misplaced), kind),
                                          line, column)
