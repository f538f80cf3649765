'''
Canonical text of a parsed description file.

Blocks keep their order; inside an scm block declarations are written as exo, var, mixture, label.
Probabilities are written as exact fractions, so parse(render(f)) == f.
'''
import typing as tp
from .source import ScmBlock, QueryBlock, SourceFile

INDENT = ' ' * 4


def _assignments(pairs: tp.Sequence[tp.Tuple[str, int]]) -> str:
    return ', '.join('%s = %d' % (name, value) for name, value in pairs)


def render_scm(block: ScmBlock) -> str:
    lines = ['scm %s {' % block.name]
    for decl in block.exogenous:
        lines.append(INDENT + 'exo %s ~ %s' % (decl.name, decl.dist.render()))
    for decl in block.endogenous:
        lines.append(INDENT + 'var %s = %s' % (decl.name, decl.expr.render()))
    lines.append(INDENT + 'mixture %s = tuple(%s)' % (block.mixture.name, ', '.join(block.mixture.components)))
    label = block.label
    if label.expr is not None:
        body = label.expr.render()
    else:
        body = 'bayes(%s)' % label.bayes_target
    lines.append(INDENT + 'label %s uses {%s} = %s' % (label.name, ', '.join(label.features), body))
    lines.append('}')
    return '\n'.join(lines)


def render_query(block: QueryBlock) -> str:
    given = ''
    if block.evidence:
        given = ' ; given ' + _assignments(block.evidence)
    return 'query %s on %s = P(%s = %d | do(%s)%s)' % (
        block.name, block.scm, block.outcome, block.outcome_value, _assignments(block.intervention), given)


def render(source: SourceFile) -> str:
    parts = []
    for block in source.blocks:
        if isinstance(block, ScmBlock):
            parts.append(render_scm(block))
        else:
            parts.append(render_query(block))
    if not parts:
        return ''
    return '\n\n'.join(parts) + '\n'
