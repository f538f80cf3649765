'''
Command line: `ascm [--format text|csv] [--out PATH] [--seed N] [--cap N] COMMAND ...`

Exit status 0 on success (or an admissible verdict), 1 for a negative analysis result
(inadmissible, not equivalent, failing suite), 2 when the input cannot be resolved.
'''
import sys
import typing as tp
import functools
from dataclasses import dataclass, field
import click
from .dsl import SourceFile, parse_file, validate
from .model import Scm, load_scms, observational_joint
from .graph import (ArchSpec, induce_diagram, interpretability_verdict, t_admissible, max_t_admissible,
                    w_admissible)
from .inference import (Query, load_queries, oracle, closed_form, obs_equivalent, divergence_witness,
                        TradeoffReport)
from .corpus import load_corpus
from .report import Table, render_lines
from .suite import GoldenSuite
from . import utils


class ResolutionError(click.ClickException):
    exit_code = 2


@dataclass
class RunConfig:
    subcommand: str = ''
    inputs: tp.List[str] = field(default_factory=list)
    out: tp.Optional[str] = None
    format: str = 'text'
    seed: int = 0
    cap: int = 65536
    verbose: bool = False

    def __post_init__(self):
        assert self.format in ('text', 'csv')
        assert self.cap >= 1


def _resolving(f):
    '''Turn input errors raised by the library into exit status 2.'''
    @functools.wraps(f)
    def g(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except (ValueError, KeyError) as e:
            raise ResolutionError(str(e).strip("'\""))
    return g


class Workspace(object):
    '''Description files loaded for one command, with their models and queries.'''
    def __init__(self, config: RunConfig) -> None:
        self.config = config
        if config.inputs:
            source = SourceFile(())
            for path in config.inputs:
                source = source + parse_file(path)
            validate(source)
        else:
            source = load_corpus()
        self.source = source
        self.scms = load_scms(source)
        self.queries = load_queries(source)

    def scm(self, name: str) -> Scm:
        if name not in self.scms:
            raise ResolutionError('unknown scm %s (known: %s)' % (name, ', '.join(sorted(self.scms))))
        return self.scms[name]

    def query(self, name: str) -> Query:
        if name not in self.queries:
            raise ResolutionError('unknown query %s (known: %s)' % (name, ', '.join(sorted(self.queries))))
        return self.queries[name]

    def emit(self, text: str) -> None:
        if self.config.out:
            with open(self.config.out, 'w', encoding='utf-8') as f:
                f.write(text)
        else:
            click.echo(text, nl=False)


def _workspace(ctx: click.Context, name: str, files: tp.Sequence[str]) -> Workspace:
    config: RunConfig = ctx.obj
    config.subcommand = name
    config.inputs = list(files)
    return Workspace(config)


def _names(scm: Scm, text: str) -> tp.FrozenSet[str]:
    names = frozenset(utils.parse_names(text))
    unknown = names - set(scm.features) - {scm.mixture}
    if unknown:
        raise ResolutionError('%s is not a feature of %s' % (utils.format_set(unknown), scm.name))
    return names


def _arch(scm: Scm, text: str) -> ArchSpec:
    _names(scm, text)
    return ArchSpec.parse(text, scm.mixture)


def _target(scm: Scm) -> tp.Optional[str]:
    return scm.classifier.target or (scm.outcomes[0] if scm.outcomes else None)


files_option = click.option('--file', '-f', 'files', multiple=True, type=click.Path(exists=True, dir_okay=False),
                            help='Description file; may repeat. Defaults to the bundled corpus.')


@click.group()
@click.option('--format', 'fmt', type=click.Choice(['text', 'csv']), default='text', show_default=True)
@click.option('--out', type=click.Path(dir_okay=False), default=None, help='Write the report here instead of stdout.')
@click.option('--seed', type=int, default=0, show_default=True, help='Seed of the randomized suites.')
@click.option('--cap', type=click.IntRange(min=1), default=65536, show_default=True,
              help='Maximum number of subsets examined by set-family enumerations.')
@click.option('--verbose', '-v', is_flag=True, default=False)
@click.pass_context
def main(ctx: click.Context, fmt: str, out: tp.Optional[str], seed: int, cap: int, verbose: bool) -> None:
    '''Causal interpretability analyses of augmented SCMs.'''
    ctx.obj = RunConfig(out=out, format=fmt, seed=seed, cap=cap, verbose=verbose)


@main.command()
@click.argument('scm_name')
@click.option('--t', 'features', required=True, help='Classifier features, e.g. B,D,C (X for the raw mixture).')
@click.option('--w', 'targets', required=True, help='Query targets, e.g. D.')
@files_option
@click.pass_context
@_resolving
def check(ctx, scm_name, features, targets, files):
    '''Is the architecture interpretable for the query targets?'''
    ws = _workspace(ctx, 'check', files)
    scm = ws.scm(scm_name)
    arch = _arch(scm, features)
    W = _names(scm, targets)
    verdict = interpretability_verdict(induce_diagram(scm), arch, W)
    lines = [('scm', scm.name), ('T', arch.name), ('W', utils.format_set(W)),
             ('verdict', 'admissible' if verdict.admissible else 'inadmissible'), ('reason', verdict.reason)]
    if verdict.violators:
        lines.append(('violators', utils.format_set(verdict.violators)))
    ws.emit(render_lines(lines, ws.config.format))
    ctx.exit(0 if verdict.admissible else 1)


@main.command()
@click.argument('scm_name')
@click.option('--w', 'targets', multiple=True, required=True, help='Query targets; repeat for a family.')
@files_option
@click.pass_context
@_resolving
def maxt(ctx, scm_name, targets, files):
    '''Largest feature set admissible for every query in the family.'''
    ws = _workspace(ctx, 'maxt', files)
    scm = ws.scm(scm_name)
    family = [_names(scm, w) for w in targets]
    best = max_t_admissible(induce_diagram(scm), family)
    lines = [('scm', scm.name), ('family', utils.format_family(family)), ('max', utils.format_set(best))]
    target = _target(scm)
    if target is not None:
        lines.append(('accuracy', scm.with_classifier(best, target=target).fitted_classifier().accuracy))
    ws.emit(render_lines(lines, ws.config.format))


def _family_table(title: str, column: str, members, truncated: bool) -> Table:
    table = Table([column], title=title + (' (truncated)' if truncated else ''))
    for m in members:
        table.add(utils.format_set(m))
    return table


@main.command()
@click.argument('scm_name')
@click.option('--w', 'targets', multiple=True, required=True, help='Query targets; repeat for a family.')
@files_option
@click.pass_context
@_resolving
def tad(ctx, scm_name, targets, files):
    '''All feature sets admissible for every query in the family.'''
    ws = _workspace(ctx, 'tad', files)
    scm = ws.scm(scm_name)
    family = [_names(scm, w) for w in targets]
    result = t_admissible(induce_diagram(scm), family, ws.config.cap)
    title = 'T-admissible sets of %s for %s' % (scm.name, utils.format_family(family))
    ws.emit(_family_table(title, 'T', result, result.truncated).render(ws.config.format))


@main.command()
@click.argument('scm_name')
@click.option('--t', 'features', required=True, help='Classifier features.')
@files_option
@click.pass_context
@_resolving
def wad(ctx, scm_name, features, files):
    '''All query targets the architecture answers interpretably.'''
    ws = _workspace(ctx, 'wad', files)
    scm = ws.scm(scm_name)
    arch = _arch(scm, features)
    result = w_admissible(induce_diagram(scm), arch, ws.config.cap)
    title = 'W-admissible sets of %s for T = %s' % (scm.name, arch.name)
    ws.emit(_family_table(title, 'W', result, result.truncated).render(ws.config.format))


@main.command(name='eval')
@click.argument('query_name')
@click.option('--t', 'features', default=None, help='Re-fit the classifier as bayes(label) over these features.')
@click.option('--method', type=click.Choice(['oracle', 'closed', 'both']), default='both', show_default=True)
@files_option
@click.pass_context
@_resolving
def evaluate(ctx, query_name, features, method, files):
    '''Evaluate a counterfactual query by the oracle, the closed form, or both.'''
    ws = _workspace(ctx, 'eval', files)
    q = ws.query(query_name)
    scm = ws.scm(q.scm)
    if features is not None:
        arch = _arch(scm, features)
        T = [scm.mixture] if arch.all_pixels else sorted(arch.features)
        if tuple(T) != tuple(sorted(scm.classifier.features)):
            target = _target(scm)
            if target is None:
                raise ResolutionError('%s has no true label to re-fit a classifier on %s' % (scm.name, arch.name))
            scm = scm.with_classifier(T, target=target)
    T = list(scm.classifier.features)
    lines: tp.List[tp.Tuple[str, tp.Any]] = [('query', q.render()), ('scm', scm.name), ('T', utils.format_set(T))]
    truth = estimate = None
    if method in ('oracle', 'both'):
        truth = oracle(scm, q).value
        lines.append(('oracle', truth))
    if method in ('closed', 'both'):
        joint = observational_joint(scm, scm.observables + [scm.mixture])
        result = closed_form(joint, T, q, induce_diagram(scm))
        estimate = result.value
        lines.append(('closed_form', estimate))
        lines.append(('admissible', result.admissible))
    if truth is not None and estimate is not None:
        lines.append(('difference', abs(truth - estimate)))
    ws.emit(render_lines(lines, ws.config.format))


@main.command()
@click.argument('first')
@click.argument('second')
@click.option('--query', 'query_name', default=None, help='Also report both answers to this query.')
@files_option
@click.pass_context
@_resolving
def equiv(ctx, first, second, query_name, files):
    '''Do two models share the observational joint over features, mixture and prediction?'''
    ws = _workspace(ctx, 'equiv', files)
    a, b = ws.scm(first), ws.scm(second)
    equal = obs_equivalent(a, b)
    lines: tp.List[tp.Tuple[str, tp.Any]] = [('first', a.name), ('second', b.name), ('equivalent', equal)]
    if equal and query_name is not None:
        x, y, diff = divergence_witness(a, b, ws.query(query_name))
        lines += [('query', query_name), ('first_answer', x), ('second_answer', y), ('difference', diff)]
    ws.emit(render_lines(lines, ws.config.format))
    ctx.exit(0 if equal else 1)


@main.command()
@click.argument('scm_name')
@click.option('--query', 'query_names', multiple=True, help='Query name; defaults to every query on the scm.')
@click.option('--arch', 'archs', multiple=True, help='Feature set; defaults to every nonempty feature set.')
@click.option('--csv', 'csv_path', type=click.Path(dir_okay=False), default=None, help='Also write the table as CSV.')
@files_option
@click.pass_context
@_resolving
def tradeoff(ctx, scm_name, query_names, archs, csv_path, files):
    '''Accuracy, admissibility and counterfactual error of Bayes classifiers per feature set.'''
    ws = _workspace(ctx, 'tradeoff', files)
    scm = ws.scm(scm_name)
    if query_names:
        queries = [ws.query(n) for n in query_names]
    else:
        queries = [q for _, q in sorted(ws.queries.items()) if q.scm == scm.name]
    if not queries:
        raise ResolutionError('no query on %s' % scm.name)
    if archs:
        specs = [_arch(scm, a) for a in archs]
    else:
        specs = [ArchSpec(t) for t in utils.subsets(scm.features, nonempty=True)]
    report = TradeoffReport(scm, queries, specs, file=sys.stderr, verbose=ws.config.verbose)
    table = report.table()
    if csv_path:
        with open(csv_path, 'w', encoding='utf-8') as f:
            f.write(table.to_csv())
    ws.emit(table.render(ws.config.format))


@main.command()
@click.argument('scm_name')
@files_option
@click.pass_context
@_resolving
def diagram(ctx, scm_name, files):
    '''Causal diagram as `A -> B` and `A <-> B` lines.'''
    ws = _workspace(ctx, 'diagram', files)
    ws.emit(induce_diagram(ws.scm(scm_name)).to_text())


@main.command(name='paper-suite')
@click.option('--graphs', 'n_graphs', type=click.IntRange(min=1), default=1000, show_default=True)
@click.option('--models', 'n_scms', type=click.IntRange(min=1), default=40, show_default=True)
@click.pass_context
def paper_suite(ctx, n_graphs, n_scms):
    '''Run every golden check over the bundled corpus and the seeded randomized checks.'''
    config: RunConfig = ctx.obj
    config.subcommand = 'paper-suite'
    if config.out:
        with open(config.out, 'w', encoding='utf-8') as f:
            passed = GoldenSuite(config.seed, n_graphs, n_scms, file=f).run()
    else:
        passed = GoldenSuite(config.seed, n_graphs, n_scms, file=sys.stdout).run()
    ctx.exit(0 if passed else 1)


if __name__ == '__main__':
    main()
