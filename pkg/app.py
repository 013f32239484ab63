"""
Magnitude - command-line tools for magnitude and magnitude homology of graphs
Supports naive Smith normal form and Morse-reduced computation
"""

import functools
import json
import logging
from pathlib import Path

import click

import config
from presets import GRAPH_PRESETS, RULE_PRESETS, THEOREM_SUITES
from magnitude import (
    GeneratorCapExceeded,
    ConsistencyError,
    ChainComplexError,
    MatchingError,
    MagnitudeError,
    RunConfig,
    cmd_magnitude,
    cmd_homology,
    cmd_dump_matrices,
    cmd_diagonal_check,
    cmd_verify_matching,
    cmd_bench,
    cmd_tables,
    cmd_verify_theorems,
    check_dependencies,
    get_available_methods,
    parse_graph_spec
)
from magnitude.formats import render_table

EXIT_FAILURE = 1
EXIT_CAP = 3


def configure_logging(verbosity):
    """WARNING (or MAGNITUDE_LOG_LEVEL) by default, -v for INFO, -vv for DEBUG."""
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, config.LOG_LEVEL, logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", force=True)


def _pick(options, key, default):
    value = options.get(key)
    return default if value is None else value


def get_run_settings(preset_key, options):
    """Build a RunConfig from a graph preset or custom option values."""
    lmax = config.DEEP_MAX_L if options.get('deep') else options.get('max_l')
    if preset_key == 'custom':
        if not options.get('graph'):
            raise click.UsageError("--graph is required unless --preset is given")
        return RunConfig(
            graph=options['graph'],
            lmax=config.DEFAULT_MAX_L if lmax is None else lmax,
            method=_pick(options, 'method', 'naive'),
            output=options.get('out'),
            fmt=_pick(options, 'fmt', 'pretty'),
            jobs=_pick(options, 'jobs', config.JOBS),
            cap=_pick(options, 'cap', config.GENERATOR_CAP),
            seed=_pick(options, 'seed', config.SEED)
        )
    preset = GRAPH_PRESETS.get(preset_key, GRAPH_PRESETS['rook44'])
    # Output options apply to every preset
    return RunConfig(
        graph=preset['graph'],
        lmax=preset['lmax'] if lmax is None else lmax,
        method=_pick(options, 'method', preset['method']),
        output=options.get('out'),
        fmt=_pick(options, 'fmt', 'pretty'),
        jobs=_pick(options, 'jobs', config.JOBS),
        cap=_pick(options, 'cap', config.GENERATOR_CAP),
        seed=_pick(options, 'seed', config.SEED)
    )


def exit_codes(command):
    """Map package errors onto exit codes: 1 failed check, 2 usage, 3 generator cap."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return command(*args, **kwargs)
        except GeneratorCapExceeded as exc:
            click.echo(f"Error: {exc}", err=True)
            ctx.exit(EXIT_CAP)
        except (ConsistencyError, MatchingError, ChainComplexError) as exc:
            click.echo(f"FAILED: {exc}", err=True)
            ctx.exit(EXIT_FAILURE)
        except (MagnitudeError, ValueError) as exc:
            raise click.UsageError(str(exc))
    return wrapper


def warn_deep(options):
    if options.get('deep'):
        click.echo(f"WARNING: --deep computes up to l={config.DEEP_MAX_L}; "
                   f"this can take hours on the larger graphs", err=True)


def emit(text, out=None):
    if out:
        Path(out).write_text(text + "\n")
        click.echo(f"Wrote {out}")
    else:
        click.echo(text)


def banner(title):
    click.echo("\n" + "=" * 50)
    click.echo(f"  {title}")
    click.echo("=" * 50 + "\n")


graph_option = click.option('--graph', '-g', help="Graph spec, e.g. cycle:5, rook44, join(path:2,path:3), file:g.txt")
max_l_option = click.option('--max-l', 'max_l', type=int, help="Largest length grading l")
jobs_option = click.option('--jobs', '-j', type=int, help="Parallel l-slices (default MAGNITUDE_JOBS)")
cap_option = click.option('--cap', type=int, help="Generator cap per grading (default MAGNITUDE_GENERATOR_CAP)")
method_option = click.option('--method', '-m', help="naive or morse:<rule>")


@click.group()
@click.option('-v', '--verbose', count=True, help="-v for progress, -vv for sizes and timings")
def cli(verbose):
    """Magnitude and magnitude homology of graphs."""
    configure_logging(verbose)


@cli.command('magnitude')
@graph_option
@click.option('--terms', '-n', type=int, default=config.DEFAULT_TERMS, show_default=True)
@click.option('--speyer', is_flag=True, help="Also print the closed form |V| / sum_x q^d(a,x)")
@click.option('--json', 'as_json', is_flag=True)
@exit_codes
def magnitude_command(graph, terms, speyer, as_json):
    """Magnitude of a graph as a power series in q."""
    if not graph:
        raise click.UsageError("--graph is required")
    report = cmd_magnitude(parse_graph_spec(graph), terms, speyer)
    if as_json:
        data = {'graph': report.graph, 'coefficients': report.series.integers()}
        if report.rational is not None:
            data['numerator'] = list(report.rational.numerator)
            data['denominator'] = list(report.rational.denominator)
        click.echo(json.dumps(data, indent=2))
        return
    for line in report.lines():
        click.echo(line)


@cli.command('homology')
@graph_option
@click.option('--preset', '-p', type=click.Choice(list(GRAPH_PRESETS)), default='custom')
@max_l_option
@method_option
@click.option('--out', '-o', type=click.Path(dir_okay=False), help="Write the table here instead of stdout")
@click.option('--format', 'fmt', type=click.Choice(['pretty', 'json', 'csv']))
@jobs_option
@cap_option
@click.option('--deep', is_flag=True, help="Compute up to MAGNITUDE_DEEP_MAX_L")
@click.option('--dump-matrices', type=click.Path(file_okay=False), help="Also write each boundary matrix d_{k,l} here")
@exit_codes
def homology_command(preset, dump_matrices, **options):
    """Magnitude homology table MH_{k,l} for l <= max-l."""
    warn_deep(options)
    run = get_run_settings(preset, options)
    graph = run.load_graph()
    table = cmd_homology(run, graph)
    emit(render_table(table, run.fmt), run.output)
    if dump_matrices:
        paths = cmd_dump_matrices(graph, run.lmax, dump_matrices, run.cap)
        click.echo(f"Wrote {len(paths)} boundary matrices to {dump_matrices}")


@cli.command('diagonal-check')
@graph_option
@max_l_option
@method_option
@jobs_option
@cap_option
@click.option('--strict', is_flag=True, help="Exit 1 if the graph is not diagonal")
@exit_codes
def diagonal_check(strict, **options):
    """Report the first nonzero MH_{k,l} with k != l, if any."""
    run = get_run_settings('custom', options)
    report = cmd_diagonal_check(run)
    click.echo(str(report))
    if strict and not report.diagonal:
        click.get_current_context().exit(EXIT_FAILURE)


@cli.command('verify-matching')
@graph_option
@click.option('--rule', '-r', 'rule_name', required=True, type=click.Choice(list(RULE_PRESETS)))
@click.option('--max-l', 'max_l', type=int, default=config.DEFAULT_MAX_L, show_default=True)
@click.option('--dump-matching', type=click.Path(dir_okay=False), help="Write matched pairs here")
@cap_option
@exit_codes
def verify_matching(graph, rule_name, max_l, dump_matching, cap):
    """Check that a rule is valid and its prefix matching is Morse."""
    if not graph:
        targets = RULE_PRESETS[rule_name]['targets']
        graph = targets[0]
        click.echo(f"No --graph given, using {graph}")
    g = parse_graph_spec(graph)
    check = cmd_verify_matching(g, rule_name, max_l, cap, dump=bool(dump_matching))
    click.echo(f"{check.rule} on {check.graph}: {check.report}")
    for s in check.slices:
        status = "acyclic" if s.witness is None else "ZIG-ZAG CYCLE"
        click.echo(f"  l={s.l}: {s.pairs} pairs, critical {s.critical}, {status}")
        if s.witness is not None:
            click.echo(f"    {s.witness.render(lambda seq: '(' + ','.join(g.label(v) for v in seq) + ')')}")
    if dump_matching:
        Path(dump_matching).write_text("\n".join(check.dump) + "\n")
        click.echo(f"Wrote {dump_matching}")
    if not check.ok:
        click.get_current_context().exit(EXIT_FAILURE)


@cli.command('verify-theorems')
@click.argument('selector', type=click.Choice(list(THEOREM_SUITES) + ['all']))
@click.option('--max-l', 'max_l', type=int, help="Override the suite's default l")
@jobs_option
@click.option('--seed', type=int, default=config.SEED, show_default=True)
@exit_codes
def verify_theorems(selector, max_l, jobs, seed):
    """Run a theorem suite and print every sub-check."""
    report = cmd_verify_theorems(selector, max_l, jobs, seed, progress=lambda r: click.echo(str(r)))
    banner(f"{len(report.results) - len(report.failures)}/{len(report.results)} checks passed (seed {seed})")
    if report.failures:
        click.echo("FAILURES:")
        for r in report.failures:
            click.echo(f"  - {r.suite}: {r.name}")
        click.get_current_context().exit(EXIT_FAILURE)


@cli.command()
@graph_option
@max_l_option
@method_option
@cap_option
@exit_codes
def bench(**options):
    """Generator counts and SNF time, full complex against reduced complex."""
    run = get_run_settings('custom', options)
    rows = cmd_bench(run)
    click.echo(f"{run.graph} [{run.method}]")
    for row in rows:
        agree = "equal" if row.agree else "DIFFERENT"
        zero = ", zero differentials" if row.zero_differentials else ""
        click.echo(f"  l={row.l}: |I|={row.full} |I°|={row.reduced} "
                   f"naive {row.naive_seconds:.3f}s, reduced {row.morse_seconds:.3f}s, {agree}{zero}")
    if not all(row.agree for row in rows):
        click.get_current_context().exit(EXIT_FAILURE)


@cli.command()
@max_l_option
@jobs_option
@cap_option
@click.option('--format', 'fmt', type=click.Choice(['pretty', 'json', 'csv']), default='pretty')
@click.option('--deep', is_flag=True, help="Compute up to MAGNITUDE_DEEP_MAX_L")
@exit_codes
def tables(max_l, jobs, cap, fmt, deep):
    """Reproduce the equal-magnitude pairs: closed forms, series and homology tables."""
    warn_deep({'deep': deep})
    lmax = config.DEEP_MAX_L if deep else max_l
    for entry in cmd_tables(lmax, jobs=jobs, cap=cap):
        if fmt == 'pretty':
            click.echo(f"#{entry.graph} = {entry.rational} = {entry.series}")
        click.echo(render_table(entry.table, fmt))
        click.echo()


@cli.command()
def check():
    """Check configuration and optional packages."""
    banner("Magnitude")
    errors, warnings = check_dependencies()
    if errors:
        click.echo("ERRORS (will affect functionality):")
        for e in errors:
            click.echo(f"  - {e}")
        click.echo()
    if warnings:
        click.echo("WARNINGS (some features disabled):")
        for w in warnings:
            click.echo(f"  - {w}")
        click.echo()
    click.echo("Methods: " + ", ".join(m for m, ok in get_available_methods().items() if ok))
    if errors:
        click.get_current_context().exit(EXIT_FAILURE)


if __name__ == '__main__':
    cli()
