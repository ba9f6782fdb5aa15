"""
Main CLI application for the LCAF toolkit.

This module provides the command-line interface: computing the LCAF of two
strings, cross-checking the algorithms against the brute-force oracle,
running the row-count experiments and the LCAF gap desk check.

Exit codes: 0 success, 1 oracle mismatch, 2 usage or input error.
"""

import functools
import logging
import sys
from typing import Any, Callable, Dict, NoReturn, Optional

import click
from pydantic import ValidationError

from cli.report import (
    display_system_messages, render_conjecture, render_csv, render_json, render_mismatch, render_text
)
from core.algorithms import ALGORITHM_CHOICES, UnknownAlgorithmError, expand_selection, get_solver, is_applicable
from core.binary_fast import BinaryAlphabetError, lcaf_binary
from core.datasets import DatasetError
from core.experiment import ExperimentError, conjecture_check, format_csv, oracle_diff, run_experiment, write_csv
from core.file_validator import FileValidator
from core.parikh import AlphabetMap, ParikhError, build_alphabet
from models.config import Config, SEED_ENV_VAR, load_config_file, parse_lengths
from models.experiment import DatasetSource, DatasetSpec
from models.results import LcafResult, SystemMessage


logger = logging.getLogger(__name__)

EXIT_MISMATCH = 1
EXIT_USAGE = 2

SOURCE_ALIASES = {
    'exhaustive': DatasetSource.EXHAUSTIVE_BINARY,
    'exhaustive-binary': DatasetSource.EXHAUSTIVE_BINARY,
    'iid': DatasetSource.IID_RANDOM,
    'iid-random': DatasetSource.IID_RANDOM,
    'fasta': DatasetSource.FASTA,
}

INPUT_ERRORS = (
    ValueError, ParikhError, BinaryAlphabetError, DatasetError, UnknownAlgorithmError, ExperimentError
)


def fail(message: str) -> NoReturn:
    """Report an error on standard error and exit with the usage code."""
    click.echo(f"❌ {message}", err=True)
    sys.exit(EXIT_USAGE)


def describe_error(error: Exception) -> str:
    """One-line description of an input error."""
    if isinstance(error, ValidationError):
        return "; ".join(
            f"{'.'.join(str(part) for part in err['loc'])}: {err['msg']}" if err['loc'] else err['msg']
            for err in error.errors()
        )
    return str(error)


def guarded(command: Callable) -> Callable:
    """Turn input errors and unexpected exceptions into exit code 2."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except INPUT_ERRORS as e:
            fail(describe_error(e))
        except Exception as e:
            logger.debug("Unexpected error", exc_info=True)
            fail(f"Unexpected error: {e}")
    return wrapper


def config_option(command: Callable) -> Callable:
    return click.option('-c', '--config-file', type=click.Path(),
                        help='YAML configuration file with experiment and oracle defaults')(command)


def load_config(config_file: Optional[str]) -> Config:
    """Load the configuration, exiting with code 2 when it is unusable."""
    try:
        return load_config_file(config_file)
    except ValueError as e:
        fail(f"Error loading config file: {e}")


def resolve_arguments(cli_args: Dict[str, Any], section: Any) -> Dict[str, Any]:
    """
    Resolve arguments with the command line taking precedence over the config file.

    Options not given on the command line (None, or an empty tuple for
    repeatable options) fall back to the attribute of the same name in the
    config section. Seed options already read LCAF_SEED through click, so the
    environment ranks between the two.

    Args:
        cli_args: Command line values keyed by config attribute name
        section: Config section holding the defaults

    Returns:
        Dictionary of resolved arguments
    """
    resolved = {}
    for key, value in cli_args.items():
        if value is None or value == ():
            value = getattr(section, key, None)
        resolved[key] = value
    return resolved


def read_input_string(path: str) -> str:
    """Read an input string from a file, trailing newlines stripped."""
    content, errors = FileValidator.safe_file_read(path, purpose="Input")
    if errors:
        raise ValueError(errors[0].message)
    return content.rstrip('\r\n')


def run_compute(name: str, a: str, b: str, audit: bool, profile: str) -> LcafResult:
    if name == 'binary' and profile == 'packed':
        return lcaf_binary(a, b, packed=True)
    if audit and name in ('skip', 'first-vector'):
        return get_solver(name)(a, b, audit=True)
    return get_solver(name)(a, b)


@click.group()
@click.option('-v', '--verbose', is_flag=True, help='Log debug diagnostics to standard error')
def main(verbose: bool) -> None:
    """
    LCAF toolkit

    Longest Common Abelian Factor of two strings: the longest length for
    which both strings have a factor with the same symbol counts.
    """
    if verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr,
                            format='%(levelname)s %(name)s: %(message)s')


@main.command()
@click.argument('a')
@click.argument('b')
@click.option('--algo', 'algorithm', type=click.Choice(ALGORITHM_CHOICES + ['all']), default='skip',
              show_default=True, help='Algorithm to run, or all for a comparison table')
@click.option('--format', 'output_format', type=click.Choice(['text', 'json', 'csv']), default='text',
              show_default=True, help='Output format')
@click.option('--from-file', is_flag=True, help='Read A and B from the files they name')
@click.option('--audit-skips', is_flag=True,
              help='Report lengths where the literal SKIP formula exceeds the provable skip')
@click.option('--profile', type=click.Choice(['prefix', 'packed']), default='prefix', show_default=True,
              help='Min/max-ones profile construction used by the binary algorithm')
@guarded
def compute(a: str, b: str, algorithm: str, output_format: str, from_file: bool,
            audit_skips: bool, profile: str) -> None:
    """Compute the LCAF of strings A and B."""
    if from_file:
        a, b = read_input_string(a), read_input_string(b)

    alpha = build_alphabet(a, b)
    messages = []
    results: Dict[str, LcafResult] = {}
    for name in expand_selection([algorithm]):
        if not is_applicable(name, a, b):
            if algorithm != 'all':
                fail(f"The binary algorithm needs at most 2 distinct symbols, input has {alpha.size}")
            messages.append(SystemMessage(
                level='info', message=f"Skipping binary: input has {alpha.size} distinct symbols"
            ))
            continue
        results[name] = run_compute(name, a, b, audit_skips, profile)
        logger.debug("%s: length %d, %s", name, results[name].length, results[name].stats)

    display_system_messages(messages)
    if output_format == 'json':
        click.echo(render_json(results, audit=audit_skips))
    elif output_format == 'csv':
        click.echo(render_csv(results, alpha), nl=False)
    else:
        click.echo(render_text(results, alpha, audit=audit_skips))


@main.command('oracle-diff')
@click.option('--seed', type=int, envvar=SEED_ENV_VAR, help=f'Random seed (env {SEED_ENV_VAR})')
@click.option('--trials', type=int, help='Pairs per length')
@click.option('--lengths', help='Lengths, e.g. 1..12 or 5,10')
@click.option('--alphabet', help="Symbols of the generated strings, e.g. 01 or acgt")
@config_option
@guarded
def oracle_diff_command(seed: Optional[int], trials: Optional[int], lengths: Optional[str],
                        alphabet: Optional[str], config_file: Optional[str]) -> None:
    """Cross-check every algorithm against the brute-force oracle."""
    config = load_config(config_file)
    resolved = resolve_arguments(
        {'seed': seed, 'trials': trials, 'lengths': lengths, 'alphabet': alphabet}, config.oracle
    )
    if resolved['trials'] < 1:
        fail(f"Trials must be positive, got {resolved['trials']}")
    if not resolved['alphabet']:
        fail("Alphabet must contain at least one symbol")

    alpha = AlphabetMap(tuple(sorted(set(resolved['alphabet']))))
    report = oracle_diff(parse_lengths(resolved['lengths']), resolved['trials'], alpha, resolved['seed'])

    if not report.passed:
        click.echo(render_mismatch(report.mismatch))
        sys.exit(EXIT_MISMATCH)
    click.echo(f"✅ {report.pairs_checked} pairs agree with the oracle ({', '.join(report.algorithms)})")


@main.command()
@click.option('--source', type=click.Choice(list(SOURCE_ALIASES)), required=True, help='Pair source')
@click.option('--lengths', help='Lengths, e.g. 2..10 or 10,20')
@click.option('--algo', 'algorithms', multiple=True, type=click.Choice(ALGORITHM_CHOICES + ['all']),
              help='Algorithm to measure (repeatable); the naive counter is always included')
@click.option('--trials', type=int, help='Pairs per length for sampled sources')
@click.option('--seed', type=int, envvar=SEED_ENV_VAR, help=f'Random seed (env {SEED_ENV_VAR})')
@click.option('--alphabet', help='Symbols for the iid source (default acgt)')
@click.option('--fasta', 'fasta_path', type=click.Path(), help='FASTA file for the fasta source')
@click.option('-o', '--output', 'output_file', type=click.Path(), help='CSV file (default: standard output)')
@click.option('--workers', type=int, help='Worker processes')
@config_option
@guarded
def experiment(source: str, lengths: Optional[str], algorithms: tuple, trials: Optional[int],
               seed: Optional[int], alphabet: Optional[str], fasta_path: Optional[str],
               output_file: Optional[str], workers: Optional[int], config_file: Optional[str]) -> None:
    """Measure row counts of the algorithms and print a CSV table."""
    config = load_config(config_file)
    resolved = resolve_arguments({
        'seed': seed, 'trials': trials, 'lengths': lengths,
        'algorithms': algorithms, 'workers': workers
    }, config.experiment)
    if resolved['workers'] < 1:
        fail(f"Workers must be at least 1, got {resolved['workers']}")

    spec = DatasetSpec(
        source=SOURCE_ALIASES[source],
        lengths=parse_lengths(resolved['lengths']),
        trials=resolved['trials'],
        alphabet=alphabet,
        seed=resolved['seed'],
        fasta_path=fasta_path,
        exhaustive_cap=config.experiment.exhaustive_cap,
        sampled_binary_cap=config.experiment.sampled_binary_cap
    )

    messages = []
    names = expand_selection(list(resolved['algorithms']))
    if 'all' in resolved['algorithms'] and 'binary' not in resolved['algorithms'] and spec.alphabet_map.size > 2:
        names.remove('binary')
        messages.append(SystemMessage(
            level='info', message=f"Skipping binary: alphabet '{spec.alphabet}' has {spec.alphabet_map.size} symbols"
        ))
    rows = run_experiment(spec, names, resolved['workers'], messages)
    display_system_messages(messages)

    if output_file:
        write_csv(rows, output_file)
        click.echo(f"✅ Wrote {len(rows)} rows to {output_file}", err=True)
    else:
        click.echo(format_csv(rows), nl=False)


@main.command()
@click.option('--n', 'n', type=int, default=256, show_default=True, help='String length')
@click.option('--trials', type=int, help='Random binary pairs')
@click.option('--seed', type=int, envvar=SEED_ENV_VAR, help=f'Random seed (env {SEED_ENV_VAR})')
@config_option
@guarded
def conjecture(n: int, trials: Optional[int], seed: Optional[int], config_file: Optional[str]) -> None:
    """Report the mean gap n - LCAF of random binary pairs next to log2(n)."""
    config = load_config(config_file)
    resolved = resolve_arguments({'seed': seed, 'trials': trials}, config.experiment)
    report = conjecture_check(n, resolved['trials'], resolved['seed'])
    click.echo(render_conjecture(report))


if __name__ == "__main__":
    main()
