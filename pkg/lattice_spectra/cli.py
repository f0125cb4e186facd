"""Command line front end: validate lattices, print spectra, decompose elements,
run theorem checkers and sweeps, list the catalog and export Hasse diagrams.

Exit codes are 0 on success, 1 when a property fails or a checker finds a
counterexample, and 2 for invalid input or usage.
"""

# Created:   18-Oct-2026

import argparse
import logging
import os
import sys
from dataclasses import dataclass
from typing import List, Optional

import lattice_spectra
import lattice_spectra.core as core
import lattice_spectra.errors as errors
import lattice_spectra.gen as gen
from lattice_spectra.debug import _enable_logging, _initialize_logger
from lattice_spectra.decomp import decompose_special
from lattice_spectra.formats import load_lattice
from lattice_spectra.ideals import spectrum
from lattice_spectra.renderer import Renderer
from lattice_spectra.theorems import REGISTRY, check, check_all, sweep


EXIT_OK         = 0
EXIT_FAILURE    = 1
EXIT_INVALID    = 2

# Property failures, every other library error is an input or usage error
_FAILURE_ERRORS = (errors.NotDecomposableError, errors.BottomElementError, errors.SpectrumInconsistencyError)

_logger = _initialize_logger('lattice_spectra.cli')


@dataclass
class RunConfig:
    """Parsed command line of one invocation

    Attributes
    ----------
    command : str
        One of validate, spectrum, decompose, check, sweep, export-dot, catalog
    source : str, optional
        File path, catalog name, catalog:NAME or random:K
    """

    command: str
    source: Optional[str] = None
    json_mode: bool = False
    quiet: bool = False
    force: bool = False
    check_all: bool = False
    theorem_id: Optional[str] = None
    element: Optional[str] = None
    max_n: Optional[int] = None
    implication: Optional[str] = None
    chain_reading: str = 'values'
    seed: int = 0
    threads: int = 1
    max_size: Optional[int] = None
    output: Optional[str] = None
    log_file: Optional[str] = None
    verbose: bool = False

    @classmethod
    def from_namespace(cls, args):
        fields = {name: getattr(args, name) for name in cls.__dataclass_fields__ if hasattr(args, name)}
        return cls(**fields)


def _common_options():
    # Defaults come from RunConfig, so the flags work before or after the command
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument('--json', dest='json_mode', action='store_true', help='Emit JSON instead of text')
    common.add_argument('--quiet', action='store_true', help='Print nothing but errors, rely on the exit code')
    common.add_argument('--threads', type=int, help='Worker threads for sweeps')
    common.add_argument('--seed', type=int, help='Seed for random:K sources')
    common.add_argument('--max-size', dest='max_size', type=int, help='Largest lattice accepted by validation')
    common.add_argument('--log-file', dest='log_file', help='Write a debug log to this file')
    common.add_argument('--verbose', action='store_true', help='Echo debug messages to stderr')
    return common


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(prog='lattice-spectra', parents=[common],
                                     description='Ideal spectra and theorem checks on finite decomposable lattices')
    parser.add_argument('--version', action='version', version='%(prog)s {}'.format(lattice_spectra.__version__))
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    source_help = 'Lattice JSON file, catalog name, catalog:NAME or random:K'
    validate = commands.add_parser('validate', parents=[common], help='Validate a lattice and summarize it')
    validate.add_argument('source', help=source_help)

    spectra = commands.add_parser('spectrum', parents=[common], help='Print every ideal class of a distributive lattice')
    spectra.add_argument('source', help=source_help)

    decompose = commands.add_parser('decompose', parents=[common], help='Split an element into disjoint special parts')
    decompose.add_argument('source', help=source_help)
    decompose.add_argument('element', help='Element label')

    checker = commands.add_parser('check', parents=[common], help='Run theorem checkers on a lattice')
    checker.add_argument('source', help=source_help)
    checker.add_argument('theorem_id', nargs='?', default=None, help='Registry id, e.g. T3.1')
    checker.add_argument('--all', dest='check_all', action='store_true', help='Run every registry entry')
    checker.add_argument('--force', action='store_true', help='Run entries that assume decomposability anyway')
    checker.add_argument('--chain-reading', dest='chain_reading', choices=['values', 'ideals'], default='values',
                         help='Which maximal chains the chain-intersection lemma ranges over')

    sweeper = commands.add_parser('sweep', parents=[common], help='Check every distributive lattice up to a size')
    sweeper.add_argument('--max-n', dest='max_n', type=int, required=True, help='Largest lattice size')
    sweeper.add_argument('--theorem', dest='theorem_id', default=None, help='Only this registry entry')
    sweeper.add_argument('--search', dest='implication', default=None, help='Implication id to falsify, e.g. "T3.1:(2)=>(1)"')
    sweeper.add_argument('--chain-reading', dest='chain_reading', choices=['values', 'ideals'], default='values')

    export = commands.add_parser('export-dot', parents=[common], help='Write the Hasse diagram as a DOT digraph')
    export.add_argument('source', help=source_help)
    export.add_argument('-o', '--output', default=None, help='Output file, stdout when omitted')

    commands.add_parser('catalog', parents=[common], help='List the named fixture lattices')
    return parser


def load_source(source, seed=0, max_size=None):
    """Resolves a lattice source: catalog:NAME, random:K, an existing file, or a bare catalog name

    Raises
    ------
    UnknownCatalogNameError
        The source is neither a file nor a catalog name
    """

    if source.startswith('catalog:'):
        return gen.get_catalog_entry(source[len('catalog:'):]).lattice
    if source.startswith('random:'):
        try:
            k = int(source[len('random:'):])
        except ValueError:
            raise errors.LatticeFormatError('random source needs a point count, got {}'.format(source)) from None
        lattice = gen.random_distributive(seed, k)
        if max_size is not None and lattice.size > max_size:
            raise errors.LatticeTooLargeError('{} has {} elements, maximum is {}'.format(lattice.name, lattice.size, max_size))
        return lattice
    if os.path.exists(source):
        return load_lattice(source, max_size=max_size)
    try:
        return gen.get_catalog_entry(source).lattice
    except errors.UnknownCatalogNameError:
        raise errors.UnknownCatalogNameError('{} is neither a file nor a catalog lattice'.format(source)) from None


def _options(config):
    return {'chain_reading': config.chain_reading}


def cmd_validate(config, renderer):
    lattice = load_source(config.source, config.seed, config.max_size)
    renderer.draw_validation(lattice)
    return EXIT_OK


def cmd_spectrum(config, renderer):
    lattice = load_source(config.source, config.seed, config.max_size)
    renderer.draw_spectrum(lattice, spectrum(lattice))
    return EXIT_OK


def cmd_decompose(config, renderer):
    lattice = load_source(config.source, config.seed, config.max_size)
    renderer.draw_decomposition(lattice, decompose_special(lattice, lattice.index(config.element)))
    return EXIT_OK


def cmd_check(config, renderer):
    lattice = load_source(config.source, config.seed, config.max_size)
    if config.check_all == (config.theorem_id is not None):
        raise errors.UnknownTheoremIdError('check needs exactly one of a theorem id or --all')
    if config.check_all:
        verdicts = check_all(lattice, force=config.force, options=_options(config))
    else:
        verdicts = [check(lattice, config.theorem_id, force=config.force, options=_options(config))]
    renderer.draw_verdicts(verdicts)
    return EXIT_FAILURE if any(verdict.holds is False for verdict in verdicts) else EXIT_OK


def cmd_sweep(config, renderer):
    report = sweep(config.max_n, theorem_id=config.theorem_id, implication_id=config.implication,
                   threads=config.threads, options=_options(config))
    renderer.draw_sweep(report)
    return EXIT_FAILURE if report.failures else EXIT_OK


def cmd_export_dot(config, renderer):
    lattice = load_source(config.source, config.seed, config.max_size)
    renderer.draw_dot(lattice, config.output)
    return EXIT_OK


def cmd_catalog(config, renderer):
    renderer.draw_catalog(gen.catalog())
    return EXIT_OK


COMMANDS = {
    'validate':     cmd_validate,
    'spectrum':     cmd_spectrum,
    'decompose':    cmd_decompose,
    'check':        cmd_check,
    'sweep':        cmd_sweep,
    'export-dot':   cmd_export_dot,
    'catalog':      cmd_catalog,
}


def _configure_logging(config):
    logger = _initialize_logger('lattice_spectra')
    handlers = []
    if config.log_file is not None:
        handlers.append(_enable_logging(logger, filename=config.log_file))
    if config.verbose:
        logger.toggle_live_debug(logging.DEBUG)
    return logger, handlers


def _release_logging(logger, handlers, config):
    for handler in handlers:
        logger.removeHandler(handler)
        handler.close()
    if config.verbose and logger.is_live_debugging():
        logger.toggle_live_debug()


def run(config, stream=None, error_stream=None):
    """Runs one parsed invocation and returns its exit code
    """

    renderer = Renderer(json_mode=config.json_mode, quiet=config.quiet, stream=stream)
    try:
        logger, handlers = _configure_logging(config)
    except (PermissionError, OSError) as error:
        renderer.error(error, error_stream)
        return EXIT_INVALID

    try:
        return COMMANDS[config.command](config, renderer)
    except _FAILURE_ERRORS as error:
        renderer.error(error, error_stream)
        return EXIT_FAILURE
    except errors.LatticeSpectraError as error:
        _logger.debug('{} failed: {}'.format(config.command, error))
        renderer.error(error, error_stream)
        return EXIT_INVALID
    except OSError as error:
        renderer.error(error, error_stream)
        return EXIT_INVALID
    finally:
        _release_logging(logger, handlers, config)


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the lattice-spectra command

    Parameters
    ----------
    argv : list of str, optional
        Arguments without the program name, sys.argv[1:] by default

    Returns
    -------
    code : int
        0 success, 1 property failure, 2 invalid input or usage
    """

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return int(exit_request.code or 0)
    config = RunConfig.from_namespace(args)
    if config.max_size is not None and config.max_size < 1:
        parser.print_usage(sys.stderr)
        sys.stderr.write('error: --max-size must be at least 1\n')
        return EXIT_INVALID
    return run(config)


if __name__ == '__main__':
    sys.exit(main())
