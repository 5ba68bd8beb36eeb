"""Command line interface

    scratch-perfume lint <file> [--format F] [--output P]
    scratch-perfume corpus <dir> [--format F] [--output P] [--results R] [--jobs N]

Exit codes: 0 on success, 1 on input errors, 2 on usage errors.
"""
import argparse
import sys
import warnings
from pathlib import Path

from .corpus import (analyze_corpus, analyze_project, correlate, join_results,
                     render_correlations, render_summary, summary_to_dict)
from .corpus.join import correlations_to_list
from .errors import PerfumeError
from .perfumes import get_finders
from .reporting import FORMATS, dumps_json, render
from .utils import get_config

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_USAGE_ERROR = 2


def build_parser(config):
    parser = argparse.ArgumentParser(
        prog="scratch-perfume",
        description="Find code perfumes, the good practices, in Scratch 3 projects.",
    )
    commands = parser.add_subparsers(dest="command", metavar="{lint,corpus}")
    commands.required = True

    lint = commands.add_parser("lint", help="analyse a single project")
    lint.add_argument("input", help=".sb3 archive or project.json file")
    lint.add_argument("--format", choices=FORMATS, default=config.lint.format)
    lint.add_argument("--output", default=None, help="output file, standard output by default")

    corpus = commands.add_parser("corpus", help="analyse a directory of projects")
    corpus.add_argument("input", help="directory holding .sb3 or .json projects")
    corpus.add_argument("--format", choices=FORMATS, default=config.corpus.format)
    corpus.add_argument("--output", default=None, help="output file, standard output by default")
    corpus.add_argument("--results", default=None,
                        help="CSV file with the columns project_id,passed_tests")
    corpus.add_argument("--jobs", type=int, default=config.corpus.jobs,
                        help="number of worker processes, all cores by default")
    return parser


def _error(message):
    print(f"scratch-perfume: error: {message}", file=sys.stderr)
    sys.stderr.flush()


def _diagnostics(messages):
    for message in messages:
        print(f"scratch-perfume: {message}", file=sys.stderr)
    sys.stderr.flush()


def _write(data, output):
    """Writes a payload, returns the exit code"""
    if output is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return EXIT_OK
    try:
        Path(output).write_bytes(data)
    except OSError as error:
        _error(f"cannot write {output}: {error}")
        return EXIT_INPUT_ERROR
    return EXIT_OK


def _lint(args, config, finders):
    try:
        report = analyze_project(args.input, finders=finders)
    except (OSError, PerfumeError) as error:
        _error(str(error))
        return EXIT_INPUT_ERROR
    _diagnostics(report.diagnostics)
    return _write(render(report, format=args.format, json_indent=config.report.json_indent),
                  args.output)


def _corpus(args, config, finders):
    try:
        reports, summary = analyze_corpus(
            args.input, jobs=args.jobs, extensions=tuple(config.corpus.extensions),
            recursive=config.corpus.recursive, finders=finders, verbose=config.verbose,
        )
    except OSError as error:
        _error(str(error))
        return EXIT_INPUT_ERROR
    _diagnostics(f"skipped {message}" for message in summary.failures)

    correlations = None
    if args.results is not None:
        try:
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always")
                rows = join_results(reports, args.results)
        except (OSError, PerfumeError) as error:
            _error(str(error))
            return EXIT_INPUT_ERROR
        _diagnostics(str(warning.message) for warning in caught)
        correlations, skipped = correlate(rows, verbose=config.verbose)
        _diagnostics(f"correlation skipped, {message}" for message in skipped)

    indent = config.report.json_indent
    if args.format == "json":
        data = summary_to_dict(summary)
        if correlations is not None:
            data = {"summary": data, "correlations": correlations_to_list(correlations)}
        output = dumps_json(data, json_indent=indent)
    else:
        output = render_summary(summary, format=args.format)
        if correlations is not None:
            output += b"\n" + render_correlations(correlations, format=args.format)
    return _write(output, args.output)


def run(argv=None, config=None):
    """Runs the command line interface

    Parameters
    ----------
    argv : list of str, optional
        arguments without the program name, defaults to ``sys.argv[1:]``
    config : Bunch, optional
        defaults to the ``default`` section of the packaged configuration

    Returns
    -------
    int
        exit code
    """
    if config is None:
        config = get_config()
    parser = build_parser(config)
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return EXIT_OK if stop.code in (0, None) else EXIT_USAGE_ERROR
    if getattr(args, "jobs", 0) < 0:
        parser.print_usage(sys.stderr)
        _error(f"--jobs must be a positive integer (or 0 for all cores), got {args.jobs}.")
        return EXIT_USAGE_ERROR

    try:
        finders = get_finders(config)
    except ValueError as error:
        _error(str(error))
        return EXIT_USAGE_ERROR

    if args.command == "lint":
        return _lint(args, config, finders)
    return _corpus(args, config, finders)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
