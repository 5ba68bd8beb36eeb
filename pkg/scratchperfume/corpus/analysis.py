"""Batch analysis of a directory of Scratch projects"""
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Mapping, Tuple

from ..errors import PerfumeError
from ..ingest import load_project
from ..perfumes import PerfumeKind
from ..program import build_ast
from ..reporting import build_report, dumps_json, write_csv
from ..utils import resolve_jobs

DEFAULT_EXTENSIONS = (".sb3", ".json")
SUMMARY_HEADER = ("perfume", "total_instances", "projects", "avg_wmc")


@dataclass(frozen=True)
class KindSummary:
    """Totals of one perfume kind over a corpus"""

    total_instances: int = 0
    projects_containing: int = 0
    wmc_sum: int = 0

    @property
    def avg_wmc(self):
        """Mean WMC of the projects containing the kind, None if there are none"""
        if not self.projects_containing:
            return None
        return self.wmc_sum / self.projects_containing

    def __add__(self, other):
        return KindSummary(self.total_instances + other.total_instances,
                           self.projects_containing + other.projects_containing,
                           self.wmc_sum + other.wmc_sum)


@dataclass(frozen=True)
class CorpusSummary:
    """Aggregate of many project reports

    Summaries form a commutative monoid under ``+`` with :meth:`empty`
    as neutral element, so they can be folded in any order.
    """

    kinds: Mapping[PerfumeKind, KindSummary] = field(default_factory=dict)
    total_instances: int = 0
    projects_with_any_perfume: int = 0
    project_count: int = 0
    failed_project_count: int = 0
    wmc_sum_with_any_perfume: int = 0
    failures: Tuple[str, ...] = ()

    @classmethod
    def empty(cls):
        return cls(kinds={kind: KindSummary() for kind in PerfumeKind})

    @classmethod
    def from_report(cls, report):
        wmc = report.metrics.wmc
        kinds = {}
        for kind in PerfumeKind:
            count = report.counts.get(kind, 0)
            kinds[kind] = KindSummary(count, int(count > 0), wmc if count else 0)
        any_perfume = report.total > 0
        return cls(kinds=kinds, total_instances=report.total,
                   projects_with_any_perfume=int(any_perfume), project_count=1,
                   wmc_sum_with_any_perfume=wmc if any_perfume else 0)

    @classmethod
    def from_failure(cls, message):
        return replace(cls.empty(), failed_project_count=1, failures=(message,))

    def __add__(self, other):
        return CorpusSummary(
            kinds={kind: self.kind(kind) + other.kind(kind) for kind in PerfumeKind},
            total_instances=self.total_instances + other.total_instances,
            projects_with_any_perfume=self.projects_with_any_perfume + other.projects_with_any_perfume,
            project_count=self.project_count + other.project_count,
            failed_project_count=self.failed_project_count + other.failed_project_count,
            wmc_sum_with_any_perfume=self.wmc_sum_with_any_perfume + other.wmc_sum_with_any_perfume,
            failures=tuple(sorted(self.failures + other.failures)),
        )

    def kind(self, kind):
        return self.kinds.get(kind, KindSummary())

    @property
    def avg_wmc(self):
        if not self.projects_with_any_perfume:
            return None
        return self.wmc_sum_with_any_perfume / self.projects_with_any_perfume


def summarize(reports, failures=()):
    """Sequential fold of project reports into a :class:`CorpusSummary`"""
    summary = CorpusSummary.empty()
    for report in reports:
        summary = summary + CorpusSummary.from_report(report)
    for message in failures:
        summary = summary + CorpusSummary.from_failure(message)
    return summary


def analyze_project(path, project_id=None, finders=None):
    """Loads, parses and analyses a single project file

    Returns
    -------
    ProjectReport
    """
    raw = load_project(path, project_id=project_id)
    return build_report(raw.project_id, build_ast(raw), finders=finders)


def find_candidates(directory, extensions=DEFAULT_EXTENSIONS, recursive=False):
    """Project files of a directory, as sorted ``(project_id, path)`` pairs

    Raises
    ------
    OSError
        if the directory does not exist or cannot be read
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise NotADirectoryError(f"{directory} is not a readable directory.")
    extensions = {extension.lower() for extension in extensions}
    paths = directory.rglob("*") if recursive else directory.iterdir()
    candidates = []
    for path in paths:
        if path.is_file() and path.suffix.lower() in extensions:
            if recursive:
                project_id = path.relative_to(directory).with_suffix("").as_posix()
            else:
                project_id = path.stem
            candidates.append((project_id, path))
    return sorted(candidates, key=lambda candidate: (candidate[0], candidate[1].as_posix()))


def _analyze_candidate(candidate, finders=None):
    project_id, path = candidate
    try:
        return analyze_project(path, project_id=project_id, finders=finders), None
    except (PerfumeError, OSError, ValueError, RecursionError) as error:
        return None, f"{path.name}: {type(error).__name__}: {error}"


def analyze_corpus(directory, jobs=1, extensions=DEFAULT_EXTENSIONS, recursive=False,
                   finders=None, verbose=False):
    """Analyses every project file of a directory

    Parameters
    ----------
    directory : str or pathlib.Path
    jobs : int, default is 1
        number of worker processes, 0 means one per core
    extensions : tuple of str
        file suffixes of the candidate files
    recursive : bool, default is False
        if True, also look into sub-directories
    finders : list of str, optional
        machine names of the finders to run
    verbose : bool, default is False

    Returns
    -------
    reports : list of ProjectReport
        sorted by project id
    summary : CorpusSummary
        aggregate of exactly the successfully analysed projects; unreadable
        files only count in ``failed_project_count``
    """
    candidates = find_candidates(directory, extensions=extensions, recursive=recursive)
    jobs = min(resolve_jobs(jobs), max(len(candidates), 1))
    if verbose:
        print(f"Analysing {len(candidates)} projects in {directory} with {jobs} worker(s).")
        sys.stdout.flush()

    if jobs == 1:
        outcomes = [_analyze_candidate(candidate, finders) for candidate in candidates]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            outcomes = list(executor.map(_analyze_candidate, candidates,
                                         [finders] * len(candidates), chunksize=8))

    reports = sorted((report for report, _ in outcomes if report is not None),
                     key=lambda report: report.project_id)
    failures = [message for _, message in outcomes if message is not None]
    summary = summarize(reports, failures)
    if verbose:
        print(f"Done: {summary.project_count} analysed, {summary.failed_project_count} failed.")
        sys.stdout.flush()
    return reports, summary


def _avg(value):
    return "" if value is None else f"{value:.2f}"


def summary_to_dict(summary):
    return {
        "perfumes": {
            kind.machine_name: {
                "total_instances": summary.kind(kind).total_instances,
                "projects": summary.kind(kind).projects_containing,
                "avg_wmc": None if summary.kind(kind).avg_wmc is None
                else round(summary.kind(kind).avg_wmc, 2),
            }
            for kind in PerfumeKind
        },
        "total_instances": summary.total_instances,
        "projects_with_any_perfume": summary.projects_with_any_perfume,
        "project_count": summary.project_count,
        "failed_project_count": summary.failed_project_count,
        "avg_wmc": None if summary.avg_wmc is None else round(summary.avg_wmc, 2),
    }


def render_summary(summary, format="csv", json_indent=None):
    """Renders a corpus summary as a table of perfumes

    Parameters
    ----------
    summary : CorpusSummary
    format : {'csv', 'json', 'text'}, default is 'csv'
        csv has the header ``perfume,total_instances,projects,avg_wmc``, one
        row per kind and a final ``TOTAL`` row; averages use two decimals and
        are left empty when no project contains the kind

    Returns
    -------
    bytes
    """
    rows = [(kind.machine_name, summary.kind(kind).total_instances,
             summary.kind(kind).projects_containing, _avg(summary.kind(kind).avg_wmc))
            for kind in PerfumeKind]
    total = ("TOTAL", summary.total_instances, summary.projects_with_any_perfume,
             _avg(summary.avg_wmc))
    if format == "csv":
        return write_csv(rows + [total], SUMMARY_HEADER)
    if format == "json":
        return dumps_json(summary_to_dict(summary), json_indent=json_indent)
    if format == "text":
        labels = {kind.machine_name: kind.label for kind in PerfumeKind}
        width = max(len(label) for label in labels.values())
        lines = [f"{'Perfume':>{width}} {'# Perfumes':>12} {'# Projects':>11} {'AVG WMC':>8}"]
        for name, instances, projects, avg in rows + [total]:
            label = labels.get(name, "Total")
            lines.append(f"{label:>{width}} {instances:>12,} {projects:>11,} {avg:>8}")
        lines.append(f"{summary.project_count} project(s) analysed, "
                     f"{summary.failed_project_count} failed")
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"Got format={format}, expected one of ('text', 'json', 'csv').")
