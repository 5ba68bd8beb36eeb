"""Joining analysis results with external correctness data"""
import csv
import math
import warnings
from dataclasses import dataclass
from pathlib import Path

from ..errors import DegenerateInputError, FormatError, JoinWarning
from ..reporting import dumps_json, write_csv
from .statistics import pearson

RESULTS_HEADER = ("project_id", "passed_tests")
CORRELATION_HEADER = ("x", "y", "n", "r", "p")

# (x, y) pairs written by the corpus command
CORRELATED_PAIRS = (
    ("perfume_count", "passed_tests"),
    ("perfumes_per_block", "passed_tests"),
    ("perfume_count", "block_count"),
)


@dataclass(frozen=True)
class JoinedRow:
    project_id: str
    passed_tests: float
    perfume_count: int
    block_count: int
    perfumes_per_block: float


def read_results(path):
    """Reads a ``project_id,passed_tests`` CSV file into a dict

    Raises
    ------
    FormatError
        if the header is missing or a passed test count is not a finite number
    """
    with Path(path).open("r", encoding="utf-8-sig", newline="") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header is None or tuple(cell.strip() for cell in header[:2]) != RESULTS_HEADER:
            raise FormatError(f"{path}: expected the header {','.join(RESULTS_HEADER)}, got {header}.")
        results = {}
        for line, row in enumerate(reader, start=2):
            if not row or not any(cell.strip() for cell in row):
                continue
            try:
                value = float(row[1])
            except (IndexError, ValueError):
                raise FormatError(f"{path}:{line}: invalid passed_tests value in {row}.") from None
            if not math.isfinite(value):
                raise FormatError(f"{path}:{line}: passed_tests must be a finite number, got {row[1]!r}.")
            results[row[0].strip()] = value
    return results


def join_results(reports, results):
    """Inner join of project reports with passed test counts

    Unmatched ids on either side and projects without blocks are reported
    as :class:`~scratchperfume.errors.JoinWarning` and left out.

    Parameters
    ----------
    reports : list of ProjectReport
    results : str, pathlib.Path or dict
        path of the results CSV, or an already read ``{project_id: passed_tests}``

    Returns
    -------
    list of JoinedRow
        in report order
    """
    if not isinstance(results, dict):
        results = read_results(results)

    rows = []
    seen = set()
    for report in reports:
        seen.add(report.project_id)
        if report.project_id not in results:
            warnings.warn(f"Project {report.project_id} has no passed_tests entry, skipped.",
                          JoinWarning)
            continue
        block_count = report.metrics.block_count
        if block_count == 0:
            warnings.warn(f"Project {report.project_id} has no blocks, skipped.", JoinWarning)
            continue
        rows.append(JoinedRow(project_id=report.project_id,
                              passed_tests=results[report.project_id],
                              perfume_count=report.total, block_count=block_count,
                              perfumes_per_block=report.total / block_count))

    for project_id in results:
        if project_id not in seen:
            warnings.warn(f"passed_tests entry {project_id} matches no analysed project.",
                          JoinWarning)
    return rows


def correlate(rows, pairs=CORRELATED_PAIRS, verbose=False):
    """Pearson correlations between columns of the joined table

    Pairs for which the correlation is undefined are skipped.

    Returns
    -------
    results : list of CorrelationResult
    skipped : list of str
        one message per skipped pair
    """
    results, skipped = [], []
    for x_name, y_name in pairs:
        x = [getattr(row, x_name) for row in rows]
        y = [getattr(row, y_name) for row in rows]
        try:
            results.append(pearson(x, y, x_name=x_name, y_name=y_name))
        except DegenerateInputError as error:
            skipped.append(f"{x_name}~{y_name}: {error}")
            continue
        if verbose:
            print(f"r({x_name}, {y_name}) = {results[-1].r:.3f}, p = {results[-1].p:.3g}")
    return results, skipped


def correlations_to_list(results):
    return [{"x": c.x_name, "y": c.y_name, "n": c.n, "r": c.r, "p": c.p} for c in results]


def render_correlations(results, format="csv", json_indent=None):
    """Renders correlation results

    csv and text share the ``x,y,n,r,p`` layout with r and p at fixed precision.
    """
    if format == "json":
        return dumps_json(correlations_to_list(results), json_indent=json_indent)
    rows = [(c.x_name, c.y_name, c.n, f"{c.r:.6f}", f"{c.p:.6g}") for c in results]
    if format == "csv":
        return write_csv(rows, CORRELATION_HEADER)
    if format == "text":
        lines = ["Pearson correlations"]
        lines.extend(f"  {x} ~ {y}: n={n}, r={r}, p={p}" for x, y, n, r, p in rows)
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"Got format={format}, expected one of ('text', 'json', 'csv').")
