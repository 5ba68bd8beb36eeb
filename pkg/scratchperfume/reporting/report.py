from dataclasses import dataclass, field
from typing import Mapping, Tuple

from ..metrics import ProjectMetrics, project_metrics
from ..perfumes import PerfumeInstance, PerfumeKind, find_all


@dataclass(frozen=True)
class ProjectReport:
    """Analysis result of a single project

    ``counts`` has an entry for every perfume kind, zero included.
    """

    project_id: str
    instances: Tuple[PerfumeInstance, ...] = ()
    counts: Mapping[PerfumeKind, int] = field(default_factory=dict)
    metrics: ProjectMetrics = field(default_factory=ProjectMetrics)
    diagnostics: Tuple[str, ...] = ()

    @property
    def total(self):
        return len(self.instances)

    @property
    def kinds_found(self):
        return [kind for kind in PerfumeKind if self.counts.get(kind, 0)]


def count_instances(instances):
    counts = {kind: 0 for kind in PerfumeKind}
    for instance in instances:
        counts[instance.kind] += 1
    return counts


def build_report(project_id, ast, finders=None):
    """Runs every perfume finder and the metrics over a program

    Parameters
    ----------
    project_id : str
    ast : ProgramAST
    finders : list of str, optional
        machine names of the finders to run, defaults to all of them

    Returns
    -------
    ProjectReport
    """
    instances = tuple(find_all(ast, finders=finders))
    return ProjectReport(project_id=project_id, instances=instances,
                         counts=count_instances(instances), metrics=project_metrics(ast),
                         diagnostics=tuple(ast.diagnostics))
