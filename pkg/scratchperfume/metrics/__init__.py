from .complexity import ProjectMetrics, block_count, cyclomatic, project_metrics
