import sys
import warnings
from pathlib import Path

from configmypy import ConfigPipeline, YamlConfig, ArgparseConfig

from scratchperfume import get_finders
from scratchperfume.corpus import (analyze_corpus, correlate, join_results,
                                   render_correlations, render_summary)
from scratchperfume.reporting import render


# Read the configuration
config_name = "default"
pipe = ConfigPipeline(
    [
        YamlConfig(
            "./corpus_config.yaml", config_name="default", config_folder="../config"
        ),
        ArgparseConfig(infer_types=True, config_name=None, config_file=None),
        YamlConfig(config_folder="../config"),
    ]
)
config = pipe.read_conf()
config_name = pipe.steps[-1].config_name

# Print config to screen
if config.verbose:
    pipe.log()
    sys.stdout.flush()

finders = get_finders(config)
reports, summary = analyze_corpus(
    config.corpus.input,
    jobs=config.corpus.jobs,
    extensions=tuple(config.corpus.extensions),
    recursive=config.corpus.recursive,
    finders=finders,
    verbose=config.verbose,
)
for message in summary.failures:
    print(f"Skipped {message}")

output_folder = Path(config.output.folder)
output_folder.mkdir(parents=True, exist_ok=True)
suffix = "txt" if config.output.format == "text" else config.output.format

table = render_summary(summary, format=config.output.format)
output_folder.joinpath(f"perfumes_{config_name}.{suffix}").write_bytes(table)
if config.verbose:
    print(render_summary(summary, format="text").decode("utf-8"))

if config.output.reports:
    reports_folder = output_folder.joinpath("reports")
    for report in reports:
        path = reports_folder.joinpath(f"{report.project_id}.json")
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(render(report, format="json", json_indent=2))

if config.results.path:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        rows = join_results(reports, config.results.path)
    for warning in caught:
        print(warning.message)
    correlations, skipped = correlate(rows, verbose=config.verbose)
    for message in skipped:
        print(f"Correlation skipped, {message}")
    output_folder.joinpath(f"correlations_{config_name}.{suffix}").write_bytes(
        render_correlations(correlations, format=config.output.format)
    )

print(f"Wrote the perfume table of {summary.project_count} projects to {output_folder}.")
