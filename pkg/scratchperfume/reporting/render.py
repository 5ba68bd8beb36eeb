"""Rendering of project reports as text, JSON or CSV

All renderers return UTF-8 bytes with ``\\n`` line endings; JSON objects have
sorted keys so that identical reports always give identical bytes.
"""
import csv
import io
import json

from ..perfumes import PerfumeKind

FORMATS = ("text", "json", "csv")
CSV_HEADER = ("project_id", "perfume", "target", "block_id", "detail")


def report_to_dict(report):
    """Plain data form of a report, as written by the JSON renderer"""
    metrics = report.metrics
    return {
        "project_id": report.project_id,
        "instances": [
            {
                "perfume": instance.kind.machine_name,
                "target": instance.target_name,
                "block_id": instance.anchor_block_id,
                "detail": instance.detail,
                "feedback": instance.feedback,
            }
            for instance in report.instances
        ],
        "counts": {kind.machine_name: report.counts.get(kind, 0) for kind in PerfumeKind},
        "metrics": {
            "block_count": metrics.block_count,
            "script_count": metrics.script_count,
            "procedure_count": metrics.procedure_count,
            "wmc": metrics.wmc,
            "per_script_cc": [{"block_id": block_id, "cc": cc}
                              for block_id, cc in metrics.per_script_cc],
        },
        "diagnostics": list(report.diagnostics),
    }


def dumps_json(data, json_indent=None):
    """Deterministic JSON encoding: sorted keys, compact unless indented, final newline"""
    if json_indent:
        text = json.dumps(data, sort_keys=True, indent=json_indent, ensure_ascii=False)
    else:
        text = json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return (text + "\n").encode("utf-8")


def write_csv(rows, header):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().encode("utf-8")


def render_text(report):
    lines = [f"Project {report.project_id}: {report.total} code perfume(s) found"]
    for instance in report.instances:
        line = (f"  [{instance.kind.label}] {instance.target_name} "
                f"(block {instance.anchor_block_id}): {instance.feedback}")
        if instance.detail:
            line += f" ({instance.detail})"
        lines.append(line)
    metrics = report.metrics
    lines.append(f"Blocks: {metrics.block_count}, scripts: {metrics.script_count}, "
                 f"custom blocks: {metrics.procedure_count}, WMC: {metrics.wmc}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def render(report, format="text", json_indent=None):
    """Renders a project report

    Parameters
    ----------
    report : ProjectReport
    format : {'text', 'json', 'csv'}, default is 'text'
        * text: one line of feedback per instance, then the metrics
        * json: keys project_id, instances, counts, metrics, diagnostics
        * csv: one row per instance, header ``project_id,perfume,target,block_id,detail``
    json_indent : int, optional
        indent the JSON output, by default it is compact

    Returns
    -------
    bytes
    """
    if format == "text":
        return render_text(report)
    if format == "json":
        return dumps_json(report_to_dict(report), json_indent=json_indent)
    if format == "csv":
        rows = [(report.project_id, instance.kind.machine_name, instance.target_name,
                 instance.anchor_block_id, instance.detail) for instance in report.instances]
        return write_csv(rows, CSV_HEADER)
    raise ValueError(f"Got format={format}, expected one of {FORMATS}.")
