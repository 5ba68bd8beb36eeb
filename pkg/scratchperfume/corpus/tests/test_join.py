import csv
import io
import json

import pytest

from ...datasets import ProjectBuilder, blocks as b, load_example_project
from ...errors import FormatError, JoinWarning
from ...ingest import parse_project
from ...program import build_ast
from ...reporting import build_report
from ..join import CORRELATED_PAIRS, correlate, join_results, read_results, render_correlations


def _report(project_id, example="mouse_down_loop"):
    return build_report(project_id, build_ast(load_example_project(example)))


def _scripts(count):
    """A project whose perfume count grows with ``count``"""
    project = ProjectBuilder()
    cat = project.sprite("Cat")
    for _ in range(count):
        cat.add_script(b.when_flag_clicked(), [b.forever([b.if_(b.mouse_down(), [b.say()])])])
    return project


def test_read_results(tmp_path):
    path = tmp_path.joinpath("results.csv")
    path.write_text("project_id,passed_tests\na,3\nb, 4.5\n\nc,0\n", encoding="utf-8")
    assert read_results(path) == {"a": 3.0, "b": 4.5, "c": 0.0}


@pytest.mark.parametrize('content', [
    "",
    "id,score\na,3\n",
    "project_id,passed_tests\na,three\n",
    "project_id,passed_tests\na\n",
])
def test_read_results_errors(tmp_path, content):
    path = tmp_path.joinpath("results.csv")
    path.write_text(content, encoding="utf-8")
    with pytest.raises(FormatError):
        read_results(path)


@pytest.mark.parametrize('value', ["nan", "inf", "-inf", "NaN"])
def test_read_results_rejects_non_finite(tmp_path, value):
    path = tmp_path.joinpath("results.csv")
    path.write_text(f"project_id,passed_tests\na,3\nb,{value}\n", encoding="utf-8")
    with pytest.raises(FormatError, match="finite"):
        read_results(path)


def test_join(tmp_path):
    reports = [_report("a"), _report("b", "broadcast_sent"), _report("c", "mouse_down_once")]
    path = tmp_path.joinpath("results.csv")
    path.write_text("project_id,passed_tests\na,5\nb,2\nc,1\nd,7\n", encoding="utf-8")

    with pytest.warns(JoinWarning) as record:
        rows = join_results(reports, path)
    assert len(record) == 1
    assert "d" in str(record[0].message)

    assert [row.project_id for row in rows] == ["a", "b", "c"]
    assert [row.passed_tests for row in rows] == [5.0, 2.0, 1.0]
    assert rows[0].perfume_count == 2
    assert rows[0].block_count == 5
    assert rows[0].perfumes_per_block == pytest.approx(0.4)
    for row in rows:
        assert row.perfumes_per_block == pytest.approx(row.perfume_count / row.block_count)


def test_join_skips_unmatched_and_empty_projects():
    empty = build_report("empty", build_ast(parse_project(ProjectBuilder().build())))
    with pytest.warns(JoinWarning) as record:
        rows = join_results([_report("a"), _report("x"), empty], {"a": 1, "empty": 2})
    assert [row.project_id for row in rows] == ["a"]
    messages = sorted(str(warning.message) for warning in record)
    assert len(messages) == 2
    assert any("no blocks" in message for message in messages)
    assert any("x" in message and "no passed_tests" in message for message in messages)


def test_correlate():
    reports = [build_report(f"p{count}", build_ast(parse_project(_scripts(count).build())))
               for count in range(1, 13)]
    results = {f"p{count}": count + (count % 3) / 2 for count in range(1, 13)}
    rows = join_results(reports, results)
    assert len(rows) == 12

    correlations, skipped = correlate(rows)
    assert skipped == []
    assert [(c.x_name, c.y_name) for c in correlations] == list(CORRELATED_PAIRS)
    by_pair = {c.pair: c for c in correlations}
    assert by_pair["perfume_count~passed_tests"].r > 0.9
    assert by_pair["perfume_count~passed_tests"].p < 0.001
    assert all(c.n == 12 for c in correlations)


def test_correlate_skips_undefined_pairs(capsys):
    rows = join_results([_report("a"), _report("b")], {"a": 1, "b": 2})
    correlations, skipped = correlate(rows, verbose=True)
    assert correlations == []
    assert len(skipped) == len(CORRELATED_PAIRS)
    assert capsys.readouterr().out == ""


def test_render_correlations():
    rows = join_results([build_report(f"p{count}", build_ast(parse_project(_scripts(count).build())))
                         for count in range(1, 6)],
                        {f"p{count}": float(count) for count in range(1, 6)})
    correlations, _ = correlate(rows)

    table = list(csv.reader(io.StringIO(render_correlations(correlations).decode("utf-8"))))
    assert table[0] == ["x", "y", "n", "r", "p"]
    assert len(table) == 1 + len(correlations)
    assert table[1][:3] == ["perfume_count", "passed_tests", "5"]

    data = json.loads(render_correlations(correlations, format="json"))
    assert data[0]["r"] == pytest.approx(correlations[0].r)

    text = render_correlations(correlations, format="text").decode("utf-8")
    assert text.startswith("Pearson correlations\n")

    with pytest.raises(ValueError):
        render_correlations(correlations, format="xml")
