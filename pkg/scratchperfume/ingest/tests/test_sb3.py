import json
import zipfile

import pytest

from ...datasets import ProjectBuilder, blocks as b, example_project_path
from ...errors import FormatError, SchemaError
from ..sb3 import load_project, parse_project
from ..slots import BlockRef, Literal


def _stage_only():
    return ProjectBuilder().build()


def test_load_empty_archive(tmp_path):
    path = ProjectBuilder().save(tmp_path / "empty.sb3")
    assert zipfile.is_zipfile(path)
    project = load_project(path)
    assert project.project_id == "empty"
    assert len(project.targets) == 1
    assert project.stage.is_stage
    assert project.stage.blocks == {}


def test_load_bare_json(tmp_path):
    project = ProjectBuilder()
    cat = project.sprite("Cat")
    cat.add_script(b.when_flag_clicked(), [b.move(10), b.turn_right(15)])
    path = project.save(tmp_path / "project.json")

    raw = load_project(path, project_id="walk")
    assert raw.project_id == "walk"
    assert [target.name for target in raw.targets] == ["Stage", "Cat"]
    # hat + 2 statements
    assert len(raw.targets[1].blocks) == 3


def test_block_records_are_conserved():
    path = example_project_path("mouse_down_loop")
    document = json.loads(path.read_text(encoding="utf-8"))
    raw = load_project(path)
    for source, target in zip(document["targets"], raw.targets):
        assert len(target.blocks) == len(source["blocks"])


def test_load_is_deterministic():
    path = example_project_path("broadcast_sent")
    assert load_project(path) == load_project(path)


def test_decoded_block_fields():
    raw = load_project(example_project_path("mouse_down_loop"))
    blocks = raw.targets[1].blocks
    assert blocks["flag"].is_top_level and blocks["flag"].parent is None
    assert blocks["flag"].next == "loop"
    assert blocks["check"].inputs["CONDITION"] == BlockRef("mouse")
    assert blocks["talk"].inputs["MESSAGE"] == Literal("string", "Hello!")


@pytest.mark.parametrize('content', [b"[]", b"not json at all", b"42"])
def test_not_a_project(tmp_path, content):
    path = tmp_path / "broken.json"
    path.write_bytes(content)
    with pytest.raises(FormatError):
        load_project(path)


def test_archive_without_project_json(tmp_path):
    path = tmp_path / "assets.sb3"
    with zipfile.ZipFile(path, "w") as f:
        f.writestr("costume.svg", "<svg/>")
    with pytest.raises(FormatError, match="project.json"):
        load_project(path)


def test_missing_targets():
    with pytest.raises(FormatError, match="targets"):
        parse_project({"meta": {}})


def test_scratch2_is_rejected():
    with pytest.raises(FormatError, match="Scratch 2"):
        parse_project({"objName": "Stage", "children": []})


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_project(tmp_path / "missing.sb3")


def test_block_without_opcode():
    document = _stage_only()
    document["targets"][0]["blocks"]["x"] = {"next": None, "parent": None, "inputs": {},
                                             "fields": {}, "topLevel": True}
    with pytest.raises(SchemaError, match="opcode"):
        parse_project(document)


@pytest.mark.parametrize('key, value', [
    ("inputs", [1, 2]),
    ("fields", ["VALUE"]),
    ("mutation", "jump %s"),
    ("next", ["b002"]),
    ("parent", 7),
])
def test_malformed_block_records(key, value):
    document = _stage_only()
    record = {"opcode": "looks_show", "next": None, "parent": None, "inputs": {},
              "fields": {}, "shadow": False, "topLevel": True}
    record[key] = value
    document["targets"][0]["blocks"]["x"] = record
    with pytest.raises(SchemaError, match=key):
        parse_project(document)


def test_malformed_broadcasts():
    document = _stage_only()
    document["targets"][0]["broadcasts"] = ["go"]
    with pytest.raises(SchemaError, match="broadcasts"):
        parse_project(document)


def test_stage_and_names_are_checked():
    document = _stage_only()
    document["targets"].append(dict(document["targets"][0]))
    with pytest.raises(SchemaError, match="stage"):
        parse_project(document)

    document = ProjectBuilder().build()
    sprite = dict(document["targets"][0], isStage=False)
    document["targets"].extend([sprite, dict(sprite)])
    with pytest.raises(SchemaError, match="unique"):
        parse_project(document)


def test_unknown_opcodes_are_kept():
    project = ProjectBuilder()
    cat = project.sprite("Cat")
    cat.add_script(b.when_flag_clicked(), [b.Block("pen_clear"), b.Block("music_playDrumForBeats")])
    raw = parse_project(project.build())
    opcodes = sorted(block.opcode for block in raw.targets[1].blocks.values())
    assert "pen_clear" in opcodes and "music_playDrumForBeats" in opcodes


def test_dangling_references_are_dropped():
    document = _stage_only()
    document["targets"][0]["blocks"]["a"] = {
        "opcode": "looks_show", "next": "gone", "parent": None, "inputs": {}, "fields": {},
        "shadow": False, "topLevel": True,
    }
    raw = parse_project(document)
    assert raw.stage.blocks["a"].next is None
    assert any("dangling" in message for message in raw.diagnostics)


def test_top_level_primitives():
    document = _stage_only()
    document["targets"][0]["variables"] = {"vid": ["score", 0]}
    document["targets"][0]["blocks"]["loose"] = [12, "score", "vid", 100, 200]
    raw = parse_project(document)
    block = raw.stage.blocks["loose"]
    assert block.opcode == "data_variable"
    assert block.fields["VARIABLE"] == ("score", "vid")
    assert block.is_top_level

    document["targets"][0]["blocks"]["bad"] = [99, "x"]
    with pytest.raises(SchemaError):
        parse_project(document)


def test_unknown_input_type_is_diagnosed():
    document = _stage_only()
    document["targets"][0]["blocks"]["a"] = {
        "opcode": "looks_say", "next": None, "parent": None, "inputs": {"MESSAGE": [1, [77, "?"]]},
        "fields": {}, "shadow": False, "topLevel": True,
    }
    raw = parse_project(document)
    assert raw.stage.blocks["a"].inputs["MESSAGE"] == Literal("unknown", "?")
    assert any("unknown primitive type" in message for message in raw.diagnostics)
