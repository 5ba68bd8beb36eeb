"""Small programs shared by the finder tests"""
from ...datasets import ProjectBuilder, blocks as b
from ...ingest import parse_project
from ...program import build_ast


def compile_project(project, project_id="fixture"):
    return build_ast(parse_project(project.build(), project_id=project_id))


def cat(*scripts):
    """Program with one sprite, ``Cat``, running the ``(hat, body)`` scripts"""
    project = ProjectBuilder()
    sprite = project.sprite("Cat")
    for hat, body in scripts:
        sprite.add_script(hat, body)
    return compile_project(project)


def flag(*body):
    return b.when_flag_clicked(), list(body)


def key(*body):
    return b.when_key_pressed("right arrow"), list(body)


def receive(message, *body):
    return b.when_i_receive(message), list(body)


def loose(*body):
    return None, list(body)
