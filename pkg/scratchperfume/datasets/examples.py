from pathlib import Path

from ..ingest import load_project

DATA_FOLDER = Path(__file__).resolve().parent.joinpath("data")


def available_examples():
    """List the example projects shipped with the package"""
    return sorted(path.stem for path in DATA_FOLDER.glob("*.json"))


def example_project_path(name):
    """Path of a bundled example project

    Parameters
    ----------
    name : str
        one of :func:`available_examples`
    """
    path = DATA_FOLDER.joinpath(f"{name}.json")
    if not path.is_file():
        raise ValueError(f"Got example={name}, expected one of {available_examples()}.")
    return path


def load_example_project(name):
    """Loads a small example project shipped with the package

    * mouse_down_loop: keeps checking whether the mouse is down, inside a forever loop
    * mouse_down_once: the same check without the loop, so it only runs once
    * broadcast_sent: a message is broadcast and received by another sprite
    * broadcast_never_sent: the message is received but never broadcast

    Returns
    -------
    RawProject
    """
    return load_project(example_project_path(name), project_id=name)
