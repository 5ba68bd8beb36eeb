from .examples import available_examples, example_project_path, load_example_project
from .builder import ProjectBuilder, TargetBuilder, save_project
from . import blocks
