__version__ = '0.1.0'

from .ingest import load_project, parse_project
from .program import build_ast, iter_statements, iter_expressions
from .perfumes import PerfumeKind, PerfumeInstance, find_all, get_finders, available_finders
from .metrics import project_metrics, cyclomatic
from .reporting import build_report, render
from .corpus import analyze_corpus, pearson, join_results
from . import datasets
from .utils import get_config
