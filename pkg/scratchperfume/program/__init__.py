from .builder import build_ast, is_hat_opcode
from .nodes import (BOOLEAN, STRING_NUMBER, EventHandler, HatKind, Parameter,
                    ProcedureDef, ProgramAST, Script, TargetAST)
from .traversal import (ExpressionVisit, StatementVisit, iter_expressions,
                        iter_roots, iter_statements)
