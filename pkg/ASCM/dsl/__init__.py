from .expr import Expr, Const, BoolConst, Ref, Not, Indicator, BinOp, fold
from .dist import DistSpec, Bernoulli, Categorical, bernoulli, categorical, get_dist
from .source import ExoDecl, VarDecl, MixtureDecl, LabelDecl, ScmBlock, QueryBlock, SourceFile
from .errors import (DslError, DslSyntaxError, UndeclaredIdentifierError, CyclicDefinitionError, ProbabilityError,
                     DuplicateDeclarationError, InvalidDeclarationError)
from .parser import parse, parse_file, validate
from .render import render, render_scm, render_query
