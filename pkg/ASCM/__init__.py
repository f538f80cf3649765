from . import utils
from . import dsl
from . import model
from . import graph
from . import inference
from . import random_models
from . import corpus
from . import report
from . import suite
from . import cli
from .dsl import parse, parse_file, render
from .model import Scm, JointTable, observational_joint, bayes_classifier
from .graph import CausalDiagram, ArchSpec, ALL_PIXELS, induce_diagram
from .inference import Query, oracle, closed_form, obs_equivalent, divergence_witness, tradeoff_report
