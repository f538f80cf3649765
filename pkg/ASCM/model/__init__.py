from .scm import (Scm, Submodel, ClassifierSpec, UnknownVariableError, InterventionError, load_scms,
                  enumerate_u, evaluate, intervene)
from .joint import JointTable, observational_joint
from .bayes import BayesTable, bayes_classifier, bayes_accuracy
