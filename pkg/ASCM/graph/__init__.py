from .diagram import (CausalDiagram, UnknownNodeError, EmptyInterventionError, induce_diagram, descendants,
                      non_descendants)
from .admissibility import (ArchSpec, ALL_PIXELS, Verdict, Enumeration, TradeoffCheck, PreconditionError,
                            interpretability_verdict, is_interpretable, t_admissible, max_t_admissible, w_admissible,
                            check_tradeoff, DEFAULT_CAP)
