from .query import Query, CtfResult, ZeroEvidenceError, PositivityError, SignatureError, load_queries
from .oracle import oracle, factual
from .closed_form import closed_form
from .equivalence import obs_equivalent, observable_joint, divergence_witness, signature
from .tradeoff import TradeoffReport, TradeoffRow, tradeoff_report
