"""Partially ordered outcomes, risk classification and ordinal games."""

from ._core import (
    CycleError,
    DecisionModel,
    Game,
    GameError,
    Model,
    OrderError,
    ParseError,
    Poset,
    ProbabilityError,
    QuotientCycleError,
    StructuralError,
    dominance_lift,
    parse_model,
    run,
)

__all__ = [
    "CycleError",
    "DecisionModel",
    "Game",
    "GameError",
    "Model",
    "OrderError",
    "ParseError",
    "Poset",
    "ProbabilityError",
    "QuotientCycleError",
    "StructuralError",
    "dominance_lift",
    "parse_model",
    "run",
]

__version__ = "0.1.0"
