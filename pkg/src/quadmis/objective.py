"""Penalized quadratic objective driving the independent-set search.

For x in [0,1]^n the objective is

    f(x) = -sum(x) + (gamma/2) x^T A x - (1/2) x^T A' x

where A is the adjacency matrix of the input graph and A' that of its
complement. The complement term is always expanded through

    x^T A' x = (sum x)^2 - x.x - x^T A x

so evaluation and gradients cost one sparse matvec plus vector reductions
and no complement structure ever exists. The expansion is the contract,
not an optimization; a materialized-complement reference lives only in
the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import Graph


class DimensionError(ValueError):
    """Assignment length does not match the graph's node count."""


class InvalidGamma(ValueError):
    """Edges-penalty value outside its admissible range."""


@dataclass(frozen=True)
class ObjectiveParams:
    """Edges penalty plus the complement-term toggle.

    gamma must exceed 1 while the complement term is enabled (otherwise
    the quadratic reward for non-adjacent pairs can outweigh the edge
    penalty) and must be positive always.
    """

    gamma: float
    complement_term_enabled: bool = True

    def __post_init__(self) -> None:
        if not self.gamma > 0.0:
            raise InvalidGamma("gamma must be positive")
        if self.complement_term_enabled and not self.gamma > 1.0:
            raise InvalidGamma("gamma must exceed 1 when the complement term is enabled")


def _as_assignment(g: Graph, x) -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64)
    if arr.shape != (g.n,):
        raise DimensionError(f"expected length-{g.n} vector, got shape {arr.shape}")
    return arr


def evaluate(g: Graph, p: ObjectiveParams, x) -> float:
    """Objective value at x; one adjacency matvec."""
    x = _as_assignment(g, x)
    ax = g.adjacency_csr().dot(x)
    quad = float(x @ ax)
    s = float(x.sum())
    value = -s + 0.5 * p.gamma * quad
    if p.complement_term_enabled:
        comp_quad = s * s - float(x @ x) - quad
        value -= 0.5 * comp_quad
    return value


def gradient(g: Graph, p: ObjectiveParams, x) -> np.ndarray:
    """Gradient at x.

    With the complement term: -1 + (gamma + 1) A x - (sum(x) - x).
    Without it: -1 + gamma A x.
    """
    x = _as_assignment(g, x)
    ax = g.adjacency_csr().dot(x)
    if p.complement_term_enabled:
        return (p.gamma + 1.0) * ax - x.sum() + x - 1.0
    return p.gamma * ax - 1.0


def gradient_columns(g: Graph, p: ObjectiveParams, X: np.ndarray) -> np.ndarray:
    """Gradient of every column of an (n, k) matrix at once.

    Column j of the result depends only on column j of X; the batched form
    exists so the solver can amortize the sparse matvec.
    """
    if X.ndim != 2 or X.shape[0] != g.n:
        raise DimensionError(f"expected (n, k) matrix with n={g.n}, got {X.shape}")
    AX = g.adjacency_csr().dot(X)
    if p.complement_term_enabled:
        return (p.gamma + 1.0) * AX - X.sum(axis=0) + X - 1.0
    return p.gamma * AX - 1.0


def gamma_floor_wei(g: Graph) -> int:
    """Ceiling of the degree-sum lower bound on the maximum IS size, plus one.

    The bound sum_v 1/(1 + d(v)) is accumulated exactly in rationals so the
    ceiling never suffers a float tie.
    """
    total = sum(Fraction(1, 1 + int(d)) for d in g.degrees)
    return math.ceil(total) + 1


def gamma_select(g: Graph, mode, complement_term_enabled: bool = True) -> ObjectiveParams:
    """Resolve an edges-penalty choice against a graph.

    mode is "wei-floor", "strict-n", or a fixed number greater than 1.
    "strict-n" guarantees that every binary vector passing the fast check
    is a maximal independent set; "wei-floor" is the cheaper floor that
    only guarantees maximum sets are fixed points.
    """
    if mode == "wei-floor":
        value = float(gamma_floor_wei(g))
    elif mode == "strict-n":
        value = float(g.n)
    elif isinstance(mode, (int, float)) and not isinstance(mode, bool):
        if not mode > 1:
            raise InvalidGamma("fixed gamma must exceed 1")
        value = float(mode)
    else:
        raise InvalidGamma(f"unknown gamma mode: {mode!r}")
    return ObjectiveParams(gamma=value, complement_term_enabled=complement_term_enabled)
