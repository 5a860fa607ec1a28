"""Maximality certificates for thresholded iterates.

Two independent routes:

* fast_mis_check reduces a projected-gradient fixed-point test at a binary
  point to sign conditions on the gradient, one sparse matvec total.
* direct_mis_check walks every node's neighborhood, the plain reference.

They agree on every binary vector whenever gamma >= n; the solver uses the
fast route and the test suite pins the agreement.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph, NodeSet
from .objective import DimensionError, ObjectiveParams, gradient, gradient_columns


class ContractViolation(ValueError):
    """Input that was promised binary is not."""


def threshold(x) -> np.ndarray:
    """Strict-positive indicator of x, as a float64 0/1 vector.

    No epsilon: any positive value counts, exactly zero does not. Dust
    near zero therefore inflates the candidate set, and the checks below
    reject such sets rather than silently rounding them away.
    """
    return (np.asarray(x, dtype=np.float64) > 0.0).astype(np.float64)


def _require_binary(z: np.ndarray) -> None:
    if not ((z == 0.0) | (z == 1.0)).all():
        raise ContractViolation("vector must be exactly binary")


def fast_mis_check(g: Graph, p: ObjectiveParams, z) -> bool:
    """True iff z is a fixed point of a projected gradient step.

    At a binary z the projection equality collapses to sign conditions:
    the gradient must be >= 0 wherever z_v = 0 and <= 0 wherever z_v = 1.
    With gamma >= n this certifies exactly the maximal independent sets;
    below that regime the test is still well defined but may accept
    vectors that a maximality scan rejects.
    """
    z = np.asarray(z, dtype=np.float64)
    _require_binary(z)
    grad = gradient(g, p, z)
    ones = z == 1.0
    bad = np.where(ones, grad > 0.0, grad < 0.0)
    return not bool(bad.any())


def fast_mis_check_batch(g: Graph, p: ObjectiveParams, Z: np.ndarray) -> np.ndarray:
    """Column-wise fast check of an (n, k) binary matrix; no validation.

    Hot path for the solver, which thresholds immediately before calling.
    """
    grad = gradient_columns(g, p, Z)
    bad = np.where(Z == 1.0, grad > 0.0, grad < 0.0)
    return ~bad.any(axis=0)


def direct_mis_check(g: Graph, z) -> bool:
    """Reference check that iterates over all the nodes.

    A member node must have no member neighbors; a non-member node must
    have at least one, otherwise it could be added.
    """
    z = np.asarray(z, dtype=np.float64)
    if z.shape != (g.n,):
        raise DimensionError(f"expected length-{g.n} vector, got shape {z.shape}")
    _require_binary(z)
    in_set = z > 0.5
    for v in range(g.n):
        nbrs = g.neighbors(v)
        hit = bool(in_set[nbrs].any()) if nbrs.size else False
        if in_set[v]:
            if hit:
                return False
        elif not hit:
            return False
    return True


def support(z) -> NodeSet:
    """Node set selected by a binary vector."""
    return NodeSet(tuple(int(v) for v in np.flatnonzero(np.asarray(z) > 0.5)))
