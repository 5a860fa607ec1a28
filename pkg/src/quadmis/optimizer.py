"""Batched projected Adam over the box [0,1]^n with per-run early stop.

Scheduling never touches numerics: work is issued in fixed 32-column
blocks whose shapes depend only on the batch size, so every float
reduction sees identical operands no matter how many workers run or in
what order blocks finish. solve() is therefore bitwise reproducible
across worker counts, which the test suite pins.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .checker import fast_mis_check, fast_mis_check_batch, threshold
from .graph import Graph, NodeSet
from .initialization import InitSpec, initial_mean, sample_block
from .objective import DimensionError, ObjectiveParams, evaluate, gradient, gradient_columns

BETA1 = 0.9
BETA2 = 0.999
EPS = 1e-8

# Fixed work-block width. A function of nothing: chunk c of a batch always
# covers the same column range, so reduction shapes are scheduling-invariant.
CHUNK = 32


class NumericalError(RuntimeError):
    """A gradient went non-finite; the affected run is abandoned."""


@dataclass
class AdamState:
    m1: np.ndarray
    m2: np.ndarray
    step: int = 0

    @classmethod
    def fresh(cls, n: int) -> "AdamState":
        return cls(np.zeros(n), np.zeros(n), 0)


@dataclass
class RunOutcome:
    found: NodeSet | None
    iterations_used: int
    trace: list[tuple[int, float]]


@dataclass(frozen=True)
class SolverConfig:
    """Everything one solve depends on, minus the graph and worker count.

    gamma is a resolved value here; use gamma_select or the preset helpers
    to derive it from a graph first.
    """

    gamma: float
    alpha: float = 0.5
    iterations: int = 350
    batch_size: int = 64
    batch_count: int = 1
    init_scheme: str = "random"
    eta: float = 2.25
    seed: int = 0
    time_limit: float | None = None
    complement_term_enabled: bool = True
    mean: np.ndarray | None = None
    include_mean_as_first: bool = True

    def __post_init__(self) -> None:
        if self.alpha <= 0.0:
            raise ValueError("alpha must be positive")
        if self.iterations < 1 or self.batch_size < 1 or self.batch_count < 1:
            raise ValueError("iterations, batch_size and batch_count must be >= 1")
        if self.time_limit is not None and self.time_limit <= 0.0:
            raise ValueError("time_limit must be positive when set")
        self.params()
        self.init_spec()

    def params(self) -> ObjectiveParams:
        return ObjectiveParams(self.gamma, self.complement_term_enabled)

    def init_spec(self) -> InitSpec:
        return InitSpec(
            scheme=self.init_scheme,
            eta=self.eta,
            seed=self.seed,
            count=self.batch_size * self.batch_count,
            mean=self.mean if self.init_scheme == "external-mean" else None,
            include_mean_as_first=self.include_mean_as_first,
        )


@dataclass
class SolveReport:
    best: NodeSet | None
    best_size: int
    mis_found_count: int
    runs_completed: int
    numerical_failures: int
    wall_time_ms: float
    trace: list[tuple[float, int]] = field(default_factory=list)
    config: SolverConfig | None = None
    n: int = 0
    m: int = 0
    source: str = ""


def adam_step(g: Graph, p: ObjectiveParams, x, st: AdamState, alpha: float) -> np.ndarray:
    """One bias-corrected Adam update followed by a box projection.

    st is advanced in place. Raises NumericalError if the gradient is not
    finite (cannot happen while x stays inside the box, but the guard is
    part of the contract).
    """
    if alpha <= 0.0:
        raise ValueError("alpha must be positive")
    grad = gradient(g, p, x)
    if not np.isfinite(grad).all():
        raise NumericalError("non-finite gradient")
    st.step += 1
    t = st.step
    st.m1 = BETA1 * st.m1 + (1.0 - BETA1) * grad
    st.m2 = BETA2 * st.m2 + (1.0 - BETA2) * grad * grad
    mhat = st.m1 / (1.0 - BETA1**t)
    vhat = st.m2 / (1.0 - BETA2**t)
    return np.clip(x - alpha * mhat / (np.sqrt(vhat) + EPS), 0.0, 1.0)


def run_single(g: Graph, p: ObjectiveParams, x0, iterations: int, alpha: float) -> RunOutcome:
    """Evolve one assignment for up to `iterations` steps.

    After every step the strict-positive support is checked; the run stops
    at the first maximal independent set. The trace records (iteration,
    objective value) after each step taken.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    x = np.array(x0, dtype=np.float64)
    if x.shape != (g.n,):
        raise DimensionError(f"expected length-{g.n} start point, got {x.shape}")
    st = AdamState.fresh(g.n)
    trace: list[tuple[int, float]] = []
    for t in range(1, iterations + 1):
        x = adam_step(g, p, x, st, alpha)
        trace.append((t, evaluate(g, p, x)))
        z = threshold(x)
        if fast_mis_check(g, p, z):
            members = tuple(int(v) for v in np.flatnonzero(z))
            return RunOutcome(NodeSet(members), t, trace)
    return RunOutcome(None, iterations, trace)


def _run_block(g, p, spec, mean, start, stop, iterations, alpha):
    """Evolve initializations [start, stop) together; the solver kernel.

    Returns (found, failures, width) where found[j] is None or
    (init index, member tuple, iteration). All shapes depend only on
    stop - start, never on scheduling.
    """
    width = stop - start
    X = sample_block(g.n, spec, mean, start, stop)
    M1 = np.zeros_like(X)
    M2 = np.zeros_like(X)
    pending = np.ones(width, dtype=bool)
    found: list[tuple[int, tuple[int, ...], int] | None] = [None] * width
    failures = 0
    for t in range(1, iterations + 1):
        G = gradient_columns(g, p, X)
        finite = np.isfinite(G).all(axis=0)
        if not finite.all():
            failures += int((pending & ~finite).sum())
            pending &= finite
            if not pending.any():
                break
            G = np.where(finite, G, 0.0)  # keep downstream math finite
        M1 = BETA1 * M1 + (1.0 - BETA1) * G
        M2 = BETA2 * M2 + (1.0 - BETA2) * G * G
        mhat = M1 / (1.0 - BETA1**t)
        vhat = M2 / (1.0 - BETA2**t)
        X = np.clip(X - alpha * mhat / (np.sqrt(vhat) + EPS), 0.0, 1.0)
        Z = (X > 0.0).astype(np.float64)
        ok = fast_mis_check_batch(g, p, Z) & pending
        if ok.any():
            for c in np.flatnonzero(ok):
                members = tuple(int(v) for v in np.flatnonzero(Z[:, c]))
                found[c] = (start + int(c), members, t)
            pending &= ~ok
            if not pending.any():
                break
    return found, failures, width


def _resolve_workers(workers) -> int:
    if workers is None:
        return os.cpu_count() or 1
    return max(1, int(workers))


def solve(g: Graph, cfg: SolverConfig, workers: int | None = None, source: str = "") -> SolveReport:
    """Run batch_size * batch_count initializations and keep the largest set.

    Batches run sequentially; blocks within a batch run concurrently.
    Results are merged in initialization order, so equal-size sets resolve
    to the lowest initialization index. The optional time limit is checked
    at batch boundaries only (cooperative: a started batch always
    finishes).
    """
    t0 = time.perf_counter()
    p = cfg.params()
    spec = cfg.init_spec()
    mean = initial_mean(g, spec)
    g.adjacency_csr()  # build once, before workers share it
    nworkers = _resolve_workers(workers)
    best: NodeSet | None = None
    found_count = 0
    completed = 0
    failures = 0
    trace: list[tuple[float, int]] = []

    def run_span(span):
        return _run_block(g, p, spec, mean, span[0], span[1], cfg.iterations, cfg.alpha)

    executor = ThreadPoolExecutor(max_workers=nworkers) if nworkers > 1 else None
    try:
        for b in range(cfg.batch_count):
            if cfg.time_limit is not None and time.perf_counter() - t0 >= cfg.time_limit:
                break
            lo = b * cfg.batch_size
            spans = [
                (lo + s, lo + min(s + CHUNK, cfg.batch_size))
                for s in range(0, cfg.batch_size, CHUNK)
            ]
            if executor is None:
                results = [run_span(span) for span in spans]
            else:
                results = list(executor.map(run_span, spans))
            for found, nfail, width in results:  # span order, i.e. index order
                failures += nfail
                completed += width - nfail
                for item in found:
                    if item is None:
                        continue
                    _, members, _ = item
                    found_count += 1
                    if best is None or len(members) > best.size:
                        best = NodeSet(members)
            elapsed_ms = (time.perf_counter() - t0) * 1000.0
            trace.append((elapsed_ms, 0 if best is None else best.size))
    finally:
        if executor is not None:
            executor.shutdown()
    return SolveReport(
        best=best,
        best_size=0 if best is None else best.size,
        mis_found_count=found_count,
        runs_completed=completed,
        numerical_failures=failures,
        wall_time_ms=(time.perf_counter() - t0) * 1000.0,
        trace=trace,
        config=cfg,
        n=g.n,
        m=g.m,
        source=source,
    )


@dataclass
class ResampleOutcome:
    found_sizes: list[int]
    best: NodeSet | None
    iterations: int


def run_resampling(g: Graph, p: ObjectiveParams, iterations: int, alpha: float, seed: int) -> ResampleOutcome:
    """Single evolving assignment with restart-on-success.

    Every time the current point certifies as a maximal independent set it
    is recorded, a fresh uniform start replaces it, and the optimizer
    state resets. The budget counts total gradient steps across restarts.
    Useful for measuring how quickly an objective variant reaches fixed
    points.
    """
    draw = 0
    x = np.random.default_rng([seed, draw]).random(g.n)
    st = AdamState.fresh(g.n)
    sizes: list[int] = []
    best: NodeSet | None = None
    for _ in range(iterations):
        x = adam_step(g, p, x, st, alpha)
        z = threshold(x)
        if fast_mis_check(g, p, z):
            members = tuple(int(v) for v in np.flatnonzero(z))
            sizes.append(len(members))
            if best is None or len(members) > best.size:
                best = NodeSet(members)
            draw += 1
            x = np.random.default_rng([seed, draw]).random(g.n)
            st = AdamState.fresh(g.n)
    return ResampleOutcome(found_sizes=sizes, best=best, iterations=iterations)
