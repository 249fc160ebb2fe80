"""Graph signal recovery by total variation minimization.

``recover`` solves

    minimize  sum_{(i, j) in E} |x[j] - x[i]|   subject to  x[i] = observed[i], i in M

with a first-order primal-dual iteration on ``min ||D x||_1`` where ``D`` is the
edge difference operator of the graph. ``recover_exact`` solves the same
problem as a linear program and serves as a reference.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy import sparse
from scipy.optimize import linprog

from .exceptions import DomainError, SamplingError
from .graph_signals import as_signal, total_variation

logger = logging.getLogger(__name__)


class SampleSet:
    """Observed signal values keyed by node, in the order they were sampled."""

    def __init__(self, entries=()):
        self._entries = {}
        items = entries.items() if hasattr(entries, "items") else entries
        for node, value in items:
            self.add(node, value)

    @classmethod
    def from_nodes(cls, nodes, signal):
        signal = as_signal(signal)
        return cls((int(node), signal[node]) for node in nodes)

    def add(self, node, value):
        node, value = int(node), float(value)
        if node < 0:
            raise DomainError(f"invalid node id {node}")
        if node in self._entries:
            raise DomainError(f"node {node} sampled twice")
        if not math.isfinite(value):
            raise DomainError(f"observation at node {node} is not finite")
        self._entries[node] = value

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __contains__(self, node):
        return node in self._entries

    def __getitem__(self, node):
        return self._entries[node]

    def __repr__(self):
        return f"SampleSet({self._entries!r})"

    def items(self):
        return self._entries.items()

    @property
    def order(self):
        return list(self._entries)

    @property
    def nodes(self):
        return np.fromiter(self._entries.keys(), dtype=np.intp, count=len(self._entries))

    @property
    def values(self):
        return np.fromiter(self._entries.values(), dtype=np.float64, count=len(self._entries))

    def shifted(self, offset):
        return SampleSet((node, value + offset) for node, value in self.items())

    def scaled(self, factor):
        return SampleSet((node, value * factor) for node, value in self.items())


@dataclass(frozen=True)
class SolverConfig:
    max_iters: int = 10000
    rel_tol: float = 1e-7
    tau: float = None
    sigma: float = None

    def __post_init__(self):
        if self.max_iters < 1:
            raise DomainError("max_iters must be at least 1")
        if self.rel_tol <= 0:
            raise DomainError("rel_tol must be positive")
        for name in ("tau", "sigma"):
            step = getattr(self, name)
            if step is not None and step <= 0:
                raise DomainError(f"{name} must be positive")

    def step_sizes(self, graph):
        """Primal and dual steps with ``tau * sigma * L**2 <= 1``, ``L = sqrt(2 d_max)``."""
        norm_bound_sq = 2.0 * graph.max_degree
        if norm_bound_sq == 0:
            return 1.0, 1.0
        tau, sigma = self.tau, self.sigma
        if tau is None and sigma is None:
            tau = sigma = 1.0 / math.sqrt(norm_bound_sq)
        elif tau is None:
            tau = 1.0 / (sigma * norm_bound_sq)
        elif sigma is None:
            sigma = 1.0 / (tau * norm_bound_sq)
        if tau * sigma * norm_bound_sq > 1.0 + 1e-12:
            raise DomainError(
                f"step sizes tau={tau}, sigma={sigma} violate tau*sigma*L^2 <= 1 (L^2 = {norm_bound_sq})"
            )
        return tau, sigma


@dataclass
class RecoveryResult:
    signal: np.ndarray
    objective: float
    iterations: int
    converged: bool
    samples: SampleSet


def _observations(graph, samples):
    if not len(samples):
        raise DomainError("cannot recover a signal from an empty sample set")
    nodes = samples.nodes
    if nodes.max() >= graph.node_count:
        raise DomainError(f"sampled node {int(nodes.max())} outside a graph of {graph.node_count} nodes")
    return nodes, samples.values


def recover(graph, samples, cfg=None):
    cfg = SolverConfig() if cfg is None else cfg
    nodes, observed = _observations(graph, samples)
    low, high = observed.min(), observed.max()

    x = np.full(graph.node_count, observed.mean())
    x[nodes] = observed
    if len(nodes) == graph.node_count or graph.edge_count == 0:
        return RecoveryResult(x, total_variation(graph, x), 0, True, samples)

    diff = graph.difference_operator
    diff_t = diff.T.tocsr()
    tau, sigma = cfg.step_sizes(graph)

    dual = np.zeros(graph.edge_count)
    x_bar = x.copy()
    converged = False
    for iteration in range(1, cfg.max_iters + 1):
        dual_new = np.clip(dual + sigma * (diff @ x_bar), -1.0, 1.0)
        # projection onto the feasible set intersected with the observed range
        x_new = np.clip(x - tau * (diff_t @ dual_new), low, high)
        x_new[nodes] = observed
        # a clipped primal can stand still while the dual is still moving
        change = max(
            np.linalg.norm(x_new - x) / max(np.linalg.norm(x), 1.0),
            np.linalg.norm(dual_new - dual) / max(np.linalg.norm(dual), 1.0),
        )
        x_bar = 2.0 * x_new - x
        x, dual = x_new, dual_new
        if change < cfg.rel_tol:
            converged = True
            break

    objective = total_variation(graph, x)
    if converged:
        logger.debug("TV recovery converged after %d iterations, objective %.6g", iteration, objective)
    else:
        logger.warning("TV recovery stopped at max_iters=%d, last relative change %.3g", cfg.max_iters, change)
    return RecoveryResult(x, objective, iteration, converged, samples)


def recover_exact(graph, samples):
    """Solve the recovery problem as an LP with one slack per edge (HiGHS)."""
    nodes, observed = _observations(graph, samples)
    n, m = graph.node_count, graph.edge_count

    cost = np.concatenate([np.zeros(n), np.ones(m)])
    bounds = [(None, None)] * n + [(0, None)] * m
    a_eq = sparse.csr_matrix((np.ones(len(nodes)), (np.arange(len(nodes)), nodes)), shape=(len(nodes), n + m))
    a_ub = b_ub = None
    if m:
        diff = graph.difference_operator
        slack = sparse.identity(m, format="csr")
        a_ub = sparse.vstack([sparse.hstack([diff, -slack]), sparse.hstack([-diff, -slack])]).tocsr()
        b_ub = np.zeros(2 * m)

    solution = linprog(cost, A_ub=a_ub, b_ub=b_ub, A_eq=a_eq, b_eq=observed, bounds=bounds, method="highs")
    if not solution.success:
        raise SamplingError(f"LP recovery failed: {solution.message}")

    x = solution.x[:n].copy()
    x[nodes] = observed
    return RecoveryResult(x, total_variation(graph, x), int(solution.nit), True, samples)


def tv_objective_certificate(graph, result, truth_feasible, tolerance=None):
    """True when ``result`` does not exceed the TV of a known feasible signal.

    Any signal that agrees with the samples bounds the optimum from above, so
    ``False`` means the solver returned a non-optimal point.
    """
    truth = as_signal(truth_feasible, graph.node_count)
    nodes, observed = result.samples.nodes, result.samples.values
    if not np.array_equal(truth[nodes], observed):
        raise DomainError("reference signal does not agree with the sampled values")
    bound = total_variation(graph, truth)
    if tolerance is None:
        tolerance = 1e-4 * max(1.0, bound)
    return result.objective <= bound + tolerance
