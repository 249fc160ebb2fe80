"""Clustered graph signals, total variation and recovery error metrics."""
import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .exceptions import DomainError

logger = logging.getLogger(__name__)

DEFAULT_DB_FLOOR = -120.0


def as_signal(values, node_count=None):
    """Validate ``values`` as a graph signal and return it as a float64 vector."""
    signal = np.asarray(values, dtype=np.float64)
    if signal.ndim != 1:
        raise DomainError(f"graph signal must be one-dimensional, got shape {signal.shape}")
    if node_count is not None and signal.shape[0] != node_count:
        raise DomainError(f"graph signal has {signal.shape[0]} entries, graph has {node_count} nodes")
    if not np.all(np.isfinite(signal)):
        raise DomainError("graph signal contains non-finite entries")
    return signal


@dataclass(frozen=True)
class ClusteredSignalSpec:
    partition: object
    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(float(a) for a in self.coefficients))


def ladder_coefficients(cluster_count):
    """Cluster ``l`` (1-based) carries the value ``l``."""
    return tuple(float(l) for l in range(1, cluster_count + 1))


def realize(spec):
    if len(spec.coefficients) != len(spec.partition):
        raise DomainError(
            f"{len(spec.coefficients)} coefficients given for {len(spec.partition)} clusters"
        )
    return as_signal(np.asarray(spec.coefficients)[spec.partition.cluster_of])


def total_variation(graph, x):
    x = as_signal(x, graph.node_count)
    edges = graph.edge_array
    return float(np.abs(x[edges[:, 1]] - x[edges[:, 0]]).sum())


def _paired(x, y):
    x = as_signal(x)
    y = as_signal(y)
    if x.shape != y.shape:
        raise DomainError(f"signal lengths differ: {x.shape[0]} vs {y.shape[0]}")
    return x, y


def mse(x, y):
    x, y = _paired(x, y)
    return float(np.mean((x - y) ** 2))


def nmse(truth, estimate):
    truth, estimate = _paired(truth, estimate)
    energy = float(np.dot(truth, truth))
    if energy == 0.0:
        raise DomainError("NMSE is undefined for an all-zero reference signal")
    residual = truth - estimate
    return float(np.dot(residual, residual)) / energy


class Decibel(NamedTuple):
    value: float
    clamped: bool


def to_db(nmse_value, floor=DEFAULT_DB_FLOOR):
    """``10 log10`` of a power ratio, held at ``floor`` for zero or tiny ratios."""
    if nmse_value > 0.0:
        db = 10.0 * np.log10(nmse_value)
        if db >= floor:
            return Decibel(float(db), False)
    logger.debug("NMSE %r clamped to %.1f dB", nmse_value, floor)
    return Decibel(float(floor), True)
