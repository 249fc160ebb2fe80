"""Plain-text formats for graphs, partitions, signals and policies.

Graph::

    N M
    i j          (one line per edge, 0-based ids, low id first)

Partition: one line of N cluster indices. Signal: one value per line.
Policy: ``H`` on the first line followed by ``H`` weights, one per line.
Floats are written with ``repr`` so every value round-trips exactly.
"""
from pathlib import Path

from .bandit import Policy
from .exceptions import DomainError
from .graph_signals import as_signal
from .graphs import Graph, Partition


def _lines(text):
    return [line.strip() for line in text.splitlines() if line.strip()]


def _float(token, what):
    try:
        return float(token)
    except ValueError as exc:
        raise DomainError(f"malformed {what} value {token!r}") from exc


def format_graph(graph):
    lines = [f"{graph.node_count} {graph.edge_count}"]
    lines.extend(f"{i} {j}" for i, j in graph.incidence_rows())
    return "\n".join(lines) + "\n"


def parse_graph(text):
    lines = _lines(text)
    if not lines:
        raise DomainError("empty graph file")
    try:
        node_count, edge_count = (int(token) for token in lines[0].split())
        edges = [tuple(int(token) for token in line.split()) for line in lines[1:]]
    except ValueError as exc:
        raise DomainError(f"malformed graph file: {exc}") from exc
    if any(len(edge) != 2 for edge in edges):
        raise DomainError("every edge line must hold exactly two node ids")
    if len(edges) != edge_count:
        raise DomainError(f"header announces {edge_count} edges, file lists {len(edges)}")
    return Graph(node_count, edges)


def format_partition(partition):
    return " ".join(str(int(label)) for label in partition.cluster_of) + "\n"


def parse_partition(text):
    lines = _lines(text)
    if len(lines) != 1:
        raise DomainError("partition file must hold exactly one line")
    try:
        return Partition.from_labels(int(token) for token in lines[0].split())
    except ValueError as exc:
        raise DomainError(f"malformed partition file: {exc}") from exc


def format_signal(signal):
    return "".join(f"{float(value)!r}\n" for value in signal)


def parse_signal(text):
    return as_signal([_float(line, "signal") for line in _lines(text)])


def format_policy(policy):
    return f"{policy.horizon}\n" + format_signal(policy.weights)


def parse_policy(text):
    lines = _lines(text)
    if not lines:
        raise DomainError("empty policy file")
    try:
        horizon = int(lines[0])
    except ValueError as exc:
        raise DomainError(f"malformed policy header {lines[0]!r}") from exc
    weights = [_float(line, "policy weight") for line in lines[1:]]
    if len(weights) != horizon:
        raise DomainError(f"policy header announces {horizon} weights, file lists {len(weights)}")
    return Policy(weights)


def write_text(path, text):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="\n")


def read_text(path):
    return Path(path).read_text(encoding="utf-8")
