"""Benchmark orchestration: instance generation, multi-graph training, evaluation.

Every random stream is derived from the master seed and a role string, so a
run is a pure function of its configuration. Per-graph work may run in a
process pool; results are always reduced in graph-index order.

Output directory layout::

    graphs/{role}_{index:04d}.edges | .partition | .signal
    policies/policy_{index:04d}.txt, policies/mean_policy.txt
    traces/trace_{index:04d}.csv, traces/summary.csv
    results.csv
"""
import csv
import hashlib
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from functools import partial
from pathlib import Path

import numpy as np

from . import serialization
from .bandit import (
    BASELINE_SAMPLERS,
    Policy,
    TrainerConfig,
    baseline_reward,
    crossover_episode,
    mean_policy,
    run_episode,
    train_on_graph,
)
from .chain import empirical_occupancy
from .graph_signals import DEFAULT_DB_FLOOR, ClusteredSignalSpec, ladder_coefficients, nmse, realize, to_db
from .graphs import SbmConfig, sbm_generate
from .recovery import SampleSet, SolverConfig, recover

logger = logging.getLogger(__name__)

METHODS = ("MAB", "RWS", "URS")
RESULT_HEADER = ("method", "budget", "nmse_linear", "nmse_db", "graphs", "seed")
TRAILING_WINDOW = 100


@dataclass(frozen=True)
class ExperimentConfig:
    sbm: SbmConfig = field(default_factory=SbmConfig)
    trainer: TrainerConfig = field(default_factory=TrainerConfig)
    solver: SolverConfig = field(default_factory=SolverConfig)
    cluster_sizes: tuple = None
    train_graphs: int = 20
    test_graphs: int = 100
    budgets: tuple = (0.1, 0.2, 0.3, 0.4, 0.5)
    train_budget: float = 0.2
    master_seed: int = 0
    output_dir: Path = Path("runs")
    workers: int = 1
    db_floor: float = DEFAULT_DB_FLOOR
    baseline_trials: int = 50

    def as_dict(self):
        data = asdict(self)
        data["output_dir"] = str(self.output_dir)
        return data

    @property
    def graphs_dir(self):
        return self.output_dir / "graphs"

    @property
    def policies_dir(self):
        return self.output_dir / "policies"

    @property
    def traces_dir(self):
        return self.output_dir / "traces"

    @property
    def mean_policy_path(self):
        return self.policies_dir / "mean_policy.txt"

    @property
    def results_path(self):
        return self.output_dir / "results.csv"


def derive_seed(master_seed, role, index=0):
    """``master_seed`` plus a stable 64-bit hash of ``role:index``, modulo 2**64."""
    digest = hashlib.blake2b(f"{role}:{index}".encode(), digest_size=8).digest()
    return (int(master_seed) + int.from_bytes(digest, "little")) % 2**64


def stream(master_seed, role, index=0):
    return np.random.default_rng(derive_seed(master_seed, role, index))


def absolute_budget(relative, node_count):
    """``round(relative * N)`` (halves up), at least one node, at most ``N``."""
    return max(1, min(node_count, int(math.floor(relative * node_count + 0.5))))


@dataclass(frozen=True, eq=False)
class Instance:
    role: str
    index: int
    graph: object
    partition: object
    signal: np.ndarray


def instance_paths(cfg, role, index):
    stem = cfg.graphs_dir / f"{role}_{index:04d}"
    return stem.with_suffix(".edges"), stem.with_suffix(".partition"), stem.with_suffix(".signal")


def generate_instance(cfg, role, index):
    rng = stream(cfg.master_seed, f"{role}-graph", index)
    graph, partition = sbm_generate(cfg.sbm, cfg.cluster_sizes, rng)
    signal = realize(ClusteredSignalSpec(partition, ladder_coefficients(len(partition))))
    return Instance(role, index, graph, partition, signal)


def save_instance(cfg, instance):
    edges_path, partition_path, signal_path = instance_paths(cfg, instance.role, instance.index)
    serialization.write_text(edges_path, serialization.format_graph(instance.graph))
    serialization.write_text(partition_path, serialization.format_partition(instance.partition))
    serialization.write_text(signal_path, serialization.format_signal(instance.signal))
    return edges_path


def load_instance(cfg, role, index):
    """Persisted instance, or ``None`` when no files exist for it."""
    edges_path, partition_path, signal_path = instance_paths(cfg, role, index)
    if not edges_path.exists():
        return None
    graph = serialization.parse_graph(serialization.read_text(edges_path))
    partition = serialization.parse_partition(serialization.read_text(partition_path))
    signal = serialization.parse_signal(serialization.read_text(signal_path))
    return Instance(role, index, graph, partition, signal)


def obtain_instance(cfg, role, index):
    return load_instance(cfg, role, index) or generate_instance(cfg, role, index)


def generate_instances(cfg, role, count):
    paths = []
    for index in range(count):
        instance = generate_instance(cfg, role, index)
        paths.append(save_instance(cfg, instance))
        logger.info("%s instance %d: %d nodes, %d edges, %d clusters", role, index,
                    instance.graph.node_count, instance.graph.edge_count, len(instance.partition))
    return paths


def _map(func, items, workers):
    if workers <= 1:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


@dataclass(frozen=True, eq=False)
class GraphTraining:
    index: int
    node_count: int
    budget: int
    policy: Policy
    rewards: np.ndarray
    stopped_early: bool
    baselines: dict

    @property
    def final_reward(self):
        tail = self.rewards[-TRAILING_WINDOW:]
        return float(tail.mean()) if tail.size else float("nan")

    def crossovers(self):
        return {name: crossover_episode(self.rewards, value, TRAILING_WINDOW) for name, value in self.baselines.items()}


@dataclass(frozen=True, eq=False)
class TrainingSummary:
    graphs: list
    mean_distribution: np.ndarray

    @property
    def mean_policy(self):
        return Policy.from_distribution(self.mean_distribution)


def train_one(cfg, index):
    instance = obtain_instance(cfg, "train", index)
    graph, truth = instance.graph, instance.signal
    budget = absolute_budget(cfg.train_budget, graph.node_count)
    trainer = replace(cfg.trainer, budget=budget)
    result = train_on_graph(graph, truth, trainer, cfg.solver, stream(cfg.master_seed, "train-episodes", index))

    baselines = {}
    if cfg.baseline_trials > 0:
        for name, sampler in BASELINE_SAMPLERS.items():
            rng = stream(cfg.master_seed, f"train-baseline-{name}", index)
            baselines[name] = baseline_reward(graph, truth, sampler, budget, cfg.solver, rng, cfg.baseline_trials)

    logger.info("trained graph %d (N=%d, M=%d): policy %s", index, graph.node_count, budget,
                np.round(result.policy.probabilities(), 3))
    return GraphTraining(index, graph.node_count, budget, result.policy, result.rewards, result.stopped_early, baselines)


def run_training(cfg):
    graphs = _map(partial(train_one, cfg), range(cfg.train_graphs), cfg.workers)
    distribution = mean_policy([training.policy for training in graphs])
    return TrainingSummary(graphs, distribution)


def write_training(cfg, summary):
    for training in summary.graphs:
        serialization.write_text(cfg.policies_dir / f"policy_{training.index:04d}.txt",
                                 serialization.format_policy(training.policy))
        _write_csv(cfg.traces_dir / f"trace_{training.index:04d}.csv", ("episode", "reward"),
                   ((episode, repr(float(reward))) for episode, reward in enumerate(training.rewards, start=1)))

    names = list(BASELINE_SAMPLERS)
    header = ("graph", "nodes", "budget", "episodes", "final_reward",
              *(f"{name.lower()}_reward" for name in names), *(f"{name.lower()}_crossover" for name in names))
    rows = []
    for training in summary.graphs:
        crossovers = training.crossovers()
        rows.append((training.index, training.node_count, training.budget, training.rewards.size,
                     repr(training.final_reward),
                     *(repr(training.baselines[name]) if name in training.baselines else "" for name in names),
                     *("" if crossovers.get(name) is None else crossovers[name] for name in names)))
    _write_csv(cfg.traces_dir / "summary.csv", header, rows)
    serialization.write_text(cfg.mean_policy_path, serialization.format_policy(summary.mean_policy))


def load_policy(path):
    return serialization.parse_policy(serialization.read_text(path))


@dataclass(frozen=True)
class ResultRow:
    method: str
    budget: float
    nmse_linear: float
    nmse_db: float
    clamped: bool
    graphs: int
    seed: int

    def as_csv_row(self):
        return (self.method, repr(self.budget), repr(self.nmse_linear), repr(self.nmse_db), self.graphs, self.seed)


def _samplers(policy):
    return {
        "MAB": lambda graph, budget, rng: run_episode(graph, policy, budget, rng).nodes,
        **BASELINE_SAMPLERS,
    }


def evaluate_one(cfg, policy, index):
    """NMSE per ``(budget index, method)`` on one fresh test instance."""
    instance = obtain_instance(cfg, "test", index)
    graph, truth = instance.graph, instance.signal
    samplers = _samplers(policy)
    errors = {}
    for budget_index, relative in enumerate(cfg.budgets):
        budget = absolute_budget(relative, graph.node_count)
        for method in METHODS:
            rng = stream(cfg.master_seed, f"eval-{method}-{budget_index}", index)
            samples = SampleSet.from_nodes(samplers[method](graph, budget, rng), truth)
            errors[budget_index, method] = nmse(truth, recover(graph, samples, cfg.solver).signal)
    logger.debug("evaluated test graph %d", index)
    return errors


def run_evaluation(cfg, policy):
    per_graph = _map(partial(evaluate_one, cfg, policy), range(cfg.test_graphs), cfg.workers)
    rows = []
    for budget_index, relative in enumerate(cfg.budgets):
        for method in METHODS:
            linear = float(np.mean([errors[budget_index, method] for errors in per_graph]))
            db = to_db(linear, cfg.db_floor)
            if db.clamped:
                logger.warning("%s at budget %s: NMSE %r clamped to %.1f dB", method, relative, linear, db.value)
            rows.append(ResultRow(method, float(relative), linear, db.value, db.clamped, len(per_graph), cfg.master_seed))
    return rows


def write_results(cfg, rows):
    _write_csv(cfg.results_path, RESULT_HEADER, (row.as_csv_row() for row in rows))
    return cfg.results_path


def _write_csv(path, header, rows):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def two_cluster_occupancy(model, walk_steps, trials, master_seed):
    """Walk occupancy on a fresh two-block SBM draw shaped like ``model``."""
    rng = stream(master_seed, "analyze-graph")
    sbm = SbmConfig(cluster_count=2, intra_prob=model.p, inter_prob=model.q)
    graph, partition = sbm_generate(sbm, [model.n1, model.n2], rng)
    return empirical_occupancy(graph, partition, walk_steps, trials, stream(master_seed, "analyze-walk"))
