"""Gradient bandit sampling agent and the baseline samplers.

The agent walks over the graph: at every step it draws a hop count ``a`` from
a softmax policy and moves to an unsampled node at distance ``a`` from its
current position. After ``M`` nodes are collected the signal is recovered
from them and the negated recovery MSE becomes the reward of every action
taken during the episode.
"""
import logging
from dataclasses import dataclass, replace

import numpy as np
from scipy.special import softmax

from .exceptions import DomainError
from .graph_signals import as_signal, mse
from .recovery import SampleSet, recover

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Policy:
    """Softmax distribution over the hop actions ``1 .. H``."""

    weights: np.ndarray

    def __post_init__(self):
        weights = np.array(self.weights, dtype=np.float64)
        if weights.ndim != 1 or weights.size == 0:
            raise DomainError("policy weights must be a non-empty vector")
        if not np.all(np.isfinite(weights)):
            raise DomainError("policy weights must be finite")
        weights.setflags(write=False)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def uniform(cls, horizon):
        if horizon < 1:
            raise DomainError("horizon must be at least 1")
        return cls(np.zeros(horizon))

    @classmethod
    def from_distribution(cls, probabilities):
        """Policy whose softmax reproduces ``probabilities``."""
        probabilities = np.asarray(probabilities, dtype=np.float64)
        if np.any(probabilities <= 0) or abs(probabilities.sum() - 1.0) > 1e-9:
            raise DomainError("distribution must be strictly positive and sum to 1")
        return cls(np.log(probabilities))

    @property
    def horizon(self):
        return self.weights.size

    def probabilities(self):
        return action_probabilities(self)


def action_probabilities(policy):
    return softmax(policy.weights)


@dataclass(frozen=True)
class Episode:
    nodes: tuple
    actions: tuple
    reward: float = None

    def sample_set(self, signal):
        return SampleSet.from_nodes(self.nodes, signal)

    def with_reward(self, reward):
        if reward > 0:
            raise DomainError(f"episode reward must be non-positive, got {reward}")
        return replace(self, reward=float(reward))


@dataclass(frozen=True)
class TrainerConfig:
    budget: int = 25
    horizon: int = 4
    learn_rate: float = 0.05
    batch_size: int = 10
    episodes: int = 2000
    rmsprop_decay: float = 0.9
    rmsprop_eps: float = 1e-8
    early_stop_threshold: float = None
    early_stop_window: int = 10

    def __post_init__(self):
        for name in ("budget", "horizon", "batch_size", "early_stop_window"):
            if getattr(self, name) < 1:
                raise DomainError(f"{name} must be at least 1")
        if self.episodes < 0:
            raise DomainError("episodes must be non-negative")
        if self.learn_rate <= 0:
            raise DomainError("learn_rate must be positive")
        if not 0.0 < self.rmsprop_decay < 1.0:
            raise DomainError("rmsprop_decay must lie in (0, 1)")
        if self.rmsprop_eps <= 0:
            raise DomainError("rmsprop_eps must be positive")


@dataclass(frozen=True, eq=False)
class TrainerState:
    grad: np.ndarray
    second_moment: np.ndarray
    episode_count: int = 0

    @classmethod
    def fresh(cls, horizon):
        return cls(np.zeros(horizon), np.zeros(horizon), 0)


@dataclass(frozen=True, eq=False)
class TrainingResult:
    policy: Policy
    rewards: np.ndarray
    state: TrainerState
    episodes_run: int
    stopped_early: bool


def _check_budget(graph, budget):
    if not 1 <= budget <= graph.node_count:
        raise DomainError(f"sampling budget {budget} outside 1..{graph.node_count}")


def run_episode(graph, policy, budget, rng):
    """Collect ``budget`` distinct nodes by following ``policy``; reward unset.

    When the ring for the drawn hop count holds no unsampled node, the action
    is redrawn among the hop counts not yet tried for this step. When every
    ring up to the horizon is exhausted the agent jumps to a nearest unsampled
    node and records ``min(distance, H)`` as the action taken.
    """
    _check_budget(graph, budget)
    probs = policy.probabilities()
    hops = graph.distances()

    sampled = np.zeros(graph.node_count, dtype=bool)
    current = int(rng.integers(graph.node_count))
    sampled[current] = True
    nodes, actions = [current], []
    for _ in range(budget - 1):
        current, action = _next_node(hops[current], sampled, probs, rng)
        sampled[current] = True
        nodes.append(current)
        actions.append(action)
    return Episode(tuple(nodes), tuple(actions))


def _next_node(hop_row, sampled, probs, rng):
    untried = np.ones(probs.size, dtype=bool)
    while untried.any():
        weights = np.where(untried, probs, 0.0)
        total = weights.sum()
        weights = weights / total if total > 0 else untried / untried.sum()
        action = int(rng.choice(probs.size, p=weights)) + 1
        candidates = np.flatnonzero((hop_row == action) & ~sampled)
        if candidates.size:
            return int(rng.choice(candidates)), action
        untried[action - 1] = False

    remaining = np.flatnonzero(~sampled)
    nearest = int(hop_row[remaining].min())
    candidates = remaining[hop_row[remaining] == nearest]
    return int(rng.choice(candidates)), min(nearest, probs.size)


def episode_reward(truth, recovered):
    return -mse(truth, recovered)


def accumulate_gradient(state, policy, episode):
    """Add the episode's gradient bandit increment to ``state.grad``.

    Every recorded action ``a_k`` contributes ``R (1 - pi(a))`` to its own arm
    and ``-R pi(a)`` to every other arm, with the single episode reward ``R``.
    """
    if episode.reward is None:
        raise DomainError("episode has no reward")
    horizon = policy.horizon
    if state.grad.size != horizon:
        raise DomainError(f"trainer state has {state.grad.size} arms, policy has {horizon}")
    actions = np.asarray(episode.actions, dtype=np.intp)
    if actions.size and (actions.min() < 1 or actions.max() > horizon):
        raise DomainError(f"episode action outside 1..{horizon}: {episode.actions}")

    counts = np.bincount(actions - 1, minlength=horizon)
    increment = episode.reward * (counts - actions.size * policy.probabilities())
    return TrainerState(state.grad + increment, state.second_moment, state.episode_count + 1)


def apply_batch_update(policy, state, cfg):
    """RMSprop step on the accumulated batch gradient, then reset the gradient."""
    decay = cfg.rmsprop_decay
    second_moment = decay * state.second_moment + (1.0 - decay) * state.grad**2
    weights = policy.weights + cfg.learn_rate * state.grad / (np.sqrt(second_moment) + cfg.rmsprop_eps)
    return Policy(weights), TrainerState(np.zeros_like(state.grad), second_moment, state.episode_count)


def train_on_graph(graph, truth, cfg, solver=None, rng=None):
    _check_budget(graph, cfg.budget)
    truth = as_signal(truth, graph.node_count)
    rng = np.random.default_rng() if rng is None else rng

    policy = Policy.uniform(cfg.horizon)
    state = TrainerState.fresh(cfg.horizon)
    rewards = np.zeros(cfg.episodes)
    batch_means = []
    episodes_run = 0
    stopped_early = False

    for index in range(cfg.episodes):
        episode = run_episode(graph, policy, cfg.budget, rng)
        result = recover(graph, episode.sample_set(truth), solver)
        episode = episode.with_reward(episode_reward(truth, result.signal))
        rewards[index] = episode.reward
        state = accumulate_gradient(state, policy, episode)
        episodes_run += 1

        if state.episode_count % cfg.batch_size == 0:
            policy, state = apply_batch_update(policy, state, cfg)
            batch_means.append(rewards[index + 1 - cfg.batch_size:index + 1].mean())
            if _plateaued(batch_means, cfg):
                stopped_early = True
                logger.info("early stop after %d episodes", episodes_run)
                break

    logger.debug("trained policy %s after %d episodes", np.round(policy.probabilities(), 4), episodes_run)
    return TrainingResult(policy, rewards[:episodes_run], state, episodes_run, stopped_early)


def _plateaued(batch_means, cfg):
    window = cfg.early_stop_window
    if cfg.early_stop_threshold is None or len(batch_means) <= window:
        return False
    return abs(batch_means[-1] - batch_means[-1 - window]) < cfg.early_stop_threshold


def mean_policy(policies):
    """Average of the action distributions (not of the weights)."""
    policies = list(policies)
    if not policies:
        raise DomainError("mean policy of an empty collection")
    horizons = {policy.horizon for policy in policies}
    if len(horizons) != 1:
        raise DomainError(f"policies disagree on the horizon: {sorted(horizons)}")
    return np.mean([policy.probabilities() for policy in policies], axis=0)


def sample_urs(graph, budget, rng):
    """Uniform random sampling without replacement."""
    _check_budget(graph, budget)
    return tuple(int(node) for node in rng.choice(graph.node_count, size=budget, replace=False))


def sample_rws(graph, budget, rng):
    """Simple random walk from a uniform start, keeping first visits."""
    _check_budget(graph, budget)
    current = int(rng.integers(graph.node_count))
    order, seen = [current], {current}
    while len(order) < budget:
        neighbors = graph.adjacency[current]
        current = neighbors[rng.integers(len(neighbors))]
        if current not in seen:
            seen.add(current)
            order.append(current)
    return tuple(order)


BASELINE_SAMPLERS = {
    "RWS": sample_rws,
    "URS": sample_urs,
}


def baseline_reward(graph, truth, sampler, budget, solver=None, rng=None, trials=100):
    """Mean episode reward of a baseline sampler on one graph."""
    truth = as_signal(truth, graph.node_count)
    rng = np.random.default_rng() if rng is None else rng
    rewards = []
    for _ in range(trials):
        samples = SampleSet.from_nodes(sampler(graph, budget, rng), truth)
        rewards.append(episode_reward(truth, recover(graph, samples, solver).signal))
    return float(np.mean(rewards))


def crossover_episode(rewards, baseline, window=100):
    """First episode count at which the trailing mean reward beats ``baseline``."""
    rewards = np.asarray(rewards, dtype=np.float64)
    if rewards.size < window:
        return None
    cumulative = np.concatenate([[0.0], np.cumsum(rewards)])
    trailing = (cumulative[window:] - cumulative[:-window]) / window
    above = np.flatnonzero(trailing > baseline)
    return int(above[0]) + window if above.size else None
