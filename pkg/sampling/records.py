"""Database records of benchmark runs, next to the text/CSV artifacts."""
import logging
from contextlib import contextmanager

from django.conf import settings
from django.db import DatabaseError

from .models import EvaluationResult, ExperimentRun, TrainedPolicy

logger = logging.getLogger(__name__)


@contextmanager
def recorded_run(command, cfg):
    """Yield an ``ExperimentRun`` (or ``None`` when recording is off or unavailable)."""
    run = None
    if settings.BENCH_RECORD_RUNS:
        try:
            run = ExperimentRun.objects.create(
                command=command,
                master_seed=cfg.master_seed,
                output_dir=str(cfg.output_dir),
                config=cfg.as_dict(),
            )
        except DatabaseError as exc:
            logger.warning("not recording %s run (%s); run `manage.py migrate` to enable records", command, exc)
    try:
        yield run
    except BaseException:
        _set_status(run, "Failed")
        raise
    else:
        _set_status(run, "Completed")


def _set_status(run, status):
    if run is None:
        return
    run.status = status
    run.save(update_fields=['status', 'updated_at'])


def record_training(run, summary):
    if run is None:
        return
    TrainedPolicy.objects.bulk_create([
        TrainedPolicy(
            run=run,
            graph_index=training.index,
            weights=training.policy.weights.tolist(),
            probabilities=training.policy.probabilities().tolist(),
            episodes=int(training.rewards.size),
            final_reward=training.final_reward,
        )
        for training in summary.graphs
    ])
    mean = summary.mean_policy
    TrainedPolicy.objects.create(
        run=run,
        is_mean=True,
        weights=mean.weights.tolist(),
        probabilities=summary.mean_distribution.tolist(),
        episodes=sum(int(training.rewards.size) for training in summary.graphs),
    )


def record_results(run, rows):
    if run is None:
        return
    EvaluationResult.objects.bulk_create([
        EvaluationResult(
            run=run,
            method=row.method,
            budget=row.budget,
            nmse_linear=row.nmse_linear,
            nmse_db=row.nmse_db,
            clamped=row.clamped,
            graphs=row.graphs,
            seed=row.seed,
        )
        for row in rows
    ])
