from sampling.experiment import run_training, write_training
from sampling.records import record_training, recorded_run

from ._bench import BenchCommand


class Command(BenchCommand):
    help = 'Train one gradient bandit sampling policy per training graph and average them'
    graphs_key = 'train_graphs'

    def run(self, cfg, options):
        with recorded_run('train', cfg) as run:
            summary = run_training(cfg)
            write_training(cfg, summary)
            record_training(run, summary)

        for training in summary.graphs:
            crossovers = ', '.join(
                f'{name} at {episode if episode is not None else "-"}'
                for name, episode in training.crossovers().items()
            )
            self.stdout.write(
                f'graph {training.index:4d}  N={training.node_count:4d}  M={training.budget:3d}  '
                f'final reward {training.final_reward:.5f}' + (f'  beats {crossovers}' if crossovers else '')
            )
        probabilities = ', '.join(f'{p:.3f}' for p in summary.mean_distribution)
        self.stdout.write(self.style.SUCCESS(
            f'Mean policy over {len(summary.graphs)} graph(s): ({probabilities}) -> {cfg.mean_policy_path}'
        ))
