from sampling.experiment import generate_instances
from sampling.records import recorded_run

from ._bench import BenchCommand


class Command(BenchCommand):
    help = 'Generate SBM graphs with clustered signals and write them to <out>/graphs/'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--role', choices=['train', 'test'], default='train',
                            help='instance family to generate (default: train)')

    def run(self, cfg, options):
        role = options['role']
        count = options['graphs']
        if count is None:
            count = cfg.train_graphs if role == 'train' else cfg.test_graphs

        with recorded_run('generate', cfg):
            paths = generate_instances(cfg, role, count)

        self.stdout.write(self.style.SUCCESS(
            f'Wrote {len(paths)} {role} instance(s) to {cfg.graphs_dir}'
        ))
