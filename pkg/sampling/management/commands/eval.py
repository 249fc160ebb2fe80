from django.core.management.base import CommandError

from sampling.experiment import load_policy, run_evaluation, write_results
from sampling.records import record_results, recorded_run

from ._bench import BenchCommand


class Command(BenchCommand):
    help = 'Evaluate the mean policy against random walk and uniform random sampling'
    graphs_key = 'test_graphs'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--policy', help='policy file (default: <out>/policies/mean_policy.txt)')

    def run(self, cfg, options):
        policy_path = options['policy'] or cfg.mean_policy_path
        try:
            policy = load_policy(policy_path)
        except FileNotFoundError:
            raise CommandError(f'No policy at {policy_path}; run `manage.py train` first or pass --policy')

        with recorded_run('eval', cfg) as run:
            rows = run_evaluation(cfg, policy)
            path = write_results(cfg, rows)
            record_results(run, rows)

        self.stdout.write(f'{"method":6s} {"budget":>6s} {"NMSE":>12s} {"dB":>9s}')
        for row in rows:
            marker = ' (floor)' if row.clamped else ''
            self.stdout.write(
                f'{row.method:6s} {row.budget:6.2f} {row.nmse_linear:12.6g} {row.nmse_db:9.3f}{marker}'
            )
        self.stdout.write(self.style.SUCCESS(f'Wrote {len(rows)} rows to {path}'))
