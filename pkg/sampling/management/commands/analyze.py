from sampling.chain import TwoClusterModel, summarize
from sampling.experiment import two_cluster_occupancy

from ._bench import BenchCommand


class Command(BenchCommand):
    help = 'Two-cluster random walk analysis: transition matrix, equilibrium, optional Monte Carlo check'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n1', type=int, default=20, help='size of the first cluster')
        parser.add_argument('--n2', type=int, default=80, help='size of the second cluster')
        parser.add_argument('--p', type=float, help='intra-cluster edge probability (default: config sbm.intra_prob)')
        parser.add_argument('--q', type=float, help='inter-cluster edge probability (default: config sbm.inter_prob)')
        parser.add_argument('--empirical', action='store_true', help='also measure walk occupancy on an SBM draw')
        parser.add_argument('--steps', type=int, default=5000, help='walk length per Monte Carlo trial')
        parser.add_argument('--trials', type=int, default=20, help='Monte Carlo trials')

    def run(self, cfg, options):
        p = cfg.sbm.intra_prob if options['p'] is None else options['p']
        q = cfg.sbm.inter_prob if options['q'] is None else options['q']
        model = TwoClusterModel(options['n1'], options['n2'], p, q)
        summary = summarize(model)

        (p11, p12), (p21, p22) = summary.transition
        v1, v2 = summary.equilibrium
        self.stdout.write(f'N1={model.n1} N2={model.n2} p={model.p} q={model.q}')
        self.stdout.write(f'P = [[{p11:.6f}, {p12:.6f}], [{p21:.6f}, {p22:.6f}]]')
        self.stdout.write(f'equilibrium v1={v1:.6f} v2={v2:.6f}  (v2/v1 = {summary.ratio:.3f})')

        if options['empirical']:
            occupancy = two_cluster_occupancy(model, options['steps'], options['trials'], cfg.master_seed)
            self.stdout.write(
                f'empirical occupancy v1={occupancy[0]:.6f} v2={occupancy[1]:.6f}  '
                f'({options["trials"]} walks x {options["steps"]} steps)'
            )
            gap = abs(occupancy[0] - v1)
            style = self.style.SUCCESS if gap <= 0.03 else self.style.WARNING
            self.stdout.write(style(f'closed form vs empirical gap {gap:.4f}'))
