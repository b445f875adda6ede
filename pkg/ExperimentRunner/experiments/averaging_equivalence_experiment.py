import itertools
from typing import Any, Dict, List, Tuple

from DiskGeometry.lattice import build_lattice
from MeasureModel.density_factory import DensityFactory
from MeasureModel.functionals import averaged_lp_norm, sequence_lp
from MeasureModel.measure import Measure
from ..base_experiment import BaseExperiment, number_field, schema_with
from ..report import ExperimentReport


def averaging_panel() -> List[Tuple[str, Measure, bool]]:
    """(name, measure, averaging function in L^1(dlambda)); finiteness means int (1 - |w|^2)^-2 dmu < inf"""
    def power(a):
        return Measure.from_density(DensityFactory.create('power', a=a))

    return [
        ('atom', Measure.atom(0.3 + 0.2j), True),
        ('two_atoms', Measure.atomic([0.1, -0.6j], [0.5, 1.5]), True),
        ('power_3', power(3.0), True),
        ('power_2', power(2.0), True),
        ('area', Measure.area(), False),
        ('power_0.5', power(0.5), False),
    ]


class AveragingEquivalenceExperiment(BaseExperiment):
    """
    The averaging function in L^p(dlambda) at one radius and the lattice
    sequence of averaged values in l^p at another radius are finite or
    infinite together. Both truncations are classified and the verdicts
    compared measure by measure.
    """

    display_name = "Averaging function versus lattice sequence"
    claim = "mu_hat_s in L^p(dlambda) iff mu_hat_r(z_n) in l^p, r, s in {0.3, 0.5}"
    aliases = ('lemma3_equiv',)
    tolerances = {'agreement': 1.0}

    @classmethod
    def get_config_schema(cls) -> Dict[str, Any]:
        return schema_with(
            number_field('r', (0.3, 0.5), 'Lattice radii', kind='list'),
            number_field('s', (0.3, 0.5), 'Averaging radii', kind='list'),
            number_field('p', 1.0, 'Exponent', min=0.0),
            number_field('rho_max', 0.999, 'Outermost lattice ring', min=0.5, max=0.9999),
        )

    def _run(self, report: ExperimentReport):
        p = self.params['p']
        lattices = {r: build_lattice(r, self.params['rho_max']) for r in self.params['r']}
        report.add_result('lattice_sizes', {f"{r:g}": len(lat) for r, lat in lattices.items()})

        panel = averaging_panel()
        continuous = {(name, s): averaged_lp_norm(mu, s, p)
                      for name, mu, _ in panel for s in self.params['s']}
        discrete = {(name, r): sequence_lp(mu, lat, p, averaged=True)
                    for name, mu, _ in panel for r, lat in lattices.items()}

        agreed = 0
        pairs = 0
        for (name, mu, finite), r, s in itertools.product(panel, self.params['r'], self.params['s']):
            a = continuous[(name, s)]
            b = discrete[(name, r)].report
            pairs += 1
            match = a.divergent == b.divergent
            agreed += match
            report.add_rows('verdicts', [{'measure': name, 'r': r, 's': s, 'expected_finite': finite,
                                          'function_verdict': a.verdict, 'sequence_verdict': b.verdict,
                                          'function_last': a.last, 'sequence_last': b.last}])
            report.assert_that(f"{name}_r{r:g}_s{s:g}", match,
                               value=f"{a.verdict.value}/{b.verdict.value}", tolerance='agreement')

        report.add_result('agreement', agreed / pairs if pairs else 0.0)
        divergent = {name for (name, _), rep in continuous.items() if rep.divergent}
        report.assert_that('panel_has_both_outcomes', 0 < len(divergent) < len(panel),
                           value=sorted(divergent))
