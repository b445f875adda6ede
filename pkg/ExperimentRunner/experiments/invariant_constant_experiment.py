import math
from typing import Any, Dict, List, Tuple

from DiskRep.config import Config
from MeasureModel.functionals import localized_lp_norm, total_mass
from MeasureModel.measure import Measure
from ..base_experiment import BaseExperiment, number_field, schema_with
from ..report import ExperimentReport


def invariant_constant(r: float) -> float:
    """lambda(D(z, r)) = r^2 / (1 - r^2) for every z"""
    return r * r / (1.0 - r * r)


def measure_panel() -> List[Tuple[str, Measure]]:
    return [
        ('atom', Measure.atom(0.3 + 0.2j)),
        ('two_atoms', Measure.atomic([0.1, -0.6j], [0.5, 1.5])),
        ('area', Measure.area()),
    ]


class InvariantConstantExperiment(BaseExperiment):
    """
    The invariant integral of the localized function of a positive measure
    is its total mass times lambda(D(0, r)), by Fubini and Moebius
    invariance of lambda.
    """

    display_name = "Invariant constant of the localized function"
    claim = "int mu_r dlambda = r^2 / (1 - r^2) mu(D) within 1%"
    aliases = ('cr_constant',)
    tolerances = {'relative': 0.01}

    @classmethod
    def get_config_schema(cls) -> Dict[str, Any]:
        return schema_with(
            number_field('r', (0.3, 0.5), 'Pseudo-hyperbolic radii', kind='list'),
            number_field('rho_list', Config.DEFAULT_SCHEDULE, 'Truncation schedule', kind='schedule'),
        )

    def _run(self, report: ExperimentReport):
        schedule = self.params['rho_list']
        for r in self.params['r']:
            expected = invariant_constant(r)
            for name, mu in measure_panel():
                norm = localized_lp_norm(mu, r, 1.0, schedule)
                mass = total_mass(mu, schedule)
                ratio = norm.last / mass.last
                error = abs(ratio / expected - 1.0)
                self.logger.debug(f"{name} r={r:g}: ratio {ratio:.6f}, expected {expected:.6f}")
                report.add_rows('ratios', [{'measure': name, 'r': r, 'integral': norm.last, 'mass': mass.last,
                                            'ratio': ratio, 'expected': expected, 'relative_error': error}])
                report.assert_that(f"{name}_r{r:g}", error <= self.tolerances['relative'] and math.isfinite(ratio),
                                   value=error, tolerance='relative')
