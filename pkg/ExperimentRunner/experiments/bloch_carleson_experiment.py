import math
from typing import Any, Dict

from DiskGeometry.lattice import build_lattice
from MeasureModel.density_factory import DensityFactory
from MeasureModel.functionals import carleson_constant, carleson_sequence_constant
from MeasureModel.measure import Measure
from ..base_experiment import BaseExperiment, number_field, schema_with
from ..report import ExperimentReport


class BlochCarlesonExperiment(BaseExperiment):
    """
    (1 - |w|^2) |f'(w)|^2 dA for the Bloch function log(1 / (1 - w)) is a
    1-Carleson measure. The profile of |mu|(D(z, r)) / (1 - |z|^2)^t over
    shells approaching the circle stays flat at t = 1 and blows up at the
    control exponent, along the direction of the singularity.
    """

    display_name = "Bloch log measure is 1-Carleson"
    claim = "sup_z mu(D(z, r)) / (1 - |z|^2) < inf for mu = (1 - |w|^2)|f'|^2 dA, f = log 1/(1 - w)"
    tolerances = {'flat': 1e-3}

    @classmethod
    def get_config_schema(cls) -> Dict[str, Any]:
        return schema_with(
            number_field('r', 0.3, 'Pseudo-hyperbolic radius', min=0.0, max=1.0),
            number_field('t', 1.0, 'Carleson exponent', min=0.0),
            number_field('control_t', 1.5, 'Exponent of the failing control', min=0.0),
            number_field('rho_max', 0.99, 'Outermost lattice ring for the sequence form', min=0.5, max=0.999),
        )

    def _run(self, report: ExperimentReport):
        r = self.params['r']
        mu = Measure.from_density(DensityFactory.create('bloch_log'))

        profile = carleson_constant(mu, self.params['t'], r)
        report.add_result('profile', profile.to_dict())
        report.add_rows('profile', [{'t': profile.t, 'rho': rho, 'shell_max': value}
                                    for rho, value in zip(profile.radii, profile.shell_max)])
        report.assert_that('bounded', profile.bounded and math.isfinite(profile.constant),
                           value=profile.constant, tolerance='flat')

        control = carleson_constant(mu, self.params['control_t'], r)
        report.add_result('control', control.to_dict())
        report.add_rows('profile', [{'t': control.t, 'rho': rho, 'shell_max': value}
                                    for rho, value in zip(control.radii, control.shell_max)])
        report.assert_that('control_unbounded', control.report.divergent, value=control.report.verdict)

        lat = build_lattice(r, self.params['rho_max'])
        sequence = carleson_sequence_constant(mu, lat, self.params['t'])
        report.add_result('sequence_constant', sequence)
        self.logger.debug(f"Carleson constant {profile.constant:.6g}, lattice form {sequence:.6g} on {len(lat)} sites")
