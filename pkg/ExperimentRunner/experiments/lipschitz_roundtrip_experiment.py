from typing import Any, Dict

import numpy as np

from DiskGeometry.geometry import sample_disk
from DiskGeometry.lattice import build_lattice
from MeasureModel.functionals import carleson_constant
from MeasureModel.measure import Measure
from RepresentationSynthesis.constructions import integrate_derivative, synth_lipschitz, synth_mobius
from RepresentationSynthesis.kernel_factory import KernelFactory
from SpaceMembership.functions import LogSingular
from SpaceMembership.seminorms import lipschitz_seminorm
from ..base_experiment import BaseExperiment, number_field, schema_with
from ..report import ExperimentReport


def carleson_lattice_measure(r: float, rho_max: float, t: float) -> Measure:
    """Atoms (1 - |z_n|^2)^t at the centers of an r-lattice, a t-Carleson measure"""
    lat = build_lattice(r, rho_max)
    centers = lat.centers[lat.active]
    return Measure.atomic(centers, (1.0 - np.abs(centers) ** 2) ** t)


class LipschitzRoundtripExperiment(BaseExperiment):
    """
    A t-Carleson measure synthesized through the Lipschitz kernel gives a
    function of bounded Lambda_t seminorm, while log(1 / (1 - z)) fails.
    The derivative representation of a measure integrates back to its
    Moebius representation once the value at the origin is fixed.
    """

    display_name = "Lipschitz synthesis and derivative round trip"
    claim = "t-Carleson mu => int (1 - |w|^2)^(b+t) / (1 - z conj(w))^b dmu in Lambda_t; f' integrates back to f"
    aliases = ('thmB_roundtrip',)
    tolerances = {'flatness': 0.05, 'roundtrip': 1e-6}

    @classmethod
    def get_config_schema(cls) -> Dict[str, Any]:
        return schema_with(
            number_field('t', 1.5, 'Lipschitz exponent', min=0.0),
            number_field('b', 2.0, 'Kernel pole exponent'),
            number_field('r', 0.5, 'Lattice radius', min=0.0, max=1.0),
            number_field('rho_max', 0.99, 'Outermost lattice ring', min=0.5, max=0.999),
            number_field('probes', 50, 'Round-trip probe count', kind='integer', min=1),
            number_field('value_at_zero', 0.5, 'Value prescribed at the origin for the antiderivative'),
        )

    def _run(self, report: ExperimentReport):
        t, b, r = self.params['t'], self.params['b'], self.params['r']
        mu = carleson_lattice_measure(r, self.params['rho_max'], t)
        report.add_result('atoms', mu.atom_count)

        profile = carleson_constant(mu, t, r)
        report.add_result('carleson', profile.to_dict())
        report.assert_that('carleson_bounded', profile.bounded, value=profile.constant)

        f = synth_lipschitz(mu, b, t)
        seminorm = lipschitz_seminorm(f, t)
        report.add_rows('lipschitz', seminorm.rows())
        last = seminorm.values[-4:]
        growth = (last[-1] - last[0]) / last[0] if last[0] > 0.0 else float('inf')
        report.add_result('lipschitz', seminorm.to_dict())
        report.assert_that('lipschitz_bounded', growth < self.tolerances['flatness'], value=growth,
                           tolerance='flatness')

        control = lipschitz_seminorm(LogSingular(), t)
        report.add_rows('lipschitz', control.rows())
        report.add_result('control', control.to_dict())
        report.assert_that('control_divergent', control.divergent, value=control.verdict)

        self._roundtrip(report, mu)

    def _roundtrip(self, report: ExperimentReport, mu: Measure):
        rng = np.random.default_rng(self.params['seed'])
        z = sample_disk(self.params['probes'], 0.95, rng)
        target = complex(self.params['value_at_zero'])

        g = synth_mobius(mu)
        fprime = KernelFactory.build('mobius_derivative', mu)
        rebuilt = integrate_derivative(fprime, value_at_zero=target)

        expected = g(z) + (target - complex(g(0.0)))
        scale = max(float(np.max(np.abs(expected))), 1.0)
        value_error = float(np.max(np.abs(rebuilt(z) - expected))) / scale
        slope_error = float(np.max(np.abs(rebuilt.derivative(1, z) - fprime(z)))) / \
            max(float(np.max(np.abs(fprime(z)))), 1.0)
        report.add_result('roundtrip', {'value_error': value_error, 'derivative_error': slope_error,
                                        'origin': complex(rebuilt(0.0))})
        report.assert_that('roundtrip_values', value_error < self.tolerances['roundtrip'], value=value_error,
                           tolerance='roundtrip')
        report.assert_that('roundtrip_derivative', slope_error < self.tolerances['roundtrip'], value=slope_error,
                           tolerance='roundtrip')
