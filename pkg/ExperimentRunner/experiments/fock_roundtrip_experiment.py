import math
from typing import Any, Dict

import numpy as np

from FockPlane.fock import (fock_atomic_measure, fock_localized_lp, fock_norm, fock_reproduce_check,
                            plane_lattice, reproduce_probes, synth_fock, weyl_shift)
from FockPlane.plane_measure import PlaneMeasure, default_radius, radius_schedule
from MeasureModel.density_factory import DensityFactory
from SpaceMembership.functions import Exponential, Monomial
from ..base_experiment import BaseExperiment, number_field, schema_with
from ..report import ExperimentReport


class FockRoundtripExperiment(BaseExperiment):
    """
    Fock-space counterpart on the plane: the reproducing identity for
    polynomials, synthesis of monomials from Gaussian densities, atomic
    lattice measures whose syntheses have finite F^p_alpha norm and
    localized functions in L^p(dv), and covariance under translations.
    """

    display_name = "Fock synthesis round trip"
    claim = "f(z) = int e^(alpha z conj(w) - alpha|w|^2/2) dmu with |mu|_r in L^p(dv) lies in F^p_alpha"
    tolerances = {'reproduce': 1e-8, 'synthesis': 1e-8, 'covariance': 1e-10, 'localized': 1e-9}

    @classmethod
    def get_config_schema(cls) -> Dict[str, Any]:
        return schema_with(
            number_field('alpha', 1.0, 'Gaussian parameter', min=0.0),
            number_field('R', 8.0, 'Truncation radius of the reproducing check', min=0.0),
            number_field('p', 2.0, 'Fock exponent', min=0.0),
            number_field('r', 1.0, 'Radius of the localized function', min=0.0),
            number_field('extent', 2.0, 'Radius of the atomic lattice', min=0.0),
            number_field('spacing', None, 'Lattice spacing, 1 / sqrt(alpha) when unset'),
            number_field('max_degree', 5, 'Highest monomial degree', kind='integer', min=0, max=8),
            number_field('R_max', 10.0, 'Largest radius of the norm schedule', min=0.0),
        )

    def _run(self, report: ExperimentReport):
        alpha = self.params['alpha']
        self._reproducing(report, alpha)
        self._monomial_synthesis(report, alpha)

        rng = np.random.default_rng(self.params['seed'])
        lattice = plane_lattice(alpha, self.params['extent'], self.params['spacing'])
        n = len(lattice)
        coeffs = (rng.standard_normal(n) + 1j * rng.standard_normal(n)) / math.sqrt(2.0)
        mu = fock_atomic_measure(lattice, coeffs)
        report.add_result('lattice', {'spacing': lattice.spacing, 'extent': lattice.extent, 'centers': n})

        self._norms(report, mu, alpha)
        self._covariance(report, mu, alpha)

        r = self.params['r']
        localized = fock_localized_lp(mu, r, 1.0)
        expected = math.pi * r * r * float(np.sum(np.abs(mu.weights)))
        error = abs(localized.last / expected - 1.0)
        report.add_result('localized_l1', localized.to_dict())
        report.assert_that('localized_l1_identity', error < self.tolerances['localized'], value=error,
                           tolerance='localized')

        localized_p = fock_localized_lp(mu, r, self.params['p'])
        report.add_result('localized_lp', localized_p.to_dict())
        report.assert_that('localized_in_Lp', localized_p.converged, value=localized_p.verdict)

    def _reproducing(self, report: ExperimentReport, alpha: float):
        for m in range(self.params['max_degree'] + 1):
            result = fock_reproduce_check(Monomial(m), alpha, self.params['R'])
            report.add_rows('reproducing', [result.to_dict()])
            report.assert_that(f"reproduce_z^{m}", result.residual < self.tolerances['reproduce'],
                               value=result.residual, tolerance='reproduce')

    def _monomial_synthesis(self, report: ExperimentReport, alpha: float):
        z = reproduce_probes(alpha)
        for m in range(self.params['max_degree'] + 1):
            density = DensityFactory.create('fock_reproducing', alpha=alpha, m=m)
            f = synth_fock(PlaneMeasure(densities=(density,), R=default_radius(alpha)), alpha)
            residual = float(np.max(np.abs(f(z) - z ** m)))
            report.add_rows('synthesis', [{'m': m, 'residual': residual}])
            report.assert_that(f"synthesize_z^{m}", residual < self.tolerances['synthesis'], value=residual,
                               tolerance='synthesis')

    def _norms(self, report: ExperimentReport, mu: PlaneMeasure, alpha: float):
        p = self.params['p']
        schedule = radius_schedule(self.params['R_max'], steps=9)
        f = synth_fock(mu, alpha)
        norm = fock_norm(f, p, alpha, schedule)
        report.add_result('fock_norm', norm.to_dict())
        report.add_rows('fock_norm', norm.rows())
        report.assert_that('fock_norm_finite', norm.converged, value=norm.verdict)

        # e^{alpha z^2 / 2} is in F^inf only: its weighted modulus is e^{-alpha y^2}, a strip of infinite area
        control = fock_norm(Exponential(a=0.5 * alpha, q=2), p, alpha, schedule)
        report.add_result('control', control.to_dict())
        report.add_rows('fock_norm', control.rows())
        report.assert_that('control_divergent', control.divergent, value=control.verdict)

    def _covariance(self, report: ExperimentReport, mu: PlaneMeasure, alpha: float):
        b = 0.5 + 0.25j
        z = reproduce_probes(alpha)
        f = synth_fock(mu, alpha)
        shifted = synth_fock(weyl_shift(mu, b, alpha), alpha)
        expected = np.exp(alpha * z * np.conj(b) - 0.5 * alpha * abs(b) ** 2) * f(z - b)
        error = float(np.max(np.abs(shifted(z) - expected)) / np.max(np.abs(expected)))
        report.add_result('covariance', {'shift': b, 'relative_error': error})
        report.assert_that('translation_covariance', error < self.tolerances['covariance'], value=error,
                           tolerance='covariance')
