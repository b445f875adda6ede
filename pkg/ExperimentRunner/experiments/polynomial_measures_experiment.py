from typing import Any, Dict

import numpy as np

from DiskGeometry.geometry import sample_disk
from MeasureModel.functionals import localized_lp_norm
from RepresentationSynthesis.constructions import polynomial_measure, polynomial_representation, synth_mobius
from ..base_experiment import BaseExperiment, number_field, schema_with
from ..report import ExperimentReport

# (m, N) -> c fixed by the moment formula
KNOWN_CONSTANTS = {(1, 0): 2.0, (2, 1): 12.0}
MIXED_POLYNOMIAL = (1.0, -2.0, 0.5j, 3.0)


class PolynomialMeasuresExperiment(BaseExperiment):
    """
    Every polynomial is the Moebius representation of an explicit density
    measure: c w^(m-1) (1 - |w|^2)^N dA for z^m and c |w|/w (1 - |w|^2)^N dA
    for constants, with N large enough for the localized function to lie
    in L^p(dlambda).
    """

    display_name = "Polynomial measures"
    claim = "z^m = int (z - w) / (1 - z conj(w)) dmu_m for m <= 5"
    aliases = ('lemma6_polynomials',)
    tolerances = {'exactness': 1e-8, 'mixed': 1e-7, 'constant': 1e-12}

    @classmethod
    def get_config_schema(cls) -> Dict[str, Any]:
        return schema_with(
            number_field('max_degree', 5, 'Highest monomial degree', kind='integer', min=0, max=12),
            number_field('probes', 100, 'Probe count', kind='integer', min=1),
            number_field('p', 0.5, 'Target exponent for the localized function', min=0.0),
            number_field('r', 0.5, 'Pseudo-hyperbolic radius', min=0.0, max=1.0),
        )

    def _run(self, report: ExperimentReport):
        rng = np.random.default_rng(self.params['seed'])
        z = sample_disk(self.params['probes'], 0.95, rng)
        tol = self.tolerances['exactness']

        for m in range(self.params['max_degree'] + 1):
            f = synth_mobius(polynomial_measure(m))
            residual = float(np.max(np.abs(f(z) - z ** m)))
            report.add_rows('monomials', [{'m': m, 'N': 0, 'residual': residual}])
            report.assert_that(f"z^{m}", residual < tol, value=residual, tolerance='exactness')

        for (m, N), expected in sorted(KNOWN_CONSTANTS.items()):
            c = polynomial_measure(m, N).densities[0].coefficient
            error = abs(c - expected)
            report.add_rows('constants', [{'m': m, 'N': N, 'c': c.real, 'expected': expected}])
            report.assert_that(f"constant_m{m}_N{N}", error < self.tolerances['constant'], value=c.real,
                               tolerance='constant')

        p, r = self.params['p'], self.params['r']
        mu = polynomial_representation(MIXED_POLYNOMIAL, p=p)
        target = np.polynomial.Polynomial(MIXED_POLYNOMIAL)(z)
        residual = float(np.max(np.abs(synth_mobius(mu)(z) - target)))
        report.assert_that('mixed_polynomial', residual < self.tolerances['mixed'], value=residual, tolerance='mixed')

        # |mu|_r is dominated by the sum of the terms' localized functions
        for m in range(len(MIXED_POLYNOMIAL)):
            localized = localized_lp_norm(polynomial_measure(m, p=p), r, p)
            report.add_rows('localized', localized.rows())
            report.assert_that(f"localized_m{m}_in_Lp", localized.converged, value=localized.verdict)
