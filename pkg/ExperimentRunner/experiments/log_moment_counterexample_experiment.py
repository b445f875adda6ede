import math
from typing import Any, Dict

import numpy as np

from DiskRep.config import Config
from MeasureModel.convergence import make_report
from MeasureModel.functionals import berezin_lp_norm, localized_lp_norm, log_moment, total_mass
from MeasureModel.measure import Measure
from ..base_experiment import BaseExperiment, number_field, schema_with
from ..report import ExperimentReport

# Past this index 1 - |z_n|^2 is no longer resolved by |z_n|^2 in double precision
MAX_MATERIALIZED_ATOMS = 20
# Heads of the measure handed to the localized and Berezin functionals; each doubles the last
FUNCTIONAL_HEADS = (3, 6, 12)


def counterexample_measure(count: int) -> Measure:
    """Atoms on (0, 1) with 1 - |z_n|^2 = e^-n and weights 1 / n^2"""
    n = np.arange(1, count + 1, dtype=float)
    return Measure.atomic(np.sqrt(-np.expm1(-n)), 1.0 / n ** 2)


class LogMomentCounterexampleExperiment(BaseExperiment):
    """
    Finite total mass does not give a finite log moment: with atoms at
    1 - |z_n|^2 = e^-n and weights 1/n^2 the mass sums to pi^2/6 while the
    log moment sums n / n^2, the harmonic series. So the localized function
    is integrable at p = 1 while the Berezin condition fails.
    """

    display_name = "Finite mass with divergent log moment"
    claim = ("sum 1/n^2 -> pi^2/6 while sum n (1/n^2) tracks ln N; "
             "int mu_r dlambda stays C_r |mu|(D) while int B|mu| dA grows")
    aliases = ('cor4_counterexample',)
    tolerances = {'mass': 1e-4, 'log_ratio_low': 0.9, 'log_ratio_high': 1.1, 'atoms': 1e-9,
                  'localized_constant': 1e-3, 'localized_shrink': 0.75, 'berezin_persist': 0.9}

    @classmethod
    def get_config_schema(cls) -> Dict[str, Any]:
        return schema_with(
            number_field('terms', 10000, 'Number of atoms in the analytic sums', kind='integer', min=1000),
            number_field('r', 0.5, 'Radius of the localized function', min=0.0, max=1.0),
        )

    def _run(self, report: ExperimentReport):
        N = self.params['terms']
        counts = sorted({int(round(10 ** (k / 2.0))) for k in range(2, 2 * int(math.log10(N)) + 1)} | {N})
        n = np.arange(1, N + 1, dtype=float)
        mass = np.cumsum(1.0 / n ** 2)
        # log(1 / (1 - |z_n|^2)) = n
        moment = np.cumsum(n / n ** 2)
        idx = np.asarray(counts) - 1
        x = np.log(counts)

        mass_report = make_report(mass[idx], counts, 'total_mass', label='sum 1/n^2', x=x, x_label='N')
        moment_report = make_report(moment[idx], counts, 'log_moment', label='sum 1/n', x=x, x_label='N')
        report.add_result('mass', mass_report.to_dict())
        report.add_result('log_moment', moment_report.to_dict())
        report.add_rows('partial_sums', [{'N': c, 'mass': float(mass[c - 1]), 'log_moment': float(moment[c - 1]),
                                          'ratio_to_log': float(moment[c - 1] / math.log(c))} for c in counts])

        mass_error = abs(mass[-1] - math.pi ** 2 / 6.0)
        report.assert_that('mass_limit', mass_error <= self.tolerances['mass'], value=mass_error, tolerance='mass')
        ratio = float(moment[-1] / math.log(N))
        report.assert_that('log_moment_tracks_log_N',
                           self.tolerances['log_ratio_low'] <= ratio <= self.tolerances['log_ratio_high'],
                           value=ratio, tolerance=[self.tolerances['log_ratio_low'], self.tolerances['log_ratio_high']])
        report.assert_that('mass_converged', mass_report.converged, value=mass_report.verdict)
        report.assert_that('log_moment_divergent', moment_report.divergent, value=moment_report.verdict)

        # The same sums through the measure model on the first atoms
        mu = counterexample_measure(MAX_MATERIALIZED_ATOMS)
        schedule = Config.DEFAULT_SCHEDULE + (float(np.max(np.abs(mu.locations))),)
        modelled_mass = total_mass(mu, schedule).last
        modelled_moment = log_moment(mu, schedule).last
        mismatch = max(abs(modelled_mass - mass[MAX_MATERIALIZED_ATOMS - 1]),
                       abs(modelled_moment - moment[MAX_MATERIALIZED_ATOMS - 1]) / moment[MAX_MATERIALIZED_ATOMS - 1])
        report.assert_that('measure_model_agrees', mismatch <= self.tolerances['atoms'], value=mismatch,
                           tolerance='atoms')

        # Finite heads: the localized L^1 norm is C_r |mu|(D) and settles with the mass,
        # the Berezin integral keeps its log growth
        r = self.params['r']
        c_r = r * r / (1.0 - r * r)
        localized, berezin = [], []
        for count in FUNCTIONAL_HEADS:
            head = counterexample_measure(count)
            localized_report = localized_lp_norm(head, r, 1.0)
            berezin_report = berezin_lp_norm(head, 1.0)
            localized.append(localized_report.last)
            berezin.append(berezin_report.last)
        report.add_result('localized_l1', localized_report.to_dict())
        report.add_result('berezin_l1', berezin_report.to_dict())
        report.add_rows('heads', [{'atoms': c, 'localized_l1': float(a), 'berezin_l1': float(b)}
                                   for c, a, b in zip(FUNCTIONAL_HEADS, localized, berezin)])

        deviation = abs(localized[-1] / (c_r * head.atom_mass()) - 1.0)
        report.assert_that('localized_l1_is_invariant_multiple_of_mass',
                           deviation <= self.tolerances['localized_constant'], value=deviation,
                           tolerance='localized_constant')
        localized_ratio = (localized[2] - localized[1]) / (localized[1] - localized[0])
        report.assert_that('localized_l1_increments_shrink',
                           localized_ratio <= self.tolerances['localized_shrink'], value=localized_ratio,
                           tolerance='localized_shrink')
        berezin_ratio = (berezin[2] - berezin[1]) / (berezin[1] - berezin[0])
        report.assert_that('berezin_l1_increments_persist',
                           berezin_ratio >= self.tolerances['berezin_persist'], value=berezin_ratio,
                           tolerance='berezin_persist')
