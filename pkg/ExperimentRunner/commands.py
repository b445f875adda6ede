"""
Direct module operations for the command line: build lattices and run
synthesis, membership, Carleson and Berezin computations on measure JSON
files. Each command returns an ExperimentReport so the usual writer and
exit-status rules apply.
"""

import inspect
import logging
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np

from DiskGeometry.lattice import build_lattice, verify_lattice
from DiskQuadrature.quadrature import QuadratureScheme
from DiskRep.config import Config, parse_rho_list
from DiskRep.errors import ExperimentError
from FockPlane.fock import fock_norm, reproduce_probes, synth_fock
from FockPlane.plane_measure import PlaneMeasure
from MeasureModel.functionals import berezin, berezin_lp_norm, carleson_constant
from MeasureModel.measure import Measure
from RepresentationSynthesis.kernel_factory import KernelFactory
from SpaceMembership.spaces import SpaceSpec
from .experiment_factory import ExperimentFactory
from .report import ExperimentReport

logger = logging.getLogger(__name__)

DEFAULT_POINTS = (0.0, 0.5, 0.5j, -0.9, 0.99)
# Kernel used to synthesize a member of each space family
SPACE_KERNELS = {'besov': 'mobius', 'bloch': 'lipschitz', 'lipschitz': 'lipschitz', 'bergman': 'bergman'}


def parse_points(text: Optional[str]) -> np.ndarray:
    """Comma separated complex numbers in Python syntax, e.g. "0.5,0.1+0.2j" """
    if not text:
        return np.asarray(DEFAULT_POINTS, dtype=complex)
    try:
        return np.asarray([complex(item.strip().replace(' ', '')) for item in text.split(',') if item.strip()])
    except ValueError as e:
        raise ExperimentError(f"Invalid point list '{text}': {e}") from e


def _schedule(args) -> Optional[Sequence[float]]:
    return parse_rho_list(args.rho_list) if getattr(args, 'rho_list', None) else None


def _load_measure(args) -> Measure:
    if not getattr(args, 'measure', None):
        raise ExperimentError("This command needs --measure <file.json>")
    return Measure.load(args.measure)


def _report(name: str, args, claim: str = '') -> ExperimentReport:
    return ExperimentReport(name=name, display_name=name.title(), claim=claim, seed=getattr(args, 'seed', None),
                            parameters={k: v for k, v in sorted(vars(args).items()) if v is not None})


def _value_rows(points: np.ndarray, values: np.ndarray) -> List[Dict[str, Any]]:
    return [{'z': complex(z), 'value': complex(v)} for z, v in zip(points, np.ravel(values))]


def lattice_command(args) -> ExperimentReport:
    """Build and verify an r-lattice"""
    r = args.r if args.r is not None else Config.DEFAULT_LATTICE_RADIUS
    rho_max = args.rho if args.rho is not None else 0.99
    lat = build_lattice(r, rho_max)
    check = verify_lattice(lat, seed=args.seed if args.seed is not None else Config.DEFAULT_SEED)
    report = _report('lattice', args, claim='cells cover the disk and satisfy the containment properties')
    report.add_result('lattice', {'r': lat.r, 'rho_max': lat.rho_max, 'centers': len(lat),
                                  'rings': int(len(lat.ring_radii)), 'separation': lat.separation()})
    report.add_result('verification', check.to_dict())
    report.add_rows('rings', [{'radius': float(rad), 'count': int(n)}
                              for rad, n in zip(lat.ring_radii, lat.ring_counts)])
    report.assert_that('lattice_valid', check.ok, value=check.to_dict())
    return report


def synth_command(args) -> ExperimentReport:
    """Evaluate the synthesized function of a measure at points"""
    mu = _load_measure(args)
    points = parse_points(args.points)
    report = _report('synth', args)
    if isinstance(mu, PlaneMeasure):
        alpha = args.alpha if args.alpha is not None else 1.0
        f = synth_fock(mu, alpha, tol=args.tol if args.tol is not None else Config.FOCK_TAIL_TOL)
        if not args.points:
            points = reproduce_probes(alpha)
    else:
        params = {key: getattr(args, key) for key in ('b', 'p', 't', 'alpha')
                  if getattr(args, key, None) is not None}
        accepted = inspect.signature(KernelFactory.get_class(args.kernel)._set_params).parameters
        f = KernelFactory.build(args.kernel, mu, QuadratureScheme.from_args(args),
                                **{k: v for k, v in params.items() if k in accepted})
    report.add_result('function', f.to_dict())
    report.add_rows('values', _value_rows(points, f(points)))
    if args.k:
        report.add_rows('derivative', _value_rows(points, f.derivative(args.k, points)))
    return report


def membership_command(args) -> ExperimentReport:
    """Synthesize from a measure and classify the seminorm of the result"""
    mu = _load_measure(args)
    report = _report('membership', args)
    if isinstance(mu, PlaneMeasure):
        alpha = args.alpha if args.alpha is not None else 1.0
        p = args.p if args.p is not None else 2.0
        result = fock_norm(synth_fock(mu, alpha), p, alpha)
        report.claim = f"F^{p:g}_{alpha:g}"
    else:
        space = SpaceSpec(args.space, p=args.p, t=args.t, alpha=args.alpha, k=args.k)
        params: Dict[str, Any] = {}
        if SPACE_KERNELS[space.family] == 'lipschitz':
            params = {'t': space.t, 'b': args.b if args.b is not None else 2.0}
        elif SPACE_KERNELS[space.family] == 'bergman':
            params = {'p': space.p, 'alpha': space.alpha}
            if args.b is not None:
                params['b'] = args.b
        f = KernelFactory.build(SPACE_KERNELS[space.family], mu, QuadratureScheme.from_args(args), **params)
        result = space.evaluate(f, _schedule(args))
        report.claim = space.label
        report.add_result('space', space.to_dict())
    report.add_result('seminorm', result.to_dict())
    report.add_rows('seminorm', result.rows())
    report.assert_that('finite', not result.divergent, value=result.verdict)
    return report


def carleson_command(args) -> ExperimentReport:
    mu = _load_measure(args)
    t = args.t if args.t is not None else 1.0
    r = args.r if args.r is not None else Config.DEFAULT_LATTICE_RADIUS
    profile = carleson_constant(mu, t, r)
    report = _report('carleson', args, claim=f"{t:g}-Carleson")
    report.add_result('profile', profile.to_dict())
    report.add_rows('profile', [{'rho': rho, 'shell_max': v} for rho, v in zip(profile.radii, profile.shell_max)])
    report.assert_that('bounded', profile.bounded, value=profile.constant)
    return report


def berezin_command(args) -> ExperimentReport:
    mu = _load_measure(args)
    points = parse_points(args.points)
    report = _report('berezin', args)
    report.add_rows('values', [{'z': complex(z), 'value': float(v)}
                               for z, v in zip(points, np.ravel(berezin(mu, points)))])
    integral = berezin_lp_norm(mu, 1.0, _schedule(args))
    report.add_result('l1', integral.to_dict())
    return report


def list_command(args) -> ExperimentReport:
    report = _report('list', args)
    names = ExperimentFactory.get_available_with_names()
    claims = ExperimentFactory.get_claims()
    aliases: Dict[str, List[str]] = {}
    for alias, key in ExperimentFactory.get_aliases().items():
        aliases.setdefault(key, []).append(alias)
    report.add_rows('experiments', [{'name': key, 'display_name': names[key], 'claim': claims[key],
                                     'aliases': ','.join(sorted(aliases.get(key, [])))}
                                    for key in sorted(names)])
    return report


COMMANDS: Dict[str, Callable[[Any], ExperimentReport]] = {
    'lattice': lattice_command,
    'synth': synth_command,
    'membership': membership_command,
    'carleson': carleson_command,
    'berezin': berezin_command,
    'list': list_command,
}
