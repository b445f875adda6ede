#!/usr/bin/env python3
"""
DiskRep - Main entry point for experiments and direct module commands
"""

import argparse

# CLI flags forwarded to experiments as parameter overrides
OVERRIDE_FLAGS = ('r', 'p', 't', 'alpha', 'rho_list', 'k', 'R', 'spacing')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='diskrep',
        description='DiskRep - Integral representations on the unit disk and the plane')
    parser.add_argument('targets', nargs='+',
                        help="Experiment names, 'all', or one command: lattice, synth, membership, carleson, berezin, list")
    parser.add_argument('--r', type=float, help='Pseudo-hyperbolic (or Euclidean, on the plane) radius')
    parser.add_argument('--p', type=float, help='Integrability exponent')
    parser.add_argument('--t', type=float, help='Lipschitz / Carleson exponent')
    parser.add_argument('--b', type=float, help='Kernel pole exponent')
    parser.add_argument('--alpha', type=float, help='Bergman weight or Gaussian parameter')
    parser.add_argument('--k', type=int, help='Derivative order')
    parser.add_argument('--R', type=float, help='Plane truncation radius')
    parser.add_argument('--spacing', type=float, help='Plane lattice spacing')
    parser.add_argument('--rho-list', dest='rho_list', type=str, help='Radius schedule, e.g. "0.9,1-1e-3,1-1e-6"')
    parser.add_argument('--set', dest='extra', action='append', default=[], metavar='NAME=VALUE',
                        help='Any other experiment parameter (repeatable)')
    parser.add_argument('--seed', type=int, help='Seed for Monte-Carlo sampling')
    parser.add_argument('--out', type=str, help='Folder for report files')
    parser.add_argument('--format', dest='formats', action='append', choices=['json', 'csv'],
                        help='Report format (repeatable, default json)')
    parser.add_argument('--workers', type=int, default=None, help='Experiments run in parallel')

    parser.add_argument('--measure', type=str, help='Measure JSON file for module commands')
    parser.add_argument('--kernel', type=str, default='mobius', help='Kernel family for synth (default: mobius)')
    parser.add_argument('--space', type=str, default='besov', help='Space family for membership (default: besov)')
    parser.add_argument('--points', type=str, help='Evaluation points, e.g. "0.5,0.1+0.2j"')

    parser.add_argument('--radial-nodes', dest='radial_nodes', type=int, help='Gauss-Legendre nodes per radial panel')
    parser.add_argument('--angular-nodes', dest='angular_nodes', type=int, help='Initial trapezoid nodes')
    parser.add_argument('--rho', type=float, help='Quadrature truncation radius (lattice: outermost ring)')
    parser.add_argument('--tol', type=float, help='Quadrature tolerance')

    parser.add_argument('--log-level', dest='log_level', default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], help='Console log level')
    parser.add_argument('--log-dir', dest='log_dir', type=str, help='Also write a rotating log file here')
    return parser


def experiment_overrides(args) -> dict:
    overrides = {name: getattr(args, name) for name in OVERRIDE_FLAGS if getattr(args, name) is not None}
    for item in args.extra:
        name, sep, value = item.partition('=')
        if not sep or not name:
            raise ValueError(f"Expected NAME=VALUE, got '{item}'")
        overrides[name.strip()] = value.strip()
    return overrides


def run_command(args) -> int:
    from ExperimentRunner import COMMANDS, ReportWriter

    if len(args.targets) != 1:
        raise ValueError(f"Command '{args.targets[0]}' takes no further targets")
    report = COMMANDS[args.targets[0]](args)
    if args.out:
        for path in ReportWriter(args.out, args.formats or ('json',)).write(report):
            print(f"Wrote {path}")
    else:
        print(report.to_json(), end='')
    return 0 if report.passed else 1


def run_experiments(args) -> int:
    from DiskRep.config import Config
    from ExperimentRunner import ExperimentFactory, ExperimentRunner, ExperimentSpec

    names = ExperimentFactory.resolve(args.targets)
    overrides = experiment_overrides(args)
    # a flag one experiment declares may be absent from the others in a batch
    strict = len(names) == 1
    specs = [ExperimentSpec(name=name, overrides=overrides, out_dir=args.out,
                            formats=tuple(args.formats or ('json',)), seed=args.seed, strict=strict)
             for name in names]
    with ExperimentRunner(args.workers or Config.DEFAULT_WORKERS) as runner:
        results = runner.run_many(specs)
    for result in results:
        print(result.report.summary())
        for path in result.paths:
            print(f"    wrote {path}")
    return ExperimentRunner.exit_status(results)


def main(argv=None):
    """Main entry point for the DiskRep command line."""
    import sys
    import os

    # Add the current directory to the path to ensure imports work
    sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

    from DiskRep.log_manager import LogManager
    from ExperimentRunner import COMMANDS

    args = build_parser().parse_args(argv)
    LogManager().setup_logging(log_level=args.log_level, enable_file_logging=bool(args.log_dir),
                               log_dir=args.log_dir)

    try:
        if args.targets[0] in COMMANDS:
            status = run_command(args)
        else:
            status = run_experiments(args)
    except KeyboardInterrupt:
        print("\nInterrupted")
        sys.exit(130)
    except Exception as e:
        print(f"Error: {e}")
        sys.exit(1)
    sys.exit(status)


if __name__ == "__main__":
    main()
