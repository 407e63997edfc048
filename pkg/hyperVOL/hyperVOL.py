#!/usr/bin/env python3

"""
Tool for volumes and growth ratios of hyperspheres circumscribing unit hypercubes
"""
# Example: hyperVOL volume --dim 4 --circumscribe
# Example: hyperVOL figure --out growth.csv
# Example: hyperVOL converge --dims 100,1000,10000,100000 --format json

# Imports
import argparse
import math
import sys

import numpy as np

# Load local libraries
import hypertools.utils.common as common
import hypertools.utils.geometry as geometry
import hypertools.utils.asymptotics as asymptotics
import hypertools.utils.montecarlo as montecarlo
import hyperVOL.records as records

# Defaults
DEFAULT_FIG_MIN = 3.0
DEFAULT_FIG_MAX = 25.0
DEFAULT_FIG_POINTS = 500
DEFAULT_CONVERGE_DIMS = "100,1000,10000,100000"
DEFAULT_PEAK_NMAX = 1000
DEFAULT_MC_SAMPLES = 1000000
DEFAULT_CHECK_SAMPLES = 100000
DEFAULT_SEED = 42
DEFAULT_TABLE_MAX = 30

SENTINELS = {"underflow": "0 (underflow)", "overflow": "inf (overflow)"}

def VolumeCell(log_v):
    """
    Linear volume for output, or a sentinel if it is not representable
    """
    try:
        return geometry.volume_from_log(log_v)
    except common.RangeError as e:
        return SENTINELS[e.kind]

def GetRadius(args):
    if args.circumscribe: return geometry.circumscribed_radius(args.dim)
    return args.radius

def GetVolume(args):
    """
    n, r, log volume and (unless --log) the linear volume
    """
    r = GetRadius(args)
    if args.form == "product":
        log_v = geometry.log_ball_volume_product(args.dim, r)
    elif args.form == "recurrence":
        log_v = geometry.log_ball_volume_recurrence(args.dim, r)
    else:
        log_v = geometry.log_ball_volume(args.dim, r)
    columns = ["n", "r", "log_volume"]
    row = [args.dim, geometry.check_radius(r), log_v]
    if not args.log:
        columns.append("volume")
        row.append(VolumeCell(log_v))
    return records.OutputRecord(columns, [row])

def GetRatio(args):
    """
    Growth ratio g_n (or the literal printed formula) for one or more n
    """
    dim_max = args.dim if args.dim_max is None else args.dim_max
    ns = np.arange(args.dim, dim_max + 1)
    common.MSG("Computing ratios for n=%s..%s"%(args.dim, dim_max), debug=args.verbose)
    if args.literal_eq3: g = geometry.eq3_ratio(ns)
    else: g = geometry.growth_ratio(ns)
    limit = geometry.growth_limit()
    rows = [[int(n), float(gn), limit, abs(float(gn) - limit)] for n, gn in zip(ns, g)]
    return records.OutputRecord(["n", "g", "limit", "abs_error"], rows)

def GetFigure(args):
    """
    (nu, g) pairs of the growth ratio over a continuous dimension range
    """
    nu = np.linspace(args.min, args.max, args.points)
    common.MSG("Sweeping %s points in [%s, %s]"%(args.points, args.min, args.max), debug=args.verbose)
    g = geometry.continuous_ratio(nu)
    return records.OutputRecord(["nu", "g"], [[float(x), float(y)] for x, y in zip(nu, g)])

def GetConverge(args):
    """
    Convergence table with the fitted order and constant as footer
    """
    report = asymptotics.convergence_scan(args.dims)
    rows = [[row.n, row.g, row.abs_error, row.predicted] for row in report.rows]
    footer = (("fitted_order", report.fitted_order),
              ("fitted_constant", report.fitted_constant))
    return records.OutputRecord(["n", "g", "abs_error", "predicted"], rows, footer)

def GetPeak(args):
    """
    Dimension of largest volume at fixed radius
    """
    peak = asymptotics.peak_dimension(args.radius, args.n_max)
    if peak.at_window_edge:
        common.WARNING("Peak at n_max=%s; increase --n-max"%peak.n_max)
    return records.OutputRecord(["r", "n_max", "peak_n", "log_volume"],
                                [[peak.r, peak.n_max, peak.peak_n, peak.log_v_peak]])

def GetMC(args):
    """
    Monte Carlo volume estimate next to the analytic value
    """
    r = GetRadius(args)
    common.MSG("Sampling %s points in dimension %s"%(args.samples, args.dim), debug=args.verbose)
    est = montecarlo.mc_ball_volume(args.dim, r, args.samples, args.seed, workers=args.workers)
    analytic = VolumeCell(geometry.log_ball_volume(args.dim, r))
    if isinstance(analytic, float): deviation = est.volume_estimate - analytic
    else: deviation = float("nan")
    columns = ["n", "r", "samples", "seed", "hits", "volume_estimate",
               "std_error", "analytic_volume", "deviation"]
    row = [args.dim, float(r), est.samples, est.seed, est.hits, est.volume_estimate,
           est.std_error, analytic, deviation]
    return records.OutputRecord(columns, [row])

def GetTable(args):
    """
    Circumscribed family per dimension: sphere volume against the unit cube
    """
    ns = np.arange(args.min_dim, args.max_dim + 1)
    radii = geometry.circumscribed_radius(ns)
    log_v = geometry.circumscribed_log_volume(ns)
    g = geometry.growth_ratio(ns)
    rows = []
    for i in range(len(ns)):
        n = int(ns[i])
        rows.append([n, float(radii[i]), float(log_v[i]), VolumeCell(float(log_v[i])),
                     geometry.cube_volume(n), float(g[i])])
    return records.OutputRecord(["n", "r", "log_volume", "volume", "cube_volume", "growth_ratio"], rows)

def GetCheck(args):
    """
    Circumscription checks: vertices on the sphere, cube inside the ball
    """
    if args.dim <= montecarlo.VERTEX_MAX_DIM:
        vertex_dev = montecarlo.vertex_on_sphere_check(args.dim)
    else:
        common.WARNING("Skipping vertex enumeration above n=%s"%montecarlo.VERTEX_MAX_DIM)
        vertex_dev = float("nan")
    inside = montecarlo.cube_inside_ball_check(args.dim, args.samples, args.seed, workers=args.workers)
    return records.OutputRecord(["n", "vertex_max_deviation", "inside_fraction"],
                                [[args.dim, vertex_dev, inside]])

COMMANDS = {
    "volume": GetVolume,
    "ratio": GetRatio,
    "figure": GetFigure,
    "converge": GetConverge,
    "peak": GetPeak,
    "mc": GetMC,
    "table": GetTable,
    "check": GetCheck,
}

def ParseDims(value):
    """
    argparse type for a comma-separated list of integers
    """
    try:
        return [int(item) for item in value.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError("Expected comma-separated integers, got %s"%value)

def CheckArgs(parser, args):
    """
    Perform checks on user input that argparse cannot express

    Exit with a usage error (status 2) if checks fail
    """
    if args.command == "figure":
        if not (math.isfinite(args.min) and math.isfinite(args.max)):
            parser.error("--min and --max must be finite")
        if args.min <= 2:
            parser.error("--min must be > 2")
        if args.max <= args.min:
            parser.error("--max must be > --min")
        if args.points < 2:
            parser.error("--points must be >= 2")
    if args.command == "ratio" and args.dim_max is not None and args.dim_max < args.dim:
        parser.error("--dim-max must be >= --dim")
    if args.command == "table" and args.max_dim < args.min_dim:
        parser.error("--max-dim must be >= --min-dim")
    if args.command in ["mc", "check"] and args.workers < 1:
        parser.error("--workers must be >= 1")

def AddRadiusGroup(subparser):
    radius_group = subparser.add_mutually_exclusive_group(required=True)
    radius_group.add_argument("--radius", help="Sphere radius", type=float)
    radius_group.add_argument("--circumscribe", help="Use the radius sqrt(n)/2 circumscribing the unit cube", action="store_true")

def getargs(argv=None):
    parser = argparse.ArgumentParser(__doc__)
    common_parser = argparse.ArgumentParser(add_help=False)
    inout_group = common_parser.add_argument_group("Input/output")
    inout_group.add_argument("--format", help="Output format", choices=["csv", "json"], default="csv")
    inout_group.add_argument("--out", help="Name of output file. Use stdout for standard output.", type=str, default="stdout")
    debug_group = common_parser.add_argument_group("Debugging parameters")
    debug_group.add_argument("--verbose", help="Print out extra info", action="store_true")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    volume = subparsers.add_parser("volume", parents=[common_parser], help="Volume of an n-ball")
    volume.add_argument("--dim", help="Dimension n", type=int, required=True)
    AddRadiusGroup(volume)
    volume.add_argument("--log", help="Only output the log volume", action="store_true")
    volume.add_argument("--form", help="Formula used for the volume", choices=["closed", "product", "recurrence"], default="closed")

    ratio = subparsers.add_parser("ratio", parents=[common_parser], help="Growth ratio V_(n+1)/V_n of the circumscribed family")
    ratio.add_argument("--dim", help="Dimension n", type=int, required=True)
    ratio.add_argument("--dim-max", help="Also output every dimension up to this one", type=int)
    ratio.add_argument("--literal-eq3", help="Evaluate the printed ratio formula (equals V_n/V_(n-1))", action="store_true")

    figure = subparsers.add_parser("figure", parents=[common_parser], help="Growth ratio over a continuous dimension")
    figure.add_argument("--min", help="Smallest dimension (> 2)", type=float, default=DEFAULT_FIG_MIN)
    figure.add_argument("--max", help="Largest dimension", type=float, default=DEFAULT_FIG_MAX)
    figure.add_argument("--points", help="Number of points", type=int, default=DEFAULT_FIG_POINTS)

    converge = subparsers.add_parser("converge", parents=[common_parser], help="Convergence of the growth ratio to sqrt(pi e/2)")
    converge.add_argument("--dims", help="Comma-separated dimensions (at least 3, each >= 3)", type=ParseDims, default=ParseDims(DEFAULT_CONVERGE_DIMS))

    peak = subparsers.add_parser("peak", parents=[common_parser], help="Dimension of largest volume at fixed radius")
    peak.add_argument("--radius", help="Sphere radius", type=float, required=True)
    peak.add_argument("--n-max", help="Largest dimension scanned", type=int, default=DEFAULT_PEAK_NMAX)

    mc = subparsers.add_parser("mc", parents=[common_parser], help="Monte Carlo volume estimate")
    mc.add_argument("--dim", help="Dimension n", type=int, required=True)
    AddRadiusGroup(mc)
    mc_group = mc.add_argument_group("Sampling")
    mc_group.add_argument("--samples", help="Number of samples", type=int, default=DEFAULT_MC_SAMPLES)
    mc_group.add_argument("--seed", help="Random seed", type=int, default=DEFAULT_SEED)
    mc_group.add_argument("--workers", help="Number of threads", type=int, default=1)

    table = subparsers.add_parser("table", parents=[common_parser], help="Circumscribed sphere and unit cube volumes per dimension")
    table.add_argument("--min-dim", help="Smallest dimension", type=int, default=1)
    table.add_argument("--max-dim", help="Largest dimension", type=int, default=DEFAULT_TABLE_MAX)

    check = subparsers.add_parser("check", parents=[common_parser], help="Check the cube is circumscribed by the sphere")
    check.add_argument("--dim", help="Dimension n", type=int, required=True)
    check_group = check.add_argument_group("Sampling")
    check_group.add_argument("--samples", help="Number of samples", type=int, default=DEFAULT_CHECK_SAMPLES)
    check_group.add_argument("--seed", help="Random seed", type=int, default=DEFAULT_SEED)
    check_group.add_argument("--workers", help="Number of threads", type=int, default=1)

    args = parser.parse_args(argv)
    CheckArgs(parser, args)
    return args

def main(args):
    common.MSG("Running %s"%args.command, debug=args.verbose)
    try:
        record = COMMANDS[args.command](args)
    except common.DomainError as e:
        common.ERROR(str(e))
    try:
        records.WriteRecord(record, args.format, args.out)
    except OSError as e:
        common.ERROR("Could not write %s: %s"%(args.out, e))
    return 0

def run():
    args = getargs()
    retcode = main(args)
    sys.exit(retcode)

if __name__ == "__main__":
    run()
