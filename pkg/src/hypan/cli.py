"""Command-line front end.

Exit codes: 0 success, 1 a requested expectation failed (e.g.
--expect-ptolemy on a non-Ptolemy space), 2 input or usage errors.
Input errors print a machine-readable JSON object on standard error.
"""

import argparse
import json
import sys
import time

import numpy as np

from . import io, report
from .checks import check_metric_axioms, lemma22_defect, ptolemy_defect
from .errors import HypanError, InvalidDimension
from .hyperbolicity import EXHAUSTIVE, analyze, bolicity_r_min, sampled
from .moebius import distortion_check, make_moebius
from .spaces import build_metric_from_points, gen_random_ball, gen_tree_metric
from .transforms import BoundarySet, TransformSpec, apply_transform

CHECK_NAMES = ("metric", "ptolemy", "lemma22", "delta", "epsilon", "bolicity")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hypan", description="finite metric space hyperbolicity analyzer"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a test space")
    gen.add_argument("--kind", choices=["ball", "tree"], required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--dim", type=int, default=3)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=cmd_gen)

    tr = sub.add_parser("transform", help="apply a metric transform")
    tr.add_argument("--in", dest="input", required=True)
    tr.add_argument("--kind", choices=["log", "sp", "Sp", "chi", "tau", "hdc"],
                    required=True)
    tr.add_argument("--base", type=int, default=None)
    tr.add_argument("--c", type=float, default=2.0)
    tr.add_argument("--boundary", default=None)
    tr.add_argument("--out", required=True)
    tr.set_defaults(func=cmd_transform)

    an = sub.add_parser("analyze", help="run checks and write a JSON report")
    an.add_argument("--in", dest="input", required=True)
    an.add_argument("--checks", default="metric,ptolemy,delta,epsilon")
    an.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    an.add_argument("--samples", type=int, default=200000)
    an.add_argument("--seed", type=int, default=0)
    an.add_argument("--tol", type=float, default=1e-9)
    an.add_argument("--base", type=int, default=0, help="base index for lemma22")
    an.add_argument("--r", type=float, default=1.0)
    an.add_argument("--eta", type=float, default=0.1)
    an.add_argument("--expect-ptolemy", action="store_true")
    an.add_argument("--expect-metric", action="store_true")
    an.add_argument("--report", required=True)
    an.set_defaults(func=cmd_analyze)

    mo = sub.add_parser("moebius", help="verify the chi-distortion bounds")
    mo.add_argument("--a", required=True, help="comma-separated coordinates")
    mo.add_argument("--q-seed", type=int, default=0)
    mo.add_argument("--pairs", type=int, default=500)
    mo.add_argument("--pair-seed", type=int, default=0)
    mo.add_argument("--tol", type=float, default=1e-10)
    mo.add_argument("--report", required=True)
    mo.set_defaults(func=cmd_moebius)
    return parser


def _load_space(path):
    if path.endswith(".json"):
        return build_metric_from_points(io.load_point_cloud(path))
    return io.load_distance_matrix(path)


def cmd_gen(args):
    if args.kind == "ball":
        cloud = gen_random_ball(args.n, args.dim, args.seed)
        io.save_point_cloud(cloud, args.out)
    else:
        space = gen_tree_metric(args.n, args.seed)
        io.save_distance_matrix(space, args.out)
    return 0


def cmd_transform(args):
    spec = TransformSpec(args.kind, args.base, args.c)
    if args.kind == "hdc":
        if args.boundary is None:
            raise InvalidDimension("hdc requires --boundary")
        cloud = io.load_point_cloud(args.input)
        bcloud = io.load_point_cloud(args.boundary)
        boundary = BoundarySet(bcloud.dim, bcloud.points)
        out = apply_transform(spec, cloud=cloud, boundary=boundary)
    else:
        out = apply_transform(spec, space=_load_space(args.input))
    io.save_distance_matrix(out, args.out)
    return 0


def cmd_analyze(args):
    t0 = time.monotonic()
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in checks if c not in CHECK_NAMES]
    if unknown:
        raise InvalidDimension(f"unknown checks: {unknown}")
    space = _load_space(args.input)
    mode = EXHAUSTIVE if args.mode == "exhaustive" else sampled(args.samples, args.seed)

    doc = report.new_document(report.digest_file(args.input))
    doc.space_summary = {
        "n": space.n,
        "provenance": space.provenance,
        "excluded_base": space.excluded_base,
    }
    doc.tolerances = {"check_tol": args.tol, "root_tol": 1e-12}

    failed = False
    if "metric" in checks:
        doc.axiom = check_metric_axioms(space, args.tol)
        metric_ok = (doc.axiom.symmetric and doc.axiom.identity_ok
                     and doc.axiom.worst_triangle_violation <= args.tol
                     and doc.axiom.perimeter_ok)
        if args.expect_metric and not metric_ok:
            failed = True
    if "ptolemy" in checks:
        doc.ptolemy = ptolemy_defect(space, args.tol)
        if args.expect_ptolemy and not doc.ptolemy.is_ptolemy:
            failed = True
    if "lemma22" in checks:
        value, witness = lemma22_defect(space, args.base)
        doc.lemma22 = (value, witness, args.base)
    if "delta" in checks or "epsilon" in checks:
        doc.hyperbolicity = analyze(space, mode, args.tol)
    if "bolicity" in checks:
        doc.bolicity = bolicity_r_min(space, args.r, args.eta)

    report.write_report(doc, args.report)
    print(f"duration: {time.monotonic() - t0:.3f}s", file=sys.stderr)
    return 1 if failed else 0


def cmd_moebius(args):
    t0 = time.monotonic()
    try:
        a = np.array([float(v) for v in args.a.split(",")], dtype=float)
    except ValueError:
        raise InvalidDimension(f"--a must be comma-separated numbers, got {args.a!r}")
    mmap = make_moebius(a, seed=args.q_seed)
    pairs = sample_ball_pairs(a.size, args.pairs, args.pair_seed)
    result = distortion_check(mmap, pairs, args.tol)

    params = {"a": list(a), "q_seed": args.q_seed,
              "pairs": args.pairs, "pair_seed": args.pair_seed}
    doc = report.new_document(
        report.digest_bytes(json.dumps(params, sort_keys=True).encode())
    )
    doc.distortion = result
    doc.tolerances = {"check_tol": args.tol}
    report.write_report(doc, args.report)
    print(f"duration: {time.monotonic() - t0:.3f}s", file=sys.stderr)
    return 0


def sample_ball_pairs(dim, count, seed, min_norm=1e-6):
    """Seeded point pairs in the punctured unit ball, origin-avoiding."""
    rng = np.random.default_rng(seed)

    def one():
        while True:
            v = rng.standard_normal(dim)
            nv = np.linalg.norm(v)
            if nv == 0.0:
                continue
            p = v / nv * rng.random() ** (1.0 / dim)
            if np.linalg.norm(p) >= min_norm:
                return p

    pairs = []
    while len(pairs) < count:
        x, y = one(), one()
        if np.linalg.norm(x - y) > 0.0:
            pairs.append((x, y))
    return pairs


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HypanError as exc:
        json.dump({"error": type(exc).__name__, "message": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
