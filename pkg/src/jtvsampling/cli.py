"""Command-line interface.

Exit codes: 0 success, 2 input / usage error, 3 theory violation (unqualified
plan, rank deficiency, reconstruction failure).
"""

import argparse
import json
import os
import sys

import numpy as np

from . import bandlimit, bench, fileio, generate, graphs, oracle, sampling, spectral

SEED_ENV = "JTV_SEED"

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_THEORY = 3


def _default_seed():
    return int(os.environ.get(SEED_ENV, "0"))


def _parse_pairs(text):
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        a, b = chunk.split(",")
        pairs.append((int(a), int(b)))
    if not pairs:
        raise ValueError("no pairs given")
    return frozenset(pairs)


def _load_pipeline(args, support):
    """Restricted bases and joint basis columns, either computed from the two
    graphs or injected from a basis file."""
    if getattr(args, "basis_file", None):
        ut_r, ug_r = fileio.load_basis_pair(args.basis_file)
        if ut_r.shape != (support.t_dim, support.k_t):
            raise ValueError(
                f"time basis shape {ut_r.shape} does not match support "
                f"({support.t_dim}, {support.k_t})"
            )
        if ug_r.shape != (support.g_dim, support.k_g):
            raise ValueError(
                f"graph basis shape {ug_r.shape} does not match support "
                f"({support.g_dim}, {support.k_g})"
            )
    else:
        if not getattr(args, "graph_t", None) or not getattr(args, "graph_g", None):
            raise ValueError("need --graph-t and --graph-g, or --basis-file")
        basis_t = spectral.eig_sym(graphs.laplacian(fileio.load_graph(args.graph_t)))
        basis_g = spectral.eig_sym(graphs.laplacian(fileio.load_graph(args.graph_g)))
        ut_r, ug_r = bandlimit.restrict_bases(basis_t, basis_g, support)
    uj = spectral.joint_columns_from_restricted(ut_r, ug_r, support)
    return ut_r, ug_r, uj


def cmd_gen_graph(args):
    seed = args.seed if args.seed is not None else _default_seed()
    if args.type == "cycle":
        g = graphs.cycle_graph(args.n)
    elif args.type == "star":
        g = graphs.star_graph(args.n, center=args.center)
    elif args.type == "path":
        g = graphs.path_graph(args.n)
    else:
        g = generate.random_connected_graph(
            args.n, np.random.default_rng(seed), p=args.p
        )
    fileio.save_graph(g, args.out)
    print(f"wrote graph with {g.n} vertices, {len(g.edges)} edges to {args.out}")
    return EXIT_OK


def cmd_gen_support(args):
    seed = args.seed if args.seed is not None else _default_seed()
    if args.pairs:
        support = bandlimit.SpectralSupport(
            t_dim=args.t, g_dim=args.n, pairs=_parse_pairs(args.pairs)
        )
    else:
        support = generate.random_support(
            args.t, args.n, np.random.default_rng(seed),
            k_t=args.kt, k_g=args.kg, k=args.k,
        )
    fileio.save_support(support, args.out)
    print(
        f"wrote support K={support.k} K_T={support.k_t} K_G={support.k_g} "
        f"to {args.out}"
    )
    return EXIT_OK


def cmd_gen_signal(args):
    seed = args.seed if args.seed is not None else _default_seed()
    support = fileio.load_support(args.support)
    ut_r, ug_r, _ = _load_pipeline(args, support)
    coeffs = generate.random_coeffs(support, np.random.default_rng(seed))
    x_mat = bandlimit.synth_from_restricted(ut_r, ug_r, support, coeffs)
    fileio.save_signal(x_mat, args.out)
    print(f"wrote {x_mat.shape[0]}x{x_mat.shape[1]} signal to {args.out}")
    return EXIT_OK


def cmd_analyze(args):
    x_mat = fileio.load_signal(args.signal)
    basis_t = spectral.eig_sym(graphs.laplacian(fileio.load_graph(args.graph_t)))
    basis_g = spectral.eig_sym(graphs.laplacian(fileio.load_graph(args.graph_g)))
    xf = spectral.jft(basis_t, basis_g, x_mat)
    support = bandlimit.detect_support(xf, eps=args.eps)
    print(
        f"K={support.k} K_T={support.k_t} K_G={support.k_g} "
        f"sbl={support.is_sbl()}"
    )
    if args.out:
        fileio.save_support(support, args.out)
        print(f"wrote support to {args.out}")
    return EXIT_OK


def cmd_plan(args):
    support = fileio.load_support(args.support)
    ut_r, ug_r, uj = _load_pipeline(args, support)
    plan, report = sampling.critical_sampling_set(ut_r, ug_r, uj, support)
    fileio.save_plan(plan, report, args.out)
    lines = [
        f"vertex {v}: " + " ".join(str(t) for t in ts)
        for v, ts in sorted(plan.schedule().items())
    ]
    if args.schedule:
        with open(args.schedule, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    else:
        for line in lines:
            print(line)
    print(
        f"wrote plan |S|={plan.size} |S_T|={len(plan.proj_t)} "
        f"|S_G|={len(plan.proj_g)} critical={report.critical} to {args.out}"
    )
    return EXIT_OK


def cmd_sample(args):
    x_mat = fileio.load_signal(args.signal)
    plan = fileio.load_plan(args.plan)
    values = sampling.sample(x_mat, plan)
    fileio.save_samples(plan, values, args.out)
    print(f"wrote {len(values)} samples to {args.out}")
    return EXIT_OK


def cmd_reconstruct(args):
    support = fileio.load_support(args.support)
    plan = fileio.load_plan(args.plan)
    points, values = fileio.load_samples(args.samples)
    if points != list(plan.sorted_samples):
        raise ValueError("samples file does not match the plan's sample points")
    _, _, uj = _load_pipeline(args, support)
    x_rec = sampling.reconstruct(values, plan, uj, support)
    fileio.save_signal(x_rec, args.out)
    print(f"wrote reconstruction to {args.out}")
    if args.reference:
        x_ref = fileio.load_signal(args.reference)
        if x_ref.shape != x_rec.shape:
            raise ValueError("reference signal shape does not match")
        err = float(np.max(np.abs(x_rec - x_ref)))
        scale = float(np.linalg.norm(x_ref))
        print(f"max-abs-error {err:.3e}")
        if err >= 1e-6 * scale:
            print("reconstruction error above tolerance", file=sys.stderr)
            return EXIT_THEORY
    return EXIT_OK


def cmd_verify(args):
    support = fileio.load_support(args.support)
    ut_r, ug_r, uj = _load_pipeline(args, support)
    plan, report = sampling.critical_sampling_set(ut_r, ug_r, uj, support)
    out = {
        "K": report.k,
        "K_T": report.k_t,
        "K_G": report.k_g,
        "rank": report.rank,
        "qualified": report.qualified,
        "critical": report.critical,
    }
    code = EXIT_OK if report.critical else EXIT_THEORY
    if args.exhaustive:
        max_size = args.max_size if args.max_size is not None else support.k
        ex = oracle.exhaustive_check(uj, support, max_size=max_size)
        out["exhaustive"] = {
            "min_qualified_size": ex.min_qualified_size,
            "count_qualified_at_k": ex.count_qualified_at_k,
            "violations": [list(v) for v in ex.violations],
            "exists_critical_set": ex.exists_critical_set,
        }
        mono = oracle.check_monotonicity(
            uj, args.trials, rng=np.random.default_rng(_default_seed())
        )
        out["monotone"] = mono
        if ex.violations or ex.min_qualified_size != support.k or not mono:
            code = EXIT_THEORY
    text = json.dumps(out, sort_keys=True, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(text)
    return code


def cmd_bench(args):
    seed = args.seed if args.seed is not None else _default_seed()
    if args.support:
        support = fileio.load_support(args.support)
        ut_r, ug_r, uj = _load_pipeline(args, support)
        rows = [bench.benchmark_case(ut_r, ug_r, uj, support, repeats=args.repeats)]
    else:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
        if not sizes:
            raise ValueError("no sizes given")
        rows = bench.benchmark(sizes, seed=seed, repeats=args.repeats)
    bench.write_bench_csv(rows, args.out)
    for r in rows:
        print(
            f"T=N={r.t_dim} K={r.k} samples {r.samples_critical} vs "
            f"{r.samples_separate} factored {r.time_factored:.4f}s "
            f"naive {r.time_naive:.4f}s ratio {r.ratio:.3f}"
        )
    print(f"wrote benchmark table to {args.out}")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="jtv",
        description="Sampling and exact reconstruction of bandlimited "
        "time-vertex graph signals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate graphs, supports, and signals")
    gen_sub = gen.add_subparsers(dest="what", required=True)

    gg = gen_sub.add_parser("graph", help="write a graph JSON file")
    gg.add_argument("--type", choices=["cycle", "star", "path", "er"], required=True)
    gg.add_argument("--n", type=int, required=True)
    gg.add_argument("--center", type=int, default=0, help="star center (0-based)")
    gg.add_argument("--p", type=float, default=0.5, help="edge probability for er")
    gg.add_argument("--seed", type=int, default=None)
    gg.add_argument("--out", "-o", required=True)
    gg.set_defaults(func=cmd_gen_graph)

    gs = gen_sub.add_parser("support", help="write a spectral support JSON file")
    gs.add_argument("--t", type=int, required=True, help="time length T")
    gs.add_argument("--n", type=int, required=True, help="vertex count N")
    gs.add_argument("--pairs", help='explicit pairs "jt,jg;jt,jg;..." (0-based)')
    gs.add_argument("--kt", type=int, default=None)
    gs.add_argument("--kg", type=int, default=None)
    gs.add_argument("--k", type=int, default=None)
    gs.add_argument("--seed", type=int, default=None)
    gs.add_argument("--out", "-o", required=True)
    gs.set_defaults(func=cmd_gen_support)

    gx = gen_sub.add_parser("signal", help="synthesize a bandlimited signal CSV")
    gx.add_argument("--graph-t", required=False)
    gx.add_argument("--graph-g", required=False)
    gx.add_argument("--support", required=True)
    gx.add_argument("--basis-file", default=None)
    gx.add_argument("--seed", type=int, default=None)
    gx.add_argument("--out", "-o", required=True)
    gx.set_defaults(func=cmd_gen_signal)

    an = sub.add_parser("analyze", help="detect the spectral support of a signal")
    an.add_argument("--graph-t", required=True)
    an.add_argument("--graph-g", required=True)
    an.add_argument("--signal", required=True)
    an.add_argument("--eps", type=float, default=1e-8)
    an.add_argument("--out", "-o", default=None)
    an.set_defaults(func=cmd_analyze)

    pl = sub.add_parser("plan", help="construct a critical sampling plan")
    pl.add_argument("--graph-t")
    pl.add_argument("--graph-g")
    pl.add_argument("--support", required=True)
    pl.add_argument("--basis-file", default=None)
    pl.add_argument("--schedule", default=None, help="write per-vertex schedule here")
    pl.add_argument("--out", "-o", required=True)
    pl.set_defaults(func=cmd_plan)

    sm = sub.add_parser("sample", help="sample a signal at a plan's points")
    sm.add_argument("--signal", required=True)
    sm.add_argument("--plan", required=True)
    sm.add_argument("--out", "-o", required=True)
    sm.set_defaults(func=cmd_sample)

    rc = sub.add_parser("reconstruct", help="recover a signal from samples")
    rc.add_argument("--graph-t")
    rc.add_argument("--graph-g")
    rc.add_argument("--support", required=True)
    rc.add_argument("--plan", required=True)
    rc.add_argument("--samples", required=True)
    rc.add_argument("--basis-file", default=None)
    rc.add_argument("--reference", default=None, help="original signal for error check")
    rc.add_argument("--out", "-o", required=True)
    rc.set_defaults(func=cmd_reconstruct)

    vf = sub.add_parser("verify", help="check plan qualification, optionally by enumeration")
    vf.add_argument("--graph-t")
    vf.add_argument("--graph-g")
    vf.add_argument("--support", required=True)
    vf.add_argument("--basis-file", default=None)
    vf.add_argument("--exhaustive", action="store_true")
    vf.add_argument("--max-size", type=int, default=None)
    vf.add_argument("--trials", type=int, default=200, help="monotonicity trials")
    vf.add_argument("--out", "-o", default=None)
    vf.set_defaults(func=cmd_verify)

    bn = sub.add_parser("bench", help="time factored vs naive row selection")
    bn.add_argument("--sizes", default="16,24,32", help="comma-separated n with T=N=n")
    bn.add_argument("--graph-t")
    bn.add_argument("--graph-g")
    bn.add_argument("--support", default=None, help="bench one explicit instance")
    bn.add_argument("--basis-file", default=None)
    bn.add_argument("--repeats", type=int, default=3)
    bn.add_argument("--seed", type=int, default=None)
    bn.add_argument("--out", "-o", required=True)
    bn.set_defaults(func=cmd_bench)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (sampling.UnqualifiedPlanError, sampling.IllConditionedError,
            sampling.RankDeficiencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_THEORY
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
