"""Command line front end.

  structbe compute    --manifest M --solution S [--dump-perturbations DIR]
  structbe verify     --manifest M --solution S --perturbations DIR
  structbe experiment --name ex72 --sizes 8:4:100 --seed N --out CSV
  structbe wrls       --manifest M --solution S

Exit codes: 0 success, 2 infeasible BE system, 1 input error.
"""

import argparse
import os
import sys as _sys

import numpy as np

from . import experiments
from .backward_error import (
    PerturbationSet,
    compute_be,
    rigal_gaches,
    verify_perturbation,
)
from .dense import ShapeError
from .fileio import (
    ManifestError,
    format_report,
    load_solution,
    load_system,
    read_manifest,
    read_matrix,
    read_vector,
    write_csv,
    write_matrix,
    write_vector,
)
from .structured import StructureViolationError
from .wrls import WRLSProblem, compute_zeta

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INFEASIBLE = 2


class InputError(Exception):
    pass


def _load(manifest_path, solution_path):
    manifest = read_manifest(manifest_path)
    sys_, weights, cls, sparsity = load_system(manifest)
    x, y = load_solution(solution_path, sys_.n, sys_.m)
    return manifest, sys_, weights, cls, sparsity, x, y


def cmd_compute(args):
    _, sys_, weights, cls, sparsity, x, y = _load(args.manifest, args.solution)
    dense_rep = compute_be(sys_, x, y, weights, cls, sparsity=False)
    sparse_rep = compute_be(sys_, x, y, weights, cls, sparsity=True)
    rep = sparse_rep if sparsity else dense_rep
    entries = {
        "class": cls,
        "sparsity": sparsity,
        "eta_rigal_gaches": rigal_gaches(sys_, x, y),
        "eta_dense": dense_rep.eta,
        "eta_sparse": sparse_rep.eta,
        "eta": rep.eta,
        "feasible": rep.feasible,
        "weighted_norm": rep.weighted_norm,
        "verify_residual": rep.verify_residual,
        "coefficient_rank": rep.coefficient_rank,
        "dA_fro": float(np.linalg.norm(rep.perturbations.dA, "fro")),
        "dB_fro": float(np.linalg.norm(rep.perturbations.dB, "fro")),
        "dC_fro": float(np.linalg.norm(rep.perturbations.dC, "fro")),
        "df_2": float(np.linalg.norm(rep.perturbations.df)),
        "dg_2": float(np.linalg.norm(rep.perturbations.dg)),
    }
    text = format_report("structbe compute", entries)
    print(text, end="")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    if args.dump_perturbations:
        os.makedirs(args.dump_perturbations, exist_ok=True)
        p = rep.perturbations
        write_matrix(os.path.join(args.dump_perturbations, "dA.mtx"), p.dA)
        write_matrix(os.path.join(args.dump_perturbations, "dB.mtx"), p.dB)
        write_matrix(os.path.join(args.dump_perturbations, "dC.mtx"), p.dC)
        write_vector(os.path.join(args.dump_perturbations, "df.txt"), p.df)
        write_vector(os.path.join(args.dump_perturbations, "dg.txt"), p.dg)
    return EXIT_OK if rep.feasible else EXIT_INFEASIBLE


def cmd_verify(args):
    _, sys_, weights, cls, sparsity, x, y = _load(args.manifest, args.solution)
    d = args.perturbations
    pert = PerturbationSet(
        dA=read_matrix(os.path.join(d, "dA.mtx")),
        dB=read_matrix(os.path.join(d, "dB.mtx")),
        dC=read_matrix(os.path.join(d, "dC.mtx")),
        df=read_vector(os.path.join(d, "df.txt")),
        dg=read_vector(os.path.join(d, "dg.txt")),
    )
    # perturbation files round-trip through text, so allow tiny deviations
    res = verify_perturbation(
        sys_, x, y, pert, weights, structure_class=cls, sparsity=sparsity,
        structure_tol=1e-13 * max(1.0, float(np.abs(pert.dB).max(initial=0.0))),
    )
    entries = {
        "residual_norm": res.residual_norm,
        "structure_ok": res.structure_ok,
        "sparsity_ok": res.sparsity_ok,
        "weighted_norm": res.weighted_norm,
    }
    print(format_report("structbe verify", entries), end="")
    return EXIT_OK


def _parse_sizes(spec):
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise InputError(f"bad size range {spec!r}, expected start:step:stop")
        start, step, stop = (int(p) for p in parts)
        return list(range(start, stop + 1, step))
    return [int(p) for p in spec.split(",") if p]


def cmd_experiment(args):
    name = args.name
    if name == "ex71":
        vals = experiments.run_ex71()
        print(format_report("structbe experiment ex71", vals), end="")
        if args.out:
            write_csv(args.out, sorted(vals), [[vals[k] for k in sorted(vals)]])
        return EXIT_OK
    if name == "ex56":
        vals = experiments.run_ex56()
        print(format_report("structbe experiment ex56", vals), end="")
        if args.out:
            write_csv(args.out, sorted(vals), [[vals[k] for k in sorted(vals)]])
        return EXIT_OK if vals["feasible"] else EXIT_INFEASIBLE
    sizes = _parse_sizes(args.sizes)
    if any(n <= 0 for n in sizes):
        raise InputError("sizes must be positive")
    if name == "ex72":
        rows = experiments.run_ex72(sizes, args.seed)
        header = experiments.EX72_HEADER
    elif name == "ex73":
        rows = experiments.run_ex73(sizes, args.seed)
        header = experiments.EX73_HEADER
    else:
        raise InputError(f"unknown experiment {name!r}")
    out = args.out or f"{name}.csv"
    write_csv(out, header, rows)
    print(",".join(header))
    for row in rows:
        print(",".join(f"{v:.16g}" if isinstance(v, float) else str(v) for v in row))
    return EXIT_OK


def cmd_wrls(args):
    manifest = read_manifest(args.manifest)
    for key in ("w_path", "k_path", "f_path", "lambda", "k_structure", "w2", "w4"):
        if key not in manifest:
            raise InputError(f"wrls manifest is missing {key!r}")
    base = manifest["_dir"]
    p = WRLSProblem(
        W=read_matrix(os.path.join(base, manifest["w_path"])),
        K=read_matrix(os.path.join(base, manifest["k_path"])),
        lam=float(manifest["lambda"]),
        f=read_vector(os.path.join(base, manifest["f_path"])),
        k_kind=manifest["k_structure"],
    )
    u = read_vector(args.solution)
    if u.size != p.n + p.m:
        raise InputError(f"solution length {u.size} != n+m = {p.n + p.m}")
    rep = compute_zeta(p, u[: p.n], u[p.n :], float(manifest["w2"]), float(manifest["w4"]))
    entries = {
        "zeta": rep.zeta,
        "feasible": rep.feasible,
        "dK_fro": float(np.linalg.norm(rep.dK, "fro")),
        "df_2": float(np.linalg.norm(rep.df)),
    }
    print(format_report("structbe wrls", entries), end="")
    return EXIT_OK if rep.feasible else EXIT_INFEASIBLE


def build_parser():
    parser = argparse.ArgumentParser(prog="structbe")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="structured backward error of a saddle system")
    pc.add_argument("--manifest", required=True)
    pc.add_argument("--solution", required=True)
    pc.add_argument("--dump-perturbations", default=None)
    pc.add_argument("--out", default=None)
    pc.set_defaults(func=cmd_compute)

    pv = sub.add_parser("verify", help="check a perturbation set against a system")
    pv.add_argument("--manifest", required=True)
    pv.add_argument("--solution", required=True)
    pv.add_argument("--perturbations", required=True)
    pv.set_defaults(func=cmd_verify)

    pe = sub.add_parser("experiment", help="run a named experiment")
    pe.add_argument("--name", required=True, choices=("ex71", "ex72", "ex73", "ex56"))
    pe.add_argument("--sizes", default="8:4:100")
    pe.add_argument("--seed", type=int, default=0)
    pe.add_argument("--out", default=None)
    pe.set_defaults(func=cmd_experiment)

    pw = sub.add_parser("wrls", help="structured BE of a WRLS stationary pair")
    pw.add_argument("--manifest", required=True)
    pw.add_argument("--solution", required=True)
    pw.set_defaults(func=cmd_wrls)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (
        InputError,
        ManifestError,
        ShapeError,
        StructureViolationError,
        ValueError,
        OSError,
    ) as exc:
        print(f"structbe: error: {exc}", file=_sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
