"""Command-line front end.

Subcommands: mult, kostant, qweight, brylinski, verify, kahler-check.
Output is deterministic for a fixed invocation; exit codes are 0
(success), 1 (input error), 2 (internal invariant violation).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import qanalog, roots, semiinfinite, verma
from .errors import InternalInconsistency, KmbrylError
from .gcm import validate_gcm
from .qpoly import QPoly


class InputError(ValueError):
    pass


def _frac(text):
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError):
        raise InputError("cannot parse rational %r" % (text,))


def load_gcm(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError("gcm: cannot read %s (%s)" % (path, exc))
    except json.JSONDecodeError as exc:
        raise InputError("gcm: %s is not valid JSON (%s)" % (path, exc))
    if not isinstance(data, dict) or "matrix" not in data:
        raise InputError('gcm: expected {"matrix": [[...]], "symmetrizer": [...]?}')
    sym = data.get("symmetrizer")
    if sym is not None:
        sym = [_frac(x) for x in sym]
    return validate_gcm(data["matrix"], sym)


def parse_weight(gcm, text):
    """Weight literal: JSON object, or the (alpha,h,n) affine sl2 triple."""
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError("weight: invalid JSON (%s)" % exc)
        cv = [_frac(x) for x in data.get("coroot_values", [])]
        if "d_value" in data:
            sv = [_frac(data["d_value"])]
        else:
            sv = [_frac(x) for x in data.get("scaling_values", [])]
        try:
            return gcm.weight(cv, sv)
        except ValueError as exc:
            raise InputError("weight: %s" % exc)
    parts = [p for p in text.replace("(", "").replace(")", "").split(",") if p]
    if gcm.n == 2 and gcm.corank == 1 and len(parts) == 3:
        a, h, nn = (_frac(p) for p in parts)
        # (alpha, h, n): lam(alpha1_vee) = alpha, lam(alpha0_vee) = h - alpha
        return gcm.weight((h - a, a), (nn,))
    raise InputError(
        "weight: expected JSON literal or an (alpha,h,n) triple for rank-2 affine"
    )


def parse_root(gcm, text):
    text = text.strip()
    try:
        if text.startswith("["):
            vals = json.loads(text)
        else:
            vals = [int(p) for p in text.replace("(", "").replace(")", "").split(",")]
        beta = tuple(int(v) for v in vals)
    except (ValueError, json.JSONDecodeError):
        raise InputError("beta/box: expected comma-separated integers")
    if len(beta) != gcm.n:
        raise InputError("beta/box: expected %d coordinates" % gcm.n)
    if any(x < 0 for x in beta):
        raise InputError("beta/box: coordinates must be >= 0 (Q+ cone)")
    return beta


def weight_json(w):
    out = {"coroot_values": [str(v) for v in w.coroot_values]}
    if len(w.scaling_values) == 1:
        out["d_value"] = str(w.scaling_values[0])
    elif w.scaling_values:
        out["scaling_values"] = [str(v) for v in w.scaling_values]
    return out


def _emit(args, obj, tsv_rows=None):
    if args.format == "tsv" and tsv_rows is not None:
        for row in tsv_rows:
            print("\t".join(str(x) for x in row))
    else:
        print(json.dumps(obj, sort_keys=True, separators=(", ", ": ")))


# -- memo table persistence ---------------------------------------------------


def _cache_path(cache_dir, gcm):
    return os.path.join(cache_dir, "roots-%s.json" % gcm.key()[:16])


def load_cached_table(cache_dir, gcm):
    path = _cache_path(cache_dir, gcm)
    if not os.path.exists(path):
        return None
    try:
        with open(path) as fh:
            data = json.load(fh)
        return roots.RootTable.from_json(gcm, data)
    except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError):
        print("warning: ignoring corrupt root-table cache %s" % path, file=sys.stderr)
        return None


def save_cached_table(cache_dir, table):
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_path(cache_dir, table.gcm)
    with open(path, "w") as fh:
        json.dump(table.to_json(), fh, sort_keys=True)


def root_table(gcm, box, cache_dir):
    """Root table covering box, honoring the persistent cache if given."""
    if cache_dir:
        cached = load_cached_table(cache_dir, gcm)
        if cached is not None and cached.dominates(box):
            return cached
        grow = box
        if cached is not None:
            grow = tuple(max(a, b) for a, b in zip(box, cached.box))
        table = roots.positive_roots_with_mult(gcm, grow)
        save_cached_table(cache_dir, table)
        return table
    return roots.positive_roots_with_mult(gcm, box)


# -- subcommands ---------------------------------------------------------------


def cmd_mult(args, gcm):
    beta = parse_root(gcm, args.beta)
    if args.cache:
        table = root_table(gcm, beta, args.cache)
        m = table.entries.get(beta, 0)
    else:
        m = roots.peterson_mult(gcm, beta)
    _emit(args, {"beta": list(beta), "mult": m}, tsv_rows=[list(beta) + [m]])


def cmd_kostant(args, gcm):
    beta = parse_root(gcm, args.beta)
    box = parse_root(gcm, args.box) if args.box else beta
    table = root_table(gcm, tuple(max(a, b) for a, b in zip(beta, box)), args.cache)
    poly = qanalog.kostant_partition(beta, table)
    _emit(
        args,
        {"beta": list(beta), "K": poly.to_pairs()},
        tsv_rows=[[e, c] for e, c in poly.to_pairs()],
    )


def cmd_qweight(args, gcm):
    lam = parse_weight(gcm, args.lam)
    mu = parse_weight(gcm, args.mu)
    poly = qanalog.q_multiplicity(lam, mu, gcm)
    _emit(
        args,
        {"lambda": weight_json(lam), "mu": weight_json(mu), "m": poly.to_pairs()},
        tsv_rows=[[e, c] for e, c in poly.to_pairs()],
    )


def _require_affine_sl2(gcm):
    if gcm != verma.A1_AFFINE:
        raise InputError(
            "brylinski/verify require the affine sl2 GCM [[2,-2],[-2,2]]"
        )


def _brylinski_report(gcm, lam, mu):
    model = verma.AffineSL2Module(lam)
    m = qanalog.q_multiplicity(lam, mu, gcm)
    pe = verma.brylinski_e(lam, mu, model)
    ps = verma.brylinski_s(lam, mu, model)
    return {
        "lambda": weight_json(lam),
        "mu": weight_json(mu),
        "dim": int(m(1)),
        "e_poincare": pe.poincare.to_pairs(),
        "s_poincare": ps.poincare.to_pairs(),
        "m": m.to_pairs(),
        "theorem_holds": ps.poincare == m,
    }


def cmd_brylinski(args, gcm):
    _require_affine_sl2(gcm)
    lam = parse_weight(gcm, args.lam)
    mu = parse_weight(gcm, args.mu)
    if not gcm.is_dominant(lam):
        raise InputError("lambda must be dominant")
    rep = _brylinski_report(gcm, lam, mu)
    _emit(
        args,
        rep,
        tsv_rows=[
            [
                json.dumps(rep["lambda"]),
                json.dumps(rep["mu"]),
                rep["dim"],
                json.dumps(rep["e_poincare"]),
                json.dumps(rep["s_poincare"]),
                json.dumps(rep["m"]),
                rep["theorem_holds"],
            ]
        ],
    )


def dominant_grid(gcm, level_max, delta_max):
    """(lam, mu) pairs: dominant integral lam (d-value 0, level <= level_max),
    dominant mu in wt L(lam) with lam - mu of delta-coefficient <= delta_max.

    Membership in wt L(lam) is checked with the Freudenthal recurrence; it
    only bites at level 0, where L(0) is trivial but mu = -k delta is still
    dominant with lam - mu in Q+.
    """
    pairs = []
    for lev in range(level_max + 1):
        for a1 in range(lev + 1):
            lam = gcm.weight((lev - a1, a1), (0,))
            bound = delta_max + lev  # |k0 - k1| <= lev/2 for dominant mu
            for k0 in range(bound + 1):
                for k1 in range(bound + 1):
                    if min(k0, k1) > delta_max:
                        continue
                    mu = gcm.sub_root(lam, (k0, k1), sign=-1)
                    if not gcm.is_dominant(mu):
                        continue
                    if qanalog.freudenthal_dim(lam, mu, gcm) == 0:
                        continue
                    pairs.append((lam, mu, (k0, k1)))
    return pairs


def cmd_verify(args, gcm):
    _require_affine_sl2(gcm)
    reports = []
    all_hold = True
    for lam, mu, _beta in dominant_grid(gcm, args.level, args.depth):
        rep = _brylinski_report(gcm, lam, mu)
        all_hold = all_hold and rep["theorem_holds"]
        reports.append(rep)
    obj = {
        "level_max": args.level,
        "delta_max": args.depth,
        "pairs": len(reports),
        "all_hold": all_hold,
        "reports": reports,
    }
    _emit(
        args,
        obj,
        tsv_rows=[
            [
                json.dumps(r["lambda"]),
                json.dumps(r["mu"]),
                r["dim"],
                json.dumps(r["s_poincare"]),
                json.dumps(r["m"]),
                r["theorem_holds"],
            ]
            for r in reports
        ],
    )
    if not all_hold:
        raise InternalInconsistency("Heisenberg Poincare series != q-multiplicity")


def cmd_kahler_check(args, gcm):
    alg = semiinfinite.AffineLoopAlgebra(args.rank)
    rows = kahler_rows = semiinfinite.kahler_check(alg, args.depth)
    ok = all(r[4] for r in rows)
    obj = {
        "rank": args.rank,
        "depth": args.depth,
        "all_equal": ok,
        "rows": [
            {"degree": d, "vector": lbl, "lhs": str(l), "rhs": str(r), "equal": eq}
            for d, lbl, l, r, eq in kahler_rows
        ],
    }
    _emit(
        args,
        obj,
        tsv_rows=[[d, lbl, l, r, "pass" if eq else "FAIL"] for d, lbl, l, r, eq in rows],
    )
    if not ok:
        raise InternalInconsistency("cocycle pairing mismatch")


def build_parser():
    p = argparse.ArgumentParser(
        prog="kmbryl",
        description="Exact q-analogs of weight multiplicity and Brylinski "
        "filtrations for symmetrizable Kac-Moody algebras.",
    )
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, gcm_required=True):
        sp.add_argument("--gcm", required=gcm_required, help="GCM JSON file")
        sp.add_argument("--cache", default=None, help="root-table cache directory")

    sp = sub.add_parser("mult", help="root multiplicity by Peterson's recurrence")
    common(sp)
    sp.add_argument("--beta", required=True)
    sp.set_defaults(func=cmd_mult)

    sp = sub.add_parser("kostant", help="q-weighted Kostant partition count")
    common(sp)
    sp.add_argument("--beta", required=True)
    sp.add_argument("--box", default=None)
    sp.set_defaults(func=cmd_kostant)

    sp = sub.add_parser("qweight", help="q-analog of weight multiplicity")
    common(sp)
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--mu", required=True)
    sp.set_defaults(func=cmd_qweight)

    sp = sub.add_parser("brylinski", help="both filtration Poincare series (affine sl2)")
    common(sp)
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--mu", required=True)
    sp.set_defaults(func=cmd_brylinski)

    sp = sub.add_parser("verify", help="Heisenberg Poincare = q-analog over a grid")
    common(sp)
    sp.add_argument("--level", type=int, default=3, help="max level of lambda")
    sp.add_argument("--depth", type=int, default=3, help="max delta-coefficient")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("kahler-check", help="semi-infinite cocycle trace check")
    sp.add_argument("--rank", type=int, choices=(1, 2), default=1)
    sp.add_argument("--depth", type=int, required=True)
    sp.set_defaults(func=cmd_kahler_check)

    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.func is cmd_kahler_check:
            gcm = None
        else:
            gcm = load_gcm(args.gcm)
            if args.command == "verify" and (args.level < 0 or args.depth < 0):
                raise InputError("level and depth caps must be non-negative")
        args.func(args, gcm)
    except (InputError, KmbrylError) as exc:
        if isinstance(exc, InternalInconsistency):
            print("internal error: %s" % exc, file=sys.stderr)
            return 2
        print("error: %s" % exc, file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
