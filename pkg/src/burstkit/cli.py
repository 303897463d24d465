"""Command-line entry point.

Subcommands wire the library into reproducible experiments with
machine-readable JSON reports. Counts and thresholds are string-encoded
(they exceed 64 bits on large grids), every report echoes its config
and schema tag, and identical flags plus seed produce byte-identical
output.

Exit codes: 0 success / certified, 2 usage error, 3 refuted (a witness
is included and replay-verified), 4 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import bounds as bounds_mod
from ._caps import CapExceeded
from .burst import count_bursts, count_bursts_phased
from .codes import (
    CodeHandle,
    appendix_a_code,
    code_from_dict,
    code_to_dict,
    example_code_1,
    example_code_2,
    rs_code,
)
from .gf import field_from_order
from .listdec import CertReport, certify, decode, max_list_size, replay_witness
from .resultant import (
    ResultantInstance,
    det_product_form,
    det_stacked,
    find_kernel_relation,
    find_ratio_collision,
    leading_constant,
    sample_instance,
    verify_relation,
)

SCHEMA = "burstkit-report/1"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_REFUTED = 3
EXIT_CAP = 4


def _emit(payload: dict, args) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2)
    out = getattr(args, "output", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _report(command: str, config: dict, body: dict) -> dict:
    return {"schema": SCHEMA, "command": command, "config": config, **body}


def _pattern_json(pat) -> dict:
    return {
        "start": pat.start,
        "payload": list(pat.payload),
    }


def _witness_json(code, witness) -> list | None:
    if witness is None:
        return None
    n = code.n
    return [
        {
            "codeword": list(c),
            "burst": _pattern_json(p),
            "burst_word": list(p.expand(n)),
        }
        for c, p in witness
    ]


def _cert_json(code, rep: CertReport) -> dict:
    return {
        "detects": rep.detects,
        "max_list": rep.max_list,
        "ell": rep.ell,
        "decodable": rep.decodable,
        "witness": _witness_json(code, rep.witness),
        "work": rep.work,
    }


def _verdict_json(v) -> dict:
    return {
        "bound_id": v.bound_id,
        "applicable": v.applicable,
        "satisfied": v.satisfied,
        "max_size": None if v.max_size is None else str(v.max_size),
        "exact_terms": None
        if v.exact_terms is None
        else {
            "lhs": str(v.exact_terms["lhs"]),
            "relation": v.exact_terms["relation"],
            "rhs": str(v.exact_terms["rhs"]),
        },
        "inputs": {k: (str(x) if isinstance(x, int) else x) for k, x in v.inputs.items()},
        "min_redundancy": v.min_redundancy,
    }


def _csv_ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x != ""]


def _build_construct(args) -> CodeHandle:
    ctx = field_from_order(args.q)
    kind = args.construct
    if kind == "rs":
        if args.n is None or args.r is None:
            raise ValueError("rs construction needs --n and --r")
        return CodeHandle(
            rs_code(ctx, args.n, args.r), "rs", {"q": args.q, "n": args.n, "r": args.r}
        )
    if kind == "ex1":
        return CodeHandle(example_code_1(ctx), "ex1", {"q": args.q})
    if kind == "ex2":
        delta = 1 if args.delta is None else args.delta
        return CodeHandle(example_code_2(ctx, delta), "ex2", {"q": args.q, "delta": delta})
    if kind == "appxa":
        stars = _csv_ints(args.stars) if args.stars else [0] * 6
        return CodeHandle(appendix_a_code(ctx, stars), "appxa", {"q": args.q, "stars": stars})
    raise ValueError(f"unknown construction {kind!r}")


def _load_code(args) -> CodeHandle:
    if getattr(args, "code", None):
        with open(args.code) as fh:
            return code_from_dict(json.load(fh))
    if getattr(args, "construct", None):
        return _build_construct(args)
    raise ValueError("either --code or --construct is required")


# -- subcommands --------------------------------------------------------

def cmd_count_bursts(args) -> int:
    if args.phased:
        count = count_bursts_phased(args.q, args.n, args.tau)
    else:
        count = count_bursts(args.q, args.n, args.tau)
    cfg = {"q": args.q, "n": args.n, "tau": args.tau, "phased": args.phased}
    _emit(_report("count-bursts", cfg, {"count": str(count)}), args)
    return EXIT_OK


def cmd_construct(args) -> int:
    handle = _build_construct(args)
    _emit(code_to_dict(handle), args)
    return EXIT_OK


def cmd_decode(args) -> int:
    handle = _load_code(args)
    y = _csv_ints(args.y)
    res = decode(handle, y, args.tau, phased=args.phased, cap=args.cap)
    cfg = {
        "code": handle.name or args.code,
        "y": y,
        "tau": args.tau,
        "ell": args.ell,
        "phased": args.phased,
    }
    body = {
        "list_size": res.list_size,
        "within_ell": None if args.ell is None else res.list_size <= args.ell,
        "candidates": [
            {"codeword": list(c), "burst": _pattern_json(p)} for c, p in res.candidates
        ],
        "window_stats": {str(k): v for k, v in sorted(res.window_stats.items())},
    }
    _emit(_report("decode", cfg, body), args)
    return EXIT_OK


def cmd_certify(args) -> int:
    handle = _load_code(args)
    rep = certify(handle, args.tau, args.ell, cap=args.cap)
    cfg = {
        "code": handle.name or args.code,
        "params": handle.params,
        "tau": args.tau,
        "ell": args.ell,
    }
    body = _cert_json(handle, rep)
    if rep.witness is not None and not replay_witness(handle, rep.witness, args.tau):
        raise AssertionError("emitted witness failed replay")
    _emit(_report("certify", cfg, body), args)
    return EXIT_OK if rep.decodable else EXIT_REFUTED


def cmd_bounds(args) -> int:
    cfg = {"q": args.q, "n": args.n, "tau": args.tau, "ell": args.ell, "size": args.size}
    if args.bound == "all":
        verdicts = bounds_mod.all_verdicts(args.q, args.n, args.tau, args.ell, args.size)
    else:
        b = args.bound
        if b == "sphere_packing":
            verdicts = [bounds_mod.sphere_packing(args.q, args.n, args.tau, args.ell, args.size)]
        elif b == "reiger_group":
            verdicts = [bounds_mod.reiger_group(args.q, args.n, args.tau, args.ell, args.size)]
        elif b == "reiger_group_relaxed":
            verdicts = [
                bounds_mod.reiger_group(args.q, args.n, args.tau, args.ell, args.size, relaxed=True)
            ]
        elif b == "reiger_linear":
            verdicts = [bounds_mod.reiger_linear(args.q, args.n, args.tau, args.ell, args.size)]
        elif b == "general_ell2":
            verdicts = [bounds_mod.general_code_ell2(args.q, args.n, args.tau, args.size)]
        elif b == "general_any_ell":
            verdicts = [
                bounds_mod.general_code_any_ell(args.q, args.n, args.tau, args.ell, args.size)
            ]
        elif b == "no_detection_ell2":
            verdicts = [bounds_mod.no_detection_ell2(args.q, args.n, args.tau, args.size)]
        elif b == "lemma_Mell":
            verdicts = [bounds_mod.lemma_Mell(args.q, args.ell, args.size)]
        else:
            raise ValueError(f"unknown bound id {b!r}")
    _emit(_report("bounds", cfg, {"verdicts": [_verdict_json(v) for v in verdicts]}), args)
    return EXIT_OK


def cmd_resultant(args) -> int:
    ctx = field_from_order(args.q)
    mu = _csv_ints(args.mu)
    beta = _csv_ints(args.beta)
    inst = ResultantInstance(ctx, args.alpha, tuple(mu), tuple(beta))
    cfg = {"q": args.q, "alpha": args.alpha, "mu": mu, "beta": beta, "mode": args.mode}
    body: dict = {"r": inst.r, "taus": list(inst.taus)}
    if args.mode in ("direct", "both"):
        body["delta_direct"] = det_stacked(inst)
    if args.mode in ("closed-form", "both"):
        body["delta_closed_form"] = det_product_form(inst)
        body["kappa"] = leading_constant(ctx, inst.alpha, inst.mu)
    if args.mode == "both":
        body["match"] = body["delta_direct"] == body["delta_closed_form"]
    coll = find_ratio_collision(inst)
    body["condition_ii"] = None if coll is None else list(coll)
    if args.mode in ("witness", "both"):
        rel = find_kernel_relation(inst)
        body["relation"] = None if rel is None else [list(p) for p in rel.polys]
        if rel is not None and not verify_relation(inst, rel):
            raise AssertionError("relation failed replay")
    _emit(_report("resultant", cfg, body), args)
    return EXIT_OK


# -- reproduce ------------------------------------------------------------

def _check(name: str, ok: bool, **details) -> dict:
    return {"name": name, "pass": bool(ok), **details}


def _reproduce_example1(q: int) -> list[dict]:
    ctx = field_from_order(q)
    code = example_code_1(ctx)
    rep = certify(code, 2, 2)
    verdict = bounds_mod.general_code_ell2(q, 4, 2, code.size)
    sp = bounds_mod.sphere_packing(q, 4, 2, 2, code.size)
    return [
        _check("detects_tau2", rep.detects),
        _check("max_list_le_2", rep.max_list <= 2, max_list=rep.max_list),
        _check(
            "bound_attained_exactly",
            verdict.applicable and verdict.satisfied and code.size == verdict.max_size,
            size=code.size,
            max_size=str(verdict.max_size),
        ),
        _check("sphere_packing_holds", sp.satisfied),
    ]


def _reproduce_example2(q: int) -> list[dict]:
    ctx = field_from_order(q)
    checks = []
    for delta in range(1, q):
        code = example_code_2(ctx, delta)
        rep = certify(code, 2, 2)
        verdict = bounds_mod.no_detection_ell2(q, 4, 2, code.size)
        ok = (
            not rep.detects
            and rep.max_list <= 2
            and verdict.applicable
            and verdict.satisfied
            and code.size == verdict.max_size
        )
        checks.append(_check(f"delta_{delta}", ok, max_list=rep.max_list, size=code.size))
    return checks


def _reproduce_appendix_a(q: int, samples: int, seed: int) -> list[dict]:
    ctx = field_from_order(q)
    if q**6 <= 1000:
        star_vectors = [
            [(v // q**i) % q for i in range(6)] for v in range(q**6)
        ]
    else:
        rng = random.Random(seed)
        star_vectors = [[rng.randrange(q) for _ in range(6)] for _ in range(samples)]
    failures = 0
    for stars in star_vectors:
        code = appendix_a_code(ctx, stars)
        rep = certify(code, 3, 2)
        if not (rep.detects and rep.max_list <= 2):
            failures += 1
    size = q**4
    v1 = bounds_mod.reiger_group(q, 8, 3, 2, size)
    v2 = bounds_mod.reiger_group(q, 8, 3, 2, size, relaxed=True)
    v3 = bounds_mod.reiger_linear(q, 8, 3, 2, size)
    return [
        _check("all_star_vectors_certified", failures == 0, total=len(star_vectors), failures=failures),
        _check("reiger_bounds_inapplicable", not (v1.applicable or v2.applicable or v3.applicable)),
    ]


def _reproduce_rs_grid(q: int, n: int, ell_max: int, tau_max: int) -> list[dict]:
    ctx = field_from_order(q)
    checks = []
    for ell in range(1, ell_max + 1):
        for tau in range(1, tau_max + 1):
            r = bounds_mod.reiger_linear_min_r(tau, ell)
            if r > n - 1:
                continue
            rep = max_list_size(rs_code(ctx, n, r), tau, ell=ell)
            checks.append(
                _check(
                    f"attain_ell{ell}_tau{tau}_r{r}",
                    rep.max_list <= ell,
                    max_list=rep.max_list,
                )
            )
            if (ell + 1) * tau <= n and tau <= r - 1:
                code = rs_code(ctx, n, r - 1)
                rep2 = max_list_size(code, tau, ell=ell)
                ok = rep2.max_list >= ell + 1 and replay_witness(code, rep2.witness, tau)
                checks.append(
                    _check(
                        f"converse_ell{ell}_tau{tau}_r{r - 1}",
                        ok,
                        max_list=rep2.max_list,
                    )
                )
    return checks


def _reproduce_resultant_grid(seed: int, count: int) -> list[dict]:
    rng = random.Random(seed)
    checks = []
    for p, m in ((13, 1), (2, 4), (17, 1)):
        ctx = field_from_order(p**m)
        mismatches = 0
        equiv_breaks = 0
        for _ in range(count):
            ell = rng.randint(1, 3)
            r = rng.randint(ell + 1, min(10, ctx.q - 2))
            inst = sample_instance(ctx, rng, ell, r)
            if det_stacked(inst) != det_product_form(inst):
                mismatches += 1
            if (find_kernel_relation(inst) is None) != (find_ratio_collision(inst) is None):
                equiv_breaks += 1
        checks.append(
            _check(
                f"identity_GF{ctx.q}",
                mismatches == 0 and equiv_breaks == 0,
                instances=count,
                mismatches=mismatches,
                equivalence_breaks=equiv_breaks,
            )
        )
    return checks


def _emit_csv(checks: list[dict], args) -> None:
    lines = ["name,pass,details"]
    for c in checks:
        details = ";".join(
            f"{k}={v}" for k, v in sorted(c.items()) if k not in ("name", "pass")
        )
        lines.append(f"{c['name']},{str(c['pass']).lower()},{details}")
    text = "\n".join(lines)
    out = getattr(args, "output", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_reproduce(args) -> int:
    item = args.item
    if item == "example1":
        checks = _reproduce_example1(args.q or 3)
    elif item == "example2":
        checks = _reproduce_example2(args.q or 3)
    elif item == "appendix_a":
        checks = _reproduce_appendix_a(args.q or 2, args.samples, args.seed)
    elif item == "rs_grid":
        checks = _reproduce_rs_grid(args.q or 7, args.n or (args.q or 7) - 1, 3, 4)
    elif item == "resultant_grid":
        checks = _reproduce_resultant_grid(args.seed, args.count)
    else:
        raise ValueError(f"unknown reproduce item {item!r}")
    all_pass = all(c["pass"] for c in checks)
    cfg = {
        "item": item,
        "q": args.q,
        "n": args.n,
        "seed": args.seed,
        "samples": args.samples,
        "count": args.count,
    }
    if args.format == "csv":
        _emit_csv(checks, args)
    else:
        _emit(_report("reproduce", cfg, {"checks": checks, "all_pass": all_pass}), args)
    return EXIT_OK if all_pass else EXIT_REFUTED


# -- parser ---------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", help="write the JSON report to this path")
    p.add_argument("--cap", type=int, default=None, help="enumeration cap override")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="burstkit", description="burst list decoding certification toolkit"
    )
    sub = top.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("count-bursts", help="closed-form burst count")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--phased", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_count_bursts)

    p = sub.add_parser("construct", help="emit a code file")
    p.add_argument("--kind", dest="construct", required=True, choices=["rs", "ex1", "ex2", "appxa"])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--stars", help="six comma-separated element indices")
    _add_common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("decode", help="complete list decoding of one word")
    p.add_argument("--code", help="code file (JSON)")
    p.add_argument("--construct", choices=["rs", "ex1", "ex2", "appxa"])
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--stars")
    p.add_argument("--y", required=True, help="received word, comma-separated indices")
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--ell", type=int)
    p.add_argument("--phased", action="store_true")
    _add_common(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("certify", help="detection + list-size certification")
    p.add_argument("--code", help="code file (JSON)")
    p.add_argument("--construct", choices=["rs", "ex1", "ex2", "appxa"])
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--stars")
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("bounds", help="evaluate redundancy bounds")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--bound", default="all")
    _add_common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("resultant", help="evaluate the determinant identity")
    p.add_argument("--field", "--q", dest="q", type=int, required=True,
                   help="field order (a prime power)")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--mu", required=True, help="comma-separated block sizes")
    p.add_argument("--beta", required=True, help="comma-separated nonzero indices")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--mode", default="both",
                      choices=["direct", "closed-form", "both", "witness"])
    mode.add_argument("--direct", dest="mode", action="store_const", const="direct")
    mode.add_argument("--closed-form", dest="mode", action="store_const",
                      const="closed-form")
    mode.add_argument("--both", dest="mode", action="store_const", const="both")
    mode.add_argument("--witness", dest="mode", action="store_const", const="witness")
    _add_common(p)
    p.set_defaults(func=cmd_resultant)

    p = sub.add_parser("reproduce", help="scripted end-to-end reproductions")
    p.add_argument(
        "item",
        choices=["example1", "example2", "appendix_a", "rs_grid", "resultant_grid"],
    )
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--format", default="json", choices=["json", "csv"])
    _add_common(p)
    p.set_defaults(func=cmd_reproduce)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
