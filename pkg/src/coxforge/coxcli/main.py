"""coxforge analyze | kernels | verify-operators | zplus"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from ..coxoracle import (HypersurfaceInstance, InstanceParseError, InvalidInstanceError, detect_index_sequence,
                         is_regular_sequence, kernel_basis)
from ..operatoralg import OperatorContext, run_operator_suite
from ..presentation import (Window, build_main_presentation, compare_dims, compare_with_oracle, free_algebra_dim,
                            instance_echo, verify_zplus)
from ..presentation.determinantal import determinantal_instance, verify_determinantal
from ..scalar import Field
from . import builtins

EXIT_PASS, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
BUILTINS = ("cy", "linear", "det", "koszul") + tuple(f"probe-{k}" for k in builtins.PROBES)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    instance_file: str | None
    builtin: str | None
    field: Field
    seed: int | None
    window: Window | None
    certify: bool
    out: str | None
    csv: str | None
    args: argparse.Namespace
    operators: bool = False


def _parse_seq(text: str | None):
    if text is None:
        return None
    try:
        return [int(x) for x in text.strip("{}[] ").split(",")]
    except ValueError as exc:
        raise UsageError(f"bad index sequence {text!r}") from exc


def load_instance(cfg: RunConfig):
    """Returns (instance, extra) where extra carries builtin-specific data."""
    if cfg.instance_file is not None:
        try:
            with open(cfg.instance_file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {cfg.instance_file}: {exc}") from exc
        from ..coxoracle import parse_instance
        inst = parse_instance(text, name=cfg.instance_file, fld=cfg.field if cfg.args.field else None)
        return inst, {}
    if cfg.seed is None:
        raise UsageError("builtin instances need --seed")
    a, seed, fld = cfg.args, cfg.seed, cfg.field
    if cfg.builtin == "cy":
        t = a.t if a.t == "generic" else int(a.t)
        return builtins.cy_instance(seed, t, fld), {}
    if cfg.builtin == "linear":
        inst, lam = builtins.linear_instance(seed, fld)
        return inst, {"lambda": [fld.symmetric(x) for x in lam]}
    if cfg.builtin == "det":
        data = determinantal_instance(seed, fld)
        return data.inst, {"det": data}
    if cfg.builtin == "koszul":
        d = a.d if a.d is not None else 2
        e = a.e if a.e is not None else 2
        n = a.n if a.n is not None else 3
        seq = _parse_seq(a.seq)
        if seq is not None and (seq[0] != 0 or seq[-1] != d or sorted(set(seq)) != seq):
            raise UsageError(f"index sequence must be strictly increasing from 0 to d={d}")
        return builtins.koszul_instance(seed, d, e, n, seq, fld), {}
    if cfg.builtin and cfg.builtin.startswith("probe-"):
        return builtins.PROBES[cfg.builtin[6:]](seed, fld), {}
    raise UsageError(f"unknown builtin {cfg.builtin!r}")


def emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _presentation_summary(p) -> dict:
    return {
        "generators": [{"name": name, "degree": list(deg)} for name, deg in p.ring.aux],
        "relations": [str(g) for g in p.generators],
    }


def cmd_analyze(cfg: RunConfig) -> int:
    inst, extra = load_instance(cfg)
    seq = detect_index_sequence(inst)
    if "det" in extra:
        report = verify_determinantal(extra["det"])
        payload = {"instance": instance_echo(inst, seq, None), "determinantal": report.as_dict(),
                   "assumed_smooth": inst.assumed_smooth}
        emit(cfg, _dump(payload))
        return EXIT_PASS if report.passed else EXIT_MISMATCH
    reg = is_regular_sequence(inst, seq, certify=cfg.certify)
    p = build_main_presentation(inst, seq)
    window = cfg.window or Window.default(inst, seq)
    rep = compare_with_oracle(inst, p, window, regular=reg.regular)
    extras = {"presentation": _presentation_summary(p), "regularity": {
        "codimension": reg.codimension, "expected_codimension": reg.expected_codimension,
        "certified": reg.certified}}
    ok = rep.passed
    if cfg.builtin == "linear":
        free_window = cfg.window or Window(-4, 4, 0, 4)
        free = compare_dims(inst, free_window, lambda deg: free_algebra_dim(builtins.LINEAR_DEGREES, deg),
                            regular=reg.regular, label="free")
        extras["lambda"] = extra["lambda"]
        extras["free_algebra"] = {"degrees": [list(d) for d in builtins.LINEAR_DEGREES],
                                  "window": free_window.as_dict(), "verdict": free.verdict,
                                  "mismatches": [r.as_dict() for r in free.mismatches()]}
        extras["main_presentation"] = "rejected" if not rep.passed else "accepted"
        ok = free.passed and not rep.passed
    if cfg.operators:
        ops = run_operator_suite(OperatorContext(inst, seq), window, cfg.args.cases, cfg.seed or 0, reg.regular)
        extras["operators"] = ops.as_dict()
        ok = ok and ops.passed
    if not reg.regular:
        extras["note"] = "index sequence is not regular"
    extras["interpretation"] = ("window agreement is consistent with a finitely generated Cox ring "
                                "(Mori dream space); it is evidence on the stated window only")
    emit(cfg, rep.to_json(extras))
    if cfg.csv:
        with open(cfg.csv, "w", encoding="utf-8") as fh:
            fh.write(rep.to_csv())
    return EXIT_PASS if ok else EXIT_MISMATCH


def cmd_kernels(cfg: RunConfig) -> int:
    inst, _ = load_instance(cfg)
    a, b = cfg.args.a, cfg.args.b
    if a is None or b is None:
        raise UsageError("kernels needs --a and --b")
    if a < 1:
        raise UsageError("--a must be at least 1")
    basis = kernel_basis(inst, a, b)
    lines = [f"dim N(-{a},{b}) = {len(basis)}"]
    lines += [str(v) for v in basis]
    emit(cfg, "\n".join(lines) + "\n")
    return EXIT_PASS


def cmd_verify_operators(cfg: RunConfig) -> int:
    inst, _ = load_instance(cfg)
    seq = detect_index_sequence(inst)
    reg = is_regular_sequence(inst, seq, certify=cfg.certify)
    window = cfg.window or Window.default(inst, seq)
    start = time.perf_counter()
    rep = run_operator_suite(OperatorContext(inst, seq), window, cfg.args.cases, cfg.seed or 0, reg.regular)
    payload = {"instance": instance_echo(inst, seq, reg.regular), "operators": rep.as_dict()}
    ok = rep.passed
    if reg.regular and seq.l == inst.d and inst.d >= 2:
        z = verify_zplus(inst, window)
        payload["zplus"] = z.as_dict()
        ok = ok and z.passed
    payload["verdict"] = "pass" if ok else "fail"
    payload["assumed_smooth"] = inst.assumed_smooth
    payload["elapsed_ms"] = int((time.perf_counter() - start) * 1000)
    emit(cfg, _dump(payload))
    return EXIT_PASS if ok else EXIT_MISMATCH


def cmd_zplus(cfg: RunConfig) -> int:
    inst, _ = load_instance(cfg)
    seq = detect_index_sequence(inst)
    if seq.l != inst.d:
        raise UsageError("zplus needs the full index sequence")
    window = cfg.window or Window.default(inst, seq)
    start = time.perf_counter()
    z = verify_zplus(inst, window)
    payload = {"instance": instance_echo(inst, seq, None), "window": window.as_dict(), "zplus": z.as_dict(),
               "verdict": "pass" if z.passed else "fail", "assumed_smooth": inst.assumed_smooth,
               "elapsed_ms": int((time.perf_counter() - start) * 1000)}
    emit(cfg, _dump(payload))
    return EXIT_PASS if z.passed else EXIT_MISMATCH


COMMANDS = {"analyze": cmd_analyze, "kernels": cmd_kernels, "verify-operators": cmd_verify_operators,
            "zplus": cmd_zplus}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxforge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--instance", metavar="FILE")
        src.add_argument("--builtin", choices=BUILTINS)
        sp.add_argument("--field", help="fp:P or qq (default fp:32003)")
        sp.add_argument("--seed", type=int)
        sp.add_argument("--window", help="a_min,a_max,b_min,b_max")
        sp.add_argument("--certify", action="store_true", help="rerun the regularity test over QQ")
        sp.add_argument("--out", metavar="FILE")
        sp.add_argument("--csv", metavar="FILE", help="per-bidegree table as CSV")
        sp.add_argument("--t", default="generic", help="cy: 'generic' or an integer value of t")
        sp.add_argument("--d", type=int)
        sp.add_argument("--e", type=int)
        sp.add_argument("--n", type=int)
        sp.add_argument("--seq", help="koszul: index sequence, e.g. 0,3,5")
        sp.add_argument("--cases", type=int, default=200, help="randomized operator cases")
        if name == "analyze":
            sp.add_argument("--operators", action="store_true", help="also run the operator suite")
        if name == "kernels":
            sp.add_argument("--a", type=int)
            sp.add_argument("--b", type=int)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        fld = Field.parse(args.field) if args.field else Field()
        window = Window.parse(args.window) if args.window else None
        cfg = RunConfig(args.command, args.instance, args.builtin, fld, args.seed, window, args.certify,
                        args.out, args.csv, args, getattr(args, "operators", False))
        return COMMANDS[args.command](cfg)
    except InstanceParseError as exc:
        print(f"coxforge: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, InvalidInstanceError, ValueError) as exc:
        print(f"coxforge: {exc}", file=sys.stderr)
        return EXIT_USAGE
