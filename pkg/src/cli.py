"""
hooklab command line.

    hooklab verify <identity> --shape 2,2 --d 2 --mode exact-beta
    hooklab enumerate --family gexcited --shape 3,3,2/2,1
    hooklab sweep --max-size 6 --identities all --seed 7
    hooklab groth --perm 1432
    hooklab list

Exit code 0 when every check passes, 1 when one fails, 2 on an error.
"""

import argparse
import sys
from dataclasses import replace
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence, TextIO

from sympy import ZZ
from sympy.polys.rings import ring

import diagrams as dg
from config import RunConfig, build_config, parse_rational, parse_rationals
from errors import ConfigError, HooklabError
from exact_arith import BETA, format_value
from grothendieck import (EvalContext, G_tableau, double_grothendieck_vexillary,
                          principal_specialization, vexillary_data)
from log import debug, warn
from paths import to_paths
from permutations import is_dominant, is_grassmannian, parse_permutation
from report import FORMATS, render_enumeration, render_reports, render_rows
from shapes import SkewShape, parse_skew
from tableaux import (enum_BSYT, enum_SIT, enum_SSVT, enum_SSYT_maxentry, enum_SYT,
                      enum_weight_bounded, weight_counts)
from verifiers import REGISTRY, VerificationReport, parse_target, run_identity, sweep_targets

FAMILIES = ("syt", "sit", "ssyt", "ssvt", "bsyt", "it", "rpp", "ssyt-weight", "excited",
            "gexcited", "pleasant", "paths")
GROTH_MODES = ("double", "principal")


def _add_run_flags(p: argparse.ArgumentParser):
    p.add_argument("--d", type=int, help="number of x variables (default ℓ(λ))")
    p.add_argument("--mode", help="evaluation mode")
    p.add_argument("--trials", type=int, help="random points per identity")
    p.add_argument("--seed", type=int, help="seed for random points")
    p.add_argument("--bound", type=int, help="sample integers from [1, bound]")
    p.add_argument("--budget", type=int, help="resamples allowed per trial")
    p.add_argument("--truncation", type=int, help="series truncation order N")
    p.add_argument("--M", type=int, help="infinite-sum truncation M")
    p.add_argument("--tol", type=parse_rational, help="infinite-sum tolerance, e.g. 1/1000000")
    p.add_argument("--beta", type=parse_rational, help="rational β where a mode needs one")
    p.add_argument("--q", type=parse_rational, help="rational q where a mode needs one")


def _add_output_flags(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=FORMATS, help="output format (default json)")
    p.add_argument("--output", help="write the report here instead of stdout")
    p.add_argument("--config", help="TOML file with a [hooklab] table")
    p.add_argument("--timing", action="store_true", default=None, help="include runtimes")
    p.add_argument("--threads", type=int, help="worker threads for sweeps")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hooklab",
                                     description="Verify hook-length formula identities exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run one identity on one target")
    verify.add_argument("identity")
    target = verify.add_mutually_exclusive_group()
    target.add_argument("--shape", help="partition or skew shape, e.g. 4,4,2/2,1")
    target.add_argument("--perm", help="permutation in one-line notation, e.g. 1432")
    target.add_argument("--size", help="n or n,k for size identities")
    _add_run_flags(verify)
    _add_output_flags(verify)

    enum = sub.add_parser("enumerate", help="enumerate a family of tableaux or diagrams")
    enum.add_argument("--family", required=True, choices=FAMILIES)
    enum.add_argument("--shape", required=True)
    enum.add_argument("--d", type=int)
    enum.add_argument("--truncation", type=int)
    _add_output_flags(enum)

    sweep = sub.add_parser("sweep", help="run identities over every shape up to a size")
    sweep.add_argument("--max-size", type=int, dest="max_size")
    sweep.add_argument("--identities", type=lambda s: tuple(s.split(",")),
                       help="comma-separated ids, or all")
    _add_run_flags(sweep)
    _add_output_flags(sweep)

    groth = sub.add_parser("groth", help="evaluate Grothendieck polynomials")
    which = groth.add_mutually_exclusive_group(required=True)
    which.add_argument("--perm", help="vexillary permutation")
    which.add_argument("--shape", help="partition μ for G_μ(x|y)")
    groth.add_argument("--d", type=int)
    groth.add_argument("--x", type=parse_rationals, help="x values, comma separated")
    groth.add_argument("--y", type=parse_rationals, help="y values, comma separated")
    groth.add_argument("--mode", choices=GROTH_MODES, help="double (default) or principal")
    groth.add_argument("--beta", type=_beta_arg, help="formal (default) or a rational")
    _add_output_flags(groth)

    lst = sub.add_parser("list", help="list identity ids and enumeration families")
    lst.add_argument("--format", choices=FORMATS)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    flags = {k: v for k, v in vars(args).items() if k != "config" and v is not None}
    return build_config(flags, getattr(args, "config", None))


# verify / sweep

def _target_text(config: RunConfig, kind: str) -> str:
    text = {"straight": config.shape, "skew": config.shape, "perm": config.perm,
            "size": config.size}[kind]
    if text is None:
        flag = {"perm": "--perm", "size": "--size"}.get(kind, "--shape")
        raise ConfigError(f"{config.identity} needs {flag}")
    return text


def run_verify(config: RunConfig) -> List[VerificationReport]:
    spec = REGISTRY.get_identity(config.identity)
    target = parse_target(spec.kind, _target_text(config, spec.kind))
    return [run_identity(spec.identity_id, target, config.options())]


def _sweep_jobs(config: RunConfig):
    jobs = []
    for spec in REGISTRY.select(config.identities):
        for target, d in sweep_targets(spec.identity_id, config.max_size):
            jobs.append((spec.identity_id, target, d))
    return jobs


def run_sweep(config: RunConfig) -> List[VerificationReport]:
    jobs = _sweep_jobs(config)
    debug(f"sweep: {len(jobs)} checks on {config.threads} thread(s)")

    def job(item):
        identity_id, target, d = item
        opts = config.options(d)
        if config.mode and config.mode not in REGISTRY.get_identity(identity_id).modes:
            opts = replace(opts, mode=None)
        return run_identity(identity_id, target, opts)

    if config.threads == 1:
        reports = [job(item) for item in jobs]
    else:
        with ThreadPoolExecutor(max_workers=config.threads) as executor:
            reports = list(executor.map(job, jobs))
    return sorted(reports, key=VerificationReport.sort_key)


# enumerate

def _need(value, flag: str, family: str):
    if value is None:
        raise ConfigError(f"--family {family} needs {flag}")
    return value


def enumerate_family(family: str, sh: SkewShape, d: Optional[int] = None,
                     truncation: Optional[int] = None) -> Dict:
    """Members of a family on a shape, as plain data.

    Tableau families list their members under "tableaux", diagram families
    under "diagrams" and the path encoding under "families".
    """
    result = {"family": family, "shape": str(sh), "d": d}
    key = "tableaux"
    if family == "syt":
        items = [T.to_json() for T in enum_SYT(sh)]
    elif family == "sit":
        items = [T.to_json() for T in enum_SIT(sh)]
    elif family == "bsyt":
        items = [T.to_json() for T in enum_BSYT(sh)]
    elif family == "ssyt":
        items = [T.to_json() for T in enum_SSYT_maxentry(sh, _need(d, "--d", family))]
    elif family == "ssvt":
        items = [T.to_json() for T in enum_SSVT(sh, _need(d, "--d", family))]
    elif family in ("it", "rpp", "ssyt-weight"):
        N = _need(truncation, "--truncation", family)
        name = {"it": "IT", "rpp": "RPP", "ssyt-weight": "SSYT"}[family]
        tableaux = enum_weight_bounded(name, sh, N)
        items = [T.to_json() for T in tableaux]
        result["truncation"] = N
        result["weights"] = {str(k): v for k, v in sorted(weight_counts(tableaux).items())}
    elif family == "excited":
        key = "diagrams"
        items = [D.to_json(peaks) for D, peaks in sorted(dg.excited_peaks(sh).items())]
    elif family == "gexcited":
        key = "diagrams"
        items = [D.to_json() for D in sorted(dg.generalized_excited_diagrams(sh))]
    elif family == "pleasant":
        key = "diagrams"
        items = [dg.Diagram(sh.outer, S).to_json()
                 for S in sorted(dg.pleasant_diagrams(sh), key=sorted)]
    elif family == "paths":
        key = "families"
        items = [to_paths(D, sh).to_json() for D in sorted(dg.generalized_excited_diagrams(sh))]
    else:
        raise ConfigError(f"Unknown family {family!r}", {"families": list(FAMILIES)})
    result["count"] = len(items)
    result[key] = items
    return result


# groth

def _beta_arg(text: str):
    """"formal" keeps β symbolic; anything else is a rational."""
    return None if text.strip() == "formal" else parse_rational(text)


def groth_summary(config: RunConfig) -> Dict:
    mode = config.mode or "double"
    if mode not in GROTH_MODES:
        raise ConfigError(f"groth has no mode {mode!r}", {"modes": list(GROTH_MODES)})
    beta = config.beta if config.beta is not None else BETA
    if mode == "principal":
        if config.perm is None:
            raise ConfigError("groth --mode principal needs --perm")
        w = parse_permutation(config.perm)
        if config.beta is None:
            value = str(principal_specialization(w))
        else:
            value = format_value(principal_specialization(w, config.beta))
        return {"perm": str(w), "mode": mode,
                "beta": "formal" if config.beta is None else format_value(config.beta),
                "value": value}

    if config.shape is not None:
        mu = parse_skew(config.shape).outer
        d = config.d or max(len(mu), 1)
        if config.x is None:
            raise ConfigError("groth --shape needs --x with d values")
        ctx = EvalContext(d, beta, config.y) if config.y else EvalContext(d, beta)
        return {"shape": str(mu), "mode": mode, "d": d,
                "value": format_value(G_tableau(mu, config.x, ctx))}

    w = parse_permutation(config.perm)
    data = vexillary_data(w)
    n = len(w)
    out = {
        "perm": str(w),
        "mode": mode,
        "mu": str(data.mu),
        "supershape": str(data.supershape),
        "grassmannian": is_grassmannian(w),
        "dominant": is_dominant(w),
        "excited": len(dg.excited_peaks(data.shape)),
        "generalized": len(dg.generalized_excited_diagrams(data.shape)),
        "gamma": str(principal_specialization(w)),
    }
    if config.x is None:
        R, b, *xs = ring(",".join(["beta"] + [f"x{i}" for i in range(1, n + 1)]), ZZ)
        out["at_y_zero"] = str(double_grothendieck_vexillary(w, xs, [R.zero] * n, b))
    else:
        ys = config.y if config.y is not None else (0,) * n
        out["value"] = format_value(double_grothendieck_vexillary(w, config.x, ys, beta))
    return out


def list_rows() -> List[Dict]:
    rows = [{"id": i, "kind": kind, "modes": modes, "description": desc}
            for i, kind, modes, desc in REGISTRY.list_identities()]
    rows += [{"id": f, "kind": "family", "modes": "", "description": "enumerate --family"}
             for f in FAMILIES]
    return rows


def run(config: RunConfig, stream: Optional[TextIO] = None) -> int:
    """Execute one command and write its report. Returns the exit code."""
    stream = sys.stdout if stream is None else stream
    code = 0
    if config.command in ("verify", "sweep"):
        reports = run_verify(config) if config.command == "verify" else run_sweep(config)
        text = render_reports(reports, config.format, config.timing)
        failed = [r for r in reports if not r.passed]
        for r in failed:
            warn(f"FAIL {r.identity_id} {r.shape} d={r.d} ({r.mode})")
        code = 1 if failed else 0
    elif config.command == "enumerate":
        text = render_enumeration(enumerate_family(config.family, parse_skew(config.shape),
                                                   config.d, config.truncation), config.format)
    elif config.command == "groth":
        summary = groth_summary(config)
        if config.format in ("csv", "table"):
            text = render_rows([summary], config.format, tuple(summary))
        else:
            text = render_enumeration(summary, config.format)
    elif config.command == "list":
        text = render_rows(list_rows(), config.format, ("id", "kind", "modes", "description"))
    else:
        raise ConfigError(f"Unknown command {config.command!r}")
    if config.output:
        with open(config.output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        stream.write(text)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(config_from_args(args))
    except HooklabError as e:
        warn(f"error: {e}")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
