"""Command-line front end.

    shockorder check <config> [--out PATH]
    shockorder curve <config> [--out PATH]
    shockorder mc <config> [--samples N] [--seed S]
    shockorder repro <fig1|fig2|fig3|fig4> [--out-dir DIR]

Exit codes: 0 success, 1 input error, 2 no theorem's hypotheses hold (check)
or sup-distance above the bound (mc), 3 Monte Carlo oracle unavailable.
Reports are plain text followed by a JSON block between ``--- machine ---``
and ``--- end ---`` markers. Colour is used only on a terminal and never
when ``NO_COLOR`` is set.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import config as cfgmod
from . import montecarlo as mc
from . import theorems as th
from .errors import ConfigError, DomainError, UnsupportedFamily
from .figures import FIGURES
from .system import Structure, system_cdf

EXIT_OK, EXIT_INPUT, EXIT_NONE, EXIT_ORACLE = 0, 1, 2, 3
MACHINE_START, MACHINE_END = "--- machine ---", "--- end ---"


class _Style:
    def __init__(self, stream):
        tty = hasattr(stream, "isatty") and stream.isatty()
        self.on = tty and "NO_COLOR" not in os.environ

    def __call__(self, text, code):
        return f"\033[{code}m{text}\033[0m" if self.on else text

    def ok(self, flag):
        return self("holds", "32") if flag else self("FAILS", "31")


def _machine(doc) -> str:
    return f"{MACHINE_START}\n{json.dumps(doc, indent=2, sort_keys=True, default=_jsonable)}\n{MACHINE_END}\n"


def _jsonable(v):
    if isinstance(v, np.generic):
        return v.item()
    if isinstance(v, np.ndarray):
        return v.tolist()
    return str(v)


def _scenario_doc(scn: th.Scenario):
    return {
        "structure": scn.structure.value,
        "family": str(scn.family),
        "gen_x": str(scn.gen_x),
        "gen_y": str(scn.gen_y),
        "alpha": scn.alpha.tolist(),
        "beta": scn.beta.tolist(),
        "shocks": scn.shocks.tolist(),
    }


def check_report(cfg: cfgmod.ScenarioConfig, style=None):
    """Render the hypothesis report; returns ``(text, exit_code)``."""
    style = style or _Style(None)
    scn = cfg.scenario
    reports = th.conclude(scn, cfg.tolerances)
    out = io.StringIO()
    out.write(f"scenario: {scn.structure.value} system, {scn.family}, "
              f"X ~ {scn.gen_x}, Y ~ {scn.gen_y}\n")
    out.write(f"  alpha = {scn.alpha.tolist()}\n  beta  = {scn.beta.tolist()}\n"
              f"  p     = {scn.shocks.tolist()}\n\n")
    for rep in reports:
        head = style(rep.theorem.value, "1")
        verdict = style("all conditions hold", "32") if rep.all_hold else style(
            f"{len(rep.failed())} condition(s) fail", "31")
        out.write(f"{head}: {verdict}\n")
        for r in rep.condition_results:
            out.write(f"  {style.ok(r.holds):>5}  {r.name:<44} worst={r.worst_violation:+.3e}\n")
        if rep.all_hold:
            out.write(f"  conclusion: {rep.conclusion}\n")
        out.write("\n")
    held = [r.theorem.value for r in reports if r.all_hold]
    out.write(f"theorems with all hypotheses holding: {', '.join(held) if held else 'none'}\n")
    code = EXIT_OK if held else EXIT_NONE
    out.write(_machine({
        "command": "check",
        "scenario": _scenario_doc(scn),
        "theorems": [r.as_dict() for r in reports],
        "holding": held,
        "exit_code": code,
    }))
    return out.getvalue(), code


def curve_csv(cfg: cfgmod.ScenarioConfig) -> str:
    x = cfg.grid.resolve(cfg.scenario)
    fx, fy, d = th.difference_curve(cfg.scenario, x)
    out = io.StringIO()
    out.write("x,F_X,F_Y,diff\n")
    for row in zip(x, fx, fy, d):
        out.write(",".join("%.17g" % v for v in row) + "\n")
    return out.getvalue()


def mc_report(cfg: cfgmod.ScenarioConfig, samples=None, seed=None):
    """Sup-distance of each system against its analytic CDF; ``(text, code)``."""
    scn = cfg.scenario
    n = cfg.mc_samples if samples is None else int(samples)
    seed = cfg.mc_seed if seed is None else int(seed)
    unsupported = [str(gn) for gn in (scn.gen_x, scn.gen_y) if not mc.supports(gn)]
    if unsupported:
        raise UnsupportedFamily(
            f"oracle unavailable: no frailty sampler for {', '.join(unsupported)}; "
            "this scenario can only be checked analytically")
    bound = mc.dkw_bound(n)
    rows = {}
    for stream, (name, spec) in enumerate((("X", scn.system_x), ("Y", scn.system_y))):
        s = mc.sample_system_lifetime(spec, mc.SeededStream(seed, stream), n)
        rows[name] = mc.sup_distance(s, lambda v, sp=spec: system_cdf(sp, v))
    ok = all(v <= bound for v in rows.values())
    code = EXIT_OK if ok else EXIT_NONE
    out = io.StringIO()
    stat = "minimum" if scn.structure is Structure.SERIES else "maximum"
    out.write(f"Monte Carlo check of the {stat} CDF, {n} samples, seed {seed}\n")
    for name, v in rows.items():
        out.write(f"  {name}: sup-distance {v:.5f} (bound {bound:.5f})\n")
    out.write(("within bound" if ok else "ABOVE BOUND") + "\n")
    out.write(_machine({
        "command": "mc", "samples": n, "seed": seed, "bound": bound,
        "sup_distance": rows, "within_bound": ok, "exit_code": code,
    }))
    return out.getvalue(), code


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_check(args) -> int:
    cfg = cfgmod.load(args.config)
    text, code = check_report(cfg, _Style(sys.stdout if args.out is None else None))
    _emit(text, args.out)
    return code


def cmd_curve(args) -> int:
    _emit(curve_csv(cfgmod.load(args.config)), args.out)
    return EXIT_OK


def cmd_mc(args) -> int:
    cfg = cfgmod.load(args.config)
    try:
        text, code = mc_report(cfg, args.samples, args.seed)
    except UnsupportedFamily as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_ORACLE
    sys.stdout.write(text)
    return code


def cmd_repro(args) -> int:
    scn = FIGURES[args.figure]
    cfg = cfgmod.ScenarioConfig(scn)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    text = cfgmod.dump(cfg)
    (out / f"{args.figure}.cfg").write_text(text)
    # the written file is the source of truth for the other two artifacts
    cfg = cfgmod.parse(text)
    (out / f"{args.figure}.csv").write_text(curve_csv(cfg))
    report, _ = check_report(cfg)
    (out / f"{args.figure}_report.txt").write_text(report)
    sys.stdout.write(f"wrote {args.figure}.cfg, {args.figure}.csv, {args.figure}_report.txt to {out}\n")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="shockorder", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("check", help="validate every theorem's hypotheses")
    c.add_argument("config")
    c.add_argument("--out")
    c.set_defaults(func=cmd_check)
    c = sub.add_parser("curve", help="CSV of the two compared functions and their difference")
    c.add_argument("config")
    c.add_argument("--out")
    c.set_defaults(func=cmd_curve)
    c = sub.add_parser("mc", help="Monte Carlo cross-check of the analytic CDFs")
    c.add_argument("config")
    c.add_argument("--samples", type=int)
    c.add_argument("--seed", type=int)
    c.set_defaults(func=cmd_mc)
    c = sub.add_parser("repro", help="emit config, curve and report for a built-in figure")
    c.add_argument("figure", choices=sorted(FIGURES))
    c.add_argument("--out-dir", default=".")
    c.set_defaults(func=cmd_repro)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; the contract reserves 2
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except (ConfigError, DomainError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
