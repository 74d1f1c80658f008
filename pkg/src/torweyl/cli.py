"""Command-line front end.

Exit codes: 0 success, 2 usage or input error, 3 verification failure,
4 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from pathlib import Path

from torweyl import autos, charseries, checks, vrep, weylmod
from torweyl.rootdata import RootDataError, parse_type
from torweyl.torlie import TorError, enumerate_basis, format_elt, parse_elt, tor_bracket, verify_presentation

SCHEMA = "1"
EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_BUDGET = 0, 2, 3, 4


@dataclass
class RunConfig:
    """Settings shared by all subcommands; a JSON file supplies defaults, flags override."""

    type: str = "A1"
    max_delta: int = 2
    max_s: int = 2
    a: str = "1"
    budget: int = weylmod.DEFAULT_BUDGET
    dmax: int = 4
    tau_min: int = 0
    tau_max: int = 0
    range: int = 2
    json: str | None = None

    @classmethod
    def load(cls, path: str | None) -> RunConfig:
        if not path:
            return cls()
        try:
            raw = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise TorError(f"cannot read config {path}: {exc}")
        known = {f.name for f in fields(cls)}
        unknown = set(raw) - known - {"schema"}
        if unknown:
            raise TorError(f"unknown config keys {sorted(unknown)}; allowed: {sorted(known)}")
        return cls(**{k: v for k, v in raw.items() if k in known})

    def merge(self, ns: argparse.Namespace) -> RunConfig:
        vals = asdict(self)
        for f in fields(self):
            v = getattr(ns, f.name, None)
            if v is not None:
                vals[f.name] = v
        return RunConfig(**vals)

    def to_json(self) -> str:
        return json.dumps({"schema": SCHEMA, **asdict(self)}, indent=2, sort_keys=True)


def _emit(cfg: RunConfig, payload: dict, text: str | None = None) -> None:
    payload = {"schema": SCHEMA, **payload}
    if cfg.json:
        Path(cfg.json).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    if text is not None:
        print(text)
    elif not cfg.json:
        print(json.dumps(payload, indent=2, sort_keys=True))


# -- subcommands -------------------------------------------------------------------

def cmd_bracket(cfg, ns) -> int:
    rs = parse_type(cfg.type)
    z = tor_bracket(parse_elt(rs, ns.x), parse_elt(rs, ns.y))
    _emit(cfg, {"command": "bracket", "type": rs.name, "x": ns.x, "y": ns.y, "result": format_elt(z)},
          format_elt(z))
    return EXIT_OK


def cmd_auto(cfg, ns) -> int:
    rs = parse_type(cfg.type)
    x = parse_elt(rs, ns.x)
    a = Fraction(ns.shift) if ns.shift is not None else None
    phi = autos.named_automorphism(ns.name, a)
    y = phi(x)
    _emit(cfg, {"command": "auto", "type": rs.name, "name": ns.name, "x": ns.x, "result": format_elt(y)},
          format_elt(y))
    return EXIT_OK


def cmd_presentation(cfg, ns) -> int:
    rs = parse_type(cfg.type)
    rep = verify_presentation(rs, cfg.range)
    _emit(cfg, _report_json(rep), rep.summary() + "".join(f"\n  {w}" for w, _ in rep.failures[:20]))
    return EXIT_OK if rep.passed else EXIT_VERIFY


def _window(cfg) -> vrep.Window:
    return vrep.Window(cfg.dmax, cfg.tau_min, cfg.tau_max)


def _parse_state(rs, text: str | None):
    if not text or text == "vac":
        return vrep.vacuum(rs)
    d = json.loads(text)
    return (tuple(sorted((int(i) - 1, int(n)) for i, n in d.get("heis", []))),
            tuple(d.get("lat", (0,) * rs.rank)),
            tuple(sorted(int(n) for n in d.get("dmon", []))),
            int(d.get("tau", 0)))


def cmd_v0(cfg, ns) -> int:
    rs = parse_type(cfg.type)
    w = _window(cfg)
    if ns.v0_cmd == "basis":
        states = vrep.enumerate_basis(rs, w)
        payload = {"command": "v0 basis", "type": rs.name, "window": asdict(w), "count": len(states),
                   "predicted": vrep.predicted_count(rs, w),
                   "states": [vrep.state_label(rs, st) for st in states]}
        _emit(cfg, payload, None if not cfg.json else f"{len(states)} states")
        return EXIT_OK
    if ns.v0_cmd == "act":
        st = _parse_state(rs, ns.state)
        v = vrep.VElt(rs, w, {st: 1})
        out = vrep.act_tor(parse_elt(rs, ns.x), v)
        payload = {"command": "v0 act", "type": rs.name, "truncated": out.truncated,
                   "result": [{**vrep.state_label(rs, s), "coeff": str(c)}
                              for s, c in sorted(out.terms.items())]}
        text = repr(out) + ("  [truncated]" if out.truncated else "")
        _emit(cfg, payload, text)
        return EXIT_OK
    rep = vrep.check_module_axiom(rs, w, enumerate_basis(rs, ns.cap, ns.cap))
    _emit(cfg, _report_json(rep), rep.summary())
    return EXIT_OK if rep.passed else EXIT_VERIFY


def cmd_weyl(cfg, ns) -> int:
    rs = parse_type(cfg.type)
    if ns.weyl_cmd == "rank":
        table = weylmod.rank_spanning(weylmod.WeylConfig(rs, Fraction(cfg.a), cfg.max_delta, 0, cfg.budget))
    elif ns.weyl_cmd == "presented":
        table = weylmod.presented_weyl_dims(
            weylmod.WeylConfig(rs, Fraction(0), cfg.max_delta, cfg.max_s, cfg.budget))
    else:
        rep = weylmod.verify_hw_relations(rs)
        _emit(cfg, _report_json(rep), rep.summary())
        return EXIT_OK if rep.passed else EXIT_VERIFY
    _emit(cfg, table.to_json(), None if not cfg.json else _dim_text(table))
    return EXIT_OK


def _dim_text(table: weylmod.DimTable) -> str:
    return table.to_charseries().table()


def cmd_char(cfg, ns) -> int:
    rs = parse_type(cfg.type)
    base = charseries.char_L0(rs, cfg.max_delta)
    series = base
    if ns.factor:
        series = charseries.product_expand(base, ns.factor, cfg.max_delta,
                                           cfg.max_s if ns.factor == charseries.PQ_FACTOR else 0)
    if ns.collapse_q:
        series = series.collapse_q()
    payload = {"command": "char", "type": rs.name, "factor": ns.factor, "collapse_q": ns.collapse_q,
               "caps": {"max_m": series.max_m, "max_n": series.max_n}, "entries": series.to_json()}
    _emit(cfg, payload, series.table() if ns.table else None)
    return EXIT_OK


def cmd_verify_all(cfg, ns) -> int:
    rs = parse_type(cfg.type)
    rows = []
    run = None

    def tables():
        nonlocal run
        if run is None:
            run = checks.weyl_tables(rs, cfg.max_delta + 1, cfg.max_delta, max(cfg.max_s, cfg.max_delta),
                                     cfg.budget)
        return run

    battery = [
        ("bracket", lambda: checks.bracket_soundness(rs, 1, 1, 100)),
        ("presentation", lambda: verify_presentation(rs, cfg.range)),
        ("automorphisms", lambda: checks.automorphisms(1, (rs.rank,))),
        ("module-axiom", lambda: vrep.check_module_axiom(rs, vrep.Window(cfg.dmax, -1, 1),
                                                         enumerate_basis(rs, 1, 1))),
        ("hw-relations", lambda: checks.vacuum_relations(rs, 2, 2)),
        ("p-character", lambda: checks.character_p(tables())),
        ("pq-character", lambda: checks.character_pq(tables())),
        ("rewriting", lambda: checks.rewriting_identities(tables(), (1, 2), cfg.max_delta + 1)),
        ("factorization", lambda: checks.basis_factorization((rs.rank,), cfg.dmax)),
        ("inequality", lambda: checks.inequality_chain(tables())),
    ]
    for key, fn in battery:
        t0 = time.perf_counter()
        rep = fn()
        rows.append({"check": key, "passed": rep.passed, "checked": rep.checked,
                     "failures": len(rep.failures), "seconds": round(time.perf_counter() - t0, 2)})
    width = max(len(r["check"]) for r in rows)
    lines = [f"{'check'.ljust(width)}  status  checks  failures"]
    for r in rows:
        lines.append(f"{r['check'].ljust(width)}  {'PASS' if r['passed'] else 'FAIL':6}  "
                     f"{r['checked']:6d}  {r['failures']:8d}")
    payload = {"command": "verify-all", "type": rs.name, "config": json.loads(cfg.to_json()),
               "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
               "results": [{k: v for k, v in r.items() if k != "seconds"} for r in rows]}
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK if all(r["passed"] for r in rows) else EXIT_VERIFY


def _report_json(rep) -> dict:
    return {"report": rep.name, "passed": rep.passed, "checked": rep.checked,
            "failures": [str(w) for w, _ in rep.failures]}


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with RunConfig fields")
    common.add_argument("--type", help="root system label, e.g. A1, A2, D4")
    common.add_argument("--json", help="write a JSON artifact to this path")
    common.add_argument("--budget", type=int, help="monomial budget per label")
    common.add_argument("--dump-config", action="store_true", help="print the merged config and exit")

    p = argparse.ArgumentParser(prog="torweyl", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    b = sub.add_parser("bracket", parents=[common], help="bracket of two elements")
    b.add_argument("x")
    b.add_argument("y")

    a = sub.add_parser("auto", parents=[common], help="apply a named automorphism")
    a.add_argument("name", choices=sorted(autos.NAMED) + ["tau"])
    a.add_argument("x")
    a.add_argument("--shift", help="parameter of tau")

    pr = sub.add_parser("presentation", parents=[common], help="check the defining relations")
    pr.add_argument("--range", type=int)

    v = sub.add_parser("v0", help="the vertex module")
    vsub = v.add_subparsers(dest="v0_cmd", required=True)
    win = argparse.ArgumentParser(add_help=False)
    win.add_argument("--dmax", type=int)
    win.add_argument("--tau-min", dest="tau_min", type=int)
    win.add_argument("--tau-max", dest="tau_max", type=int)
    vsub.add_parser("basis", parents=[common, win])
    va = vsub.add_parser("act", parents=[common, win])
    va.add_argument("x")
    va.add_argument("--state", help='"vac" or JSON {"heis": [[i, n]], "lat": [...], "dmon": [...], "tau": p}')
    vc = vsub.add_parser("check-axioms", parents=[common, win])
    vc.add_argument("--cap", type=int, default=1, help="|s|,|t|-degree bound on operators")

    w = sub.add_parser("weyl", help="Weyl module dimensions")
    wsub = w.add_subparsers(dest="weyl_cmd", required=True)
    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--max-delta", dest="max_delta", type=int)
    caps.add_argument("--max-s", dest="max_s", type=int)
    wr = wsub.add_parser("rank", parents=[common, caps])
    wr.add_argument("--a")
    wsub.add_parser("presented", parents=[common, caps])
    wsub.add_parser("verify", parents=[common])

    c = sub.add_parser("char", parents=[common], help="truncated characters")
    c.add_argument("--max-delta", dest="max_delta", type=int)
    c.add_argument("--max-s", dest="max_s", type=int)
    c.add_argument("--factor", choices=charseries.FACTORS)
    c.add_argument("--collapse-q", action="store_true")
    c.add_argument("--table", action="store_true", help="aligned text instead of JSON")

    va_ = sub.add_parser("verify-all", parents=[common], help="run the verification battery")
    va_.add_argument("--max-delta", dest="max_delta", type=int)
    va_.add_argument("--max-s", dest="max_s", type=int)
    va_.add_argument("--dmax", type=int)
    va_.add_argument("--range", type=int)
    return p


HANDLERS = {"bracket": cmd_bracket, "auto": cmd_auto, "presentation": cmd_presentation,
            "v0": cmd_v0, "weyl": cmd_weyl, "char": cmd_char, "verify-all": cmd_verify_all}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = RunConfig.load(ns.config).merge(ns)
        if ns.budget is None and ns.config is None:
            cfg.budget = weylmod.budget_from_env(cfg.budget)
        if ns.dump_config:
            print(cfg.to_json())
            return EXIT_OK
        return HANDLERS[ns.cmd](cfg, ns)
    except weylmod.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (TorError, RootDataError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
