"""Command-line driver: every pipeline as a subcommand with a deterministic JSON report.

Exit codes: 0 every claim passed, 2 a verified claim failed, 3 a budget was
exhausted (and nothing failed), 1 usage errors.
"""

from __future__ import annotations

import argparse
import json
import pickle
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from . import bielliptic, eulerchar, fundgroup, variety
from .groebner import buchberger
from .polynomial import PolynomialError, Ring
from .scalar import GF, QQ

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_BUDGET = 100_000
LEMMA_PRIMES = (10007, 10009, 10037)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _primes(text: str | None, default) -> list[int]:
    if not text:
        return list(default)
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad prime list {text!r}") from None


class Report:
    def __init__(self, command: str, config: dict):
        self.command = command
        self.config = config
        self.claims: list[dict] = []
        self.artifacts: dict = {}

    def claim(self, cid: str, ref: str, status: str | bool, value=None, expected=None):
        if isinstance(status, bool):
            status = "PASS" if status else "FAIL"
        self.claims.append({"id": cid, "ref": ref, "status": status, "value": value, "expected": expected})

    def exit_code(self) -> int:
        statuses = {c["status"] for c in self.claims}
        if "FAIL" in statuses:
            return EXIT_MISMATCH
        if "BUDGET" in statuses:
            return EXIT_BUDGET
        return EXIT_OK

    def to_dict(self) -> dict:
        return {"command": self.command, "version": __version__, "config": self.config,
                "claims": self.claims, "artifacts": self.artifacts}


def _json_default(o):
    if isinstance(o, Fraction):
        return str(o)
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    if isinstance(o, tuple):
        return list(o)
    return str(o)


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, default=_json_default) + "\n"


# --------------------------------------------------------------------------
# subcommands


def cmd_gb(args, rep: Report):
    domain = GF(args.field) if args.field else QQ
    if args.file:
        lines = [ln.strip() for ln in Path(args.file).read_text().splitlines() if ln.strip()]
        variables, polys = [v.strip() for v in lines[0].split(",")], lines[1:]
    else:
        if not args.vars or not args.polys:
            raise UsageError("gb needs --vars and polynomials (or --file)")
        variables, polys = [v.strip() for v in args.vars.split(",")], args.polys
    R = Ring(variables, domain)
    order = R.make_order(args.order)
    gb = buchberger([R.parse(p) for p in polys], order, budget=_budget(args, False))
    rep.artifacts["basis"] = [str(g) for g in gb.elements]
    rep.artifacts["leading_monomials"] = [list(m) for m in gb.leading_monomials()]
    rep.artifacts["stats"] = gb.stats
    rep.claim("gb.verified", "Buchberger criterion on the output", gb.verified, len(gb.elements))


def _leading_terms(gens, order) -> list[str]:
    out = []
    for g in gens:
        m = g.leading_monomial(order)
        c = g.terms[m]
        name = "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(g.ring.variables, m) if e)
        out.append(name if c == 1 else f"{c}*{name}")
    return sorted(out, key=lambda t: t.split("*")[-1])


def cmd_lemma21(args, rep: Report):
    rng = random.Random(f"lemma21:{args.seed}")
    rows = []
    for p in _primes(args.primes, LEMMA_PRIMES):
        for t in range(args.trials):
            h = variety.HyperplaneSpec.random(p, rng)
            values = {"A": rng.randrange(1, p), "B": rng.randrange(1, p)}
            gens, spec = variety.lemma_system(h, p, "base", values)
            order = gens[0].ring.make_order(spec)
            lead = _leading_terms(gens, order)
            expected = sorted([f"{h.gamma % p}*C^2", "U^2", "X^2", "Y^2", "Z^2"], key=lambda t: t.split("*")[-1])
            r = variety.check_lemma_chart(h, p, "base", values)
            ok = lead == expected and r.raw_is_basis and r.ok
            rows.append({"p": p, "trial": t, "hyperplane": h.__dict__.copy(), "values": values, "order": spec,
                         "leading_terms": lead, "expected": expected, "buchberger_criterion": r.raw_is_basis,
                         "ok": ok})
            rep.claim(f"lemma21.base.p{p}.t{t}", "leading terms gamma*C^2, U^2, X^2, Y^2, Z^2 and Buchberger criterion",
                      ok, lead, expected)
    rep.artifacts["specializations"] = rows
    if args.charts:
        h = variety.HyperplaneSpec.random(LEMMA_PRIMES[0], rng)
        rep.artifacts["charts"] = variety.verify_lemma_2_1(h, LEMMA_PRIMES[0], trials=1, seed=args.seed)
    dep = variety.order_dependence_check()
    rep.artifacts["order_dependence"] = dep
    expected = {"lex:Z>Y>X>U": (False, True), "lex:U>X>Y>Z": (True, True)}
    for row in dep["rows"]:
        got = (row["original"], row["replaced"])
        rep.claim(f"order_dependence.{row['order']}", "four quadrics as a Groebner basis (original, replaced)",
                  got == expected[row["order"]], list(got), list(expected[row["order"]]))


EXPECTED_CENSUS = {"upsilon": {"complex": 48, "real": 24}, "V": {"complex": 16}}


def run_census(name: str, seed: int, primes) -> dict:
    spec = variety.builtin(name)
    exact = variety.census(spec, seed=seed)
    compact = variety.census(spec, ordering=variety.compact_ordering(spec), seed=seed)
    odp = variety.classify_census(spec, exact)
    pre = variety.fp_prepass(spec, primes, seed=seed)
    return {"exact": exact.to_dict(), "compact": compact.to_dict(), "odp": odp,
            "fp_prepass": {str(p): v for p, v in pre.items()}}


def cmd_census(args, rep: Report):
    name = "upsilon" if args.variety.lower() == "upsilon" else args.variety
    if name not in ("upsilon", "V"):
        raise UsageError(f"unknown variety {args.variety!r}")
    out = run_census(name, args.seed, _primes(args.primes, variety.DEFAULT_PRIMES))
    rep.artifacts.update(out)
    exp = EXPECTED_CENSUS[name]
    ex, cp = out["exact"], out["compact"]
    rep.claim(f"census.{name}.complex", "number of complex singular points", ex["complex"] == exp["complex"],
              ex["complex"], exp["complex"])
    if "real" in exp:
        rep.claim(f"census.{name}.real", "number of real singular points", ex["real"] == exp["real"],
                  ex["real"], exp["real"])
    else:
        rep.claim(f"census.{name}.real", "number of real singular points (no verified target)", "INFO",
                  ex["real"], None)
    rep.claim(f"census.{name}.real_orderings_agree", "real count is independent of the stratification",
              ex["real"] == cp["real"], [ex["real"], cp["real"]], None)
    pre = out["fp_prepass"]
    rep.claim(f"census.{name}.fp_prepass", "finite-field totals agree with the exact count",
              all(v == ex["complex"] for v in pre.values()), pre, ex["complex"])
    odp = out["odp"]
    rep.claim(f"census.{name}.odp", "every singular point is an ordinary double point",
              odp["odp"] == odp["points"] == ex["complex"] and not odp["exceptions"],
              odp["odp"], ex["complex"])


BUILTIN_MILNOR = {
    "H_V": lambda: eulerchar.build_H_V(),
    "H_upsilon": lambda: eulerchar.build_H_upsilon(),
}


def _budget(args, heavy: bool):
    if args.budget_steps is not None:
        return args.budget_steps
    return DEFAULT_BUDGET if heavy else None


def _status(milnor_status: str) -> str:
    return {"ok": "PASS", "budget": "BUDGET"}.get(milnor_status, "FAIL")


def _load_state(path):
    if not path:
        return None
    with open(path, "rb") as fh:
        return pickle.load(fh)


def _save_state(path, res):
    if path and res.status == "budget":
        with open(path, "wb") as fh:
            pickle.dump({"standard_basis": res.mora_state, "jet": res.jet_state}, fh)


def cmd_milnor(args, rep: Report):
    src = args.source
    if src == "suite":
        rows = eulerchar.milnor_suite(method=args.method, jet_cap=args.jet_cap)
        rep.artifacts["suite"] = rows
        for r in rows:
            rep.claim(f"milnor.{r['name']}", "standard basis and jet oracle agree with the expected value",
                      r["ok"], [r["standard_basis"], r["jet"]], r["expected"])
        return
    if src in BUILTIN_MILNOR:
        f = BUILTIN_MILNOR[src]()
    else:
        path = Path(src)
        if not path.exists():
            raise UsageError(f"no such file or builtin: {src!r} (builtins: suite, {', '.join(BUILTIN_MILNOR)})")
        lines = [ln.strip() for ln in path.read_text().splitlines() if ln.strip()]
        f = Ring([v.strip() for v in lines[0].split(",")]).parse(lines[1])
    state = _load_state(args.resume) or {}
    res = eulerchar.milnor_number(f, budget=_budget(args, src in BUILTIN_MILNOR), jet_cap=args.jet_cap, method=args.method,
                                  resume=state.get("standard_basis"), jet_resume=state.get("jet"))
    _save_state(args.state_out, res)
    rep.artifacts["milnor"] = res.to_dict()
    rep.artifacts["polynomial"] = str(f)
    rep.claim("milnor.value", "standard basis and jet oracle agree", _status(res.status), res.mu, None)


def cmd_euler(args, rep: Report):
    target = args.variety
    if target == "calibration":
        rows = eulerchar.calibration_table(budget=_budget(args, False), jet_cap=args.jet_cap)
        rep.artifacts["calibration"] = rows
        for r in rows:
            budget_hit = r["milnor"]["status"] == "budget"
            for v, entry in r["variants"].items():
                rep.claim(f"calibration.{r['name']}.{v}", "pipeline equals composed definition",
                          "BUDGET" if budget_hit else entry["consistent"], entry.get("pipeline"),
                          entry.get("composed"))
                rep.claim(f"calibration.{r['name']}.{v}.topology", "agreement with topological chi (recorded only)",
                          "INFO", entry["matches_topology"], r["topological_chi"])
        return
    if target.lower() not in ("upsilon", "v"):
        raise UsageError(f"unknown target {target!r}")
    state = _load_state(args.resume) or {}
    fn = eulerchar.compute_k if target.lower() == "upsilon" else eulerchar.compute_k_prime
    r = fn(budget=_budget(args, True), jet_cap=args.jet_cap, variant=args.variant, method=args.method,
           resume=state.get("standard_basis"), jet_resume=state.get("jet"))
    _save_state(args.state_out, r.milnor)
    rep.artifacts["euler"] = r.to_dict()
    rep.claim(f"euler.{r.variety}.mu", "standard basis and jet oracle agree", _status(r.milnor.status),
              r.milnor.mu, None)
    if r.milnor.mu is not None:
        rep.claim(f"euler.{r.variety}.k", "genus from chi", "PASS" if r.k is not None else "INFO", r.k, None)


def cmd_phi(args, rep: Report):
    out = bielliptic.phi_check_report(_primes(args.primes, bielliptic.DEFAULT_PRIMES), args.samples, args.seed)
    rep.artifacts.update(out)
    sym = out["symbolic"]
    rep.claim("phi.symbolic", "quadrics vanish modulo the curve relations", sym["all_zero"],
              [e["normal_form"] for e in sym["equations"]], ["0", "0", "0"])
    rep.claim("phi.iota", "Phi is invariant under iota", sym["iota_invariant_all"], sym["iota_invariant_all"], True)
    for row in out["sampled"]["primes"]:
        rep.claim(f"phi.sampled.p{row['p']}", "sampled images lie on V and are gamma-invariant", row["ok"],
                  row["on_V"], row["samples"] - row["base_points"])
    for row in out["conjugation"]:
        rep.claim(f"phi.conjugation.p{row['p']}", "alpha conjugates <iota, gamma> to <tau', iota>", row["ok"],
                  len(row["counterexamples"]), 0)
    for row in out["quotient_census"]:
        rep.claim(f"phi.quotient.{row['surface']}", "orbit and fiber counts", row["ok"], row["orbits"], None)


def cmd_pi1(args, rep: Report):
    census = {}
    for name in ("upsilon", "V"):
        c = variety.census(variety.builtin(name), seed=args.seed)
        census[name] = {"complex": c.complex, "real": c.real}
    euler = {}
    for name, fn in (("upsilon", eulerchar.compute_k), ("V", eulerchar.compute_k_prime)):
        r = fn(budget=_budget(args, True), jet_cap=args.jet_cap, variant=args.variant, method=args.method)
        euler[name] = {"k": r.k, "chi": r.chi, "status": r.milnor.status}
    report = fundgroup.assemble_pi1_report(census, euler)
    rep.artifacts["pi1"] = report
    table = fundgroup.nk_abelianization_table()
    rep.artifacts["nk_abelianization"] = table
    for row in table:
        rep.claim(f"pi1.N{row['k']}.H1", "abelianization Z^(k-1) + Z/2", row["ok"], row["abelianization"],
                  f"Z^{row['k'] - 1} + Z/2")
    for e in report["complex"]:
        rep.claim(f"pi1.{e['surface']}", "trivial fundamental group, H_1 = 0",
                  e["abelianization"]["text"] == "0", e["abelianization"]["text"], "0")
    for s, ext in report["open_surfaces"].items():
        ok = ext["split"] and ext["consistent"] and ext["kernel"]["name"] == "Z^2" and ext["quotient"]["name"] == "F_3"
        rep.claim(f"pi1.{s}", "split extension 1 -> Z^2 -> G -> F_3 -> 1", ok, ext["sequence"],
                  "1 -> Z^2 -> G -> F_3 -> 1")
    rep.claim("pi1.discrepancy_note", "both index readings reported", fundgroup.DISCREPANCY_NOTE in report["notes"],
              True, True)
    for e in report["real"]:
        status = {"PASS": "PASS", "BUDGET": "BUDGET"}.get(e["status"], "INFO")
        rep.claim(f"pi1.{e['surface']}", "real surface group", status, e.get("formula"), None)


def cmd_face(args, rep: Report):
    if args.bound < 1:
        raise UsageError("--bound must be positive")
    hits = variety.search_face_cuboids(args.bound)
    rep.artifacts["points"] = [list(h) for h in hits]
    rep.claim("face.verified", "every reported point satisfies the three quadrics",
              all(variety.check_face_cuboid(h) for h in hits), len(hits), None)


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget-steps", type=int, default=None,
                        help=f"reduction-step budget (default {DEFAULT_BUDGET} for H_V/H_upsilon, unlimited otherwise)")
    common.add_argument("--jet-cap", type=int, default=40)
    common.add_argument("--primes", default=None, help="comma-separated primes")
    common.add_argument("--out", default=None, help="write the JSON report here (default: stdout)")
    common.add_argument("--variant", default="as-printed", choices=sorted(eulerchar.VARIANTS))
    common.add_argument("--method", default="lazard", choices=("lazard", "mora"))
    common.add_argument("--state-out", default=None, help="pickle resumable state on budget overrun")
    common.add_argument("--resume", default=None, help="resume from a pickled state")

    p = _Parser(prog="cuboidgeom", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    s = sub.add_parser("gb", parents=[common], help="reduced Groebner basis")
    s.add_argument("polys", nargs="*")
    s.add_argument("--vars")
    s.add_argument("--order", default="grevlex")
    s.add_argument("--field", type=int, default=0, help="prime field (0 for rationals)")
    s.add_argument("--file")
    s.set_defaults(func=cmd_gb)
    s = sub.add_parser("lemma21", parents=[common], help="Groebner verification of the quadric section")
    s.add_argument("--trials", type=int, default=3)
    s.add_argument("--charts", action="store_true", help="also check every affine chart")
    s.set_defaults(func=cmd_lemma21)
    s = sub.add_parser("census", parents=[common], help="singular point census")
    s.add_argument("variety", choices=("upsilon", "V"))
    s.set_defaults(func=cmd_census)
    s = sub.add_parser("milnor", parents=[common], help="Milnor number at the origin")
    s.add_argument("source", help="polynomial file, 'suite', 'H_V' or 'H_upsilon'")
    s.set_defaults(func=cmd_milnor)
    s = sub.add_parser("euler", parents=[common], help="Euler characteristic and genus")
    s.add_argument("variety", choices=("upsilon", "V", "calibration"))
    s.set_defaults(func=cmd_euler)
    s = sub.add_parser("phi-check", parents=[common], help="bielliptic parametrization checks")
    s.add_argument("--samples", type=int, default=500)
    s.set_defaults(func=cmd_phi)
    s = sub.add_parser("pi1-report", parents=[common], help="fundamental group report")
    s.set_defaults(func=cmd_pi1)
    s = sub.add_parser("face-search", parents=[common], help="integer points of the face-cuboid surface")
    s.add_argument("--bound", type=int, required=True)
    s.set_defaults(func=cmd_face)
    return p


def _config(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "out", "state_out", "resume")}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    rep = Report(args.command, _config(args))
    try:
        args.func(args, rep)
    except (UsageError, FileNotFoundError, PolynomialError) as exc:
        print(f"cuboidgeom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = dumps(rep.to_dict())
    if args.out:
        Path(args.out).write_text(text)
        for c in rep.claims:
            print(f"{c['status']:6} {c['id']}: {c['value']}")
    else:
        sys.stdout.write(text)
    return rep.exit_code()


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
