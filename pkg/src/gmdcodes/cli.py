"""Command-line front end: parameters, weight and footprint matrices, zero counts,
exhaustive verifiers and one-shot reproductions of the worked examples."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .codes import DEFAULT_BUDGET, BudgetExceeded
from .geometry import PointSetError, count_zeros, default_order, from_description, vanishing_ideal
from .gf import FieldError, parse_field
from .gmdfun import footprint_matrix, weight_matrix
from .poly import MonomialOrder, ParseError, parse_polynomial, parse_priority

EXIT_OK, EXIT_ERROR, EXIT_VIOLATION, EXIT_BUDGET = 0, 1, 2, 3

FAMILIES = ("nested-cartesian", "affine-cartesian", "projective-space", "torus", "custom")


@dataclass
class RunConfig:
    field: str = "2"
    family: str = "projective-space"
    factors: list | None = None
    s: int | None = None
    points: list | None = None
    degrees: list[int] | None = None  # [lo, hi], inclusive
    ranks: list[int] | None = None
    order: str | None = None
    priority: str | None = None
    budget: int = DEFAULT_BUDGET
    format: str = "text"

    def __post_init__(self):
        if self.budget < 1:
            raise ValueError("budget must be >= 1")

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunConfig":
        data = json.loads(text)
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    def description(self) -> dict:
        F = parse_field(self.field)
        desc = {"field": {"p": F.p, "k": F.k}, "family": self.family}
        if self.family in ("nested-cartesian", "affine-cartesian"):
            if self.factors is None:
                raise PointSetError(f"family {self.family} needs --factors")
            desc["factors"] = self.factors
        elif self.family in ("projective-space", "torus"):
            if self.s is None:
                raise PointSetError(f"family {self.family} needs --s")
            desc["s"] = self.s
        elif self.family == "custom":
            if self.points is None:
                raise PointSetError("family custom needs --points")
            desc["points"] = self.points
        return desc

    def point_set(self):
        return from_description(self.description())

    def monomial_order(self, s: int) -> MonomialOrder | None:
        if self.order is None and self.priority is None:
            return None
        pr = parse_priority(self.priority, s) if self.priority else None
        return MonomialOrder(self.order or "grevlex", pr)


def _range(text: str) -> list[int]:
    lo, _, hi = text.partition("-")
    lo = int(lo)
    hi = int(hi) if hi else lo
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return [lo, hi]


def _json_arg(text: str):
    p = Path(text)
    if not text.lstrip().startswith(("[", "{")) and p.exists():
        text = p.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"invalid JSON: {exc}") from None


def config_from_args(args) -> RunConfig:
    if getattr(args, "config", None):
        cfg = RunConfig.from_json(json.dumps(args.config))
    else:
        cfg = RunConfig()
    for name in ("field", "family", "factors", "s", "points", "degrees", "ranks",
                 "order", "priority", "budget", "format"):
        val = getattr(args, name, None)
        if val is not None:
            setattr(cfg, name, val)
    cfg.__post_init__()
    return cfg


def _clip(rng, top):
    if rng is None:
        return list(range(1, top + 1))
    return list(range(rng[0], min(rng[1], top) + 1))


# -- subcommands ----------------------------------------------------------------------

def params_table(X, order=None, degrees=None) -> dict:
    V = vanishing_ideal(X, order)
    ds = _clip(degrees, V.regularity)
    return {"length": len(X), "degree": V.degree, "regularity": V.regularity,
            "d": ds, "hilbert": [V.hilbert(d) for d in ds],
            "order": (order or default_order(X)).describe(X.s),
            "generators": [g.to_str(V.gb.order) for g in V.gb.gens]}


def render_rows(rows: list[tuple[str, list]], fmt: str) -> str:
    """Small label | values table with aligned value columns."""
    if fmt == "json":
        return json.dumps({k: v for k, v in rows}, indent=1) + "\n"
    if fmt == "csv":
        return "".join(",".join([k] + [str(x) for x in v]) + "\n" for k, v in rows)
    cells = [[str(x) for x in v] for _, v in rows]
    width = max(len(x) for row in cells for x in row)
    lab = max(len(k) for k, _ in rows)
    return "".join(k.ljust(lab) + " | " + " ".join(x.rjust(width) for x in row) + "\n"
                   for (k, _), row in zip(rows, cells))


def cmd_params(cfg: RunConfig, out) -> int:
    X = cfg.point_set()
    t = params_table(X, cfg.monomial_order(X.s), cfg.degrees)
    if cfg.format == "json":
        t["config"] = json.loads(cfg.to_json())
        out.write(json.dumps(t, indent=1) + "\n")
        return EXIT_OK
    out.write(render_rows([("d", t["d"]), ("|X|", [t["length"]] * len(t["d"])),
                           ("H(d)", t["hilbert"])], cfg.format))
    if cfg.format == "text":
        out.write(f"deg = {t['degree']}, reg = {t['regularity']}\n")
    return EXIT_OK


def _matrix_ranges(cfg, X):
    V = vanishing_ideal(X, cfg.monomial_order(X.s))
    return _clip(cfg.degrees, V.regularity), _clip(cfg.ranks, V.degree)


def cmd_weights(cfg: RunConfig, out, strict=False, method="auto") -> int:
    X = cfg.point_set()
    ds, rs = _matrix_ranges(cfg, X)
    W = weight_matrix(X, cfg.monomial_order(X.s), cfg.budget, method=method,
                      degrees=ds, ranks=rs)
    out.write(W.format(cfg.format))
    if not W.is_exact():
        loose = sum(1 for (d, r), c in W.cells.items() if d in ds and r in rs and not c.exact)
        print(f"note: {loose} cell(s) exceed the budget {cfg.budget} and are shown as bounds",
              file=sys.stderr)
        if strict:
            return EXIT_BUDGET
    return EXIT_OK


def cmd_footprint(cfg: RunConfig, out) -> int:
    X = cfg.point_set()
    ds, rs = _matrix_ranges(cfg, X)
    W = footprint_matrix(X, cfg.monomial_order(X.s), degrees=ds, ranks=rs)
    out.write(W.format(cfg.format))
    return EXIT_OK


def cmd_zeros(cfg: RunConfig, polys: list[str], out) -> int:
    X = cfg.point_set()
    fs = [parse_polynomial(p, X.field, X.s) for p in polys]
    z, nz = count_zeros(X, fs)
    if cfg.format == "json":
        out.write(json.dumps({"zeros": z, "nonzeros": nz, "length": len(X)}) + "\n")
    elif cfg.format == "csv":
        out.write(f"zeros,nonzeros\n{z},{nz}\n")
    else:
        out.write(f"|V_X(F)| = {z}\n|X \\ V_X(F)| = {nz}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    from . import formulas as fm

    failed = False
    report = {}

    def line(name, rep):
        nonlocal failed
        nv = len(rep["violations"])
        failed |= nv > 0
        report[name] = rep
        out.write(f"{name}: checked {rep['checked']}, {nv} violations\n")

    line("integer inequality (pi)", fm.verify_thm62_all(args.max_prod, args.max_len))
    line("degree inequality", fm.verify_lemma53_all(args.lemma_max_prod, args.max_len))
    line("product inequality", fm.verify_lemma63(args.max_sum))
    for sizes in args.sizes:
        rows = fm.consistency_triangle(sizes, budget=args.budget)
        bad = [r for r in rows if not r["ok"]]
        failed |= bool(bad)
        report[f"triangle {sizes}"] = rows
        vals = " ".join(str(r["delta"]) for r in rows)
        out.write(f"consistency triangle {tuple(sizes)}: d=1..{len(rows)} -> {vals}: "
                  f"{'pass' if not bad else 'FAIL at d=' + ','.join(str(r['d']) for r in bad)}\n")
    out.write(conjecture_report())
    if args.json:
        Path(args.json).write_text(json.dumps(report, indent=1, default=str) + "\n")
    return EXIT_VIOLATION if failed else EXIT_OK


# -- worked examples ------------------------------------------------------------------

EX71 = {"field": "2^2", "family": "nested-cartesian",
        "factors": [["0", "1"], ["0", "1"], "all"], "order": "lex", "priority": "t3,t2,t1"}
EX72_PAIRS = [
    ("t1-t2", "t1-t3"),
    ("(t1-t2)*(t1-t3)", "(t1-t2)*t2"),
    ("(t1-t2)*(t1-t3)*t2", "(t1-t2)*t2^2"),
    ("(t1-t2)*(t1-t3)*t2^2", "(t1-t2)*(t2-t3)*t2*t3"),
]
EX71_F = "t3*(t3^3-t2^3-t1^3+t1^2*t2)"
EX74 = {"field": "2", "family": "projective-space", "s": 3, "order": "grevlex",
        "priority": "t1,t2,t3"}


def _example(cfg_dict):
    cfg = RunConfig(**cfg_dict)
    X = cfg.point_set()
    return X, cfg.monomial_order(X.s)


def _first_column(X, order):
    from .gmdfun import delta_fn, footprint_fn
    V = vanishing_ideal(X, order)
    ds = list(range(1, V.regularity + 1))
    delta = [delta_fn(X, d, 1, order) for d in ds]
    fp = [footprint_fn(V.initial, V.degree, d, 1) for d in ds]
    return V, ds, delta, fp


def reproduce_71() -> str:
    X, order = _example(EX71)
    V, ds, delta, fp = _first_column(X, order)
    lines = [f"X = [{{0,1}} x {{0,1}} x GF(4)] in P^2, order {order.describe(3)}",
             "generators: " + ", ".join(g.to_str(order) for g in V.gb.gens), ""]
    lines.append(render_rows([("d", ds), ("|X|", [len(X)] * len(ds)),
                              ("H(d)", [V.hilbert(d) for d in ds]),
                              ("delta(d,1)", delta), ("fp(d,1)", fp)], "text").rstrip("\n"))
    lines.append(f"deg = {V.degree}, reg = {V.regularity}")
    f = parse_polynomial(EX71_F, X.field, 3)
    z, nz = count_zeros(X, [f])
    lines.append(f"f = {f.to_str(order)}: |V_X(f)| = {z}, |X \\ V_X(f)| = {nz}")
    lines.append("")
    lines.append(conjecture_report().rstrip("\n"))
    return "\n".join(lines) + "\n"


def conjecture_report() -> str:
    from .formulas import conjecture52_value, degree_decomposition
    from .gmdfun import delta_fn
    X, order = _example(EX71)
    sizes = (2, 2, 4)
    V = vanishing_ideal(X, order)
    ds = list(range(1, V.regularity + 1))
    conj = [conjecture52_value(sizes, d) for d in ds]
    delta = [delta_fn(X, d, 1, order) for d in ds]
    out = "conjectured minimum distance vs computed, sizes (2,2,4):\n"
    out += render_rows([("d", ds), ("conjecture", conj), ("delta(d,1)", delta)], "text")
    bad = [d for d, a, b in zip(ds, conj, delta) if a != b]
    if bad:
        d = bad[0]
        dec = degree_decomposition(d, sizes[1:])
        out += (f"conjecture refuted at d={d} (k={dec.k}, l={dec.ell}): "
                f"predicted {conj[d - 1]}, actual {delta[d - 1]}\n")
    else:
        out += "conjecture agrees on this instance\n"
    return out


def reproduce_72() -> str:
    X, order = _example(EX71)
    lines = []
    for d, (f1, f2) in enumerate(EX72_PAIRS, start=1):
        fs = [parse_polynomial(f, X.field, 3) for f in (f1, f2)]
        z, nz = count_zeros(X, fs)
        lines.append(f"d={d}: f1 = {f1}, f2 = {f2}: |V_X(F)| = {z}, |X \\ V_X(F)| = {nz}")
    return "\n".join(lines) + "\n"


def reproduce_73() -> str:
    X, order = _example(EX71)
    return footprint_matrix(X, order).to_text()


def reproduce_74() -> str:
    X, order = _example(EX74)
    V, ds, delta, fp = _first_column(X, order)
    lines = [f"X = P^2 over GF(2), order {order.describe(3)}",
             "generators: " + ", ".join(g.to_str(order) for g in V.gb.gens), ""]
    lines.append(render_rows([("d", ds), ("deg", [V.degree] * len(ds)),
                              ("H(d)", [V.hilbert(d) for d in ds]),
                              ("delta(d,1)", delta), ("fp(d,1)", fp)], "text").rstrip("\n"))
    gaps = [d for d, a, b in zip(ds, fp, delta) if a < b]
    lines.append("footprint strictly below delta at d = " + ",".join(map(str, gaps)))
    return "\n".join(lines) + "\n"


REPRODUCERS = {"ex7.1": reproduce_71, "ex7.2": reproduce_72,
               "ex7.3": reproduce_73, "ex7.4": reproduce_74}


# -- argument parsing -----------------------------------------------------------------

def _sizes(text: str) -> list[int]:
    return [int(x) for x in text.replace("(", "").replace(")", "").split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=_json_arg,
                        help="run configuration as JSON (inline or a file path)")
    common.add_argument("--field", help="field size as p^k or q, e.g. 2^2 or 4")
    common.add_argument("--family", choices=FAMILIES)
    common.add_argument("--factors", type=_json_arg,
                        help='JSON list of factor sets, e.g. [["0","1"],"all"]')
    common.add_argument("--s", type=int, help="number of variables (projective space, torus)")
    common.add_argument("--points", type=_json_arg, help="JSON list of points (custom family)")
    common.add_argument("--order", choices=("lex", "grlex", "grevlex"))
    common.add_argument("--priority", help='variable priority, e.g. "t3,t2,t1"')
    common.add_argument("--degrees", type=_range, help="degree range, e.g. 1-3")
    common.add_argument("--ranks", type=_range, help="rank range, e.g. 1-2")
    common.add_argument("--budget", type=int, help=f"enumeration budget (default {DEFAULT_BUDGET})")
    common.add_argument("--format", choices=("text", "csv", "json"))

    ap = argparse.ArgumentParser(prog="gmdcodes", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)
    sub.add_parser("params", parents=[common], help="length, Hilbert function, degree, regularity")
    w = sub.add_parser("weights", parents=[common], help="generalized minimum distance matrix")
    w.add_argument("--strict", action="store_true", help="exit 3 if any cell exceeds the budget")
    w.add_argument("--method", choices=("auto", "subspaces", "supports"), default="auto")
    sub.add_parser("footprint", parents=[common], help="generalized footprint matrix")
    z = sub.add_parser("zeros", parents=[common], help="count common zeros of forms on X")
    z.add_argument("polys", nargs="+", help='forms such as "t1^2*t2 + a*t3^3"')
    v = sub.add_parser("verify", help="exhaustive inequality checks and formula consistency")
    v.add_argument("--max-prod", type=int, default=2000, help="bound on prod(e) for the pi check")
    v.add_argument("--lemma-max-prod", type=int, default=500,
                   help="bound on prod(e) for the degree inequality")
    v.add_argument("--max-len", type=int, default=4)
    v.add_argument("--max-sum", type=int, default=30, help="bound on sum(a) for the product check")
    v.add_argument("--sizes", type=_sizes, action="append",
                   help="factor sizes for the consistency triangle (repeatable)")
    v.add_argument("--budget", type=int, default=10**9)
    v.add_argument("--json", help="also write the full report to this file")
    r = sub.add_parser("reproduce", help="reproduce a worked example")
    r.add_argument("example", choices=sorted(REPRODUCERS))
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.cmd == "verify":
            if not args.sizes:
                args.sizes = [[2, 2, 4]]
            return cmd_verify(args, out)
        if args.cmd == "reproduce":
            out.write(REPRODUCERS[args.example]())
            return EXIT_OK
        cfg = config_from_args(args)
        if args.cmd == "params":
            return cmd_params(cfg, out)
        if args.cmd == "weights":
            return cmd_weights(cfg, out, args.strict, args.method)
        if args.cmd == "footprint":
            return cmd_footprint(cfg, out)
        return cmd_zeros(cfg, args.polys, out)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (PointSetError, FieldError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
