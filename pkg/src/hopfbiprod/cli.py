"""``hopf-verify``: run Hopf-monad verification from a JSON configuration.

Example configuration::

    {
      "category": {"kind": "mat", "semiring": "INT"},
      "monad": {"kind": "representable", "H": {"dim": 1}},
      "plan": {"max_dim": 3},
      "seed": 42,
      "strategy": "auto"
    }

Exit statuses: 0 verified_hopf, 1 refuted, 2 inconclusive, 3 monad-law
failure, 4 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field, replace
from typing import Optional

from . import __version__
from .categories import FgAbCategory, ProductCategory, fgab_category, mat_category, product_category
from .errors import HopfError, ParseError, SemanticError
from .fusion import DEFAULT_SEARCH_BOUND, verify_hopf
from .monads import (
    DEFAULT_MU_TERMS,
    check_monad_laws,
    cyclic_tensor_monad,
    identity_monad,
    product_monad,
    representable_monad,
    zero_monad,
)
from .plan import SamplePlan
from .semiring import by_name

SCHEMA_VERSION = 1
EXIT_VERIFIED, EXIT_REFUTED, EXIT_INCONCLUSIVE, EXIT_LAWS, EXIT_USAGE = 0, 1, 2, 3, 4
VERDICT_STATUS = {"verified_hopf": EXIT_VERIFIED, "refuted": EXIT_REFUTED, "inconclusive": EXIT_INCONCLUSIVE}
STRATEGY_NAMES = ("auto", "idempotent_form", "negatives_form", "representable", "search")
SEMIRINGS = ("NAT", "INT", "BOOL", "MOD")


@dataclass(frozen=True)
class RunConfig:
    category: dict
    monad: dict
    plan: SamplePlan = field(default_factory=SamplePlan)
    strategy: str = "auto"
    search_bound: int = DEFAULT_SEARCH_BOUND
    format: str = "text"
    mu_terms: Optional[tuple] = None

    def to_dict(self) -> dict:
        d = {
            "category": self.category,
            "monad": self.monad,
            "plan": self.plan.to_dict(),
            "strategy": self.strategy,
            "search_bound": self.search_bound,
            "format": self.format,
        }
        if self.mu_terms is not None:
            d["test_hooks"] = {"mu_terms": [list(t) for t in self.mu_terms]}
        return d


def _require(doc, key, where, kind=None):
    path = f"{where}.{key}" if where else key
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError("missing required field", field=path)
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise ParseError(f"expected {getattr(kind, '__name__', kind)}", field=path)
    return value


def _int(value, path, lo=None):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError("expected an integer", field=path)
    if lo is not None and value < lo:
        raise ParseError(f"must be at least {lo}", field=path)
    return value


def _parse_category(doc, where) -> dict:
    kind = _require(doc, "kind", where, str)
    if kind == "mat":
        name = str(doc.get("semiring", "INT")).upper()
        if name not in SEMIRINGS:
            raise ParseError(f"unknown semiring {name!r}", field=f"{where}.semiring")
        out = {"kind": "mat", "semiring": name}
        if name == "MOD":
            out["modulus"] = _int(_require(doc, "modulus", where), f"{where}.modulus", lo=2)
        return out
    if kind == "fgab":
        return {"kind": "fgab"}
    if kind == "product":
        return {
            "kind": "product",
            "left": _parse_category(_require(doc, "left", where, dict), f"{where}.left"),
            "right": _parse_category(_require(doc, "right", where, dict), f"{where}.right"),
        }
    raise ParseError(f"unknown category kind {kind!r}", field=f"{where}.kind")


def _parse_monad(doc, cat, where) -> dict:
    kind = _require(doc, "kind", where, str)
    if kind in ("identity", "zero"):
        return {"kind": kind}
    if kind == "representable":
        H = _require(doc, "H", where)
        if isinstance(H, int) and not isinstance(H, bool):
            if cat["kind"] != "mat":
                raise SemanticError("integer shorthand for H only applies to mat categories", field=f"{where}.H")
            H = {"dim": _int(H, f"{where}.H", lo=0)}
        return {"kind": "representable", "H": H}
    if kind == "cyclic_tensor":
        if cat["kind"] != "fgab":
            raise SemanticError(f"cyclic_tensor needs an fgab category, not {cat['kind']}", field=f"{where}.kind")
        return {"kind": "cyclic_tensor", "n": _int(_require(doc, "n", where), f"{where}.n", lo=2)}
    if kind == "product":
        if cat["kind"] != "product":
            raise SemanticError(f"product monad needs a product category, not {cat['kind']}", field=f"{where}.kind")
        return {
            "kind": "product",
            "left": _parse_monad(_require(doc, "left", where, dict), cat["left"], f"{where}.left"),
            "right": _parse_monad(_require(doc, "right", where, dict), cat["right"], f"{where}.right"),
        }
    raise ParseError(f"unknown monad kind {kind!r}", field=f"{where}.kind")


def _parse_plan(doc, seed) -> SamplePlan:
    if doc is None:
        doc = {}
    if not isinstance(doc, dict):
        raise ParseError("expected an object", field="plan")
    known = {"max_dim", "orders", "max_generators", "morphisms_per_hom", "naturality_samples", "seed"}
    for key in doc:
        if key not in known:
            raise ParseError("unknown plan field", field=f"plan.{key}")
    kwargs = {}
    for key in known - {"orders"}:
        if key in doc:
            kwargs[key] = _int(doc[key], f"plan.{key}", lo=0)
    if "orders" in doc:
        orders = doc["orders"]
        if not isinstance(orders, list):
            raise ParseError("expected a list of orders", field="plan.orders")
        for o in orders:
            _int(o, "plan.orders", lo=0)
            if o == 1:
                raise ParseError("order 1 is the trivial group; omit it", field="plan.orders")
        kwargs["orders"] = tuple(orders)
    if seed is not None:
        kwargs["seed"] = _int(seed, "seed", lo=0)
    return SamplePlan(**kwargs)


def _parse_strategy(doc):
    if doc is None:
        return "auto", None
    if isinstance(doc, str):
        if doc not in STRATEGY_NAMES:
            raise ParseError(f"unknown strategy {doc!r}", field="strategy")
        return doc, None
    if isinstance(doc, dict):
        kind = _require(doc, "kind", "strategy", str)
        if kind not in STRATEGY_NAMES:
            raise ParseError(f"unknown strategy {kind!r}", field="strategy.kind")
        bound = doc.get("bound")
        return kind, None if bound is None else _int(bound, "strategy.bound", lo=0)
    raise ParseError("expected a string or an object", field="strategy")


def parse_config(text: str) -> RunConfig:
    """Validate a JSON configuration document.

    Raises :class:`ParseError` (with line or field) for malformed input and
    :class:`SemanticError` for well-formed but invalid combinations.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("configuration must be a JSON object", line=1)
    known = {"category", "monad", "plan", "seed", "strategy", "search_bound", "format", "test_hooks"}
    for key in doc:
        if key not in known:
            raise ParseError("unknown field", field=key)
    cat = _parse_category(_require(doc, "category", "", dict), "category")
    monad = _parse_monad(_require(doc, "monad", "", dict), cat, "monad")
    plan = _parse_plan(doc.get("plan"), doc.get("seed"))
    strategy, bound = _parse_strategy(doc.get("strategy"))
    if "search_bound" in doc:
        bound = _int(doc["search_bound"], "search_bound", lo=0)
    fmt = doc.get("format", "text")
    if fmt not in ("text", "json"):
        raise ParseError("expected 'text' or 'json'", field="format")
    mu_terms = None
    hooks = doc.get("test_hooks")
    if hooks is not None:
        if not isinstance(hooks, dict):
            raise ParseError("expected an object", field="test_hooks")
        if "mu_terms" in hooks:
            if monad["kind"] != "representable":
                raise SemanticError("mu_terms only applies to representable monads", field="test_hooks.mu_terms")
            terms = hooks["mu_terms"]
            if not isinstance(terms, list) or not all(isinstance(t, list) and len(t) == 2 for t in terms):
                raise ParseError("expected a list of [injection, projection] pairs", field="test_hooks.mu_terms")
            mu_terms = tuple((_int(i, "test_hooks.mu_terms", 1), _int(j, "test_hooks.mu_terms", 1)) for i, j in terms)
    config = RunConfig(
        category=cat,
        monad=monad,
        plan=plan,
        strategy=strategy,
        search_bound=DEFAULT_SEARCH_BOUND if bound is None else bound,
        format=fmt,
        mu_terms=mu_terms,
    )
    build_category(config.category)
    build_monad(config)
    return config


def build_category(doc):
    if doc["kind"] == "mat":
        return mat_category(by_name(doc["semiring"], doc.get("modulus")))
    if doc["kind"] == "fgab":
        return fgab_category()
    return product_category(build_category(doc["left"]), build_category(doc["right"]))


def _build_monad(doc, C, mu_terms=None, where="monad"):
    kind = doc["kind"]
    if kind == "identity":
        return identity_monad(C)
    if kind == "zero":
        return zero_monad(C)
    if kind == "representable":
        try:
            H = C.object_from_json(doc["H"])
        except (HopfError, KeyError, TypeError, ValueError) as exc:
            raise SemanticError(f"not an object of {C.name}: {exc}", field=f"{where}.H") from None
        return representable_monad(C, H, mu_terms or DEFAULT_MU_TERMS)
    if kind == "cyclic_tensor":
        if not isinstance(C, FgAbCategory):
            raise SemanticError("cyclic_tensor needs an fgab category", field=f"{where}.kind")
        return cyclic_tensor_monad(doc["n"], C)
    if not isinstance(C, ProductCategory):
        raise SemanticError("product monad needs a product category", field=f"{where}.kind")
    return product_monad(
        _build_monad(doc["left"], C.left, where=f"{where}.left"),
        _build_monad(doc["right"], C.right, where=f"{where}.right"),
        C,
    )


def build_monad(config: RunConfig):
    return _build_monad(config.monad, build_category(config.category), config.mu_terms)


@dataclass
class RunReport:
    config: dict
    status: int
    verdict: str
    laws: dict
    hopf: Optional[dict]
    tool_version: str = __version__
    timing: Optional[dict] = None

    def to_dict(self) -> dict:
        d = {
            "schema_version": SCHEMA_VERSION,
            "tool_version": self.tool_version,
            "config": self.config,
            "status": self.status,
            "verdict": self.verdict,
            "laws": self.laws,
            "hopf": self.hopf,
        }
        if self.timing is not None:
            d["timing"] = self.timing
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "RunReport":
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ParseError(f"unsupported schema_version {d.get('schema_version')!r}", field="schema_version")
        return cls(
            config=d["config"],
            status=d["status"],
            verdict=d["verdict"],
            laws=d["laws"],
            hopf=d["hopf"],
            tool_version=d["tool_version"],
            timing=d.get("timing"),
        )


def run(config: RunConfig, jobs: int = 1, timing: bool = False) -> RunReport:
    """Check the monad laws, then decide Hopf-ness; returns the report with its exit status."""
    t0 = time.perf_counter()
    M = build_monad(config)
    laws = check_monad_laws(M, config.plan, jobs=jobs)
    t1 = time.perf_counter()
    if not laws.passed:
        status, verdict, hopf = EXIT_LAWS, "monad_law_failure", None
    else:
        report = verify_hopf(M, config.plan, strategy=config.strategy, search_bound=config.search_bound, jobs=jobs)
        status, verdict, hopf = VERDICT_STATUS[report.verdict], report.verdict, report.to_dict()
    t2 = time.perf_counter()
    return RunReport(
        config=config.to_dict(),
        status=status,
        verdict=verdict,
        laws=laws.to_dict(),
        hopf=hopf,
        timing={"laws_seconds": round(t1 - t0, 3), "hopf_seconds": round(t2 - t1, 3)} if timing else None,
    )


def _text(report: RunReport) -> str:
    d = report.to_dict()
    cfg = d["config"]
    lines = [
        f"hopf-verify {d['tool_version']}",
        f"category  {json.dumps(cfg['category'], sort_keys=True)}",
        f"monad     {json.dumps(cfg['monad'], sort_keys=True)}",
        f"plan      {json.dumps(cfg['plan'], sort_keys=True)}",
        "",
        f"{'monad laws':<28}{'checked':>9}{'failed':>8}",
    ]
    for name, r in d["laws"]["laws"].items():
        lines.append(f"  {name:<26}{r['checked']:>9}{r['failed']:>8}")
    hopf = d["hopf"]
    if hopf is not None:
        lines += ["", f"{'candidate':<28}status"]
        for prov, info in hopf["candidates"].items():
            lines.append(f"  {prov:<26}{info['status']}  ({info['detail']})")
        lines += ["", f"{'checks':<28}{'run':>9}{'failed':>8}"]
        for name, t in hopf["checks"].items():
            lines.append(f"  {name:<26}{t['run']:>9}{t['failed']:>8}")
        lines.append("")
        for name, s in hopf["shortcuts"].items():
            state = "not applicable" if not s["applicable"] else ("holds" if s["holds"] else "fails")
            lines.append(f"shortcut {name}: {state}")
        lines.append(f"search bound: {hopf['search']['bound']} ({hopf['search']['status']})")
        lines.append(f"reason: {hopf['reason']}")
    cxs = []
    if hopf is not None:
        cxs = [cx for t in hopf["checks"].values() for cx in t["counterexamples"]]
        cxs += [cx for c in hopf["candidates"].values() for t in c["checks"].values() for cx in t["counterexamples"]]
    cxs += [r["counterexample"] for r in d["laws"]["laws"].values() if r["counterexample"]]
    if cxs:
        lines += ["", "counterexample:", json.dumps(cxs[0], sort_keys=True, indent=2)]
    if d.get("timing"):
        lines.append(f"timing: {json.dumps(d['timing'], sort_keys=True)}")
    lines += ["", f"verdict: {d['verdict']} (exit {d['status']})"]
    return "\n".join(lines) + "\n"


def emit_report(report: RunReport, fmt: str = "json") -> str:
    """Render as ``text`` (a table of checks) or ``json`` (sorted keys, stable)."""
    if fmt in ("json", "structured"):
        return json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n"
    if fmt == "text":
        return _text(report)
    raise ValueError(f"unknown format {fmt!r}")


def _build_parser():
    p = argparse.ArgumentParser(prog="hopf-verify", description="Verify Hopf monads on additive categories.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    r = sub.add_parser("run", help="run a verification configuration")
    r.add_argument("config", help="path to a JSON configuration, or - for stdin")
    r.add_argument("--format", choices=("text", "json"), help="report format (overrides config)")
    r.add_argument("--seed", type=int, help="sampling seed (overrides config)")
    r.add_argument("--jobs", type=int, default=1, help="worker threads")
    r.add_argument("--search-bound", type=int, help="entry bound for invertor search")
    r.add_argument("--output", "-o", help="write the report here instead of stdout")
    r.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_VERIFIED if exc.code == 0 else EXIT_USAGE
    try:
        if args.config == "-":
            text = sys.stdin.read()
        else:
            with open(args.config, encoding="utf-8") as fh:
                text = fh.read()
        config = parse_config(text)
        if args.seed is not None:
            if args.seed < 0:
                raise ParseError("must be non-negative", field="--seed")
            config = replace(config, plan=replace(config.plan, seed=args.seed))
        if args.search_bound is not None:
            if args.search_bound < 0:
                raise ParseError("must be non-negative", field="--search-bound")
            config = replace(config, search_bound=args.search_bound)
        if args.format is not None:
            config = replace(config, format=args.format)
        if args.jobs < 1:
            raise ParseError("must be at least 1", field="--jobs")
    except (OSError, HopfError, ValueError) as exc:
        print(f"hopf-verify: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = run(config, jobs=args.jobs, timing=args.timing)
        out = emit_report(report, config.format)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)
    except (OSError, HopfError) as exc:
        print(f"hopf-verify: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return report.status


if __name__ == "__main__":
    sys.exit(main())
