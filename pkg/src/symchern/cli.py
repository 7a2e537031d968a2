"""Command-line front end.

Exit codes: 0 the job ran (whatever the verdict), 1 bad input, 2 an exact
identity failed (an internal bug; never expected).
"""

from __future__ import annotations

import argparse
import csv
import math
import random
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from . import families as fam
from .errors import (
    DimensionTooLarge,
    DimensionTooSmall,
    DomainViolation,
    InvariantViolation,
    SymchernError,
)
from .exact.poly import PLUS_INF
from .exact.roots import DEFAULT_WIDTH
from .exact.scalars import ParseError, format_rational, render_decimal
from .exterior import (
    MAX_DEFAULT_N,
    ModelSpace,
    decompose,
    holomorphic_monomial,
    random_holomorphic_form,
    signature_of_pairing,
    verify_hodge_riemann_16,
    verify_wedge_identity_6,
    verify_wedge_identity_7,
)
from .invariants import (
    SymplecticInvariants,
    constants_for,
    einstein_constant_window,
    verdict,
)
from .report import JobSpec, dumps, parse_job, parse_pairs, render_text


def _opt(job: JobSpec, key: str, default=None):
    return job.options.get(key, default)


# -- job runners ---------------------------------------------------------------


def run_check(job: JobSpec) -> Dict[str, Any]:
    p = job.payload
    inv = SymplecticInvariants(p["n"], p["v"], p["a"], p["b"])
    lebrun = bool(_opt(job, "lebrun_k2", False))
    c = constants_for(inv.n, lebrun)
    ver = verdict(inv, lebrun)
    window = einstein_constant_window(inv)
    d = ver.details
    return {
        "mode": "check",
        "input": {"n": inv.n, "v": inv.v, "a": inv.a, "b": inv.b},
        "constants": {"k1": c.k1, "k2": c.k2, "scalar_bound": c.scalar_bound},
        "quantities": {"bv": d["bv"], "a2": d["a2"], "k1a2": d["k1a2"], "k2a2": d["k2a2"]},
        "einstein": ver.einstein.value,
        "kaehler": ver.kaehler.value,
        "window": None if window is None else {"lower": window.lower, "upper": window.upper},
    }


def _root_dict(iv) -> Dict[str, Any]:
    return {"lo": iv.lo, "hi": iv.hi}


def _bound(iv, fallback):
    return _root_dict(iv) if iv is not None else fallback


def thresholds_dict(report: fam.ThresholdReport, width: Fraction) -> Dict[str, Any]:
    regions: List[Dict[str, Any]] = []
    low_end = Fraction(0) if report.domain == fam.POSITIVE else -math.inf
    for r in report.regions:
        entry: Dict[str, Any] = {
            "kind": r.kind,
            "signs": dict(r.signs),
            "einstein": r.einstein.value,
            "kaehler": r.kaehler.value,
        }
        if r.kind == "point":
            entry["root"] = dict(_root_dict(r.left), polynomial=r.left.polynomial)
        else:
            entry["left"] = _bound(r.left, low_end)
            entry["right"] = _bound(r.right, math.inf)
            entry["sample"] = r.sample
        regions.append(entry)
    return {
        "domain": report.domain,
        "width": width,
        "combined": report.combined,
        "polynomials": dict(report.polynomials),
        "regions": regions,
    }


def run_family(job: JobSpec) -> Dict[str, Any]:
    p = job.payload
    lebrun = bool(_opt(job, "lebrun_k2", False))
    width = Fraction(_opt(job, "refine_width", DEFAULT_WIDTH))
    if job.mode == "twist":
        spec = fam.TwistFamilySpec(p["n"], tuple(p["J"]))
        inv = fam.twist_invariants(spec)
        k = spec.top_power
        extra = {"top_power": k, "case": fam.twist_case(spec.n, k),
                 "closed_form": fam.twist_limit_closed_form(spec.n, k)}
        echo = {"n": spec.n, "J": list(spec.J)}
    else:
        spec = fam.ProductFamilySpec(p["n1"], p["n2"], p.get("E", Fraction(1)))
        inv = fam.product_invariants(spec)
        extra = {"closed_form": fam.product_limit_closed_form(spec.n1, spec.n2)}
        echo = {"n1": spec.n1, "n2": spec.n2, "E": spec.E}
    limit = fam.ratio_limit(inv, PLUS_INF)
    th = fam.obstruction_thresholds(inv, width, lebrun)
    report = {
        "mode": job.mode,
        "input": echo,
        "n": inv.n,
        "polynomials": {"v": inv.v, "a": inv.a, "b": inv.b},
        "direction": PLUS_INF,
        "limit": limit,
        "asymptotic": fam.classify_limit(limit, inv.n, lebrun).value,
        "thresholds": thresholds_dict(th, width),
    }
    report.update(extra)
    if job.mode == "product":
        mirrored = fam.ratio_limit(inv, "0+")
        report["limit_at_zero"] = mirrored
        report["asymptotic_at_zero"] = fam.classify_limit(mirrored, inv.n, lebrun).value
    return report


def write_csv(path: str, inv: fam.FamilyInvariants, t_min, t_max, steps: int, digits: int = 12) -> None:
    rows = fam.sample_rows(inv, t_min, t_max, steps)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t", "v", "a", "b", "ratio"])
        for r in rows:
            w.writerow([
                "" if r[k] is None else render_decimal(r[k], digits)
                for k in ("t", "v", "a", "b", "ratio")
            ])


def _tally(results, describe) -> Dict[str, Any]:
    passed = sum(1 for ok, _ in results if ok)
    failed = [obj for ok, obj in results if not ok]
    return {
        "passed": passed,
        "failed": len(failed),
        "counterexample": describe(failed[0]) if failed else None,
    }


def run_verify_oracle(job: JobSpec, allow_large: bool = False) -> Dict[str, Any]:
    p = job.payload
    n = p["n"]
    if n < 2:
        raise DimensionTooSmall(f"verify-oracle needs n >= 2, got {n}")
    if n > MAX_DEFAULT_N and not allow_large:
        raise DimensionTooLarge(f"n = {n} exceeds {MAX_DEFAULT_N}; pass --allow-large to override")
    samples = p.get("samples", 100)
    rng = random.Random(p.get("seed", 0))
    space = ModelSpace(n)
    forms = [space.random_two_form(rng) for _ in range(samples)]

    def decomposition_ok(xi) -> bool:
        d = decompose(xi)
        if d.total() != xi:
            return False
        if space.j_pullback(d.invariant_part) != d.invariant_part:
            return False
        if space.j_pullback(d.anti_invariant) != -d.anti_invariant:
            return False
        omega = space.omega()
        if space.inner(d.primitive_11, omega) != 0 or space.inner(d.anti_invariant, omega) != 0:
            return False
        parts = (d.omega_part, d.primitive_11, d.anti_invariant)
        return space.norm_sq(xi) == sum(space.norm_sq(x) for x in parts)

    identities = {
        "wedge6": _tally([(verify_wedge_identity_6(x).holds, x) for x in forms], str),
        "wedge7": _tally([(verify_wedge_identity_7(x).holds, x) for x in forms], str),
        "decomposition": _tally([(decomposition_ok(x), x) for x in forms], str),
    }
    hr = []
    for l in range(1, n // 2 + 1):
        for _ in range(max(1, samples // 5)):
            alpha = random_holomorphic_form(space, l, rng)
            res = verify_hodge_riemann_16(alpha)
            ok = res.holds and (res.norm_sq == 0) == alpha.is_zero
            hr.append((ok, alpha))
    hr.append((verify_hodge_riemann_16(space.zero(), l=1).norm_sq == 0, space.zero()))
    identities["hodge_riemann16"] = _tally(hr, str)

    fixed = []
    xi = space.e(1, 3) - space.e(2, 4)
    fixed.append((verify_wedge_identity_6(space.e(1, 2)).holds, space.e(1, 2)))
    fixed.append((verify_wedge_identity_6(space.omega()).holds, space.omega()))
    fixed.append((verify_wedge_identity_7(xi).holds, xi))
    fixed.append((verify_wedge_identity_7(space.omega()).holds, space.omega()))
    fixed.append((decompose(xi).anti_invariant == xi, xi))
    alpha = holomorphic_monomial(space, [1, 2])
    fixed.append((verify_hodge_riemann_16(alpha).holds, alpha))
    identities["fixed_cases"] = _tally(fixed, str)

    sig = signature_of_pairing(space)
    expected = (1, n * n - 1, 0)
    ok = all(r["failed"] == 0 for r in identities.values()) and sig == expected
    return {
        "mode": "verify-oracle",
        "input": {"n": n, "samples": samples, "seed": p.get("seed", 0)},
        "identities": identities,
        "signature": list(sig),
        "expected_signature": list(expected),
        "ok": ok,
    }


def run_sweep(job: JobSpec) -> Dict[str, Any]:
    p = job.payload
    lebrun = bool(_opt(job, "lebrun_k2", False))
    family = p["family"]
    if family == "twist":
        lo, hi = p.get("n_min", 4), p.get("n_max", 12)
        rows = fam.twist_sweep(range(lo, hi + 1), lebrun)
        echo = {"family": family, "n_min": lo, "n_max": hi}
    elif family == "product":
        a, b = p.get("n1_min", 2), p.get("n1_max", 8)
        c, d = p.get("n2_min", 2), p.get("n2_max", 8)
        rows = fam.product_sweep(range(a, b + 1), range(c, d + 1), lebrun)
        echo = {"family": family, "n1_min": a, "n1_max": b, "n2_min": c, "n2_max": d}
    else:
        raise ParseError(f"field 'family': expected 'twist' or 'product', got {family!r}")
    out = []
    for r in rows:
        out.append({
            "params": list(r.params),
            "case": r.case,
            "limit": r.limit,
            "closed_form": r.closed_form,
            "verdict": r.verdict.value,
            "condition": r.condition,
            "agrees": r.agrees,
        })
    return {
        "mode": "sweep",
        "input": echo,
        "rows": out,
        "discrepancies": sum(1 for r in out if not r["agrees"]),
    }


# -- argument handling ---------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symchern",
        description="Exact symplectic Chern-number obstructions to compatible Einstein and Kähler metrics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("check", "verdicts for fixed pairing numbers n, v, a, b"),
        ("twist", "holomorphic twist family from n and J_0..J_{n/2}"),
        ("product", "product family from n1, n2 and E"),
        ("verify-oracle", "exact exterior-algebra identity suite"),
        ("sweep", "asymptotic verdict table over a grid"),
    ):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("fields", nargs="*", metavar="KEY=VALUE", help="job fields given inline")
        sp.add_argument("--input", "-i", help="job document (key = value lines)")
        sp.add_argument("--format", choices=("text", "json", "structured"), default=None)
        sp.add_argument("--lebrun-k2", action="store_true", help="use k2 = 3/4 in real dimension 4")
        if name in ("twist", "product"):
            sp.add_argument("--refine-width", help="isolating interval width (rational)")
            sp.add_argument("--csv", help="write (t, v, a, b, ratio) samples to this file")
            sp.add_argument("--t-min", default=None)
            sp.add_argument("--t-max", default=None)
            sp.add_argument("--steps", type=int, default=None)
        if name == "verify-oracle":
            sp.add_argument("--allow-large", action="store_true", help="permit n > 6")
        if name == "sweep":
            sp.add_argument("--family", choices=("twist", "product"))
    return parser


def _job_from_args(args: argparse.Namespace) -> JobSpec:
    pairs = []
    if args.input:
        with open(args.input) as fh:
            text = fh.read()
        base = parse_job(text, args.command)
        pairs.extend((None, k, _raw(v)) for k, v in base.payload.items())
        pairs.extend((None, k, _raw(v)) for k, v in base.options.items())
    for item in args.fields:
        if "=" not in item:
            raise ParseError(f"inline field {item!r}: expected KEY=VALUE")
        key, raw = item.split("=", 1)
        pairs = [p for p in pairs if p[1] != key.strip()]
        pairs.append((None, key.strip(), raw))
    flag_fields = {
        "format": args.format,
        "refine_width": getattr(args, "refine_width", None),
        "csv": getattr(args, "csv", None),
        "t_min": getattr(args, "t_min", None),
        "t_max": getattr(args, "t_max", None),
        "steps": getattr(args, "steps", None),
        "family": getattr(args, "family", None),
        "lebrun_k2": "true" if args.lebrun_k2 else None,
    }
    for key, value in flag_fields.items():
        if value is not None:
            pairs = [p for p in pairs if p[1] != key]
            pairs.append((None, key, str(value)))
    return parse_pairs(pairs, args.command)


def _raw(v: Any) -> str:
    if isinstance(v, list):
        return ", ".join(_raw(x) for x in v)
    if isinstance(v, Fraction):
        return format_rational(v)
    return str(v)


def run_job(job: JobSpec, allow_large: bool = False) -> Dict[str, Any]:
    if job.mode == "check":
        return run_check(job)
    if job.mode in ("twist", "product"):
        return run_family(job)
    if job.mode == "verify-oracle":
        report = run_verify_oracle(job, allow_large)
        if not report["ok"]:
            raise InvariantViolation(render_text(report))
        return report
    return run_sweep(job)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        job = _job_from_args(args)
        report = run_job(job, getattr(args, "allow_large", False))
        if job.mode in ("twist", "product") and _opt(job, "csv"):
            inv = fam.family_invariants(
                fam.TwistFamilySpec(job.payload["n"], tuple(job.payload["J"]))
                if job.mode == "twist"
                else fam.ProductFamilySpec(job.payload["n1"], job.payload["n2"], job.payload.get("E", 1))
            )
            default_lo = Fraction(-3) if job.mode == "twist" else Fraction(1, 10)
            write_csv(
                _opt(job, "csv"), inv,
                _opt(job, "t_min", default_lo), _opt(job, "t_max", Fraction(3)), _opt(job, "steps", 61),
            )
    except (InvariantViolation, DomainViolation) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 2
    except (ParseError, SymchernError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    fmt = _opt(job, "format") or "text"
    print(dumps(report) if fmt in ("json", "structured") else render_text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
