"""Command-line access to the character-theory computations.

Six subcommands: census (real semisimple indicator counts), degrees
(character degrees with family flags), chartable (the full exact table),
fs (indicators with the route used), selfdual (self-dual polynomial
enumeration), and verify (the cross-validation stack).  Output is JSON with
sorted keys or TSV with fixed column order, so identical invocations are
byte-identical; --jobs only parallelizes, never reorders.

Exit status: 0 on success, 1 on refusals and internal check failures
(diagnostic on stderr), 2 on usage errors (argparse).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import cyclotomic
from .characters import (
    census_semisimple,
    degree,
    fs_bruteforce,
    fs_semisimple_regular,
    fs_unipotent,
    is_real,
    is_regular,
    is_semisimple,
    is_unipotent,
)
from .config import RunConfig
from .conjclasses import class_table, group_order
from .gf import GF, poly_to_str
from .multipartition import enumerate_multipartitions
from .selfdual import (
    brute_force_self_dual,
    char_to_polynomial,
    count_by_constant,
    enumerate_self_dual,
)
from .symfunc import TableTooLarge, char_table
from .torus import PHI, THETA, TorusContext


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _tsv(rows) -> str:
    return "".join("\t".join(str(c) for c in row) + "\n" for row in rows)


def _value_str(cfg: RunConfig, v) -> str:
    if cfg.approx:
        z = cyclotomic.approx(v)
        return f"{z.real:.12g}{z.imag:+.12g}j"
    return cyclotomic.to_text(v)


def _parallel_map(jobs: int, fn, items):
    if jobs <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def cmd_census(cfg: RunConfig) -> int:
    ctx = TorusContext(cfg.q, cfg.n)
    out = census_semisimple(ctx)
    if cfg.fmt == "tsv":
        rows = [(k, out[k]) for k in sorted(out)]
        _emit(cfg, _tsv(rows))
    else:
        _emit(cfg, _json(out))
    return 0


def cmd_degrees(cfg: RunConfig, family: str) -> int:
    ctx = TorusContext(cfg.q, cfg.n)
    labels = enumerate_multipartitions(ctx, cfg.n, THETA)
    keep = {
        "all": lambda lam: True,
        "semisimple": is_semisimple,
        "regular": is_regular,
        "unipotent": is_unipotent,
    }[family]
    labels = [lam for lam in labels if keep(lam)]

    def entry(lam):
        return {
            "label": lam.to_key(),
            "degree": degree(ctx, lam),
            "real": is_real(ctx, lam),
            "semisimple": is_semisimple(lam),
            "regular": is_regular(lam),
            "unipotent": is_unipotent(lam),
        }

    entries = _parallel_map(cfg.jobs, entry, labels)
    entries.sort(key=lambda e: e["label"])
    if cfg.fmt == "tsv":
        rows = [("label", "degree", "real", "semisimple", "regular", "unipotent")]
        rows += [
            (e["label"], e["degree"], int(e["real"]), int(e["semisimple"]),
             int(e["regular"]), int(e["unipotent"]))
            for e in entries]
        _emit(cfg, _tsv(rows))
    else:
        _emit(cfg, _json({
            "q": cfg.q, "n": cfg.n, "family": family, "characters": entries}))
    return 0


def cmd_chartable(cfg: RunConfig) -> int:
    ctx = TorusContext(cfg.q, cfg.n)
    table = char_table(ctx, max_cells=cfg.max_table_cells)
    if cfg.fmt == "tsv":
        rows = [("label",) + tuple(mu.to_key() for mu in table.classes)]
        for lam, row in zip(table.chars, table.values):
            rows.append((lam.to_key(),) + tuple(_value_str(cfg, v) for v in row))
        _emit(cfg, _tsv(rows))
    else:
        data = table.to_json()
        if cfg.approx:
            data["values"] = {
                lam.to_key(): {
                    mu.to_key(): _value_str(cfg, v)
                    for mu, v in zip(table.classes, row)
                }
                for lam, row in zip(table.chars, table.values)
            }
        _emit(cfg, _json(data))
    return 0


def _indicator(ctx, lam):
    if not is_real(ctx, lam):
        return 0, "non-real"
    if is_semisimple(lam) or is_regular(lam):
        return fs_semisimple_regular(ctx, lam), "closed-form"
    if is_unipotent(lam):
        return fs_unipotent(ctx, lam), "two-core"
    # the caller has already vetted the table size, so lift the default bound
    return fs_bruteforce(ctx, lam, max_n=lam.size), "brute-force"


def cmd_fs(cfg: RunConfig, family: str) -> int:
    ctx = TorusContext(cfg.q, cfg.n)
    labels = enumerate_multipartitions(ctx, cfg.n, THETA)
    keep = {
        "all": lambda lam: True,
        "semisimple": is_semisimple,
        "regular": is_regular,
        "unipotent": is_unipotent,
    }[family]
    labels = [lam for lam in labels if keep(lam)]
    # the brute-force fallback builds character rows; refuse oversized tables
    needs_brute = [
        lam for lam in labels
        if is_real(ctx, lam) and not (
            is_semisimple(lam) or is_regular(lam) or is_unipotent(lam))]
    if needs_brute:
        cells = len(needs_brute) * len(enumerate_multipartitions(ctx, cfg.n, PHI))
        if cells > cfg.max_table_cells:
            raise TableTooLarge(
                f"indicator run would need {cells} table cells "
                f"(bound {cfg.max_table_cells})")

    def entry(lam):
        eps, route = _indicator(ctx, lam)
        return {"label": lam.to_key(), "indicator": eps, "route": route}

    entries = _parallel_map(cfg.jobs, entry, labels)
    entries.sort(key=lambda e: e["label"])
    if cfg.fmt == "tsv":
        rows = [("label", "indicator", "route")]
        rows += [(e["label"], e["indicator"], e["route"]) for e in entries]
        _emit(cfg, _tsv(rows))
    else:
        _emit(cfg, _json({
            "q": cfg.q, "n": cfg.n, "family": family, "indicators": entries}))
    return 0


def cmd_selfdual(cfg: RunConfig, constant: str) -> int:
    F = GF(cfg.q)
    want = None if constant == "any" else int(constant)
    polys = enumerate_self_dual(F, cfg.n, want)
    rendered = [poly_to_str(F, h) for h in polys]
    if cfg.fmt == "tsv":
        _emit(cfg, _tsv([(s,) for s in rendered]))
    else:
        _emit(cfg, _json({
            "q": cfg.q,
            "n": cfg.n,
            "constant": constant,
            "count": len(polys),
            "polynomials": rendered,
        }))
    return 0


def cmd_verify(cfg: RunConfig, max_n: int) -> int:
    q = cfg.q
    lines = []
    ok = True

    def check(cond: bool, desc: str):
        nonlocal ok
        lines.append(("ok" if cond else "FAIL") + f": {desc}")
        ok = ok and cond

    F = GF(q)
    for n in range(1, max_n + 1):
        ctx = TorusContext(q, n)
        labels = enumerate_multipartitions(ctx, n, THETA)
        classes = class_table(ctx)
        check(
            sum(c.size for c in classes) == group_order(ctx),
            f"n={n}: class sizes sum to |G|")
        check(
            sum(degree(ctx, lam) ** 2 for lam in labels) == group_order(ctx),
            f"n={n}: degree squares sum to |G|")
        census = census_semisimple(ctx)
        real_ss = [
            lam for lam in labels
            if is_semisimple(lam) and is_real(ctx, lam)]
        sd_all = enumerate_self_dual(F, n)
        check(
            census["real_total"] == len(real_ss) == len(sd_all),
            f"n={n}: real semisimple labels match self-dual count")
        check(
            sd_all == brute_force_self_dual(F, n),
            f"n={n}: self-dual enumeration matches brute force")
        if q % 2:
            check(
                census["symplectic"] == count_by_constant(F, n, -1)
                if n % 2 == 0 else census["symplectic"] == 0,
                f"n={n}: symplectic count matches constant -1 polynomials")
        image = {char_to_polynomial(ctx, lam) for lam in real_ss}
        check(
            image == set(sd_all),
            f"n={n}: realization is a bijection onto self-dual polynomials")
        cells = len(labels) * len(classes)
        if cells <= cfg.max_table_cells:
            table = char_table(ctx, max_cells=cfg.max_table_cells)
            sizes = {c.label: c.size for c in classes}
            good = True
            for i, lam in enumerate(table.chars):
                for lam2 in table.chars[i:]:
                    acc = cyclotomic.zero(table.modulus)
                    for mu in table.classes:
                        acc = acc + (table.value(lam, mu)
                                     * table.value(lam2, mu).conjugate()
                                     * sizes[mu])
                    expect = group_order(ctx) if lam == lam2 else 0
                    good = good and acc == expect
            check(good, f"n={n}: row orthogonality over all pairs")
            if q % 2:
                good = all(
                    fs_bruteforce(ctx, lam, max_n=n) == _indicator(ctx, lam)[0]
                    for lam in labels)
                check(good, f"n={n}: indicator routes agree with brute force")
    text = "".join(line + "\n" for line in lines)
    _emit(cfg, text)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uqchar",
        description="exact character theory of the finite unitary groups")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_n=True):
        p.add_argument("--q", type=int, required=True, help="prime power")
        if need_n:
            p.add_argument("--n", type=int, required=True, help="degree")
        p.add_argument("--format", choices=["json", "tsv"], default="json")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--out", metavar="FILE")
        p.add_argument("--max-cells", type=int, default=4096,
                       help="refuse table-building work beyond this size")
        p.add_argument("--approx", action="store_true",
                       help="render values as floating-point complex numbers")

    p = sub.add_parser("census", help="real semisimple indicator counts")
    common(p)

    p = sub.add_parser("degrees", help="character degrees")
    common(p)
    p.add_argument("--family", default="all",
                   choices=["semisimple", "regular", "unipotent", "all"])

    p = sub.add_parser("chartable", help="full exact character table")
    common(p)

    p = sub.add_parser("fs", help="indicators with the route used")
    common(p)
    p.add_argument("--family", default="all",
                   choices=["semisimple", "regular", "unipotent", "all"])

    p = sub.add_parser("selfdual", help="self-dual polynomial enumeration")
    common(p)
    p.add_argument("--constant", default="any", choices=["-1", "1", "any"])

    p = sub.add_parser("verify", help="cross-validation stack")
    common(p, need_n=False)
    p.add_argument("--max-n", type=int, default=2)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        q=args.q,
        n=getattr(args, "n", 0),
        fmt=args.format,
        jobs=args.jobs,
        max_table_cells=args.max_cells,
        approx=args.approx,
        out=args.out,
    )
    try:
        if args.command == "census":
            return cmd_census(cfg)
        if args.command == "degrees":
            return cmd_degrees(cfg, args.family)
        if args.command == "chartable":
            return cmd_chartable(cfg)
        if args.command == "fs":
            return cmd_fs(cfg, args.family)
        if args.command == "selfdual":
            return cmd_selfdual(cfg, args.constant)
        if args.command == "verify":
            return cmd_verify(cfg, args.max_n)
        raise AssertionError(args.command)
    except (TableTooLarge, ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
