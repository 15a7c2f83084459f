"""Command-line entry point: ``kostant <subcommand> [flags]``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import warnings
from pathlib import Path

from . import atlas, classify
from .classify import CostGuardError, NotCovered
from .multiplicity import alternation_set, default_threads, kostant_multiplicity_q
from .partition import solver_for
from .qpoly import QPolynomial, format_qpoly
from .rootsys import Family, RootSystem, RootSystemError, build_root_system

EXIT_OK, EXIT_DOMAIN, EXIT_COST, EXIT_USAGE = 0, 1, 2, 64

_TERM = re.compile(r"^([+-]?\d*)w(\d+)$")


class DomainError(ValueError):
    pass


def parse_weight(spec: str, rank: int) -> tuple:
    """``3w1+2w2``, ``[3,2]`` or ``0`` to a tuple of FW coordinates."""
    s = spec.replace(" ", "")
    if s in ("0", ""):
        return (0,) * rank
    if s.startswith("["):
        if not s.endswith("]"):
            raise DomainError(f"bad weight {spec!r}")
        try:
            coords = tuple(int(x) for x in s[1:-1].split(",") if x)
        except ValueError:
            raise DomainError(f"bad weight {spec!r}") from None
        if len(coords) != rank:
            raise DomainError(f"weight {spec!r} needs {rank} coordinates")
        return coords
    coords = [0] * rank
    for term in re.split(r"(?<=\d)(?=[+-])", s):
        m = _TERM.match(term)
        if not m:
            raise DomainError(f"bad weight term {term!r} in {spec!r}")
        c, i = m.group(1), int(m.group(2))
        if not 1 <= i <= rank:
            raise DomainError(f"fundamental weight index {i} out of range for rank {rank}")
        coords[i - 1] += int(c) if c not in ("", "+", "-") else (-1 if c == "-" else 1)
    return tuple(coords)


def weight_text(coords, symbol: str = "ϖ") -> str:
    terms = []
    for i, c in enumerate(coords, start=1):
        if c:
            terms.append(f"{symbol}{i}" if c == 1 else f"{c}{symbol}{i}")
    return "+".join(terms) if terms else "0"


def qpower_text(p: QPolynomial) -> str:
    k = p.monomial_exponent()
    if k is None:
        return format_qpoly(p)
    return "1" if k == 0 else "q" if k == 1 else f"q^{{{k}}}"


# appendix tables -------------------------------------------------------

def table_rows(family, rank: int, ell_max: int, *, threads: int | None = None) -> list[dict]:
    fam = Family.parse(family)
    if fam is Family.A and rank > 10 or fam is Family.B and rank > 6:
        raise CostGuardError(f"{fam.value}{rank} tables are beyond desk scale",
                             classify.estimate_cost(fam, rank))
    if fam is Family.A and rank > 8:
        warnings.warn(f"A{rank} tables take minutes", RuntimeWarning, stacklevel=2)
    rs = build_root_system(fam, rank)
    rows = []
    for ell in range(1, ell_max + 1):
        block = []
        for case in classify.mult_one_mus(fam, rank, ell):
            rec = alternation_set(rs, case.lam, case.mu, threads=threads)
            block.append({"ell": ell, "lambda": list(case.lam), "mu": list(case.mu), "mq": rec.mq,
                          "size": len(rec), "set": rec.words})
        block.sort(key=lambda r: (-r["size"], -r["mq"].degree, tuple(-c for c in r["mu"])))
        rows.extend(block)
    return rows


def render_appendix_table(family, rank: int, ell_max: int, fmt: str = "md", *,
                          threads: int | None = None) -> bytes:
    fam = Family.parse(family)
    rows = table_rows(fam, rank, ell_max, threads=threads)
    with_set = fam is not Family.A
    if fmt == "md":
        last = "𝒜(λ,μ)" if with_set else "|𝒜(λ,μ)|"
        lines = [f"| λ | μ | m_q(λ,μ) | {last} |", "|---|---|---|---|"]
        for r in rows:
            tail = ", ".join(r["set"]) if with_set else str(r["size"])
            lines.append(f"| {weight_text(r['lambda'])} | {weight_text(r['mu'])} | {qpower_text(r['mq'])} | {tail} |")
        return ("\n".join(lines) + "\n").encode("utf-8")
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["ell", "lambda", "mu", "mq", "size", "set"])
        for r in rows:
            w.writerow([r["ell"], weight_text(r["lambda"], "w"), weight_text(r["mu"], "w"),
                        format_qpoly(r["mq"]), r["size"], " ".join(r["set"])])
        return buf.getvalue().encode("utf-8")
    if fmt == "json":
        out = [{"ell": r["ell"], "lambda": r["lambda"], "mu": r["mu"], "mq": {"coeffs": r["mq"].to_json()},
                "size": r["size"], "set": r["set"]} for r in rows]
        return dumps(out)
    raise DomainError(f"table format {fmt!r} not supported")


def dumps(obj) -> bytes:
    return (json.dumps(obj, indent=1, ensure_ascii=False) + "\n").encode("utf-8")


# theorem oracle suite --------------------------------------------------

def verify_suite(out=None, *, a_ranks=range(1, 7), b_ranks=range(2, 7), ell_max: int = 10,
                 g2_ell_max: int = 20, threads: int | None = None) -> dict:
    """Compare every covered prediction with brute force; returns mismatch lists."""
    out = out or sys.stdout
    mismatches = {"set": [], "q": []}
    covered = {"set": 0, "q": 0}
    plan = [(Family.A, r, ell_max) for r in a_ranks] + [(Family.B, r, ell_max) for r in b_ranks]
    if g2_ell_max:
        plan.append((Family.G2, 2, g2_ell_max))
    for fam, rank, top in plan:
        rs = build_root_system(fam, rank)
        bad = 0
        for ell in range(1, top + 1):
            for case in classify.mult_one_mus(fam, rank, ell):
                rec = alternation_set(rs, case.lam, case.mu, threads=threads)
                ps = classify.predicted_alternation_set(case)
                pq = classify.predicted_qmultiplicity(case)
                if ps is not NotCovered:
                    covered["set"] += 1
                    if ps != frozenset(rec.words):
                        mismatches["set"].append((case, sorted(ps), rec.words))
                        bad += 1
                if pq is not NotCovered:
                    covered["q"] += 1
                    if pq != rec.mq:
                        mismatches["q"].append((case, pq, rec.mq))
                        bad += 1
        print(f"{rs.name}: {'ok' if not bad else f'{bad} mismatches'}", file=out)
    for case, want, got in mismatches["set"]:
        print(f"  set  {case.family.value}{case.rank} l={case.ell} mu={weight_text(case.mu, 'w')}: "
              f"predicted {want}, computed {got}", file=out)
    for case, want, got in mismatches["q"]:
        print(f"  m_q  {case.family.value}{case.rank} l={case.ell} mu={weight_text(case.mu, 'w')} "
              f"[{case.kind}]: predicted {format_qpoly(want)}, computed {format_qpoly(got)}", file=out)
    print(f"covered: {covered['set']} sets, {covered['q']} q-multiplicities; "
          f"mismatches: {len(mismatches['set'])} sets, {len(mismatches['q'])} q-multiplicities", file=out)
    return mismatches


# argument handling -----------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rank_arg(text: str):
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    return int(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=["A", "B", "G2"], required=True)
    common.add_argument("--rank", type=_rank_arg, help="rank, or lo..hi for scan")
    common.add_argument("--lambda", dest="lam", default="0", help="weight such as 3w1+2w2 or [3,2]")
    common.add_argument("--mu", default="0")
    common.add_argument("--ell-max", type=int, default=10)
    common.add_argument("--bound", type=int)
    common.add_argument("--format", dest="fmt", choices=["md", "csv", "json", "svg", "dot"])
    common.add_argument("--out", type=Path)
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--memo-cap", type=int, default=None)

    p = _Parser(prog="kostant", description="Weight multiplicities via Kostant's alternating sum.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_ in [("mult", "weight multiplicity m(lambda, mu)"),
                        ("qmult", "q-multiplicity m_q(lambda, mu)"),
                        ("altset", "Weyl alternation set"),
                        ("pairs", "multiplicity-one pairs for lambda = l w1 (l w2 in G2)"),
                        ("table", "appendix-style table"),
                        ("scan", "power-of-q scan over multiplicity-one pairs"),
                        ("grid", "rank-2 alternation diagram"),
                        ("poset", "alternation poset of a rank-2 diagram"),
                        ("verify", "compare closed-form predictions with brute force")]:
        sub.add_parser(name, parents=[common], help=help_)
    return p


def _system(args) -> RootSystem:
    rank = args.rank
    if args.family == "G2":
        rank = 2 if rank is None else rank
    if rank is None:
        raise DomainError("--rank is required")
    if isinstance(rank, range):
        raise DomainError("a single rank is expected here")
    return build_root_system(args.family, rank)


def _emit(args, data) -> None:
    if isinstance(data, str):
        data = data.encode("utf-8")
    if args.out:
        args.out.write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _run(args) -> int:
    threads = args.threads or default_threads()
    cmd = args.command
    if cmd == "scan":
        ranks = args.rank if isinstance(args.rank, range) else range(args.rank or 2, (args.rank or 2) + 1)
        report = classify.scan_conjecture(args.family, ranks, range(1, args.ell_max + 1), threads=threads)
        _emit(args, report.to_json() + "\n" if args.fmt == "json" else report.to_markdown())
        return EXIT_OK
    rs = _system(args)
    if args.memo_cap is not None:
        solver_for(rs, args.memo_cap)
    if cmd in ("mult", "qmult", "altset"):
        lam, mu = parse_weight(args.lam, rs.rank), parse_weight(args.mu, rs.rank)
        if cmd == "altset":
            rec = alternation_set(rs, lam, mu, threads=threads)
            _emit(args, dumps(rec.to_dict()) if args.fmt == "json" else atlas.set_label(rec.words) + "\n")
            return EXIT_OK
        mq = kostant_multiplicity_q(rs, lam, mu, threads=threads)
        if args.fmt == "json":
            _emit(args, dumps({"lambda": list(lam), "mu": list(mu), "mq": {"coeffs": mq.to_json()}, "m": mq(1)}))
        else:
            _emit(args, (str(mq(1)) if cmd == "mult" else format_qpoly(mq)) + "\n")
        return EXIT_OK
    if cmd == "pairs":
        cases = [c for ell in range(args.ell_max + 1) for c in classify.mult_one_mus(rs.family, rs.rank, ell)]
        if args.fmt == "json":
            _emit(args, dumps([{"ell": c.ell, "lambda": list(c.lam), "mu": list(c.mu), "kind": c.kind}
                               for c in cases]))
        else:
            _emit(args, "".join(f"{weight_text(c.lam, 'w')}\t{weight_text(c.mu, 'w')}\n" for c in cases))
        return EXIT_OK
    if cmd == "table":
        _emit(args, render_appendix_table(rs.family, rs.rank, args.ell_max, args.fmt or "md", threads=threads))
        return EXIT_OK
    if cmd in ("grid", "poset"):
        grid = atlas.alternation_grid(rs, parse_weight(args.mu, rs.rank), args.bound)
        if cmd == "grid":
            _emit(args, atlas.render(grid, args.fmt or "csv"))
        else:
            _emit(args, atlas.render(atlas.grid_poset(grid), args.fmt or "dot"))
        return EXIT_OK
    if cmd == "verify":
        rank = rs.rank
        fam = rs.family
        mism = verify_suite(a_ranks=range(1, rank + 1) if fam is Family.A else (),
                            b_ranks=range(2, rank + 1) if fam is Family.B else (),
                            ell_max=args.ell_max, g2_ell_max=2 * args.ell_max if fam is Family.G2 else 0,
                            threads=threads)
        return EXIT_OK if not (mism["set"] or mism["q"]) else EXIT_DOMAIN
    raise DomainError(f"unknown command {cmd}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args)
    except CostGuardError as exc:
        est = f" (estimated work {exc.estimate:.3g})" if exc.estimate else ""
        print(f"kostant: refused: {exc}{est}", file=sys.stderr)
        return EXIT_COST
    except (DomainError, RootSystemError, ValueError) as exc:
        print(f"kostant: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
