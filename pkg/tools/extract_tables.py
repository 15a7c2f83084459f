"""Pull (lambda, mu, m_q, alternation data) rows out of LaTeX supertabular
blocks and freeze them as JSON test fixtures.

    python3 tools/extract_tables.py SOURCE.tex tests/data

Each block must be preceded by a ``\\tablehead`` whose caption names the
type, e.g. ``type $B_3$`` or ``Type $A_{10}$ table``.
"""

from __future__ import annotations

import json
import re
import sys
from pathlib import Path

HEAD_RE = re.compile(r"\\tablehead\{.*?[Tt]ype \$([AB])_\{?(\d+)\}?\$")
BLOCK_RE = re.compile(r"\\begin\{supertabular\}\{[^\n]*?\}\n(.*?)\\end\{supertabular\}", re.S)
ROW_END_RE = re.compile(r"\\\\(?:\[\d+pt\])?")
TERM_RE = re.compile(r"^(\d*)\\varpi_\{?(\d+)\}?$")


def parse_weight(text: str, rank: int) -> list[int]:
    t = text.replace("$", "").replace(" ", "")
    coords = [0] * rank
    if t == "0":
        return coords
    for term in t.split("+"):
        m = TERM_RE.match(term)
        if not m:
            raise ValueError(f"cannot parse weight term {term!r} in {text!r}")
        coords[int(m.group(2)) - 1] += int(m.group(1) or 1)
    return coords


def parse_ell(text: str) -> int | None:
    t = text.replace("$", "").replace("{", "").replace("}", "").replace(" ", "")
    if not t:
        return None
    m = re.fullmatch(r"\\ell=(\d+)", t)
    if m:
        return int(m.group(1))
    m = re.fullmatch(r"(\d*)(?:\\varpi_1|w_1)", t)
    if m:
        return int(m.group(1) or 1)
    raise ValueError(f"cannot parse ell cell {text!r}")


def parse_qpower(text: str) -> int:
    t = text.replace("$", "").replace("{", "").replace("}", "").replace(" ", "")
    if t == "1":
        return 0
    if t == "q":
        return 1
    m = re.fullmatch(r"q\^(\d+)", t)
    if not m:
        raise ValueError(f"not a power of q: {text!r}")
    return int(m.group(1))


def parse_words(text: str) -> list[str]:
    t = text.replace("$", "").replace("\\newline", " ").replace("_", "")
    return [w.strip() for w in t.split(",") if w.strip()]


def extract(source: str) -> dict[str, list[dict]]:
    tables: dict[str, list[dict]] = {}
    heads = [(m.end(), m.group(1), int(m.group(2))) for m in HEAD_RE.finditer(source)]
    for block in BLOCK_RE.finditer(source):
        prior = [h for h in heads if h[0] < block.start()]
        _, family, rank = prior[-1]
        body = re.sub(r"\\rowcolor\{\w+\}", "", block.group(1)).replace("\\hline", "")
        rows = []
        ell = None
        for raw in ROW_END_RE.split(body):
            if not raw.strip():
                continue
            cells = [c.strip() for c in raw.split("&")]
            if len(cells) != 4:
                raise ValueError(f"bad row in {family}{rank}: {raw!r}")
            ell = parse_ell(cells[0]) or ell
            row = {"ell": ell, "mu": parse_weight(cells[1], rank), "exponent": parse_qpower(cells[2])}
            if family == "A":
                row["size"] = int(cells[3].replace("$", ""))
            else:
                row["set"] = parse_words(cells[3])
            rows.append(row)
        tables[f"{family}{rank}"] = rows
    return tables


def main(argv: list[str]) -> int:
    src, out = Path(argv[1]), Path(argv[2])
    tables = extract(src.read_text(encoding="utf-8"))
    out.mkdir(parents=True, exist_ok=True)
    for family in "AB":
        chosen = {k: v for k, v in tables.items() if k.startswith(family)}
        path = out / f"golden_type{family}.json"
        path.write_text(json.dumps(chosen, indent=1) + "\n", encoding="utf-8")
        print(path, {k: len(v) for k, v in chosen.items()})
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
