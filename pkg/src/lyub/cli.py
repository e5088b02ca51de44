"""Command-line interface: input grammar, table rendering, check mode.

Input files are line-oriented UTF-8 with ``#`` comments and two statements::

    n=5;
    primes: {1,3}, {1,4}, {2,4}, {2,5}, {3,5};

or, equivalently for an ideal given by generators::

    n=4;
    gens: x1*x2, x1*x4, x2*x3, x3*x4;

Variables are named x1..xn.  Masks are printed both as variable products and
as 0/1 vectors.  All reported numbers are exact integers.
"""

import argparse
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

from .combinatorics import (
    MonomialIdeal,
    alexander_dual,
    intersect_face_ideals,
    mask_of,
    mask_str,
    mask_vector,
    minimal_primes,
    minimalize,
    popcount,
)
from .errors import InputError, LyubError
from .hypercube import build_hypercube
from .invariants import (
    bass_table,
    betti_matches_hypercube,
    dual_bass_table,
    injective_dimensions,
    lyubeznik_table,
    nonzero_cohomology_degrees,
    routes_agree,
    sequentially_cm,
    small_support,
    terai_mustata_consistent,
)
from .linalg import QQ, Field, prime_field
from .resolution import betti_numbers, linearity_defect, strand_frame, strand_homology

# ---------------------------------------------------------------------------
# problem specification and input grammar
# ---------------------------------------------------------------------------


@dataclass
class ProblemSpec:
    n: int
    form: str                      # "gens" | "primes"
    masks: tuple[int, ...]         # canonical input masks
    field: Field = QQ
    computations: tuple[str, ...] = ()
    output: str = "text"
    check: bool = False

    def ideal(self) -> MonomialIdeal:
        if self.form == "primes":
            return intersect_face_ideals(self.n, self.masks)
        return minimalize(self.n, self.masks)

    def __eq__(self, other):
        if not isinstance(other, ProblemSpec):
            return NotImplemented
        return (
            self.n == other.n
            and self.form == other.form
            and self.masks == other.masks
            and self.field.key() == other.field.key()
            and self.computations == other.computations
            and self.output == other.output
            and self.check == other.check
        )


_TOKEN = re.compile(r"(?P<num>\d+)|(?P<word>[A-Za-z]\w*)|(?P<punct>[={}:;,*])|(?P<space>\s+)|(?P<bad>.)")


def _tokenize(text: str):
    """Yield (kind, value, line, col) with 1-based positions."""
    line, col = 1, 1
    for m in _TOKEN.finditer(text):
        kind = m.lastgroup
        value = m.group()
        if kind != "space":
            if kind == "bad":
                raise InputError(f"line {line}, col {col}: unexpected character {value!r}")
            yield (kind, value, line, col)
        for ch in value:
            if ch == "\n":
                line += 1
                col = 1
            else:
                col += 1
    yield ("end", "", line, col)


def _strip_comments(text: str) -> str:
    # keep newlines so line numbers stay correct
    return "\n".join(ln.split("#", 1)[0] for ln in text.split("\n"))


class _Parser:
    def __init__(self, text: str):
        self.tokens = list(_tokenize(_strip_comments(text)))
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind or value is not None and tok[1] != value:
            want = value if value is not None else kind
            raise InputError(
                f"line {tok[2]}, col {tok[3]}: expected {want!r}, found {tok[1]!r}"
            )
        self.pos += 1
        return tok

    def error(self, message):
        tok = self.peek()
        raise InputError(f"line {tok[2]}, col {tok[3]}: {message}")


def _parse_monomial(p: _Parser, n: int) -> int:
    mask = 0
    while True:
        tok = p.take("word")
        m = re.fullmatch(r"x(\d+)", tok[1])
        if not m:
            raise InputError(
                f"line {tok[2]}, col {tok[3]}: expected a variable x1..x{n}, found {tok[1]!r}"
            )
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise InputError(
                f"line {tok[2]}, col {tok[3]}: variable x{i} outside x1..x{n}"
            )
        bit = 1 << (i - 1)
        if mask & bit:
            raise InputError(
                f"line {tok[2]}, col {tok[3]}: repeated variable x{i} (monomials must be squarefree)"
            )
        mask |= bit
        if p.peek()[1] != "*":
            return mask
        p.take(value="*")


def _parse_prime(p: _Parser, n: int) -> int:
    p.take(value="{")
    mask = 0
    while True:
        tok = p.take("num")
        i = int(tok[1])
        if not 1 <= i <= n:
            raise InputError(f"line {tok[2]}, col {tok[3]}: index {i} outside 1..{n}")
        mask |= 1 << (i - 1)
        if p.peek()[1] == ",":
            p.take(value=",")
            continue
        p.take(value="}")
        return mask


def parse_input(text: str) -> ProblemSpec:
    """Parse an ideal description; the ideal is canonicalized."""
    p = _Parser(text)
    p.take("word", "n")
    p.take(value="=")
    n = int(p.take("num")[1])
    p.take(value=";")
    tok = p.take("word")
    form = tok[1]
    if form not in ("gens", "primes"):
        raise InputError(
            f"line {tok[2]}, col {tok[3]}: expected 'gens' or 'primes', found {form!r}"
        )
    p.take(value=":")
    masks = []
    while True:
        masks.append(_parse_monomial(p, n) if form == "gens" else _parse_prime(p, n))
        if p.peek()[1] == ",":
            p.take(value=",")
            continue
        p.take(value=";")
        break
    if p.peek()[0] != "end":
        p.error("trailing input after the ideal statement")
    if form == "gens":
        canon = minimalize(n, masks).gens
    else:
        canon = tuple(sorted(set(masks), key=lambda m: (popcount(m), m)))
        intersect_face_ideals(n, canon)  # validates
    return ProblemSpec(n=n, form=form, masks=canon)


def render_input(spec: ProblemSpec) -> str:
    """Canonical text form; parse(render(spec)) round-trips."""
    lines = [f"n={spec.n};"]
    if spec.form == "gens":
        body = ", ".join(mask_str(g, spec.n) for g in spec.masks)
        lines.append(f"gens: {body};")
    else:
        body = ", ".join(
            "{" + ",".join(str(i + 1) for i in range(spec.n) if m >> i & 1) + "}"
            for m in spec.masks
        )
        lines.append(f"primes: {body};")
    return "\n".join(lines) + "\n"


def parse_field(text: str) -> Field:
    if text == "q":
        return QQ
    m = re.fullmatch(r"fp:(\d+)", text)
    if m:
        return prime_field(int(m.group(1)))
    raise InputError(f"unknown field {text!r}; use 'q' or 'fp:<prime>'")


def field_name(f: Field) -> str:
    return "q" if f.kind == "rationals" else f"fp:{f.p}"


# ---------------------------------------------------------------------------
# report building
# ---------------------------------------------------------------------------


def _alpha_json(mask: int, n: int) -> list[int]:
    return list(mask_vector(mask, n))


def _requested_degrees(spec: ProblemSpec, r: int | None) -> list[int]:
    if r is not None:
        return [r]
    ideal = spec.ideal()
    return nonzero_cohomology_degrees(ideal, spec.field)


def _prebuild(spec: ProblemSpec, degrees, threads: int) -> None:
    """Optional concurrent fan-out of the hypercube builds over r."""
    if threads <= 1:
        return
    ideal = spec.ideal()
    with ThreadPoolExecutor(max_workers=threads) as pool:
        list(pool.map(lambda r: build_hypercube(ideal, r, spec.field), degrees))


def run(spec: ProblemSpec, r: int | None = None, threads: int = 1) -> dict:
    """Execute the requested computations and return the JSON-shaped report."""
    ideal = spec.ideal()
    report: dict = {"n": spec.n, "field": field_name(spec.field)}
    want = spec.computations

    def maybe_single(items):
        return items[0] if r is not None and len(items) == 1 else items

    if "info" in want:
        report["ideal"] = {
            "gens": [_alpha_json(g, spec.n) for g in ideal.gens],
            "minimal_primes": [_alpha_json(m, spec.n) for m in minimal_primes(ideal)],
            "dual_gens": [
                _alpha_json(g, spec.n) for g in alexander_dual(ideal).gens
            ],
            "height": ideal.height(),
            "dim": ideal.dim_quotient(),
            "nonzero_r": nonzero_cohomology_degrees(ideal, spec.field),
        }
    if "table" in want:
        table = lyubeznik_table(ideal, spec.field, check=spec.check)
        report["d"] = table.d
        report["lyubeznik"] = [list(row) for row in table.entries]
        if spec.check:
            report["routes_checked"] = True
    if "bass" in want:
        degrees = _requested_degrees(spec, r)
        _prebuild(spec, degrees, threads)
        items = []
        for rr in degrees:
            bt = bass_table(ideal, rr, spec.field)
            items.append(
                {
                    "r": rr,
                    "rows": [
                        {"alpha": _alpha_json(a, spec.n), "mu": list(mu)}
                        for a, mu in bt.rows
                    ],
                }
            )
        report["bass"] = maybe_single(items)
    if "dual_bass" in want:
        degrees = _requested_degrees(spec, r)
        _prebuild(spec, degrees, threads)
        items = []
        for rr in degrees:
            dt = dual_bass_table(ideal, rr, spec.field)
            items.append(
                {
                    "r": rr,
                    "rows": [
                        {"alpha": _alpha_json(a, spec.n), "pi": list(pi)}
                        for a, pi in dt.rows
                    ],
                }
            )
        report["dual_bass"] = maybe_single(items)
    if "betti" in want:
        bt = betti_numbers(ideal, spec.field)
        report["betti"] = {
            "rows": [
                {"j": j, "alpha": _alpha_json(a, spec.n), "beta": c}
                for j, a, c in bt.entries
            ]
        }
    if "strands" in want:
        degrees = [r] if r is not None else list(
            range(popcount(ideal.gens[0]), spec.n + 1)
        )
        items = []
        for rr in degrees:
            frame = strand_frame(ideal, rr, spec.field)
            if frame.is_empty():
                continue
            items.append(
                {
                    "r": rr,
                    "dims": list(frame.dims),
                    "homology": strand_homology(ideal, rr, spec.field),
                }
            )
        report["strands"] = maybe_single(items) if items else items
        report["linearity_defect"] = linearity_defect(ideal, spec.field)
    if "supp" in want:
        degrees = _requested_degrees(spec, r)
        _prebuild(spec, degrees, threads)
        items = []
        for rr in degrees:
            small, big = small_support(ideal, rr, spec.field)
            items.append(
                {
                    "r": rr,
                    "small": [_alpha_json(a, spec.n) for a in small],
                    "support": [_alpha_json(a, spec.n) for a in big],
                    "equal": small == big,
                }
            )
        report["supp"] = maybe_single(items)
    if "dims" in want:
        degrees = _requested_degrees(spec, r)
        _prebuild(spec, degrees, threads)
        items = []
        for rr in degrees:
            rec = injective_dimensions(ideal, rr, spec.field)
            items.append(
                {
                    "r": rr,
                    "star_id": rec.star_id,
                    "id_ungraded": rec.id_ungraded,
                    "dim_module": rec.dim_module,
                    "dim_small_supp": rec.dim_small_supp,
                }
            )
        report["dims"] = maybe_single(items)
    if "seqcm" in want:
        report["seqcm"] = sequentially_cm(ideal, spec.field)
    if "check" in want:
        checks = {
            "routes_agree": routes_agree(ideal, spec.field),
            "terai_mustata": terai_mustata_consistent(ideal, spec.field),
            "betti_hypercube": betti_matches_hypercube(ideal, spec.field),
            "dual_involution": alexander_dual(alexander_dual(ideal)) == ideal,
        }
        checks["ok"] = all(checks.values())
        report["check"] = checks
    return report


# ---------------------------------------------------------------------------
# text rendering
# ---------------------------------------------------------------------------


def _render_lyubeznik(matrix) -> list[str]:
    d = len(matrix) - 1
    width = max(len(str(v)) for row in matrix for v in row)
    out = []
    for p in range(d + 1):
        cells = []
        for i in range(d + 1):
            cells.append(str(matrix[p][i]).rjust(width) if i >= p else "." * width)
        out.append("  [ " + " ".join(cells) + " ]")
    return out


def _mask_label(alpha: list[int]) -> str:
    prod = mask_str(mask_of(i for i, v in enumerate(alpha) if v), len(alpha))
    return f"{prod}  ({','.join(str(v) for v in alpha)})"


def _render_mu_rows(rows, key: str) -> list[str]:
    if not rows:
        return ["  (zero module)"]
    depth = max(len(row[key]) for row in rows)
    labels = [_mask_label(row["alpha"]) for row in rows]
    width = max(len(s) for s in labels)
    head = "  " + " " * width + "".join(f"  {key}_{p}" for p in range(depth))
    out = [head]
    for label, row in zip(labels, rows):
        vals = row[key]
        cells = []
        for p in range(depth):
            v = vals[p] if p < len(vals) else 0
            cells.append(str(v) if v else "-")
        out.append(
            "  " + label.ljust(width) + "".join(c.rjust(len(f"  {key}_{p}")) for p, c in enumerate(cells))
        )
    return out


def render_report(spec: ProblemSpec, report: dict) -> str:
    lines = []
    fname = report["field"]
    if "ideal" in report:
        info = report["ideal"]
        lines.append(f"n = {report['n']}, field {fname}")
        lines.append(
            "gens: " + ", ".join(_mask_label(a) for a in info["gens"])
        )
        lines.append(
            "minimal primes: " + ", ".join(_mask_label(a) for a in info["minimal_primes"])
        )
        lines.append(
            "dual gens: " + ", ".join(_mask_label(a) for a in info["dual_gens"])
        )
        lines.append(f"height {info['height']}, dim R/I = {info['dim']}")
        lines.append(f"nonzero H^r for r in {info['nonzero_r']}")
    if "lyubeznik" in report:
        lines.append(f"Lyubeznik table, d = {report['d']}, field {fname}:")
        lines.extend(_render_lyubeznik(report["lyubeznik"]))
        if report.get("routes_checked"):
            lines.append("  (hypercube and strand routes agree)")
    for key, label, valkey in (
        ("bass", "Bass numbers of H^{r}, field " + fname, "mu"),
        ("dual_bass", "dual Bass numbers of H^{r}, field " + fname, "pi"),
    ):
        if key in report:
            items = report[key]
            for item in items if isinstance(items, list) else [items]:
                lines.append(label.replace("{r}", str(item["r"])) + ":")
                lines.extend(_render_mu_rows(item["rows"], valkey))
    if "betti" in report:
        lines.append(f"Betti numbers, field {fname}:")
        for row in report["betti"]["rows"]:
            lines.append(f"  j={row['j']}  {_mask_label(row['alpha'])}  beta={row['beta']}")
    if "strands" in report:
        items = report["strands"]
        for item in items if isinstance(items, list) else [items]:
            lines.append(
                f"strand r={item['r']}: dims {item['dims']}, frame homology {item['homology']}"
            )
        lines.append(f"linearity defect: {report['linearity_defect']}")
    if "supp" in report:
        items = report["supp"]
        for item in items if isinstance(items, list) else [items]:
            lines.append(f"small support of H^{item['r']}, field {fname}:")
            for a in item["small"]:
                lines.append(f"  {_mask_label(a)}")
            extra = [a for a in item["support"] if a not in item["small"]]
            if extra:
                lines.append("in Supp but not in supp:")
                for a in extra:
                    lines.append(f"  {_mask_label(a)}")
            lines.append(f"  supp == Supp: {'yes' if item['equal'] else 'no'}")
    if "dims" in report:
        items = report["dims"]
        for item in items if isinstance(items, list) else [items]:
            lines.append(
                f"H^{item['r']}: *id = {item['star_id']}, id = {item['id_ungraded']}, "
                f"dim = {item['dim_module']}, dim supp = {item['dim_small_supp']}"
            )
    if "seqcm" in report:
        verdict = "yes" if report["seqcm"] else "no"
        lines.append(f"sequentially Cohen-Macaulay over {fname}: {verdict}")
    if "check" in report:
        checks = report["check"]
        for name in ("routes_agree", "terai_mustata", "betti_hypercube", "dual_involution"):
            lines.append(f"  {name}: {'ok' if checks[name] else 'MISMATCH'}")
        lines.append("routes agree" if checks["ok"] else "CHECK FAILED")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

_COMMANDS = {
    "table": ("table",),
    "bass": ("bass",),
    "dual-bass": ("dual_bass",),
    "betti": ("betti",),
    "strands": ("strands",),
    "supp": ("supp",),
    "dims": ("dims",),
    "seqcm": ("seqcm",),
    "check": ("check",),
    "info": ("info",),
}


def _build_argparser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lyub",
        description="Exact invariants of local cohomology of squarefree monomial ideals.",
    )
    sub = ap.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("file", help="ideal file, or - for stdin")
        p.add_argument("--field", default="q", help="q (default) or fp:<prime>")
        p.add_argument("--r", type=int, default=None, help="cohomological degree")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--check", action="store_true",
                       help="cross-validate the two Lyubeznik routes")
        p.add_argument("--parallel", type=int, default=1, metavar="THREADS",
                       help="fan hypercube builds over this many threads")
    return ap


def main(argv=None) -> int:
    args = _build_argparser().parse_args(argv)
    try:
        text = sys.stdin.read() if args.file == "-" else open(args.file).read()
        spec = parse_input(text)
        spec = replace(
            spec,
            field=parse_field(args.field),
            computations=_COMMANDS[args.command],
            output="json" if args.json else "text",
            check=args.check or args.command == "check",
        )
        report = run(spec, r=args.r, threads=max(args.parallel, 1))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except LyubError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if spec.output == "json":
        print(json.dumps(report, indent=2))
    else:
        print(render_report(spec, report))
    if "check" in report and not report["check"]["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
