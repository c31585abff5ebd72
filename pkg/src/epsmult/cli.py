"""Command-line front end.

Six subcommands compute the library's headline quantities and write
deterministic CSV or JSON reports: epsilon (the sequence e_n), amao (one
stabilized multiplicity), theorem-a (the convergence table with the
epsilon sequence appended), okounkov-volume (truncated-semigroup counts
and the volume-difference estimate), semigroup (level counts and volume
of a serialized semigroup), and lemmas (containment and truncation
checks over an input ideal and/or a seeded random corpus).

Exit codes: 0 success, 2 inconclusive stabilization, 4 parse errors
(ideal syntax, JSON schema, unusable command line), 3 any other violated
precondition.  Every report embeds its full configuration, so reruns
with equal inputs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

from .corpus import corpus
from .errors import (
    EpsmultError,
    IdealSyntaxError,
    InconclusiveError,
)
from .families import GradedFamilySpec
from .ideals import MonomialIdeal, from_json_dict
from .multiplicity import (
    amao,
    check_sat_power_containment,
    epsilon_sequence,
    swanson_c_search,
    theorem_a_table,
)
from .okounkov import epsilon_via_volumes, gamma_beta, hull_volume
from .semigroups import Semigroup, check_cone_conditions, semigroup_from_json_dict

_NAMED_VARS = {"x": 0, "y": 1, "z": 2, "w": 3}
_MAX_INDEXED_DIM = 16
_TOKEN = re.compile(r"[A-Za-z]+[0-9]*|[0-9]+|\^|\*|,|\+|\S")


# -- ideal parsing -----------------------------------------------------------


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse either the JSON schema or the human monomial-list syntax.

    Human syntax: comma-separated monomials over x, y, z, w (up to four
    variables) or x1..xd, with '*' between factors and '^' for powers,
    e.g. "x^2*y, y^3".  Whitespace is ignored everywhere.
    """
    stripped = text.strip()
    if not stripped:
        raise IdealSyntaxError("empty input", 1, 1)
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise IdealSyntaxError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
        try:
            return from_json_dict(data)
        except (ValueError, TypeError) as exc:
            raise IdealSyntaxError(str(exc), 1, 1) from exc
    return _parse_human(text)


def _tokenize(text: str):
    for lineno, line in enumerate(text.split("\n"), start=1):
        for match in _TOKEN.finditer(line):
            yield match.group(), lineno, match.start() + 1


def _parse_human(text: str) -> MonomialIdeal:
    tokens = list(_tokenize(text))
    # split on commas into generator token runs
    runs: list[list[tuple[str, int, int]]] = [[]]
    for tok in tokens:
        if tok[0] == ",":
            runs.append([])
        else:
            runs[-1].append(tok)
    scheme: str | None = None  # "named" | "indexed"
    raw_gens: list[dict[int, int]] = []
    max_index = 0
    for run in runs:
        if not run:
            where = tokens[-1] if tokens else ("", 1, 1)
            raise IdealSyntaxError("empty generator", where[1], where[2])
        exps: dict[int, int] = {}
        expect_factor = True
        i = 0
        while i < len(run):
            tok, line, col = run[i]
            if tok == "+":
                raise IdealSyntaxError("sums are not monomials", line, col)
            if expect_factor:
                index, scheme = _variable_index(tok, scheme, line, col)
                power = 1
                if i + 1 < len(run) and run[i + 1][0] == "^":
                    if i + 2 >= len(run) or not run[i + 2][0].isdigit():
                        bad = run[i + 1]
                        raise IdealSyntaxError(
                            "'^' must be followed by a nonnegative integer",
                            bad[1],
                            bad[2],
                        )
                    power = int(run[i + 2][0])
                    i += 2
                exps[index] = exps.get(index, 0) + power
                max_index = max(max_index, index)
                expect_factor = False
            else:
                if tok != "*":
                    raise IdealSyntaxError(
                        f"expected '*' or ',' before {tok!r}", line, col
                    )
                expect_factor = True
            i += 1
        if expect_factor:
            tok, line, col = run[-1]
            raise IdealSyntaxError("generator ends with a dangling '*'", line, col)
        raw_gens.append(exps)
    dim = max_index + 1
    vectors = [
        tuple(exps.get(a, 0) for a in range(dim)) for exps in raw_gens
    ]
    return MonomialIdeal(dim, vectors)


def _variable_index(tok: str, scheme: str | None, line: int, col: int):
    if tok.isdigit():
        raise IdealSyntaxError(
            "bare integers are not monomials; use the JSON form for "
            "constant ideals",
            line,
            col,
        )
    if not tok[0].isalpha():
        raise IdealSyntaxError(f"unexpected token {tok!r}", line, col)
    m = re.fullmatch(r"([A-Za-z]+?)([0-9]+)?", tok)
    name, suffix = m.group(1), m.group(2)
    if suffix is None:
        if name not in _NAMED_VARS:
            raise IdealSyntaxError(
                f"unknown variable {name!r} (named variables are x, y, z, w)",
                line,
                col,
            )
        if scheme == "indexed":
            raise IdealSyntaxError(
                "cannot mix named variables (x, y, z, w) with indexed x1..xd",
                line,
                col,
            )
        return _NAMED_VARS[name], "named"
    if name != "x":
        raise IdealSyntaxError(
            f"unknown variable {tok!r} (indexed variables are x1..xd)", line, col
        )
    if scheme == "named":
        raise IdealSyntaxError(
            "cannot mix named variables (x, y, z, w) with indexed x1..xd",
            line,
            col,
        )
    index = int(suffix)
    if index < 1:
        raise IdealSyntaxError("indexed variables start at x1", line, col)
    if index > _MAX_INDEXED_DIM:
        raise IdealSyntaxError(
            f"dimension {index} exceeds the supported maximum {_MAX_INDEXED_DIM}",
            line,
            col,
        )
    return index - 1, "indexed"


# -- small rendering helpers -------------------------------------------------


def _decimal12(value: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = 60
        dec = Decimal(value.numerator) / Decimal(value.denominator)
        return str(dec.quantize(Decimal("1.000000000000")))


def _config_line(cfg: dict) -> str:
    return "# config: " + json.dumps(cfg, sort_keys=True)


def _emit(args, lines: list[str], payload: dict) -> None:
    if args.format == "json":
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_text(arg: str) -> str:
    if os.path.exists(arg):
        with open(arg, "r", encoding="utf-8") as fh:
            return fh.read()
    if arg.endswith(".json") or os.sep in arg:
        raise IdealSyntaxError(f"no such file: {arg}", 1, 1)
    return arg


def _load_ideal(arg: str) -> MonomialIdeal:
    return parse_ideal(_load_text(arg))


def _ideal_cell(ideal: MonomialIdeal) -> str:
    gens = ";".join(" ".join(str(x) for x in g) for g in ideal.generators)
    return f"d={ideal.dim}:{gens}"


# -- subcommands -------------------------------------------------------------


def _cmd_epsilon(args) -> int:
    ideal = _load_ideal(args.ideal)
    est = epsilon_sequence(ideal, args.nmax)
    cfg = {
        "command": "epsilon",
        "format": args.format,
        "ideal": args.ideal,
        "nmax": args.nmax,
    }
    lines = [_config_line(cfg), "n,length,e_n(num),e_n(den)"]
    rows = []
    for n, (length, value) in enumerate(zip(est.lengths, est.sequence), start=1):
        lines.append(f"{n},{length},{value.numerator},{value.denominator}")
        rows.append(
            {
                "n": n,
                "length": length,
                "num": value.numerator,
                "den": value.denominator,
                "decimal": _decimal12(value),
            }
        )
    _emit(args, lines, {"config": cfg, "rows": rows})
    return 0


def _cmd_amao(args) -> int:
    inner = _load_ideal(args.inner)
    outer = _load_ideal(args.outer)
    res = amao(inner, outer, k_max=args.kmax, window=args.window)
    cfg = {
        "command": "amao",
        "format": args.format,
        "inner": args.inner,
        "kmax": args.kmax,
        "outer": args.outer,
        "window": args.window,
    }
    lines = [
        _config_line(cfg),
        "value,stabilized_at,window",
        f"{res.value},{res.stabilized_at},{res.window}",
    ]
    payload = {
        "config": cfg,
        "value": res.value,
        "stabilized_at": res.stabilized_at,
        "window": res.window,
    }
    _emit(args, lines, payload)
    return 0


def _epsilon_rows(ideal: MonomialIdeal, nmax: int):
    est = epsilon_sequence(ideal, nmax)
    lines = ["n,length,e_n(num),e_n(den)"]
    rows = []
    for n, (length, value) in enumerate(zip(est.lengths, est.sequence), start=1):
        lines.append(f"{n},{length},{value.numerator},{value.denominator}")
        rows.append(
            {
                "n": n,
                "length": length,
                "num": value.numerator,
                "den": value.denominator,
                "decimal": _decimal12(value),
            }
        )
    return lines, rows


def _cmd_theorem_a(args) -> int:
    ideal = _load_ideal(args.ideal)
    table = theorem_a_table(ideal, m_max=args.mmax, k_max=args.kmax, window=args.window)
    cfg = {
        "command": "theorem-a",
        "format": args.format,
        "ideal": args.ideal,
        "kmax": args.kmax,
        "mmax": args.mmax,
        "nmax": args.nmax,
        "window": args.window,
    }
    lines = [_config_line(cfg), "m,a_m,ratio_num,ratio_den,stabilized_at"]
    rows = []
    inconclusive = False
    for row in table:
        if row.status == "inconclusive":
            inconclusive = True
            lines.append(f"{row.m},inconclusive,,,")
            rows.append({"m": row.m, "status": "inconclusive"})
        else:
            lines.append(
                f"{row.m},{row.a_value},{row.ratio.numerator},"
                f"{row.ratio.denominator},{row.stabilized_at}"
            )
            rows.append(
                {
                    "m": row.m,
                    "status": "ok",
                    "a_m": row.a_value,
                    "ratio_num": row.ratio.numerator,
                    "ratio_den": row.ratio.denominator,
                    "ratio_decimal": _decimal12(row.ratio),
                    "stabilized_at": row.stabilized_at,
                }
            )
    eps_lines, eps_rows = _epsilon_rows(ideal, args.nmax)
    lines.append("# epsilon sequence")
    lines.extend(eps_lines)
    payload = {"config": cfg, "table": rows, "epsilon": eps_rows}
    _emit(args, lines, payload)
    return 2 if inconclusive else 0


def _volume_sweep_lines(sg: Semigroup, nmax: int, exact: Fraction | None):
    header = "n,count,estimate_num,estimate_den,exact_num,exact_den"
    ex_num = exact.numerator if exact is not None else ""
    ex_den = exact.denominator if exact is not None else ""
    lines = [header]
    rows = []
    d = sg.dim
    for n in range(1, nmax + 1):
        count = sg.count(n)
        estimate = Fraction(count, n**d)
        lines.append(
            f"{n},{count},{estimate.numerator},{estimate.denominator},{ex_num},{ex_den}"
        )
        row = {
            "n": n,
            "count": count,
            "estimate_num": estimate.numerator,
            "estimate_den": estimate.denominator,
            "estimate_decimal": _decimal12(estimate),
        }
        if exact is not None:
            row["exact_num"] = exact.numerator
            row["exact_den"] = exact.denominator
        rows.append(row)
    return lines, rows


def _cmd_okounkov_volume(args) -> int:
    ideal = _load_ideal(args.ideal)
    cfg = {
        "command": "okounkov-volume",
        "format": args.format,
        "beta": args.beta,
        "ideal": args.ideal,
        "nmax": args.nmax,
    }
    sat_sg = gamma_beta(
        GradedFamilySpec.saturated_powers(ideal), args.beta, i_max=1
    )
    pow_sg = gamma_beta(GradedFamilySpec.powers(ideal), args.beta, i_max=1)
    lines = [_config_line(cfg), "# family: saturated_powers"]
    sat_lines, sat_rows = _volume_sweep_lines(sat_sg, args.nmax, None)
    lines.extend(sat_lines)
    lines.append("# family: powers")
    pow_lines, pow_rows = _volume_sweep_lines(pow_sg, args.nmax, None)
    lines.extend(pow_lines)
    via = epsilon_via_volumes(ideal, args.beta, args.nmax)
    lines.append(
        "# epsilon_via_volumes: num=%d, den=%d, decimal=%s"
        % (via.value.numerator, via.value.denominator, _decimal12(via.value))
    )
    payload = {
        "config": cfg,
        "saturated_powers": sat_rows,
        "powers": pow_rows,
        "epsilon_via_volumes": {
            "num": via.value.numerator,
            "den": via.value.denominator,
            "decimal": _decimal12(via.value),
            "count_saturated": via.count_saturated,
            "count_powers": via.count_powers,
        },
    }
    _emit(args, lines, payload)
    return 0


def _cmd_semigroup(args) -> int:
    text = _load_text(args.ideal)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise IdealSyntaxError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    try:
        sg = semigroup_from_json_dict(data)
    except (ValueError, TypeError) as exc:
        raise IdealSyntaxError(str(exc), 1, 1) from exc
    cfg = {
        "command": "semigroup",
        "format": args.format,
        "input": args.ideal,
        "nmax": args.nmax,
    }
    if args.beta is not None:
        cfg["beta"] = args.beta
    exact = None
    if sg.generators is not None and all(g[-1] == 1 for g in sg.generators):
        exact = hull_volume([g[:-1] for g in sg.generators], sg.dim)
    if sg.is_generated:
        sweep_levels = args.nmax
    else:
        materialized = [i for i in sg.materialized_levels() if 1 <= i <= args.nmax]
        sweep_levels = materialized
    lines = [_config_line(cfg)]
    payload: dict = {"config": cfg}
    if args.beta is not None:
        cones = check_cone_conditions(sg, args.beta)
        lines.append(
            f"# cone2={'true' if cones['cone2'] else 'false'},"
            f"cone3={'true' if cones['cone3'] else 'false'}"
        )
        payload["cone_conditions"] = cones
    if isinstance(sweep_levels, int):
        sweep = range(1, sweep_levels + 1)
    else:
        sweep = sweep_levels
    header = "n,count,estimate_num,estimate_den,exact_num,exact_den"
    ex_num = exact.numerator if exact is not None else ""
    ex_den = exact.denominator if exact is not None else ""
    lines.append(header)
    rows = []
    for n in sweep:
        count = sg.count(n)
        estimate = Fraction(count, n**sg.dim)
        lines.append(
            f"{n},{count},{estimate.numerator},{estimate.denominator},{ex_num},{ex_den}"
        )
        row = {
            "n": n,
            "count": count,
            "estimate_num": estimate.numerator,
            "estimate_den": estimate.denominator,
            "estimate_decimal": _decimal12(estimate),
        }
        if exact is not None:
            row["exact_num"] = exact.numerator
            row["exact_den"] = exact.denominator
        rows.append(row)
    payload["rows"] = rows
    if exact is not None:
        payload["exact"] = {
            "num": exact.numerator,
            "den": exact.denominator,
            "decimal": _decimal12(exact),
        }
    _emit(args, lines, payload)
    return 0


def _cmd_lemmas(args) -> int:
    cfg = {
        "command": "lemmas",
        "format": args.format,
        "kmax": args.kmax,
        "nmax": args.nmax,
        "seed": args.seed,
    }
    if args.ideal is not None:
        cfg["ideal"] = args.ideal
    entries: list[tuple[str, MonomialIdeal]] = []
    if args.ideal is not None:
        entries.append(("input", _load_ideal(args.ideal)))
    for pos, ideal in enumerate(corpus(args.seed, args.nmax)):
        entries.append((f"corpus[{pos}]", ideal))
    lines = [_config_line(cfg), "label,ideal,lemma3_ok,lemma4_grid_c"]
    rows = []
    failures = 0
    grid_cs: list[int] = []
    fixed_c: int | None = None
    for label, ideal in entries:
        containment = check_sat_power_containment(ideal, args.kmax)
        search = swanson_c_search(ideal)
        c_cell = "none" if search.c is None else str(search.c)
        if search.c is not None:
            grid_cs.append(search.c)
            if label == "input":
                fixed_c = search.c
        if not containment.ok:
            failures += 1
        lines.append(
            f"{label},{_ideal_cell(ideal)},"
            f"{'true' if containment.ok else 'false'},{c_cell}"
        )
        rows.append(
            {
                "label": label,
                "dim": ideal.dim,
                "generators": [list(g) for g in ideal.generators],
                "lemma3_ok": containment.ok,
                "lemma3_first_failure": containment.first_failure,
                "lemma4_grid_c": search.c,
            }
        )
    total = len(entries)
    lines.append(f"# lemma3: {total - failures}/{total} pass")
    if fixed_c is not None:
        lines.append(f"# lemma4 grid-c = {fixed_c}")
    if grid_cs:
        lines.append(f"# lemma4: max grid-c = {max(grid_cs)}")
    payload = {
        "config": cfg,
        "rows": rows,
        "lemma3_passes": total - failures,
        "lemma3_total": total,
        "lemma4_max_grid_c": max(grid_cs) if grid_cs else None,
    }
    _emit(args, lines, payload)
    return 3 if failures else 0


# -- argument plumbing -------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped onto the parse-error exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(4)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="epsmult",
        description="Exact multiplicity computations for monomial ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", default=None, help="write the report to this path")

    p = sub.add_parser("epsilon", help="epsilon sequence of an ideal")
    p.add_argument("-i", "--ideal", required=True)
    p.add_argument("--nmax", type=int, default=10)
    common(p)
    p.set_defaults(func=_cmd_epsilon)

    p = sub.add_parser("amao", help="stabilized relative multiplicity of a pair")
    p.add_argument("--inner", required=True)
    p.add_argument("--outer", required=True)
    p.add_argument("--kmax", type=int, default=20)
    p.add_argument("--window", type=int, default=3)
    common(p)
    p.set_defaults(func=_cmd_amao)

    p = sub.add_parser("theorem-a", help="convergence table plus epsilon sequence")
    p.add_argument("-i", "--ideal", required=True)
    p.add_argument("--mmax", type=int, default=6)
    p.add_argument("--kmax", type=int, default=20)
    p.add_argument("--window", type=int, default=3)
    p.add_argument("--nmax", type=int, default=10, help="epsilon appendix length")
    common(p)
    p.set_defaults(func=_cmd_theorem_a)

    p = sub.add_parser(
        "okounkov-volume", help="truncated-semigroup counts and volume difference"
    )
    p.add_argument("-i", "--ideal", required=True)
    p.add_argument("--beta", type=int, default=4)
    p.add_argument("--nmax", type=int, default=50, help="probe level")
    common(p)
    p.set_defaults(func=_cmd_okounkov_volume)

    p = sub.add_parser("semigroup", help="level counts and volume of a semigroup")
    p.add_argument("-i", "--ideal", required=True, help="semigroup JSON (file or literal)")
    p.add_argument("--nmax", type=int, default=20)
    p.add_argument("--beta", type=int, default=None, help="also report cone conditions")
    common(p)
    p.set_defaults(func=_cmd_semigroup)

    p = sub.add_parser("lemmas", help="containment and truncation lemma checks")
    p.add_argument("-i", "--ideal", default=None)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--nmax", type=int, default=50, help="corpus size")
    p.add_argument("--kmax", type=int, default=4, help="containment check depth")
    common(p)
    p.set_defaults(func=_cmd_lemmas)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return 4 if code not in (0, None) else 0
    try:
        return args.func(args)
    except IdealSyntaxError as exc:
        print(
            f"error: {exc} (line {exc.line}, column {exc.column})",
            file=sys.stderr,
        )
        return 4
    except InconclusiveError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return 2
    except EpsmultError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    sys.exit(main())
