"""Command-line front end.

Pipeline: parse the group (named type or raw matrix), optionally a
parabolic subset, then run one of four modes:

  constant  (--u --v --w)      one integer; --verbose adds the word's
                               relative matrix and both solution sets
  expand    (--u --v --expand) the full product expansion
  table     (--table d1 d2)    all products between two degree levels
  selftest  (--selftest)       built-in fixtures and spot properties

Exit codes: 0 success, 1 input error, 2 computation error (group size
bound), 3 selftest failure.  Enumerations can be cached on disk; the
cache is purely advisory and versioned.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import schubert, selftest, weyl
from .errors import GroupTooLarge, SchubertError
from .relmat import cartan_matrix_of_word
from .rootsys import CartanMatrix, cartan_matrix_by_name, validate_cartan
from .weyl import WeylElement, Word

CACHE_FORMAT_VERSION = 1


class CacheVersionError(SchubertError):
    """Cache file written by a newer format than this build understands."""


@dataclass
class JobSpec:
    group: CartanMatrix
    parabolic: tuple[int, ...] = ()
    mode: str = "constant"
    u_word: Optional[Word] = None
    v_word: Optional[Word] = None
    w_word: Optional[Word] = None
    table_degrees: Optional[tuple[int, int]] = None
    include_zeros: bool = False
    verbose: bool = False
    max_group_order: int = weyl.DEFAULT_MAX_GROUP_ORDER
    cache_dir: Optional[Path] = None
    echo_matrix: bool = False
    show_matrix: bool = False


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schuprod",
        description="Multiply Schubert classes of a flag manifold from its Cartan matrix.",
    )
    group = parser.add_argument_group("group input")
    group.add_argument("--type", help="named type and rank, e.g. G2, A4, B3")
    group.add_argument("--matrix", help="raw Cartan matrix as a JSON array of arrays")
    group.add_argument("--job", help="JSON job file (same schema as the flags)")
    parser.add_argument("--parabolic", default="", help="indices generating W', e.g. 1,3")
    parser.add_argument("--u", dest="u", help="word for u, e.g. 2,1,2 (empty = identity)")
    parser.add_argument("--v", dest="v", help="word for v")
    parser.add_argument("--w", dest="w", help="word for w (constant mode)")
    parser.add_argument("--expand", action="store_true", help="expand the product of u and v")
    parser.add_argument("--table", nargs=2, type=int, metavar=("D1", "D2"),
                        help="all products between degree levels D1 and D2")
    parser.add_argument("--selftest", action="store_true", help="run built-in fixtures")
    parser.add_argument("--json", dest="as_json", action="store_true",
                        help="emit a JSON report instead of text")
    parser.add_argument("--verbose", action="store_true")
    parser.add_argument("--include-zeros", action="store_true",
                        help="keep zero terms in expansions")
    parser.add_argument("--max-group-order", type=int, default=weyl.DEFAULT_MAX_GROUP_ORDER)
    parser.add_argument("--cache-dir", help="directory for enumeration caches")
    parser.add_argument("--echo-matrix", action="store_true",
                        help="print the validated Cartan matrix as JSON")
    parser.add_argument("--show-matrix", action="store_true",
                        help="print the relative matrix of the --w word as JSON")
    return parser


def _parse_group(type_name, matrix_text) -> CartanMatrix:
    if type_name and matrix_text:
        raise ValueError("give either --type or --matrix, not both")
    if type_name:
        return cartan_matrix_by_name(type_name)
    if matrix_text:
        try:
            rows = json.loads(matrix_text)
        except json.JSONDecodeError as exc:
            raise ValueError(
                f"cannot parse --matrix at line {exc.lineno} column {exc.colno}: {exc.msg}"
            ) from None
        return validate_cartan(rows)
    raise ValueError("no group given (use --type, --matrix or --job)")


def _parse_job_word(value) -> Word:
    if value is None:
        raise ValueError("missing word")
    if isinstance(value, str):
        return weyl.parse_word(value)
    return tuple(int(x) for x in value)


def job_from_file(path: str, args) -> JobSpec:
    try:
        raw = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(
            f"cannot parse job file {path} at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(raw, dict):
        raise ValueError(f"job file {path} must hold a JSON object")
    group = raw.get("group")
    if isinstance(group, str):
        matrix = cartan_matrix_by_name(group)
    elif isinstance(group, list):
        matrix = validate_cartan(group)
    else:
        raise ValueError("job file needs a 'group' entry (type name or matrix)")
    mode = raw.get("mode", "constant")
    if mode not in ("constant", "expand", "table", "selftest"):
        raise ValueError(f"unknown mode {mode!r} in job file")
    spec = JobSpec(
        group=matrix,
        parabolic=tuple(sorted(int(i) for i in raw.get("parabolic", []))),
        mode=mode,
        include_zeros=bool(raw.get("include_zeros", False)),
        verbose=args.verbose,
        max_group_order=args.max_group_order,
        cache_dir=Path(args.cache_dir) if args.cache_dir else None,
    )
    if "u" in raw:
        spec.u_word = _parse_job_word(raw["u"])
    if "v" in raw:
        spec.v_word = _parse_job_word(raw["v"])
    if "w" in raw:
        spec.w_word = _parse_job_word(raw["w"])
    if "table" in raw:
        d1, d2 = raw["table"]
        spec.table_degrees = (int(d1), int(d2))
    return spec


def job_from_args(args) -> JobSpec:
    if args.job:
        clashing = [args.type, args.matrix, args.u, args.v, args.w, args.table]
        if any(x for x in clashing) or args.expand or args.selftest:
            raise ValueError("--job replaces the input flags; combine only with output flags")
        return job_from_file(args.job, args)
    if args.selftest:
        mode = "selftest"
        matrix = _parse_group(args.type, args.matrix) if (args.type or args.matrix) else cartan_matrix_by_name("G2")
    else:
        matrix = _parse_group(args.type, args.matrix)
        if args.table:
            mode = "table"
        elif args.expand:
            mode = "expand"
        elif args.w is not None and (args.u is not None or args.v is not None):
            mode = "constant"
        elif args.echo_matrix or args.show_matrix:
            mode = "inspect"
        elif args.w is not None:
            mode = "constant"
        else:
            raise ValueError("no action requested (use --w, --expand, --table or --selftest)")
    spec = JobSpec(
        group=matrix,
        parabolic=tuple(sorted(weyl.parse_word(args.parabolic))) if args.parabolic else (),
        mode=mode,
        include_zeros=args.include_zeros,
        verbose=args.verbose,
        max_group_order=args.max_group_order,
        cache_dir=Path(args.cache_dir) if args.cache_dir else None,
        echo_matrix=args.echo_matrix,
        show_matrix=args.show_matrix,
    )
    if args.u is not None:
        spec.u_word = weyl.parse_word(args.u)
    if args.v is not None:
        spec.v_word = weyl.parse_word(args.v)
    if args.w is not None:
        spec.w_word = weyl.parse_word(args.w)
    if args.table:
        spec.table_degrees = (args.table[0], args.table[1])
    return spec


# -- enumeration cache --------------------------------------------------


def _cache_path(cache_dir: Path, c: CartanMatrix, parabolic) -> Path:
    payload = json.dumps(
        {"matrix": c.as_lists(), "parabolic": sorted(parabolic)},
        separators=(",", ":"),
    )
    digest = hashlib.sha256(payload.encode()).hexdigest()[:16]
    return cache_dir / f"weyl-{digest}.json"


def load_cached_reps(cache_dir: Path, c: CartanMatrix, parabolic):
    path = _cache_path(cache_dir, c, parabolic)
    if not path.exists():
        return None
    try:
        raw = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return None
    version = raw.get("format_version")
    if not isinstance(version, int) or version > CACHE_FORMAT_VERSION:
        raise CacheVersionError(
            f"cache file {path} has format version {version}, this build reads <= {CACHE_FORMAT_VERSION}"
        )
    if raw.get("matrix") != c.as_lists() or raw.get("parabolic") != sorted(parabolic):
        return None  # stale or colliding entry; recompute
    try:
        return [
            WeylElement(tuple(item["rho_image"]), int(item["length"]))
            for item in raw["elements"]
        ]
    except (KeyError, TypeError, ValueError):
        return None


def store_cached_reps(cache_dir: Path, c: CartanMatrix, parabolic, reps) -> None:
    cache_dir.mkdir(parents=True, exist_ok=True)
    payload = {
        "format_version": CACHE_FORMAT_VERSION,
        "matrix": c.as_lists(),
        "parabolic": sorted(parabolic),
        "elements": [
            {"rho_image": list(e.rho_image), "length": e.length} for e in reps
        ],
    }
    _cache_path(cache_dir, c, parabolic).write_text(json.dumps(payload))


def _representatives(spec: JobSpec) -> list[WeylElement]:
    if spec.cache_dir is not None:
        cached = load_cached_reps(spec.cache_dir, spec.group, spec.parabolic)
        if cached is not None:
            return cached
    reps = weyl.minimal_coset_reps(spec.group, spec.parabolic, spec.max_group_order)
    if spec.cache_dir is not None:
        store_cached_reps(spec.cache_dir, spec.group, spec.parabolic, reps)
    return reps


# -- execution -----------------------------------------------------------


def _element(word: Word, c: CartanMatrix) -> WeylElement:
    return weyl.element_of_word(word, c)


def _record(u_word, v_word, w_word, value) -> dict:
    return {
        "u_word": list(u_word),
        "v_word": list(v_word),
        "w_word": list(w_word),
        "value": value,
    }


def run(spec: JobSpec) -> dict:
    c = spec.group
    report: dict = {
        "format_version": 1,
        "mode": spec.mode,
        "group": c.as_lists(),
        "parabolic": list(spec.parabolic),
    }
    if spec.echo_matrix:
        report["matrix_echo"] = c.as_lists()
    if spec.show_matrix:
        if spec.w_word is None:
            raise ValueError("--show-matrix needs --w")
        report["relative_matrix"] = cartan_matrix_of_word(spec.w_word, c).as_lists()
    if spec.mode == "inspect":
        return report

    if spec.mode == "constant":
        if spec.u_word is None or spec.v_word is None or spec.w_word is None:
            raise ValueError("constant mode needs --u, --v and --w")
        u, v = _element(spec.u_word, c), _element(spec.v_word, c)
        if spec.parabolic:
            w = _element(spec.w_word, c)
            schubert.ensure_minimal_reps(spec.parabolic, c, u=u, v=v, w=w)
        # Evaluate with the caller's decomposition so the verbose data
        # describes exactly what was computed.
        value = schubert.structure_constant_for_word(spec.w_word, u, v, c)
        report["record"] = _record(spec.u_word, spec.v_word, spec.w_word, value)
        if spec.verbose:
            report["detail"] = {
                "w_word": list(spec.w_word),
                "relative_matrix": cartan_matrix_of_word(spec.w_word, c).as_lists(),
                "u_solutions": [list(s) for s in schubert.subword_solutions(spec.w_word, u, c)],
                "v_solutions": [list(s) for s in schubert.subword_solutions(spec.w_word, v, c)],
                "u_sum": schubert.subword_sum(spec.w_word, u, c).as_records(),
                "v_sum": schubert.subword_sum(spec.w_word, v, c).as_records(),
            }
        return report

    if spec.mode == "expand":
        if spec.u_word is None or spec.v_word is None:
            raise ValueError("expand mode needs --u and --v")
        u, v = _element(spec.u_word, c), _element(spec.v_word, c)
        reps = _representatives(spec)
        if spec.parabolic:
            schubert.ensure_minimal_reps(spec.parabolic, c, u=u, v=v)
        records = _expansion_records(spec, c, u, v, reps)
        report["u"] = weyl.element_to_dict(u, c)
        report["v"] = weyl.element_to_dict(v, c)
        report["records"] = records
        return report

    if spec.mode == "table":
        if spec.table_degrees is None:
            raise ValueError("table mode needs two degree levels")
        d1, d2 = spec.table_degrees
        if d1 < 0 or d2 < 0:
            raise ValueError("degree levels must be non-negative")
        reps = _representatives(spec)
        us = [e for e in reps if e.length == d1]
        vs = [e for e in reps if e.length == d2]
        pairs = [(x, y) for x in us for y in vs]
        with ThreadPoolExecutor() as pool:
            blocks = list(
                pool.map(lambda p: _expansion_records(spec, c, p[0], p[1], reps), pairs)
            )
        report["degrees"] = [d1, d2]
        report["records"] = [rec for block in blocks for rec in block]
        return report

    raise ValueError(f"unknown mode {spec.mode!r}")


def _expansion_records(spec, c, u, v, reps) -> list[dict]:
    degree = u.length + v.length
    u_word = weyl.reduced_word(u, c)
    v_word = weyl.reduced_word(v, c)
    records = []
    for w in reps:
        if w.length != degree:
            continue
        w_word = weyl.reduced_word(w, c)
        value = schubert.structure_constant_for_word(w_word, u, v, c)
        if value != 0 or spec.include_zeros:
            records.append(_record(u_word, v_word, w_word, value))
    return records


# -- rendering -----------------------------------------------------------


def _class_name(word) -> str:
    return "P[e]" if not word else f"P[{weyl.format_word(word)}]"


def _sum_string(records) -> str:
    # Zero records only reach here under --include-zeros; keep them so the
    # text and JSON renderings carry identical numeric content.
    parts = [
        ("" if rec["value"] == 1 else f"{rec['value']}*") + _class_name(rec["w_word"])
        for rec in records
    ]
    return " + ".join(parts) if parts else "0"


def render_text(report: dict) -> str:
    lines = []
    if "matrix_echo" in report:
        lines.append(json.dumps(report["matrix_echo"], separators=(",", ":")))
    if "relative_matrix" in report and report["mode"] == "inspect":
        lines.append(json.dumps(report["relative_matrix"], separators=(",", ":")))
    mode = report["mode"]
    if mode == "constant":
        if "detail" in report:
            d = report["detail"]
            lines.append(f"w word: {weyl.format_word(d['w_word'])}")
            lines.append("relative matrix:")
            for row in d["relative_matrix"]:
                lines.append("  " + " ".join(f"{x:3d}" for x in row))
            lines.append(
                "u solutions: " + (", ".join(str(tuple(s)) for s in d["u_solutions"]) or "(none)")
            )
            lines.append(
                "v solutions: " + (", ".join(str(tuple(s)) for s in d["v_solutions"]) or "(none)")
            )
        lines.append(str(report["record"]["value"]))
    elif mode == "expand":
        rec0 = report["records"]
        lhs = f"{_class_name(report['u']['word'])} * {_class_name(report['v']['word'])}"
        lines.append(f"{lhs} = {_sum_string(rec0)}")
    elif mode == "table":
        grouped: dict[tuple, list] = {}
        for rec in report["records"]:
            grouped.setdefault((tuple(rec["u_word"]), tuple(rec["v_word"])), []).append(rec)
        if grouped:
            width = max(
                len(f"{_class_name(u)} * {_class_name(v)}") for (u, v) in grouped
            )
            for (u_word, v_word), recs in grouped.items():
                lhs = f"{_class_name(u_word)} * {_class_name(v_word)}"
                lines.append(f"{lhs.ljust(width)} = {_sum_string(recs)}")
        else:
            lines.append("(empty table)")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        spec = job_from_args(args)
    except (SchubertError, ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if spec.mode == "selftest":
        failures = 0
        for result in selftest.run_selftest():
            status = "PASS" if result.passed else "FAIL"
            suffix = f": {result.detail}" if result.detail else ""
            print(f"{status} {result.name}{suffix}")
            failures += 0 if result.passed else 1
        return 3 if failures else 0

    try:
        report = run(spec)
    except GroupTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SchubertError, ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if args.as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        text = render_text(report)
        if text:
            print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
