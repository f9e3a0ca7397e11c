"""Command line interface: ``geolab {selfint,enumerate,sequence,render,verify}``.

Words use the letters a, A, b, B where A and B stand for the inverses of a
and b. Exit codes: 0 ok, 1 a verify claim failed, 2 oracle mismatch, 64 word
does not parse, 65 word is a proper power, 66 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import intersection, oracle, systole
from .chart import SurfaceKind
from .errors import BoundaryAmbiguityError, CapExceededError, ConfigInvalidError, IdentityWordError, NonPrimitiveError, WordParseError
from .words import CyclicWord, canonical_class, is_primitive, parse_cyclic

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_MISMATCH = 2
EXIT_PARSE = 64
EXIT_NONPRIMITIVE = 65
EXIT_CAP = 66

MAX_LENGTH_CAP = 14
K_MAX_CAP = 60


@dataclass(frozen=True)
class RunConfig:
    surface: SurfaceKind
    lambda_a: float = oracle.DEFAULT_LAMBDAS[0]
    lambda_b: float = oracle.DEFAULT_LAMBDAS[1]
    fmt: str = "csv"
    workers: int | None = None
    max_length_cap: int = MAX_LENGTH_CAP
    k_max_cap: int = K_MAX_CAP

    def __post_init__(self):
        if self.lambda_a <= 0 or self.lambda_b <= 0:
            raise ConfigInvalidError("translation lengths must be positive")
        if self.fmt not in ("csv", "json"):
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.workers is not None and self.workers < 1:
            raise ValueError("workers must be >= 1")

    def oracle_config(self) -> oracle.SchottkyConfig:
        return oracle.standard_config(self.surface, self.lambda_a, self.lambda_b)


def read_config_file(path) -> dict[str, str]:
    """key=value lines; blank lines and # comments are ignored."""
    out = {}
    for n, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{n}: expected key=value")
        k, v = line.split("=", 1)
        out[k.strip().replace("-", "_")] = v.strip()
    return out


def _env_workers() -> int | None:
    v = os.environ.get("GEOLAB_WORKERS")
    return int(v) if v else None


def build_config(args) -> RunConfig:
    file_values = read_config_file(args.config) if getattr(args, "config", None) else {}

    def pick(name, cast, default):
        v = getattr(args, name, None)
        if v is not None:
            return v
        if name in file_values:
            return cast(file_values[name])
        return default

    surface = pick("surface", str, None)
    if surface is None:
        raise ValueError("--surface is required")
    return RunConfig(
        surface=SurfaceKind.parse(surface),
        lambda_a=pick("lambda_a", float, oracle.DEFAULT_LAMBDAS[0]),
        lambda_b=pick("lambda_b", float, oracle.DEFAULT_LAMBDAS[1]),
        fmt=pick("format", str, "csv"),
        workers=pick("workers", int, _env_workers()),
        max_length_cap=int(file_values.get("max_length_cap", MAX_LENGTH_CAP)),
        k_max_cap=int(file_values.get("k_max_cap", K_MAX_CAP)),
    )


class _Out:
    """Single ordered writer for stdout or --out."""

    def __init__(self, path):
        self._fh = open(path, "w", encoding="utf-8", newline="") if path else sys.stdout

    def line(self, text: str = "") -> None:
        self._fh.write(text + "\n")

    def close(self) -> None:
        if self._fh is not sys.stdout:
            self._fh.close()
        else:
            self._fh.flush()


def _json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)


def _parse_word(text: str) -> CyclicWord:
    w = parse_cyclic(text)
    if not is_primitive(w):
        raise NonPrimitiveError(f"{text!r} is a proper power")
    return w


def cmd_selfint(args, cfg: RunConfig, out: _Out) -> int:
    w = _parse_word(args.word)
    i = intersection.self_intersection(cfg.surface, w)
    status = EXIT_OK
    record = {"word": canonical_class(w).text, "surface": cfg.surface.value, "L": len(w), "i": i}
    if args.oracle:
        n = oracle.numeric_self_intersection(cfg.oracle_config(), w)
        record["oracle"] = n
        if n != i:
            status = EXIT_MISMATCH
    if cfg.fmt == "json":
        out.line(_json(record))
    elif args.oracle:
        out.line(f"{i} oracle={record['oracle']}" + ("" if status == EXIT_OK else " MISMATCH"))
    else:
        out.line(str(i))
    if args.show_pairs:
        for p in intersection.linked_pairs(cfg.surface, w):
            cls = intersection.pair_class(w, (p.i, p.j))
            if cfg.fmt == "json":
                out.line(_json({"pair": [p.i, p.j], "class": cls.word}))
            else:
                out.line(f"pair {p.i},{p.j} class {cls.word}")
    if status == EXIT_MISMATCH:
        print(f"oracle mismatch: combinatorial {i}, numeric {record['oracle']}", file=sys.stderr)
    return status


def cmd_enumerate(args, cfg: RunConfig, out: _Out) -> int:
    L_max = args.max_length
    if L_max < 1:
        raise ValueError("--max-length must be >= 1")
    if L_max > cfg.max_length_cap:
        raise CapExceededError(f"--max-length {L_max} exceeds the cap {cfg.max_length_cap}")
    if cfg.fmt == "csv":
        out.line("word,L,i,saturates_bound")
    for r in systole.enumerate_classes(cfg.surface, L_max, cfg.workers):
        if cfg.fmt == "csv":
            out.line(f"{r.word},{r.L},{r.i},{'true' if r.saturates else 'false'}")
        else:
            out.line(_json({"word": r.word, "L": r.L, "i": r.i, "saturates_bound": r.saturates}))
    return EXIT_OK


def cmd_sequence(args, cfg: RunConfig, out: _Out) -> int:
    k_max = args.k_max if args.k_max is not None else args.k
    if k_max is None:
        raise ValueError("--k-max is required")
    if k_max < 1:
        raise ValueError("--k-max must be >= 1")
    if k_max > cfg.k_max_cap:
        raise CapExceededError(f"--k-max {k_max} exceeds the cap {cfg.k_max_cap}")
    if cfg.fmt == "csv":
        out.line("k,s_k,I_k,I_k_minus_k,witnesses,basis")
    for r in systole.sequence(cfg.surface, k_max, cfg.workers):
        if cfg.fmt == "csv":
            out.line(f"{r.k},{r.s_k},{r.I_k},{r.excess},{';'.join(r.witnesses)},{r.basis}")
        else:
            out.line(_json({"k": r.k, "s_k": r.s_k, "I_k": r.I_k, "I_k_minus_k": r.excess, "witnesses": list(r.witnesses), "basis": r.basis}))
    return EXIT_OK


def cmd_render(args, cfg: RunConfig, out: _Out) -> int:
    from . import render

    w = _parse_word(args.word)
    svg = render.render_svg(cfg.surface, w, cfg.oracle_config())
    if args.out:
        Path(args.out).write_text(svg, encoding="utf-8")
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig, out: _Out) -> int:
    default_L = 10 if cfg.surface is SurfaceKind.torus else 9
    L_max = args.max_length if args.max_length is not None else default_L
    k_max = args.k_max if args.k_max is not None else 20
    if L_max > cfg.max_length_cap:
        raise CapExceededError(f"--max-length {L_max} exceeds the cap {cfg.max_length_cap}")
    if k_max > cfg.k_max_cap:
        raise CapExceededError(f"--k-max {k_max} exceeds the cap {cfg.k_max_cap}")
    report = systole.verify(cfg.surface, max(L_max, 2), k_max, cfg.workers)
    if cfg.fmt == "json":
        out.line(_json(report.as_dict()))
    else:
        for line in report.lines():
            out.line(line)
    return EXIT_OK if report.passed else EXIT_VERIFY


COMMANDS = {
    "selfint": cmd_selfint,
    "enumerate": cmd_enumerate,
    "sequence": cmd_sequence,
    "render": cmd_render,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--surface", choices=["pants", "torus"], help="surface kind (may come from --config)")
    common.add_argument("--format", choices=["csv", "json"], default=None)
    common.add_argument("--workers", type=int, default=None, help="threads for enumeration (default $GEOLAB_WORKERS)")
    common.add_argument("--lambda-a", dest="lambda_a", type=float, default=None, help="translation length of a in the numeric model")
    common.add_argument("--lambda-b", dest="lambda_b", type=float, default=None)
    common.add_argument("--out", default=None, help="write output to this file")
    common.add_argument("--config", default=None, help="key=value file with defaults for the options above")

    p = argparse.ArgumentParser(
        prog="geolab",
        description="Self-intersection of curves on the pair of pants and the punctured torus. "
        "Words are written with a, A, b, B (A = a^-1, B = b^-1).",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("selfint", parents=[common], help="self-intersection number of one word")
    s.add_argument("word")
    s.add_argument("--oracle", action="store_true", help="also count crossings numerically; exit 2 on mismatch")
    s.add_argument("--show-pairs", action="store_true", help="list crossing lift pairs and their classes")

    s = sub.add_parser("enumerate", parents=[common], help="all primitive classes up to a length")
    s.add_argument("--max-length", type=int, required=True)

    s = sub.add_parser("sequence", parents=[common], help="k-systole table for k = 1..k_max")
    s.add_argument("--k-max", type=int, default=None)
    s.add_argument("--k", type=int, default=None, help="alias of --k-max")

    s = sub.add_parser("render", parents=[common], help="SVG of the lifts of a word")
    s.add_argument("word")

    s = sub.add_parser("verify", parents=[common], help="run the finite-range checks")
    s.add_argument("--max-length", type=int, default=None)
    s.add_argument("--k-max", type=int, default=None)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = build_config(args)
    except (ValueError, OSError) as exc:
        print(f"geolab: {exc}", file=sys.stderr)
        return EXIT_PARSE
    out = _Out(args.out if args.command != "render" else None)
    try:
        return COMMANDS[args.command](args, cfg, out)
    except (WordParseError, IdentityWordError) as exc:
        print(f"geolab: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NonPrimitiveError as exc:
        print(f"geolab: {exc}", file=sys.stderr)
        return EXIT_NONPRIMITIVE
    except CapExceededError as exc:
        print(f"geolab: {exc}", file=sys.stderr)
        return EXIT_CAP
    except BoundaryAmbiguityError as exc:
        print(f"geolab: {exc}; try other --lambda-a/--lambda-b", file=sys.stderr)
        return EXIT_MISMATCH
    except ValueError as exc:
        print(f"geolab: {exc}", file=sys.stderr)
        return EXIT_PARSE
    finally:
        out.close()


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
