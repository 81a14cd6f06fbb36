"""``hermreal check FILE... [--json] [--seed N] [--degree-bound K] [--witness-pool M]``

A FILE may also name a shipped fixture (``mainex`` or ``mainex.spec``).
Bounds default from HERMREAL_SEED, HERMREAL_DEGREE_BOUND and
HERMREAL_WITNESS_POOL; flags win over the environment.

Exit status: 0 when every check succeeds, 1 on a failing check, 2 on a
parse or validation error.
"""
from __future__ import annotations

import argparse
import os
import sys
from importlib import resources
from pathlib import Path

from .expr import ParseError
from .report import emit_report
from .runner import DEFAULT_BOUNDS, run_checks
from .specfile import ValidationError, parse_spec

ENV = {"seed": "HERMREAL_SEED", "degree_bound": "HERMREAL_DEGREE_BOUND",
       "witness_pool": "HERMREAL_WITNESS_POOL"}


def fixture_names():
    return sorted(p.name for p in resources.files("hermreal.fixtures").iterdir()
                  if p.name.endswith(".spec"))


def read_spec_source(name):
    """``(label, text)`` for a path or a shipped fixture name."""
    path = Path(name)
    if path.exists():
        return str(path), path.read_text(encoding="utf-8")
    fname = name if name.endswith(".spec") else name + ".spec"
    if fname in fixture_names():
        return fname, resources.files("hermreal.fixtures").joinpath(fname).read_text("utf-8")
    raise FileNotFoundError(name)


def _env_int(key, default):
    raw = os.environ.get(ENV[key])
    return default if raw in (None, "") else int(raw)


def build_parser():
    p = argparse.ArgumentParser(prog="hermreal")
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("check", help="run the checks declared in spec files")
    c.add_argument("files", nargs="+")
    c.add_argument("--json", action="store_true", help="emit a JSON report")
    c.add_argument("--seed", type=int)
    c.add_argument("--degree-bound", type=int)
    c.add_argument("--witness-pool", type=int)
    sub.add_parser("fixtures", help="list the shipped fixtures")
    return p


def main(argv=None, out=None):
    out = out or sys.stdout.buffer
    args = build_parser().parse_args(argv)
    if args.command == "fixtures":
        out.write(("\n".join(fixture_names()) + "\n").encode())
        return 0
    try:
        seed = args.seed if args.seed is not None else _env_int("seed", 0)
        bounds = {
            "degree_bound": args.degree_bound if args.degree_bound is not None
            else _env_int("degree_bound", DEFAULT_BOUNDS["degree_bound"]),
            "witness_pool": args.witness_pool if args.witness_pool is not None
            else _env_int("witness_pool", DEFAULT_BOUNDS["witness_pool"]),
        }
    except ValueError as exc:
        sys.stderr.write(f"hermreal: bad bound in environment: {exc}\n")
        return 2
    records, labels = [], []
    for name in args.files:
        try:
            label, text = read_spec_source(name)
            doc = parse_spec(text, name=label)
        except FileNotFoundError:
            sys.stderr.write(f"hermreal: no such spec file or fixture: {name}\n")
            return 2
        except (ParseError, ValidationError) as exc:
            sys.stderr.write(f"{name}: {exc}\n")
            return 2
        labels.append(label)
        records.extend(run_checks(doc, seed, bounds))
    out.write(emit_report(records, "json" if args.json else "text", labels))
    out.flush()
    return 0 if all(r.ok for r in records) else 1


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
