"""Command-line driver for the pipeline.

Six subcommands: ``validate``, ``complete``, ``nf``, ``singular``, ``zhu``
and ``quotient``, each reading one presentation file and writing one
document (JSON by default, ``--format text`` for a human-readable view).
Output is byte-identical across runs with the same input and flags.

Exit codes: 0 success; 1 the input presentation failed validation; 2 the
computation hit a bound (closure ``partial``, quotient not stabilized);
3 the input could not be parsed at all.  Set ZHUFORGE_LOG=debug (or any
logging level name) to trace the search on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import documents
from .catalog import bundled_names, load_bundled
from .engine import ReductionStrategy, complete_table
from .presentation import PresentationError, load_presentation, validate
from .reduction import c1_singular_elements, is_nondegenerate
from .zhu import ClosureBounds, relation_closure
from .quotient import quotient_basis

log = logging.getLogger("zhuforge.cli")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARTIAL = 2
EXIT_PARSE = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zhuforge",
        description="Mode-algebra completion, normal forms, and top-level "
                    "algebra presentations for vertex algebras given by "
                    "generators and quadratic relations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, bounds=False, quotient=False):
        sp.add_argument("--input", required=True,
                        help="presentation file (path, or the name of a "
                             "bundled presentation: %s)"
                             % ", ".join(bundled_names()))
        sp.add_argument("--output", default=None,
                        help="write the document here instead of stdout")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--strategy", choices=("leftmost", "rightmost"),
                        default="leftmost",
                        help="which reducible pair to rewrite first")
        if bounds:
            sp.add_argument("--mode-depth", type=int, default=None,
                            help="maximum mode-chain length applied to seeds")
            sp.add_argument("--membership-bound", type=int, default=None,
                            help="degree bound for ideal-membership checks")
            sp.add_argument("--seeds", default="both",
                            choices=("singular-only", "c1-only", "both"),
                            help="which seeds feed the relation closure")
        if quotient:
            sp.add_argument("--quotient-bound", type=int, default=10,
                            help="formal-length bound for the basis sweep")

    common(sub.add_parser("validate", help="check a presentation file"))
    common(sub.add_parser("complete", help="emit the completed mode table"))
    nf = sub.add_parser("nf", help="normal form of an inline state")
    nf.add_argument("expr", help="state expression, e.g. 'w(0)w(-3)1 - 2 w(-2)w(-1)'")
    common(nf)
    common(sub.add_parser("singular",
                          help="find Jacobi defects / degeneracy verdict"))
    common(sub.add_parser("zhu", help="emit the top-level presentation"),
           bounds=True)
    common(sub.add_parser("quotient",
                          help="finite-dimensional quotient analysis"),
           bounds=True, quotient=True)
    return parser


def _load(path):
    if os.path.exists(path):
        return load_presentation(path)
    if path in bundled_names():
        return load_bundled(path)
    raise PresentationError("%s: no such file or bundled presentation" % path)


def _emit(text: str, output):
    if not text.endswith("\n"):
        text += "\n"
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(doc) -> str:
    return json.dumps(doc, indent=2)


def _gather_seeds(p, table, which: str):
    seeds = []
    if which in ("singular-only", "both"):
        seeds.extend(p.singular_vectors)
    if which in ("c1-only", "both"):
        for d in c1_singular_elements(p, table):
            seeds.append(("defect%s" % (d.indices,), d.value))
    return seeds


def main(argv=None) -> int:
    level = os.environ.get("ZHUFORGE_LOG")
    if level:
        logging.basicConfig(stream=sys.stderr,
                            level=getattr(logging, level.upper(), logging.INFO),
                            format="%(name)s: %(message)s")
    args = build_parser().parse_args(argv)

    try:
        p = _load(args.input)
    except PresentationError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE

    issues = validate(p)
    if args.command == "validate":
        doc = documents.validation_document(p, issues)
        if args.format == "json":
            _emit(_json(doc), args.output)
        else:
            _emit(documents.render_validation_text(doc), args.output)
        return EXIT_OK if not issues else EXIT_INVALID
    if issues:
        for msg in issues:
            print("invalid presentation: %s" % msg, file=sys.stderr)
        return EXIT_INVALID

    strategy = ReductionStrategy(args.strategy)
    table = complete_table(p, strategy)

    if args.command == "complete":
        if args.format == "json":
            _emit(_json(documents.table_document(p, table)), args.output)
        else:
            _emit(documents.render_table_text(p, table), args.output)
        return EXIT_OK

    if args.command == "nf":
        try:
            state = p.parse_state(args.expr)
        except ValueError as exc:
            print("error: %s" % exc, file=sys.stderr)
            return EXIT_PARSE
        nf = table.engine.normal_form(state)
        doc = documents.nf_document(p, args.expr, nf, args.strategy)
        _emit(_json(doc) if args.format == "json"
              else documents.render_nf_text(doc), args.output)
        return EXIT_OK

    if args.command == "singular":
        defects = c1_singular_elements(p, table)
        nondeg, _ = is_nondegenerate(p, table)
        doc = documents.singular_document(p, defects, nondeg)
        _emit(_json(doc) if args.format == "json"
              else documents.render_singular_text(p, doc), args.output)
        return EXIT_OK

    bounds = ClosureBounds.from_options(
        p.options, max_mode_depth=args.mode_depth,
        membership_degree_bound=args.membership_bound)
    zp = relation_closure(_gather_seeds(p, table, args.seeds), p, table,
                          bounds, strategy)

    if args.command == "zhu":
        doc = documents.zhu_document(zp)
        _emit(_json(doc) if args.format == "json"
              else documents.render_zhu_text(zp), args.output)
        return EXIT_OK if zp.status == "complete" else EXIT_PARTIAL

    # quotient
    model = quotient_basis(zp, args.quotient_bound)
    doc = documents.quotient_document(zp, model)
    _emit(_json(doc) if args.format == "json"
          else documents.render_quotient_text(doc), args.output)
    if zp.status != "complete" or model.status == "not-stabilized":
        return EXIT_PARTIAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
