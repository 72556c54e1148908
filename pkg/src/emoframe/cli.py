"""Command-line entry point: ``emoframe <subcommand> [options]``.

Exit status is 0 on success, 1 on a domain error and 2 on a usage error.
Diagnostics go to stderr as ``emoframe.<module>: <CODE> message``.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import __version__, assets
from .errors import DetectionError, EmoframeError

log = logging.getLogger("emoframe")


class CLIError(EmoframeError):
    module = "cli"
    code = "E-IO"


# ------------------------------------------------------------------ helpers

def _emit(text):
    sys.stdout.write(text)


def _table(header, rows, fmt):
    """Render rows of strings as TSV or as a JSON document."""
    if fmt == "json":
        records = [dict(zip(header, r)) for r in rows]
        return json.dumps({"header": list(header), "count": len(rows), "rows": records},
                          indent=2, ensure_ascii=False) + "\n"
    lines = ["\t".join(header)] + ["\t".join(str(c) for c in r) for r in rows]
    return "\n".join(lines) + "\n"


def _read(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _graph(data, closure=True):
    """Bundled ontology (closed by default) or the given Turtle files."""
    from .ontology import infer_closures, load_bundled_ontology
    from .rdf import merge, parse_turtle

    if data:
        g = merge([parse_turtle(_read(p)) for p in data])
    else:
        g = load_bundled_ontology("all")
    return infer_closures(g) if closure else g


def _write_output(text, out):
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text, encoding="utf-8")
    else:
        _emit(text)


# -------------------------------------------------------------- subcommands

def cmd_load(args):
    from .ontology import load_bundled_ontology
    from .rdf import serialize

    g = load_bundled_ontology(args.module)
    if args.out:
        _write_output(serialize(g, args.to), args.out)
    subjects = {t.subject for t in g}
    _emit(_table(["module", "triples", "subjects"], [[args.module, len(g), len(subjects)]], args.format))


def cmd_query(args):
    from .query import parse_query, evaluate

    text = _read(args.file) if args.file else args.text
    if not text:
        raise CLIError("give a query file or --text")
    table = evaluate(parse_query(text), _graph(args.data, not args.no_closure))
    _emit(table.to_json() if args.format == "json" else table.to_tsv())


def cmd_infer(args):
    from .rdf import serialize

    base = _graph(args.data, closure=False)
    closed = _graph(args.data, closure=True)
    if args.out:
        _write_output(serialize(closed, args.to), args.out)
    _emit(_table(["asserted", "inferred", "total"], [[len(base), len(closed) - len(base), len(closed)]],
                 args.format))


def cmd_check(args):
    from .ontology import check_consistency

    report = check_consistency(_graph(args.data, closure=not args.no_closure))
    # violations are JSON lines in either format; the count closes the output
    _emit(report.to_json_lines())
    _emit(report.summary() + "\n")
    return 0 if report.passed else 1


def cmd_cq(args):
    from .ontology import answer_cq

    table = answer_cq(_graph(args.data), args.n, args.emotion)
    _emit(table.to_json() if args.format == "json" else table.to_tsv())


def cmd_triggers(args):
    from .ontology import closed_ontology
    from .rdf import serialize, shorten
    from .triggers import (StartingLexicalMaterial, expand, fetch_remote, load_snapshot,
                           materialize, step_counts)

    ontology = closed_ontology()
    slm = StartingLexicalMaterial.from_ontology(ontology, args.emotion)
    if args.endpoint:
        snapshot = fetch_remote(args.endpoint, slm.emotion, slm, timeout=args.timeout,
                                cache_dir=args.cache_dir)
    else:
        snapshot = load_snapshot(slm.emotion)
    records = expand(slm, snapshot)
    if args.out:
        _write_output(serialize(materialize(records), "turtle"), args.out)
    rows = [[shorten(r.trigger), shorten(r.emotion), r.source, r.step, r.matched_unit] for r in records]
    _emit(_table(["trigger", "emotion", "source", "step", "unit"], rows, args.format))
    log.info("steps: %s", step_counts(records))


def _sentences(path):
    """(id, text) pairs: ``id<TAB>text`` lines keep their id, bare lines are numbered."""
    out = []
    for n, line in enumerate(_read(path).splitlines(), 1):
        if not line.strip():
            continue
        ident, sep, text = line.partition("\t")
        out.append((ident.strip(), text) if sep else (f"{n:04d}", line))
    return out


def cmd_detect(args):
    from .detector import TriggerIndex, detect
    from .ontology import vocab as V
    from .rdf import serialize
    from .triggers import build_trigger_kg

    sentences = _sentences(args.input)
    index = TriggerIndex(build_trigger_kg())

    def run(item):
        ident, text = item
        try:
            return ident, detect(text, index, sentence_id=ident)
        except DetectionError as exc:
            return ident, exc

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(run, sentences))
    else:
        results = [run(s) for s in sentences]

    names = [V.local_name(e) for e in V.BASIC_EMOTIONS]
    rows = []
    totals = dict.fromkeys(names, 0)
    out_dir = Path(args.out_dir) if args.out_dir else None
    for ident, res in results:
        if isinstance(res, DetectionError):
            rows.append([ident, "no-graph"] + ["0"] * len(names))
            continue
        sg, prof = res
        counts = prof.to_dict()
        for n in names:
            totals[n] += counts.get(n, 0)
        rows.append([ident, "ok"] + [str(counts.get(n, 0)) for n in names])
        if out_dir is not None:
            _write_output(serialize(sg.graph, "turtle"), out_dir / f"{ident}.ttl")
    _emit(_table(["id", "status"] + names, rows, args.format))
    if args.plot_dir:
        from .plotting import plot_profile_totals

        plot_profile_totals(totals, args.plot_dir)


def cmd_eval(args):
    from .evaluation import evaluate_file

    corpus = args.corpus or assets.path("corpus/mini_wassa.tsv")
    report = evaluate_file(corpus, jobs=args.jobs)
    if args.report_dir:
        d = Path(args.report_dir)
        _write_output(report.to_json(), d / "report.json")
        _write_output(report.to_table(), d / "report.txt")
    if args.format == "json":
        _emit(report.to_json())
    else:
        rows = [[r.emotion, f"{r.precision:.2f}", f"{r.recall:.2f}", f"{r.f1:.2f}",
                 "" if r.pearson is None else f"{r.pearson:.4f}", r.graphs, r.detections, r.failures]
                for r in report.rows]
        _emit(_table(["emotion", "precision", "recall", "f1", "pearson", "graphs", "detections",
                      "failures"], rows, "tsv"))
    if args.plot_dir:
        from .plotting import plot_metrics

        plot_metrics(report, args.plot_dir)


def cmd_transpose(args):
    from .multimodal import load_annotations, transpose
    from .rdf import serialize

    items = load_annotations(args.input, args.dataset)
    g = transpose(items, args.dataset)
    _write_output(serialize(g, "turtle"), args.out)
    _emit(_table(["dataset", "items", "triples"], [[args.dataset, len(items), len(g)]], args.format))


def cmd_filter_items(args):
    from .multimodal import load_annotations, parse_constraint, query_multi_emotion, transpose
    from .rdf import parse_turtle

    if str(args.input).endswith(".csv"):
        if not args.dataset:
            raise CLIError("--dataset is required for CSV input")
        g = transpose(load_annotations(args.input, args.dataset), args.dataset)
    else:
        g = parse_turtle(_read(args.input))
    constraints = [parse_constraint(c) for c in args.min or []]
    ids = query_multi_emotion(g, constraints)
    _emit(_table(["item"], [[i] for i in ids], args.format))


# ------------------------------------------------------------------- parser

def _common(defaults):
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p.add_argument("--assets", default=d(None), help="asset root (default: bundled assets)")
    p.add_argument("--format", choices=("tsv", "json"), default=d("tsv"), help="output format")
    p.add_argument("-v", "--verbose", action="store_true", default=d(False), help="log progress")
    return p


def build_parser():
    parser = argparse.ArgumentParser(prog="emoframe", parents=[_common(True)],
                                     description="Emotion-frame knowledge graphs: ontology, triggers, detection.")
    parser.add_argument("--version", action="version", version=f"emoframe {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    common = _common(False)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        p.set_defaults(func=func)
        return p

    p = add("load", cmd_load, "parse a bundled ontology module")
    p.add_argument("--module", choices=("emocore", "be", "all"), default="all")
    p.add_argument("--out", help="write the graph here")
    p.add_argument("--to", choices=("turtle", "ntriples"), default="turtle", help="serialization for --out")

    p = add("query", cmd_query, "run a SPARQL-subset query")
    p.add_argument("file", nargs="?", help="query file (.rq)")
    p.add_argument("--text", help="query text instead of a file")
    p.add_argument("--data", nargs="+", help="Turtle files to query (default: bundled ontology)")
    p.add_argument("--no-closure", action="store_true", help="query the asserted graph only")

    p = add("infer", cmd_infer, "compute the closure graph")
    p.add_argument("--data", nargs="+", help="Turtle files (default: bundled ontology)")
    p.add_argument("--out", help="write the closure graph here")
    p.add_argument("--to", choices=("turtle", "ntriples"), default="turtle", help="serialization for --out")

    p = add("check", cmd_check, "run the consistency rules")
    p.add_argument("--data", nargs="+", help="Turtle files (default: bundled ontology)")
    p.add_argument("--no-closure", action="store_true", help="check the graph as given")

    p = add("cq", cmd_cq, "answer a competency question")
    p.add_argument("--n", type=int, choices=range(1, 6), required=True, metavar="{1..5}")
    p.add_argument("--emotion", help="restrict to one emotion, e.g. Fear (required for CQ5)")
    p.add_argument("--data", nargs="+", help="Turtle files (default: bundled ontology)")

    p = add("triggers", cmd_triggers, "expand trigger records for one emotion")
    p.add_argument("--emotion", required=True)
    p.add_argument("--endpoint", default=os.environ.get("EMOFRAME_ENDPOINT"),
                   help="SPARQL endpoint (default: $EMOFRAME_ENDPOINT, else the bundled snapshot)")
    p.add_argument("--timeout", type=float, default=30.0, help="seconds per remote query")
    p.add_argument("--cache-dir", help="response cache (default: $EMOFRAME_CACHE or ~/.cache/emoframe)")
    p.add_argument("--out", help="write the materialized trigger graph here")

    p = add("detect", cmd_detect, "detect emotions in sentences, one per line")
    p.add_argument("--in", dest="input", required=True, help="UTF-8 text, one sentence per line")
    p.add_argument("--out-dir", help="write one Turtle graph per sentence here")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--plot-dir", help="write profile.png here")

    p = add("eval", cmd_eval, "evaluate detection on a labelled corpus")
    p.add_argument("--corpus", help="TSV corpus (default: bundled mini corpus)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report-dir", help="write report.json and report.txt here")
    p.add_argument("--plot-dir", help="write metrics.png and correlation.png here")

    p = add("transpose", cmd_transpose, "turn a CREMA-D or FER+ table into a graph")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--dataset", choices=("crema", "ferplus"), required=True)
    p.add_argument("--out", required=True, help="Turtle output file")

    p = add("filter-items", cmd_filter_items, "list items above per-emotion thresholds")
    p.add_argument("--in", dest="input", required=True, help="transposed .ttl, or a dataset .csv")
    p.add_argument("--dataset", choices=("crema", "ferplus"), help="layout of a .csv input")
    p.add_argument("--min", action="append", metavar="EMOTION=VALUE",
                   help="keep items whose value is above VALUE; repeatable")
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(asctime)s %(name)s %(levelname)s %(message)s", stream=sys.stderr)
    previous = assets._root
    if args.assets:
        assets.set_root(args.assets)
    try:
        code = args.func(args)
        return 0 if code is None else code
    except EmoframeError as exc:
        sys.stderr.write(exc.qualified() + "\n")
        return 1
    except OSError as exc:
        sys.stderr.write(CLIError(str(exc)).qualified() + "\n")
        return 1
    finally:
        assets._root = previous


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
