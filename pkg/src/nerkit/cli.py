"""Command-line entry point.

Thin wrappers around the library: every subcommand's output is byte-
identical to calling the underlying operations directly. Exit codes:
0 success, 1 usage error, 2 data/model error. Diagnostics go to stderr,
results to stdout or --out.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .corpus import dataset_stats, load_dataset, lowercase_dataset
from .errors import NerkitError
from .harness import MatrixSpec, render_table, run_matrix_full
from .metrics import TYPE_AWARE, TYPE_IGNORED, report_to_json, report_to_tsv, score
from .server import create_app, tokenize
from .tagger import TrainConfig, decode_tags, load_model, predict, save_model, train

DEFAULT_SEED = 42
SEED_ENV = "NERKIT_SEED"


def _default_seed() -> int:
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            print(f"warning: ignoring non-integer {SEED_ENV}={env!r}", file=sys.stderr)
    return DEFAULT_SEED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nerkit", description="Sequence-labeling toolkit: train, evaluate, predict, serve."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="train a tagger on one or more dataset directories")
    p.add_argument("--data", required=True, help="comma-separated dataset directories")
    p.add_argument("--out", required=True, help="model file to write")
    p.add_argument("--epochs", type=int, default=10)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--lowercase", action="store_true")

    p = sub.add_parser("evaluate", help="score a model against a dataset split")
    p.add_argument("--model", required=True)
    p.add_argument("--data", required=True)
    p.add_argument("--split", default="test", choices=["train", "valid", "test"])
    p.add_argument("--type-ignored", action="store_true")
    p.add_argument("--format", default="json", choices=["json", "tsv"])
    p.add_argument("--lowercase", action="store_true",
                   help="lowercase the evaluation data (rejected if the model already does)")

    p = sub.add_parser("predict", help="tag raw text (one JSON line per sentence)")
    p.add_argument("--model", required=True)
    p.add_argument("--text", default=None, help="text to tag; reads stdin lines when absent")

    p = sub.add_parser("stats", help="sentence and entity-type counts for a dataset")
    p.add_argument("--data", required=True)

    p = sub.add_parser("matrix", help="cross-domain train x test matrix")
    p.add_argument("--data", required=True, help="comma-separated dataset directories")
    p.add_argument("--out", required=True,
                   help="report file (.md, .tsv or .json); manifest lands beside it")
    p.add_argument("--include-all", action="store_true")
    p.add_argument("--type-ignored", action="store_true")
    p.add_argument("--lowercase", action="store_true")
    p.add_argument("--epochs", type=int, default=10)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("serve", help="HTTP prediction service (and the web demo)")
    p.add_argument("--model", required=True,
                   help="comma-separated name=file pairs; first is the default")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", default=None, help="directory with the demo bundle")

    return parser


def _resolve_seed(flag_value) -> int:
    return flag_value if flag_value is not None else _default_seed()


def _cmd_train(args) -> int:
    dirs = [d for d in args.data.split(",") if d]
    datasets = [load_dataset(d) for d in dirs]
    config = TrainConfig(
        epochs=args.epochs, seed=_resolve_seed(args.seed), lowercase=args.lowercase
    )
    model = train(datasets, config)
    save_model(model, args.out)
    print(
        f"trained on {', '.join(d.name for d in datasets)} "
        f"({config.epochs} epochs, seed {config.seed}) -> {args.out}",
        file=sys.stderr,
    )
    return 0


def _cmd_evaluate(args) -> int:
    model = load_model(args.model)
    dataset = load_dataset(args.data)
    if args.lowercase:
        if model.config.lowercase:
            print(
                "warning: model already lowercases its input; "
                "refusing --lowercase to avoid a double transform",
                file=sys.stderr,
            )
            return 1
        dataset = lowercase_dataset(dataset)
    if args.split not in dataset.splits:
        print(f"error: dataset has no {args.split!r} split", file=sys.stderr)
        return 2
    sentences = dataset.splits[args.split]
    gold = [s.tags for s in sentences]
    pred = [decode_tags(s.tokens, model) for s in sentences]
    mode = TYPE_IGNORED if args.type_ignored else TYPE_AWARE
    report = score(gold, pred, mode)
    if args.format == "tsv":
        sys.stdout.write(report_to_tsv(report))
    else:
        sys.stdout.write(report_to_json(report) + "\n")
    return 0


def _predict_line(text: str, model) -> str:
    tokens = tokenize(text)
    if not tokens:
        return json.dumps({"text": text, "tokens": [], "tags": [], "spans": []})
    prediction = predict([t.text for t in tokens], model)
    return json.dumps(
        {
            "text": text,
            "tokens": [t.text for t in tokens],
            "tags": [str(tag) for tag in prediction.tags],
            "spans": [
                {
                    "type": s.entity_type,
                    "start": s.start,
                    "end": s.end,
                    "text": text[tokens[s.start].start_char : tokens[s.end - 1].end_char],
                    "score": s.score,
                }
                for s in prediction.spans
            ],
        },
        ensure_ascii=False,
    )


def _cmd_predict(args) -> int:
    model = load_model(args.model)
    if args.text is not None:
        print(_predict_line(args.text, model))
        return 0
    for line in sys.stdin:
        line = line.rstrip("\n")
        if line.strip():
            print(_predict_line(line, model), flush=True)
    return 0


def _cmd_stats(args) -> int:
    dataset = load_dataset(args.data)
    stats = dataset_stats(dataset)
    print(
        json.dumps(
            {
                "name": dataset.name,
                "sentences": dict(stats.sentences),
                "entity_types": stats.entity_types,
                "labels": list(dataset.labels),
            },
            ensure_ascii=False,
        )
    )
    return 0


def _cmd_matrix(args) -> int:
    dirs = [d for d in args.data.split(",") if d]
    spec = MatrixSpec(
        dataset_dirs=tuple(dirs),
        mode=TYPE_IGNORED if args.type_ignored else TYPE_AWARE,
        lowercase=args.lowercase,
        include_all_row=args.include_all,
        train_config=TrainConfig(epochs=args.epochs, seed=_resolve_seed(args.seed)),
    )
    result = run_matrix_full(spec, jobs=args.jobs)
    out = Path(args.out)
    format = {"json": "json", "tsv": "tsv"}.get(out.suffix.lstrip("."), "markdown")
    out.write_text(render_table(result.matrix, format), encoding="utf-8")
    manifest_path = out.with_name(out.name + ".manifest.json")
    manifest_path.write_text(
        json.dumps(result.manifest, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    print(f"wrote {out} and {manifest_path}", file=sys.stderr)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    models = {}
    for item in args.model.split(","):
        name, sep, path = item.partition("=")
        if not sep or not name or not path:
            print(f"error: --model expects name=file pairs, got {item!r}", file=sys.stderr)
            return 1
        models[name] = load_model(path)
    app = create_app(models, static_dir=args.static)
    print(f"serving {', '.join(models)} on {args.host}:{args.port}", file=sys.stderr)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


_COMMANDS = {
    "train": _cmd_train,
    "evaluate": _cmd_evaluate,
    "predict": _cmd_predict,
    "stats": _cmd_stats,
    "matrix": _cmd_matrix,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return 0 if exc.code == 0 else 1
    try:
        return _COMMANDS[args.command](args)
    except (NerkitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
