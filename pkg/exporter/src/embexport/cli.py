"""Command line: export text or label embeddings to EMB1 files.

    emb-export texts  --input data.tsv --model MODEL --out out.emb [--batch-size 32] [--plain]
    emb-export labels --input labels.tsv --model MODEL --out out.emb [--pattern p.tsv]
"""

from __future__ import annotations

import argparse
import sys

from . import labels as labels_mod
from .export import EncodeError, ExportJob, ModelLoadError, export_embeddings, export_labels


def cmd_texts(args) -> int:
    if args.plain:
        texts = labels_mod.read_plain_texts(args.input)
    else:
        texts = labels_mod.read_dataset_texts(args.input)
    job = ExportJob(texts=texts, model=args.model, out=args.out, batch_size=args.batch_size)
    matrix = export_embeddings(job)
    print(f"wrote {matrix.shape[0]} x {matrix.shape[1]} embeddings to {args.out}")
    return 0


def cmd_labels(args) -> int:
    matrix = export_labels(
        args.input, args.model, args.out,
        pattern_path=args.pattern, batch_size=args.batch_size,
    )
    print(f"wrote {matrix.shape[0]} x {matrix.shape[1]} label embeddings to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="emb-export",
        description="Export sentence-embedding-model outputs to EMB1 files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("texts", help="embed dataset or plain texts")
    p.add_argument("--input", required=True, help="dataset TSV or plain text file")
    p.add_argument("--plain", action="store_true", help="input is one text per line")
    p.add_argument("--model", required=True, help="sentence-transformers id or local path")
    p.add_argument("--out", required=True, help="EMB1 output path")
    p.add_argument("--batch-size", type=int, default=32)
    p.set_defaults(func=cmd_texts)

    p = sub.add_parser("labels", help="embed rendered label hypotheses")
    p.add_argument("--input", required=True, help="label-set file")
    p.add_argument("--pattern", help="hypothesis pattern file (default: identity)")
    p.add_argument("--model", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--batch-size", type=int, default=32)
    p.set_defaults(func=cmd_labels)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ModelLoadError, EncodeError) as exc:
        print(f"emb-export: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"emb-export: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
