"""Command-line surface: encode, decode, roundtrip, vocab build/report,
align, augment, prep, stats.

Exit codes: 0 success, 1 input error, 2 internal error.  All randomness is
controlled by --seed; identical invocations produce byte-identical outputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import dataset
from .augment import augment_instance, default_mixture
from .decode import decode, roundtrip_check
from .encode import EncodeOptions, SubsequenceBundle, AccessoryToken, FrameToken, encode
from .errors import AstseqError
from .io_align import IOSample, align_tokens
from .runner import RunnerConfig
from .transforms import NamePool
from .vocab import AccessoryConfig, Vocabulary, build_frame_vocab

BUNDLE_FORMAT = "astseq-bundle"
BUNDLE_VERSION = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _encode_options(args) -> EncodeOptions:
    return EncodeOptions(
        replace_names=args.replace_names,
        strip_docstrings=args.strip_docstrings,
        pool=NamePool(size=args.pool_size),
    )


def _add_encode_flags(p):
    p.add_argument("--replace-names", action="store_true", help="rename user identifiers from the pool")
    p.add_argument("--strip-docstrings", action="store_true", help="remove docstrings before encoding")
    p.add_argument("--pool-size", type=int, default=64, help="candidates per name category")


def bundle_to_json(bundle: SubsequenceBundle) -> str:
    return json.dumps(
        {
            "format": BUNDLE_FORMAT,
            "version": BUNDLE_VERSION,
            "frames": bundle.frame_texts(),
            "accessories": [[a.text, a.category] for a in bundle.accessories],
            "outline_index": list(bundle.outline_index),
            "core_index": list(bundle.core_index),
            "name_map": bundle.name_map,
        },
        ensure_ascii=False,
        sort_keys=True,
    )


def bundle_from_json(text: str) -> SubsequenceBundle:
    obj = json.loads(text)
    if obj.get("format") != BUNDLE_FORMAT:
        raise ValueError("not an astseq bundle file")
    return SubsequenceBundle(
        frames=tuple(FrameToken(t) for t in obj["frames"]),
        accessories=tuple(AccessoryToken(t, c) for t, c in obj["accessories"]),
        outline_index=tuple(obj["outline_index"]),
        core_index=tuple(obj["core_index"]),
        name_map=dict(obj["name_map"]),
    )


def _cmd_encode(args) -> int:
    source = Path(args.infile).read_text("utf-8")
    bundle = encode(source, _encode_options(args))
    text = bundle_to_json(bundle)
    if args.out:
        Path(args.out).write_text(text + "\n", "utf-8")
    else:
        print(text)
    return 0


def _cmd_decode(args) -> int:
    bundle = bundle_from_json(Path(args.infile).read_text("utf-8"))
    source = decode(bundle.frames, bundle.accessories)
    if args.out:
        Path(args.out).write_text(source + "\n", "utf-8")
    else:
        print(source)
    return 0


def _roundtrip_one(item):
    key, source, opts = item
    report = roundtrip_check(source, opts)
    return key, report.ok, report.diagnostics


def _cmd_roundtrip(args) -> int:
    opts = _encode_options(args)
    root = Path(args.dir)
    items = []
    for path in sorted(root.rglob("*.py")):
        items.append((path.relative_to(root).as_posix(), path.read_text("utf-8"), opts))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_roundtrip_one, items))
    else:
        results = [_roundtrip_one(item) for item in items]
    lines = []
    n_ok = 0
    for key, ok, diag in results:
        n_ok += ok
        lines.append(f"{'ok' if ok else 'FAIL'}\t{key}" + (f"\t{diag}" if diag else ""))
    lines.append(f"# {n_ok}/{len(results)} ok")
    text = "\n".join(lines)
    if args.report:
        Path(args.report).write_text(text + "\n", "utf-8")
    else:
        print(text)
    return 0 if n_ok == len(results) else 1


def _cmd_vocab_build(args) -> int:
    root = Path(args.dir)
    sources = [p.read_text("utf-8") for p in sorted(root.rglob("*.py"))]
    config = AccessoryConfig(pool=NamePool(size=args.pool_size))
    vocab = build_frame_vocab(sources, args.min_count, config, _encode_options(args))
    vocab.save(args.out)
    print(f"vocabulary: {vocab.n_ids} ids ({len(vocab.frame_entries)} frame tokens) -> {args.out}")
    return 0


def _cmd_vocab_report(args) -> int:
    vocab = Vocabulary.load(args.vocab)
    rows = vocab.frequency_report()
    if args.top:
        rows = rows[: args.top]
    for text, count, rank in rows:
        print(f"{rank}\t{count}\t{text}")
    return 0


def _cmd_align(args) -> int:
    obj = json.loads(Path(args.infile).read_text("utf-8"))
    samples = [IOSample(inputs=tuple(p["inputs"]), outputs=tuple(p["outputs"])) for p in obj]
    table = align_tokens(samples)
    vocab = Vocabulary.load(args.vocab)
    matrix = table.to_matrix(vocab)
    out = json.dumps(
        {
            "content": [list(r) for r in matrix.content],
            "syntax": [list(r) for r in matrix.syntax],
            "slots": [list(b) for b in matrix.slot_boundaries],
        },
        sort_keys=True,
    )
    if args.out:
        Path(args.out).write_text(out + "\n", "utf-8")
    else:
        print(out)
    return 0


def _cmd_augment(args) -> int:
    inst = dataset.load_instance(Path(args.infile))
    cfg = RunnerConfig(time_limit=args.time_limit)
    augmented, report = augment_instance(
        inst,
        mixture=default_mixture(),
        cfg=cfg,
        min_pairs=args.min_pairs,
        seed=args.seed,
        jobs=args.jobs,
    )
    obj = {
        "description": augmented.description,
        "solution": augmented.solution,
        "io_pairs": [
            {"inputs": [list(v) if isinstance(v, tuple) else v for v in p.inputs],
             "outputs": [list(v) if isinstance(v, tuple) else v for v in p.outputs]}
            for p in augmented.io_pairs
        ],
    }
    Path(args.out).write_text(json.dumps(obj, ensure_ascii=False, sort_keys=True) + "\n", "utf-8")
    print(
        f"pairs: {len(augmented.io_pairs)} (attempts {report.n_attempted}, "
        f"ok {report.n_ok}, timeout {report.n_timeout}, crash {report.n_crash})"
    )
    return 0


def _cmd_prep(args) -> int:
    vocab = Vocabulary.load(args.vocab)
    options = dataset.PrepOptions(
        encode_options=_encode_options(args),
        p1=args.p1,
        p2=args.p2,
        seed=args.seed,
        unk_policy=args.unk_policy,
    )
    records, summary = dataset.prep_corpus(args.dir, vocab, options, jobs=args.jobs)
    dataset.write_records(records, args.out)
    summary_text = json.dumps(summary.as_dict(), sort_keys=True)
    if args.summary:
        Path(args.summary).write_text(summary_text + "\n", "utf-8")
    print(summary_text)
    return 0


def _cmd_stats(args) -> int:
    root = Path(args.dir)
    sources = [p.read_text("utf-8") for p in sorted(root.rglob("*.py"))]
    rows, _per_file = dataset.corpus_stats(sources, _encode_options(args))
    wanted = {"codec", args.baseline}
    lines = [f"{'tokenizer':<10}{'mean':>12}{'median':>12}{'std':>12}{'files':>8}"]
    for row in rows:
        if row.tokenizer in wanted or args.baseline == "all":
            lines.append(
                f"{row.tokenizer:<10}{row.mean:>12.3f}{row.median:>12.1f}{row.std:>12.3f}{row.n_files:>8}"
            )
    text = "\n".join(lines)
    if args.report:
        Path(args.report).write_text(text + "\n", "utf-8")
    print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="astseq", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="encode a source file into a bundle")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    _add_encode_flags(p)
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("decode", help="decode a bundle back to source")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("roundtrip", help="encode+decode every file under a directory")
    p.add_argument("--dir", required=True)
    p.add_argument("--report")
    p.add_argument("--jobs", type=int, default=1)
    _add_encode_flags(p)
    p.set_defaults(func=_cmd_roundtrip)

    vocab = sub.add_parser("vocab", help="vocabulary commands")
    vocab_sub = vocab.add_subparsers(dest="vocab_command", required=True)
    p = vocab_sub.add_parser("build", help="sweep a corpus and write the vocabulary file")
    p.add_argument("--dir", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--min-count", type=int, default=1)
    _add_encode_flags(p)
    p.set_defaults(func=_cmd_vocab_build)
    p = vocab_sub.add_parser("report", help="token frequency report")
    p.add_argument("--vocab", required=True)
    p.add_argument("--top", type=int, default=0)
    p.set_defaults(func=_cmd_vocab_report)

    p = sub.add_parser("align", help="align an instance's I/O samples")
    p.add_argument("--in", dest="infile", required=True, help="JSON list of {inputs, outputs}")
    p.add_argument("--vocab", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_align)

    p = sub.add_parser("augment", help="augment one instance's I/O pairs")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--min-pairs", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=4)
    p.add_argument("--time-limit", type=float, default=5.0)
    p.set_defaults(func=_cmd_augment)

    p = sub.add_parser("prep", help="build training records for a corpus")
    p.add_argument("--dir", required=True)
    p.add_argument("--vocab", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--summary")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p1", type=float, default=dataset.DEFAULT_P1)
    p.add_argument("--p2", type=float, default=dataset.DEFAULT_P2)
    p.add_argument("--unk-policy", choices=("skip", "keep"), default="skip")
    p.add_argument("--jobs", type=int, default=1)
    _add_encode_flags(p)
    p.set_defaults(func=_cmd_prep)

    p = sub.add_parser("stats", help="sequence length statistics vs baselines")
    p.add_argument("--dir", required=True)
    p.add_argument("--baseline", default="subword", choices=("subword", "raw", "all"))
    p.add_argument("--report")
    _add_encode_flags(p)
    p.set_defaults(func=_cmd_stats)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (OSError, ValueError, KeyError, SyntaxError, AstseqError, json.JSONDecodeError) as exc:
        print(f"astseq: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - internal errors
        print(f"astseq: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
