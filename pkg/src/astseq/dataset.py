"""Assemble model-ready training records and corpus statistics.

A record's target sequence is outline <PAD> core-hint <PAD> frames <PAD>
accessories <EOS>, with token dropout applied to the two coarse segments
(they are hints and need not be complete); frames, accessories and the
separators are never dropped.
"""

from __future__ import annotations

import json
import random
import statistics
import zlib
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from . import baseline
from .augment import Instance
from .encode import EncodeOptions, encode
from .errors import AstseqError
from .io_align import IOSample, align_tokens
from .vocab import EOS_ID, PAD_ID, EncodedBundle, Vocabulary, encode_ids

DEFAULT_P1 = 0.05
DEFAULT_P2 = 0.2

RECORD_VERSION = 1


def assemble_target(
    encoded: EncodedBundle,
    p1: float = DEFAULT_P1,
    p2: float = DEFAULT_P2,
    seed: int = 0,
) -> list[int]:
    """Dropout-applied coarse-to-fine target id sequence."""
    rng = random.Random(seed)
    outline = [t for t in encoded.outline if rng.random() >= p1]
    core_hint = [t for t in encoded.core_hint if rng.random() >= p2]
    return [*outline, PAD_ID, *core_hint, PAD_ID, *encoded.frames, PAD_ID, *encoded.accessories, EOS_ID]


def split_target(target: list[int]) -> list[list[int]]:
    """Inverse of the layout: the four segments between separators/EOS."""
    segments: list[list[int]] = [[]]
    for tid in target:
        if tid == PAD_ID and len(segments) < 4:
            segments.append([])
        elif tid == EOS_ID:
            break
        else:
            segments[-1].append(tid)
    if len(segments) != 4:
        raise ValueError(f"target holds {len(segments) - 1} separators, expected 3")
    return segments


@dataclass(frozen=True)
class TrainingRecord:
    description: str
    io_content: tuple[tuple[int, ...], ...]
    io_syntax: tuple[tuple[int, ...], ...]
    target: tuple[int, ...]
    meta: dict

    def to_json(self) -> str:
        return json.dumps(
            {
                "description": self.description,
                "io_content": [list(r) for r in self.io_content],
                "io_syntax": [list(r) for r in self.io_syntax],
                "target": list(self.target),
                "meta": self.meta,
            },
            ensure_ascii=False,
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, line: str) -> "TrainingRecord":
        obj = json.loads(line)
        return cls(
            description=obj["description"],
            io_content=tuple(tuple(r) for r in obj["io_content"]),
            io_syntax=tuple(tuple(r) for r in obj["io_syntax"]),
            target=tuple(obj["target"]),
            meta=obj["meta"],
        )


@dataclass(frozen=True)
class PrepOptions:
    encode_options: EncodeOptions = field(default_factory=EncodeOptions)
    p1: float = DEFAULT_P1
    p2: float = DEFAULT_P2
    seed: int = 0
    unk_policy: str = "skip"  # skip | keep
    max_io_samples: int = 32


@dataclass
class PrepSummary:
    accepted: int = 0
    skipped: Counter = field(default_factory=Counter)

    def as_dict(self):
        return {"accepted": self.accepted, "skipped": dict(sorted(self.skipped.items()))}


def _record_seed(base_seed: int, key: str) -> int:
    return (base_seed << 16) ^ zlib.crc32(key.encode("utf-8"))


def record_for_source(
    source: str,
    vocab: Vocabulary,
    options: PrepOptions,
    key: str = "",
    description: str = "",
    io_pairs: tuple[IOSample, ...] = (),
) -> TrainingRecord | None:
    """Build one record; returns None when the UNK policy skips the file."""
    bundle = encode(source, options.encode_options)
    encoded = encode_ids(bundle, vocab)
    if encoded.has_unk and options.unk_policy == "skip":
        return None
    seed = _record_seed(options.seed, key)
    target = assemble_target(encoded, options.p1, options.p2, seed)
    if io_pairs:
        matrix = align_tokens(list(io_pairs)[: options.max_io_samples]).to_matrix(vocab)
        io_content, io_syntax = matrix.content, matrix.syntax
    else:
        io_content = io_syntax = ()
    return TrainingRecord(
        description=description,
        io_content=io_content,
        io_syntax=io_syntax,
        target=tuple(target),
        meta={
            "source": key,
            "seed": seed,
            "version": RECORD_VERSION,
            "replace_names": options.encode_options.replace_names,
            "strip_docstrings": options.encode_options.strip_docstrings,
            "p1": options.p1,
            "p2": options.p2,
        },
    )


def load_instance(path: Path) -> Instance:
    obj = json.loads(path.read_text("utf-8"))
    pairs = tuple(
        IOSample(inputs=tuple(p["inputs"]), outputs=tuple(p["outputs"])) for p in obj.get("io_pairs", [])
    )
    return Instance(description=obj.get("description", ""), solution=obj["solution"], io_pairs=pairs)


def _prep_one(path: Path, root: Path, vocab: Vocabulary, options: PrepOptions):
    """(key, record-or-None, skip-reason-or-None) for one corpus file."""
    key = path.relative_to(root).as_posix()
    try:
        if path.suffix == ".json":
            inst = load_instance(path)
            record = record_for_source(
                inst.solution,
                vocab,
                options,
                key=key,
                description=inst.description,
                io_pairs=inst.io_pairs,
            )
        else:
            record = record_for_source(path.read_text("utf-8"), vocab, options, key=key)
    except SyntaxError:
        return key, None, "SyntaxError"
    except AstseqError as exc:
        return key, None, type(exc).__name__
    except (OSError, KeyError, ValueError, UnicodeDecodeError) as exc:
        return key, None, type(exc).__name__
    if record is None:
        return key, None, "UnknownToken"
    return key, record, None


def prep_corpus(source_dir, vocab: Vocabulary, options: PrepOptions | None = None, jobs: int = 1):
    """One TrainingRecord per accepted file/instance under source_dir.

    Plain ``*.py`` files become code-only records; ``*.json`` instance
    descriptors contribute description and aligned I/O grids.  Deterministic:
    files are processed in sorted path order with per-file seeds, and
    ``jobs`` only parallelises the per-file work (output order is stable).
    """
    options = options or PrepOptions()
    root = Path(source_dir)
    summary = PrepSummary()
    records: list[TrainingRecord] = []
    paths = sorted(list(root.rglob("*.py")) + list(root.rglob("*.json")))
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        from functools import partial

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(partial(_prep_one, root=root, vocab=vocab, options=options), paths))
    else:
        results = [_prep_one(path, root, vocab, options) for path in paths]
    for _key, record, reason in results:
        if record is None:
            summary.skipped[reason] += 1
        else:
            summary.accepted += 1
            records.append(record)
    return records, summary


def write_records(records, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        for record in records:
            f.write(record.to_json() + "\n")


def read_records(path) -> list[TrainingRecord]:
    with open(path, "r", encoding="utf-8") as f:
        return [TrainingRecord.from_json(line) for line in f if line.strip()]


@dataclass(frozen=True)
class StatsRow:
    tokenizer: str
    mean: float
    median: float
    std: float
    n_files: int


def corpus_stats(sources: list[str], opts: EncodeOptions | None = None):
    """Per-tokenizer sequence length statistics plus the per-file table.

    The codec length of a file is len(frames) + len(accessories).
    """
    opts = opts or EncodeOptions()
    per_file: list[dict] = []
    for i, source in enumerate(sources):
        try:
            bundle = encode(source, opts)
        except (SyntaxError, AstseqError):
            continue
        per_file.append(
            {
                "index": i,
                "codec": len(bundle.frames) + len(bundle.accessories),
                "subword": baseline.subword_length(source),
                "raw": baseline.raw_length(source),
            }
        )
    rows = []
    for name in ("codec", "subword", "raw"):
        lengths = [f[name] for f in per_file]
        if not lengths:
            continue
        rows.append(
            StatsRow(
                tokenizer=name,
                mean=statistics.fmean(lengths),
                median=float(statistics.median(lengths)),
                std=statistics.pstdev(lengths) if len(lengths) > 1 else 0.0,
                n_files=len(lengths),
            )
        )
    return rows, per_file
