"""Readers for the astseq external file formats.

This package never imports astseq: training records arrive as JSONL lines
with {description, io_content, io_syntax, target, meta}, the vocabulary as
the line-oriented TSV file (header then ``id<TAB>kind<TAB>text<TAB>count``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass


def _unescape(text: str) -> str:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\" and i + 1 < len(text):
            out.append({"\\": "\\", "t": "\t", "n": "\n"}[text[i + 1]])
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)


@dataclass(frozen=True)
class VocabFile:
    """id -> (kind, text) view of an astseq vocabulary file."""

    entries: tuple[tuple[str, str], ...]  # indexed by id
    pad_id: int
    eos_id: int
    align_pad_id: int
    wait_pad_id: int
    unk_id: int

    @property
    def n_ids(self) -> int:
        return len(self.entries)

    def kind(self, token_id: int) -> str:
        return self.entries[token_id][0]

    def text(self, token_id: int) -> str:
        return self.entries[token_id][1]

    @classmethod
    def load(cls, path) -> "VocabFile":
        with open(path, "r", encoding="utf-8") as f:
            lines = f.read().splitlines()
        header = lines[0].split("\t")
        if header[0] != "astseq-vocab":
            raise ValueError(f"not an astseq vocabulary file: {path}")
        entries = []
        specials = {}
        for line in lines[1:]:
            id_str, kind, text, _count = line.split("\t")
            text = _unescape(text)
            if int(id_str) != len(entries):
                raise ValueError("non-dense vocabulary ids")
            if kind == "special":
                specials[text] = len(entries)
            entries.append((kind, text))
        return cls(
            entries=tuple(entries),
            pad_id=specials["<PAD>"],
            eos_id=specials["<EOS>"],
            align_pad_id=specials["<ALIGN_PAD>"],
            wait_pad_id=specials["<WAIT_PAD>"],
            unk_id=specials["<UNK>"],
        )


@dataclass(frozen=True)
class Record:
    description: str
    io_content: tuple[tuple[int, ...], ...]
    io_syntax: tuple[tuple[int, ...], ...]
    target: tuple[int, ...]
    meta: dict


def load_records(path) -> list[Record]:
    records = []
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            if not line.strip():
                continue
            obj = json.loads(line)
            records.append(
                Record(
                    description=obj["description"],
                    io_content=tuple(tuple(r) for r in obj["io_content"]),
                    io_syntax=tuple(tuple(r) for r in obj["io_syntax"]),
                    target=tuple(obj["target"]),
                    meta=obj["meta"],
                )
            )
    return records


def split_segments(target, pad_id, eos_id) -> list[list[int]]:
    """The four segments (outline, core hint, frames, accessories)."""
    segments: list[list[int]] = [[]]
    for tid in target:
        if tid == pad_id and len(segments) < 4:
            segments.append([])
        elif tid == eos_id:
            break
        else:
            segments[-1].append(tid)
    if len(segments) != 4:
        raise ValueError(f"target has {len(segments) - 1} separators, expected 3")
    return segments


TARGET_FORMATS = ("full", "no_outline", "no_core", "no_warmup", "interleaved")


def format_target(record: Record, fmt: str, pad_id: int, eos_id: int) -> list[int]:
    """Rebuild the training target under one of the ablation formats."""
    outline, core_hint, frames, accessories = split_segments(record.target, pad_id, eos_id)
    if fmt == "full":
        return [*outline, pad_id, *core_hint, pad_id, *frames, pad_id, *accessories, eos_id]
    if fmt == "no_outline":
        return [*core_hint, pad_id, *frames, pad_id, *accessories, eos_id]
    if fmt == "no_core":
        return [*outline, pad_id, *frames, pad_id, *accessories, eos_id]
    if fmt == "no_warmup":
        return [*frames, pad_id, *accessories, eos_id]
    if fmt == "interleaved":
        mixed = []
        for frame, leaf in zip(frames, accessories):
            mixed.extend((frame, leaf))
        mixed.append(frames[-1])
        return [*outline, pad_id, *core_hint, pad_id, *mixed, eos_id]
    raise ValueError(f"unknown target format {fmt!r}; choose from {TARGET_FORMATS}")


def describe_bytes(text: str, max_len: int = 256) -> list[int]:
    """Byte-level description token ids (1..256); 0 reserved for padding."""
    data = text.encode("utf-8")[:max_len]
    return [b + 1 for b in data] or [1]
