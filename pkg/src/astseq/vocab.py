"""Two-part vocabulary: corpus-swept frame tokens plus fixed accessory tables.

Ids share one dense space: specials 0-4, then the accessory table (pools,
builtins, digits, printable ASCII, common floats), then frame tokens ordered
by descending corpus count.  Serialization is line-oriented and byte-stable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .encode import (
    ASCII_CHAR,
    BUILTIN,
    COMMON_FLOAT,
    DEFAULT_COMMON_FLOATS,
    DIGIT,
    USER_NAME,
    EncodeOptions,
    SubsequenceBundle,
    AccessoryToken,
    FrameToken,
    encode,
)
from .errors import DuplicateEntry, UnknownId
from .transforms import NamePool, load_builtin_names

SPECIAL_TOKENS = ("<PAD>", "<EOS>", "<ALIGN_PAD>", "<WAIT_PAD>", "<UNK>")
PAD_ID, EOS_ID, ALIGN_PAD_ID, WAIT_PAD_ID, UNK_ID = range(5)

_PRINTABLE_ASCII = tuple(chr(c) for c in range(32, 127))


@dataclass(frozen=True)
class AccessoryConfig:
    pool: NamePool = field(default_factory=NamePool)
    common_floats: tuple[float, ...] = DEFAULT_COMMON_FLOATS
    builtin_names: tuple[str, ...] | None = None  # None -> pinned data file

    def resolved_builtins(self) -> tuple[str, ...]:
        if self.builtin_names is not None:
            return self.builtin_names
        return tuple(sorted(load_builtin_names()))


def build_accessory_vocab(config: AccessoryConfig | None = None) -> list[tuple[str, str]]:
    """The fixed (category, text) accessory entries, in canonical order."""
    config = config or AccessoryConfig()
    entries: list[tuple[str, str]] = []
    for cat, _prefix in config.pool.prefixes:
        for name in config.pool.candidates(cat):
            entries.append((USER_NAME, name))
    for name in config.resolved_builtins():
        entries.append((BUILTIN, name))
    for d in "0123456789":
        entries.append((DIGIT, d))
    for ch in _PRINTABLE_ASCII:
        entries.append((ASCII_CHAR, ch))
    for f in config.common_floats:
        entries.append((COMMON_FLOAT, repr(f)))
    seen = set()
    for entry in entries:
        if entry in seen:
            raise DuplicateEntry(f"accessory entry listed twice: {entry}")
        seen.add(entry)
    return entries


@dataclass(frozen=True)
class Vocabulary:
    accessory_entries: tuple[tuple[str, str], ...]
    frame_entries: tuple[tuple[str, int], ...]  # (text, corpus count), count-descending

    def __post_init__(self):
        acc = {}
        for i, entry in enumerate(self.accessory_entries):
            acc[entry] = len(SPECIAL_TOKENS) + i
        frames = {}
        base = len(SPECIAL_TOKENS) + len(self.accessory_entries)
        for i, (text, _count) in enumerate(self.frame_entries):
            frames[text] = base + i
        object.__setattr__(self, "_acc_ids", acc)
        object.__setattr__(self, "_frame_ids", frames)

    # -- sizes ---------------------------------------------------------
    @property
    def n_ids(self) -> int:
        return len(SPECIAL_TOKENS) + len(self.accessory_entries) + len(self.frame_entries)

    # -- lookups -------------------------------------------------------
    def frame_id(self, text: str) -> int:
        return self._frame_ids.get(text, UNK_ID)

    def accessory_id(self, category: str, text: str) -> int:
        return self._acc_ids.get((category, text), UNK_ID)

    def entry_for_id(self, token_id: int) -> tuple[str, str]:
        """(kind, text) where kind is 'special', 'frame', or the accessory category."""
        if not 0 <= token_id < self.n_ids:
            raise UnknownId(f"id {token_id} outside vocabulary of size {self.n_ids}")
        if token_id < len(SPECIAL_TOKENS):
            return "special", SPECIAL_TOKENS[token_id]
        token_id -= len(SPECIAL_TOKENS)
        if token_id < len(self.accessory_entries):
            cat, text = self.accessory_entries[token_id]
            return cat, text
        text, _count = self.frame_entries[token_id - len(self.accessory_entries)]
        return "frame", text

    # -- statistics ----------------------------------------------------
    def frequency_report(self) -> list[tuple[str, int, int]]:
        """(frame token, count, rank), sorted by descending count."""
        return [(text, count, rank) for rank, (text, count) in enumerate(self.frame_entries, 1)]

    # -- serialization -------------------------------------------------
    def save(self, path) -> None:
        lines = [
            "\t".join(
                (
                    "astseq-vocab",
                    "1",
                    str(self.n_ids),
                    str(len(self.accessory_entries)),
                    str(len(self.frame_entries)),
                )
            )
        ]
        for i, text in enumerate(SPECIAL_TOKENS):
            lines.append(f"{i}\tspecial\t{_escape(text)}\t0")
        next_id = len(SPECIAL_TOKENS)
        for cat, text in self.accessory_entries:
            lines.append(f"{next_id}\t{cat}\t{_escape(text)}\t0")
            next_id += 1
        for text, count in self.frame_entries:
            lines.append(f"{next_id}\tframe\t{_escape(text)}\t{count}")
            next_id += 1
        with open(path, "w", encoding="utf-8") as f:
            f.write("\n".join(lines) + "\n")

    @classmethod
    def load(cls, path) -> "Vocabulary":
        with open(path, "r", encoding="utf-8") as f:
            lines = f.read().splitlines()
        header = lines[0].split("\t")
        if header[0] != "astseq-vocab" or header[1] != "1":
            raise ValueError(f"not an astseq vocabulary file: {path}")
        accessory: list[tuple[str, str]] = []
        frames: list[tuple[str, int]] = []
        for expected_id, line in enumerate(lines[1:]):
            id_str, kind, text, count = line.split("\t")
            if int(id_str) != expected_id:
                raise ValueError(f"non-dense id {id_str} in {path}")
            text = _unescape(text)
            if kind == "special":
                if SPECIAL_TOKENS[expected_id] != text:
                    raise ValueError(f"special token mismatch at id {expected_id}")
            elif kind == "frame":
                frames.append((text, int(count)))
            else:
                accessory.append((kind, text))
        return cls(accessory_entries=tuple(accessory), frame_entries=tuple(frames))


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n")


def _unescape(text: str) -> str:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\" and i + 1 < len(text):
            nxt = text[i + 1]
            out.append({"\\": "\\", "t": "\t", "n": "\n"}[nxt])
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)


def sweep_frame_counts(corpus, opts: EncodeOptions | None = None):
    """Count frame tokens over an iterable of sources; unparsable files are
    skipped and tallied.  Returns (Counter, n_files_used, n_files_skipped)."""
    opts = opts or EncodeOptions()
    counts: Counter[str] = Counter()
    used = skipped = 0
    for source in corpus:
        try:
            bundle = encode(source, opts)
        except Exception:
            skipped += 1
            continue
        used += 1
        counts.update(bundle.frame_texts())
    return counts, used, skipped


def build_frame_vocab(
    corpus,
    min_count: int = 1,
    config: AccessoryConfig | None = None,
    opts: EncodeOptions | None = None,
) -> Vocabulary:
    """Sweep a corpus of sources and build the full vocabulary.

    Frame tokens with count below ``min_count`` are dropped and id-encode to
    UNK later.  Ordering is (count desc, text) so rebuilds are byte-stable.
    """
    counts, _used, _skipped = sweep_frame_counts(corpus, opts)
    kept = sorted(
        ((text, count) for text, count in counts.items() if count >= min_count),
        key=lambda tc: (-tc[1], tc[0]),
    )
    return Vocabulary(
        accessory_entries=tuple(build_accessory_vocab(config)),
        frame_entries=tuple(kept),
    )


@dataclass(frozen=True)
class EncodedBundle:
    """Id-space view of a SubsequenceBundle plus UNK diagnostics."""

    outline: tuple[int, ...]
    core_hint: tuple[int, ...]
    frames: tuple[int, ...]
    accessories: tuple[int, ...]
    outline_index: tuple[int, ...]
    core_index: tuple[int, ...]
    unk_positions: tuple[tuple[str, int, str], ...]  # (sequence, position, text)

    @property
    def has_unk(self) -> bool:
        return bool(self.unk_positions)


def encode_ids(bundle: SubsequenceBundle, vocab: Vocabulary) -> EncodedBundle:
    unk: list[tuple[str, int, str]] = []
    frame_ids = []
    for i, tok in enumerate(bundle.frames):
        tid = vocab.frame_id(tok.text)
        if tid == UNK_ID:
            unk.append(("frames", i, tok.text))
        frame_ids.append(tid)
    accessory_ids = []
    for i, tok in enumerate(bundle.accessories):
        tid = vocab.accessory_id(tok.category, tok.text)
        if tid == UNK_ID:
            unk.append(("accessories", i, tok.text))
        accessory_ids.append(tid)
    return EncodedBundle(
        outline=tuple(frame_ids[i] for i in bundle.outline_index),
        core_hint=tuple(frame_ids[i] for i in bundle.core_index),
        frames=tuple(frame_ids),
        accessories=tuple(accessory_ids),
        outline_index=bundle.outline_index,
        core_index=bundle.core_index,
        unk_positions=tuple(unk),
    )


def decode_ids(encoded: EncodedBundle, vocab: Vocabulary) -> SubsequenceBundle:
    """Rebuild token content from ids; exact inverse when no UNK was emitted."""
    frames = []
    for tid in encoded.frames:
        kind, text = vocab.entry_for_id(tid)
        if kind not in ("frame", "special"):
            raise UnknownId(f"id {tid} is not a frame token")
        frames.append(FrameToken(text))
    accessories = []
    for tid in encoded.accessories:
        kind, text = vocab.entry_for_id(tid)
        if kind in ("frame",):
            raise UnknownId(f"id {tid} is not an accessory token")
        accessories.append(AccessoryToken(text, kind))
    return SubsequenceBundle(
        frames=tuple(frames),
        accessories=tuple(accessories),
        outline_index=encoded.outline_index,
        core_index=encoded.core_index,
        name_map={},
    )
