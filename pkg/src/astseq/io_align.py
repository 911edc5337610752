"""Tokenize literal I/O values through the codec and align them across the
samples of one instance.

Each sample's inputs (and outputs) are tokenized as a single list literal;
the token stream is segmented at the top-level elements ("slots").  Within a
slot, shorter samples are front-padded with align-padding so trailing roles
line up; the closing frame material after the last slot pairs with
wait-padding on the content side.  Continuation pieces of one leaf (extra
digits of a number, characters of a string) have no frame text of their own
and show wait-padding on the syntax side.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass

from . import tree
from .encode import AccessoryToken, EncodeOptions, FrameToken, encode_tree, leaf_pieces
from .errors import SlotArityMismatch
from .transforms import load_builtin_names
from .vocab import ALIGN_PAD_ID, WAIT_PAD_ID, Vocabulary


class _Pad:
    def __init__(self, name):
        self.name = name

    def __repr__(self):
        return f"<{self.name}>"


ALIGN = _Pad("ALIGN_PAD")
WAIT = _Pad("WAIT_PAD")


@dataclass(frozen=True)
class IOSample:
    inputs: tuple
    outputs: tuple

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "outputs", tuple(self.outputs))


def tokenize_literal(text: str) -> tuple[list[AccessoryToken], list[FrameToken]]:
    """Codec view of one literal: (content tokens, syntax tokens).

    len(syntax) == len(content) + 1; the trailing syntax token is closing
    material with no content opposite it.
    """
    ast.literal_eval(text)  # raises if not a literal expression
    bundle = encode_tree(tree.parse(text))
    return list(bundle.accessories), list(bundle.frames)


@dataclass(frozen=True)
class _Unit:
    """Tokenized view of one sample's inputs (or outputs) list literal."""

    content: list[AccessoryToken]
    syntax: list[FrameToken]
    slot_lengths: list[int]  # content tokens per top-level element

    @classmethod
    def from_values(cls, values) -> "_Unit":
        literal = repr(list(values))
        t = tree.parse(literal)
        bundle = encode_tree(t)
        # Module -> Expr -> List; its elements are the slots
        list_node = t.root.children[0].children[0]
        opts = EncodeOptions()
        common = frozenset(repr(f) for f in opts.common_floats)
        builtins_set = load_builtin_names()

        def pieces_in(node):
            if node.is_leaf:
                return len(leaf_pieces(node, common, builtins_set)[0])
            return sum(pieces_in(c) for c in node.children)

        return cls(
            content=list(bundle.accessories),
            syntax=list(bundle.frames),
            slot_lengths=[pieces_in(elt) for elt in list_node.children],
        )


@dataclass(frozen=True)
class AlignedIOMatrix:
    """Id grids (content and syntax) plus per-slot column spans."""

    content: tuple[tuple[int, ...], ...]
    syntax: tuple[tuple[int, ...], ...]
    slot_boundaries: tuple[tuple[str, int, int], ...]  # (label, start col, end col)

    @property
    def n_samples(self) -> int:
        return len(self.content)

    @property
    def n_tokens(self) -> int:
        return len(self.content[0]) if self.content else 0


@dataclass(frozen=True)
class AlignedTokenTable:
    """Token-level grid: cells are tokens or the ALIGN/WAIT pad markers."""

    content: tuple[tuple[object, ...], ...]
    syntax: tuple[tuple[object, ...], ...]
    slot_boundaries: tuple[tuple[str, int, int], ...]

    def to_matrix(self, vocab: Vocabulary) -> AlignedIOMatrix:
        def content_id(cell):
            if cell is ALIGN:
                return ALIGN_PAD_ID
            if cell is WAIT:
                return WAIT_PAD_ID
            return vocab.accessory_id(cell.category, cell.text)

        def syntax_id(cell):
            if cell is ALIGN:
                return ALIGN_PAD_ID
            if cell is WAIT:
                return WAIT_PAD_ID
            return vocab.frame_id(cell.text)

        return AlignedIOMatrix(
            content=tuple(tuple(content_id(c) for c in row) for row in self.content),
            syntax=tuple(tuple(syntax_id(c) for c in row) for row in self.syntax),
            slot_boundaries=self.slot_boundaries,
        )


def align_tokens(samples: list[IOSample]) -> AlignedTokenTable:
    """Token-level alignment across the samples of one instance."""
    if not samples:
        raise SlotArityMismatch("need at least one sample")
    n_in = len(samples[0].inputs)
    n_out = len(samples[0].outputs)
    for i, s in enumerate(samples):
        if len(s.inputs) != n_in or len(s.outputs) != n_out:
            raise SlotArityMismatch(
                f"sample {i} has {len(s.inputs)}/{len(s.outputs)} slots, "
                f"expected {n_in}/{n_out}"
            )

    units = [
        ("input", [_Unit.from_values(s.inputs) for s in samples]),
        ("output", [_Unit.from_values(s.outputs) for s in samples]),
    ]

    content_rows = [[] for _ in samples]
    syntax_rows = [[] for _ in samples]
    boundaries = []
    col = 0
    for label, sample_units in units:
        n_slots = len(sample_units[0].slot_lengths)
        offsets = [0] * len(samples)
        for slot in range(n_slots):
            slot_max = max(u.slot_lengths[slot] for u in sample_units)
            for i, u in enumerate(sample_units):
                n = u.slot_lengths[slot]
                start = offsets[i]
                for _ in range(slot_max - n):
                    content_rows[i].append(ALIGN)
                    syntax_rows[i].append(ALIGN)
                for k in range(start, start + n):
                    content_rows[i].append(u.content[k])
                    frame = u.syntax[k]
                    # continuation pieces of one leaf carry no frame text
                    syntax_rows[i].append(WAIT if frame.text == "" else frame)
                offsets[i] += n
            boundaries.append((f"{label} {slot + 1}", col, col + slot_max))
            col += slot_max
        for i, u in enumerate(sample_units):
            content_rows[i].append(WAIT)
            syntax_rows[i].append(u.syntax[-1])
        boundaries.append((f"{label} closing", col, col + 1))
        col += 1

    return AlignedTokenTable(
        content=tuple(tuple(row) for row in content_rows),
        syntax=tuple(tuple(row) for row in syntax_rows),
        slot_boundaries=tuple(boundaries),
    )


def align(samples: list[IOSample], vocab: Vocabulary) -> AlignedIOMatrix:
    return align_tokens(samples).to_matrix(vocab)


def reconstruct_unit(content_row, syntax_row, columns) -> tuple[list[str], list[str]]:
    """Strip padding from one unit's columns of a row; returns (frames, accessories) texts.

    Inverse of the table construction: align cells vanish, syntax-side WAIT
    becomes the empty frame, the content-side WAIT marks the closing frame.
    """
    frames: list[str] = []
    accessories: list[str] = []
    for col in columns:
        content = content_row[col]
        syntax = syntax_row[col]
        if content is ALIGN:
            continue
        if content is WAIT:
            frames.append(syntax.text)
            continue
        frames.append("" if syntax is WAIT else syntax.text)
        accessories.append(content.text)
    return frames, accessories
