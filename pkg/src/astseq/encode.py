"""Encode source into the four subsequences.

A pre-order walk groups branching-constructor text between consecutive
leaves into frame tokens and emits the leaves as accessory tokens.  The
outline keeps one frame token per module-level statement line; the core
hint keeps the frame tokens of leaves inside loops or user-defined
functions.  Both are recorded as positions into the frame sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import tree
from .transforms import NamePool, load_builtin_names, replace_names, strip_docstrings

DEFAULT_COMMON_FLOATS = (0.1, 0.0001, 0.5, 0.2)

USER_NAME = "user_name"
BUILTIN = "builtin"
DIGIT = "digit"
ASCII_CHAR = "ascii_char"
COMMON_FLOAT = "common_float"


@dataclass(frozen=True)
class FrameToken:
    text: str
    # positional annotations, not identity: two frame tokens are the same
    # vocabulary entry iff their text matches
    newline_flag: bool = field(default=False, compare=False)
    indent_level: int = field(default=0, compare=False)


@dataclass(frozen=True)
class AccessoryToken:
    text: str
    category: str


@dataclass(frozen=True)
class EncodeOptions:
    replace_names: bool = False
    strip_docstrings: bool = False
    pool: NamePool = field(default_factory=NamePool)
    common_floats: tuple[float, ...] = DEFAULT_COMMON_FLOATS


@dataclass(frozen=True)
class SubsequenceBundle:
    """The codec's central value: the four subsequences plus the name map.

    ``outline_index``/``core_index`` are positions into ``frames`` so the sub-list
    relationship is positional, not merely textual.
    """

    frames: tuple[FrameToken, ...]
    accessories: tuple[AccessoryToken, ...]
    outline_index: tuple[int, ...]
    core_index: tuple[int, ...]
    name_map: dict[str, str]

    @property
    def outline(self) -> tuple[FrameToken, ...]:
        return tuple(self.frames[i] for i in self.outline_index)

    @property
    def core_hint(self) -> tuple[FrameToken, ...]:
        return tuple(self.frames[i] for i in self.core_index)

    def frame_texts(self) -> list[str]:
        return [f.text for f in self.frames]

    def accessory_texts(self) -> list[str]:
        return [a.text for a in self.accessories]

    def interleaved(self) -> str:
        """Serialized tree text: frame_1 leaf_1 frame_2 ... frame_{N+1}."""
        parts = []
        for f, a in zip(self.frames, self.accessories):
            parts.append(f.text)
            parts.append(a.text)
        parts.append(self.frames[-1].text)
        return "".join(parts)


def leaf_pieces(node: tree.Node, common_float_texts: frozenset[str], builtins_set) -> tuple[list[str], str]:
    """Split a leaf payload into accessory-token texts plus their category.

    Multi-digit numbers and string content are emitted per character so the
    accessory vocabulary stays closed; identifier names are never broken up.
    """
    kind = node.leaf_kind
    if kind == "name":
        return [node.label], (BUILTIN if node.label in builtins_set else USER_NAME)
    if kind == "word":
        return [node.label], BUILTIN
    if kind == "int":
        return list(node.label), DIGIT
    if kind == "float":
        if node.label in common_float_texts:
            return [node.label], COMMON_FLOAT
        return list(node.label), ASCII_CHAR
    # complex / str / bytes content
    return list(node.label), ASCII_CHAR


def encode_tree(t: tree.SyntaxTree, opts: EncodeOptions | None = None, name_map=None) -> SubsequenceBundle:
    """Run the grouping walk on an already-transformed tree."""
    opts = opts or EncodeOptions()
    common = frozenset(repr(f) for f in opts.common_floats)
    builtins_set = load_builtin_names()

    frames: list[FrameToken] = []
    accessories: list[AccessoryToken] = []
    outline_index: list[int] = []
    core_index: list[int] = []
    buf: list[str] = []
    seen_lines: set[int] = set()

    def emit_leaf(node):
        pieces, category = leaf_pieces(node, common, builtins_set)
        for j, piece in enumerate(pieces):
            first_of_line = j == 0 and node.line not in seen_lines
            if first_of_line:
                seen_lines.add(node.line)
            frames.append(
                FrameToken("".join(buf), newline_flag=first_of_line, indent_level=node.indent_level)
            )
            buf.clear()
            idx = len(frames) - 1
            if node.in_core:
                core_index.append(idx)
            if first_of_line and node.indent_level == 1:
                outline_index.append(idx)
            accessories.append(AccessoryToken(piece, category))

    def walk(node):
        if node.is_leaf:
            emit_leaf(node)
            return
        buf.append(node.segments[0])
        for child, seg in zip(node.children, node.segments[1:]):
            walk(child)
            buf.append(seg)

    walk(t.root)
    frames.append(FrameToken("".join(buf)))  # closing material after the last leaf

    return SubsequenceBundle(
        frames=tuple(frames),
        accessories=tuple(accessories),
        outline_index=tuple(outline_index),
        core_index=tuple(core_index),
        name_map=dict(name_map or {}),
    )


def encode(source: str, opts: EncodeOptions | None = None) -> SubsequenceBundle:
    """Parse and encode a module; applies the transforms enabled in opts."""
    opts = opts or EncodeOptions()
    t = tree.parse(source)
    name_map = {}
    if opts.strip_docstrings:
        t = strip_docstrings(t)
    if opts.replace_names:
        t, name_map = replace_names(t, opts.pool)
    return encode_tree(t, opts, name_map)


def transformed_tree(source: str, opts: EncodeOptions | None = None) -> tree.SyntaxTree:
    """The tree the encoder actually serialises, after enabled transforms."""
    opts = opts or EncodeOptions()
    t = tree.parse(source)
    if opts.strip_docstrings:
        t = strip_docstrings(t)
    if opts.replace_names:
        t, _ = replace_names(t, opts.pool)
    return t
