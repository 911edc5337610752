"""Parse Python-3 source into an immutable syntax tree and back.

The tree mirrors the stdlib ``ast`` module but makes the split between
structural material and leaf payloads explicit: branching nodes carry the
constructor text (name, field punctuation, inlined operator/context
fragments) as ``segments`` around their children, while leaf nodes carry
exactly the identifier names and constant values.  Joining segments and leaf
labels in pre-order yields a canonical serialized form that re-parses to the
same tree.
"""

from __future__ import annotations

import ast
import hashlib
import math
from dataclasses import dataclass, field

from .errors import MalformedTree, UnsupportedConstruct

BRANCHING = "branching"
LEAF = "leaf"

# Zero-field constructors folded into the surrounding frame text.  Operators
# ride the frame: only names and constant values become leaves.
_INLINE_TYPES = (ast.expr_context, ast.boolop, ast.operator, ast.unaryop, ast.cmpop)

# (class name -> fields) whose string values are identifier leaves.
_IDENT_FIELDS = {
    "Name": {"id"},
    "Attribute": {"attr"},
    "FunctionDef": {"name"},
    "AsyncFunctionDef": {"name"},
    "ClassDef": {"name"},
    "arg": {"arg"},
    "keyword": {"arg"},
    "alias": {"name", "asname"},
    "Global": {"names"},
    "Nonlocal": {"names"},
    "ExceptHandler": {"name"},
    "ImportFrom": {"module"},
    "MatchAs": {"name"},
    "MatchStar": {"name"},
    "MatchMapping": {"rest"},
}

# Identifier fields that may hold dotted paths; each component becomes its
# own leaf so the accessory vocabulary stays dot-free.
_DOTTED_FIELDS = {("alias", "name"), ("ImportFrom", "module")}

# Subtrees counted as "core algorithm" material: loops (comprehensions are
# loops) and user-defined functions, headers included.
_CORE_TYPES = (
    ast.For,
    ast.AsyncFor,
    ast.While,
    ast.FunctionDef,
    ast.AsyncFunctionDef,
    ast.Lambda,
    ast.ListComp,
    ast.SetComp,
    ast.DictComp,
    ast.GeneratorExp,
)


@dataclass(frozen=True)
class Node:
    """One tree node.

    Branching nodes hold ``segments``: len(children) + 1 text fragments that
    surround the children in the serialized form; ``label`` is the opening
    fragment.  Leaf nodes hold their payload text in ``label`` (already
    escape-rendered for strings/bytes) plus ``leaf_kind`` naming the payload
    type.
    """

    kind: str
    label: str
    children: tuple["Node", ...]
    line: int = field(compare=False)
    indent_level: int
    segments: tuple[str, ...] = ()
    leaf_kind: str = ""
    in_core: bool = field(default=False, compare=False)

    @property
    def is_leaf(self):
        return self.kind == LEAF

    def serialized(self):
        """Canonical serialized text of this subtree."""
        if self.is_leaf:
            return self.label
        parts = [self.segments[0]]
        for child, seg in zip(self.children, self.segments[1:]):
            parts.append(child.serialized())
            parts.append(seg)
        return "".join(parts)


@dataclass(frozen=True)
class SyntaxTree:
    root: Node
    source_hash: str = field(compare=False)
    py_module: ast.Module = field(repr=False, compare=False)

    def serialized(self):
        return self.root.serialized()


def escape_str(value: str) -> str:
    """Render string-constant content with all characters in printable ASCII."""
    out = []
    for ch in value:
        if ch == "\\":
            out.append("\\\\")
        elif ch == "'":
            out.append("\\'")
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\r":
            out.append("\\r")
        elif ch == "\t":
            out.append("\\t")
        else:
            o = ord(ch)
            if 32 <= o <= 126:
                out.append(ch)
            elif o < 0x100:
                out.append(f"\\x{o:02x}")
            elif o <= 0xFFFF:
                out.append(f"\\u{o:04x}")
            else:
                out.append(f"\\U{o:08x}")
    return "".join(out)


def escape_bytes(value: bytes) -> str:
    out = []
    for b in value:
        ch = chr(b)
        if ch == "\\":
            out.append("\\\\")
        elif ch == "'":
            out.append("\\'")
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\r":
            out.append("\\r")
        elif ch == "\t":
            out.append("\\t")
        elif 32 <= b <= 126:
            out.append(ch)
        else:
            out.append(f"\\x{b:02x}")
    return "".join(out)


class _Builder:
    """Renders a stdlib AST into the internal Node tree."""

    def convert(self, module: ast.Module) -> Node:
        return self._node(module, line=1, indent=0, in_core=False)

    def _node(self, py: ast.AST, line: int, indent: int, in_core: bool) -> Node:
        cls_name = type(py).__name__
        if isinstance(py, _CORE_TYPES):
            in_core = True

        segments: list[str] = []
        buf: list[str] = [cls_name, "("]
        children: list[Node] = []

        def flush():
            segments.append("".join(buf))
            buf.clear()

        def leaf(text, leaf_kind):
            flush()
            children.append(
                Node(LEAF, text, (), line, indent, leaf_kind=leaf_kind, in_core=in_core)
            )

        def render(value, key):
            if value is None:
                buf.append("None")
            elif isinstance(value, _INLINE_TYPES):
                buf.append(type(value).__name__ + "()")
            elif isinstance(value, ast.AST):
                flush()
                children.append(self._child(value, line, indent, in_core))
            elif isinstance(value, list):
                buf.append("[")
                for i, item in enumerate(value):
                    if i:
                        buf.append(",")
                    render(item, key)
                buf.append("]")
            elif isinstance(value, str):
                if key in _ident_keys(cls_name):
                    self._ident_leaf(value, key, buf, leaf)
                else:
                    # non-leaf string field, e.g. Constant.kind='u'
                    buf.append("'" + escape_str(value) + "'")
            elif isinstance(value, int):
                # level / conversion / simple / is_async ride the frame
                buf.append(repr(value))
            else:
                raise UnsupportedConstruct(cls_name, f"field value {value!r}")

        if isinstance(py, ast.Constant):
            buf.append("value=")
            self._constant(py.value, buf, leaf)
            buf.append(",kind=")
            render(py.kind, ("Constant", "kind"))
            buf.append(")")
        else:
            for i, fname in enumerate(py._fields):
                if i:
                    buf.append(",")
                buf.append(fname + "=")
                render(getattr(py, fname), (cls_name, fname))
            buf.append(")")
        flush()

        return Node(
            BRANCHING,
            segments[0],
            tuple(children),
            line,
            indent,
            segments=tuple(segments),
            in_core=in_core,
        )

    def _child(self, py: ast.AST, line: int, indent: int, in_core: bool) -> Node:
        # Statements open a new logical line one indent level deeper than the
        # enclosing construct; module-level statements sit at level 1.
        if isinstance(py, ast.stmt):
            return self._node(py, py.lineno, indent + 1, in_core)
        if isinstance(py, ast.ExceptHandler):
            # header shares the try statement's indent; its body nests below
            return self._node(py, py.lineno, indent, in_core)
        if isinstance(py, ast.match_case):
            return self._node(py, py.pattern.lineno, indent + 1, in_core)
        return self._node(py, line, indent, in_core)

    def _ident_leaf(self, value, key, buf, leaf):
        buf.append("'")
        if key in _DOTTED_FIELDS and "." in value:
            for i, part in enumerate(value.split(".")):
                if i:
                    buf.append(".")
                leaf(part, "name")
        else:
            leaf(value, "name")
        buf.append("'")

    def _constant(self, value, buf, leaf):
        if value is None or value is True or value is False:
            leaf(str(value), "word")
        elif value is Ellipsis:
            buf.append("...")
        elif isinstance(value, int):
            if value < 0:
                raise MalformedTree("negative integer constant outside unary minus")
            leaf(repr(value), "int")
        elif isinstance(value, float):
            if math.isfinite(value):
                text = repr(value)
            elif value == math.inf:
                text = "1e309"  # literal form of the overflow float
            else:
                raise UnsupportedConstruct("non-finite float constant", repr(value))
            leaf(text, "float")
        elif isinstance(value, complex):
            if not (math.isfinite(value.real) and math.isfinite(value.imag)):
                raise UnsupportedConstruct("non-finite complex constant", repr(value))
            leaf(repr(value), "complex")
        elif isinstance(value, str):
            buf.append("'")
            esc = escape_str(value)
            if esc:
                leaf(esc, "str")
            buf.append("'")
        elif isinstance(value, bytes):
            buf.append("b'")
            esc = escape_bytes(value)
            if esc:
                leaf(esc, "bytes")
            buf.append("'")
        else:
            raise UnsupportedConstruct("constant", repr(type(value)))


def _ident_keys(cls_name):
    fields = _IDENT_FIELDS.get(cls_name, ())
    return {(cls_name, f) for f in fields}


def parse(source: str) -> SyntaxTree:
    """Parse a Python-3 module into a SyntaxTree.

    Raises SyntaxError for unparsable text and UnsupportedConstruct for
    grammar outside the supported subset.
    """
    if not isinstance(source, str):
        raise TypeError("source must be str")
    module = ast.parse(source)
    root = _Builder().convert(module)
    digest = hashlib.sha256(source.encode("utf-8")).hexdigest()
    return SyntaxTree(root=root, source_hash=digest, py_module=module)


def from_module(module: ast.Module, source_hash: str = "") -> SyntaxTree:
    """Wrap an existing stdlib module node (used by tree transforms)."""
    root = _Builder().convert(module)
    return SyntaxTree(root=root, source_hash=source_hash, py_module=module)


def unparse(tree: SyntaxTree) -> str:
    """Render a tree back to source text; parse(unparse(t)) == t structurally."""
    try:
        return ast.unparse(tree.py_module)
    except Exception as exc:  # pragma: no cover - defensive
        raise MalformedTree(str(exc)) from exc


def preorder(tree: SyntaxTree):
    """Depth-first pre-order node sequence: parent first, children left to right."""
    stack = [tree.root]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children))


def leaves(tree: SyntaxTree):
    return [n for n in preorder(tree) if n.is_leaf]
