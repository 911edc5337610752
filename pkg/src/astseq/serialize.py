"""Turn canonical serialized tree text back into a stdlib AST.

The serialized form (``Module(body=[Assign(targets=[Name(id='x',...``) is
itself a valid Python expression over AST constructor calls, so it can be
parsed with ``ast.parse`` and interpreted structurally.  Nothing is ever
executed; a malformed string raises MalformedSerialization.
"""

from __future__ import annotations

import ast

from .errors import MalformedSerialization

# Constructors that may appear in serialized text.  Built once from the ast
# module itself so the set tracks the running grammar.
_ALLOWED = {
    name: obj
    for name, obj in vars(ast).items()
    if isinstance(obj, type) and issubclass(obj, ast.AST)
}


def parse_serialized(text: str) -> ast.Module:
    """Parse serialized tree text into an ast.Module.

    Raises MalformedSerialization when the text is not a valid serialized
    tree (unbalanced construct, unknown constructor, wrong field set).
    """
    try:
        expr = ast.parse(text, mode="eval")
    except (SyntaxError, ValueError, MemoryError, RecursionError) as exc:
        pos = getattr(exc, "offset", None)
        raise MalformedSerialization(f"not parseable as a serialized tree: {exc}", pos) from exc
    node = _build(expr.body)
    if not isinstance(node, ast.Module):
        raise MalformedSerialization("serialized tree does not start with a module constructor")
    ast.fix_missing_locations(node)
    return node


def _build(call) -> ast.AST:
    if not isinstance(call, ast.Call):
        raise MalformedSerialization(
            f"expected a constructor call, found {type(call).__name__}",
            getattr(call, "col_offset", None),
        )
    if not isinstance(call.func, ast.Name) or call.func.id not in _ALLOWED:
        raise MalformedSerialization("unknown constructor", call.col_offset)
    cls = _ALLOWED[call.func.id]
    if call.args:
        raise MalformedSerialization(
            f"positional arguments in {call.func.id} constructor", call.col_offset
        )
    fields = {}
    for kw in call.keywords:
        if kw.arg is None:
            raise MalformedSerialization("** in constructor", call.col_offset)
        fields[kw.arg] = _value(kw.value)
    if set(fields) != set(cls._fields):
        raise MalformedSerialization(
            f"{call.func.id} fields {sorted(fields)} != expected {sorted(cls._fields)}",
            call.col_offset,
        )
    return cls(**fields)


def _value(node):
    if isinstance(node, ast.Call):
        return _build(node)
    if isinstance(node, ast.List):
        return [_value(item) for item in node.elts]
    if isinstance(node, ast.Constant):
        return node.value
    # numeric leaf content may glue into signed or complex literal forms
    try:
        return ast.literal_eval(node)
    except (ValueError, TypeError, SyntaxError, MemoryError) as exc:
        raise MalformedSerialization(
            f"unsupported field value {ast.dump(node)[:80]}",
            getattr(node, "col_offset", None),
        ) from exc
