"""Reconstruct source code from the layout frame and accessory subsequences."""

from __future__ import annotations

import ast
from dataclasses import dataclass

from . import tree
from .encode import EncodeOptions, encode_tree, transformed_tree
from .errors import AstseqError, LengthMismatch, MalformedSerialization, UnsupportedConstruct
from .serialize import parse_serialized


def _texts(tokens):
    return [getattr(t, "text", t) for t in tokens]


def decode(frames, accessories, verify: bool = True) -> str:
    """Interleave frames/accessories, parse the serialization, unparse.

    Accepts token objects or plain strings.  With ``verify`` (default) the
    output is re-parsed and its serialization compared against the glued
    input, so any hallucinated-but-parseable content is still rejected.
    """
    frames = _texts(frames)
    accessories = _texts(accessories)
    if len(frames) != len(accessories) + 1:
        raise LengthMismatch(f"{len(frames)} frames but {len(accessories)} + 1 accessories")
    parts = []
    for f, a in zip(frames, accessories):
        parts.append(f)
        parts.append(a)
    parts.append(frames[-1])
    glued = "".join(parts)

    module = parse_serialized(glued)
    try:
        source = ast.unparse(module)
    except Exception as exc:
        raise MalformedSerialization(f"serialized tree does not unparse: {exc}") from exc
    if verify:
        try:
            reparsed = tree.parse(source)
        except (SyntaxError, UnsupportedConstruct) as exc:
            raise MalformedSerialization(f"decoded source does not re-parse: {exc}") from exc
        if reparsed.serialized() != glued:
            raise MalformedSerialization("decoded source re-parses to a different tree")
    return source


@dataclass(frozen=True)
class RoundtripReport:
    ok: bool
    tree_equal: bool
    diagnostics: str = ""


def roundtrip_check(source: str, opts: EncodeOptions | None = None) -> RoundtripReport:
    """Parse -> encode -> decode -> compare; failures are reported, not thrown."""
    opts = opts or EncodeOptions()
    try:
        transformed = transformed_tree(source, opts)
        bundle = encode_tree(transformed, opts)
    except SyntaxError as exc:
        return RoundtripReport(False, False, f"SyntaxError: {exc}")
    except AstseqError as exc:
        return RoundtripReport(False, False, f"{type(exc).__name__}: {exc}")
    try:
        decoded = decode(bundle.frames, bundle.accessories)
    except AstseqError as exc:
        return RoundtripReport(False, False, f"decode failed: {type(exc).__name__}: {exc}")
    try:
        final = tree.parse(decoded)
    except (SyntaxError, AstseqError) as exc:
        return RoundtripReport(False, False, f"decoded source does not parse: {exc}")
    if final.root != transformed.root:
        return RoundtripReport(False, False, "decoded tree differs from transformed input tree")
    if len(bundle.frames) != len(bundle.accessories) + 1:
        return RoundtripReport(False, True, "length law violated")
    return RoundtripReport(True, True)
