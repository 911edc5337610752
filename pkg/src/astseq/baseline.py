"""Whitespace+punctuation subword baseline used for length comparisons.

A fixed stand-in for a learned natural-language tokenizer: whitespace is
dropped, punctuation splits per character, identifiers split at case and
underscore boundaries with long residues chunked, digit runs chunked.
"""

from __future__ import annotations

import re

_TOKEN_RE = re.compile(r"[A-Za-z]+|[0-9]+|[^\sA-Za-z0-9]")
_CAMEL_RE = re.compile(r"[A-Z]+(?![a-z])|[A-Z]?[a-z]+")

_ALPHA_CHUNK = 8
_DIGIT_CHUNK = 3


def subword_tokens(text: str) -> list[str]:
    tokens: list[str] = []
    for m in _TOKEN_RE.finditer(text):
        s = m.group()
        if s[0].isdigit():
            tokens.extend(s[i : i + _DIGIT_CHUNK] for i in range(0, len(s), _DIGIT_CHUNK))
        elif s[0].isalpha():
            for piece in _CAMEL_RE.findall(s) or [s]:
                tokens.extend(piece[i : i + _ALPHA_CHUNK] for i in range(0, len(piece), _ALPHA_CHUNK))
        else:
            tokens.append(s)
    return tokens


def subword_length(text: str) -> int:
    return len(subword_tokens(text))


def raw_length(text: str) -> int:
    """Character count; the crudest baseline, everything is a token."""
    return len(text)
