"""Tree-level transforms applied before encoding: docstring removal and
replacement of user-defined names with pool candidates.

Renaming is conservative: imported names, attribute chains, builtins, and
anything not provably user-defined stay untouched.  Files where renaming
cannot be proven safe (star imports, dynamic name access) keep their names.
"""

from __future__ import annotations

import ast
import copy
from dataclasses import dataclass, field
from importlib import resources

from . import tree
from .errors import PoolExhausted

_BUILTIN_CACHE = None

# dynamic-namespace accessors that make renaming unsound for the whole file
_DYNAMIC_NAMES = {"eval", "exec", "globals", "locals", "vars"}


def load_builtin_names() -> frozenset[str]:
    """The pinned list of ~600 common builtin functions, keywords and methods."""
    global _BUILTIN_CACHE
    if _BUILTIN_CACHE is None:
        text = resources.files("astseq.data").joinpath("builtin_names.txt").read_text("utf-8")
        _BUILTIN_CACHE = frozenset(line for line in text.splitlines() if line)
    return _BUILTIN_CACHE


@dataclass(frozen=True)
class NamePool:
    """Ordered candidate names per category, e.g. var_1..var_K."""

    size: int = 64
    prefixes: tuple[tuple[str, str], ...] = (
        ("var", "var_"),
        ("func", "func_"),
        ("class", "class_"),
        ("arg", "arg_"),
    )

    def candidates(self, category: str) -> list[str]:
        prefix = dict(self.prefixes)[category]
        return [f"{prefix}{i}" for i in range(1, self.size + 1)]


def strip_docstrings(t: tree.SyntaxTree) -> tree.SyntaxTree:
    """Remove docstring expression statements; empty bodies get a pass."""
    module = copy.deepcopy(t.py_module)

    class _Strip(ast.NodeTransformer):
        def _fix_body(self, node):
            body = node.body
            if (
                body
                and isinstance(body[0], ast.Expr)
                and isinstance(body[0].value, ast.Constant)
                and isinstance(body[0].value.value, str)
            ):
                body = body[1:]
            if not body and not isinstance(node, ast.Module):
                body = [ast.Pass()]
            node.body = body
            return node

        def visit_Module(self, node):
            self.generic_visit(node)
            return self._fix_body(node)

        def visit_FunctionDef(self, node):
            self.generic_visit(node)
            return self._fix_body(node)

        def visit_AsyncFunctionDef(self, node):
            self.generic_visit(node)
            return self._fix_body(node)

        def visit_ClassDef(self, node):
            self.generic_visit(node)
            return self._fix_body(node)

    module = _Strip().visit(module)
    ast.fix_missing_locations(module)
    return tree.from_module(module, t.source_hash)


@dataclass
class _Scan:
    """Single pass over the module collecting binding and usage facts."""

    import_bound: set[str] = field(default_factory=set)
    has_star_import: bool = False
    uses_dynamic_names: bool = False
    # category by first-seen binding kind, strongest first: class > func > arg > var
    binding_kind: dict[str, str] = field(default_factory=dict)
    class_body_bound: set[str] = field(default_factory=set)
    unresolved_kwargs: set[str] = field(default_factory=set)
    occurrence_order: list[str] = field(default_factory=list)
    all_names: set[str] = field(default_factory=set)

    _RANK = {"class": 3, "func": 2, "arg": 1, "var": 0}

    def bind(self, name, kind):
        old = self.binding_kind.get(name)
        if old is None or self._RANK[kind] > self._RANK[old]:
            self.binding_kind[name] = kind

    def saw(self, name):
        self.all_names.add(name)
        self.occurrence_order.append(name)


def _scan(module: ast.Module) -> _Scan:
    scan = _Scan()

    def visit(node, in_class_body):
        if isinstance(node, (ast.Import, ast.ImportFrom)):
            for a in node.names:
                if a.name == "*":
                    scan.has_star_import = True
                elif a.asname:
                    scan.import_bound.add(a.asname)
                elif isinstance(node, ast.Import):
                    scan.import_bound.add(a.name.split(".")[0])
                else:
                    scan.import_bound.add(a.name)
            return
        if isinstance(node, (ast.FunctionDef, ast.AsyncFunctionDef)):
            scan.saw(node.name)
            if in_class_body:
                scan.class_body_bound.add(node.name)
            else:
                scan.bind(node.name, "func")
            for child in ast.iter_child_nodes(node):
                visit(child, False)
            return
        if isinstance(node, ast.ClassDef):
            scan.saw(node.name)
            if in_class_body:
                scan.class_body_bound.add(node.name)
            else:
                scan.bind(node.name, "class")
            for dec in node.decorator_list:
                visit(dec, in_class_body)
            for base in node.bases + node.keywords:
                visit(base, in_class_body)
            for child in node.body:
                visit(child, True)
            return
        if isinstance(node, ast.Name):
            scan.saw(node.id)
            if node.id in _DYNAMIC_NAMES:
                scan.uses_dynamic_names = True
            if isinstance(node.ctx, (ast.Store, ast.Del)):
                if in_class_body:
                    scan.class_body_bound.add(node.id)
                else:
                    scan.bind(node.id, "var")
        elif isinstance(node, ast.arg):
            scan.saw(node.arg)
            scan.bind(node.arg, "arg")
        elif isinstance(node, (ast.Global, ast.Nonlocal)):
            for name in node.names:
                scan.saw(name)
                scan.bind(name, "var")
        elif isinstance(node, ast.ExceptHandler) and node.name:
            scan.saw(node.name)
            scan.bind(node.name, "var")
        elif isinstance(node, (ast.MatchAs, ast.MatchStar)) and node.name:
            scan.saw(node.name)
            scan.bind(node.name, "var")
        elif isinstance(node, ast.MatchMapping) and node.rest:
            scan.saw(node.rest)
            scan.bind(node.rest, "var")
        elif isinstance(node, ast.Call):
            resolved = isinstance(node.func, ast.Name)
            for kw in node.keywords:
                if kw.arg is not None and not resolved:
                    scan.unresolved_kwargs.add(kw.arg)
        elif isinstance(node, ast.Attribute):
            pass  # attribute names are never renamed
        for child in ast.iter_child_nodes(node):
            visit(child, in_class_body)

    visit(module, False)
    return scan


def replace_names(
    t: tree.SyntaxTree,
    pool: NamePool | None = None,
    builtin_names: frozenset[str] | None = None,
) -> tuple[tree.SyntaxTree, dict[str, str]]:
    """Rename user-defined names to pool candidates, consistently per file.

    Returns the transformed tree and the original -> pool-name map (a
    bijection on the file's renamed names).  Raises PoolExhausted when a
    category holds more distinct names than the pool.
    """
    pool = pool or NamePool()
    builtins_set = builtin_names if builtin_names is not None else load_builtin_names()
    module = copy.deepcopy(t.py_module)
    scan = _scan(module)

    if scan.has_star_import or scan.uses_dynamic_names:
        return tree.from_module(module, t.source_hash), {}

    renameable = {}
    for name, kind in scan.binding_kind.items():
        if name in builtins_set or name in scan.import_bound:
            continue
        if name in scan.class_body_bound:
            continue  # reachable as an attribute; renaming would break access
        if kind == "arg" and name in scan.unresolved_kwargs:
            continue  # passed as keyword to a call we cannot resolve
        renameable[name] = kind

    # pool candidates must not collide with names kept in the file
    kept = (scan.all_names | scan.import_bound) - set(renameable)
    mapping: dict[str, str] = {}
    counters = {cat: iter([c for c in pool.candidates(cat) if c not in kept]) for cat in ("var", "func", "class", "arg")}
    for name in scan.occurrence_order:
        if name in mapping or name not in renameable:
            continue
        cat = renameable[name]
        try:
            mapping[name] = next(counters[cat])
        except StopIteration:
            raise PoolExhausted(f"more than {pool.size} distinct {cat} names") from None

    _apply_mapping(module, mapping)
    ast.fix_missing_locations(module)
    return tree.from_module(module, t.source_hash), mapping


def _apply_mapping(module, mapping):
    class _Rename(ast.NodeTransformer):
        def visit_Name(self, node):
            node.id = mapping.get(node.id, node.id)
            return node

        def visit_FunctionDef(self, node):
            self.generic_visit(node)
            node.name = mapping.get(node.name, node.name)
            return node

        visit_AsyncFunctionDef = visit_FunctionDef

        def visit_ClassDef(self, node):
            self.generic_visit(node)
            node.name = mapping.get(node.name, node.name)
            return node

        def visit_arg(self, node):
            self.generic_visit(node)
            node.arg = mapping.get(node.arg, node.arg)
            return node

        def visit_Global(self, node):
            node.names = [mapping.get(n, n) for n in node.names]
            return node

        visit_Nonlocal = visit_Global

        def visit_ExceptHandler(self, node):
            self.generic_visit(node)
            if node.name:
                node.name = mapping.get(node.name, node.name)
            return node

        def visit_MatchAs(self, node):
            self.generic_visit(node)
            if node.name:
                node.name = mapping.get(node.name, node.name)
            return node

        visit_MatchStar = visit_MatchAs

        def visit_MatchMapping(self, node):
            self.generic_visit(node)
            if node.rest:
                node.rest = mapping.get(node.rest, node.rest)
            return node

        def visit_Call(self, node):
            self.generic_visit(node)
            if isinstance(node.func, ast.Name):
                for kw in node.keywords:
                    if kw.arg is not None:
                        kw.arg = mapping.get(kw.arg, kw.arg)
            return node

    _Rename().visit(module)
