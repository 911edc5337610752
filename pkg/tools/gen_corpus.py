#!/usr/bin/env python3
"""Generate the pinned desk corpus: small, varied, parseable Python files.

Run once with the default seed; the output under tests/data/corpus is
committed so every suite run sees identical bytes.  Files mimic short
solution-style programs: functions, loops, comprehensions, classes, string
handling, stdin parsing, and a long tail of structural variety.
"""

import argparse
import ast
import random
from pathlib import Path

NOUNS = """count total value item data result index score weight size length
buffer queue stack node edge graph grid line word text char digit number
limit target answer best current left right start end step depth width
height row col cell key price cost rate amount group batch token symbol
entry record field label state move turn round board mask bit flag pair
chunk block slot rank level tier seed case test trial phase stage
""".split()

VERBS = """get find count build make parse check solve compute update merge
split apply process scan read load reset run evaluate calc collect fetch
pack unpack encode decode walk visit search trace emit push pop shift
rotate flip swap clamp wrap score rank settle absorb
""".split()

ADJS = """max min new old next prev first last mean base temp raw final
unique valid lower upper inner outer partial global local mid best worst
sorted fixed extra spare dual
""".split()

MODULES = [
    ("math", ["sqrt", "floor", "ceil", "gcd", "pi", "inf", "log2", "factorial"]),
    ("sys", ["stdin", "maxsize", "argv"]),
    ("collections", ["Counter", "defaultdict", "deque"]),
    ("itertools", ["permutations", "combinations", "accumulate", "product"]),
    ("heapq", ["heappush", "heappop", "heapify"]),
    ("bisect", ["bisect_left", "bisect_right", "insort"]),
    ("functools", ["lru_cache", "reduce"]),
    ("string", ["ascii_lowercase", "digits"]),
]

BUILTCALLS = ["len", "sum", "min", "max", "abs", "sorted", "set", "list", "range",
              "enumerate", "zip", "map", "str", "int", "reversed", "tuple", "any", "all"]

CMPS = ["<", ">", "<=", ">=", "==", "!="]
BINOPS = ["+", "-", "*", "//", "%", "|", "^", "&"]
WORDS = ["yes", "no", "draw", "odd", "even", "left", "right", "up", "down",
         "alice", "bob", "red", "blue", "ok", "fail", "abc", "xyz", "start", "end"]


class Gen:
    def __init__(self, rng):
        self.rng = rng
        self.names = []
        self.funcs = []

    def ident(self):
        r = self.rng
        style = r.randrange(5)
        if style == 0:
            name = f"{r.choice(ADJS)}_{r.choice(NOUNS)}"
        elif style == 1:
            name = f"{r.choice(VERBS)}_{r.choice(NOUNS)}"
        elif style == 2:
            name = f"{r.choice(NOUNS)}_{r.choice(NOUNS)}"
        elif style == 3:
            name = r.choice(NOUNS) + ("s" if r.random() < 0.5 else "")
        else:
            name = r.choice("abcdefghijklmnopqrstuvwxyz")
        return name

    def fresh(self):
        name = self.ident()
        while name in self.names:
            name += self.rng.choice("abcdxyz")
        self.names.append(name)
        return name

    def known(self):
        if self.names:
            return self.rng.choice(self.names)
        return self.number()

    def number(self):
        r = self.rng
        roll = r.random()
        if roll < 0.62:
            return str(r.randrange(10))
        if roll < 0.85:
            return str(r.randrange(10, 200))
        if roll < 0.92:
            return r.choice(["0.1", "0.5", "0.2", "0.0001"])
        if roll < 0.97:
            return repr(round(r.uniform(0.01, 99.9), r.randrange(1, 3)))
        return str(10 ** r.randrange(4, 10))

    def string(self):
        r = self.rng
        roll = r.random()
        if roll < 0.5:
            return repr(r.choice(WORDS))
        if roll < 0.7:
            return repr(" ".join(r.choice(WORDS) for _ in range(r.randrange(2, 4))))
        if roll < 0.85:
            return repr(r.choice([" ", "", ",", ":", "-", "\n", "#", "*"]))
        return repr("".join(r.choice("abcxyz01 _") for _ in range(r.randrange(1, 8))))

    def atom(self, depth=3):
        r = self.rng
        roll = r.random()
        if roll < 0.52 or depth >= 3:
            return self.known() if roll < 0.75 else (self.number() if roll < 0.95 else self.string())
        if roll < 0.70:
            return self.number()
        if roll < 0.745:
            return self.string()
        if roll < 0.80:
            return r.choice(["True", "False", "None"])
        if roll < 0.88:
            items = ", ".join(self.expr(depth + 1) for _ in range(r.randrange(0, 4)))
            return f"[{items}]"
        if roll < 0.92:
            pairs = ", ".join(f"{self.string()}: {self.expr(depth + 1)}" for _ in range(r.randrange(1, 3)))
            return "{" + pairs + "}"
        if roll < 0.96:
            items = ", ".join(self.expr(depth + 1) for _ in range(2))
            return f"({items})"
        return f"{self.known()}[{self.expr(depth + 1)}]"

    def call(self, depth):
        r = self.rng
        roll = r.random()
        if self.funcs and roll < 0.3:
            fn = r.choice(self.funcs)
        elif roll < 0.4:
            fn = r.choice(["math.sqrt", "math.gcd", "math.floor", "heapq.heappush", "sys.stdin.readline"])
        else:
            fn = r.choice(BUILTCALLS)
        n_args = r.randrange(1, 3)
        args = [self.expr(depth + 1) for _ in range(n_args)]
        if r.random() < 0.15:
            args.append(f"{self.rng.choice(['key', 'reverse', 'default', 'start'])}={self.expr(depth + 1)}")
        return f"{fn}({', '.join(args)})"

    def expr(self, depth=0):
        r = self.rng
        if depth >= 3:
            return self.atom(depth)
        roll = r.random()
        if roll < 0.33:
            return self.atom(depth)
        if roll < 0.46:
            return f"{self.expr(depth + 1)} {r.choice(BINOPS)} {self.expr(depth + 1)}"
        if roll < 0.66:
            return self.call(depth)
        if roll < 0.70:
            return f"{self.known()}.{r.choice(['append', 'get', 'add', 'pop', 'split', 'join', 'count', 'index'])}({self.expr(depth + 1)})"
        if roll < 0.78:
            return f"{self.expr(depth + 1)} {r.choice(CMPS)} {self.expr(depth + 1)}"
        if roll < 0.84:
            var = self.fresh()
            return f"[{self.expr(depth + 1)} for {var} in {self.call(depth + 1)}]"
        if roll < 0.88:
            return f"{self.expr(depth + 1)} if {self.expr(depth + 1)} else {self.expr(depth + 1)}"
        if roll < 0.92:
            return f"{self.known()}[{self.expr(depth + 1)}:{self.expr(depth + 1)}]"
        if roll < 0.96:
            return f"f\"{r.choice(WORDS)} {{{self.known()}}}\""
        return f"lambda {self.fresh()}: {self.expr(depth + 1)}"

    def condition(self):
        return f"{self.expr(1)} {self.rng.choice(CMPS)} {self.expr(1)}"

    # -- statements ------------------------------------------------------
    def stmt_assign(self, lines, indent):
        r = self.rng
        roll = r.random()
        if roll < 0.6:
            lines.append(f"{'    ' * indent}{self.fresh()} = {self.expr()}")
        elif roll < 0.8:
            lines.append(f"{'    ' * indent}{self.known()} {r.choice(['+=', '-=', '*='])} {self.expr(1)}")
        elif roll < 0.9:
            a, b = self.fresh(), self.fresh()
            lines.append(f"{'    ' * indent}{a}, {b} = {self.expr(1)}, {self.expr(1)}")
        else:
            lines.append(f"{'    ' * indent}{self.known()}[{self.expr(1)}] = {self.expr(1)}")

    def stmt_if(self, lines, indent, depth):
        lines.append(f"{'    ' * indent}if {self.condition()}:")
        self.block(lines, indent + 1, depth + 1, 1, 2)
        r = self.rng.random()
        if r < 0.3:
            lines.append(f"{'    ' * indent}elif {self.condition()}:")
            self.block(lines, indent + 1, depth + 1, 1, 2)
        if r < 0.55:
            lines.append(f"{'    ' * indent}else:")
            self.block(lines, indent + 1, depth + 1, 1, 2)

    def stmt_for(self, lines, indent, depth):
        var = self.fresh()
        r = self.rng
        if r.random() < 0.5:
            it = f"range({self.expr(1)})"
        elif r.random() < 0.5:
            it = f"enumerate({self.known()})"
            var = f"{var}, {self.fresh()}"
        else:
            it = self.known()
        lines.append(f"{'    ' * indent}for {var} in {it}:")
        self.block(lines, indent + 1, depth + 1, 1, 3)
        if r.random() < 0.1:
            lines.append(f"{'    ' * indent}else:")
            self.block(lines, indent + 1, depth + 1, 1, 1)

    def stmt_while(self, lines, indent, depth):
        lines.append(f"{'    ' * indent}while {self.condition()}:")
        body = []
        self.block(body, indent + 1, depth + 1, 1, 2)
        body.append(f"{'    ' * (indent + 1)}{self.rng.choice(['break', 'continue'])}")
        self.rng.shuffle(body)
        lines.extend(body)

    def stmt_try(self, lines, indent, depth):
        lines.append(f"{'    ' * indent}try:")
        self.block(lines, indent + 1, depth + 1, 1, 2)
        exc = self.rng.choice(["ValueError", "IndexError", "KeyError", "ZeroDivisionError"])
        lines.append(f"{'    ' * indent}except {exc}:")
        self.block(lines, indent + 1, depth + 1, 1, 1)

    def stmt_with(self, lines, indent, depth):
        handle = self.fresh()
        lines.append(f"{'    ' * indent}with open({self.string()}) as {handle}:")
        self.block(lines, indent + 1, depth + 1, 1, 2)

    def stmt_match(self, lines, indent, depth):
        lines.append(f"{'    ' * indent}match {self.known()}:")
        for _ in range(self.rng.randrange(1, 3)):
            lines.append(f"{'    ' * (indent + 1)}case {self.number()}:")
            self.block(lines, indent + 2, depth + 2, 1, 1)
        lines.append(f"{'    ' * (indent + 1)}case _:")
        self.block(lines, indent + 2, depth + 2, 1, 1)

    def stmt_call(self, lines, indent):
        if self.rng.random() < 0.6:
            lines.append(f"{'    ' * indent}print({self.expr(1)})")
        else:
            lines.append(f"{'    ' * indent}{self.known()}.append({self.expr(1)})")

    def block(self, lines, indent, depth, lo, hi):
        for _ in range(self.rng.randrange(lo, hi + 1)):
            self.statement(lines, indent, depth)

    def statement(self, lines, indent, depth):
        r = self.rng
        if depth >= 3:
            self.stmt_assign(lines, indent)
            return
        roll = r.random()
        if roll < 0.42:
            self.stmt_assign(lines, indent)
        elif roll < 0.56:
            self.stmt_if(lines, indent, depth)
        elif roll < 0.72:
            self.stmt_for(lines, indent, depth)
        elif roll < 0.78:
            self.stmt_while(lines, indent, depth)
        elif roll < 0.84:
            self.stmt_call(lines, indent)
        elif roll < 0.89:
            self.stmt_try(lines, indent, depth)
        elif roll < 0.93:
            self.stmt_with(lines, indent, depth)
        elif roll < 0.96 and indent == 0:
            self.stmt_match(lines, indent, depth)
        else:
            self.stmt_assign(lines, indent)

    def funcdef(self, lines):
        r = self.rng
        name = f"{r.choice(VERBS)}_{r.choice(NOUNS)}"
        while name in self.funcs:
            name += r.choice("xyz")
        self.funcs.append(name)
        args = [self.fresh() for _ in range(r.randrange(1, 4))]
        if r.random() < 0.25:
            args[-1] += f"={self.number()}"
        deco = ""
        if r.random() < 0.08:
            deco = f"{'@lru_cache(maxsize=None)'}\n"
        lines.append(f"{deco}def {name}({', '.join(args)}):")
        if r.random() < 0.25:
            lines.append(f'    """{r.choice(VERBS).capitalize()} the {r.choice(NOUNS)} {r.choice(NOUNS)}."""')
        self.block(lines, 1, 1, 2, 5)
        lines.append(f"    return {self.expr(1)}")

    def classdef(self, lines):
        r = self.rng
        cname = "".join(w.capitalize() for w in [r.choice(ADJS), r.choice(NOUNS)])
        lines.append(f"class {cname}:")
        lines.append(f"    def __init__(self, {self.fresh()}):")
        attr = r.choice(NOUNS)
        lines.append(f"        self.{attr} = {self.expr(1)}")
        lines.append(f"        self.{r.choice(NOUNS)}_log = []")
        mname = r.choice(VERBS)
        lines.append(f"    def {mname}(self, {self.fresh()}):")
        body = []
        self.block(body, 2, 2, 1, 2)
        lines.extend(body)
        lines.append(f"        return self.{attr}")

    def program(self):
        r = self.rng
        lines = []
        # imports
        for mod, members in r.sample(MODULES, r.randrange(0, 3)):
            if r.random() < 0.5:
                lines.append(f"import {mod}")
            else:
                lines.append(f"from {mod} import {', '.join(r.sample(members, r.randrange(1, min(3, len(members)) + 1)))}")
        if r.random() < 0.12:
            lines.append('"""Solve the {} {} task."""'.format(r.choice(ADJS), r.choice(NOUNS)))
            lines.insert(0, lines.pop())  # docstring first
        for _ in range(r.randrange(1, 3)):
            self.stmt_assign(lines, 0)
        n_funcs = r.randrange(0, 4)
        for _ in range(n_funcs):
            self.funcdef(lines)
        if r.random() < 0.18:
            self.classdef(lines)
        self.block(lines, 0, 0, 2, 6)
        if r.random() < 0.3:
            lines.append(f"print({self.expr(1)})")
        return "\n".join(lines) + "\n"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="tests/data/corpus")
    ap.add_argument("--count", type=int, default=520)
    ap.add_argument("--seed", type=int, default=20240117)
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(args.seed)
    written = 0
    attempt = 0
    while written < args.count:
        attempt += 1
        gen = Gen(random.Random(rng.randrange(2**32)))
        source = gen.program()
        if any(len(line) > 110 for line in source.splitlines()) or len(source.splitlines()) > 70:
            continue
        try:
            ast.parse(source)
        except SyntaxError:
            continue
        (out / f"file_{written:04d}.py").write_text(source, "utf-8")
        written += 1
    print(f"wrote {written} files to {out} ({attempt} attempts)")


if __name__ == "__main__":
    main()
