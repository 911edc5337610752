"""n@k evaluation: generate k candidates, filter on public tests, submit the
best n, score against hidden tests; also reports the syntax-error-free rate."""

from __future__ import annotations

import ast
import subprocess
import sys
import tempfile
from dataclasses import dataclass

from .generate import Candidate


def run_candidate(source: str, inputs, time_limit: float = 5.0):
    """Run a candidate program on one input tuple; one literal per stdin
    line in, one literal per stdout line out; None on any failure."""
    with tempfile.NamedTemporaryFile("w", suffix=".py", delete=False) as f:
        f.write(source)
        path = f.name
    stdin_text = "".join(repr(v) + "\n" for v in inputs)
    try:
        proc = subprocess.run(
            [sys.executable, "-I", "-S", path],
            input=stdin_text,
            capture_output=True,
            text=True,
            timeout=time_limit,
        )
    except subprocess.TimeoutExpired:
        return None
    if proc.returncode != 0:
        return None
    outputs = []
    for line in proc.stdout.splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            outputs.append(ast.literal_eval(line))
        except (ValueError, SyntaxError):
            outputs.append(line)
    return tuple(outputs)


def passes_tests(source: str, tests, time_limit: float = 5.0) -> bool:
    return all(run_candidate(source, inputs, time_limit) == tuple(outputs) for inputs, outputs in tests)


@dataclass(frozen=True)
class NkResult:
    solved_fraction: float
    syntax_error_free_rate: float
    n_problems: int


def evaluate_nk(candidates_per_problem: list[list[Candidate]],
                tests_per_problem: list[dict], n: int, k: int,
                time_limit: float = 5.0) -> NkResult:
    """candidates_per_problem[i]: up to k candidates; tests_per_problem[i]:
    {"public": [(inputs, outputs), ...], "hidden": [...]}.

    A problem counts as solved when at least one of the n public-test-filtered
    submissions passes all hidden tests.
    """
    n_solved = 0
    n_candidates = 0
    n_decoded = 0
    for candidates, tests in zip(candidates_per_problem, tests_per_problem):
        candidates = candidates[:k]
        n_candidates += len(candidates)
        n_decoded += sum(1 for c in candidates if c.ok)
        filtered = [
            c for c in candidates if c.ok and passes_tests(c.source, tests.get("public", ()), time_limit)
        ]
        submitted = filtered[:n]
        if any(passes_tests(c.source, tests.get("hidden", ()), time_limit) for c in submitted):
            n_solved += 1
    total = len(candidates_per_problem)
    return NkResult(
        solved_fraction=n_solved / total if total else 0.0,
        syntax_error_free_rate=n_decoded / n_candidates if n_candidates else 0.0,
        n_problems=total,
    )
