"""Run reference solutions in an isolated interpreter process.

Inputs are passed on stdin as one literal per line; the program prints one
literal per output slot.  Wall-clock, address-space and output-size limits
are enforced; failures are recorded per run, never raised.
"""

from __future__ import annotations

import ast
import os
import subprocess
import sys
import tempfile
from dataclasses import dataclass

OK = "ok"
TIMEOUT = "timeout"
CRASH = "crash"
OUTPUT_TOO_LARGE = "output_too_large"

INTERPRETER_ENV_VAR = "ASTSEQ_PYTHON"

# applies the address-space limit inside the child, then runs the program
_LIMIT_SHIM = (
    "import resource, runpy, sys\n"
    "resource.setrlimit(resource.RLIMIT_AS, (int(sys.argv[1]), int(sys.argv[1])))\n"
    "del sys.argv[1]\n"
    "runpy.run_path(sys.argv[1], run_name='__main__')\n"
)


def default_interpreter() -> tuple[str, ...]:
    cmd = os.environ.get(INTERPRETER_ENV_VAR)
    if cmd:
        return tuple(cmd.split())
    return (sys.executable,)


@dataclass(frozen=True)
class RunnerConfig:
    interpreter: tuple[str, ...] = ()
    time_limit: float = 5.0
    memory_limit_mb: int = 512
    max_output_bytes: int = 1_000_000
    skip_site: bool = True  # pass -S; reference solutions are stdlib-only

    def __post_init__(self):
        if self.time_limit <= 0 or self.memory_limit_mb <= 0 or self.max_output_bytes <= 0:
            raise ValueError("runner limits must be strictly positive")

    def command(self) -> tuple[str, ...]:
        return self.interpreter or default_interpreter()


@dataclass(frozen=True)
class RunResult:
    status: str
    outputs: tuple | None  # parsed literals, one per stdout line
    stdout: str = ""
    stderr: str = ""
    returncode: int | None = None

    @property
    def ok(self) -> bool:
        return self.status == OK


def run_reference(program: str, input_values, cfg: RunnerConfig | None = None) -> RunResult:
    """Execute a reference program on one input tuple."""
    cfg = cfg or RunnerConfig()
    stdin_text = "".join(repr(v) + "\n" for v in input_values)
    with tempfile.TemporaryDirectory(prefix="astseq-run-") as workdir:
        path = os.path.join(workdir, "solution.py")
        with open(path, "w", encoding="utf-8") as f:
            f.write(program)
        cmd = [
            *cfg.command(),
            "-I",
            *(["-S"] if cfg.skip_site else []),
            "-c",
            _LIMIT_SHIM,
            str(cfg.memory_limit_mb * 1024 * 1024),
            path,
        ]
        try:
            proc = subprocess.run(
                cmd,
                input=stdin_text,
                capture_output=True,
                text=True,
                timeout=cfg.time_limit,
                cwd=workdir,
            )
        except subprocess.TimeoutExpired as exc:
            return RunResult(TIMEOUT, None, stdout=_safe_text(exc.stdout), stderr=_safe_text(exc.stderr))
    if len(proc.stdout.encode("utf-8", "replace")) > cfg.max_output_bytes:
        return RunResult(OUTPUT_TOO_LARGE, None, stderr=proc.stderr, returncode=proc.returncode)
    if proc.returncode != 0:
        return RunResult(CRASH, None, stdout=proc.stdout, stderr=proc.stderr, returncode=proc.returncode)
    outputs = []
    for line in proc.stdout.splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            outputs.append(ast.literal_eval(line))
        except (ValueError, SyntaxError):
            outputs.append(line)
    return RunResult(OK, tuple(outputs), stdout=proc.stdout, stderr=proc.stderr, returncode=0)


def _safe_text(data) -> str:
    if data is None:
        return ""
    if isinstance(data, bytes):
        return data.decode("utf-8", "replace")
    return data
