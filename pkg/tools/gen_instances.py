#!/usr/bin/env python3
"""Write the pinned toy instances used by augmentation and model tests.

Each instance is a JSON file: description, reference solution (reads one
literal per input slot from stdin, prints one literal per output slot), and
seed I/O pairs whose outputs are produced by actually running the solution.
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from astseq.runner import RunnerConfig, run_reference  # noqa: E402

READ = "import sys, ast\nlines = [l for l in sys.stdin.read().splitlines() if l.strip()]\n"

INSTANCES = {
    "palindrome_number": {
        "description": "Given an integer, decide whether its decimal digits read the same forwards and backwards.",
        "solution": READ + (
            "n = ast.literal_eval(lines[0])\n"
            "text = str(n)\n"
            "print(repr(text == text[::-1]))\n"
        ),
        "inputs": [[121], [7], [45], [494], [33]],
    },
    "sum_list": {
        "description": "Print the sum of a list of integers.",
        "solution": READ + (
            "values = ast.literal_eval(lines[0])\n"
            "total = 0\n"
            "for v in values:\n"
            "    total += v\n"
            "print(repr(total))\n"
        ),
        "inputs": [[[1, 2, 3]], [[10, 0, 5, 5]], [[4]]],
    },
    "max_gap": {
        "description": "Print the largest difference between consecutive values after sorting the list.",
        "solution": READ + (
            "values = sorted(ast.literal_eval(lines[0]))\n"
            "best = 0\n"
            "for i in range(1, len(values)):\n"
            "    gap = values[i] - values[i - 1]\n"
            "    if gap > best:\n"
            "        best = gap\n"
            "print(repr(best))\n"
        ),
        "inputs": [[[1, 9, 4]], [[5, 5, 5, 5]], [[0, 100, 50, 75]]],
    },
    "reverse_string": {
        "description": "Print the input string reversed.",
        "solution": READ + (
            "text = ast.literal_eval(lines[0])\n"
            "print(repr(text[::-1]))\n"
        ),
        "inputs": [["abc"], ["racecar"], ["xy"]],
    },
    "is_sorted": {
        "description": "Decide whether the list of integers is already in non-decreasing order.",
        "solution": READ + (
            "values = ast.literal_eval(lines[0])\n"
            "ok = True\n"
            "for i in range(1, len(values)):\n"
            "    if values[i] < values[i - 1]:\n"
            "        ok = False\n"
            "        break\n"
            "print(repr(ok))\n"
        ),
        "inputs": [[[1, 2, 3]], [[3, 1, 2]], [[5, 5, 9]], [[9, 2]]],
    },
    "count_vowels": {
        "description": "Count the vowels in the input string.",
        "solution": READ + (
            "text = ast.literal_eval(lines[0])\n"
            "count = 0\n"
            "for ch in text:\n"
            "    if ch in 'aeiou':\n"
            "        count += 1\n"
            "print(repr(count))\n"
        ),
        "inputs": [["banana"], ["rhythm"], ["aeiou"]],
    },
    "has_duplicate": {
        "description": "Decide whether any value appears more than once in the list.",
        "solution": READ + (
            "values = ast.literal_eval(lines[0])\n"
            "print(repr(len(set(values)) != len(values)))\n"
        ),
        "inputs": [[[1, 2, 3, 1]], [[4, 5, 6]], [[7, 7]], [[0, 10, 20, 30]]],
    },
    "vector_sum": {
        "description": "The first value gives the vector length, the second is the vector; print the sum of its entries.",
        "solution": READ + (
            "n = ast.literal_eval(lines[0])\n"
            "values = ast.literal_eval(lines[1])\n"
            "assert len(values) == n\n"
            "print(repr(sum(values)))\n"
        ),
        "inputs": [[3, [1, 2, 3]], [1, [9]], [4, [2, 2, 2, 2]]],
    },
    "first_upper": {
        "description": "Print the input string with every word capitalised.",
        "solution": READ + (
            "text = ast.literal_eval(lines[0])\n"
            "print(repr(' '.join(w[:1].upper() + w[1:] for w in text.split(' '))))\n"
        ),
        "inputs": [["hello world"], ["a b c"], ["code"]],
    },
    "min_max_diff": {
        "description": "Print the difference between the largest and smallest value in the list.",
        "solution": READ + (
            "values = ast.literal_eval(lines[0])\n"
            "print(repr(max(values) - min(values)))\n"
        ),
        "inputs": [[[3, 8, 1]], [[10, 10]], [[0, 2, 4, 6, 100]]],
    },
}


def main():
    out = Path(__file__).resolve().parent.parent / "tests" / "data" / "instances"
    out.mkdir(parents=True, exist_ok=True)
    cfg = RunnerConfig(time_limit=10.0)
    for name, spec in INSTANCES.items():
        pairs = []
        for inputs in spec["inputs"]:
            result = run_reference(spec["solution"], inputs, cfg)
            if not result.ok:
                raise SystemExit(f"{name}: seed input {inputs!r} failed: {result.status} {result.stderr}")
            pairs.append({"inputs": inputs, "outputs": list(result.outputs)})
        obj = {"description": spec["description"], "solution": spec["solution"], "io_pairs": pairs}
        (out / f"{name}.json").write_text(json.dumps(obj, ensure_ascii=False, indent=1) + "\n", "utf-8")
        print(name, "->", [p["outputs"] for p in pairs])


if __name__ == "__main__":
    main()
