"""I/O augmentation: draw fresh inputs from a mixture of distribution-
controlled generators, execute the reference solution for outputs, and keep
boolean labels balanced.

Only the training side of a dataset is ever augmented; generation is pure
given a seed, and every emitted pair has been validated by actually running
the reference program.
"""

from __future__ import annotations

import random
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

from .errors import BudgetExhaustedWarning, SchemaMismatch
from .io_align import IOSample
from .runner import RunnerConfig, run_reference

UNIFORM = "uniform"
QUANTIZED_GAUSSIAN = "quantized_gaussian"
ALMOST_SORTED = "almost_sorted"
ALL_SAME = "all_same"
ALMOST_SAME = "almost_same"
LENGTH_CONTROLLED = "length_controlled"
STRING_UNIFORM = "string_uniform"

GENERATOR_KINDS = (
    UNIFORM,
    QUANTIZED_GAUSSIAN,
    ALMOST_SORTED,
    ALL_SAME,
    ALMOST_SAME,
    LENGTH_CONTROLLED,
    STRING_UNIFORM,
)

# slot kinds each generator can fill
_APPLICABLE = {
    UNIFORM: {"int", "bool", "list_int"},
    QUANTIZED_GAUSSIAN: {"int", "list_int"},
    ALMOST_SORTED: {"list_int"},
    ALL_SAME: {"list_int", "list_str"},
    ALMOST_SAME: {"list_int"},
    LENGTH_CONTROLLED: {"int"},  # an int slot controlling the following list slot
    STRING_UNIFORM: {"str", "list_str"},
}


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    weight: float
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if not 0 < self.weight <= 1:
            raise ValueError("generator weight must be in (0, 1]")
        frac = self.params.get("swap_fraction", 0.1)
        if not 0 <= frac <= 1:
            raise ValueError("swap_fraction must be in [0, 1]")


def default_mixture() -> list[GeneratorSpec]:
    return [
        GeneratorSpec(UNIFORM, 0.35),
        GeneratorSpec(QUANTIZED_GAUSSIAN, 0.20),
        GeneratorSpec(ALMOST_SORTED, 0.15),
        GeneratorSpec(ALL_SAME, 0.05),
        GeneratorSpec(ALMOST_SAME, 0.10),
        GeneratorSpec(LENGTH_CONTROLLED, 0.10),
        GeneratorSpec(STRING_UNIFORM, 0.05),
    ]


def validate_mixture(mixture) -> None:
    total = sum(g.weight for g in mixture)
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"mixture weights sum to {total}, expected 1")


@dataclass(frozen=True)
class SlotSchema:
    kind: str  # int | bool | float | str | list_int | list_str
    low: int = 0
    high: int = 100
    len_low: int = 0
    len_high: int = 10
    alphabet: str = "abcdefghijklmnopqrstuvwxyz"
    controls_next: bool = False  # value equals the length of the next slot


def infer_schema(seed_inputs: list[tuple]) -> list[SlotSchema]:
    """Estimate slot types and value ranges from the official seed inputs."""
    if not seed_inputs:
        raise SchemaMismatch("no seed inputs to infer a schema from")
    n_slots = len(seed_inputs[0])
    if any(len(t) != n_slots for t in seed_inputs):
        raise SchemaMismatch("seed inputs disagree on slot count")
    slots = []
    for i in range(n_slots):
        values = [t[i] for t in seed_inputs]
        slots.append(_infer_slot(values))
    for i in range(n_slots - 1):
        if slots[i].kind == "int" and slots[i + 1].kind.startswith("list"):
            if all(t[i] == len(t[i + 1]) for t in seed_inputs):
                slots[i] = replace(slots[i], controls_next=True)
    return slots


def _infer_slot(values) -> SlotSchema:
    first = values[0]
    if isinstance(first, bool):
        if not all(isinstance(v, bool) for v in values):
            raise SchemaMismatch("mixed slot types")
        return SlotSchema("bool")
    if isinstance(first, int):
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
            raise SchemaMismatch("mixed slot types")
        lo, hi = min(values), max(values)
        return SlotSchema("int", low=min(lo, 0), high=max(hi * 2, hi + 10))
    if isinstance(first, str):
        if not all(isinstance(v, str) for v in values):
            raise SchemaMismatch("mixed slot types")
        lens = [len(v) for v in values]
        chars = sorted({c for v in values for c in v}) or list("abc")
        return SlotSchema(
            "str",
            len_low=max(min(lens) // 2, 1),
            len_high=max(lens) * 2,
            alphabet="".join(chars),
        )
    if isinstance(first, (list, tuple)):
        items = [x for v in values for x in v]
        if not all(isinstance(v, (list, tuple)) for v in values):
            raise SchemaMismatch("mixed slot types")
        lens = [len(v) for v in values]
        len_low, len_high = max(min(lens), 1), max(max(lens) * 2, 2)
        if all(isinstance(x, int) and not isinstance(x, bool) for x in items) and items:
            lo, hi = min(items), max(items)
            return SlotSchema(
                "list_int", low=min(lo, 0), high=max(hi * 2, hi + 10), len_low=len_low, len_high=len_high
            )
        if all(isinstance(x, str) for x in items) and items:
            chars = sorted({c for x in items for c in x}) or list("abc")
            return SlotSchema("list_str", len_low=len_low, len_high=len_high, alphabet="".join(chars))
        raise SchemaMismatch(f"cannot infer element type for slot value {first!r}")
    raise SchemaMismatch(f"cannot infer a schema for slot value {first!r}")


def _gen_int(rng, gen: GeneratorSpec, slot: SlotSchema) -> int:
    low = gen.params.get("low", slot.low)
    high = gen.params.get("high", slot.high)
    if gen.kind == QUANTIZED_GAUSSIAN:
        mean = gen.params.get("mean", (low + high) / 2)
        std = gen.params.get("std", max((high - low) / 6, 1e-9))
        return min(max(round(rng.gauss(mean, std)), low), high)
    return rng.randint(low, high)


def _gen_int_list(rng, gen: GeneratorSpec, slot: SlotSchema, length: int) -> list[int]:
    low = gen.params.get("low", slot.low)
    high = gen.params.get("high", slot.high)
    if gen.kind == ALL_SAME:
        return [rng.randint(low, high)] * length
    if gen.kind == ALMOST_SAME:
        base = rng.randint(low, high)
        values = [base] * length
        n_exc = max(1, round(length * gen.params.get("exception_fraction", 0.1)))
        for idx in rng.sample(range(length), min(n_exc, length)):
            values[idx] = rng.randint(low, high)
        return values
    values = [_gen_int(rng, gen, slot) for _ in range(length)]
    if gen.kind == ALMOST_SORTED:
        values.sort()
        n_swaps = round(length * gen.params.get("swap_fraction", 0.1))
        for _ in range(n_swaps):
            if length >= 2:
                i = rng.randrange(length - 1)
                values[i], values[i + 1] = values[i + 1], values[i]
    return values


def _gen_string(rng, gen: GeneratorSpec, slot: SlotSchema, length: int) -> str:
    alphabet = gen.params.get("alphabet", slot.alphabet)
    return "".join(rng.choice(alphabet) for _ in range(length))


def _length(rng, gen: GeneratorSpec, slot: SlotSchema) -> int:
    low = gen.params.get("length_low", slot.len_low)
    high = gen.params.get("length_high", slot.len_high)
    return rng.randint(low, high)


def generate_inputs(mixture, schema, n: int, seed: int) -> list[tuple]:
    """Draw n input tuples conforming to the schema; deterministic in seed."""
    validate_mixture(mixture)
    rng = random.Random(seed)
    for i, slot in enumerate(schema):
        applicable = [g for g in mixture if slot.kind in _APPLICABLE[g.kind]]
        if slot.kind == "int" and not slot.controls_next:
            applicable = [g for g in applicable if g.kind != LENGTH_CONTROLLED]
        if not applicable:
            raise SchemaMismatch(f"no generator in the mixture fits slot {i} ({slot.kind})")

    out = []
    for _ in range(n):
        values: list = []
        forced_length = None
        for slot in schema:
            gens = [g for g in mixture if slot.kind in _APPLICABLE[g.kind]]
            if slot.kind == "int" and not slot.controls_next:
                gens = [g for g in gens if g.kind != LENGTH_CONTROLLED]
            gen = rng.choices(gens, weights=[g.weight for g in gens], k=1)[0]
            if slot.kind in ("int", "bool"):
                if slot.kind == "bool":
                    value = rng.random() < 0.5
                elif gen.kind == LENGTH_CONTROLLED:
                    value = _length(rng, gen, slot)
                else:
                    value = _gen_int(rng, gen, slot)
                if slot.controls_next:
                    forced_length = int(value)
                values.append(value)
            elif slot.kind == "str":
                values.append(_gen_string(rng, gen, slot, _length(rng, gen, slot)))
            elif slot.kind == "list_int":
                length = forced_length if forced_length is not None else _length(rng, gen, slot)
                forced_length = None
                values.append(_gen_int_list(rng, gen, slot, length))
            elif slot.kind == "list_str":
                length = forced_length if forced_length is not None else _length(rng, gen, slot)
                forced_length = None
                if gen.kind == ALL_SAME:
                    s = _gen_string(rng, gen, slot, rng.randint(1, 5))
                    values.append([s] * length)
                else:
                    values.append([_gen_string(rng, gen, slot, rng.randint(1, 8)) for _ in range(length)])
            else:  # pragma: no cover - guarded by the applicability check
                raise SchemaMismatch(f"unhandled slot kind {slot.kind}")
        out.append(tuple(values))
    return out


def _is_bool_output(sample: IOSample) -> bool:
    return len(sample.outputs) == 1 and isinstance(sample.outputs[0], bool)


def balance_outputs(pairs: list[IOSample], seed: int = 0, protected: int = 0) -> list[IOSample]:
    """Drop from the boolean majority class until the skew is at most 1.

    The first ``protected`` pairs (the official seeds) are dropped only when
    the majority cannot be reduced enough from generated pairs alone.
    """
    trues = [i for i, p in enumerate(pairs) if p.outputs[0] is True]
    falses = [i for i, p in enumerate(pairs) if p.outputs[0] is False]
    majority, minority = (trues, falses) if len(trues) >= len(falses) else (falses, trues)
    n_drop = len(majority) - len(minority) - 1
    if n_drop <= 0:
        return list(pairs)
    rng = random.Random(seed)
    droppable = [i for i in majority if i >= protected]
    rng.shuffle(droppable)
    drops = set(droppable[:n_drop])
    if len(drops) < n_drop:
        protected_majority = [i for i in majority if i < protected]
        rng.shuffle(protected_majority)
        drops.update(protected_majority[: n_drop - len(drops)])
    return [p for i, p in enumerate(pairs) if i not in drops]


@dataclass(frozen=True)
class Instance:
    """One training problem: description text, reference solution, I/O pairs."""

    description: str
    solution: str
    io_pairs: tuple[IOSample, ...]

    def __post_init__(self):
        object.__setattr__(self, "io_pairs", tuple(self.io_pairs))


@dataclass(frozen=True)
class AugmentReport:
    n_attempted: int
    n_ok: int
    n_timeout: int
    n_crash: int
    n_dropped_seeds: int
    budget_exhausted: bool


def augment_instance(
    instance: Instance,
    mixture=None,
    cfg: RunnerConfig | None = None,
    min_pairs: int = 100,
    seed: int = 0,
    attempt_budget: int | None = None,
    jobs: int = 4,
) -> tuple[Instance, AugmentReport]:
    """Grow an instance to at least min_pairs validated, replayable I/O pairs.

    Stops at the attempt budget with a BudgetExhaustedWarning when the
    reference solution rejects too many generated inputs.
    """
    mixture = mixture or default_mixture()
    cfg = cfg or RunnerConfig()
    if attempt_budget is None:
        attempt_budget = max(20 * min_pairs, 200)
    if min_pairs <= 0:
        return instance, AugmentReport(0, 0, 0, 0, 0, False)

    schema = infer_schema([s.inputs for s in instance.io_pairs])
    n_out = len(instance.io_pairs[0].outputs)

    def run_one(inputs):
        return inputs, run_reference(instance.solution, inputs, cfg)

    # validate the official seed pairs first; non-replaying seeds are dropped
    pairs: list[IOSample] = []
    n_dropped_seeds = 0
    with ThreadPoolExecutor(max_workers=max(jobs, 1)) as pool:
        for sample, (_, result) in zip(instance.io_pairs, pool.map(run_one, [s.inputs for s in instance.io_pairs])):
            if result.ok and result.outputs == sample.outputs and len(result.outputs) == n_out:
                pairs.append(sample)
            else:
                n_dropped_seeds += 1
                warnings.warn(f"seed pair does not replay and was dropped: {sample.inputs!r}")

    boolean = bool(pairs) and all(_is_bool_output(p) for p in pairs)
    seen_inputs = {_hashable(p.inputs) for p in pairs}
    n_attempted = n_ok = n_timeout = n_crash = 0
    batch_seed = seed

    def enough() -> bool:
        if boolean:
            trues = sum(1 for p in pairs if p.outputs[0] is True)
            falses = len(pairs) - trues
            return 2 * min(trues, falses) + 1 >= min_pairs
        return len(pairs) >= min_pairs

    with ThreadPoolExecutor(max_workers=max(jobs, 1)) as pool:
        while not enough() and n_attempted < attempt_budget:
            batch_size = min(max(min_pairs // 2, 16), attempt_budget - n_attempted)
            batch_seed += 1
            candidates = [
                t
                for t in generate_inputs(mixture, schema, batch_size, seed=(seed << 20) + batch_seed)
                if _hashable(t) not in seen_inputs
            ]
            for t in candidates:
                seen_inputs.add(_hashable(t))
            n_attempted += batch_size
            for inputs, result in pool.map(run_one, candidates):
                if result.ok and len(result.outputs) == n_out:
                    n_ok += 1
                    pairs.append(IOSample(inputs=_hashable(inputs), outputs=result.outputs))
                elif result.status == "timeout":
                    n_timeout += 1
                else:
                    n_crash += 1

    if boolean:
        pairs = balance_outputs(pairs, seed=seed, protected=len(instance.io_pairs) - n_dropped_seeds)

    exhausted = len(pairs) < min_pairs
    if exhausted:
        warnings.warn(
            BudgetExhaustedWarning(
                f"augmentation stopped at {len(pairs)} pairs after {n_attempted} attempts",
                achieved=len(pairs),
            )
        )
    report = AugmentReport(n_attempted, n_ok, n_timeout, n_crash, n_dropped_seeds, exhausted)
    return replace(instance, io_pairs=tuple(pairs)), report


def _hashable(values):
    return tuple(tuple(v) if isinstance(v, list) else v for v in values)
