"""Beam-search generation, coarse-segment stripping, and decoding of
candidates through the astseq command line (the primary's external
interface; this package never imports it)."""

from __future__ import annotations

import json
import os
import subprocess
import tempfile
from dataclasses import dataclass

import torch

from .model import CoarseToFineModel
from .records import VocabFile, describe_bytes, split_segments

ASTSEQ_COMMAND = os.environ.get("TOYMODEL_ASTSEQ", "astseq")


@dataclass(frozen=True)
class Candidate:
    ids: tuple[int, ...]
    score: float
    status: str  # decoded | no_eos | bad_segments | decode_failed
    source: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "decoded"


def beam_search(model: CoarseToFineModel, memory: torch.Tensor, eos_id: int,
                beam_width: int, max_len: int) -> list[tuple[list[int], float, bool]]:
    """Standard beam search (beams batched per step); returns
    (ids, sum-logprob, finished) triples, best first."""
    beams: list[tuple[list[int], float]] = [([], 0.0)]
    finished: list[tuple[list[int], float, bool]] = []
    with torch.no_grad():
        for _ in range(max_len):
            if not beams:
                break
            target_in = torch.tensor([[-1, *ids] for ids, _ in beams], dtype=torch.long)
            batch_memory = memory.expand(len(beams), -1, -1)
            logits = model.decode_logits(batch_memory, target_in)[:, -1]
            logprobs = torch.log_softmax(logits, dim=-1)
            top = torch.topk(logprobs, beam_width, dim=-1)
            candidates = []
            for (ids, score), toks, lps in zip(beams, top.indices.tolist(), top.values.tolist()):
                for tok, lp in zip(toks, lps):
                    candidates.append((ids + [tok], score + lp))
            candidates.sort(key=lambda c: -c[1])
            beams = []
            for ids, score in candidates[: beam_width * 2]:
                if ids[-1] == eos_id:
                    finished.append((ids[:-1], score, True))
                elif len(beams) < beam_width:
                    beams.append((ids, score))
            # scores only decrease, so stop once no active beam can still
            # outrank the current k-best finished hypotheses
            if len(finished) >= beam_width:
                finished.sort(key=lambda c: -c[1])
                if not beams or beams[0][1] <= finished[beam_width - 1][1]:
                    break
    finished.extend((ids, score, False) for ids, score in beams)
    finished.sort(key=lambda c: -c[1])
    return finished[:beam_width]


def decode_candidate(ids, vocab: VocabFile) -> Candidate:
    """Strip the coarse segments, rebuild a bundle file, run `astseq decode`."""
    try:
        segments = split_segments(list(ids) + [vocab.eos_id], vocab.pad_id, vocab.eos_id)
    except ValueError:
        return Candidate(tuple(ids), 0.0, "bad_segments")
    frame_ids, accessory_ids = segments[2], segments[3]
    frames, accessories = [], []
    for tid in frame_ids:
        if not 0 <= tid < vocab.n_ids or vocab.kind(tid) != "frame":
            return Candidate(tuple(ids), 0.0, "bad_segments")
        frames.append(vocab.text(tid))
    for tid in accessory_ids:
        if not 0 <= tid < vocab.n_ids or vocab.kind(tid) in ("frame", "special"):
            return Candidate(tuple(ids), 0.0, "bad_segments")
        accessories.append([vocab.text(tid), vocab.kind(tid)])
    bundle = {
        "format": "astseq-bundle",
        "version": 1,
        "frames": frames,
        "accessories": accessories,
        "outline_index": [],
        "core_index": [],
        "name_map": {},
    }
    with tempfile.TemporaryDirectory(prefix="toymodel-") as workdir:
        bundle_path = os.path.join(workdir, "cand.bundle")
        out_path = os.path.join(workdir, "cand.py")
        with open(bundle_path, "w", encoding="utf-8") as f:
            json.dump(bundle, f)
        proc = subprocess.run(
            [ASTSEQ_COMMAND, "decode", "--in", bundle_path, "--out", out_path],
            capture_output=True,
            text=True,
        )
        if proc.returncode != 0:
            return Candidate(tuple(ids), 0.0, "decode_failed")
        with open(out_path, "r", encoding="utf-8") as f:
            source = f.read()
    return Candidate(tuple(ids), 0.0, "decoded", source=source)


def generate(model: CoarseToFineModel, vocab: VocabFile, content, syntax, description: str,
             k: int | None = None, beam_width: int | None = None) -> list[Candidate]:
    """k candidate programs for one instance; failed candidates keep their
    failure status rather than being silently dropped."""
    model.eval()
    beam_width = beam_width or model.cfg.beam_width
    k = k or beam_width
    description_ids = torch.tensor(describe_bytes(description, model.cfg.max_description_len),
                                   dtype=torch.long)
    memory = model.encode_instance(content, syntax, description_ids)
    raw = beam_search(model, memory, vocab.eos_id, beam_width, model.cfg.max_target_len)
    out = []
    for ids, score, finished in raw[:k]:
        if not finished:
            out.append(Candidate(tuple(ids), score, "no_eos"))
            continue
        cand = decode_candidate(ids, vocab)
        out.append(Candidate(cand.ids, score, cand.status, cand.source))
    return out
