"""Training loop: cross-entropy over the coarse-to-fine target, metrics log
as line-oriented text, checkpoints via torch.save."""

from __future__ import annotations

import math
from dataclasses import dataclass

import torch

from .model import CoarseToFineModel, ModelConfig
from .records import Record, VocabFile, describe_bytes, format_target


@dataclass(frozen=True)
class TrainConfig:
    steps: int = 2000
    lr: float = 3e-4
    seed: int = 0
    target_format: str = "full"
    log_every: int = 50
    loss_stop: float = 0.0  # early stop threshold; 0 disables
    # curriculum knobs: change batching only, never record content
    n_sample_schedule: tuple[int, ...] = ()  # e.g. (1, 2, 4, 8); cycled stepwise
    schedule_period: int = 15
    programs_per_prediction: int = 1


@dataclass
class PreparedInstance:
    content: torch.Tensor
    syntax: torch.Tensor
    description: torch.Tensor
    target: torch.Tensor


def prepare_instances(records: list[Record], vocab: VocabFile, cfg: ModelConfig,
                      target_format: str = "full") -> list[PreparedInstance]:
    out = []
    for record in records:
        content = torch.tensor(record.io_content, dtype=torch.long)[: cfg.max_samples, : cfg.max_tokens]
        syntax = torch.tensor(record.io_syntax, dtype=torch.long)[: cfg.max_samples, : cfg.max_tokens]
        target = format_target(record, target_format, vocab.pad_id, vocab.eos_id)
        if len(target) > cfg.max_target_len:
            raise ValueError(f"target of length {len(target)} exceeds the cap {cfg.max_target_len}")
        out.append(
            PreparedInstance(
                content=content,
                syntax=syntax,
                description=torch.tensor(
                    describe_bytes(record.description, cfg.max_description_len), dtype=torch.long
                ),
                target=torch.tensor(target, dtype=torch.long),
            )
        )
    return out


def _sample_rows(inst: PreparedInstance, n: int) -> PreparedInstance:
    if n <= 0 or inst.content.numel() == 0:
        return inst
    return PreparedInstance(
        content=inst.content[:n],
        syntax=inst.syntax[:n],
        description=inst.description,
        target=inst.target,
    )


def train(records: list[Record], vocab: VocabFile, model_cfg: ModelConfig,
          train_cfg: TrainConfig | None = None, log_path=None):
    """Returns (model, losses). Raises on divergence (NaN loss)."""
    train_cfg = train_cfg or TrainConfig()
    torch.manual_seed(train_cfg.seed)
    model = CoarseToFineModel(model_cfg)
    instances = prepare_instances(records, vocab, model_cfg, train_cfg.target_format)
    opt = torch.optim.Adam(model.parameters(), lr=train_cfg.lr)
    losses: list[float] = []
    log_lines: list[str] = []
    step = 0
    epoch = 0
    while step < train_cfg.steps:
        if train_cfg.n_sample_schedule:
            idx = (epoch // train_cfg.schedule_period) % len(train_cfg.n_sample_schedule)
            n_rows = train_cfg.n_sample_schedule[idx]
        else:
            n_rows = 0
        epoch += 1
        epoch_losses = []
        for inst in instances:
            if step >= train_cfg.steps:
                break
            inst = _sample_rows(inst, n_rows)
            loss = model.loss(inst.content, inst.syntax, inst.description, inst.target)
            if not math.isfinite(loss.item()):
                raise RuntimeError(f"training diverged at step {step}: loss={loss.item()}")
            opt.zero_grad()
            loss.backward()
            opt.step()
            step += 1
            losses.append(loss.item())
            epoch_losses.append(loss.item())
            if step % train_cfg.log_every == 0 or step == 1:
                log_lines.append(f"{step}\t{loss.item():.6f}")
        mean_epoch = sum(epoch_losses) / max(len(epoch_losses), 1)
        if train_cfg.loss_stop and mean_epoch < train_cfg.loss_stop:
            break
    if log_path is not None:
        with open(log_path, "w", encoding="utf-8") as f:
            f.write("\n".join(log_lines) + "\n")
    return model, losses


def save_checkpoint(model: CoarseToFineModel, path) -> None:
    torch.save({"config": model.cfg.__dict__, "state": model.state_dict()}, path)


def load_checkpoint(path) -> CoarseToFineModel:
    blob = torch.load(path, weights_only=False)
    model = CoarseToFineModel(ModelConfig(**blob["config"]))
    model.load_state_dict(blob["state"])
    model.eval()
    return model
