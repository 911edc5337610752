"""Model: sample embedder over the aligned I/O grid, description embedder
distilled to four tokens, transformer encoder, and program decoder."""

from __future__ import annotations

from dataclasses import dataclass

import torch
from torch import nn

DESCRIPTION_VOCAB = 257  # bytes 1..256 plus padding 0


@dataclass(frozen=True)
class ModelConfig:
    vocab_size: int
    embed_dim: int = 128
    n_heads: int = 4
    sample_embedder_depth: int = 2
    encoder_depth: int = 2
    decoder_depth: int = 4  # desk scale; the reference system used hundreds
    max_target_len: int = 512
    max_tokens: int = 128  # N_token cap for the I/O grid
    max_samples: int = 32
    max_description_len: int = 256
    beam_width: int = 5
    zero_mask_io: bool = False  # pretraining behavior: ignore the sample embedder

    def __post_init__(self):
        if min(self.vocab_size, self.embed_dim, self.n_heads, self.decoder_depth) <= 0:
            raise ValueError("all model dimensions must be positive")
        if self.beam_width < 1:
            raise ValueError("beam width must be >= 1")


def _encoder_stack(dim, heads, depth):
    layer = nn.TransformerEncoderLayer(
        d_model=dim, nhead=heads, dim_feedforward=4 * dim, batch_first=True, dropout=0.0
    )
    return nn.TransformerEncoder(layer, num_layers=depth)


class SampleEmbedder(nn.Module):
    """Attends the N_sample x N_token grid; first-element pooling over samples."""

    def __init__(self, cfg: ModelConfig, token_embedding: nn.Embedding):
        super().__init__()
        self.cfg = cfg
        self.token_embedding = token_embedding
        self.pos_token = nn.Embedding(cfg.max_tokens, cfg.embed_dim)
        self.pos_sample = nn.Embedding(cfg.max_samples, cfg.embed_dim)
        self.blocks = _encoder_stack(cfg.embed_dim, cfg.n_heads, cfg.sample_embedder_depth)

    def forward(self, content: torch.Tensor, syntax: torch.Tensor) -> torch.Tensor:
        """content/syntax: (n_samples, n_tokens) id grids -> (n_tokens, E)."""
        if content.shape != syntax.shape or content.dim() != 2:
            raise ValueError(f"grid shapes differ or are not 2-d: {content.shape} vs {syntax.shape}")
        n_samples, n_tokens = content.shape
        x = self.token_embedding(content) + self.token_embedding(syntax)
        cols = torch.arange(n_tokens, device=content.device)
        rows = torch.arange(n_samples, device=content.device)
        x = x + self.pos_token(cols)[None, :, :] + self.pos_sample(rows)[:, None, :]
        x = x.reshape(1, n_samples * n_tokens, self.cfg.embed_dim)
        x = self.blocks(x).reshape(n_samples, n_tokens, self.cfg.embed_dim)
        return x[0]  # first-element pooling across the sample dimension


class DescriptionEmbedder(nn.Module):
    """Small trainable text encoder distilled to first/last/min/max tokens."""

    def __init__(self, cfg: ModelConfig):
        super().__init__()
        self.embedding = nn.Embedding(DESCRIPTION_VOCAB, cfg.embed_dim)
        self.pos = nn.Embedding(cfg.max_description_len, cfg.embed_dim)
        self.blocks = _encoder_stack(cfg.embed_dim, cfg.n_heads, 2)

    def forward(self, ids: torch.Tensor) -> torch.Tensor:
        """(seq,) description byte ids -> (4, E)."""
        if ids.dim() != 1 or ids.numel() == 0:
            raise ValueError("description must be a non-empty 1-d id sequence")
        x = self.embedding(ids) + self.pos(torch.arange(ids.numel(), device=ids.device))
        x = self.blocks(x.unsqueeze(0)).squeeze(0)
        return torch.stack([x[0], x[-1], x.min(dim=0).values, x.max(dim=0).values])


class CoarseToFineModel(nn.Module):
    """Full architecture; predicts the concatenated coarse-to-fine target."""

    def __init__(self, cfg: ModelConfig):
        super().__init__()
        self.cfg = cfg
        self.token_embedding = nn.Embedding(cfg.vocab_size, cfg.embed_dim)
        self.sample_embedder = SampleEmbedder(cfg, self.token_embedding)
        self.description_embedder = DescriptionEmbedder(cfg)
        self.encoder = _encoder_stack(cfg.embed_dim, cfg.n_heads, cfg.encoder_depth)
        decoder_layer = nn.TransformerDecoderLayer(
            d_model=cfg.embed_dim,
            nhead=cfg.n_heads,
            dim_feedforward=4 * cfg.embed_dim,
            batch_first=True,
            dropout=0.0,
        )
        self.decoder = nn.TransformerDecoder(decoder_layer, num_layers=cfg.decoder_depth)
        self.pos_target = nn.Embedding(cfg.max_target_len + 1, cfg.embed_dim)
        self.head = nn.Linear(cfg.embed_dim, cfg.vocab_size)
        self.bos = nn.Parameter(torch.zeros(cfg.embed_dim))

    def encode_instance(self, content, syntax, description_ids) -> torch.Tensor:
        """-> (1, N_token + 4, E) encoder memory for one instance."""
        if content.numel():
            io = self.sample_embedder(content, syntax)
            if self.cfg.zero_mask_io:
                io = io * 0.0
        else:
            io = torch.zeros(0, self.cfg.embed_dim, device=description_ids.device)
        desc = self.description_embedder(description_ids)
        memory = torch.cat([io, desc], dim=0)  # (N_token + 4, E)
        return self.encoder(memory.unsqueeze(0))

    def decode_logits(self, memory: torch.Tensor, target_in: torch.Tensor) -> torch.Tensor:
        """memory (1, M, E), target_in (1, T) shifted-right ids -> (1, T, vocab)."""
        t = target_in.size(1)
        x = self.token_embedding(target_in.clamp(min=0))
        x = torch.where((target_in == -1).unsqueeze(-1), self.bos.expand_as(x), x)
        x = x + self.pos_target(torch.arange(t, device=target_in.device))
        mask = nn.Transformer.generate_square_subsequent_mask(t, device=target_in.device)
        out = self.decoder(x, memory, tgt_mask=mask)
        return self.head(out)

    def loss(self, content, syntax, description_ids, target: torch.Tensor) -> torch.Tensor:
        """Autoregressive next-token cross-entropy over the full target."""
        memory = self.encode_instance(content, syntax, description_ids)
        target = target.unsqueeze(0)
        target_in = torch.cat(
            [torch.full((1, 1), -1, dtype=torch.long, device=target.device), target[:, :-1]], dim=1
        )
        logits = self.decode_logits(memory, target_in)
        return nn.functional.cross_entropy(
            logits.reshape(-1, self.cfg.vocab_size), target.reshape(-1)
        )
