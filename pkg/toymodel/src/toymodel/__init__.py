"""Desk-scale coarse-to-fine program synthesis model.

Consumes astseq training records (JSONL) and vocabulary files, trains a
small transformer with a sample embedder over aligned I/O grids and a
four-token description distillation, and generates programs via beam search
with the coarse segments stripped before decoding.
"""

from .evaluate import NkResult, evaluate_nk, run_candidate
from .generate import Candidate, beam_search, decode_candidate, generate
from .model import CoarseToFineModel, DescriptionEmbedder, ModelConfig, SampleEmbedder
from .records import Record, VocabFile, describe_bytes, format_target, load_records, split_segments
from .train import TrainConfig, load_checkpoint, prepare_instances, save_checkpoint, train

__version__ = "0.1.0"
