"""astseq: syntax-aware code codec and dataset toolchain.

Splits Python source into a layout-frame subsequence (structure) and an
accessory subsequence (names and values), losslessly decodes them back, and
prepares coarse-to-fine training targets, vocabularies, aligned I/O grids
and augmented I/O data.
"""

from .decode import RoundtripReport, decode, roundtrip_check
from .encode import (
    AccessoryToken,
    EncodeOptions,
    FrameToken,
    SubsequenceBundle,
    encode,
)
from .errors import (
    AstseqError,
    BudgetExhaustedWarning,
    DuplicateEntry,
    LengthMismatch,
    MalformedSerialization,
    MalformedTree,
    PoolExhausted,
    SchemaMismatch,
    SlotArityMismatch,
    UnknownId,
    UnsupportedConstruct,
)
from .estimators import IOSampleAligner, SubsequenceEncoder, SubsequenceVectorizer
from .io_align import AlignedIOMatrix, IOSample, align, align_tokens, tokenize_literal
from .transforms import NamePool, load_builtin_names, replace_names, strip_docstrings
from .tree import Node, SyntaxTree, parse, preorder, unparse
from .vocab import (
    AccessoryConfig,
    Vocabulary,
    build_accessory_vocab,
    build_frame_vocab,
    decode_ids,
    encode_ids,
)

__version__ = "0.1.0"
