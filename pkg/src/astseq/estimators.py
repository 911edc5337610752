"""Scikit-learn style estimators over the codec, vocabulary and aligner.

The codec is a (stateless) transformer with an exact inverse; the
vectorizer is fit on a corpus like a count vectorizer and then maps sources
to id sequences; the aligner turns per-instance I/O samples into matrices.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_probability, check_source_list
from .dataset import assemble_target
from .decode import decode
from .encode import DEFAULT_COMMON_FLOATS, EncodeOptions, SubsequenceBundle, encode
from .io_align import align_tokens
from .transforms import NamePool
from .vocab import AccessoryConfig, Vocabulary, build_frame_vocab, encode_ids


class SubsequenceEncoder(TransformerMixin, BaseEstimator):
    """Stateless codec: sources to subsequence bundles and back."""

    def __init__(self, replace_names=False, strip_docstrings=False, pool_size=64,
                 common_floats=DEFAULT_COMMON_FLOATS):
        self.replace_names = replace_names
        self.strip_docstrings = strip_docstrings
        self.pool_size = pool_size
        self.common_floats = common_floats

    def _options(self) -> EncodeOptions:
        return EncodeOptions(
            replace_names=self.replace_names,
            strip_docstrings=self.strip_docstrings,
            pool=NamePool(size=self.pool_size),
            common_floats=tuple(self.common_floats),
        )

    def fit(self, X, y=None):
        check_source_list(X)
        return self

    def transform(self, X) -> list[SubsequenceBundle]:
        return [encode(source, self._options()) for source in check_source_list(X)]

    def inverse_transform(self, bundles) -> list[str]:
        return [decode(b.frames, b.accessories) for b in bundles]


class SubsequenceVectorizer(BaseEstimator):
    """Fit a frame vocabulary on a corpus, then map sources to target ids.

    After ``fit``, ``vocabulary_`` holds the built Vocabulary and
    ``transform`` yields one dropout-applied target id sequence per source.
    """

    def __init__(self, min_count=1, replace_names=False, strip_docstrings=False,
                 pool_size=64, common_floats=DEFAULT_COMMON_FLOATS,
                 p1=0.0, p2=0.0, seed=0):
        self.min_count = min_count
        self.replace_names = replace_names
        self.strip_docstrings = strip_docstrings
        self.pool_size = pool_size
        self.common_floats = common_floats
        self.p1 = p1
        self.p2 = p2
        self.seed = seed

    def _options(self) -> EncodeOptions:
        return EncodeOptions(
            replace_names=self.replace_names,
            strip_docstrings=self.strip_docstrings,
            pool=NamePool(size=self.pool_size),
            common_floats=tuple(self.common_floats),
        )

    def fit(self, X, y=None):
        X = check_source_list(X)
        check_probability(self.p1, "p1")
        check_probability(self.p2, "p2")
        config = AccessoryConfig(
            pool=NamePool(size=self.pool_size), common_floats=tuple(self.common_floats)
        )
        self.vocabulary_ = build_frame_vocab(X, self.min_count, config, self._options())
        return self

    def transform(self, X) -> list[list[int]]:
        check_is_fitted(self, "vocabulary_")
        out = []
        for i, source in enumerate(check_source_list(X)):
            bundle = encode(source, self._options())
            encoded = encode_ids(bundle, self.vocabulary_)
            out.append(assemble_target(encoded, self.p1, self.p2, seed=self.seed + i))
        return out

    def fit_transform(self, X, y=None):
        return self.fit(X, y).transform(X)


class IOSampleAligner(TransformerMixin, BaseEstimator):
    """Align each instance's I/O samples into content/syntax id grids."""

    def __init__(self, vocabulary=None):
        self.vocabulary = vocabulary

    def fit(self, X, y=None):
        if self.vocabulary is not None and not isinstance(self.vocabulary, Vocabulary):
            raise TypeError("vocabulary must be a Vocabulary or None")
        return self

    def transform(self, X):
        """X: iterable of instances, each a list of IOSample; returns matrices
        (id grids when a vocabulary is set, token tables otherwise)."""
        self.fit(X)
        out = []
        for samples in X:
            table = align_tokens(list(samples))
            out.append(table.to_matrix(self.vocabulary) if self.vocabulary is not None else table)
        return out
