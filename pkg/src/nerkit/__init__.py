"""nerkit: a self-contained sequence-labeling toolkit.

Unified IOB corpus handling, span micro-F1 evaluation (type-aware and
type-ignored), a deterministic averaged-perceptron tagger with constrained
Viterbi decoding, a cross-domain experiment matrix harness, and an HTTP
prediction service with a web demo.
"""

from ._kernel import ACTIVE_KERNEL, available_kernels
from .chunking import EntitySpan, erase_types, extract_chunks, normalize_iob2
from .corpus import (
    Dataset,
    DatasetStats,
    Sentence,
    Tag,
    concat_datasets,
    dataset_stats,
    label_lookup,
    load_dataset,
    lowercase_dataset,
    parse_conll,
    serialize_conll,
)
from .harness import (
    CrossDomainMatrix,
    MatrixSpec,
    matrix_from_json,
    render_table,
    run_matrix,
    run_matrix_full,
)
from .metrics import EvalCounts, EvalReport, report_to_json, report_to_tsv, row_average, score
from .server import create_app, tokenize
from .tagger import (
    Prediction,
    ScoredSpan,
    TaggerModel,
    TrainConfig,
    decode_tags,
    featurize,
    load_model,
    predict,
    save_model,
    train,
    viterbi_decode,
    word_shape,
)

__version__ = "0.1.0"

__all__ = [
    "ACTIVE_KERNEL",
    "available_kernels",
    "CrossDomainMatrix",
    "Dataset",
    "DatasetStats",
    "EntitySpan",
    "EvalCounts",
    "EvalReport",
    "MatrixSpec",
    "Prediction",
    "ScoredSpan",
    "Sentence",
    "Tag",
    "TaggerModel",
    "TrainConfig",
    "concat_datasets",
    "create_app",
    "dataset_stats",
    "decode_tags",
    "erase_types",
    "extract_chunks",
    "featurize",
    "label_lookup",
    "load_dataset",
    "load_model",
    "lowercase_dataset",
    "matrix_from_json",
    "normalize_iob2",
    "parse_conll",
    "predict",
    "render_table",
    "report_to_json",
    "report_to_tsv",
    "row_average",
    "run_matrix",
    "run_matrix_full",
    "save_model",
    "score",
    "serialize_conll",
    "tokenize",
    "train",
    "viterbi_decode",
    "word_shape",
]
