"""Textual complexity metrics for Brazilian Portuguese."""

from ._core import (
    NilcMetrixError,
    catalog_tsv,
    compare,
    compute,
    compute_conllu,
    compute_text,
    dale_chall_score,
    flesch_score,
    gunning_fog_score,
    list_metrics,
    welch_t,
)

__all__ = [
    "NilcMetrixError",
    "catalog_tsv",
    "compare",
    "compute",
    "compute_conllu",
    "compute_text",
    "dale_chall_score",
    "flesch_score",
    "gunning_fog_score",
    "list_metrics",
    "welch_t",
]
