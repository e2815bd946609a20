"""Analyses over extracted code, build and variability models."""

from .feature_effect import (
    FeatureEffectEntry,
    configuration_mismatches,
    effect_condition,
    effect_table,
    feature_effect,
    filter_relevant,
    find_mismatches,
    pc_finder,
    pc_table,
)
from .metrics import FileMetrics, metrics_per_file
from .tables import ResultTable
from .undead import DeadBlockFinding, find_dead_blocks, missing_features, undead_analysis

__all__ = [
    "DeadBlockFinding", "FeatureEffectEntry", "FileMetrics", "ResultTable",
    "configuration_mismatches", "effect_condition", "effect_table", "feature_effect",
    "filter_relevant", "find_dead_blocks", "find_mismatches", "metrics_per_file",
    "missing_features", "pc_finder", "pc_table", "undead_analysis",
]
