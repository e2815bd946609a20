"""Configuration, wiring and execution of extraction and analysis pipelines."""

from .archive import create_archive, rerun_archive
from .cache import ModelCache
from .config import ExperimentConfig, load_config, parse_properties
from .dsl import PipelineNode, parse_pipeline_dsl
from .engine import RunResult, run_experiment
from .output import write_table
from .plan import ExperimentPlan, validate_config

__all__ = [
    "ExperimentConfig", "ExperimentPlan", "ModelCache", "PipelineNode", "RunResult",
    "create_archive", "load_config", "parse_pipeline_dsl", "parse_properties",
    "rerun_archive", "run_experiment", "validate_config", "write_table",
]
