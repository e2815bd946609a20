"""Extractors for the code, build and variability-model pipelines."""
