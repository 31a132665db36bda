"""
CLI package for the patience solver.
Configuration and the batch harness. The command line lives in src.cli.main.
"""

from src.cli.config import Settings, load_profile, resolve_rules_path
from src.cli.harness import InstanceRecord, run_batch, run_single, summarize, summarize_records

__all__ = [
    'Settings',
    'load_profile',
    'resolve_rules_path',
    'InstanceRecord',
    'run_batch',
    'run_single',
    'summarize',
    'summarize_records',
]
