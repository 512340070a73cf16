"""Evaluation against gold annotations"""
from qamar.evaluation.metrics import (
    EvalReport,
    GoldRecord,
    evaluate,
    format_report,
    parse_category,
    read_gold,
    read_tagged,
    tag_agreement,
    tag_distribution,
    write_gold,
)
from qamar.evaluation.ablation import AblationResult, run_ablation

__all__ = [
    'EvalReport', 'GoldRecord', 'evaluate', 'format_report', 'parse_category', 'read_gold',
    'read_tagged', 'tag_agreement', 'tag_distribution', 'write_gold',
    'AblationResult', 'run_ablation',
]
