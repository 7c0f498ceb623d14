"""
Falsification harness: theorem checks, stream audits and n0 searches.
"""

from uniqdim.verifier.checks import (
    AuditReport,
    CheckResult,
    GraphProfile,
    Verdict,
    audit_graph,
    check_ids,
    load_checks,
    run_check,
    verify_extremal,
)
from uniqdim.verifier.n0 import N0Result, OrderCount, scan_n0_stream, search_n0
from uniqdim.verifier.sweep import AuditRecord, AuditSummary, AuditSweep, audit_exhaustive, audit_stream

__all__ = [
    'Verdict',
    'CheckResult',
    'GraphProfile',
    'AuditReport',
    'load_checks',
    'check_ids',
    'audit_graph',
    'run_check',
    'verify_extremal',
    'AuditRecord',
    'AuditSummary',
    'AuditSweep',
    'audit_stream',
    'audit_exhaustive',
    'N0Result',
    'OrderCount',
    'search_n0',
    'scan_n0_stream',
]
