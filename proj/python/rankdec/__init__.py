"""Completely decomposable rank-metric codes over finite field extensions.

Elements are plain integers: the encoding sum c_i p^i of their coordinates in the power basis
of the field's modulus root.
"""

import json as _json

from . import _rankdec
from ._rankdec import (
    CapExceeded,
    Code,
    ContextMismatch,
    DomainError,
    Error,
    FalsificationAlarm,
    Field,
    ParseError,
    bound_prime,
    bounds_nonprime,
    build_completely_decomposable,
    code_from_json,
    construct_lambda_code,
    construct_lower_attaining,
    construct_subfield_extremal,
)

__all__ = [
    "CapExceeded",
    "Code",
    "ContextMismatch",
    "DomainError",
    "Error",
    "FalsificationAlarm",
    "Field",
    "ParseError",
    "bound_prime",
    "bounds_nonprime",
    "build_completely_decomposable",
    "check_nonprime",
    "check_prime",
    "code_from_json",
    "construct_lambda_code",
    "construct_lower_attaining",
    "construct_subfield_extremal",
    "min_weight_report",
    "reproduce",
    "verify",
]


def min_weight_report(code):
    """Closed-form minimum-weight count with ell, the j values and the bounds, as a dict."""
    return _json.loads(code.min_weight_report())


def check_nonprime(code):
    """Verdict dict: status, reason, witnesses and the underlying report."""
    return _json.loads(code.check_nonprime())


def check_prime(code):
    return _json.loads(code.check_prime())


def reproduce(example):
    """Run one of the worked examples: "m6", "m7", "extremal" or "lowerbound"."""
    return _json.loads(_rankdec.reproduce(example))


def verify(suite, seed=1, trials=20):
    """Run a verification suite and return one dict per suite."""
    return _json.loads(_rankdec.verify(suite, seed, trials))
