"""Legendre elliptic curves over finite fields."""

import json

from ._core import (
    CapExceeded,
    Curve,
    Field,
    FieldMismatch,
    char2_count,
    class_number,
    deuring,
    find_witness,
    legendre_counts,
    legendre_curve,
    legendre_sum,
    orbit,
    predict_legendre_isogenous,
    supersingular_lambdas,
)
from ._core import run as _run

__all__ = [
    "CapExceeded",
    "Curve",
    "Field",
    "FieldMismatch",
    "InvariantFailure",
    "census",
    "char2_count",
    "char2_table",
    "class_number",
    "classify",
    "deuring",
    "find_witness",
    "legendre_counts",
    "legendre_curve",
    "legendre_sum",
    "orbit",
    "predict_legendre_isogenous",
    "run",
    "stats",
    "supersingular",
    "supersingular_lambdas",
]


class InvariantFailure(RuntimeError):
    pass


def run(command, **kwargs):
    """Run a CLI command in-process; returns (exit_code, stdout, stderr)."""
    return _run(command, **kwargs)


def _records(command, **kwargs):
    rc, out, err = _run(command, format="json", **kwargs)
    if rc == 2:
        raise ValueError(err.strip())
    if rc != 0:
        raise InvariantFailure(err.strip())
    return json.loads(out)


def classify(q_min, q_max=None, jobs=1):
    return _records("classify", q_min=q_min, q_max=q_max or q_min, jobs=jobs)


def census(q_min, q_max=None, jobs=1):
    return _records("census", q_min=q_min, q_max=q_max or q_min, jobs=jobs)


def supersingular(p_min, p_max=None, jobs=1):
    return _records("supersingular", q_min=p_min, q_max=p_max or p_min, jobs=jobs)


def stats(q_min, q_max=None, jobs=1):
    return _records("stats", q_min=q_min, q_max=q_max or q_min, jobs=jobs)


def char2_table(n_min, n_max=None, beta=0, jobs=1):
    return _records("char2", n_min=n_min, n_max=n_max or n_min, beta=beta, jobs=jobs)
