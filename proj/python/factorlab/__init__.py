"""Factorization experiments in the monoid S = <a, b | b a^2 b = a^2, a^4 b = b a^4>,
its semigroup algebra, Ore extensions and a PI matrix ring."""

import json
import os

from ._core import (
    BudgetExceeded,
    InputError,
    NormalForm,
    accp_strict_inclusions,
    alg,
    classify_growth,
    count_elements_by_length,
    equal,
    growth,
    in_all_sbn,
    is_atom,
    left_quotient,
    length_set,
    normalize,
    ore_mul,
    pi_peel_chain,
    run_cli,
    s_growth_by_words,
)
from . import _core


def skew_check(config="weyl", samples=1000, seed=1, threads=None):
    """Random check of the skew length laws; returns the JSON report as a dict."""
    if threads is None:
        threads = int(os.environ.get("FACTORLAB_THREADS", "0")) or (os.cpu_count() or 1)
    return json.loads(_core._skew_check_json(config, samples, seed, threads))


def filt_check(samples=500, seed=1):
    """Additivity of the Weyl filtration degree; returns the JSON report as a dict."""
    return json.loads(_core._filt_check_json(samples, seed))


__all__ = [
    "BudgetExceeded",
    "InputError",
    "NormalForm",
    "accp_strict_inclusions",
    "alg",
    "classify_growth",
    "count_elements_by_length",
    "equal",
    "filt_check",
    "growth",
    "in_all_sbn",
    "is_atom",
    "left_quotient",
    "length_set",
    "normalize",
    "ore_mul",
    "pi_peel_chain",
    "run_cli",
    "s_growth_by_words",
    "skew_check",
]
