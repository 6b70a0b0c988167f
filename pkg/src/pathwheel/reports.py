"""Batch reports over fixed parameter grids, serialised deterministically.

Each builder returns a plain dict whose JSON form (``dumps``) depends only on
the inputs, never on the worker count or timing.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import lemmalab
from .search import confirm_ramsey, verify_upper_bound
from .witness import CROSS_CHECK_MAX_ORDER, clique_partition, verify_witness

CONFIRM_PAIRS = ((3, 7), (3, 8), (3, 9), (3, 10), (4, 9), (4, 10))


@dataclass(frozen=True)
class GridConfig:
    n_min: int = 2
    n_max: int = 12
    m_max: int = 40


@dataclass(frozen=True)
class LemmaConfig:
    exhaustive_order: int = 7
    random_count: int = 1000
    seed: int = 1


def _witness_row(pair):
    n, m = pair
    p = clique_partition(n, m)
    rep = verify_witness(n, m, p)
    return {
        "n": n,
        "m": m,
        "t": p.t,
        "parts": list(p.parts),
        "path_free": rep.path_free,
        "wheel_free": rep.wheel_free,
        "cross_checked": rep.cross_checked,
    }


def witness_report(cfg: GridConfig = GridConfig(), workers: int = 1) -> dict:
    pairs = [(n, m) for n in range(cfg.n_min, cfg.n_max + 1) for m in range(2 * n + 1, cfg.m_max + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_witness_row, pairs, chunksize=16))
    else:
        rows = [_witness_row(p) for p in pairs]
    return {"cross_check_max_order": CROSS_CHECK_MAX_ORDER, "rows": rows}


def confirm_report(pairs=CONFIRM_PAIRS, workers: int = 1) -> dict:
    rows = []
    for n, m in pairs:
        rep = confirm_ramsey(n, m, workers=workers)
        below = verify_upper_bound(n, m, rep.R - 1, workers=workers)
        rows.append({"confirm": rep.to_dict(), "below": below.to_dict()})
    return {"rows": rows}


def lemma_report(cfg: LemmaConfig = LemmaConfig(), workers: int = 1) -> dict:
    suites = []
    for lemma in lemmalab.EXHAUSTIVE_LEMMAS:
        corpus = lemmalab.Exhaustive(cfg.exhaustive_order)
        suites.append(lemmalab.run_suite(lemma, corpus, workers=workers).to_dict())
    for lemma in lemmalab.RANDOM_LEMMAS:
        corpus = lemmalab.Randomized(cfg.random_count, cfg.seed)
        suites.append(lemmalab.run_suite(lemma, corpus, workers=workers).to_dict())
    return {"suites": suites}


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)
