"""Multiplication counts and wall-time scaling of the sequence kernel over GF(2)."""

from __future__ import annotations

import gc
import random
import time
from dataclasses import dataclass

from .field import CountingField, gf2
from .sequence import SequenceRecord, viable_pair_seq

DEFAULT_SIZES = (1024, 2048, 4096)


def mult_bound(n):
    """2(1+n) + n(n+1)/2."""
    return 2 * (1 + n) + n * (n + 1) // 2


def random_sequence(n, rng, field=None):
    field = field or gf2()
    terms = [field.random(rng) for _ in range(n)]
    terms[0] = field.one
    return SequenceRecord(field, tuple(terms))


@dataclass
class BenchRow:
    n: int
    mults: int
    bound: int
    seconds: float
    lc: int


def count_mults(s):
    cf = CountingField(s.field)
    viable_pair_seq(s, field=cf)
    return cf.mults


def _time_once(s):
    enabled = gc.isenabled()
    gc.disable()
    try:
        t0 = time.perf_counter()
        viable_pair_seq(s)
        return time.perf_counter() - t0
    finally:
        if enabled:
            gc.enable()


def time_kernel(s, repeats=5):
    """Best wall time of ``repeats`` runs, with the garbage collector paused."""
    return min(_time_once(s) for _ in range(repeats))


def run_bench(sizes=DEFAULT_SIZES, seed=0, repeats=15):
    """Counts and best-of-``repeats`` timings.

    Sizes are timed round-robin so that drift in machine load hits every
    size alike instead of skewing the ratios.
    """
    seqs = [random_sequence(n, random.Random(f"{seed}:{n}")) for n in sizes]
    best = [float("inf")] * len(seqs)
    for _ in range(repeats):
        for k, s in enumerate(seqs):
            best[k] = min(best[k], _time_once(s))
    rows = []
    for s, t in zip(seqs, best):
        lc = viable_pair_seq(s).f1.degree
        rows.append(BenchRow(s.n, count_mults(s), mult_bound(s.n), t, lc))
    return rows


def ratios(rows):
    """time(2n)/time(n) for consecutive doubling sizes."""
    by_n = {r.n: r for r in rows}
    return {(r.n, 2 * r.n): by_n[2 * r.n].seconds / r.seconds for r in rows if 2 * r.n in by_n}
