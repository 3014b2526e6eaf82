"""Numba-compiled deposition kernels (the hot inner loops).

Same contracts as :mod:`parkscreen._kernels_numpy`; the two backends must
produce bit-identical outputs for identical inputs.
"""

from __future__ import annotations

import numpy as np
from numba import njit

BACKEND_NAME = "numba"


@njit(cache=True, nogil=True)
def deposit_record(times, pos, n_events, q_idx, r_cap, dep_time, tops):
    """Replay deposition events, recording when one column's layers fill.

    times, pos : (B, E) padded per-trial event streams (pos holds active
        column indices 0..m-1; entries past n_events[b] are ignored).
    q_idx : ghost-based index of the watched column (active index + 1).
    dep_time : (B, r_cap+1) output, prefilled +inf; dep_time[b, h] becomes
        the deposition time of the watched column's layer h.
    tops : (B, m+2) output, prefilled 0; final column tops, ghosts included.
    """
    n_trials = n_events.shape[0]
    for b in range(n_trials):
        for k in range(n_events[b]):
            x = pos[b, k] + 1
            h = tops[b, x - 1]
            if tops[b, x] > h:
                h = tops[b, x]
            if tops[b, x + 1] > h:
                h = tops[b, x + 1]
            h += 1
            tops[b, x] = h
            if x == q_idx and h <= r_cap:
                dep_time[b, h] = times[b, k]


@njit(cache=True, nogil=True)
def run_stats_record(
    pos,
    n_events,
    renew_gap,
    renew_border,
    renew_high,
    renew_count,
    tops,
    mismatch,
):
    """Replay 3-column trials, logging one row per center-column renewal.

    For each center arrival the empty run is measured twice: from the layer
    difference and from the per-border arrival counters (their maximum).
    Disagreements are tallied in ``mismatch`` (must stay zero).  Renewals
    beyond the per-trial buffer capacity are dropped deterministically.

    renew_gap/renew_border/renew_high : (B, cap) int64 outputs.
    renew_count : (B,) number of renewals recorded per trial.
    tops : (B, 5) int64 output, prefilled 0.
    mismatch : (B,) int64 output, prefilled 0.
    """
    n_trials = n_events.shape[0]
    cap = renew_gap.shape[1]
    for b in range(n_trials):
        n_left = 0
        n_right = 0
        prev_top = 0
        for k in range(n_events[b]):
            x = pos[b, k] + 1
            h = tops[b, x - 1]
            if tops[b, x] > h:
                h = tops[b, x]
            if tops[b, x + 1] > h:
                h = tops[b, x + 1]
            h += 1
            tops[b, x] = h
            if x == 1:
                n_left += 1
            elif x == 3:
                n_right += 1
            else:
                gap = h - prev_top - 1
                widest = n_left if n_left > n_right else n_right
                if gap != widest:
                    mismatch[b] += 1
                j = renew_count[b]
                if j < cap:
                    renew_gap[b, j] = gap
                    renew_border[b, j] = n_left + n_right
                    renew_high[b, j] = h
                    renew_count[b] = j + 1
                prev_top = h
                n_left = 0
                n_right = 0


def warmup() -> None:
    """Trigger JIT compilation on tiny inputs (first call is the slow one)."""
    times = np.zeros((1, 1))
    pos = np.zeros((1, 1), dtype=np.int64)
    n_events = np.ones(1, dtype=np.int64)
    dep = np.full((1, 2), np.inf)
    tops = np.zeros((1, 5), dtype=np.int64)
    deposit_record(times, pos, n_events, 2, 1, dep, tops)
    run_stats_record(
        pos,
        n_events,
        np.zeros((1, 4), dtype=np.int64),
        np.zeros((1, 4), dtype=np.int64),
        np.zeros((1, 4), dtype=np.int64),
        np.zeros(1, dtype=np.int64),
        np.zeros((1, 5), dtype=np.int64),
        np.zeros(1, dtype=np.int64),
    )
