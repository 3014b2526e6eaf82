"""Pure-numpy deposition kernels: the fallback backend.

Trials never interact, so the event loop can run in lockstep across the
whole batch: iteration k applies event k of every trial that still has one,
using fancy indexing instead of a per-trial Python loop.  Outputs are
bit-identical to the numba backend.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "numpy"


def _neighborhood_max(tops: np.ndarray, rows: np.ndarray, x: np.ndarray) -> np.ndarray:
    left = tops[rows, x - 1]
    mid = tops[rows, x]
    right = tops[rows, x + 1]
    return np.maximum(np.maximum(left, mid), right)


def deposit_record(times, pos, n_events, q_idx, r_cap, dep_time, tops):
    """Vectorized equivalent of the numba ``deposit_record``; see there."""
    n_trials, max_events = pos.shape
    all_rows = np.arange(n_trials)
    for k in range(max_events):
        rows = all_rows[k < n_events]
        if rows.size == 0:
            break
        x = pos[rows, k] + 1
        h = _neighborhood_max(tops, rows, x) + 1
        tops[rows, x] = h
        hit = (x == q_idx) & (h <= r_cap)
        if np.any(hit):
            dep_time[rows[hit], h[hit]] = times[rows[hit], k]


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
    """Vectorized equivalent of the numba ``run_stats_record``; see there."""
    n_trials, max_events = pos.shape
    cap = renew_gap.shape[1]
    all_rows = np.arange(n_trials)
    n_left = np.zeros(n_trials, dtype=np.int64)
    n_right = np.zeros(n_trials, dtype=np.int64)
    prev_top = np.zeros(n_trials, dtype=np.int64)
    for k in range(max_events):
        rows = all_rows[k < n_events]
        if rows.size == 0:
            break
        x = pos[rows, k] + 1
        h = _neighborhood_max(tops, rows, x) + 1
        tops[rows, x] = h

        n_left[rows[x == 1]] += 1
        n_right[rows[x == 3]] += 1

        center = x == 2
        if np.any(center):
            c_rows = rows[center]
            c_h = h[center]
            gap = c_h - prev_top[c_rows] - 1
            widest = np.maximum(n_left[c_rows], n_right[c_rows])
            mismatch[c_rows] += gap != widest

            slot = renew_count[c_rows]
            keep = slot < cap
            kept = c_rows[keep]
            renew_gap[kept, slot[keep]] = gap[keep]
            renew_border[kept, slot[keep]] = n_left[kept] + n_right[kept]
            renew_high[kept, slot[keep]] = c_h[keep]
            renew_count[kept] += 1

            prev_top[c_rows] = c_h
            n_left[c_rows] = 0
            n_right[c_rows] = 0


def warmup() -> None:
    """No compilation step; present for backend symmetry."""
