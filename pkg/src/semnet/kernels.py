"""Backtracking join kernels over encoded networks.

Each kernel runs a depth-first search over the sets in declaration order,
assigning one value per level and checking every relation as soon as its
scope is fully assigned (its trigger level). Enumeration order is therefore
lexicographic in (set declaration order, value declaration order), which
the rest of the package relies on for deterministic witnesses.

The kernels are written in nopython-compatible form: by default they are
compiled with numba's ``@njit(cache=True)``. Setting the environment
variable ``SEMNET_NO_NUMBA`` to ``1``/``true``/``yes``/``on`` before import
selects the interpreted implementations instead; results are identical.
The pure-Python originals stay importable as ``py_kernels`` either way.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "JIT_ENABLED",
    "collect_completions",
    "collect_distinct_reps",
    "count_completions",
    "count_distinct_capped",
    "py_kernels",
]


def _count_completions(sizes, fixed, scope_flat, scope_strides, scope_start,
                       rowkeys_flat, rowkeys_start, trig_rels, trig_start, cap):
    """Count consistent completions of ``fixed``; stop early at ``cap`` > 0."""
    n = sizes.shape[0]
    cur = np.zeros(n, dtype=np.int64)
    trial = np.zeros(n, dtype=np.int64)
    count = 0
    level = 0
    while level >= 0:
        if fixed[level] >= 0:
            base = fixed[level]
            width = 1
        else:
            base = 0
            width = sizes[level]
        t = trial[level]
        advanced = False
        while t < width:
            cur[level] = base + t
            t += 1
            ok = True
            for ti in range(trig_start[level], trig_start[level + 1]):
                r = trig_rels[ti]
                key = 0
                for j in range(scope_start[r], scope_start[r + 1]):
                    key += cur[scope_flat[j]] * scope_strides[j]
                lo = rowkeys_start[r]
                hi = rowkeys_start[r + 1]
                found = False
                while lo < hi:
                    mid = (lo + hi) // 2
                    k = rowkeys_flat[mid]
                    if k == key:
                        found = True
                        break
                    if k < key:
                        lo = mid + 1
                    else:
                        hi = mid
                if not found:
                    ok = False
                    break
            if ok:
                advanced = True
                break
        trial[level] = t
        if not advanced:
            level -= 1
            continue
        if level == n - 1:
            count += 1
            if cap > 0 and count >= cap:
                return count
        else:
            level += 1
            trial[level] = 0
    return count


def _collect_completions(sizes, fixed, scope_flat, scope_strides, scope_start,
                         rowkeys_flat, rowkeys_start, trig_rels, trig_start, out):
    """Write the first ``out.shape[0]`` completions into ``out``; return count."""
    n = sizes.shape[0]
    if out.shape[0] == 0:
        return 0
    cur = np.zeros(n, dtype=np.int64)
    trial = np.zeros(n, dtype=np.int64)
    count = 0
    level = 0
    while level >= 0:
        if fixed[level] >= 0:
            base = fixed[level]
            width = 1
        else:
            base = 0
            width = sizes[level]
        t = trial[level]
        advanced = False
        while t < width:
            cur[level] = base + t
            t += 1
            ok = True
            for ti in range(trig_start[level], trig_start[level + 1]):
                r = trig_rels[ti]
                key = 0
                for j in range(scope_start[r], scope_start[r + 1]):
                    key += cur[scope_flat[j]] * scope_strides[j]
                lo = rowkeys_start[r]
                hi = rowkeys_start[r + 1]
                found = False
                while lo < hi:
                    mid = (lo + hi) // 2
                    k = rowkeys_flat[mid]
                    if k == key:
                        found = True
                        break
                    if k < key:
                        lo = mid + 1
                    else:
                        hi = mid
                if not found:
                    ok = False
                    break
            if ok:
                advanced = True
                break
        trial[level] = t
        if not advanced:
            level -= 1
            continue
        if level == n - 1:
            for i in range(n):
                out[count, i] = cur[i]
            count += 1
            if count >= out.shape[0]:
                return count
        else:
            level += 1
            trial[level] = 0
    return count


def _count_distinct_capped(sizes, fixed, scope_flat, scope_strides, scope_start,
                           rowkeys_flat, rowkeys_start, trig_rels, trig_start,
                           target_strides, seen):
    """Count distinct target projections of completions, up to ``len(seen)``.

    ``target_strides`` maps a completion to its projection key; ``seen`` is
    scratch for keys already met. Intended for small caps or small targets:
    the membership scan is linear in the number of distinct keys so far.
    """
    n = sizes.shape[0]
    if seen.shape[0] == 0:
        return 0
    cur = np.zeros(n, dtype=np.int64)
    trial = np.zeros(n, dtype=np.int64)
    nseen = 0
    level = 0
    while level >= 0:
        if fixed[level] >= 0:
            base = fixed[level]
            width = 1
        else:
            base = 0
            width = sizes[level]
        t = trial[level]
        advanced = False
        while t < width:
            cur[level] = base + t
            t += 1
            ok = True
            for ti in range(trig_start[level], trig_start[level + 1]):
                r = trig_rels[ti]
                key = 0
                for j in range(scope_start[r], scope_start[r + 1]):
                    key += cur[scope_flat[j]] * scope_strides[j]
                lo = rowkeys_start[r]
                hi = rowkeys_start[r + 1]
                found = False
                while lo < hi:
                    mid = (lo + hi) // 2
                    k = rowkeys_flat[mid]
                    if k == key:
                        found = True
                        break
                    if k < key:
                        lo = mid + 1
                    else:
                        hi = mid
                if not found:
                    ok = False
                    break
            if ok:
                advanced = True
                break
        trial[level] = t
        if not advanced:
            level -= 1
            continue
        if level == n - 1:
            pkey = 0
            for i in range(n):
                pkey += cur[i] * target_strides[i]
            new = True
            for s in range(nseen):
                if seen[s] == pkey:
                    new = False
                    break
            if new:
                seen[nseen] = pkey
                nseen += 1
                if nseen >= seen.shape[0]:
                    return nseen
        else:
            level += 1
            trial[level] = 0
    return nseen


def _collect_distinct_reps(sizes, fixed, scope_flat, scope_strides, scope_start,
                           rowkeys_flat, rowkeys_start, trig_rels, trig_start,
                           target_strides, seen, reps):
    """Collect the first completion for each of the first ``len(seen)``
    distinct target projections, in order of first appearance."""
    n = sizes.shape[0]
    if seen.shape[0] == 0:
        return 0
    cur = np.zeros(n, dtype=np.int64)
    trial = np.zeros(n, dtype=np.int64)
    nseen = 0
    level = 0
    while level >= 0:
        if fixed[level] >= 0:
            base = fixed[level]
            width = 1
        else:
            base = 0
            width = sizes[level]
        t = trial[level]
        advanced = False
        while t < width:
            cur[level] = base + t
            t += 1
            ok = True
            for ti in range(trig_start[level], trig_start[level + 1]):
                r = trig_rels[ti]
                key = 0
                for j in range(scope_start[r], scope_start[r + 1]):
                    key += cur[scope_flat[j]] * scope_strides[j]
                lo = rowkeys_start[r]
                hi = rowkeys_start[r + 1]
                found = False
                while lo < hi:
                    mid = (lo + hi) // 2
                    k = rowkeys_flat[mid]
                    if k == key:
                        found = True
                        break
                    if k < key:
                        lo = mid + 1
                    else:
                        hi = mid
                if not found:
                    ok = False
                    break
            if ok:
                advanced = True
                break
        trial[level] = t
        if not advanced:
            level -= 1
            continue
        if level == n - 1:
            pkey = 0
            for i in range(n):
                pkey += cur[i] * target_strides[i]
            new = True
            for s in range(nseen):
                if seen[s] == pkey:
                    new = False
                    break
            if new:
                seen[nseen] = pkey
                for i in range(n):
                    reps[nseen, i] = cur[i]
                nseen += 1
                if nseen >= seen.shape[0]:
                    return nseen
        else:
            level += 1
            trial[level] = 0
    return nseen


py_kernels = {
    "count_completions": _count_completions,
    "collect_completions": _collect_completions,
    "count_distinct_capped": _count_distinct_capped,
    "collect_distinct_reps": _collect_distinct_reps,
}


def _no_numba_requested() -> bool:
    return os.environ.get("SEMNET_NO_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}


JIT_ENABLED = False
count_completions = _count_completions
collect_completions = _collect_completions
count_distinct_capped = _count_distinct_capped
collect_distinct_reps = _collect_distinct_reps

if not _no_numba_requested():
    try:
        from numba import njit
    except ImportError:
        njit = None
    if njit is not None:
        count_completions = njit(cache=True)(_count_completions)
        collect_completions = njit(cache=True)(_collect_completions)
        count_distinct_capped = njit(cache=True)(_count_distinct_capped)
        collect_distinct_reps = njit(cache=True)(_collect_distinct_reps)
        JIT_ENABLED = True
