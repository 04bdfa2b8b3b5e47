"""Pure-Python reference implementations used to freeze expected values.

Everything here is deliberately naive: full cartesian enumeration with
itertools over dicts, no arrays, no pruning, and no code shared with the
package engines. Tests derive expected values from these functions and
compare every engine against them.
"""

from __future__ import annotations

import itertools

__all__ = [
    "all_full_instances",
    "distinct_from",
    "oracle_completions",
    "oracle_count_distinct",
    "oracle_functional",
    "oracle_injective",
    "oracle_is_consistent",
    "oracle_minimal",
    "oracle_outcomes",
    "oracle_surjective",
    "oracle_surjective_in",
    "oracle_total",
    "instances_over",
]


def instances_over(network, scope):
    """All assignments over the scope as dicts, in lexicographic
    (set declaration, value declaration) order."""
    ordered = [vs for vs in network.sets if vs.id in set(scope)]
    for combo in itertools.product(*[vs.values for vs in ordered]):
        yield dict(zip([vs.id for vs in ordered], combo))


def all_full_instances(network):
    return instances_over(network, [vs.id for vs in network.sets])


def oracle_is_consistent(network, full):
    for rel in network.relations:
        row = tuple(full[sid] for sid in rel.in_sets + rel.out_sets)
        if row not in set(rel.rows):
            return False
    return True


def oracle_completions(network, partial):
    return [
        full for full in all_full_instances(network)
        if oracle_is_consistent(network, full)
        and all(full[k] == v for k, v in partial.items())
    ]


def _projection(full, target):
    return tuple(sorted((k, full[k]) for k in target))


def oracle_count_distinct(network, partial, target, mode):
    return distinct_from(oracle_completions(network, partial), target, mode)


def distinct_from(comps, target, mode):
    """Distinct count over already-enumerated completions."""
    if mode == "full":
        return len(comps)
    return len({_projection(f, target) for f in comps})


def oracle_outcomes(network, partial, target, mode):
    comps = oracle_completions(network, partial)
    if mode == "full":
        return {tuple(sorted(f.items())) for f in comps}
    return {_projection(f, target) for f in comps}


def oracle_functional(network, from_scope, to_scope, mode):
    return all(
        oracle_count_distinct(network, a, to_scope, mode) <= 1
        for a in instances_over(network, from_scope))


def oracle_total(network, from_scope):
    return all(
        len(oracle_completions(network, a)) >= 1
        for a in instances_over(network, from_scope))


def oracle_injective(network, from_scope, to_scope, mode):
    return all(
        oracle_count_distinct(network, b, from_scope, mode) <= 1
        for b in instances_over(network, to_scope))


def oracle_surjective(network, to_scope):
    return all(
        len(oracle_completions(network, b)) >= 1
        for b in instances_over(network, to_scope))


def oracle_surjective_in(network, param):
    return all(
        len(oracle_completions(network, {param: v})) >= 1
        for v in network.value_set(param).values)


def oracle_minimal(network, from_scope, to_scope, mode):
    """Direct outcome-set comparison — no reliance on count shortcuts."""
    for q in from_scope:
        rest = [sid for sid in from_scope if sid != q]
        separated = False
        for a in instances_over(network, from_scope):
            restricted = {k: v for k, v in a.items() if k in rest}
            kept = oracle_outcomes(network, a, to_scope, mode)
            dropped = oracle_outcomes(network, restricted, to_scope, mode)
            if kept != dropped:
                separated = True
                break
        if not separated:
            return False
    return True
