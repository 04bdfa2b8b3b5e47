"""Integer encoding of networks for the array-based engines.

Sets become contiguous indices in declaration order, values become indices
into their set. Each relation is stored as a sorted array of row keys,
where a row key is the mixed-radix encoding of the row's value indices
over the relation's scope. Relations are grouped by their trigger level:
the highest set index in their scope, i.e. the point during declaration-
order search at which the relation becomes fully assigned and checkable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidNetworkError, ScopeMismatchError
from .model import Instance, Network, validate

__all__ = ["EncodedNetwork", "encode"]

# Row keys and space sizes are int64; reject scopes whose product could wrap.
_KEY_LIMIT = 2**62


@dataclass(frozen=True)
class EncodedNetwork:
    network: Network
    set_ids: tuple[str, ...]
    set_index: dict[str, int]
    sizes: np.ndarray           # (n_sets,) domain size per set
    value_index: tuple[dict[str, int], ...]
    scope_flat: np.ndarray      # set indices, all relation scopes concatenated
    scope_strides: np.ndarray   # mixed-radix stride per scope position
    scope_start: np.ndarray     # (n_rels + 1,) slice bounds into scope_flat
    rowkeys_flat: np.ndarray    # sorted row keys, all relations concatenated
    rowkeys_start: np.ndarray   # (n_rels + 1,) slice bounds into rowkeys_flat
    trig_rels: np.ndarray       # relation indices grouped by trigger level
    trig_start: np.ndarray      # (n_sets + 1,) slice bounds into trig_rels

    @property
    def n_sets(self) -> int:
        return len(self.set_ids)

    def fixed_from(self, partial: Instance) -> np.ndarray:
        """Value index per set, -1 where the partial leaves the set free."""
        fixed = np.full(self.n_sets, -1, dtype=np.int64)
        for sid, value in partial.assignment:
            if sid not in self.set_index:
                raise ScopeMismatchError(f"instance assigns unknown set {sid!r}")
            i = self.set_index[sid]
            vi = self.value_index[i].get(value)
            if vi is None:
                raise ScopeMismatchError(f"value {value!r} not in set {sid!r}")
            fixed[i] = vi
        return fixed

    def space_size(self, fixed: np.ndarray) -> int:
        """Number of candidate full instances extending the fixed assignment."""
        total = 1
        for i in range(self.n_sets):
            if fixed[i] < 0:
                total *= int(self.sizes[i])
        return total

    def instance_from_row(self, row: np.ndarray) -> Instance:
        return Instance({
            sid: self.network.sets[i].values[int(row[i])]
            for i, sid in enumerate(self.set_ids)
        })

    def target_strides(self, target: frozenset[str]) -> tuple[np.ndarray, int]:
        """Projection-key strides over the target sets; 0 elsewhere.

        Returns the stride vector and the size of the target value space.
        """
        strides = np.zeros(self.n_sets, dtype=np.int64)
        stride = 1
        for sid in reversed(self.network.set_order(target)):
            i = self.set_index[sid]
            strides[i] = stride
            stride *= int(self.sizes[i])
            if stride > _KEY_LIMIT:
                raise ScopeMismatchError("projection target space is too large to key")
        return strides, stride


@lru_cache(maxsize=64)
def encode(network: Network) -> EncodedNetwork:
    """Encode a network, validating it first."""
    report = validate(network)
    if not report.ok:
        raise InvalidNetworkError(report.errors)

    set_ids = tuple(vs.id for vs in network.sets)
    set_index = {sid: i for i, sid in enumerate(set_ids)}
    sizes = np.array([len(vs.values) for vs in network.sets], dtype=np.int64)
    value_index = tuple({v: i for i, v in enumerate(vs.values)} for vs in network.sets)

    scope_flat: list[int] = []
    scope_strides: list[int] = []
    scope_start = [0]
    rowkeys_flat: list[int] = []
    rowkeys_start = [0]
    triggers: list[list[int]] = [[] for _ in range(max(len(set_ids), 1))]

    for r, rel in enumerate(network.relations):
        scope = [set_index[sid] for sid in rel.scope]
        strides = [0] * len(scope)
        stride = 1
        for j in range(len(scope) - 1, -1, -1):
            strides[j] = stride
            stride *= int(sizes[scope[j]])
        if stride > _KEY_LIMIT:
            raise ScopeMismatchError(f"relation {rel.id!r} scope space is too large to key")
        scope_flat.extend(scope)
        scope_strides.extend(strides)
        scope_start.append(len(scope_flat))
        keys = sorted(
            sum(value_index[s][v] * st for s, st, v in zip(scope, strides, row))
            for row in rel.rows
        )
        rowkeys_flat.extend(keys)
        rowkeys_start.append(len(rowkeys_flat))
        trigger = max(scope) if scope else 0
        triggers[trigger].append(r)

    trig_rels: list[int] = []
    trig_start = [0]
    for level_rels in triggers[: max(len(set_ids), 1)]:
        trig_rels.extend(level_rels)
        trig_start.append(len(trig_rels))
    while len(trig_start) < len(set_ids) + 1:
        trig_start.append(len(trig_rels))

    return EncodedNetwork(
        network=network,
        set_ids=set_ids,
        set_index=set_index,
        sizes=sizes,
        value_index=value_index,
        scope_flat=np.array(scope_flat, dtype=np.int64),
        scope_strides=np.array(scope_strides, dtype=np.int64),
        scope_start=np.array(scope_start, dtype=np.int64),
        rowkeys_flat=np.array(rowkeys_flat, dtype=np.int64),
        rowkeys_start=np.array(rowkeys_start, dtype=np.int64),
        trig_rels=np.array(trig_rels, dtype=np.int64),
        trig_start=np.array(trig_start, dtype=np.int64),
    )
