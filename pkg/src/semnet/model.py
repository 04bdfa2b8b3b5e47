"""Core data model: networks of finite value sets joined by extensional relations.

A network is a bipartite graph. Value-set nodes carry a finite, ordered list
of symbolic values. Relation nodes consume values from their ``in_sets`` and
emit values to their ``out_sets``; a relation's meaning is exactly its row
list, one row per admitted combination. A full instance assigns one value to
every set; it is consistent when its projection onto every relation's scope
is a row of that relation. The ``data_selection`` marks the sets that play
the role of stored data when properties are checked.

All types are immutable and hashable; all operations are pure. Constructors
accept structurally broken input (dangling references, cycles, duplicate
rows): :func:`validate` reports such defects instead of raising, so parsed
files can be diagnosed in full.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = [
    "ValueSet",
    "Relation",
    "Network",
    "Instance",
    "ValidationIssue",
    "ValidationReport",
    "StructuralFlags",
    "validate",
    "sources",
    "sinks",
    "structural_flags",
]


@dataclass(frozen=True)
class ValueSet:
    """A named, ordered, finite domain of symbolic values."""

    id: str
    values: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))


@dataclass(frozen=True)
class Relation:
    """An extensional relation between value sets.

    ``rows`` are tuples over ``in_sets + out_sets`` in that order. Scope
    lists keep declaration order; the set of rows is the whole semantics.
    """

    id: str
    in_sets: tuple[str, ...]
    out_sets: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "in_sets", tuple(self.in_sets))
        object.__setattr__(self, "out_sets", tuple(self.out_sets))
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))

    @property
    def scope(self) -> tuple[str, ...]:
        return self.in_sets + self.out_sets


@dataclass(frozen=True)
class Network:
    """A named collection of value sets, relations and a data selection."""

    name: str
    sets: tuple[ValueSet, ...]
    relations: tuple[Relation, ...]
    data_selection: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sets", tuple(self.sets))
        object.__setattr__(self, "relations", tuple(self.relations))
        object.__setattr__(self, "data_selection", frozenset(self.data_selection))

    def value_set(self, set_id: str) -> ValueSet:
        for vs in self.sets:
            if vs.id == set_id:
                return vs
        raise KeyError(set_id)

    def set_order(self, set_ids) -> tuple[str, ...]:
        """The given set-ids in declaration order."""
        wanted = set(set_ids)
        return tuple(vs.id for vs in self.sets if vs.id in wanted)


@dataclass(frozen=True)
class Instance:
    """A partial assignment of values to sets; the scope is the key set."""

    assignment: tuple[tuple[str, str], ...]

    def __init__(self, assignment=()) -> None:
        if isinstance(assignment, dict):
            items = tuple(sorted(assignment.items()))
        else:
            items = tuple(sorted(tuple(p) for p in assignment))
        object.__setattr__(self, "assignment", items)

    @property
    def scope(self) -> frozenset[str]:
        return frozenset(k for k, _ in self.assignment)

    def as_dict(self) -> dict[str, str]:
        return dict(self.assignment)

    def __getitem__(self, set_id: str) -> str:
        for k, v in self.assignment:
            if k == set_id:
                return v
        raise KeyError(set_id)

    def __contains__(self, set_id: str) -> bool:
        return any(k == set_id for k, _ in self.assignment)


@dataclass(frozen=True)
class ValidationIssue:
    code: str
    message: str
    location: str


@dataclass(frozen=True)
class ValidationReport:
    errors: tuple[ValidationIssue, ...] = field(default=())
    warnings: tuple[ValidationIssue, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.errors


@dataclass(frozen=True)
class StructuralFlags:
    is_acyclic: bool
    is_contiguous: bool


def validate(network: Network) -> ValidationReport:
    """Check a raw network; empty ``errors`` means the engine can use it."""
    errors: list[ValidationIssue] = []
    warnings: list[ValidationIssue] = []

    seen_sets: dict[str, ValueSet] = {}
    for vs in network.sets:
        loc = f"set {vs.id}"
        if vs.id in seen_sets:
            errors.append(ValidationIssue("DUPLICATE_ID", f"set id {vs.id!r} declared twice", loc))
            continue
        seen_sets[vs.id] = vs
        if not vs.values:
            errors.append(ValidationIssue("EMPTY_SET", f"set {vs.id!r} has no values", loc))
        dup = _first_duplicate(vs.values)
        if dup is not None:
            errors.append(ValidationIssue("DUPLICATE_VALUE", f"value {dup!r} repeated in set {vs.id!r}", loc))

    seen_rels: set[str] = set()
    for rel in network.relations:
        loc = f"rel {rel.id}"
        if rel.id in seen_rels:
            errors.append(ValidationIssue("DUPLICATE_ID", f"relation id {rel.id!r} declared twice", loc))
            continue
        seen_rels.add(rel.id)
        dangling = False
        for sid in rel.scope:
            if sid not in seen_sets:
                errors.append(ValidationIssue("UNKNOWN_SET", f"relation {rel.id!r} references unknown set {sid!r}", loc))
                dangling = True
        for part, ids in (("in", rel.in_sets), ("out", rel.out_sets)):
            dup = _first_duplicate(ids)
            if dup is not None:
                errors.append(ValidationIssue(
                    "DUPLICATE_SCOPE_SET", f"set {dup!r} repeated in {part}-scope of relation {rel.id!r}", loc))
                dangling = True
        overlap = set(rel.in_sets) & set(rel.out_sets)
        if overlap:
            errors.append(ValidationIssue(
                "IN_OUT_OVERLAP",
                f"sets {sorted(overlap)} appear on both sides of relation {rel.id!r}", loc))
        if not rel.rows:
            warnings.append(ValidationIssue("EMPTY_RELATION", f"relation {rel.id!r} admits no rows", loc))
        if dangling:
            continue  # row checks need resolvable scope sets
        arity = len(rel.scope)
        seen_rows: set[tuple[str, ...]] = set()
        for i, row in enumerate(rel.rows):
            rloc = f"rel {rel.id} row {i + 1}"
            if len(row) != arity:
                errors.append(ValidationIssue(
                    "MALFORMED_ROW", f"row has {len(row)} values, scope needs {arity}", rloc))
                continue
            bad = next((f"{v!r} not in set {s!r}" for s, v in zip(rel.scope, row)
                        if v not in seen_sets[s].values), None)
            if bad is not None:
                errors.append(ValidationIssue("MALFORMED_ROW", bad, rloc))
                continue
            if row in seen_rows:
                errors.append(ValidationIssue("DUPLICATE_ROW", f"row {row!r} repeated", rloc))
            seen_rows.add(row)

    for sid in sorted(network.data_selection):
        if sid not in seen_sets:
            errors.append(ValidationIssue(
                "DATA_UNKNOWN_SET", f"data selection references unknown set {sid!r}", "data"))
    if not network.data_selection:
        warnings.append(ValidationIssue("EMPTY_DATA", "data selection is empty", "data"))

    cycle = _find_cycle(network)
    if cycle is not None:
        errors.append(ValidationIssue(
            "CYCLE", "cyclic dependency: " + " -> ".join(cycle), "network"))

    if not _is_contiguous(network):
        warnings.append(ValidationIssue(
            "NOT_CONTIGUOUS", "network splits into disconnected components", "network"))

    return ValidationReport(tuple(errors), tuple(warnings))


def sources(network: Network) -> frozenset[str]:
    """Sets no relation writes to."""
    written = {sid for rel in network.relations for sid in rel.out_sets}
    return frozenset(vs.id for vs in network.sets if vs.id not in written)


def sinks(network: Network) -> frozenset[str]:
    """Sets no relation reads from."""
    read = {sid for rel in network.relations for sid in rel.in_sets}
    return frozenset(vs.id for vs in network.sets if vs.id not in read)


def structural_flags(network: Network) -> StructuralFlags:
    return StructuralFlags(
        is_acyclic=_find_cycle(network) is None,
        is_contiguous=_is_contiguous(network),
    )


def _first_duplicate(items) -> str | None:
    seen: set[str] = set()
    for it in items:
        if it in seen:
            return it
        seen.add(it)
    return None


def _find_cycle(network: Network) -> list[str] | None:
    """Return a closed node path (sets and relations alternating) or None.

    Edges run set -> relation for inputs and relation -> set for outputs.
    """
    edges: dict[str, list[str]] = {}
    for rel in network.relations:
        rnode = f"rel:{rel.id}"
        for sid in rel.in_sets:
            edges.setdefault(f"set:{sid}", []).append(rnode)
        edges.setdefault(rnode, []).extend(f"set:{sid}" for sid in rel.out_sets)

    WHITE, GRAY, BLACK = 0, 1, 2
    color: dict[str, int] = {}
    stack_path: list[str] = []

    def visit(node: str) -> list[str] | None:
        color[node] = GRAY
        stack_path.append(node)
        for nxt in edges.get(node, ()):
            c = color.get(nxt, WHITE)
            if c == GRAY:
                i = stack_path.index(nxt)
                return stack_path[i:] + [nxt]
            if c == WHITE:
                found = visit(nxt)
                if found is not None:
                    return found
        stack_path.pop()
        color[node] = BLACK
        return None

    for node in list(edges):
        if color.get(node, WHITE) == WHITE:
            found = visit(node)
            if found is not None:
                return [n.split(":", 1)[1] for n in found]
    return None


def _is_contiguous(network: Network) -> bool:
    """Weak connectivity; isolated sets count only if selected as data."""
    in_relation = {sid for rel in network.relations for sid in rel.scope}
    nodes: set[str] = {f"rel:{rel.id}" for rel in network.relations}
    for vs in network.sets:
        if vs.id in in_relation or vs.id in network.data_selection:
            nodes.add(f"set:{vs.id}")
    if len(nodes) <= 1:
        return True

    neigh: dict[str, set[str]] = {n: set() for n in nodes}
    for rel in network.relations:
        rnode = f"rel:{rel.id}"
        for sid in rel.scope:
            snode = f"set:{sid}"
            if snode in neigh:
                neigh[rnode].add(snode)
                neigh[snode].add(rnode)

    start = next(iter(sorted(nodes)))
    seen = {start}
    todo = [start]
    while todo:
        for nxt in neigh[todo.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return len(seen) == len(nodes)
