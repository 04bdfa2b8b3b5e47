"""Line-oriented text format for networks (``.semnet`` files).

Grammar, one statement per line::

    net <id>                          exactly once, first statement
    set <id> = <value> <value> ...    declares a value set
    rel <id> in <set-id> ... out <set-id> ...
    row <value> ...                   one row of the open relation,
                                      in-scope values then out-scope values
    end                               closes the open relation
    data <set-id> ...                 at most once; omitted = sources

``#`` starts a comment that runs to the end of the line; blank lines are
ignored. Identifiers match ``[A-Za-z_][A-Za-z0-9_-]*``. Values are either
bare tokens matching ``[A-Za-z0-9_.+-]+`` or double-quoted strings with
``\\"`` and ``\\\\`` escapes (so ``"c#4"`` is a value, not a comment).

Parsing is total: any input yields either a :class:`SemnetDocument` or a
flat list of :class:`ParseError` with 1-based line and column numbers,
never a partial network. Serialization is canonical (declaration order,
single spaces, values quoted only when not bare, LF line endings, trailing
newline) and ``parse(serialize(network))`` reproduces the network exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import SemnetError
from .model import Network, Relation, ValueSet, sources

__all__ = [
    "ParseError",
    "ParseFailure",
    "SemnetDocument",
    "parse",
    "serialize",
]

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_-]*\Z")
_BARE_VALUE_RE = re.compile(r"[A-Za-z0-9_.+-]+\Z")


@dataclass(frozen=True)
class ParseError:
    code: str
    message: str
    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.code}: {self.message}"


class ParseFailure(SemnetError):
    """Raised by :func:`parse` with every error found in the input."""

    def __init__(self, errors: list[ParseError]) -> None:
        super().__init__("; ".join(str(e) for e in errors))
        self.errors = list(errors)


@dataclass(frozen=True)
class SemnetDocument:
    """A parsed network plus source positions of its declarations.

    ``source_spans`` maps ``"net:<id>"``, ``"set:<id>"`` and ``"rel:<id>"``
    to the 1-based ``(line, column)`` of the declaring statement.
    """

    network: Network
    source_spans: dict[str, tuple[int, int]]


@dataclass(frozen=True)
class _Token:
    text: str
    column: int
    quoted: bool


def _tokenize(line: str, line_no: int, errors: list[ParseError]) -> list[_Token] | None:
    """Split one line into tokens; quote-aware so ``#`` can appear in values."""
    tokens: list[_Token] = []
    i = 0
    n = len(line)
    while i < n:
        ch = line[i]
        if ch in " \t":
            i += 1
            continue
        if ch == "#":
            break
        if ch == '"':
            start = i
            i += 1
            buf: list[str] = []
            while True:
                if i >= n:
                    errors.append(ParseError(
                        "UNTERMINATED_STRING", "quoted value never closed", line_no, start + 1))
                    return None
                ch = line[i]
                if ch == "\\":
                    if i + 1 >= n or line[i + 1] not in ('"', "\\"):
                        errors.append(ParseError(
                            "BAD_ESCAPE", "only \\\" and \\\\ escapes are allowed", line_no, i + 1))
                        return None
                    buf.append(line[i + 1])
                    i += 2
                    continue
                if ch == '"':
                    i += 1
                    break
                buf.append(ch)
                i += 1
            tokens.append(_Token("".join(buf), start + 1, True))
            continue
        start = i
        while i < n and line[i] not in ' \t#"':
            i += 1
        tokens.append(_Token(line[start:i], start + 1, False))
    return tokens


@dataclass
class _RawRelation:
    id: str
    line: int
    column: int
    in_tokens: list[_Token]
    out_tokens: list[_Token]
    row_statements: list[tuple[int, list[_Token]]]
    closed: bool = False


def parse(text: str) -> SemnetDocument:
    """Parse ``.semnet`` text; raises :class:`ParseFailure` on any error."""
    errors: list[ParseError] = []
    net_name: str | None = None
    net_span: tuple[int, int] | None = None
    raw_sets: list[tuple[str, list[_Token], int, int]] = []
    raw_rels: list[_RawRelation] = []
    data_tokens: list[_Token] | None = None
    data_line = 0
    open_rel: _RawRelation | None = None
    saw_statement = False

    for line_no, line in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(line.rstrip("\r"), line_no, errors)
        if tokens is None or not tokens:
            continue
        head = tokens[0]
        if head.quoted:
            errors.append(ParseError(
                "UNKNOWN_STATEMENT", "statement keyword expected", line_no, head.column))
            continue
        keyword = head.text
        args = tokens[1:]

        if keyword == "net":
            if saw_statement:
                code = "DUPLICATE_NET" if net_name is not None else "NET_NOT_FIRST"
                errors.append(ParseError(
                    code, "'net' must be the single first statement", line_no, head.column))
            saw_statement = True
            name = _take_identifier(args, "network name", line_no, head, errors)
            if name is not None and net_name is None:
                net_name = name.text
                net_span = (line_no, head.column)
            if name is not None and len(args) > 1:
                errors.append(ParseError(
                    "TRAILING_TOKENS", "unexpected tokens after network name",
                    line_no, args[1].column))
            continue

        if not saw_statement:
            errors.append(ParseError(
                "MISSING_NET", "first statement must be 'net <id>'", line_no, head.column))
            saw_statement = True  # report once

        if keyword == "set":
            if open_rel is not None:
                _unterminated(open_rel, errors)
                open_rel = None
            ident = _take_identifier(args, "set name", line_no, head, errors)
            if ident is None:
                continue
            if len(args) < 2 or args[1].quoted or args[1].text != "=":
                errors.append(ParseError(
                    "MISSING_EQUALS", "expected '=' after set name",
                    line_no, args[1].column if len(args) > 1 else head.column))
                continue
            values = args[2:]
            if not values:
                errors.append(ParseError(
                    "MISSING_VALUES", f"set {ident.text!r} declares no values",
                    line_no, args[1].column))
                continue
            if not _check_values(values, line_no, errors):
                continue
            raw_sets.append((ident.text, values, line_no, head.column))
        elif keyword == "rel":
            if open_rel is not None:
                _unterminated(open_rel, errors)
                open_rel = None
            ident = _take_identifier(args, "relation name", line_no, head, errors)
            if ident is None:
                continue
            rest = args[1:]
            if not rest or rest[0].quoted or rest[0].text != "in":
                errors.append(ParseError(
                    "MISSING_IN", "expected 'in' after relation name",
                    line_no, rest[0].column if rest else head.column))
                continue
            try:
                out_at = next(i for i, t in enumerate(rest) if not t.quoted and t.text == "out")
            except StopIteration:
                errors.append(ParseError(
                    "MISSING_OUT", "expected 'out' in relation header", line_no, head.column))
                continue
            in_tokens = rest[1:out_at]
            out_tokens = rest[out_at + 1:]
            if not _check_identifiers(in_tokens + out_tokens, line_no, errors):
                continue
            open_rel = _RawRelation(ident.text, line_no, head.column, in_tokens, out_tokens, [])
            raw_rels.append(open_rel)
        elif keyword == "row":
            if open_rel is None:
                errors.append(ParseError(
                    "STRAY_ROW", "'row' outside a rel ... end block", line_no, head.column))
                continue
            if not _check_values(args, line_no, errors):
                continue
            open_rel.row_statements.append((line_no, args))
        elif keyword == "end":
            if open_rel is None:
                errors.append(ParseError(
                    "STRAY_END", "'end' without an open rel block", line_no, head.column))
                continue
            if args:
                errors.append(ParseError(
                    "TRAILING_TOKENS", "unexpected tokens after 'end'", line_no, args[0].column))
            open_rel.closed = True
            open_rel = None
        elif keyword == "data":
            if open_rel is not None:
                _unterminated(open_rel, errors)
                open_rel = None
            if data_tokens is not None:
                errors.append(ParseError(
                    "DUPLICATE_DATA", "'data' may appear at most once", line_no, head.column))
                continue
            if not _check_identifiers(args, line_no, errors):
                continue
            data_tokens = args
            data_line = line_no
        else:
            errors.append(ParseError(
                "UNKNOWN_STATEMENT", f"unknown statement {keyword!r}", line_no, head.column))

    if open_rel is not None:
        _unterminated(open_rel, errors)
    if net_name is None and not errors:
        errors.append(ParseError("MISSING_NET", "input declares no network", 1, 1))

    # Resolution pass: ids, value membership, arity. Forward references to
    # later set declarations are allowed; declaration order is file order.
    spans: dict[str, tuple[int, int]] = {}
    if net_span is not None and net_name is not None:
        spans[f"net:{net_name}"] = net_span

    sets_by_id: dict[str, ValueSet] = {}
    value_sets: list[ValueSet] = []
    for sid, value_tokens, line_no, column in raw_sets:
        if sid in sets_by_id:
            errors.append(ParseError(
                "DUPLICATE_ID", f"set {sid!r} already declared", line_no, column))
            continue
        values: list[str] = []
        for tok in value_tokens:
            if tok.text in values:
                errors.append(ParseError(
                    "DUPLICATE_VALUE", f"value {tok.text!r} repeated in set {sid!r}",
                    line_no, tok.column))
            else:
                values.append(tok.text)
        vs = ValueSet(sid, tuple(values))
        sets_by_id[sid] = vs
        value_sets.append(vs)
        spans[f"set:{sid}"] = (line_no, column)

    relations: list[Relation] = []
    rel_ids: set[str] = set()
    for raw in raw_rels:
        if raw.id in rel_ids:
            errors.append(ParseError(
                "DUPLICATE_ID", f"relation {raw.id!r} already declared", raw.line, raw.column))
            continue
        rel_ids.add(raw.id)
        spans[f"rel:{raw.id}"] = (raw.line, raw.column)
        ok = True
        for tok in raw.in_tokens + raw.out_tokens:
            if tok.text not in sets_by_id:
                errors.append(ParseError(
                    "UNKNOWN_SET", f"relation {raw.id!r} references unknown set {tok.text!r}",
                    raw.line, tok.column))
                ok = False
        if not ok:
            continue
        scope = [t.text for t in raw.in_tokens] + [t.text for t in raw.out_tokens]
        rows: list[tuple[str, ...]] = []
        for row_line, row_tokens in raw.row_statements:
            if len(row_tokens) != len(scope):
                errors.append(ParseError(
                    "ROW_ARITY",
                    f"row has {len(row_tokens)} values, relation {raw.id!r} needs {len(scope)}",
                    row_line, row_tokens[0].column if row_tokens else 1))
                continue
            bad = False
            for sid, tok in zip(scope, row_tokens):
                if tok.text not in sets_by_id[sid].values:
                    errors.append(ParseError(
                        "UNKNOWN_VALUE",
                        f"value {tok.text!r} not in set {sid!r}", row_line, tok.column))
                    bad = True
            if bad:
                continue
            row = tuple(tok.text for tok in row_tokens)
            if row in rows:
                errors.append(ParseError(
                    "DUPLICATE_ROW", f"row repeated in relation {raw.id!r}",
                    row_line, row_tokens[0].column if row_tokens else 1))
                continue
            rows.append(row)
        relations.append(Relation(
            raw.id,
            tuple(t.text for t in raw.in_tokens),
            tuple(t.text for t in raw.out_tokens),
            tuple(rows)))

    data_ids: frozenset[str]
    if data_tokens is None:
        data_ids = frozenset()  # replaced by sources below
    else:
        seen: list[str] = []
        for tok in data_tokens:
            if tok.text not in sets_by_id:
                errors.append(ParseError(
                    "UNKNOWN_SET", f"data selection references unknown set {tok.text!r}",
                    data_line, tok.column))
            elif tok.text in seen:
                errors.append(ParseError(
                    "DUPLICATE_DATA_SET", f"set {tok.text!r} repeated in data selection",
                    data_line, tok.column))
            else:
                seen.append(tok.text)
        data_ids = frozenset(seen)

    if errors:
        raise ParseFailure(errors)

    network = Network(net_name or "", tuple(value_sets), tuple(relations), data_ids)
    if data_tokens is None:
        network = Network(network.name, network.sets, network.relations, sources(network))
    return SemnetDocument(network, spans)


def _unterminated(raw: _RawRelation, errors: list[ParseError]) -> None:
    errors.append(ParseError(
        "UNTERMINATED_REL", f"relation {raw.id!r} has no 'end'", raw.line, raw.column))


def _take_identifier(args: list[_Token], what: str, line_no: int, head: _Token,
                     errors: list[ParseError]) -> _Token | None:
    if not args:
        errors.append(ParseError("MISSING_IDENTIFIER", f"{what} expected", line_no, head.column))
        return None
    tok = args[0]
    if tok.quoted or not _IDENT_RE.match(tok.text):
        errors.append(ParseError(
            "BAD_IDENTIFIER", f"{tok.text!r} is not a valid identifier", line_no, tok.column))
        return None
    return tok


def _check_identifiers(tokens: list[_Token], line_no: int, errors: list[ParseError]) -> bool:
    ok = True
    for tok in tokens:
        if tok.quoted or not _IDENT_RE.match(tok.text):
            errors.append(ParseError(
                "BAD_IDENTIFIER", f"{tok.text!r} is not a valid identifier", line_no, tok.column))
            ok = False
    return ok


def _check_values(tokens: list[_Token], line_no: int, errors: list[ParseError]) -> bool:
    ok = True
    for tok in tokens:
        if not tok.quoted and not _BARE_VALUE_RE.match(tok.text):
            errors.append(ParseError(
                "BAD_VALUE", f"{tok.text!r} is not a bare value; quote it", line_no, tok.column))
            ok = False
    return ok


def _format_value(value: str) -> str:
    if _BARE_VALUE_RE.match(value):
        return value
    escaped = value.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def serialize(network: Network) -> str:
    """Render a network in canonical form (stable under parse/serialize)."""
    if not _IDENT_RE.match(network.name):
        raise ValueError(f"network name {network.name!r} is not a valid identifier")
    for vs in network.sets:
        for v in vs.values:
            if "\n" in v or "\r" in v:
                raise ValueError(f"value {v!r} in set {vs.id!r} contains a line break")
    lines = [f"net {network.name}"]
    for vs in network.sets:
        rendered = " ".join(_format_value(v) for v in vs.values)
        lines.append(f"set {vs.id} = {rendered}")
    for rel in network.relations:
        lines.append(" ".join(["rel", rel.id, "in", *rel.in_sets, "out", *rel.out_sets]))
        for row in rel.rows:
            lines.append("row " + " ".join(_format_value(v) for v in row))
        lines.append("end")
    data_ids = network.set_order(network.data_selection)
    if len(data_ids) != len(network.data_selection):
        missing = sorted(network.data_selection - set(data_ids))
        raise ValueError(f"data selection references undeclared sets {missing}")
    lines.append(("data " + " ".join(data_ids)).rstrip())
    return "\n".join(lines) + "\n"
