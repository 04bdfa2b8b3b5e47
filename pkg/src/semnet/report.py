"""Render verdicts as human-readable text or a stable machine document.

The machine document is the tool's public API surface: keys are sorted,
arrays keep canonical (declaration/check) order, indentation is two
spaces, and there is a trailing newline — byte-identical across runs and
engines, so it can serve as a golden file.
"""

from __future__ import annotations

import json
from typing import Iterable

from .model import Instance
from .properties import Verdict, Witness

__all__ = ["render_json", "render_text"]


def _format_instance(instance: Instance) -> str:
    if not instance.assignment:
        return "{}"
    return "{" + ", ".join(f"{k}={v}" for k, v in instance.assignment) + "}"


def _format_witness(witness: Witness) -> str:
    evidence = ", ".join(_format_instance(e) for e in witness.evidence)
    return (f"  witness: {_format_instance(witness.anchor)}"
            f" -> [{evidence}] ({witness.note})")


def render_text(verdicts: Iterable[Verdict]) -> str:
    """One line per verdict, with indented witness lines after failures."""
    lines: list[str] = []
    for verdict in verdicts:
        q = verdict.query
        name = q.kind.value.upper()
        if q.param is not None:
            name += f"({q.param})"
        lines.append(
            f"{name} from={{{','.join(q.from_scope)}}}"
            f" to={{{','.join(q.to_scope)}}} mode={q.mode.value}"
            f" : {'HOLDS' if verdict.holds else 'FAILS'}")
        for witness in verdict.witnesses:
            lines.append(_format_witness(witness))
    if not lines:
        return ""
    return "\n".join(lines) + "\n"


def _witness_doc(witness: Witness) -> dict:
    return {
        "anchor": witness.anchor.as_dict(),
        "evidence": [e.as_dict() for e in witness.evidence],
        "note": witness.note,
    }


def render_json(network_name: str, direction: str, mode: str,
                verdicts: Iterable[Verdict]) -> str:
    """The machine-readable report document as a JSON string."""
    doc = {
        "network": network_name,
        "direction": direction,
        "mode": mode,
        "verdicts": [
            {
                "property": v.query.kind.value,
                "from": list(v.query.from_scope),
                "to": list(v.query.to_scope),
                "param": v.query.param,
                "holds": v.holds,
                "witnesses": [_witness_doc(w) for w in v.witnesses],
                "instances_checked": v.instances_checked,
            }
            for v in verdicts
        ],
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
