"""
Renderers for command results: JSON through orjson, CSV through the csv
module and plain text through the jinja2 templates in ``qinv/templates``.

Every renderer is deterministic, so identical requests give byte-identical
output.
"""

import csv
import io
import os
from collections.abc import Mapping, Sequence
from typing import Any

import orjson
from jinja2 import Environment, FileSystemLoader, StrictUndefined
from pydantic import BaseModel

base_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

templates_dir = os.path.join(base_dir, "templates")

environment = Environment(
    loader=FileSystemLoader(templates_dir),
    undefined=StrictUndefined,
    keep_trailing_newline=True,
    trim_blocks=True,
    lstrip_blocks=True,
)

Payload = BaseModel | Sequence[BaseModel]

STAIRCASE_COLUMNS = ["m", "lower", "upper", "in_X", "phase"]


def to_data(payload: Payload) -> Any:
    """Plain JSON-compatible data of a model or a list of models."""
    if isinstance(payload, BaseModel):
        return payload.model_dump(mode="json")
    return [item.model_dump(mode="json") for item in payload]


def render_json(payload: Payload) -> str:
    return orjson.dumps(to_data(payload), option=orjson.OPT_SORT_KEYS).decode() + "\n"


def _cell(value: Any) -> Any:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    return value


def _csv_rows(command: str, data: Any) -> tuple[list[str], list[Mapping[str, Any]]]:
    if command == "hilbert":
        rows = [
            {
                "degree": d,
                "closed_form": value,
                "char0": None if data["char0"] is None else data["char0"][d],
                "empirical": (
                    None if data["empirical"] is None else data["empirical"][d]
                ),
            }
            for d, value in enumerate(data["closed_form"])
        ]
        return ["degree", "closed_form", "char0", "empirical"], rows
    if command == "verify":
        rows = data["degrees"]
        return ["degree", "dimension", "products", "rank", "expected"], rows
    if command == "staircase":
        columns = list(STAIRCASE_COLUMNS)
        if any(row.get("verified") is not None for row in data):
            columns.append("verified")
        return columns, data
    rows = data if isinstance(data, list) else [data]
    return (list(rows[0]) if rows else []), rows


def render_csv(command: str, payload: Payload) -> str:
    columns, rows = _csv_rows(command, to_data(payload))
    buffer = io.StringIO()
    writer = csv.DictWriter(
        buffer, fieldnames=columns, extrasaction="ignore", lineterminator="\n"
    )
    writer.writeheader()
    for row in rows:
        writer.writerow({key: _cell(row.get(key)) for key in columns})
    return buffer.getvalue()


def render_plain(command: str, payload: Payload, **context: Any) -> str:
    template = environment.get_template(f"{command}.txt.j2")
    return template.render(data=to_data(payload), **context)


def render(command: str, payload: Payload, fmt: str, **context: Any) -> str:
    """
    Render a command result in the requested format.

    Args:
        command: Command name; selects the template and the CSV layout.
        payload: Read schema (or list of them) produced by the command.
        fmt: ``plain``, ``json`` or ``csv``.
        **context: Extra template variables for plain output.

    Returns:
        str: The rendered text, newline-terminated.
    """
    if fmt == "json":
        return render_json(payload)
    if fmt == "csv":
        return render_csv(command, payload)
    return render_plain(command, payload, **context)
