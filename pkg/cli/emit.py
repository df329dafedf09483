"""
Artifact writers: CSV through pandas, JSON through pydantic, DOT as text
Every value is rendered to a string first so output bytes never depend on dtype inference.
"""
import sys
from decimal import Decimal
from typing import Any, Dict, List, Optional, Sequence, Type

import pandas as pd
from pydantic import BaseModel, TypeAdapter

from shared.numeric import render_decimal


def render_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Decimal):
        return render_decimal(value)
    return str(value)


def csv_text(rows: Sequence[Dict[str, Any]], columns: List[str]) -> str:
    frame = pd.DataFrame([[render_cell(row.get(c)) for c in columns] for row in rows], columns=columns, dtype=str)
    return frame.to_csv(index=False, lineterminator="\n")


def json_text(model: BaseModel) -> str:
    return model.model_dump_json(indent=2) + "\n"


def json_list_text(models: Sequence[BaseModel], model_type: Type[BaseModel]) -> str:
    """A JSON array of reports, one adapter for the whole list."""
    return TypeAdapter(List[model_type]).dump_json(list(models), indent=2).decode() + "\n"


def write_artifact(text: str, path: Optional[str] = None) -> None:
    if path:
        with open(path, "w", newline="") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()
