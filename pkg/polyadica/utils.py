import json
import logging
from typing import Any, Dict, Iterable, List, Union

import pandas as pd

logger = logging.getLogger(__name__)

# Integers beyond this are not exactly representable by float-based JSON readers
SAFE_JSON_INT = 2**53


def encode_int(x: int) -> Union[int, str]:
    """Keep small integers numeric, write large ones as decimal strings."""
    if not isinstance(x, int):
        raise TypeError(f"Expected int, not {type(x)}")
    return x if abs(x) < SAFE_JSON_INT else str(x)


def decode_int(x: Union[int, str]) -> int:
    if isinstance(x, bool):
        raise TypeError("Booleans are not integers here")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return int(x.strip())
    raise TypeError(f"Expected int or decimal string, not {type(x)}")


def dump_records(records: Union[pd.DataFrame, List[Dict[str, Any]]], filepath: str) -> None:
    """
    Receives a pd.DataFrame (or a list of dicts), one record per row, and dumps
    it into a .jsonl file with one record per line.

    Args:
        records (pd.DataFrame): One record per row.
        filepath (str): Path to dump the records, has to end with `.jsonl`.
    """
    if not isinstance(filepath, str):
        raise TypeError(f"filepath must be a string, not {type(filepath)}")
    if not filepath.endswith(".jsonl"):
        raise ValueError("Please provide a filepath with .jsonl extension")

    if isinstance(records, pd.DataFrame):
        # numpy scalars are not JSON serializable
        records = json.loads(records.to_json(orient="records"))
    if not isinstance(records, list) or not all(isinstance(r, dict) for r in records):
        raise TypeError(f"records must be a pd.DataFrame or list of dicts, not {type(records)}")

    with open(filepath, "w", encoding="utf-8") as f:
        for record in records:
            f.write(json.dumps(record) + "\n")


def append_jsonl(record: Dict[str, Any], filepath: str) -> None:
    """Append a single record and flush it to disk."""
    with open(filepath, "a", encoding="utf-8") as f:
        f.write(json.dumps(record) + "\n")
        f.flush()


def load_jsonl(filepath: str) -> List[Dict[str, Any]]:
    """
    Load data from a `.jsonl` file, i.e., a file with one dictionary per line.

    Args:
        filepath (str): Path to `.jsonl` file.

    Returns:
        List[Dict[str, Any]]: A list of dictionaries, one per line.
    """
    with open(filepath, "r", encoding="utf-8") as f:
        data = [json.loads(line) for line in f.readlines() if line.strip()]
    return data


def parse_json_objects(text: str) -> List[Dict[str, Any]]:
    """Read either one JSON object or JSON lines from a string."""
    text = text.strip()
    if not text:
        return []
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        return [json.loads(line) for line in text.splitlines() if line.strip()]
    if isinstance(obj, list):
        return obj
    return [obj]


def as_int_list(values: Iterable[Union[int, str]]) -> List[int]:
    return [decode_int(v) for v in values]
