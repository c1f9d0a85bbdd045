"""Append-only JSON-lines store of found solutions."""
import json
import logging
import os
from typing import Any, Dict, List, Optional, Tuple

from .diophantine.equation import from_record
from .utils import append_jsonl, load_jsonl

logger = logging.getLogger(__name__)

STORE_ENV = "POLYADICA_STORE"
DEFAULT_STORE = "polyadica_solutions.jsonl"


def default_store_path() -> str:
    return os.environ.get(STORE_ENV, DEFAULT_STORE)


def record_key(record: Dict[str, Any]) -> Tuple:
    """Dedupe key: ring descriptor, l, p, q and the canonical sides."""
    instance, solution = from_record(record)
    solution = solution.canonical()
    return (
        json.dumps(instance.ring.descriptor(), sort_keys=True),
        instance.l,
        instance.p,
        instance.q,
        solution.u,
        solution.v,
    )


class SolutionStore:
    """Single-writer store, every record is flushed as it is added."""

    def __init__(self, filepath: Optional[str] = None):
        """
        Load an existing store or start a new one.

        Args:
            filepath (str, optional): A `.jsonl` path. Defaults to the
                POLYADICA_STORE environment variable, else polyadica_solutions.jsonl.
        """
        self.filepath = filepath or default_store_path()
        if not self.filepath.endswith(".jsonl"):
            raise ValueError("Please provide a filepath with .jsonl extension")
        self._records: List[Dict[str, Any]] = []
        self._keys = set()
        if os.path.exists(self.filepath):
            for record in load_jsonl(self.filepath):
                key = record_key(record)
                if key in self._keys:
                    logger.warning(f"Skipping duplicated record in {self.filepath}: {record}")
                    continue
                self._keys.add(key)
                self._records.append(record)
            logger.info(f"Loaded {len(self._records)} records from {self.filepath}")

    def add(self, record: Dict[str, Any]) -> bool:
        """Append a record unless it is already stored. Returns whether it was written."""
        key = record_key(record)
        if key in self._keys:
            return False
        append_jsonl(record, self.filepath)
        self._keys.add(key)
        self._records.append(record)
        return True

    def records(self) -> List[Dict[str, Any]]:
        return list(self._records)

    def __len__(self) -> int:
        return len(self._records)

    def __contains__(self, record: Dict[str, Any]) -> bool:
        return record_key(record) in self._keys
