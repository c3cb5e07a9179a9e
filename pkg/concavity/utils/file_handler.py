"""
File handling utilities: JSON records and CSV tables
"""

import json
import math
import os
import sys
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd
import structlog

logger = structlog.get_logger()

FLOAT_FORMAT = '%.17g'


def _jsonable(value: Any) -> Any:
    """Plain JSON types; non-finite floats become null"""
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, bool) or value is None or isinstance(value, (str, int)):
        return value
    if isinstance(value, complex):
        return {'re': _jsonable(value.real), 'im': _jsonable(value.imag)}
    if hasattr(value, 'item'):
        return _jsonable(value.item())
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    return str(value)


class FileHandler:
    """Deterministic writers for command output"""

    def __init__(self):
        self.encoding = 'utf-8'

    def dumps(self, record: Dict[str, Any]) -> str:
        # repr of a float is its shortest round-tripping form
        return json.dumps(_jsonable(record), sort_keys=True, allow_nan=False)

    def write_json(self, record: Dict[str, Any], path: Optional[str] = None) -> None:
        """Write one JSON record to path, or to standard output"""
        text = self.dumps(record) + '\n'
        if path is None or path == '-':
            sys.stdout.write(text)
            sys.stdout.flush()
            return
        try:
            self._ensure_directory(path)
            with open(path, 'w', encoding=self.encoding) as handle:
                handle.write(text)
            logger.info("JSON record written", path=path)
        except OSError as e:
            logger.error("JSON write failed", path=path, error=str(e))
            raise

    def write_csv(self, rows: List[Dict[str, Any]], columns: Sequence[str],
                  path: Optional[str] = None) -> None:
        """Write rows with a fixed header; None cells stay empty"""
        frame = pd.DataFrame(rows, columns=list(columns))
        if path is None or path == '-':
            frame.to_csv(sys.stdout, index=False, float_format=FLOAT_FORMAT, lineterminator='\n')
            sys.stdout.flush()
            return
        try:
            self._ensure_directory(path)
            frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, encoding=self.encoding,
                         lineterminator='\n')
            logger.info("CSV written", path=path, rows=len(frame))
        except OSError as e:
            logger.error("CSV write failed", path=path, error=str(e))
            raise

    def read_csv(self, path: str) -> pd.DataFrame:
        return pd.read_csv(path, encoding=self.encoding, float_precision='round_trip')

    @staticmethod
    def _ensure_directory(path: str) -> None:
        directory = os.path.dirname(os.path.abspath(path))
        os.makedirs(directory, exist_ok=True)
