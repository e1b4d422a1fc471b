"""
Codificación de artefactos compartida por los repositorios.

CSV: comas, cabecera, 12 cifras significativas, LF.
JSON: claves ordenadas, sangría 2, LF final; NaN/inf se escriben como null.
"""
import csv
import io
import json
import math
from collections.abc import Sequence

import numpy as np
from django.core.serializers.json import DjangoJSONEncoder

from src.domain.measurement.exceptions import InvalidRecordError
from src.domain.measurement.repositories import RECORD_COLUMNS
from src.domain.measurement.value_objects import MeasurementRecord

SIGNIFICANT_DIGITS = 12


def format_cell(value, digits: int = SIGNIFICANT_DIGITS) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), f".{digits}g")
    return str(value)


def render_csv(header: Sequence[str], rows: Sequence[Sequence], digits: int = SIGNIFICANT_DIGITS) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        if len(row) != len(header):
            raise ValueError(f"Fila con {len(row)} columnas para una cabecera de {len(header)}.")
        writer.writerow([format_cell(v, digits) for v in row])
    return buffer.getvalue()


def record_rows(records: Sequence[MeasurementRecord]) -> list[tuple]:
    return [(r.g, r.t, r.shots, r.successes, r.p_hat) for r in records]


def parse_records(text: str, source: str = "<memoria>") -> list[MeasurementRecord]:
    reader = csv.DictReader(io.StringIO(text))
    missing = set(RECORD_COLUMNS[:4]) - set(reader.fieldnames or ())
    if missing:
        raise InvalidRecordError(f"{source}: faltan columnas {sorted(missing)}.")
    records = []
    for row in reader:
        try:
            records.append(
                MeasurementRecord(
                    g=float(row["g"]),
                    t=float(row["t"]),
                    shots=int(row["shots"]),
                    successes=int(row["successes"]),
                )
            )
        except (TypeError, ValueError, InvalidRecordError) as exc:
            raise InvalidRecordError(f"{source}, línea {reader.line_num}: {exc}") from exc
    return records


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return _jsonable(value.tolist())
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def render_json(payload: dict) -> str:
    return json.dumps(_jsonable(payload), cls=DjangoJSONEncoder, sort_keys=True, indent=2) + "\n"
