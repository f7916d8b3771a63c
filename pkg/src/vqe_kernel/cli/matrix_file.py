# vqe_kernel/cli/matrix_file.py
"""
Matrix input files
──────────────────────────────────────────────
    {"rows": [[[re, im], [re, im], ...], ...]}

Every row must have the same length; a failure names rows[i][j].
──────────────────────────────────────────────
"""
from __future__ import annotations

from pathlib import Path
from typing import List, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, StrictFloat, StrictInt, ValidationError

from vqe_kernel.errors import InputError
from vqe_kernel.linalg import ComplexMatrix

Number = Union[StrictInt, StrictFloat]


class MatrixFile(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    rows: List[List[Tuple[Number, Number]]]

    def check_rectangular(self, source: str) -> None:
        if not self.rows or not self.rows[0]:
            raise InputError(f"{source}: matrix has no entries")
        width = len(self.rows[0])
        for i, row in enumerate(self.rows):
            if len(row) != width:
                raise InputError(f"{source}: row {i} has {len(row)} entries, row 0 has {width}", row=i)

    def matrix(self) -> ComplexMatrix:
        return np.array([[complex(re, im) for re, im in row] for row in self.rows], dtype=np.complex128)


def _locate(exc: ValidationError, source: str) -> InputError:
    first = exc.errors()[0]
    message = first["msg"]
    if first["type"] == "json_invalid":
        return InputError(f"{source}: not valid JSON ({message})")
    indices = [p for p in first["loc"] if isinstance(p, int)]
    if not indices:
        where = ".".join(map(str, first["loc"])) or "document"
        return InputError(f"{source}: {where}: {message}")
    row = indices[0]
    col = indices[1] if len(indices) > 1 else None
    where = f"rows[{row}]" + (f"[{col}]" if col is not None else "")
    return InputError(f"{source}: {where}: {message}", row=row, col=col)


def parse_matrix_text(text: str, source: str = "<matrix>") -> ComplexMatrix:
    try:
        parsed = MatrixFile.model_validate_json(text)
    except ValidationError as exc:
        raise _locate(exc, source) from exc
    parsed.check_rectangular(source)
    m = parsed.matrix()
    bad = np.argwhere(~np.isfinite(m))
    if bad.size:
        row, col = (int(v) for v in bad[0])
        raise InputError(f"{source}: rows[{row}][{col}] is not finite", row=row, col=col)
    return m


def parse_matrix_file(path: Union[str, Path]) -> ComplexMatrix:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read matrix file {path}: {exc.strerror or exc}", path=str(path)) from exc
    return parse_matrix_text(text, str(path))
