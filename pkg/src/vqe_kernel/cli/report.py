# vqe_kernel/cli/report.py
"""
Table and JSON renderings of command results. JSON numbers are emitted by
json.dumps (shortest round-trip floats); complex values as {"re", "im"}.
"""
from __future__ import annotations

import json
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from vqe_kernel.spectrum import EigenvalueEstimate, SpectrumReport


def complex_json(z: complex) -> Dict[str, float]:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def format_complex(z: complex, digits: int = 6) -> str:
    z = complex(z)
    if z.imag == 0.0:
        return f"{z.real:.{digits}f}"
    sign = "+" if z.imag > 0 else "-"
    return f"{z.real:.{digits}f} {sign} {abs(z.imag):.{digits}f}i"


def matrix_json(m: np.ndarray) -> List[List[List[float]]]:
    return [[[float(v.real), float(v.imag)] for v in row] for row in np.asarray(m, dtype=np.complex128)]


def estimate_json(e: EigenvalueEstimate) -> Dict[str, Any]:
    return {
        "value": complex_json(e.value),
        "residual": e.residual,
        "start_point": complex_json(e.start_point),
        "conjugate_completed": e.conjugate_completed,
    }


def spectrum_json(report: SpectrumReport) -> Dict[str, Any]:
    return {
        "matrix_dim": report.matrix_dim,
        "complete": report.complete,
        "starts_used": report.starts_used,
        "stability": report.stability.value if report.stability is not None else None,
        "estimates": [estimate_json(e) for e in report.estimates],
        "suspect": [estimate_json(e) for e in report.suspect],
        "notes": list(report.notes),
    }


def nearest(value: complex, reference: Sequence[complex]) -> Optional[complex]:
    if not reference:
        return None
    return min(reference, key=lambda r: abs(complex(r) - value))


def spectrum_table(report: SpectrumReport, oracle: Optional[Sequence[complex]] = None) -> List[str]:
    lines = [f"{'eigenvalue (vqe)':>34}  {'residual':>10}  {'oracle':>34}  {'|diff|':>9}"]
    for e in report.estimates:
        ref = nearest(e.value, oracle or [])
        mark = "*" if e.conjugate_completed else " "
        ref_text = format_complex(ref) if ref is not None else "-"
        diff = f"{abs(ref - e.value):9.2e}" if ref is not None else f"{'-':>9}"
        lines.append(f"{format_complex(e.value):>33}{mark}  {e.residual:10.3e}  {ref_text:>34}  {diff}")
    for e in report.suspect:
        lines.append(f"{format_complex(e.value):>33}?  {e.residual:10.3e}  {'(suspect: failed polishing)':>34}")
    status = "complete" if report.complete else "INCOMPLETE"
    lines.append(f"{status}: {len(report.estimates)}/{report.matrix_dim} values from {report.starts_used} starts"
                 + ("  (* = conjugate completed)" if any(e.conjugate_completed for e in report.estimates) else ""))
    lines.extend(f"note: {note}" for note in report.notes)
    return lines


def matrix_table(m: np.ndarray) -> List[str]:
    return ["  [" + ", ".join(f"{format_complex(v, 4):>18}" for v in row) + "]" for row in np.asarray(m)]


def dump_json(document: Dict[str, Any]) -> str:
    return json.dumps(document, indent=2, sort_keys=False)
