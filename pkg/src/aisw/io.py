"""Writers for comparison tables: CSV, JSON, gnuplot ``.dat`` and a static SVG scatter."""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Iterable

from .compare import SpectrumRow

CSV_COLUMNS = (
    "n",
    "E_exact",
    "E_pt2",
    "E_po",
    "abs_err_pt",
    "abs_err_po",
    "rel_err_pt",
    "rel_err_po",
    "below_step",
    "pt_convergent",
    "bracket_source",
)
_FLOAT_COLUMNS = CSV_COLUMNS[1:8]

JSON_SCHEMA = {
    "type": "object",
    "required": ["config", "rows"],
    "properties": {
        "config": {
            "type": "object",
            "required": ["a", "V0", "m", "hbar", "alpha", "n_min", "n_max"],
            "properties": {
                "a": {"type": "number"},
                "V0": {"type": "number"},
                "m": {"type": "number"},
                "hbar": {"type": "number"},
                "alpha": {"type": "number"},
                "n_min": {"type": "integer", "minimum": 1},
                "n_max": {"type": "integer", "minimum": 1},
            },
        },
        "rows": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": list(CSV_COLUMNS) + ["error"],
                "properties": {
                    "n": {"type": "integer", "minimum": 1},
                    **{c: {"type": ["number", "null"]} for c in _FLOAT_COLUMNS},
                    "below_step": {"type": "boolean"},
                    "pt_convergent": {"type": "boolean"},
                    "bracket_source": {"enum": ["ActionInterval", "GridScan", "error"]},
                    "error": {"type": ["string", "null"]},
                },
            },
        },
        "oracle": {"type": "array"},
    },
}


def _fmt(x: float) -> str:
    return "nan" if math.isnan(x) else f"{x:.16e}"


def _write(path: str | Path, text: str) -> None:
    path = Path(path)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write {path}: {exc.strerror}") from exc


def _require_rows(rows) -> list[SpectrumRow]:
    rows = list(rows)
    if not rows:
        raise ValueError("no rows to emit")
    return rows


def csv_text(rows: Iterable[SpectrumRow]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for r in _require_rows(rows):
        fields = [str(r.n)]
        fields += [_fmt(getattr(r, c)) for c in _FLOAT_COLUMNS]
        fields += ["true" if r.below_step else "false", "true" if r.pt_convergent else "false", r.bracket_source]
        lines.append(",".join(fields))
    return "\n".join(lines) + "\n"


def emit_csv(rows: Iterable[SpectrumRow], path: str | Path) -> None:
    _write(path, csv_text(rows))


def parse_csv(text: str) -> list[SpectrumRow]:
    lines = text.splitlines()
    if not lines or tuple(lines[0].split(",")) != CSV_COLUMNS:
        raise ValueError("unexpected CSV header")
    rows = []
    for line in lines[1:]:
        parts = line.split(",")
        values = dict(zip(CSV_COLUMNS, parts))
        rows.append(
            SpectrumRow(
                n=int(values["n"]),
                **{c: float(values[c]) for c in _FLOAT_COLUMNS},
                below_step=values["below_step"] == "true",
                pt_convergent=values["pt_convergent"] == "true",
                bracket_source=values["bracket_source"],
            )
        )
    return rows


def _json_number(x: float):
    return None if math.isnan(x) else x


def json_document(rows: Iterable[SpectrumRow], config: dict, oracle: list[dict] | None = None) -> dict:
    out_rows = []
    for r in _require_rows(rows):
        d = {"n": r.n}
        d.update({c: _json_number(getattr(r, c)) for c in _FLOAT_COLUMNS})
        d.update(below_step=r.below_step, pt_convergent=r.pt_convergent,
                 bracket_source=r.bracket_source, error=r.error)
        out_rows.append(d)
    doc = {"config": dict(config), "rows": out_rows}
    if oracle is not None:
        doc["oracle"] = oracle
    return doc


def emit_json(rows: Iterable[SpectrumRow], path: str | Path, config: dict,
              oracle: list[dict] | None = None) -> None:
    doc = json_document(rows, config, oracle)
    _write(path, json.dumps(doc, indent=2, allow_nan=False) + "\n")


def dat_text(rows: Iterable[SpectrumRow]) -> str:
    lines = ["# n E_exact E_pt2 E_po"]
    for r in _require_rows(rows):
        lines.append(f"{r.n} {_fmt(r.E_exact)} {_fmt(r.E_pt2)} {_fmt(r.E_po)}")
    return "\n".join(lines) + "\n"


def emit_dat(rows: Iterable[SpectrumRow], path: str | Path) -> None:
    _write(path, dat_text(rows))


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    raw = (hi - lo) / count
    mag = 10 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 5, 10) if m * mag >= raw)
    first = math.ceil(lo / step) * step
    out = []
    t = first
    while t <= hi + 1e-9 * step:
        out.append(t)
        t += step
    return out


def svg_text(rows: Iterable[SpectrumRow], width: int = 720, height: int = 480) -> str:
    """Scatter of energy against level: open squares exact, open circles PT, filled diamonds PO."""
    rows = _require_rows(rows)
    left, right, top, bottom = 80, 20, 20, 60
    energies = [v for r in rows for v in (r.E_exact, r.E_pt2, r.E_po) if math.isfinite(v)]
    ns = [r.n for r in rows]
    x_lo, x_hi = min(ns), max(ns)
    y_lo, y_hi = min(energies), max(energies)
    if x_hi == x_lo:
        x_lo, x_hi = x_lo - 1, x_hi + 1
    if y_hi == y_lo:
        y_lo, y_hi = y_lo - 1.0, y_hi + 1.0
    dx, dy = 0.05 * (x_hi - x_lo), 0.05 * (y_hi - y_lo)
    x_lo, x_hi, y_lo, y_hi = x_lo - dx, x_hi + dx, y_lo - dy, y_hi + dy
    pw, ph = width - left - right, height - top - bottom

    def px(x: float) -> float:
        return left + (x - x_lo) / (x_hi - x_lo) * pw

    def py(y: float) -> float:
        return top + (y_hi - y) / (y_hi - y_lo) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    for t in _ticks(x_lo, x_hi):
        x = px(t)
        out.append(f'<line x1="{x:.2f}" y1="{top + ph}" x2="{x:.2f}" y2="{top + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{x:.2f}" y="{top + ph + 18}" text-anchor="middle">{t:g}</text>')
    for t in _ticks(y_lo, y_hi):
        y = py(t)
        out.append(f'<line x1="{left - 5}" y1="{y:.2f}" x2="{left}" y2="{y:.2f}" stroke="black"/>')
        out.append(f'<text x="{left - 8}" y="{y + 4:.2f}" text-anchor="end">{t:.4g}</text>')
    out.append(f'<text x="{left + pw / 2:.2f}" y="{height - 15}" text-anchor="middle">n</text>')
    out.append(
        f'<text x="18" y="{top + ph / 2:.2f}" text-anchor="middle" '
        f'transform="rotate(-90 18 {top + ph / 2:.2f})">E</text>'
    )
    for r in rows:
        x = px(r.n)
        if math.isfinite(r.E_exact):
            out.append(_square(x, py(r.E_exact), "marker exact"))
        out.append(_circle(x, py(r.E_pt2), "marker pt"))
        out.append(_diamond(x, py(r.E_po), "marker po"))
    legend = [("exact", _square), ("PT second order", _circle), ("periodic orbit", _diamond)]
    for i, (label, shape) in enumerate(legend):
        lx, ly = left + 15, top + 15 + 18 * i
        out.append(shape(lx, ly, "legend"))
        out.append(f'<text x="{lx + 12}" y="{ly + 4}">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _square(x: float, y: float, cls: str) -> str:
    return f'<rect class="{cls}" x="{x - 4:.2f}" y="{y - 4:.2f}" width="8" height="8" fill="none" stroke="black"/>'


def _circle(x: float, y: float, cls: str) -> str:
    return f'<circle class="{cls}" cx="{x:.2f}" cy="{y:.2f}" r="4" fill="none" stroke="blue"/>'


def _diamond(x: float, y: float, cls: str) -> str:
    pts = f"{x:.2f},{y - 5:.2f} {x + 5:.2f},{y:.2f} {x:.2f},{y + 5:.2f} {x - 5:.2f},{y:.2f}"
    return f'<polygon class="{cls}" points="{pts}" fill="red" stroke="red"/>'


def emit_svg(rows: Iterable[SpectrumRow], path: str | Path) -> None:
    _write(path, svg_text(rows))


def emit_plot(rows: Iterable[SpectrumRow], path: str | Path) -> None:
    """SVG at ``path`` plus a gnuplot data file alongside it with suffix ``.dat``."""
    rows = _require_rows(rows)
    emit_svg(rows, path)
    emit_dat(rows, Path(path).with_suffix(".dat"))
