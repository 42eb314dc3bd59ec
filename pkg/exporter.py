"""
Presentation and report exporter module.
- JSON and plain-text renderings of presentations
- GAP / Magma input scripts (free group plus relator list)
- Relator and verification tables as CSV or formatted Excel
"""

import os
import json
import logging

import pandas as pd
from openpyxl import load_workbook
from openpyxl.styles import Font, PatternFill, Alignment, Border, Side
from openpyxl.utils import get_column_letter

import config
from errors import InvalidParameterError

logger = logging.getLogger(__name__)


# ─── Text formats ────────────────────────────────────────────────────

def to_json_text(data) -> str:
    """Canonical JSON: indent 2, trailing newline."""
    return json.dumps(data, indent=config.JSON_INDENT, ensure_ascii=False) + "\n"


def presentation_to_json(p) -> str:
    return to_json_text(p.to_dict())


def presentation_to_text(p) -> str:
    """Header, generator list and one "label: word" line per relator."""
    lines = [
        f"# {p.family} (g={p.g}, r={p.r})",
        f"generators: {', '.join(p.generators)}",
        f"relators: {len(p.relators)}",
    ]
    lines += [f"# note: {note}" for note in p.notes]
    lines += [f"{rel.label}: {rel.word}" for rel in p.relators]
    return "\n".join(lines) + "\n"


def _cas_word(word, identity: str) -> str:
    if word.is_identity():
        return identity
    return "*".join(s.name if e == 1 else f"{s.name}^{e}" for s, e in word.letters)


def presentation_to_gap(p) -> str:
    gens = ", ".join(f'"{name}"' for name in p.generators)
    rels = [f"  {_cas_word(rel.word, 'One(F)')}" for rel in p.relators]
    lines = [
        f"# {p.family} (g={p.g}, r={p.r}), {len(p.relators)} relators",
        f"F := FreeGroup({gens});;",
        "AssignGeneratorVariables(F);;",
        "rels := [",
        ",\n".join(rels),
        "];;",
        "G := F / rels;;",
    ]
    return "\n".join(lines) + "\n"


def presentation_to_magma(p) -> str:
    gens = ",".join(p.generators)
    rels = [f"  {_cas_word(rel.word, 'Id(F)')}" for rel in p.relators]
    lines = [
        f"// {p.family} (g={p.g}, r={p.r}), {len(p.relators)} relators",
        f"F<{gens}> := FreeGroup({len(p.generators)});",
        f"G<{gens}> := quo<F |",
        ",\n".join(rels),
        ">;",
    ]
    return "\n".join(lines) + "\n"


CAS_WRITERS = {
    "gap": presentation_to_gap,
    "magma": presentation_to_magma,
}


def presentation_to_cas(p, dialect: str = config.DEFAULT_CAS_DIALECT) -> str:
    if dialect not in CAS_WRITERS:
        raise InvalidParameterError(f"Unknown CAS dialect {dialect!r}; choose from {list(config.CAS_DIALECTS)}")
    return CAS_WRITERS[dialect](p)


def render_presentation(p, fmt: str, dialect: str = config.DEFAULT_CAS_DIALECT) -> str:
    """Render as json, text, cas (with dialect), gap or magma."""
    if fmt == "json":
        return presentation_to_json(p)
    if fmt == "text":
        return presentation_to_text(p)
    if fmt == "cas":
        return presentation_to_cas(p, dialect)
    if fmt in CAS_WRITERS:
        return presentation_to_cas(p, fmt)
    raise InvalidParameterError(f"Unknown text format {fmt!r}")


def write_text(text: str, filepath: str) -> str:
    directory = os.path.dirname(filepath)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(filepath, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    logger.info(f"✅ Wrote {filepath}")
    return filepath


# ─── Tables ──────────────────────────────────────────────────────────

def relator_kind(label: str) -> str:
    return config.RELATOR_KINDS.get(label.split("[")[0], "other")


def relator_table(p) -> pd.DataFrame:
    rows = [
        {
            "Label": rel.label,
            "Kind": relator_kind(rel.label),
            "Length": rel.word.length,
            "Syllables": rel.word.syllables,
            "Word": str(rel.word),
        }
        for rel in p.relators
    ]
    return pd.DataFrame(rows, columns=config.RELATOR_COLUMNS)


def sp_report_table(report) -> pd.DataFrame:
    rows = [
        {
            "Label": label,
            "Kind": relator_kind(label),
            "Status": "pass" if ok else "fail",
            "Scalar": "1" if ok else "",
            "Deviation": "",
        }
        for label, ok in report.results
    ]
    return pd.DataFrame(rows, columns=config.REPORT_COLUMNS)


def rep_report_table(report) -> pd.DataFrame:
    rows = []
    for result in report.results:
        if not result.is_scalar:
            status = "fail"
        elif result.scalar == 1:
            status = "pass"
        else:
            status = "scalar"
        rows.append({
            "Label": result.label,
            "Kind": relator_kind(result.label),
            "Status": status,
            "Scalar": "" if result.scalar is None else str(result.scalar),
            "Deviation": "" if result.deviation is None else str(result.deviation),
        })
    return pd.DataFrame(rows, columns=config.REPORT_COLUMNS)


def export_to_csv(df: pd.DataFrame, filepath: str = None) -> str:
    """Save a table as CSV."""
    filepath = filepath or config.OUTPUT_CSV
    directory = os.path.dirname(filepath)
    if directory:
        os.makedirs(directory, exist_ok=True)

    df.to_csv(filepath, index=False, encoding="utf-8", lineterminator="\n")

    logger.info(f"Exported {len(df)} rows to CSV: {filepath}")
    return filepath


def export_to_excel(df: pd.DataFrame, filepath: str = None, sheet_name: str = "Relators") -> str:
    """
    Export a relator or report table to a formatted Excel file.

    Args:
        df: table with config.RELATOR_COLUMNS or config.REPORT_COLUMNS
        filepath: Output file path (default from config)
        sheet_name: worksheet title

    Returns:
        Path to the generated file
    """
    filepath = filepath or config.OUTPUT_FILE
    directory = os.path.dirname(filepath)
    if directory:
        os.makedirs(directory, exist_ok=True)

    if df.empty:
        logger.warning("⚠️ Exporting an empty table")

    df.to_excel(filepath, index=False, sheet_name=sheet_name, engine="openpyxl")
    _format_excel(filepath, list(df.columns), len(df))

    logger.info(f"Exported {len(df)} rows to: {filepath}")
    return filepath


def _format_excel(filepath: str, columns: list[str], num_rows: int):
    """Header styling, borders, status colors, widths, frozen header and filter."""
    wb = load_workbook(filepath)
    ws = wb.active

    # ── Header styling ──
    header_font = Font(name="Calibri", bold=True, size=12, color="FFFFFF")
    header_fill = PatternFill(start_color=config.HEADER_COLOR, end_color=config.HEADER_COLOR, fill_type="solid")
    header_alignment = Alignment(horizontal="center", vertical="center", wrap_text=True)
    thin_border = Border(
        left=Side(style="thin"),
        right=Side(style="thin"),
        top=Side(style="thin"),
        bottom=Side(style="thin"),
    )

    for col in range(1, len(columns) + 1):
        cell = ws.cell(row=1, column=col)
        cell.font = header_font
        cell.fill = header_fill
        cell.alignment = header_alignment
        cell.border = thin_border

    # ── Data cell styling ──
    data_font = Font(name="Consolas", size=10)
    data_alignment = Alignment(vertical="center", wrap_text=True)
    status_col = columns.index("Status") + 1 if "Status" in columns else None

    for row in range(2, num_rows + 2):
        for col in range(1, len(columns) + 1):
            cell = ws.cell(row=row, column=col)
            cell.font = data_font
            cell.alignment = data_alignment
            cell.border = thin_border

        if status_col:
            status_cell = ws.cell(row=row, column=status_col)
            color = config.STATUS_COLORS.get(status_cell.value or "")
            if color:
                status_cell.fill = PatternFill(start_color=color, end_color=color, fill_type="solid")

    # ── Column widths ──
    column_widths = {
        "Label": 24,
        "Kind": 20,
        "Length": 10,
        "Syllables": 10,
        "Word": 80,
        "Status": 10,
        "Scalar": 14,
        "Deviation": 14,
    }
    for col, name in enumerate(columns, start=1):
        ws.column_dimensions[get_column_letter(col)].width = column_widths.get(name, 15)

    # ── Freeze header row ──
    ws.freeze_panes = "A2"

    # ── Auto-filter ──
    ws.auto_filter.ref = ws.dimensions

    wb.save(filepath)
    logger.debug("Excel formatting applied")
