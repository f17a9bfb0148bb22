"""Matrix and decomposition documents.

Matrix document::

    {"n": 2, "entries": [["7/12", "0"], ["1/6", "1/2"]]}

or a plain whitespace grid, one row per line. Decomposition document::

    {"n": 2, "terms": [{"weight": "1/3", "assignment": [[1, 1]]}, ...]}

Rows and columns in assignments are 1-indexed. Numbers are always strings
holding exact decimals or fractions.
"""
from __future__ import annotations

import json
from fractions import Fraction

from subbirkhoff.decompose import ConvexCombination, DecompositionReport, Subpermutation
from subbirkhoff.matrices import Matrix, format_rational, line_sums, rational_from_text


class DocumentError(ValueError):
    """Malformed matrix or decomposition document."""


def _entry(value, i: int, j: int) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise DocumentError(f"entry ({i + 1},{j + 1}) must be an exact string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise DocumentError(f"entry ({i + 1},{j + 1}) has unsupported type {type(value).__name__}")
    try:
        return rational_from_text(value)
    except ValueError as exc:
        raise DocumentError(f"entry ({i + 1},{j + 1}): {exc}") from None


def _grid_to_matrix(grid, n: int | None) -> Matrix:
    if not isinstance(grid, list) or not all(isinstance(r, list) for r in grid):
        raise DocumentError("entries must be a list of rows")
    side = n if n is not None else len(grid)
    if len(grid) != side:
        raise DocumentError(f"expected {side} rows, found {len(grid)}")
    for i, row in enumerate(grid):
        if len(row) != side:
            raise DocumentError(f"row {i + 1} has {len(row)} entries, expected {side}")
    return Matrix(([_entry(x, i, j) for j, x in enumerate(row)] for i, row in enumerate(grid)),
                  n_cols=side)


def parse_matrix_file(data: bytes | str) -> Matrix:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"malformed matrix document: {exc}") from None
        if not isinstance(doc, dict) or "entries" not in doc:
            raise DocumentError("matrix document needs an 'entries' field")
        n = doc.get("n")
        if n is not None and (not isinstance(n, int) or isinstance(n, bool) or n < 0):
            raise DocumentError(f"'n' must be a nonnegative integer, got {n!r}")
        return _grid_to_matrix(doc["entries"], n)
    grid = [line.split() for line in text.splitlines() if line.strip()]
    return _grid_to_matrix(grid, None)


def _dump(doc: dict) -> bytes:
    # one list element per line: readable and still plain JSON
    lines = ["{"]
    items = list(doc.items())
    for i, (key, value) in enumerate(items):
        tail = "," if i < len(items) - 1 else ""
        if isinstance(value, list):
            lines.append(f" {json.dumps(key)}: [")
            lines += [f"  {json.dumps(v)}{',' if j < len(value) - 1 else ''}" for j, v in enumerate(value)]
            lines.append(f" ]{tail}")
        elif isinstance(value, dict):
            inner = _dump(value).decode().rstrip().replace("\n", "\n ")
            lines.append(f" {json.dumps(key)}: {inner}{tail}")
        else:
            lines.append(f" {json.dumps(key)}: {json.dumps(value)}{tail}")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode()


def write_matrix_file(m: Matrix) -> bytes:
    return _dump({"n": m.n_rows, "entries": m.to_strings()})


def combination_to_doc(combo: ConvexCombination) -> dict:
    return {
        "n": combo.side,
        "terms": [
            {"weight": format_rational(w),
             "assignment": [[r + 1, c + 1] for r, c in t.assignment]}
            for w, t in combo.canonical().terms
        ],
    }


def write_decomposition_file(report: DecompositionReport | ConvexCombination,
                             keep_completion: bool = False) -> bytes:
    """Serialise a decomposition with terms in canonical order."""
    if isinstance(report, ConvexCombination):
        doc = combination_to_doc(report)
    else:
        doc = combination_to_doc(report.combination)
        if keep_completion:
            doc["completion"] = combination_to_doc(report.completion_combination)
    return _dump(doc)


def combination_from_doc(doc) -> ConvexCombination:
    if not isinstance(doc, dict) or "terms" not in doc or "n" not in doc:
        raise DocumentError("decomposition document needs 'n' and 'terms'")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DocumentError(f"'n' must be a nonnegative integer, got {n!r}")
    terms = []
    for i, item in enumerate(doc["terms"]):
        try:
            w = rational_from_text(str(item["weight"]))
            pairs = [(int(r) - 1, int(c) - 1) for r, c in item["assignment"]]
            terms.append((w, Subpermutation(n, tuple(pairs))))
        except (KeyError, TypeError, ValueError) as exc:
            raise DocumentError(f"term {i + 1}: {exc}") from None
    return ConvexCombination(n, tuple(terms))


def parse_decomposition_file(data: bytes | str) -> ConvexCombination:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"malformed decomposition document: {exc}") from None
    return combination_from_doc(doc)


def clamp(m: Matrix) -> Matrix:
    """Divide by the largest line sum when it exceeds 1; otherwise unchanged."""
    rows, cols = line_sums(m)
    top = max(rows + cols, default=Fraction(0))
    if top <= 1:
        return m
    return m.scaled(1 / top)
