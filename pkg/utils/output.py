"""
Rendering of results as plain text, JSON or CSV
Rationals are never printed as decimals. CSV goes through pandas so quoting and
line endings are the same on every platform.
"""

import json
from typing import Any, Dict, List, Sequence, Tuple

import pandas as pd

from arith.exact import rational_to_json, rational_to_text


def to_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, indent=2)


def frame_to_csv(frame: pd.DataFrame, index: bool = False, index_label: str = None) -> str:
    return frame.to_csv(index=index, index_label=index_label, lineterminator="\n")


def table_csv(rows: Sequence[Tuple]) -> str:
    """Header m,n,p,value; values in compact text form"""
    frame = pd.DataFrame(
        [(m, n, p, rational_to_text(value)) for m, n, p, value in rows],
        columns=["m", "n", "p", "value"],
    )
    return frame_to_csv(frame)


def table_json(g: int, convention: str, rows: Sequence[Tuple]) -> str:
    return to_json({
        "genus": g,
        "sign_convention": convention,
        "rows": [{"m": m, "n": n, "p": p, "value": rational_to_json(value)} for m, n, p, value in rows],
    })


def table_plain(rows: Sequence[Tuple]) -> str:
    lines = ["m n p value"]
    lines += [f"{m} {n} {p} {rational_to_text(value)}" for m, n, p, value in rows]
    return "\n".join(lines) + "\n"


def gram_csv(row_labels: List[str], col_labels: List[str], entries) -> str:
    """One line per row monomial, entries in explicit p/q form"""
    index = pd.Index(row_labels, name="monomial")
    if not col_labels:
        frame = pd.DataFrame(index=index)
    else:
        frame = pd.DataFrame(
            [[rational_to_text(value, explicit=True) for value in row] for row in entries],
            index=index,
            columns=col_labels,
        )
    return frame_to_csv(frame, index=True, index_label="monomial")


def gram_plain(row_labels: List[str], col_labels: List[str], entries) -> str:
    header = [""] + col_labels
    body = [[r] + [rational_to_text(value) for value in row] for r, row in zip(row_labels, entries)]
    widths = [max(len(line[c]) for line in [header] + body) for c in range(len(header))]
    lines = ["  ".join(cell.rjust(width) for cell, width in zip(line, widths)) for line in [header] + body]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def pair_csv(monomial: str, value) -> str:
    frame = pd.DataFrame([[monomial, rational_to_text(value)]], columns=["monomial", "value"])
    return frame_to_csv(frame)


def dual_csv(labels: List[str], values, partner_coeffs) -> str:
    """One line per complementary monomial: its pairing with the generator and its partner coefficient"""
    frame = pd.DataFrame(
        [[name, rational_to_text(value), rational_to_text(coeff)]
         for name, value, coeff in zip(labels, values, partner_coeffs)],
        columns=["monomial", "value", "partner_coeff"],
    )
    return frame_to_csv(frame)
