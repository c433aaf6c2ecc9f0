"""CPLEX-style LP file export for extended formulations.

The dialect takes integer or decimal coefficients only, so every row
is scaled by the least common multiple of its denominators before
writing.  Variable names are sanitized to the format's character set;
all variables are declared free because nonnegativity, where wanted,
is an explicit inequality of the formulation.
"""

from __future__ import annotations

import math
from typing import Mapping

from .extform import ExtendedFormulation
from .rational import Rational


def _sanitize_names(ef: ExtendedFormulation) -> list[str]:
    names = []
    taken: set[str] = set()
    for v in ef.variables:
        name = "".join(ch if ch.isalnum() or ch == "_" else "_"
                       for ch in v.name)
        if not name or name[0].isdigit() or name[0] == ".":
            name = "v_" + name
        base, k = name, 2
        while name in taken:
            name = f"{base}_{k}"
            k += 1
        taken.add(name)
        names.append(name)
    return names


def _scaled_terms(row: Mapping[int, object], rhs) -> tuple[dict[int, int], int]:
    coeffs = {j: Rational(c) for j, c in row.items()}
    rhs = Rational(rhs)
    scale = math.lcm(*(int(c.denominator) for c in coeffs.values()),
                     int(rhs.denominator))
    out = {j: int(c.numerator) * (scale // int(c.denominator))
           for j, c in coeffs.items()}
    b = int(rhs.numerator) * (scale // int(rhs.denominator))
    return out, b


def _format_row(terms: dict[int, int], names: list[str]) -> str:
    parts = []
    for j in sorted(terms):
        c = terms[j]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        coeff = "" if mag == 1 else f"{mag} "
        parts.append(f"{sign} {coeff}{names[j]}")
    if not parts:
        return "0 " + names[0]
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else text


def write_lp(ef: ExtendedFormulation, comment: str = "") -> str:
    """Render the formulation as LP-format text with a zero objective."""
    names = _sanitize_names(ef)
    lines = []
    if comment:
        for ln in comment.splitlines():
            lines.append(f"\\ {ln}")
    lines.append("Minimize")
    lines.append(f" obj: 0 {names[0]}" if names else " obj: 0")
    lines.append("Subject To")
    cnum = 0
    for row, sense, rhs in ef.inequalities:
        cnum += 1
        terms, b = _scaled_terms(row, rhs)
        op = "<=" if sense == "<=" else ">="
        lines.append(f" c{cnum}: {_format_row(terms, names)} {op} {b}")
    for row, rhs in ef.equations:
        cnum += 1
        terms, b = _scaled_terms(row, rhs)
        lines.append(f" c{cnum}: {_format_row(terms, names)} = {b}")
    lines.append("Bounds")
    for name in names:
        lines.append(f" {name} free")
    lines.append("End")
    return "\n".join(lines) + "\n"
