"""Reproduction of the reference invariant tables from scratch.

Each runner recomputes every cell with the appropriate operator and
normalization convention, collapses the parameters (t = pq, s = aby for the
three-dimensional dressing, s = hg for the four-dimensional one), and diffs
the result against the golden values embedded below.

Conventions: both knot-table columns and the link-table plain column are
unknot-normalized; the link-table dressed column is raw; the
four-dimensional table is unknot-normalized.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import KNOT_NAMES, LINK_NAMES, get_named_braid
from .dressing import preset_dressings
from .errors import UnknownName
from .eyb import get_table1_eyb
from .invariant import classification_report, compute_ts
from .ring import ScalarContext, format_scalar, substitute

TABLE2_JONES = {
    "0_1": "1",
    "3_1": "t + t^3 - t^4",
    "4_1": "t^-2 - t^-1 + 1 - t + t^2",
    "5_1": "t^2 + t^4 - t^5 + t^6 - t^7",
    "5_2": "t - t^2 + 2*t^3 - t^4 + t^5 - t^6",
}

TABLE2_DRESSED = {
    "0_1": "1",
    "3_1": "t^(1/2) - t^(3/2) + 2*t^2 - t^(5/2) + t^(7/2) - t^4",
    "4_1": "t^-2 - t^(-3/2) + t^(-1/2) - 1 + t^(1/2) - t^(3/2) + t^2",
    "5_1": "t^(1/2) - t + 2*t^2 - 2*t^(5/2) + t^3 + t^(7/2) - t^4 + t^5"
           " - t^(11/2) + t^(13/2) - t^7",
    "5_2": "t^(1/2) - t^(3/2) + t^2 + t^4 - t^(9/2) + t^(11/2) - t^6",
}

TABLE3_JONES = {
    "2^2_1": "t^(1/2) + t^(5/2)",
    "4^2_1": "t^(3/2) + t^(7/2) - t^(9/2) + t^(11/2)",
    "5^2_1": "-t^(-7/2) + 2*t^(-5/2) - t^(-3/2) + 2*t^(-1/2) - t^(1/2)"
             " + t^(3/2)",
    "6^2_1": "t^(5/2) + t^(9/2) - t^(11/2) + t^(13/2) - t^(15/2) + t^(17/2)",
    "6^2_2": "t^(3/2) - t^(5/2) + 2*t^(7/2) - 2*t^(9/2) + 2*t^(11/2)"
             " - t^(13/2) + t^(15/2)",
    "6^2_3": "t^(-3/2) - 2*t^(-1/2) + 2*t^(1/2) - 2*t^(3/2) + 3*t^(5/2)"
             " - t^(7/2) + t^(9/2)",
}

TABLE3_DRESSED = {
    "2^2_1": "2 + t + t^2 + t^3 + 2*s*t^(1/2) + 2*s*t^(3/2)",
    "4^2_1": "1 + t + t^2 + t^3 + t^6 + 2*s^2*t^(3/2) + 2*s^2*t^(5/2)",
    "5^2_1": "-t^-4 + t^-3 + t^-2 + t^-1 + 2*t^(-1/2) + 2 + 2*t^(1/2) + t^2",
    "6^2_1": "1 + t^2 + t^3 + t^4 + t^9 + 2*s^3*t^(5/2) + 2*s^3*t^(7/2)",
    "6^2_2": "1 + t + t^3 + t^6 + t^8 + 2*s^3*t^(5/2) + 2*s^3*t^(7/2)",
    # the t^5 coefficient here is 1, confirmed by Markov-move stability and
    # by recomputation from reversed and sign-symmetric words
    "6^2_3": "t^-2 - t^-1 + 1 + t^2 + 2*t^3 + t^5 + 2*s^2*t^(3/2)"
             " + 2*s^2*t^(5/2)",
}

# The four-dimensional table lists the two-, four-, and five-crossing links
# once each; every knot takes the value 1.
TABLE4_LINKS = {
    "2^2_1": "1 + s*t^-1",
    "4^2_1": "1 + s^2*t^-2",
    "5^2_1": "2",
}

TABLE3_UNKNOT_RAW = "t^(1/2) + 1 + t^(-1/2)"


@dataclass(frozen=True)
class TableCell:
    table: int
    link: str
    column: str
    computed: str
    expected: str
    match: bool


@dataclass(frozen=True)
class TableReport:
    table: int
    cells: tuple

    @property
    def ok(self):
        return all(cell.match for cell in self.cells)


def _jones_collapse():
    ct = ScalarContext(("t", "q"))
    return ct, {"p": ct.parse("t*q^-1")}


def _d3_collapse():
    ct = ScalarContext(("t", "q", "s", "b", "y"))
    return ct, {"p": ct.parse("t*q^-1"), "a": ct.parse("s*b^-1*y^-1")}


def _d4_collapse():
    ct = ScalarContext(("t", "q", "a", "b", "y", "c", "d", "g", "s", "w"))
    return ct, {"p": ct.parse("t*q^-1"), "h": ct.parse("s*g^-1")}


def _cell(table, link, column, value, ct, bindings, golden):
    computed = substitute(value, bindings, ct)
    expected = ct.parse(golden)
    return TableCell(
        table, link, column,
        format_scalar(computed), format_scalar(expected),
        computed == expected,
    )


def _run_table1():
    rows = classification_report()
    cells = tuple(
        TableCell(
            1,
            row["link"],
            f"{row['rmatrix']} row {row['row']}",
            row["value"],
            row["expected"],
            row["match"] != "no",
        )
        for row in rows
    )
    return TableReport(1, cells)


def _run_table2():
    jones = get_table1_eyb("R2.1", 1)
    dressed = preset_dressings("d3_R21").eyb
    ct_j, bind_j = _jones_collapse()
    ct_d, bind_d = _d3_collapse()
    cells = []
    for name in KNOT_NAMES:
        braid = get_named_braid(name).braid
        value = compute_ts(jones, braid, normalized=True).value
        cells.append(_cell(2, name, "jones", value, ct_j, bind_j, TABLE2_JONES[name]))
        value = compute_ts(dressed, braid, normalized=True).value
        cells.append(_cell(2, name, "dressed", value, ct_d, bind_d, TABLE2_DRESSED[name]))
    return TableReport(2, tuple(cells))


def _run_table3():
    jones = get_table1_eyb("R2.1", 1)
    preset = preset_dressings("d3_R21")
    ct_j, bind_j = _jones_collapse()
    ct_d, bind_d = _d3_collapse()
    cells = []
    unknot = compute_ts(preset.eyb, get_named_braid("0_1").braid).value
    cells.append(
        _cell(3, "0_1", "dressed-unknot-raw", unknot, ct_d, bind_d, TABLE3_UNKNOT_RAW)
    )
    for name in LINK_NAMES:
        braid = get_named_braid(name).braid
        value = compute_ts(jones, braid, normalized=True).value
        cells.append(_cell(3, name, "jones", value, ct_j, bind_j, TABLE3_JONES[name]))
        value = compute_ts(preset.eyb, braid, normalized=False).value
        cells.append(_cell(3, name, "dressed", value, ct_d, bind_d, TABLE3_DRESSED[name]))
    return TableReport(3, tuple(cells))


def _run_table4():
    preset = preset_dressings("d4_R22")
    ct, bind = _d4_collapse()
    cells = []
    for name, golden in TABLE4_LINKS.items():
        braid = get_named_braid(name).braid
        value = compute_ts(preset.eyb, braid, normalized=True).value
        cells.append(_cell(4, name, "dressed", value, ct, bind, golden))
    for name in KNOT_NAMES:
        braid = get_named_braid(name).braid
        value = compute_ts(preset.eyb, braid, normalized=True).value
        cells.append(_cell(4, name, "dressed", value, ct, bind, "1"))
    return TableReport(4, tuple(cells))


def run_table(which):
    """Recompute the requested table and diff it against the golden values."""
    runners = {1: _run_table1, 2: _run_table2, 3: _run_table3, 4: _run_table4}
    if which not in runners:
        raise UnknownName(f"no table {which}; choose 1..4")
    return runners[which]()
