"""Published tables, transcribed as data.

Labels use the ASCII encoding of the cycle grammar: ``1'`` (prime),
``1+`` (plus), ``1''`` (double prime). Rows are kept exactly as printed,
typos included; the verifier reports any disagreement instead of fixing it.
Each table is a tuple of frozen rows so fixtures cannot be edited in place;
use ``dataclasses.replace`` to build a modified copy.
"""
from __future__ import annotations

from dataclasses import dataclass

ICO_LABELS = ("1", "2", "3", "1'", "2'", "3'", "1+", "2+", "3+", "1''", "2''", "3''")
A5_LABELS = ("1", "2", "3", "4", "5")

GENERATOR_NAMES = ("D", "Y", "T")

# seed face of the first face-rotation axis; its opposite face is {1'',3'',2'}
SEED_FACE = ("1", "2+", "3")
SEED_OPPOSITE_FACE = ("1''", "3''", "2'")

# products act left to right; later words may use earlier names
ROTATION_WORDS = {
    "A": "DYDT",
    "Z": "YTYD",
    "V": "TDTY",
    "W": "DTYT",
    "B": "YDTD",
    "C": "TYDY",
    "X": "YA^2YV",
}

PRESENTATION = ("D^3=I", "Y^3=I", "T^3=I", "(DT)^2=I", "(DY)^2=I", "(YT)^2=I")

# the six vertex-rotation axes listed in the text
AXIS_VERTEX_PAIRS = (("1'", "1+"), ("2'", "2+"), ("3'", "3+"), ("1", "1''"), ("2", "2''"), ("3", "3''"))

# prose description of D: "carries 1 to 2+, 2+ to 3, 3 to 1; and 1'' to 2', 2' to 3'', 3'' to 1''"
D_PROSE_ACTION = "(1,2+,3)(1'',2',3'')"


@dataclass(frozen=True)
class Table1Row:
    name: str
    images: tuple[str, ...]
    table_id: int = 1


@dataclass(frozen=True)
class Table2Row:
    cycle: str
    rotation: str
    table_id: int = 2


@dataclass(frozen=True)
class Table3Row:
    edges: tuple[tuple[str, str], tuple[str, str]]
    word: str
    configuration: str  # "left" or "right" side of the shared-vertex picture
    table_id: int = 3


@dataclass(frozen=True)
class Table4Row:
    word: str
    images: str  # product of the two generator images, non-disjoint cycles
    rewrite: str | None  # same product with both 3-cycles rotated to share a prefix
    result: str
    table_id: int = 4


@dataclass(frozen=True)
class Table5Row:
    word: str
    fixed: tuple[str, str]
    cycles: str
    table_id: int = 5


@dataclass(frozen=True)
class Table6Row:
    index: int
    word: str
    factors: str
    q: str
    table_id: int = 6


@dataclass(frozen=True)
class Table7Row:
    cycle: str
    index: int
    exponent: int
    table_id: int = 7


def _row1(name: str, images: str) -> Table1Row:
    return Table1Row(name, tuple(images.split()))


#            1    2    3     1'   2'   3'    1+   2+   3+    1''  2''  3''
TABLE_1 = (
    _row1("D", "3    3'   2+    2    1''  1'    2''  1    1+    3''  3+   2'"),
    _row1("Y", "3+   1    1'    2'   3    2''   2+   3''  2     3'   1''  1+"),
    _row1("T", "2'   1+   2     3''  3'   1     3    3+   1''   2+   1'   2''"),
    _row1("A", "1+   1''  3'    2    3''  2+    2''  3    2'    1'   1    3+"),
    _row1("Z", "1'   2+   2''   3+   3    1''   3'   3''  1     1+   2'   2"),
    _row1("V", "3''  2'   3+    2''  1+   1     2    1'   1''   3    2+   3'"),
    _row1("X", "2    3    1     2'   3'   1'    2+   3+   1+    2''  3''  1''"),
    _row1("W", "2'   1''  1+    3+   2''  3     3'   2    3''   2+   1    1'"),
    _row1("B", "2+   3'   2''   1    1+   3''   1''  1'   3     2'   3+   2"),
    _row1("C", "3''  3+   1'    1''  2    2+    1    2''  2'    3    3'   1+"),
)

# read column by column, as printed
TABLE_2 = (
    Table2Row("(1,4,5)", "D"),
    Table2Row("(2,4,5)", "Y"),
    Table2Row("(3,4,5)", "T"),
    Table2Row("(1,3,5)", "C^2"),
    Table2Row("(2,3,5)", "B"),
    Table2Row("(1,2,5)", "W"),
    Table2Row("(1,3,4)", "Z^2"),
    Table2Row("(2,3,4)", "A"),
    Table2Row("(1,2,4)", "V"),
    Table2Row("(1,2,3)", "X"),
)

# read row by row, as printed; the last three form the bottom line
TABLE_3 = (
    Table3Row((("1", "2"), ("1''", "2''")), "CZ", "left"),
    Table3Row((("3+", "2"), ("3'", "2''")), "ZX", "left"),
    Table3Row((("2", "3"), ("2''", "3''")), "YD", "left"),
    Table3Row((("1+", "2"), ("1'", "2''")), "XW", "left"),
    Table3Row((("3", "1"), ("3''", "1''")), "TY", "left"),
    Table3Row((("2+", "3"), ("2'", "3''")), "XB", "left"),
    Table3Row((("1", "3+"), ("3'", "1''")), "XC", "left"),
    Table3Row((("1'", "3+"), ("3'", "1+")), "BY", "left"),
    Table3Row((("3", "1+"), ("1'", "3''")), "VX", "left"),
    Table3Row((("1'", "2+"), ("2'", "1+")), "CT", "left"),
    Table3Row((("1", "2+"), ("2'", "1''")), "AX", "left"),
    Table3Row((("2'", "3+"), ("3'", "2+")), "YV", "left"),
    Table3Row((("1", "1'"), ("1+", "1''")), "DY", "right"),
    Table3Row((("2", "2'"), ("2+", "2''")), "YT", "right"),
    Table3Row((("3", "3'"), ("3+", "3''")), "TD", "right"),
)

TABLE_4 = (
    Table4Row("CZ", "(1,5,3)(1,4,3)", "(3,1,5)(3,1,4)", "(3,4)(1,5)(2)"),
    Table4Row("YD", "(2,4,5)(1,4,5)", "(4,5,2)(4,5,1)", "(4,1)(5,2)(3)"),
    Table4Row("TY", "(3,4,5)(2,4,5)", "(4,5,3)(4,5,2)", "(4,2)(5,3)(1)"),
    Table4Row("XC", "(1,2,3)(1,5,3)", "(3,1,2)(3,1,5)", "(3,5)(1,2)(4)"),
    Table4Row("VX", "(1,2,4)(1,2,3)", None, "(1,3)(2,4)(5)"),
    Table4Row("AX", "(2,3,4)(1,2,3)", "(2,3,4)(2,3,1)", "(2,1)(3,4)(5)"),
    Table4Row("ZX", "(1,4,3)(1,2,3)", "(3,1,4)(3,1,2)", "(3,2)(1,4)(5)"),
    Table4Row("XW", "(1,2,3)(1,2,5)", None, "(1,5)(2,3)(4)"),
    Table4Row("XB", "(1,2,3)(2,3,5)", "(2,3,1)(2,3,5)", "(2,5)(1,3)(4)"),
    Table4Row("BY", "(2,3,5)(2,4,5)", "(5,2,3)(5,2,4)", "(5,4)(2,3)(1)"),
    Table4Row("CT", "(1,5,3)(3,4,5)", "(5,3,1)(5,3,4)", "(5,4)(3,1)(2)"),
    Table4Row("YV", "(2,4,5)(1,2,4)", "(2,4,5)(2,4,1)", "(2,1)(4,5)(3)"),
    Table4Row("DY", "(1,4,5)(2,4,5)", "(4,5,1)(4,5,2)", "(4,2)(5,1)(3)"),
    Table4Row("YT", "(2,4,5)(3,4,5)", "(4,5,2)(4,5,3)", "(4,3)(5,2)(1)"),
    Table4Row("TD", "(3,4,5)(1,4,5)", "(4,5,3)(4,5,1)", "(4,1)(5,3)(2)"),
)

TABLE_5 = (
    Table5Row("X^2D", ("1'", "1+"), "(1,2+,2'',3'',3+)(2,3,3',1'',2')"),
    Table5Row("X^2Y", ("2'", "2+"), "(1,1',2'',3',3)(2,3+,3'',1'',1+)"),
    Table5Row("X^2T", ("3'", "3+"), "(1,2,2',3'',1')(3,1+,1'',2'',2+)"),
    Table5Row("W^2A", ("1", "1''"), "(2,3,2+,1',3+)(2',1+,3',2'',3'')"),
    Table5Row("B^2Z", ("2", "2''"), "(1,3+,2',1+,3)(1',3'',1'',3',2+)"),
    Table5Row("C^2V", ("3", "3''"), "(1,2,1+,3',2+)(1',3+,2',1'',2'')"),
)

TABLE_6 = (
    Table6Row(1, "X^2D", "(1,3,2)(1,4,5)", "(1,3,2,4,5)"),
    Table6Row(2, "X^2Y", "(1,3,2)(2,4,5)", "(1,3,4,5,2)"),
    Table6Row(3, "X^2T", "(1,3,2)(3,4,5)", "(1,4,5,3,2)"),
    Table6Row(4, "W^2A", "(1,5,2)(2,3,4)", "(1,5,3,4,2)"),
    Table6Row(5, "B^2Z", "(2,5,3)(1,4,3)", "(1,4,3,2,5)"),
    Table6Row(6, "C^2V", "(1,3,5)(1,2,4)", "(1,3,5,2,4)"),
)

# read column by column, which is lexicographic order of the 5-cycles
TABLE_7 = (
    Table7Row("(1,2,3,4,5)", 6, 3),
    Table7Row("(1,2,3,5,4)", 3, 4),
    Table7Row("(1,2,4,3,5)", 4, 4),
    Table7Row("(1,2,4,5,3)", 5, 3),
    Table7Row("(1,2,5,3,4)", 1, 2),
    Table7Row("(1,2,5,4,3)", 2, 4),
    Table7Row("(1,3,2,4,5)", 1, 1),
    Table7Row("(1,3,2,5,4)", 4, 2),
    Table7Row("(1,3,4,2,5)", 3, 3),
    Table7Row("(1,3,4,5,2)", 2, 1),
    Table7Row("(1,3,5,2,4)", 6, 1),
    Table7Row("(1,3,5,4,2)", 5, 2),
    Table7Row("(1,4,2,3,5)", 2, 2),
    Table7Row("(1,4,2,5,3)", 6, 4),
    Table7Row("(1,4,3,2,5)", 5, 1),
    Table7Row("(1,4,3,5,2)", 1, 3),
    Table7Row("(1,4,5,2,3)", 4, 3),
    Table7Row("(1,4,5,3,2)", 3, 1),
    Table7Row("(1,5,2,3,4)", 5, 4),
    Table7Row("(1,5,2,4,3)", 3, 2),
    Table7Row("(1,5,3,2,4)", 2, 3),
    Table7Row("(1,5,3,4,2)", 4, 1),
    Table7Row("(1,5,4,2,3)", 1, 4),
    Table7Row("(1,5,4,3,2)", 6, 2),
)

TABLES = {1: TABLE_1, 2: TABLE_2, 3: TABLE_3, 4: TABLE_4, 5: TABLE_5, 6: TABLE_6, 7: TABLE_7}

TITLES = {
    1: "Face rotations and vertex permutations",
    2: "The 3-cycles of A5 and the face rotations of the icosahedron",
    3: "Edge rotations as products of face rotations",
    4: "Edge rotations and permutations of class k1=1,k2=2 of A5",
    5: "Vertex rotations generated by face rotations",
    6: "Permutations of A5 and 2pi/5 rotations of the icosahedron",
    7: "Powers Q_i^b of A5 and the rotations S_i^b",
}
