"""Reference configurations used for certification.

Everything here is transcribed data (as text in the expression grammar);
nothing is computed.  Symbols: ``t`` is the parameter of the 48-50 family,
``s`` the rational parameter with t = 2s/(s^2+1).
"""
from __future__ import annotations

HEISENBERG = {
    "A1": [[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]],
    "A2": [[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    "A3": [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
    "A4": [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
}

# extra generators of the automorphism groups in the 48-50 family
CYCLE4 = [[0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]
SWAP01 = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
SIGN2 = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]]
DIAG_II = [["i", 0, 0, 0], [0, "i", 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]]
A5 = [[0, 0, 1, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1]]

# normalizer elements
B1 = [["i", 0, 0, 0], [0, "i", 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
B2 = [["-i", 0, 0, "i"], [0, 1, 1, 0], [1, 0, 0, 1], [0, "-i", "i", 0]]

NORMALIZER_RELATIONS = ["B2^5", "(B1*B2)^6", "[B1,B2]^3"]
NORMALIZER_RELATIONS_MOD_H = ["B1^2", "[B1,B2*B1*B2]^2"]

_P = "x0^4+x1^4+x2^4+x3^4"
_U = "(x0^2*x1^2+x2^2*x3^2)"
_V = "(x0^2*x2^2+x1^2*x3^2)"
_W = "(x0^2*x3^2+x1^2*x2^2)"
SEXTET_QUARTICS = [
    f"{_P}-6*{_U}-6*{_V}-6*{_W}",
    f"{_P}-6*{_U}+6*{_V}+6*{_W}",
    f"{_P}+6*{_U}-6*{_V}+6*{_W}",
    f"{_P}+6*{_U}+6*{_V}-6*{_W}",
    f"{_P}-12*x0*x1*x2*x3",
    f"{_P}+12*x0*x1*x2*x3",
]
B1_PERMUTATION = "(1 2)(3 4)(5 6)"
B2_PERMUTATION = "(1 2 6 3 5)"

# the 48-50 family, written with the parameter t
NODES_48_50 = [
    ["1", "1", "1", "t"], ["-1", "1", "-1", "t"], ["-1", "-1", "1", "t"], ["1", "-1", "-1", "t"],
    ["1", "1", "t", "1"], ["1", "-1", "t", "-1"], ["-1", "-1", "t", "1"], ["-1", "1", "t", "-1"],
    ["t", "1", "1", "1"], ["t", "-1", "1", "-1"], ["t", "1", "-1", "-1"], ["t", "-1", "-1", "1"],
    ["1", "t", "1", "1"], ["-1", "t", "-1", "1"], ["1", "t", "-1", "-1"], ["-1", "t", "1", "-1"],
]

TROPES_48_50 = [
    "x0+x1+x2+t*x3", "x0-x1+x2-t*x3", "x0+x1-x2-t*x3", "x0-x1-x2+t*x3",
    "x0+x1+t*x2+x3", "x0-x1+t*x2-x3", "x0-t*x2+x1-x3", "x0-x1-t*x2+x3",
    "x0+t*x1+x2+x3", "x0-t*x1-x2+x3", "x0-t*x1+x2-x3", "x0+t*x1-x2-x3",
    "t*x0+x1+x2+x3", "t*x0-x1-x2+x3", "t*x0-x1+x2-x3", "t*x0+x1-x2-x3",
]

CONIC_1 = "t*x1*x3+t*x2*x3+x1^2+x1*x2+x2^2-x3^2"
CONIC_1_NODES = [
    ["1", "-1", "t", "-1"], ["-1", "1", "t", "-1"], ["t", "-1", "1", "-1"],
    ["t", "1", "-1", "-1"], ["1", "t", "-1", "-1"], ["-1", "t", "1", "-1"],
]
CONIC_1_BASE = ["t", "1", "-1", "-1"]
BRANCH_POINTS_48_50 = [["t+1", "-2"], ["1", "0"], ["-1", "1"], ["1-t", "1+t"], ["0", "1"], ["t-1", "2"]]
SEXTIC_48_50 = "x*y*(x-y)*((t-1)*x+2*y)*(2*x-(t+1)*y)*((t+1)*x-(t-1)*y)"
SEXTIC_S4 = "x*y*(x^4-y^4)"

# reduced automorphism orders |Aut(C)/<iota>| claimed for special parameters
REDUCED_AUT_CLAIMS = {"2": 6, "3": 12, "i": 24}
AUT_ORDER_CLAIMS = {"t0": 192, "ti": 384, "z5": 80, "general": 96}

# sheet equations w = g_i on the tropes, written over Q(s)
_SHEET_SCALE = "(s^2-1)/(s^2+1)^2"
_u, _v = "(s^2+1)", "(2*s)"
_SHEET_CONICS = [
    f"{_u}*x1^2+{_u}*x1*x2+{_v}*x1*x3+{_u}*x2^2+{_v}*x2*x3-{_u}*x3^2",
    f"{_u}*x1^2-{_u}*x1*x2+{_v}*x1*x3+{_u}*x2^2-{_v}*x2*x3-{_u}*x3^2",
    f"{_u}*x1^2-{_u}*x1*x2-{_v}*x1*x3+{_u}*x2^2+{_v}*x2*x3-{_u}*x3^2",
    f"{_u}*x1^2+{_u}*x1*x2-{_v}*x1*x3+{_u}*x2^2-{_v}*x2*x3-{_u}*x3^2",
    f"{_u}*x0^2+{_v}*x2*x0+{_u}*x3*x0-{_u}*x2^2+{_v}*x2*x3+{_u}*x3^2",
    f"{_u}*x0^2+{_v}*x2*x0-{_u}*x3*x0-{_u}*x2^2-{_v}*x2*x3+{_u}*x3^2",
    f"{_u}*x0^2-{_v}*x2*x0-{_u}*x3*x0-{_u}*x2^2+{_v}*x2*x3+{_u}*x3^2",
    f"{_u}*x0^2-{_v}*x2*x0+{_u}*x3*x0-{_u}*x2^2-{_v}*x2*x3+{_u}*x3^2",
    f"{_u}*x0^2+{_v}*x1*x0+{_u}*x3*x0-{_u}*x1^2+{_v}*x1*x3+{_u}*x3^2",
    f"{_u}*x0^2-{_v}*x1*x0+{_u}*x3*x0-{_u}*x1^2-{_v}*x1*x3+{_u}*x3^2",
    f"{_u}*x0^2-{_v}*x1*x0-{_u}*x3*x0-{_u}*x1^2+{_v}*x1*x3+{_u}*x3^2",
    f"{_u}*x0^2+{_v}*x1*x0-{_u}*x3*x0-{_u}*x1^2-{_v}*x1*x3+{_u}*x3^2",
    f"{_u}*x0^2-{_v}*x1*x0-{_v}*x2*x0-{_u}*x1^2-{_u}*x1*x2-{_u}*x2^2",
    f"{_u}*x0^2+{_v}*x1*x0+{_v}*x2*x0-{_u}*x1^2-{_u}*x1*x2-{_u}*x2^2",
    f"{_u}*x0^2+{_v}*x1*x0-{_v}*x2*x0-{_u}*x1^2+{_u}*x1*x2-{_u}*x2^2",
    f"{_u}*x0^2-{_v}*x1*x0+{_v}*x2*x0-{_u}*x1^2+{_u}*x1*x2-{_u}*x2^2",
]
SHEETS_48_50_S = [f"{_SHEET_SCALE}*({g})" for g in _SHEET_CONICS]
# the plane printed next to the second sheet; it differs from the trope table
SHEET_2_PRINTED_PLANE = "x0-x1+x2+2*s/(s^2+1)*x3"

GRAM_48_50_PLUS = [
    [-1, 1, 1, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0],
    [1, -1, 1, 1, 0, 1, 0, 1, 1, 0, 1, 0, 0, 0, 1, 1],
    [1, 1, -1, 1, 1, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 1],
    [1, 1, 1, -1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 0, 0],
    [1, 0, 1, 0, -1, 1, 1, 1, 1, 1, 0, 0, 1, 0, 1, 0],
    [0, 1, 0, 1, 1, -1, 1, 1, 0, 0, 1, 1, 1, 0, 1, 0],
    [1, 0, 1, 0, 1, 1, -1, 1, 0, 0, 1, 1, 0, 1, 0, 1],
    [0, 1, 0, 1, 1, 1, 1, -1, 1, 1, 0, 0, 0, 1, 0, 1],
    [1, 1, 0, 0, 1, 0, 0, 1, -1, 1, 1, 1, 1, 0, 0, 1],
    [0, 0, 1, 1, 1, 0, 0, 1, 1, -1, 1, 1, 0, 1, 1, 0],
    [1, 1, 0, 0, 0, 1, 1, 0, 1, 1, -1, 1, 0, 1, 1, 0],
    [0, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1, -1, 1, 0, 0, 1],
    [1, 0, 0, 1, 1, 1, 0, 0, 1, 0, 0, 1, -1, 1, 1, 1],
    [1, 0, 0, 1, 0, 0, 1, 1, 0, 1, 1, 0, 1, -1, 1, 1],
    [0, 1, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 1, 1, -1, 1],
    [0, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 1, 1, -1],
]
GRAM_RANK = 7

# sign characters on (A1, A2, A3, A4)
RHO_TRIVIAL = {"A1": 1, "A2": 1, "A3": 1, "A4": 1}
RHO_MIXED = {"A1": -1, "A2": 1, "A3": -1, "A4": 1}

# Heisenberg-invariant incidence geometry
LINES = [
    ("x0", "x1"), ("x2", "x3"), ("x0", "x2"), ("x1", "x3"), ("x0", "x3"), ("x1", "x2"),
    ("x0+x1", "x2+x3"), ("x0-x1", "x2-x3"), ("x0+x2", "x1+x3"), ("x0-x2", "x1-x3"),
    ("x0+x3", "x1+x2"), ("x0-x3", "x1-x2"), ("x0+x1", "x2-x3"), ("x0-x1", "x2+x3"),
    ("x0+x2", "x1-x3"), ("x0-x2", "x1+x3"), ("x0+x3", "x1-x2"), ("x0-x3", "x1+x2"),
    ("x0+i*x1", "x2+i*x3"), ("x0-i*x1", "x2-i*x3"), ("x0+i*x2", "x1+i*x3"), ("x0-i*x2", "x1-i*x3"),
    ("x0+i*x3", "x1+i*x2"), ("x0-i*x3", "x1-i*x2"), ("x0-i*x1", "x2+i*x3"), ("x0+i*x1", "x2-i*x3"),
    ("x0+i*x2", "x1-i*x3"), ("x0-i*x2", "x1+i*x3"), ("x0+i*x3", "x1-i*x2"), ("x0-i*x3", "x1+i*x2"),
]

QUADRICS = [
    "x0^2+x1^2+x2^2+x3^2", "x0^2+x1^2-x2^2-x3^2", "x0^2-x1^2-x2^2+x3^2", "x0^2-x1^2-x3^2+x2^2",
    "x0*x2+x1*x3", "x0*x3+x1*x2", "x0*x1+x2*x3", "x0*x2-x1*x3", "x0*x3-x1*x2", "x0*x1-x2*x3",
]

# rows l1..l30, columns Q1..Q10, '+' = line contained in quadric (verbatim)
INCIDENCE = [
    "----++-++-", "----++-++-", "-----++-++", "-----++-++", "----+-++-+", "----+-++-+",
    "--++---++-", "--++---++-", "-++-----++", "-++-----++", "-+-+---+-+", "-+-+---+-+",
    "--++++----", "--++++----", "-++--++---", "-++--++---", "-+-++-+---", "-+-++-+---",
    "++--+---+-", "++--+---+-", "+--+--+-+-", "+--+--+-+-", "+-+-+-++--", "+-+---++--",
    "++---+-+--", "++---+-+--", "+--+-+---+", "+--+-+---+", "+-+-+----+", "+-+-+----+",
]

SIGMA_ORBITS = [
    [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]],
    [["1", "1", "1", "-1"], ["1", "1", "-1", "1"], ["1", "-1", "1", "1"], ["-1", "1", "1", "1"]],
    [["1", "1", "1", "1"], ["-1", "-1", "1", "1"], ["1", "-1", "-1", "1"], ["-1", "1", "-1", "1"]],
    [["0", "0", "1", "1"], ["1", "1", "0", "0"], ["0", "0", "-1", "1"], ["1", "-1", "0", "0"]],
    [["1", "0", "1", "0"], ["0", "1", "0", "1"], ["-1", "0", "1", "0"], ["0", "-1", "0", "1"]],
    [["0", "1", "1", "0"], ["1", "0", "0", "1"], ["0", "-1", "1", "0"], ["-1", "0", "0", "1"]],
    [["i", "0", "0", "1"], ["0", "i", "1", "0"], ["-i", "0", "0", "1"], ["0", "-i", "1", "0"]],
    [["i", "0", "1", "0"], ["0", "i", "0", "1"], ["0", "-i", "0", "1"], ["-i", "0", "1", "0"]],
    [["i", "1", "0", "0"], ["0", "0", "i", "1"], ["-i", "1", "0", "0"], ["0", "0", "-i", "1"]],
    [["i", "i", "1", "1"], ["-i", "-i", "1", "1"], ["i", "-i", "-1", "1"], ["-i", "i", "-1", "1"]],
    [["1", "i", "i", "1"], ["1", "-i", "-i", "1"], ["-1", "-i", "i", "1"], ["-1", "i", "-i", "1"]],
    [["1", "i", "-i", "1"], ["-1", "i", "i", "1"], ["-1", "-i", "-i", "1"], ["1", "-i", "i", "1"]],
    [["i", "1", "i", "1"], ["-i", "1", "-i", "1"], ["-i", "-1", "i", "1"], ["i", "-1", "-i", "1"]],
    [["i", "1", "-i", "1"], ["i", "-1", "i", "1"], ["-i", "-1", "-i", "1"], ["-i", "1", "i", "1"]],
    [["i", "i", "-1", "1"], ["-i", "-i", "-1", "1"], ["i", "-i", "1", "1"], ["-i", "i", "1", "1"]],
]

# the order-5 symmetry of the Z5 surface
Z5_MATRIX = B2

MATRICES = {
    **HEISENBERG,
    "CYCLE4": CYCLE4,
    "SWAP01": SWAP01,
    "SIGN2": SIGN2,
    "DIAG_II": DIAG_II,
    "A5": A5,
    "B1": B1,
    "B2": B2,
}
