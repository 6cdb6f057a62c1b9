"""Independent-set count vectors for graphs whose adjacency is not shipped.

G38 is House of Graphs id 49521 (cubic, girth >= 7); its vector and that of
the Tutte-Coxeter graph are published values.  G32 (id 49999, 4-regular,
girth >= 5) has no published vector and must be supplied as graph6.
"""

G38_VECTOR = (
    1, 38, 646, 6498, 43111, 199120, 658882, 1583954, 2777315,
    3537622, 3238356, 2097330, 947518, 300924, 72142, 14802, 2660, 380, 38, 2,
)

TUTTE_COXETER_VECTOR = (
    1, 30, 390, 2890, 13515, 41736, 86610, 120690, 111225, 66090, 24948, 6420, 1370, 240, 30, 2,
)

PETERSEN_VECTOR = (1, 10, 30, 30, 5)
GP72_VECTOR = (1, 14, 70, 154, 147, 49)
G14_VECTOR = (1, 14, 70, 154, 147, 48)
DODECAHEDRON_VECTOR = (1, 20, 160, 660, 1510, 1912, 1240, 320, 5)

# Published breakpoint polynomials, coefficients low degree first, with any
# constant moved back to the left-hand side.
BREAKPOINT_POLYNOMIALS = {
    "lambda1": (-3, -30, -105, -144, -21, 110, 65),
    "lambda2": (1, 34, 307, 1276, 2777, 3158, 1639, 180, -72),
    "lambda3": (-38, -401, -1610, -2879, -1820, 541, 819, 90),
    "lambda4": (-65, -679, -2265, -593, 11895, 23576, 11321, -7612, -7040, -724, 8),
    "lambda5": (6, 137, 1356, 7266, 22158, 36870, 25646, -9658, -25296, -11612, -952, -24),
    "lambda6": (-17, -181, -747, -1477, -1340, -318, 252, 132),
    "b1": (-3, -10, -5, 5),
}

BREAKPOINT_VALUES = {
    "lambda1": "1.21338",
    "lambda2": "6.87002",
    "lambda3": "1.77239",
    "lambda4": "0.434965",
    "lambda5": "1.23423",
    "lambda6": "2.27938",
    "b1": "2.0927",
    "b2": "17.264",
}
