"""Vectors and Gram matrices of the explicit EE8 pairs in the Leech lattice.

Every vector is a 24-tuple in Leech coordinates (inner product x.y/8); the
4x6 array is read down each column in turn.
"""

# a basis of E(octad 1)
E_O1_BASIS = [
    [4, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -4, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 4, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -4, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 4, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, -4, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-4, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 2, 2, 2, 2, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
]

DIH6_16_N = [
    [2, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0, 0, 0, 2, 2, 2],
    [0, -2, 0, 0, 2, 0, 0, 0, 0, -2, 0, 0, 2, 0, 0, 0, 0, 0, 2, 0, 2, -2, -2, 0],
    [0, 2, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0, 0, -2, 0, 0, 0, 2, -2, 2, -2, 0, 0, 0],
    [0, 0, -2, 0, 0, 2, 0, 0, 0, 0, -2, 0, 0, 2, 0, 0, 0, -2, 0, 0, 2, 2, 0, -2],
    [0, 0, 2, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0, 0, -2, 0, 0, 2, 2, -2, -2, 0, 0, 0],
    [0, 0, 0, -2, 0, 0, 2, 0, 0, 0, 0, -2, 0, 0, 2, 0, 0, 0, -2, 0, 2, -2, 2, 0],
    [-2, 0, 0, 0, -2, 0, 0, 0, -2, 0, 0, 0, -2, 0, 0, 0, 0, -2, -2, -2, -2, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -3, 1, 1, 1, 1, 1, 1, 1],
]

# a basis of E(octad 2)
E_O2_BASIS = [
    [0, 0, -4, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -4, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 4, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 4, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -4, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 2, 2, 2, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0],
]

DIH8_16_0_N = [
    [0, -2, 0, -2, 0, -2, 0, -2, 0, -2, 0, -2, 0, -2, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 4, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-4, 0, 0, 0, 0, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, -2, 2, 2, 0, 0, 0, 0, 2, -2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -4, 0, 0, 0, 0, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 2, -2, 2, 2, 0, 0, 0, 0, 2, -2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 2, -2, 2, 2, 0, 0, 0, 0, 2, -2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0],
]

# a basis of E(octad 4)
DIH8_16_DD4_N = [
    [0, 0, 0, 0, 0, 0, 0, 0, 4, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, -4, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, -4, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 4, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, -2, -2, 0, 0, -2, -2, 0, 0, -2, -2, 0, 0, -2, -2, 0, 0],
]

DIH8_16_DD4_DELTA = [
    [0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1, 1, 1],
]

DIH8_16_DD4_ANN_N_M = [
    [0, 0, 0, 0, 0, 0, 0, 0, 4, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 4, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, -2, -2, 0, 0, -2, -2, 0, 0, -2, -2, 0, 0, -2, -2, 0, 0],
]

DIH8_16_DD4_GAMMA78P = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, -4, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 4, 0, 0, 0],
]

DIH8_16_DD4_ALPHA8P = [
    [0, 0, 0, 0, 0, 0, 0, 0, -2, 2, 0, 0, -2, 2, 0, 0, -2, 2, 0, 0, -2, 2, 0, 0],
]

DIH8_15_F = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 2, 0, 0, 2, -2, 0, 0, -2, -2, 0, 0, 2, 2],
]

DIH8_15_M = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, -4, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 2, 0, 0, 2, -2, 0, 0, -2, -2, 0, 0, 2, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 2, 0, 0, -2, 2, -2, 2, 0, 0, 2, -2, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, -4, 0, 0, 0],
    [0, 0, -2, 2, 0, 0, 2, -2, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2, 0, 0, 2, 2, 0, 0],
    [0, 0, 4, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -2, 2, 0, 0, -2, 2, 0, 0, 0, 0, 0, -2, 2, 0, 0, 2, 0, -2],
]

# alpha'_1, alpha'_3 .. alpha'_8
DIH8_15_N_EXTRA = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -4, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -4, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2, 0, 0, 2, -2, 0, 0, 2, 2, 0, 0, -2, 2, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0],
    [2, 0, 0, 0, 0, -2, 2, -2, 0, -2, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0],
    [0, 0, 0, 0, 0, 4, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-2, 0, 0, 0, 0, 0, 0, 2, 0, 0, -2, 0, 0, -2, 0, 0, 0, 0, 0, 2, 0, 2, 2, -2],
]

DIH10_16_M = [
    [4, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-2, 0, 0, 0, 2, 0, 2, -2, 0, 2, 0, 0, -2, 0, 0, 0, 0, 0, 0, 2, 0, 0, -2, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -4, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, -2, 0, 0, 2, -2, 0, 0, -2, 0, -2, 2, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -4, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, -2, -2, -2, 0, 0, -2, 2, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -4, 0, 0, 4, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -2, 2, 0, 0, 2, -2, 0, 0, 0, 0, -2, 0, 0, 2, 2, 0, -2, 0],
]

DIH10_16_N = [
    [4, 0, 0, 0, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-2, 0, 0, 0, 0, 2, -2, 2, 0, -2, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2, 0, 0, 2, -2, 0, 0, 2, 2, 0, 0, -2, 2, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -4, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2, 0, 0, 2, 2, 0, 0, -2, -2, 0, 0, 2, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, -4],
    [0, 0, 0, 0, 0, -2, 2, 0, 0, 0, -2, 2, 0, -2, 0, -2, 0, 0, 0, 0, 0, 2, 2, 0],
]

DIH12_16_ANN_M_N = [
    [0, 0, 4, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -2, 2, 0, 0, 0, 0, 0, 0, 2, -2, 0, 0, 0, 0, 2, 0, 2, 0, -2, 0, 0, -2],
]

DIH12_16_ANN_N_M = [
    [0, 0, 0, 0, 0, 0, 4, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -2, -2, 0, 0, 0, 0, 0, 0, -2, 2, 0, 2, 0, -2, 0, -2, 2, 0],
]

DIH12_16_M = [
    [4, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-2, 0, 2, -2, 2, 0, 0, 0, 0, 2, 0, 0, -2, 0, 0, 0, 0, 0, -2, 0, 0, 0, 0, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -4, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, -2, -2, 0, -2, 0, 2, 0, 2, 0, 0, 2, 0, -2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2, 0, 0, 2, -2, 2, 2, 0, 0, 2, -2, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, -4, 0, 0, 0, 0, 0, 0],
    [0, 0, -2, 2, 0, 0, 0, 0, 0, 0, 2, -2, 0, 0, 0, 0, 2, 0, -2, 0, -2, 0, 0, 2],
]

DIH12_16_N = [
    [4, 0, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-2, 0, 0, 0, 0, 2, 2, -2, 0, -2, 0, 0, 0, 2, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2, 0, 0, 2, -2, 0, 0, 2, 2, 0, 0, -2, 2, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, -4, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2, 0, 0, 2, -2, 0, 0, 2, 2, 0, 0, -2, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, -4, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -2, 2, 0, 0, -2, 2, 0, 0, 0, 0, 0, -2, 2, 0, 0, 2, 0, -2],
]

DIH12_16_MG = [
    [-4, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 0, 2, -2, 0, -2, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0, -2, 0, 0, 0, 2, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 2, 0, 0, 2, 2, 0, 2, 0, 2, -2, -2, 2, 0, -2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, -2, 2, 0, 0, -2, 2, 0, 0, -2, -2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, -4, 0],
    [0, 0, -2, 2, 0, 0, 0, 0, 0, 0, 2, -2, 0, 0, 0, 0, -2, 0, 2, 0, 2, 0, 0, -2],
]

DIH12_16_MG_CAP_N = [
    [4, 0, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, -2, -2, 0, 0, -2, 2, 0, 0, 2, -2],
    [-2, 0, 0, 0, 0, 2, 0, 0, 0, -2, -2, -2, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2],
]

# reference Gram matrices of M+N in the reference ordered bases
GRAMS = {
    'dih4_14': [
        [4, 0, 0, 0, 0, 0, 0, -2, 1, 0, 0, 0, 0, 1],
        [0, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, -2, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, -2, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, -2, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, -2, 4, -2, -2, 2, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, -2, 4, 0, -2, 0, 0, 0, 0, 0],
        [-2, 0, 0, 0, 0, -2, 0, 4, -2, 0, 0, 0, 0, -2],
        [1, 0, 0, 0, 0, 2, -2, -2, 4, -2, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, -2, 4, -2, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 4, -2, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 4, -2, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 4, 0],
        [1, 0, 0, 0, 0, 1, 0, -2, 0, 0, 0, 0, 0, 4],
    ],
    'dih4_12': [
        [4, 0, 2, 0, 0, 0, 0, -2, 0, 0, 0, -2],
        [0, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [2, -2, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, -2, 4, -2, 0, 0, 0, -2, 0, 0, 0],
        [0, 0, 0, -2, 4, -2, 0, 0, 2, 0, 0, -1],
        [0, 0, 0, 0, -2, 4, -2, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, -2, 4, 0, 0, 0, 0, 0],
        [-2, 0, 0, 0, 0, 0, 0, 4, -1, 0, 0, 2],
        [0, 0, 0, -2, 2, 0, 0, -1, 4, -2, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, -2, 4, -2, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 4, 0],
        [-2, 0, 0, 0, -1, 0, 0, 2, 0, 0, 0, 4],
    ],
    'dih6_16': [
        [4, -2, 0, 0, 0, 0, 0, 0, 2, -1, 0, 0, 0, 0, 0, 0],
        [-2, 4, -2, 0, 0, 0, -2, 0, -1, 2, -1, 0, 0, 0, -1, 0],
        [0, -2, 4, -2, 0, 0, 0, 0, 0, -1, 2, -1, 0, 0, 0, 0],
        [0, 0, -2, 4, -2, 0, 0, 0, 0, 0, -1, 2, -1, 0, 0, 0],
        [0, 0, 0, -2, 4, -2, 0, 0, 0, 0, 0, -1, 2, -1, 0, 0],
        [0, 0, 0, 0, -2, 4, 0, 0, 0, 0, 0, 0, -1, 2, 0, 0],
        [0, -2, 0, 0, 0, 0, 4, -2, 0, -1, 0, 0, 0, 0, 2, -1],
        [0, 0, 0, 0, 0, 0, -2, 4, 0, 0, 0, 0, 0, 0, -1, 2],
        [2, -1, 0, 0, 0, 0, 0, 0, 4, -2, 0, 0, 0, 0, 0, 0],
        [-1, 2, -1, 0, 0, 0, -1, 0, -2, 4, -2, 0, 0, 0, -2, 0],
        [0, -1, 2, -1, 0, 0, 0, 0, 0, -2, 4, -2, 0, 0, 0, 0],
        [0, 0, -1, 2, -1, 0, 0, 0, 0, 0, -2, 4, -2, 0, 0, 0],
        [0, 0, 0, -1, 2, -1, 0, 0, 0, 0, 0, -2, 4, -2, 0, 0],
        [0, 0, 0, 0, -1, 2, 0, 0, 0, 0, 0, 0, -2, 4, 0, 0],
        [0, -1, 0, 0, 0, 0, 2, -1, 0, -2, 0, 0, 0, 0, 4, -2],
        [0, 0, 0, 0, 0, 0, -1, 2, 0, 0, 0, 0, 0, 0, -2, 4],
    ],
    'dih6_14': [
        [4, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [-2, 4, -2, 0, 0, 0, -2, 0, -2, 0, 0, 0, 2, 0],
        [0, -2, 4, -2, 0, 0, 0, 0, 0, 1, 0, 0, -2, 0],
        [0, 0, -2, 4, -2, 0, 0, 0, 1, -2, 1, 0, 0, 0],
        [0, 0, 0, -2, 4, -2, 0, 0, 0, 1, -2, 1, 0, 0],
        [0, 0, 0, 0, -2, 4, 0, 0, 0, 0, 1, -2, 0, 0],
        [0, -2, 0, 0, 0, 0, 4, -2, 2, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, -2, 4, 0, 0, 0, 0, -1, -2],
        [0, -2, 0, 1, 0, 0, 2, 0, 4, -2, 0, 0, 0, 0],
        [0, 0, 1, -2, 1, 0, 0, 0, -2, 4, -2, 0, 0, 0],
        [0, 0, 0, 1, -2, 1, 0, 0, 0, -2, 4, -2, 0, 0],
        [0, 0, 0, 0, 1, -2, 0, 0, 0, 0, -2, 4, 0, 0],
        [0, 2, -2, 0, 0, 0, 0, -1, 0, 0, 0, 0, 4, 2],
        [0, 0, 0, 0, 0, 0, 1, -2, 0, 0, 0, 0, 2, 4],
    ],
    'dih8_16_0': [
        [4, 0, -2, 0, 0, 0, 0, -2, 1, -2, 2, 0, 0, 0, 0, 0],
        [0, 4, -2, 0, 0, 0, 0, 0, 1, -2, -2, 2, 0, 0, 0, 0],
        [-2, -2, 4, -2, 0, 0, 0, 0, -1, 2, 0, -2, 2, -1, 0, 0],
        [0, 0, -2, 4, -2, 0, 0, 0, 1, 0, 0, 0, -2, 2, 0, 0],
        [0, 0, 0, -2, 4, -2, 0, 0, -1, 0, 0, 1, 0, -2, 2, -1],
        [0, 0, 0, 0, -2, 4, -2, 0, 1, 0, 0, 0, 0, 0, -2, 2],
        [0, 0, 0, 0, 0, -2, 4, 0, -1, 0, 0, 0, 0, 1, 0, -2],
        [-2, 0, 0, 0, 0, 0, 0, 4, -2, 1, -1, 1, -1, 1, -1, 1],
        [1, 1, -1, 1, -1, 1, -1, -2, 4, -2, 0, 0, 0, 0, 0, 0],
        [-2, -2, 2, 0, 0, 0, 0, 1, -2, 4, 0, -2, 0, 0, 0, 0],
        [2, -2, 0, 0, 0, 0, 0, -1, 0, 0, 4, -2, 0, 0, 0, 0],
        [0, 2, -2, 0, 1, 0, 0, 1, 0, -2, -2, 4, -2, 0, 0, 0],
        [0, 0, 2, -2, 0, 0, 0, -1, 0, 0, 0, -2, 4, -2, 0, 0],
        [0, 0, -1, 2, -2, 0, 1, 1, 0, 0, 0, 0, -2, 4, -2, 0],
        [0, 0, 0, 0, 2, -2, 0, -1, 0, 0, 0, 0, 0, -2, 4, -2],
        [0, 0, 0, 0, -1, 2, -2, 1, 0, 0, 0, 0, 0, 0, -2, 4],
    ],
    'dih8_16_dd4': [
        [4, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, -2, 0, 0, -1],
        [-2, 4, -2, 0, 0, 0, 2, 0, 0, 0, 0, -1, 0, 1, 0, 0],
        [0, -2, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0, 2, -2, 0, 1],
        [0, 0, -2, 4, -2, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1, -1],
        [0, 0, 0, -2, 4, -2, 0, 0, 0, 0, 0, 0, 0, 2, -2, 1],
        [0, 0, 0, 0, -2, 4, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1],
        [0, 2, 0, 0, 0, 0, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, -2, 4, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 4, -2, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, -2, 4, -2, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 4, -2, 0, 0, 0, 0],
        [2, -1, 0, 0, 0, 0, 0, 0, 0, 0, -2, 4, -2, 0, 0, 0],
        [-2, 0, 2, -1, 0, 0, 0, 0, 0, 0, 0, -2, 4, -2, 0, 2],
        [0, 1, -2, 0, 2, -1, 0, 0, 0, 0, 0, 0, -2, 4, -2, 0],
        [0, 0, 0, 1, -2, 0, 0, 0, 0, 0, 0, 0, 0, -2, 4, 0],
        [-1, 0, 1, -1, 1, -1, 0, 0, 0, 0, 0, 0, 2, 0, 0, 4],
    ],
    'dih8_15': [
        [4, -2, 0, 0, 0, 0, 0, 0, 0, 2, -1, 0, 0, 0, 0],
        [-2, 4, -2, 0, 0, 0, 0, 0, -2, -2, 0, 0, 0, 0, 0],
        [0, -2, 4, -2, 0, 0, 0, -2, 2, 2, -1, 0, 0, 0, -1],
        [0, 0, -2, 4, -2, 0, 0, 0, 0, -1, 2, -1, 0, 0, 0],
        [0, 0, 0, -2, 4, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, -2, 4, -2, 0, 0, 0, -1, 1, 1, -1, 0],
        [0, 0, 0, 0, 0, -2, 4, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, -2, 0, 0, 0, 0, 4, -1, -1, 0, 1, -1, 1, 2],
        [0, -2, 2, 0, 0, 0, 0, -1, 4, 0, 0, 0, 0, 0, 0],
        [2, -2, 2, -1, 0, 0, 0, -1, 0, 4, -2, 0, 0, 0, -2],
        [-1, 0, -1, 2, 0, -1, 0, 0, 0, -2, 4, -2, 0, 0, 0],
        [0, 0, 0, -1, 0, 1, 0, 1, 0, 0, -2, 4, -2, 0, 0],
        [0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, -2, 4, -2, 0],
        [0, 0, 0, 0, 0, -1, 0, 1, 0, 0, 0, 0, -2, 4, 0],
        [0, 0, -1, 0, 0, 0, 0, 2, 0, -2, 0, 0, 0, 0, 4],
    ],
    'dih10_16': [
        [4, -2, 0, 0, 0, 0, 0, 0, 2, -1, 0, 0, 0, 0, 0, 0],
        [-2, 4, -2, 0, 0, 0, 0, 0, 0, -1, 1, -1, 1, -1, 1, 0],
        [0, -2, 4, -2, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0],
        [0, 0, -2, 4, -2, 0, 0, 0, 0, -1, 1, 0, 0, 1, -1, -1],
        [0, 0, 0, -2, 4, -2, 0, -2, 0, 0, 0, 1, -2, 1, 0, 1],
        [0, 0, 0, 0, -2, 4, -2, 0, 0, 0, 1, -2, 1, -1, 0, 1],
        [0, 0, 0, 0, 0, -2, 4, 0, 0, 1, -2, 2, 0, -1, 0, 0],
        [0, 0, 0, 0, -2, 0, 0, 4, -1, 1, 0, -1, 2, -1, 1, -2],
        [2, 0, 0, 0, 0, 0, 0, -1, 4, -2, 0, 0, 0, 0, 0, 0],
        [-1, -1, 1, -1, 0, 0, 1, 1, -2, 4, -2, 0, 0, 0, 0, 0],
        [0, 1, -2, 1, 0, 1, -2, 0, 0, -2, 4, -2, 0, 0, 0, 0],
        [0, -1, 1, 0, 1, -2, 2, -1, 0, 0, -2, 4, -2, 0, 0, 0],
        [0, 1, 0, 0, -2, 1, 0, 2, 0, 0, 0, -2, 4, -2, 0, -2],
        [0, -1, 0, 1, 1, -1, -1, -1, 0, 0, 0, 0, -2, 4, -2, 0],
        [0, 1, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0, 0, -2, 4, 0],
        [0, 0, 0, -1, 1, 1, 0, -2, 0, 0, 0, 0, -2, 0, 0, 4],
    ],
    'dih12_16': [
        [4, -2, 0, 0, 0, 0, 0, 0, 2, -1, 0, 0, 0, 0, 0, 0],
        [-2, 4, -2, 0, 0, 0, 0, 0, -1, 0, 1, -1, 1, 0, 0, -1],
        [0, -2, 4, -2, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0],
        [0, 0, -2, 4, -2, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 1],
        [0, 0, 0, -2, 4, -2, 0, -2, 0, 0, 0, 0, 0, -1, 0, 1],
        [0, 0, 0, 0, -2, 4, -2, 0, 0, -1, 0, 1, -1, 2, -1, -1],
        [0, 0, 0, 0, 0, -2, 4, 0, 0, 1, 0, -1, 0, -1, 2, 1],
        [0, 0, 0, 0, -2, 0, 0, 4, 0, 0, 0, -1, 2, 0, 0, -2],
        [2, -1, 0, 0, 0, 0, 0, 0, 4, -2, 0, 0, 0, 0, 0, 0],
        [-1, 0, 1, 0, 0, -1, 1, 0, -2, 4, -2, 0, 0, 0, 0, 0],
        [0, 1, -2, 1, 0, 0, 0, 0, 0, -2, 4, -2, 0, 0, 0, 0],
        [0, -1, 1, 0, 0, 1, -1, -1, 0, 0, -2, 4, -2, 0, 0, 0],
        [0, 1, 0, -1, 0, -1, 0, 2, 0, 0, 0, -2, 4, -2, 0, -2],
        [0, 0, 0, 0, -1, 2, -1, 0, 0, 0, 0, 0, -2, 4, -2, 0],
        [0, 0, 0, 0, 0, -1, 2, 0, 0, 0, 0, 0, 0, -2, 4, 0],
        [0, -1, 0, 1, 1, -1, 1, -2, 0, 0, 0, 0, -2, 0, 0, 4],
    ],
}
