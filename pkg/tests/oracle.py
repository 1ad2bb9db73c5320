"""Independent reference computations built on sympy, used to freeze and
cross-check values that latkit derives with its own elimination code."""
from fractions import Fraction
from itertools import product

import sympy
from sympy.matrices.normalforms import smith_normal_form


def sym(M):
    return sympy.Matrix([[sympy.Rational(Fraction(x).numerator, Fraction(x).denominator)
                          for x in row] for row in M])


def det(M):
    if not M:
        return Fraction(1)
    d = sym(M).det()
    return Fraction(int(d.p), int(d.q))


def smith(M):
    """Nonzero invariant factors of an integer matrix, ascending."""
    if not M:
        return []
    S = smith_normal_form(sym(M), domain=sympy.ZZ)
    divs = [abs(int(S[i, i])) for i in range(min(S.shape))]
    return sorted(d for d in divs if d)


def rank(M):
    return sym(M).rank() if M else 0


def gram(form, basis):
    B = sym(basis)
    G = B * sym(form) * B.T
    return [[Fraction(int(G[i, j].p), int(G[i, j].q)) for j in range(G.cols)] for i in range(G.rows)]


def count_box(G, norm, box):
    """Coefficient vectors in the box with the given norm, by brute force."""
    n = len(G)
    G = [[Fraction(x) for x in row] for row in G]
    hits = 0
    for c in product(range(-box, box + 1), repeat=n):
        if any(c) and sum(c[i] * G[i][j] * c[j] for i in range(n) for j in range(n)) == norm:
            hits += 1
    return hits


def row_space_equal(A, B):
    """Same Z-row space: each side solves into the other with integer coefficients."""
    SA, SB = sym(A), sym(B)
    if SA.rank() != SB.rank() or SA.rank() != SA.rows or SB.rank() != SB.rows:
        return False
    for X, Y in ((SA, SB), (SB, SA)):
        try:
            sol = Y.T.gauss_jordan_solve(X.T)[0]
        except ValueError:
            return False
        if any(not x.is_integer for x in sol):
            return False
    return True
