"""Exact lattice toolkit: integer matrix normal forms, rational lattices,
short-vector enumeration, involutions of the Leech lattice and a
verification harness for pairs of EE8 sublattices.

Submodules: exactmat, lattice, shortvec, involution, atlas, leech, verify,
cli.  The enumeration kernel is compiled with Cython when available; set
LATKIT_PURE=1 to force the pure-Python kernel.
"""
__version__ = "0.1.0"
