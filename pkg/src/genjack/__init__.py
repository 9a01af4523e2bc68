"""Generalized Jack polynomials for the r-colored instanton moduli spaces.

>>> from genjack import jack_schur, parse_mp
>>> print(jack_schur(parse_mp("[2]")).coeffs[((2,),)])
t2^2 - t1*t2
"""
from ._version import __version__
from .envelope import (KINDS, VARIANTS, Chamber, TransitionMatrix, bruteforce_entry, entry,
                       euler_norm, jack, jack_all, jack_schur, transition)
from .oracle import apply_hamiltonian, eigen_check, jack_oracle_r1
from .partitions import Box, boxes, format_mp, multipartitions, parse as parse_mp, partitions
from .ring import Assignment, NonGenericAssignment, PoleError, RingElem, Specialized, Symbolic
from .symfunc import ColoredPoly, SchurExpansion, colored_schur, dual_schur, scalar_product

__all__ = [
    "__version__", "KINDS", "VARIANTS", "Chamber", "TransitionMatrix", "bruteforce_entry",
    "entry", "euler_norm", "jack", "jack_all", "jack_schur", "transition",
    "apply_hamiltonian", "eigen_check", "jack_oracle_r1",
    "Box", "boxes", "format_mp", "multipartitions", "parse_mp", "partitions",
    "Assignment", "NonGenericAssignment", "PoleError", "RingElem", "Specialized", "Symbolic",
    "ColoredPoly", "SchurExpansion", "colored_schur", "dual_schur", "scalar_product",
]
