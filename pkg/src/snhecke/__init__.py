"""
snhecke: exact Hecke-algebra and Kazhdan-Lusztig combinatorics for the
symmetric groups S_n, together with the complete degree-7 verification
pipeline for Kostant positivity and indecomposability of projective-functor
images.

The building blocks live in focused modules:

* :mod:`snhecke.perm` - permutations, Bruhat order, parabolic subgroups;
* :mod:`snhecke.tableaux` - Robinson-Schensted, cells, the a-function;
* :mod:`snhecke.laurent` - exact Laurent polynomials in v;
* :mod:`snhecke.hecke` - the algebra: standard / canonical / dual-canonical
  bases, the mu-function, the bilinear form, the on-disk basis cache;
* :mod:`snhecke.cato` - class vectors of theta_x L(y), order tests, Jantzen
  middles, Bruhat-walk compatibility;
* :mod:`snhecke.patterns` - (consecutive) pattern containment and the
  negativity witnesses;
* :mod:`snhecke.pipeline` - the classification stages, certificates, pair
  sweeps, checkpoints;
* :mod:`snhecke.indec` - the indecomposability case analysis;
* :mod:`snhecke.cli` - the command-line surface.
"""

from .backend import BACKEND
from .laurent import LaurentPoly
from .perm import Permutation, parse_perm, compressed_str

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "LaurentPoly",
    "Permutation",
    "parse_perm",
    "compressed_str",
    "__version__",
]
