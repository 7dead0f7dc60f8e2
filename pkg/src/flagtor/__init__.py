"""Exact homotopy invariants of moment-angle complexes.

For a flag simplicial complex K this package computes, in exact
arithmetic, the Tor modules of the Pontryagin (loop homology) algebra of
the moment-angle complex Z_K, minimal generator and relation counts, the
multigraded Poincare series, the ranks of the rational homotopy groups,
and the Lusternik-Schnirelmann category, with every quantity obtainable
by two independent routes cross-checked.  See the demos/ directory for
worked examples and the `flagtor` command for the CLI.
"""

from .complexes import SimplicialComplex, from_facets
from .homology import GF, INTEGERS, RATIONALS

__all__ = ["SimplicialComplex", "from_facets", "GF", "INTEGERS", "RATIONALS"]
__version__ = "0.1.0"
