"""Exact symbolic engine for q-commuting variable algebras.

Subpackages cover rational-function scalars over Q(q), a generic twisted
Laurent ring, classical Weyl group actions, the symmetrization / recursion
machinery for q-difference invariants, congruence normal forms of
skew-symmetric integer matrices, a PBW rewriting engine for quantized Weyl
algebras, and a Gelfand-Tsetlin style realization of U_q(gl_N).  Everything
is exact: integer and rational arithmetic only, no floats.
"""

__version__ = "0.1.0"
