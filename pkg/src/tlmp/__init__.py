"""Exact-rational computations for matched pairs of 3-Lie algebras.

Subpackages and modules:

- ``exactlinalg``: dense rational matrices, RREF, kernels, solving.
- ``structure``: 3-Lie algebras, pair actions, Jacobi and morphism verifiers.
- ``matched``: matched pairs, the six compatibility axioms, bicrossed product.
- ``representation``: matched-pair representations and semidirect products.
- ``cohomology``: degree 1-2 cochains, differentials, Z/B/H computations.
- ``extension``: abelian extensions, sections, infinitesimal deformations.
- ``wells``: automorphism restriction/lifting and the obstruction class.
- ``cli``: the ``tlmp`` command line front end.
"""

__version__ = "0.1.0"
