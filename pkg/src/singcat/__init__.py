"""Singularity-category toolkit.

Subpackages:

- ``quiver``: presentations of quivers with length-two zero relations.
- ``gentle``: gentle recognition, critical cycles, Gorenstein projective
  classification and the block decomposition of the singularity invariant.
- ``nodal``: Hom dimensions, minimal string complexes, K-theory and the
  Auslander-Reiten components of the nodal block.
- ``surface``: resolution graphs of rational surface singularities,
  fundamental cycles, continued fractions and ADE contraction blocks.
- ``dg_auslander``: graded quivers with mesh differentials for ADE
  configurations in either dimension parity.
- ``cli``: the ``singcat`` command line tool.
"""

from . import cli, dg_auslander, gentle, nodal, quiver, surface

__all__ = ["quiver", "gentle", "nodal", "surface", "dg_auslander", "cli"]
__version__ = "0.1.0"
