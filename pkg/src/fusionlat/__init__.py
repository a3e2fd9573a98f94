"""Exact SU(2)_k fusion rings, modular data, A-D-E nimreps, and
intermediate-subfactor lattices of Goodman-de la Harpe-Jones subfactors.

The package keeps two independent computational routes wherever the
underlying identity is a theorem (rule-based fusion vs. the Verlinde
formula, recorded lattice fixtures vs. pair enumeration) so each can
check the other.
"""

__version__ = "0.1.0"

from .fusion import FusionRing
from .fusion import make_level
from .modular import ModularData
from .modular import make_modular
from .nimrep import ADEGraph
from .nimrep import build_nimrep
from .ghj import SectorCatalog
from .ghj import load_catalog
from .groups import FiniteGroup
