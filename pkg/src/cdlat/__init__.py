"""Exact Chermak-Delgado measures and lattices of finite groups."""

from .group import (UNKNOWN, Group, SubgroupSet, center, centralizer, closure,
                    from_cayley_table, is_nilpotent, is_normal)
from .constructors import (ActionSpec, GroupSpec, build_group, cyclic, dihedral,
                           direct_product, heisenberg_gf, quaternion8,
                           scalar_automorphism_extension, semidirect_product,
                           symmetric, zm_group)

__version__ = "0.1.0"
