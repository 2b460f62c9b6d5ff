"""Census engine for (Z_2)^n actions over surfaces and polytopes with corners.

Exact combinatorics only: GF(2) linear algebra on bitmasks, cycle coloring
counts under dihedral and recoloring symmetry, characteristic facet
labelings on face posets, Euler characteristics of the covered manifolds,
classification counts as coset cardinalities, and the glued cell complexes
realizing the 2-dimensional covers.
"""

from .charfuns import (CharFunction, aut_act, charfun_to_coloring,
                       coloring_to_charfun, count_double_cosets, count_gl_orbits,
                       enumerate_char_functions, facet_automorphism_group, gl_act,
                       is_facet_automorphism, is_valid_assignment)
from .classify import (ClassificationReport, H1Model, compute_h,
                       count_equivalence_classes, count_equivariant_classes_small_cover,
                       count_equivariant_classes_surface, count_weak_classes, disk_h1,
                       full_census, h1_from_generators, rp2_minus_disk_h1,
                       torus_minus_disk_h1)
from .covers import (IdentificationComplex, build_small_cover, connected_components,
                     cover_census, euler_of_complex, orbit_census, surface_type)
from .cycles import (CycleColoring, DihedralElement, act_color_symmetry, act_dihedral,
                     burnside_orbit_count, combined_actions, count_bracelets,
                     count_bracelets_up_to_recoloring, count_proper_colorings,
                     dihedral_actions, dihedral_group, enumerate_colorings, totient)
from .errors import (CapacityError, ConsistencyError, DimensionMismatchError,
                     UnsupportedShapeError)
from .euler import (FaceEulerData, euler_2d, euler_from_chi, euler_total,
                    is_orientable_cover, surface_annotations)
from .gf2 import Mat, basis, enumerate_gl, gl_order, is_independent, rank
from .orbit_spaces import (Face, FacePoset, SurfaceWithBoundary, boundary_cycle,
                           build_cylinder, build_polygon, build_prism, build_simplex,
                           check_nice, disjoint_union, parse_poset, poset_to_text,
                           surface_poset)

__version__ = "0.1.0"
