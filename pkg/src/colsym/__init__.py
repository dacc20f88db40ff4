"""Perfect colourings of regular and Laves tilings.

Counts and renders the colourings of the (p, q) tilings whose colour
classes are permuted by every symmetry of the tiling.  Colourings with k
colours correspond to conjugacy classes of index-k subgroups of the
tiling's symmetry group that contain the stabilizer of one tile, so the
heart of the package is a low-index subgroup enumerator for the
reflection groups of right triangles with angles pi/p and pi/q.
"""

__version__ = "0.1.0"

from .errors import (
    CacheError,
    CapacityExceeded,
    ColsymError,
    DomainError,
    InternalError,
    MergeInconsistency,
    ParseError,
    ResourceLimit,
)
from .presentations import (
    Geometry,
    Presentation,
    classify_geometry,
    triangle_group,
    von_dyck_group,
)
from .words import REFLECTIONS, ROTATIONS, Word, free_reduce, sign_parity
from .coset import CosetTable, apply_word, canonical_table, enumerate_cosets, reroot, standardize, validate
from .lowindex import ClassList, low_index_classes, oracle_classes
from .subgroups import (
    SubgroupRecord,
    conjugate_in,
    fixed_cosets,
    is_orientation_subgroup,
    schreier_generators,
    transversal_words,
)
from .census import (
    CensusEntry,
    CensusReport,
    Scope,
    TilingKind,
    census,
    colour_permutation,
    colours_transitive,
    compare_reports,
    format_census,
    permutation_homomorphism_check,
    required_words,
)
from .geometry import FundamentalTriangle, TrianglePatch, fundamental_triangle, generate_patch
from .render import ColouredPatch, colour_histogram, colour_patch, emit_svg, verify_perfect_on_patch
from .cache import cached_provider, load_classes, store_classes
from .selftest import run_selftest
