"""Finite digroups: axiom checking, invariants, transformation digroups and
their Cayley-style representation theorem, and small-order classification."""

from .cayley import Embedding, TranslationGroup, embed, theta_hom, translation_group, verify_embedding
from .core import (
    CentersPair,
    Digroup,
    FiberPartition,
    InversePair,
    ValidationReport,
    all_subdigroups,
    centers,
    decompose,
    fiber_partition,
    find_isomorphism,
    group_digroup,
    halo,
    identities,
    inverses,
    is_subdigroup,
    left_translation,
    projection_digroup,
    psi,
    relabel,
    validate_digroup,
)
from .enumeration import brute_enumerate, canonical_key, constructive_enumerate, cross_check
from .errors import (
    DigroupError,
    GuardError,
    InvalidDigroupError,
    InvariantViolation,
    NotABarUnitError,
    NotAHomomorphismError,
    ParseError,
    StructureError,
    VerificationError,
)
from .groups import catalog_group, groups_of_order, named_group_digroup
from .perms import (
    GroupHomomorphism,
    PermGroup,
    Permutation,
    closure,
    compose,
    hom_from_images,
    invert,
    symmetric_group,
)
from .transform import LMap, TransDigroupSpec, analyze_formulaic, build, ex4_spec

__version__ = "0.1.0"
