"""Finite inverse semigroups, their filters, and transitive representations."""

__version__ = "0.1.0"

from .algebra import (
    ElementSet,
    GreenData,
    SemigroupTable,
    adjoin_identity,
    adjoin_zero,
    green_relations,
    natural_leq,
    product,
    triple_product,
    validate_inverse_semigroup,
)
from .engine import (
    FilterFamily,
    NobilityCertificate,
    Representation,
    basis_from_representation,
    build_representation,
    coset_family,
    decide_nobility,
    find_infinitesimal,
    is_infinitesimal_basis,
    is_infinitesimal_subsemigroup,
    magnitude_family,
    uniform_basis_check,
    verify_representation,
    wagner_preston,
)
from .errors import NobleError
from .filters import (
    Filter,
    conjugates,
    enumerate_filters,
    filter_closure,
    is_filter,
    principal_filter,
    same_magnitude,
    up_closure,
)
from .kernels import BACKEND
from .partial import (
    ConcreteFamily,
    PartialBijection,
    abstract_table_of,
    compose,
    generate_closure,
    invert,
    is_transitive,
    symmetric_inverse_semigroup,
)
