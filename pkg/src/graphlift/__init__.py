"""Decide whether a graph map lifts to a codimension-one embedding."""

from .config import (
    ComponentMap,
    ConfigGraph,
    ObstructorWitness,
    act,
    build_config,
    components,
    find_obstructor,
    p_trivial,
    replay_witness,
)
from .errors import (
    GammaUndefinedError,
    GraphliftError,
    InadmissibleError,
    InputError,
    ParseError,
    ResourceCapError,
    ShapeError,
)
from .gamma import GammaFormula, NuPartition, build_gamma, enumerate_models, mu2_vanishes, nu3_closure, solve
from .gmap import parse_gmap, serialize_gmap
from .graphs import (
    Edge,
    FiberIndex,
    GraphMap,
    MultiGraph,
    fibers,
    identity_map,
    is_path,
    is_stable,
    is_tree,
    restrict_multiple,
    validate,
)
from .lifting import (
    Lifting,
    assignment_to_orders,
    brute_force_liftings,
    is_admissible,
    lifting_to_orders,
    orders_to_lifting,
    verify_embedding,
)
from .realize import CnfSpec, RealizationReport, parse_cnf, realize, validate_shape, verify_realization

__version__ = "0.1.0"
