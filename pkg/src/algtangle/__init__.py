"""Algebraic tangles: slopes, essential surfaces, determinants and closed-surface decisions."""

import sys

from .decision import (
    SurfaceExistenceReport,
    check_meridian_lemma,
    decide,
    decide_closed_surface,
    decide_sphere,
    decide_torus,
)
from .determinant import (
    KrebesFraction,
    bracket_determinant,
    check_slope_consistency,
    denominator_closure,
    determinant,
    krebes_divisibility_check,
    krebes_fraction,
    numerator_closure,
)
from .diagram import Diagram, tangle_diagram
from .errors import (
    ClosedSubtangle,
    Disconnected,
    IndefiniteProduct,
    InvalidTemplate,
    LoopPresent,
    NonTrivialSumViolation,
    NotAlgebraicallyAlternating,
    ParseError,
    PreconditionViolated,
    TangleError,
)
from .expr import Product, QLoop, RationalSeq, Reflect, Rotate, Sum
from .notation import parse, render
from .rational import INF, ExtendedRational
from .slope import (
    ParityType,
    classify,
    connection_type,
    find_closed_subtangles,
    find_qm_summands,
    has_loop,
    slope,
    sum_type,
)
from .surface import SurfaceData, genus, surface_of, surface_report
from .template import (
    DiagramTemplate,
    assemble,
    basic_diagram,
    find_cut_tangles,
    is_algebraically_alternating,
    load_template,
    trace_components,
    validate_template,
)

__all__ = sorted(name for name, value in list(globals().items())
                 if not name.startswith("_") and not isinstance(value, type(sys)))
