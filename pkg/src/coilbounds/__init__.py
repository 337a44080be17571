"""coilbounds: double coil knot diagrams and certified volume / lambda_1 bounds.

The package models the diagram families surrounding double coil knots
(knots whose crossings fit into two generalized twist regions on q
strands): standard alternating 2-bridge diagrams, clasped 2-bridge links,
the 3-component augmented parent links, and the coils themselves obtained
by filling the crossing circles.  On top of the combinatorics it evaluates
the explicit two-sided volume estimates and the lambda_1 sandwich that the
continued-fraction length k of the slope p/q controls.
"""

from .errors import (
    CoilboundsError,
    ZeroOverZero,
    NonHyperbolicSlope,
    UnsupportedTwistCurve,
    OracleCapExceeded,
    DiagramError,
    PDSyntaxError,
    NonQuadrivalent,
    EdgePairingError,
    NonPlanarRotation,
    NotAKnot,
    NotACrossingCircle,
    NoHyperbolicityCertificate,
    SlopeTooShort,
    VolumeBelowFloor,
    NoCertifiedRows,
    ConfigError,
)
from .slopes import (
    Slope,
    ContinuedFraction,
    reduce_slope,
    canonical_coil_slope,
    cfrac_expand,
    cfrac_eval,
    mirror_slope,
)
from .curves import (
    FramedCurve,
    LatticeTrace,
    curve_coordinates,
    curve_curve_intersection,
    arc_curve_intersection,
    brute_force_intersection,
    lattice_trace,
    dehn_twist,
)
from .diagrams import PlanarDiagram, TwistRegionPartition, parse_pd, emit_pd
from .generators import (
    CoilSpec,
    gen_two_bridge,
    gen_clasped_two_bridge,
    gen_double_coil,
    gen_augmented,
    fill_crossing_circle,
    generalized_twist_regions,
)
from .svg import render_svg, curve_svg
from .bounds import (
    CONSTANTS,
    Constants,
    VolumeInterval,
    SpectralInterval,
    HyperbolicityCertificate,
    Condition,
    parent_volume_interval,
    ell_param,
    dehn_filling_factor,
    slope_length_lower,
    cusp_slope_length_lower,
    coil_hyperbolicity_certificate,
    coil_volume_interval,
    lambda_lower,
    cheeger_upper,
    buser_upper,
    lambda_upper,
    coil_lambda_interval,
    disk_obstruction_check,
    bound_report,
)
from .family import (
    CoilFamily,
    FamilyReport,
    FamilyRow,
    fixed_slope_vary_twists,
    vary_slope_fixed_twists,
    analyze_family,
    expanding_verdict,
    twist_growth_experiment,
    load_family_config,
)

__version__ = "0.1.0"
