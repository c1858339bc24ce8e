"""Exact root-configuration classification for real monic cubics and quartics."""

from .crosscheck import CrossCheck, classify, three_way
from .cubic import (
    CubicCoeffs,
    CubicComplexConfig,
    CubicConfig,
    CubicInvariants,
    CubicReport,
    classify_cubic,
    cubic_complex_configuration,
    cubic_double_root,
    cubic_invariants,
    cubic_positive_single_count,
    cubic_single_root_offset,
)
from .oracle import (
    Interval,
    RootStructure,
    isolate_real_roots,
    oracle_classify,
    sample_labeled_instances,
    squarefree_multiplicity_split,
    structure_config,
)
from .poly import Poly, rat
from .quartic import (
    QuarticCoeffs,
    QuarticComplexConfig,
    QuarticConfig,
    QuarticInvariants,
    QuarticReport,
    classify_quartic,
    leftover_quadratic,
    quadruple_root,
    quartic_complex_configuration,
    quartic_double_pair,
    quartic_double_root,
    quartic_invariants,
    quartic_triple_and_single,
)
from .sturm import (
    SturmChain,
    count_distinct_real_roots,
    count_positive_real_roots,
    count_real_roots_interval,
    gcd_degree,
    sign_variations,
    signs_at_infinity,
    sturm_chain,
)

__version__ = "0.1.0"
