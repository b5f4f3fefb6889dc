"""Finite-metric-space analysis: hyperbolicity constants, Ptolemy checks,
metric transforms, and Moebius distortion verification."""

__version__ = "0.1.0"

from .backend import BACKEND
from .checks import (
    AxiomReport,
    PtolemyReport,
    QuadrupleWitness,
    check_metric_axioms,
    lemma22_defect,
    ptolemy_defect,
)
from .hyperbolicity import (
    EXHAUSTIVE,
    UNBOUNDED,
    BolicityResult,
    HyperbolicityReport,
    ScanMode,
    analyze,
    bolicity_r_min,
    delta_hyperbolicity,
    gromov_product,
    quadruple_epsilon,
    sampled,
    strong_epsilon,
)
from .moebius import (
    DistortionReport,
    InversionParams,
    MoebiusMap,
    apply_sigma,
    distortion_check,
    make_inversion,
    make_moebius,
    random_orthogonal,
    sigma_distance_identity,
)
from .spaces import (
    FiniteMetricSpace,
    PointCloud,
    build_metric_from_points,
    gen_random_ball,
    gen_tree_metric,
)
from .transforms import (
    BoundarySet,
    TransformSpec,
    apply_transform,
    cap_sp_metric,
    chi_metric,
    hdc_metric,
    log_metric,
    sp_metric,
    tau_metric,
)
