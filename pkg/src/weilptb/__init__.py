"""Exact-arithmetic calculator for real Weil-group parameters, epsilon
factors and root numbers, distinction criteria, and the double-coset orbit
combinatorics of the underlying symmetric pairs."""

from .exact import (
    GaussianRational,
    MagUnitValue,
    RationalQuaternion,
    gr,
    gr_arith,
    muv_mul,
    quat,
    quat_mul,
)
from .weil import (
    CxCharacter,
    WeilIrred,
    WeilRep,
    det_rep,
    dual,
    epsilon,
    induce,
    make_irred,
    restrict_to_Rx,
    root_number,
    tensor,
)
from .langlands import (
    DivAlg,
    EssDiscrete,
    HeckeCharacter,
    IrrRepGL,
    StandardModule,
    P1,
    P2,
    T,
    dual_irr,
    ind_chi_inverse,
    llc,
    llc_inverse,
    make_standard,
    quotient,
    twist_by_chi,
)
from .distinction import (
    DistinctionReport,
    Involution,
    abc_bookkeeping,
    abc_prediction,
    check_duality_corollary,
    check_main_theorem,
    enumerate_T,
    epsilon_identity,
    esi_distinguished,
    is_gsp_with_similitude,
    pair_distinguished,
)
from .orbits import (
    ExactMatrix,
    OrbitMatrix,
    PartitionSpec,
    RootDatum,
    block_map,
    chi_composite_check,
    enumerate_J,
    find_positive_witness,
    is_monomial,
    levi_stable,
    representative_gS,
    root_datum_from_orbit,
    sigma_S_conjugator,
)

__version__ = "0.1.0"
