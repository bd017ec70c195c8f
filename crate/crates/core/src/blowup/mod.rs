//! Reductions, joint reductions, and the depth rule engine.

mod depth;
mod joint;
mod reduction;

pub use depth::{
    depth_infer, Algebra, CmStatus, DepthFacts, DepthVerdict, FiredRule, Interval, CITE_DIM, CITE_FR, CITE_R0,
    CITE_R1, CITE_R2, CITE_R3, CITE_R4, CITE_R5, CITE_R6, CITE_R7, CITE_VV,
};
pub use joint::{
    colon_power_check, contracted_check_2d, h1_by_intersection, h1_vanishing_check, joint_reduction_search, joint_reduction_verify,
    local_equality_failures, mmm_check, ColonStep, ContractedReport, H1Report, IterateIdentity,
    JointReductionCertificate, MmmReport, DEFAULT_COLON_BOUND, DEFAULT_JOINT_BOUND,
};
pub use reduction::{
    combination, default_vv_bound, find_minimal_reduction, reduction_number, vv_check, PoolDraws,
    ReductionCertificate, VvReport, VvStep, DEFAULT_POOL, DEFAULT_REDUCTION_BOUND, SEARCH_SEED,
};

#[cfg(test)]
mod tests;
