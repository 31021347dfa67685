//! Class-count computations and the Con, Con* and SCon verdicts.

pub mod audit;
pub mod characters;
pub mod con;
pub mod counts;
pub mod height;

pub use audit::{minimal_counterexample_audit, AuditItem, AuditProperty};
pub use characters::{
    balanced_action, balanced_action_pair, extends_to, irr_elementary_abelian, stabilizer,
    DualCharacter,
};
pub use con::{con_check, con_check_pair, scon_check, scon_details, ConReport, SconClause};
pub use counts::{
    check_class_equation, check_pr_monotonicity, check_subgroup_bounds, commuting_pairs, f_count,
    fused_sum, pi_split_sum, pr, PrMonotonicity,
};
pub use height::{pi_height, Height, HeightData};
