//! Candidate generation, exhaustive censuses, explicit constructions, and
//! bound computations for empty p-power simplices.

mod bounds;
mod census;
mod constructions;
mod pool;
mod report;

pub use bounds::{compute_table, cr2_value, crp_lower, crp_upper, perm_space, BoundSheet,
    CrpResult, TableRow};
pub use census::{census, CensusParams};
pub use constructions::{binary_construction, lift3};
pub use pool::{admissible_columns, column_admissible, pool_size, subset_admissible, zero_rows,
    ColumnPool};
pub use report::{
    EquivalenceClass, ReportCounts, ReportParams, ReportPool, SearchReport, Survivor, Timings,
};
