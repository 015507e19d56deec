//! Grid certification of the registry, property suites, the six
//! relative-error tables and crossover location.

mod certify;
mod crossover;
mod grid;
mod properties;
mod tables;

pub use certify::{certify, certify_all, points_for, GridReport, PointRecord, Status, DEFAULT_TOLERANCE};
pub use crossover::{crossover, CROSSOVER_TOL, DEFAULT_X_RANGE, PRESCAN_POINTS};
pub use grid::{log_space, Grid, DEFAULT_NU};
pub use properties::{
    b_decreasing_in_x, b_increasing_in_nu, csch_reversal, m_ratio_domination, monotonicity_suite,
    product_difference_extension, ratio_decreasing_in_nu, recurrence_residuals, turan, RECURRENCE_TOL,
    REVERSAL_RANGE,
};
pub use tables::{relative_error_table, table_spec, Table, TableSpec, ZeroColumnRule, TABLES};
