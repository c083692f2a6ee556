//! Drivers behind the `lorentz-zeta` binary: the strip experiment, figure
//! data, validation suites and the records they produce.

mod config;
mod figure;
mod record;
mod strip;
mod validate;

pub use config::{parse_grid, Command, Param, RunConfig, GRID_LIMIT};
pub use figure::{
    cmd_figure, series, trapezoid_mean, FigureId, FigureOptions, ALPHA_PRIME_AXIS_MAX, ALPHA_PRIME_AXIS_MIN,
    FIGURE_T_CAP, MIN_RESOLUTION, TANGENT_HALF_WIDTH,
};
pub use record::{
    format_float, parse_data_csv, write_data_csv, Budget, CheckOutcome, DataRow, Marker, OutputFormat,
    OutputRecord, SCHEMA_VERSION,
};
pub use strip::{cmd_experiment, experiment_alpha, run_experiment, Comparison, ExperimentConfig, ExperimentReport, PUBLISHED};
pub use validate::{cmd_validate, identity_pairs, Suite, IDENTITY_ABS_LIMIT, IDENTITY_PAIRS, SUITE_SEED};
