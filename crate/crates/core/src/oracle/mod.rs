//! Independent brute-force verification.

pub mod groebner;
pub mod points;

pub use groebner::{
    groebner_basis, ideal_contains, ideal_contains_params, ideal_contains_params_until, ideal_contains_until,
    ideal_equal, ideal_equal_params, normal_form, VarIndex,
};
pub use points::{
    chart_coefficients, classify_stratum, point_ideal, satisfies_stratum, OracleError, PointConfiguration, PointIdeal,
};
