//! Exact-arithmetic toolkit for hyperplane arrangements arising from
//! unidimensional unfolding models: chamber counts, characteristic
//! polynomials over finite fields, ranking patterns, and inequivalence
//! bounds.

pub mod arrangement;
pub mod bounds;
pub mod budget;
pub mod chambers;
pub mod error;
pub mod finitefield;
pub mod exactmath;
pub mod reference;
pub mod simplex;
pub mod unfolding;
