//! Computational toolkit for negative cluster categories of type A, their
//! proper abelian subcategories, and the associated torsion and monoid
//! correspondences.

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod abelian;
pub mod ambient;
pub mod complex;
pub mod derived;
pub mod error;
pub mod fg;
pub mod intermediate;
pub mod linalg;
pub mod monoid;
pub mod orbit;
pub mod presets;
pub mod typea;
