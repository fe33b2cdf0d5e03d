//! Ready-made ambients and subcategories used by the CLI and the tests.

use crate::abelian::{extension_closure, AbelianSubcat};
use crate::derived::{DInd, DerivedCat};
use crate::error::Result;
use crate::linalg::Field;
use crate::orbit::{Diagonal, OrbitCat};
use crate::typea::Interval;

pub fn diagonals(pairs: &[(usize, usize)]) -> Vec<Diagonal> {
    pairs.iter().map(|&(a, b)| Diagonal::new(a, b)).collect()
}

/// Simple-minded system of the negative cluster category with `w = 3`, `n = 4`.
pub fn orbit_sms() -> Vec<Diagonal> {
    diagonals(&[(0, 3), (4, 11), (5, 8), (12, 15)])
}

/// Torsion-free class of the abelian subcategory generated by [`orbit_sms`].
pub fn orbit_fclass() -> Vec<Diagonal> {
    diagonals(&[(0, 3), (0, 11), (4, 11), (8, 11)])
}

pub fn orbit_ambient(prime: u32) -> Result<OrbitCat> {
    OrbitCat::new(3, 4, Field::new(prime))
}

/// Abelian subcategory of `cat` generated by the given simple-minded system.
pub fn orbit_subcat(cat: &OrbitCat, sms: &[Diagonal]) -> Result<AbelianSubcat<Diagonal>> {
    extension_closure(cat, &cat.lift_obj(sms)?, 1)
}

/// `{P(3), S(2)}` in the bounded derived category of `A_3`.
pub fn derived_simples() -> Vec<DInd> {
    vec![
        DInd::module(Interval::projective(3, 3)),
        DInd::module(Interval::simple(2)),
    ]
}

/// `add(P(3), P(2))`.
pub fn derived_fclass() -> Vec<DInd> {
    vec![
        DInd::module(Interval::projective(3, 3)),
        DInd::module(Interval::projective(2, 3)),
    ]
}

pub fn derived_ambient(prime: u32) -> DerivedCat {
    DerivedCat::new(Field::new(prime), 3)
}

pub fn derived_subcat(cat: &DerivedCat) -> Result<AbelianSubcat<DInd>> {
    extension_closure(cat, &derived_simples(), 2)
}
