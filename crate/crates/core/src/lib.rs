//! Monodromy factorizations of genus-g hyperelliptic Lefschetz fibrations.

pub mod chart;
pub mod formats;
pub mod hurwitz;
pub mod mcg;
pub mod stabilizer;
