//! Star configurations of coordinate hyperplanes and their monomial ideals.
//!
//! The codimension-`c` skeleton of `s` hyperplanes is modelled by the ideal
//! generated by all squarefree monomials of degree `s - c + 1` in `x0..x{s-1}`.
//! The crate computes its symbolic and ordinary powers, Hilbert functions and
//! h-vectors, closed-form Betti data, Hilbert-Burch matrices with their exact
//! maximal minors, primary decompositions of powers, and containment grids.
//!
//! All arithmetic is exact. Expensive routines take a [`Limits`] and fail with
//! [`Error::Resource`] instead of running unbounded. With the default
//! `parallel` feature the heavy loops run on rayon's current thread pool;
//! results never depend on the pool size.

pub mod decomp;
pub mod error;
pub mod exponents;
pub mod hilbert;
pub mod limits;
mod par;
pub mod resolution;
pub mod star;
pub mod util;

pub use error::{Error, Result};
pub use exponents::{minimalize, DivisorTrie, ExponentTuple, MonomialIdeal};
pub use limits::Limits;
pub use star::StarConfig;
