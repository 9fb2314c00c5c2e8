//! Bernoulli, Genocchi and Euler numbers, Stirling numbers of the second kind
//! and the central factorial triangles, all memoized and grown on demand.

pub mod oeis;
mod seq;
mod triangle;

pub use seq::{bernoulli, euler_number, genocchi, NumberSeq, SeqKind};
#[allow(non_snake_case)]
pub use triangle::{
    central_T, central_T_closed_form, central_even_odd_view, central_t, stirling2, views,
    CentralFamily, Parity, Triangle, TriangleKind,
};
