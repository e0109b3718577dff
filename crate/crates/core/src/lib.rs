//! Pseudo-codeword analysis for binary LDPC codes: GF(2) algebra, Tanner
//! graphs, stopping sets, the fundamental cone and its extreme rays, distance
//! bounds, LP and ML decoders, and the example constructions.

pub mod analysis;
pub mod bounds;
pub mod cone;
pub mod construct;
pub mod decode;
pub mod gf2;
pub mod io;
pub mod stopping;
pub mod tanner;
