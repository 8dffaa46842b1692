//! Switches over quaternion algebras, virtual braid representations and the
//! determinant invariants of virtual knots they produce.

pub mod braidrep;
pub mod detinv;
pub mod diagmod;
pub mod exactalg;
pub mod knots;
pub mod quat;
pub mod ring;
pub mod switchlab;
