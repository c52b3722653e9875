pub mod field;
pub mod group;
pub mod kelem;
pub mod matrix;
pub mod perm;
pub mod residue;
pub mod subgroups;

pub use field::{Fe, Field};
pub use group::{closure, quotient_by_central, Classes, GenGroup, GroupOps, QuotientOps};
pub use matrix::{FieldCtx, FqMat, FqMatOps, Mat2, Mat2Ops};
pub use perm::{Perm, PermOps};
pub use residue::{Affine, AffineOps, Mat3, Mat3Ops, ResidueCtx};
