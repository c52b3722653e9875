pub mod data;
pub mod kmodel;
pub mod params;
pub mod qfactors;
pub mod special;
pub mod sylow;
pub mod table;
pub mod torus;

pub use params::{choose_q, Params};

/// The fusion system of `Spin7(q)` (`H`) or of `Sol(q)` (`F`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum System {
    H,
    F,
}
