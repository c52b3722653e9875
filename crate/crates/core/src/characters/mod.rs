pub mod dixon;
pub mod label;
pub mod little;
pub mod modp;
pub mod quaternion;
pub mod zcount;

pub use dixon::{defect, dixon_table, dixon_table_mod, CharTable};
pub use label::CharLabel;
pub use quaternion::{quaternion_irr, QuaternionChar};
pub use zcount::{defect_histogram, histogram_of_degrees, z_defect_zero, DefectHistogram};
