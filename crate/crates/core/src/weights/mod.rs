pub mod chains;
pub mod oracle;
pub mod outaction;
pub mod store;
pub mod summary;
pub mod wp;

pub use chains::{chains_up_to_conj, Chain};
pub use oracle::{compare_with_oracle, OracleReport};
pub use outaction::{perm_group_from_elements, OutAction};
pub use store::WeightStore;
pub use summary::{conjecture_checks, m_summary, m_total, ConjectureReport, WeightRow, WeightSummary};
pub use wp::{weights, WeightMap};
