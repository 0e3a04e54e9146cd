//! Generalized numerical semigroups: cofinite submonoids of ℕ₀^d stored by
//! their gap sets, with invariants, family enumeration and verification of
//! structural statements about corner special gaps.

pub mod enumeration;
pub mod error;
pub mod export;
pub mod fixtures;
pub mod frame;
pub mod gapset;
pub mod invariants;
pub mod order;
pub mod plot;
pub mod point;
pub mod theorems;

pub use enumeration::{enumerate_family, maximal_elements, EnumTree, FamilyQuery, Mode};
pub use error::{GnsError, Result};
pub use export::{export_tree, gapset_list_document, ExportFormat};
pub use gapset::{GapSet, Gns};
pub use invariants::GnsProfile;
pub use order::MonomialOrder;
pub use point::Point;
pub use theorems::{verify_proposition, verify_teo_ani, GapPair, VerificationReport};
