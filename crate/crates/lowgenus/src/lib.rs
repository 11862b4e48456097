//! Exact-arithmetic counts of low-genus plane curves.
//!
//! Recursive computation of the classical enumerative invariants of plane
//! curves of genus 0 and 1 — incidence counts, characteristic numbers
//! (points and tangent lines), counts with a node at a fixed point or on a
//! fixed line, and fixed-j-invariant counts — plus counts of branched
//! covers of the line for genus 0, 1, and (conjecturally) 2, and the
//! codimension-1 invariants of the Severi variety (cuspidal and
//! triple-point counts, geometric and arithmetic sectional genera) for
//! genus 0 through 3. Genus-2/3 incidence and tangency inputs are consumed
//! as data.
//!
//! Everything is computed in exact rational arithmetic: some counts are
//! genuinely non-integral (the tangency-only elliptic conic count is 45/2).
//!
//! ```
//! use lowgenus::MemoStore;
//!
//! let mut store = MemoStore::new();
//! assert_eq!(store.rd(3).unwrap().to_string(), "12");       // rational cubics
//! assert_eq!(store.echar(2, 0, 6).unwrap().to_string(), "45/2");
//! ```
//!
//! Batch queries can run in parallel (feature `parallel`, on by default):
//! each query owns its memo store, so results never depend on scheduling.

pub mod codim1;
pub mod comb;
pub mod error;
pub mod exec;
pub mod genus0;
pub mod genus1;
pub mod hurwitz;
pub mod inputs;
pub mod rat;
pub mod store;
pub mod verify;

pub use codim1::{evaluate_class, Codim1Report, DivisorClass, DivisorDegrees};
pub use error::{Error, Result};
pub use exec::ExecMode;
pub use genus1::JClass;
pub use hurwitz::{m0_closed, HurwitzTable};
pub use inputs::SeveriInputs;
pub use rat::Rat;
pub use store::{Family, FamilyKey, MemoStore};
