//! Memoization tables for the counting recursions.
//!
//! All characteristic-number families share one keyed table; the scalar
//! sequences (incidence-only counts, cover counts) get their own maps. A
//! store is owned by a single computation: values are deterministic, a
//! stored value never changes once written, and distinct top-level queries
//! may run in parallel each with its own store.

use crate::codim1::DivisorDegrees;
use crate::rat::Rat;
use std::collections::HashMap;

/// Which one-parameter family a characteristic number belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    /// Irreducible rational curves; dimension a + b = 3d - 1.
    Rational,
    /// Rational curves with a node at a fixed point; a + b = 3d - 3.
    NodeAtPoint,
    /// Elliptic curves; a + b = 3d.
    Elliptic,
}

/// Index into the characteristic-number tables: family, degree, number of
/// point conditions, number of tangency conditions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FamilyKey {
    pub family: Family,
    pub d: u32,
    pub a: u32,
    pub b: u32,
}

impl FamilyKey {
    /// The dimension a + b must equal for the count to be nonzero.
    pub fn expected_dimension(&self) -> i64 {
        let d = self.d as i64;
        match self.family {
            Family::Rational => 3 * d - 1,
            Family::NodeAtPoint => 3 * d - 3,
            Family::Elliptic => 3 * d,
        }
    }

    /// Keys violating the dimension law are legal queries whose value is 0.
    pub fn on_dimension(&self) -> bool {
        self.a as i64 + self.b as i64 == self.expected_dimension()
    }
}

/// Memo store shared by the genus-0/1, Hurwitz, and divisor-degree
/// computations.
#[derive(Default)]
pub struct MemoStore {
    pub(crate) chars: HashMap<FamilyKey, Rat>,
    pub(crate) rd: HashMap<u32, Rat>,
    pub(crate) npd: HashMap<u32, Rat>,
    pub(crate) ed: HashMap<u32, Rat>,
    pub(crate) m0: HashMap<u32, Rat>,
    pub(crate) m1: HashMap<u32, Rat>,
    pub(crate) m2: HashMap<u32, Rat>,
    pub(crate) degrees: HashMap<(u8, u32), DivisorDegrees>,
}

impl MemoStore {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized characteristic-number entries (diagnostics only).
    pub fn char_entries(&self) -> usize {
        self.chars.len()
    }
}
