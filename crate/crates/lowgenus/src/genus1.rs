//! Genus-1 counts: incidence-only elliptic counts, elliptic characteristic
//! numbers, and characteristic numbers of elliptic curves with fixed
//! j-invariant.
//!
//! The only hard-coded base is E_1 = 0 (a degree-1 genus-1 map would have
//! to contract the elliptic component, and such maps are excluded from the
//! moduli component being counted). E_2 = 0 falls out of the incidence
//! recursion on its own.

use crate::comb::{binom, binom_rat};
use crate::error::{Error, Result};
use crate::genus0::splittings;
use crate::rat::Rat;
use crate::store::{Family, FamilyKey, MemoStore};

/// Which fixed j-invariant a count refers to. The moduli divisors for
/// j = 0 and j = 1728 are a third and a half of the generic one, so those
/// characteristic numbers inherit the same scaling.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum JClass {
    Generic,
    J0,
    J1728,
}

fn check_degree(d: u32) -> Result<()> {
    if d < 1 {
        return Err(Error::invalid_degree(d as i64, 1));
    }
    Ok(())
}

impl MemoStore {
    /// E_d: irreducible degree-d elliptic curves through 3d general points.
    pub fn ed(&mut self, d: u32) -> Result<Rat> {
        check_degree(d)?;
        Ok(self.ed_inner(d))
    }

    pub(crate) fn ed_inner(&mut self, d: u32) -> Rat {
        if let Some(v) = self.ed.get(&d) {
            return v.clone();
        }
        let value = if d == 1 {
            Rat::zero()
        } else {
            let dd = d as i64;
            let mut sum = Rat::frac(1, 12) * binom_rat(dd, 3) * self.rd_inner(d);
            for i in 1..d {
                let j = d - i;
                let (ii, jj) = (i as i64, j as i64);
                let ej = self.ed_inner(j);
                if ej.is_zero() {
                    continue;
                }
                let ri = self.rd_inner(i);
                sum +=
                    Rat::frac(ii * jj * (3 * ii - 2), 9) * binom_rat(3 * dd - 1, 3 * jj) * ri * ej;
            }
            sum
        };
        self.ed.insert(d, value.clone());
        value
    }

    /// E_d(a,b): characteristic numbers of elliptic curves. Zero unless
    /// a + b = 3d.
    pub fn echar(&mut self, d: u32, a: u32, b: u32) -> Result<Rat> {
        check_degree(d)?;
        Ok(self.echar_inner(d, a, b))
    }

    pub(crate) fn echar_inner(&mut self, d: u32, a: u32, b: u32) -> Rat {
        let key = FamilyKey {
            family: Family::Elliptic,
            d,
            a,
            b,
        };
        if !key.on_dimension() {
            return Rat::zero();
        }
        if let Some(v) = self.chars.get(&key) {
            return v.clone();
        }
        let value = if b == 0 {
            self.ed_inner(d)
        } else {
            self.echar_step(d, a as i64, b as i64 - 1)
        };
        self.chars.insert(key, value.clone());
        value
    }

    /// Tangency descent for elliptic curves. On top of the incidence swap,
    /// the nodal-fiber part of the dualizing sheaf contributes the d/12
    /// block (nodal rational curves, with zero, one, or two tangent lines
    /// through the node), and the reducible boundary mixes a rational
    /// component of degree i with an elliptic one of degree j.
    fn echar_step(&mut self, d: u32, a: i64, bp: i64) -> Rat {
        let dd = d as i64;
        let mut total = self.echar_inner(d, (a + 1) as u32, bp as u32);

        let mut nodal = binom_rat(dd - 1, 2) * self.rchar_inner(d, a as u32, bp as u32);
        if bp >= 1 {
            nodal += Rat::from(2 * bp) * self.nl_inner(d, a, bp - 1);
        }
        if bp >= 2 {
            nodal += Rat::from(4i64)
                * binom_rat(bp, 2)
                * self.npchar_inner(d, a as u32, (bp - 2) as u32);
        }
        total += Rat::frac(dd, 12) * nodal;

        for i in 1..d {
            let j = d - i;
            let (ii, jj) = (i as i64, j as i64);
            let (rdim, edim) = (3 * ii - 1, 3 * jj);
            let mut bracket = Rat::zero();

            // no tangent line through the node
            for (ai, bi, aj, bj) in splittings(a, bp, rdim, edim) {
                let w = binom(a, ai) * binom(bp, bi) * (ii * jj);
                if w == 0.into() {
                    continue;
                }
                let ri = self.rchar_inner(i, ai as u32, bi as u32);
                if ri.is_zero() {
                    continue;
                }
                let ej = self.echar_inner(j, aj as u32, bj as u32);
                bracket += Rat::from(w) * ri * ej;
            }

            // one tangent line through the node; two distinct sums because
            // the extra multiplicity can sit on either factor
            if bp >= 1 {
                let mut s = Rat::zero();
                for (ai, bi, aj, bj) in splittings(a + 1, bp - 1, rdim, edim) {
                    let w = binom(a, aj) * binom(bp - 1, bi) * jj;
                    if w == 0.into() {
                        continue;
                    }
                    let ri = self.rchar_inner(i, ai as u32, bi as u32);
                    if ri.is_zero() {
                        continue;
                    }
                    let ej = self.echar_inner(j, aj as u32, bj as u32);
                    s += Rat::from(w) * ri * ej;
                }
                for (ai, bi, aj, bj) in splittings(a + 1, bp - 1, rdim, edim) {
                    let w = binom(a, ai) * binom(bp - 1, bi) * ii;
                    if w == 0.into() {
                        continue;
                    }
                    let ri = self.rchar_inner(i, ai as u32, bi as u32);
                    if ri.is_zero() {
                        continue;
                    }
                    let ej = self.echar_inner(j, aj as u32, bj as u32);
                    s += Rat::from(w) * ri * ej;
                }
                bracket += Rat::from(2 * bp) * s;
            }

            // two tangent lines through the node
            if bp >= 2 {
                let mut s = Rat::zero();
                for (ai, bi, aj, bj) in splittings(a + 2, bp - 2, rdim, edim) {
                    let w = binom(a, ai - 1) * binom(bp - 2, bi);
                    if w == 0.into() {
                        continue;
                    }
                    let ri = self.rchar_inner(i, ai as u32, bi as u32);
                    if ri.is_zero() {
                        continue;
                    }
                    let ej = self.echar_inner(j, aj as u32, bj as u32);
                    s += Rat::from(w) * ri * ej;
                }
                bracket += Rat::from(4i64) * binom_rat(bp, 2) * s;
            }

            total += Rat::from(ii) * bracket;
        }
        total
    }

    /// J_d(a,b): characteristic numbers of elliptic curves whose stable
    /// model has a fixed generic j-invariant. Zero unless a + b = 3d - 1.
    /// A closed-form combination of nodal-rational counts, not a recursion,
    /// so nothing is memoized here.
    pub fn jchar(&mut self, d: u32, a: u32, b: u32) -> Result<Rat> {
        check_degree(d)?;
        Ok(self.jchar_inner(d, a as i64, b as i64))
    }

    pub(crate) fn jchar_inner(&mut self, d: u32, a: i64, b: i64) -> Rat {
        if a + b != 3 * d as i64 - 1 {
            return Rat::zero();
        }
        let mut total = binom_rat(d as i64 - 1, 2) * self.rchar_inner(d, a as u32, b as u32);
        if b >= 1 {
            total += Rat::from(2 * b) * self.nl_inner(d, a, b - 1);
        }
        if b >= 2 {
            total +=
                Rat::from(4i64) * binom_rat(b, 2) * self.npchar_inner(d, a as u32, (b - 2) as u32);
        }
        total
    }

    /// Characteristic numbers for a fixed j-invariant, with the automorphism
    /// scaling at the special values j = 0 and j = 1728. Enumerative for
    /// d >= 3; smaller degrees evaluate formally.
    pub fn jchar_special(&mut self, class: JClass, d: u32, a: u32, b: u32) -> Result<Rat> {
        let generic = self.jchar(d, a, b)?;
        Ok(match class {
            JClass::Generic => generic,
            JClass::J0 => generic * Rat::frac(1, 3),
            JClass::J1728 => generic * Rat::frac(1, 2),
        })
    }
}
