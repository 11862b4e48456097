//! Genus-0 counts: incidence-only counts of rational curves, counts with a
//! node at a fixed point or on a fixed line, and the characteristic-number
//! recursions that trade a tangency condition for boundary contributions.
//!
//! Conventions forced by degree 1: a line has R_1(2,0) = 1 and all other
//! characteristic numbers 0, and NP_1 is identically 0 (lines are smooth).
//! Both fall out of the recursions, whose leading coefficient (d-1)/d
//! vanishes and whose boundary sums are empty at d = 1.

use crate::comb::{binom, binom_rat};
use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::store::{Family, FamilyKey, MemoStore};

/// Splittings of the point and tangency conditions over two components:
/// yields (a_i, b_i, a_j, b_j) with a_i + a_j = pa, b_i + b_j = pb,
/// a_i + b_i = dim_i, a_j + b_j = dim_j, all nonnegative.
pub(crate) fn splittings(
    pa: i64,
    pb: i64,
    dim_i: i64,
    dim_j: i64,
) -> impl Iterator<Item = (i64, i64, i64, i64)> {
    (0..=pa.min(dim_i)).filter_map(move |ai| {
        let bi = dim_i - ai;
        let aj = pa - ai;
        let bj = pb - bi;
        (bi >= 0 && bj >= 0 && aj + bj == dim_j).then_some((ai, bi, aj, bj))
    })
}

fn check_degree(d: u32) -> Result<()> {
    if d < 1 {
        return Err(Error::invalid_degree(d as i64, 1));
    }
    Ok(())
}

impl MemoStore {
    /// R_d: irreducible degree-d rational curves through 3d-1 general points.
    pub fn rd(&mut self, d: u32) -> Result<Rat> {
        check_degree(d)?;
        Ok(self.rd_inner(d))
    }

    pub(crate) fn rd_inner(&mut self, d: u32) -> Rat {
        if let Some(v) = self.rd.get(&d) {
            return v.clone();
        }
        let value = if d == 1 {
            Rat::one()
        } else {
            let n = 3 * d as i64 - 4;
            let mut sum = Rat::zero();
            for i in 1..d {
                let j = d - i;
                let (ii, jj) = (i as i64, j as i64);
                let weight = binom(n, 3 * ii - 2) * jj - binom(n, 3 * ii - 1) * ii;
                if weight == 0.into() {
                    continue;
                }
                let ri = self.rd_inner(i);
                let rj = self.rd_inner(j);
                sum += Rat::from(weight * (ii * ii * jj)) * ri * rj;
            }
            sum
        };
        self.rd.insert(d, value.clone());
        value
    }

    /// NP_d: degree-d rational curves through 3d-3 general points with a
    /// node at a fixed point.
    pub fn npd(&mut self, d: u32) -> Result<Rat> {
        check_degree(d)?;
        Ok(self.npd_inner(d))
    }

    pub(crate) fn npd_inner(&mut self, d: u32) -> Rat {
        if let Some(v) = self.npd.get(&d) {
            return v.clone();
        }
        let value = if d == 1 {
            Rat::zero()
        } else {
            let n = 3 * d as i64 - 6;
            let mut sum = Rat::zero();
            for i in 1..d {
                let j = d - i;
                let (ii, jj) = (i as i64, j as i64);
                let w1 = binom(n, 3 * ii - 3) * jj - binom(n, 3 * ii - 2) * ii;
                if w1 != 0.into() {
                    let ri = self.rd_inner(i);
                    let rj = self.rd_inner(j);
                    sum += Rat::from(w1 * ((ii * jj - 1) * ii)) * ri * rj;
                }
                let w2 = binom(n, 3 * ii - 4) * (2 * ii * jj)
                    - binom(n, 3 * ii - 3) * (ii * ii)
                    - binom(n, 3 * ii - 5) * (jj * jj);
                if w2 != 0.into() {
                    let npi = self.npd_inner(i);
                    if !npi.is_zero() {
                        let rj = self.rd_inner(j);
                        sum += Rat::from(w2 * (ii * jj)) * npi * rj;
                    }
                }
            }
            sum
        };
        self.npd.insert(d, value.clone());
        value
    }

    /// NL_d(a,b): curves through a points, tangent to b lines, with a node
    /// on a fixed line. Zero unless a + b = 3d - 2. Always evaluated through
    /// the divisor relation, never tabulated on its own.
    pub fn nl(&mut self, d: u32, a: u32, b: u32) -> Result<Rat> {
        check_degree(d)?;
        Ok(self.nl_inner(d, a as i64, b as i64))
    }

    pub(crate) fn nl_inner(&mut self, d: u32, a: i64, b: i64) -> Rat {
        if a < 0 || b < 0 || a + b != 3 * d as i64 - 2 {
            return Rat::zero();
        }
        let (a, b) = (a as u32, b as u32);
        let first = Rat::from(d as i64 - 1) * self.rchar_inner(d, a + 1, b);
        let second = self.rchar_inner(d, a, b + 1) * Rat::frac(1, 2);
        first - second
    }

    /// R_d(a,b): characteristic numbers of rational curves. Zero unless
    /// a + b = 3d - 1.
    pub fn rchar(&mut self, d: u32, a: u32, b: u32) -> Result<Rat> {
        check_degree(d)?;
        Ok(self.rchar_inner(d, a, b))
    }

    pub(crate) fn rchar_inner(&mut self, d: u32, a: u32, b: u32) -> Rat {
        let key = FamilyKey {
            family: Family::Rational,
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
            self.rd_inner(d)
        } else {
            self.rchar_step(d, a as i64, b as i64 - 1)
        };
        self.chars.insert(key, value.clone());
        value
    }

    /// One tangency-descent step: R_d(a, bp+1) in terms of the family with
    /// a points and bp tangent lines. The three boundary sums split by how
    /// many tangent lines pass through the image of the node.
    fn rchar_step(&mut self, d: u32, a: i64, bp: i64) -> Rat {
        let dd = d as i64;
        let mut total = Rat::frac(dd - 1, dd) * self.rchar_inner(d, (a + 1) as u32, bp as u32);
        for i in 1..d {
            let j = d - i;
            let (ii, jj) = (i as i64, j as i64);
            let (dim_i, dim_j) = (3 * ii - 1, 3 * jj - 1);
            let mut bracket = Rat::zero();

            // no tangent line through the node
            for (ai, bi, aj, bj) in splittings(a, bp, dim_i, dim_j) {
                let w = binom(a, ai) * binom(bp, bi) * (ii * jj);
                if w == 0.into() {
                    continue;
                }
                let ri = self.rchar_inner(i, ai as u32, bi as u32);
                if ri.is_zero() {
                    continue;
                }
                let rj = self.rchar_inner(j, aj as u32, bj as u32);
                bracket += Rat::from(w) * ri * rj;
            }

            // one tangent line through the node
            if bp >= 1 {
                let mut s = Rat::zero();
                for (ai, bi, aj, bj) in splittings(a + 1, bp - 1, dim_i, dim_j) {
                    let w = binom(a, ai) * binom(bp - 1, bj) * ii;
                    if w == 0.into() {
                        continue;
                    }
                    let ri = self.rchar_inner(i, ai as u32, bi as u32);
                    if ri.is_zero() {
                        continue;
                    }
                    let rj = self.rchar_inner(j, aj as u32, bj as u32);
                    s += Rat::from(w) * ri * rj;
                }
                bracket += Rat::from(4 * bp) * s;
            }

            // two tangent lines through the node
            if bp >= 2 {
                let mut s = Rat::zero();
                for (ai, bi, aj, bj) in splittings(a + 2, bp - 2, dim_i, dim_j) {
                    let w = binom(a, ai - 1) * binom(bp - 2, bj);
                    if w == 0.into() {
                        continue;
                    }
                    let ri = self.rchar_inner(i, ai as u32, bi as u32);
                    if ri.is_zero() {
                        continue;
                    }
                    let rj = self.rchar_inner(j, aj as u32, bj as u32);
                    s += Rat::from(w) * ri * rj;
                }
                bracket += Rat::from(4i64) * binom_rat(bp, 2) * s;
            }

            total += Rat::frac(ii * jj, 2 * dd) * bracket;
        }
        total
    }

    /// NP_d(a,b): characteristic numbers of rational curves with a node at
    /// a fixed point. Zero unless a + b = 3d - 3. Tangency values can be
    /// nonzero even when NP_d itself vanishes (NP_2(1,2) = 1), so no degree
    /// is short-circuited.
    pub fn npchar(&mut self, d: u32, a: u32, b: u32) -> Result<Rat> {
        check_degree(d)?;
        Ok(self.npchar_inner(d, a, b))
    }

    pub(crate) fn npchar_inner(&mut self, d: u32, a: u32, b: u32) -> Rat {
        let key = FamilyKey {
            family: Family::NodeAtPoint,
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
            self.npd_inner(d)
        } else {
            self.npchar_step(d, a as i64, b as i64 - 1)
        };
        self.chars.insert(key, value.clone());
        value
    }

    /// Tangency descent for the node-at-a-point family. The seven boundary
    /// sums are indexed by how many tangent lines pass through the image of
    /// the node of the source curve (0, 1, or 2) and whether the fixed node
    /// of the image lies on two components or one.
    fn npchar_step(&mut self, d: u32, a: i64, bp: i64) -> Rat {
        let dd = d as i64;
        let mut total = Rat::frac(dd - 1, dd) * self.npchar_inner(d, (a + 1) as u32, bp as u32);
        for i in 1..d {
            let j = d - i;
            let (ii, jj) = (i as i64, j as i64);
            let (rdim_i, rdim_j) = (3 * ii - 1, 3 * jj - 1);
            let (npdim_i, npdim_j) = (3 * ii - 3, 3 * jj - 3);
            let mut bracket = Rat::zero();

            // 0 tangent lines through the node, fixed node on two components
            for (ai, bi, aj, bj) in splittings(a + 2, bp, rdim_i, rdim_j) {
                let w = binom(a, ai - 1) * binom(bp, bi) * (ii * jj - 1);
                if w == 0.into() {
                    continue;
                }
                let ri = self.rchar_inner(i, ai as u32, bi as u32);
                if ri.is_zero() {
                    continue;
                }
                let rj = self.rchar_inner(j, aj as u32, bj as u32);
                bracket += Rat::from(w) * ri * rj;
            }

            // 0 tangent lines, fixed node on one component
            for (ai, bi, aj, bj) in splittings(a, bp, rdim_i, npdim_j) {
                let w = binom(a, ai) * binom(bp, bi) * (2 * ii * jj);
                if w == 0.into() {
                    continue;
                }
                let ri = self.rchar_inner(i, ai as u32, bi as u32);
                if ri.is_zero() {
                    continue;
                }
                let npj = self.npchar_inner(j, aj as u32, bj as u32);
                bracket += Rat::from(w) * ri * npj;
            }

            if bp >= 1 {
                // 1 tangent line, fixed node on two components
                for (ai, bi, aj, bj) in splittings(a + 3, bp - 1, rdim_i, rdim_j) {
                    let w = binom(a, ai - 1) * binom(bp - 1, bi) * (4 * bp * ii);
                    if w == 0.into() {
                        continue;
                    }
                    let ri = self.rchar_inner(i, ai as u32, bi as u32);
                    if ri.is_zero() {
                        continue;
                    }
                    let rj = self.rchar_inner(j, aj as u32, bj as u32);
                    bracket += Rat::from(w) * ri * rj;
                }

                // 1 tangent line, fixed node on one component (node-bearing
                // factor first, then the plain rational factor)
                for (ai, bi, aj, bj) in splittings(a + 1, bp - 1, npdim_i, rdim_j) {
                    let w = binom(a, ai) * binom(bp - 1, bi) * (4 * bp * ii);
                    if w == 0.into() {
                        continue;
                    }
                    let npi = self.npchar_inner(i, ai as u32, bi as u32);
                    if npi.is_zero() {
                        continue;
                    }
                    let rj = self.rchar_inner(j, aj as u32, bj as u32);
                    bracket += Rat::from(w) * npi * rj;
                }
                for (ai, bi, aj, bj) in splittings(a + 1, bp - 1, rdim_i, npdim_j) {
                    let w = binom(a, ai) * binom(bp - 1, bi) * (4 * bp * ii);
                    if w == 0.into() {
                        continue;
                    }
                    let ri = self.rchar_inner(i, ai as u32, bi as u32);
                    if ri.is_zero() {
                        continue;
                    }
                    let npj = self.npchar_inner(j, aj as u32, bj as u32);
                    bracket += Rat::from(w) * ri * npj;
                }
            }

            if bp >= 2 {
                let pairs = binom(bp, 2);

                // 2 tangent lines, fixed node on two components
                for (ai, bi, aj, bj) in splittings(a + 4, bp - 2, rdim_i, rdim_j) {
                    let w = binom(a, ai - 2) * binom(bp - 2, bi) * 4 * &pairs;
                    if w == 0.into() {
                        continue;
                    }
                    let ri = self.rchar_inner(i, ai as u32, bi as u32);
                    if ri.is_zero() {
                        continue;
                    }
                    let rj = self.rchar_inner(j, aj as u32, bj as u32);
                    bracket += Rat::from(w) * ri * rj;
                }

                // 2 tangent lines, fixed node on one component
                for (ai, bi, aj, bj) in splittings(a + 2, bp - 2, rdim_i, npdim_j) {
                    let w = binom(a, ai - 1) * binom(bp - 2, bi) * 8 * &pairs;
                    if w == 0.into() {
                        continue;
                    }
                    let ri = self.rchar_inner(i, ai as u32, bi as u32);
                    if ri.is_zero() {
                        continue;
                    }
                    let npj = self.npchar_inner(j, aj as u32, bj as u32);
                    bracket += Rat::from(w) * ri * npj;
                }
            }

            total += Rat::frac(ii * jj, 2 * dd) * bracket;
        }
        total
    }
}
