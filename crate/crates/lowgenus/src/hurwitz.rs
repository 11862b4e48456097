//! Counts of degree-d covers of the line by irreducible genus-g curves with
//! all ramification simple and over fixed points: recursions for genus 0
//! and 1, the genus-0 closed form, and a conjectural genus-2 formula.

use crate::comb::{binom, binom_rat, factorial, ipow};
use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::store::MemoStore;
use std::collections::BTreeMap;

/// A table of cover counts for one genus. The genus-2 formula is
/// conjectural and every consumer is expected to surface that flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzTable {
    pub genus: u8,
    pub values: BTreeMap<u32, Rat>,
    pub conjectural: bool,
}

fn check_degree(d: u32) -> Result<()> {
    if d < 1 {
        return Err(Error::invalid_degree(d as i64, 1));
    }
    Ok(())
}

impl MemoStore {
    /// Genus-0 cover count by the boundary recursion. Base: a degree-1
    /// cover is unique, with a 0-dimensional automorphism-free moduli point.
    pub fn m0(&mut self, d: u32) -> Result<Rat> {
        check_degree(d)?;
        Ok(self.m0_inner(d))
    }

    pub(crate) fn m0_inner(&mut self, d: u32) -> Rat {
        if let Some(v) = self.m0.get(&d) {
            return v.clone();
        }
        let value = if d == 1 {
            Rat::one()
        } else {
            let dd = d as i64;
            let mut sum = Rat::zero();
            for j in 1..d {
                let k = d - j;
                let (jj, kk) = (j as i64, k as i64);
                let mj = self.m0_inner(j);
                let mk = self.m0_inner(k);
                sum += Rat::from(binom(2 * dd - 4, 2 * jj - 2) * (jj * jj * kk * kk)) * mj * mk;
            }
            Rat::frac(2 * dd - 3, dd) * sum
        };
        self.m0.insert(d, value.clone());
        value
    }

    /// Genus-1 cover count. The second sum runs j = 1 .. d-2 as printed.
    pub fn m1(&mut self, d: u32) -> Result<Rat> {
        check_degree(d)?;
        Ok(self.m1_inner(d))
    }

    pub(crate) fn m1_inner(&mut self, d: u32) -> Rat {
        if let Some(v) = self.m1.get(&d) {
            return v.clone();
        }
        let value = if d == 1 {
            Rat::zero()
        } else {
            let dd = d as i64;
            let mut sum =
                Rat::frac(dd, 6) * binom_rat(dd, 2) * Rat::from(2 * dd - 1) * self.m0_inner(d);
            for j in 1..=d.saturating_sub(2) {
                let k = d - j;
                let (jj, kk) = (j as i64, k as i64);
                let m0j = self.m0_inner(j);
                let m1k = self.m1_inner(k);
                if m1k.is_zero() {
                    continue;
                }
                sum += Rat::from(binom(2 * dd - 2, 2 * jj - 2) * (2 * jj * (2 * dd - 1) * kk * jj))
                    * m0j
                    * m1k;
            }
            sum
        };
        self.m1.insert(d, value.clone());
        value
    }

    /// Genus-2 cover count by the conjectural formula; no proof is known,
    /// so callers must label the result conjectural.
    pub fn m2(&mut self, d: u32) -> Result<Rat> {
        check_degree(d)?;
        Ok(self.m2_inner(d))
    }

    pub(crate) fn m2_inner(&mut self, d: u32) -> Rat {
        if let Some(v) = self.m2.get(&d) {
            return v.clone();
        }
        let dd = d as i64;
        let mut value = Rat::from(dd * dd)
            * (Rat::frac(97, 136) * Rat::from(dd) - Rat::frac(20, 17))
            * self.m1_inner(d);
        for j in 1..d {
            let k = d - j;
            let (jj, kk) = (j as i64, k as i64);

            let m0j = self.m0_inner(j);
            let m2k = self.m2_inner(k);
            if !m2k.is_zero() {
                value += m0j
                    * m2k
                    * binom_rat(2 * dd, 2 * jj - 2)
                    * Rat::from(jj * kk)
                    * (Rat::frac(-115, 17) * Rat::from(jj) + Rat::from(8 * dd));
            }

            let m1j = self.m1_inner(j);
            let m1k = self.m1_inner(k);
            if !m1j.is_zero() && !m1k.is_zero() {
                value += m1j
                    * m1k
                    * binom_rat(2 * dd, 2 * jj)
                    * Rat::from(jj * kk)
                    * (Rat::frac(11697, 34) * Rat::from(jj * kk)
                        - Rat::frac(3899, 68) * Rat::from(dd * dd));
            }
        }
        self.m2.insert(d, value.clone());
        value
    }

    /// Cover counts for degrees 1 ..= max_d at the given genus.
    pub fn hurwitz_table(&mut self, genus: u8, max_d: u32) -> Result<HurwitzTable> {
        if genus > 2 {
            return Err(Error::InvalidGenus(genus as i64));
        }
        check_degree(max_d)?;
        let mut values = BTreeMap::new();
        for d in 1..=max_d {
            let v = match genus {
                0 => self.m0_inner(d),
                1 => self.m1_inner(d),
                _ => self.m2_inner(d),
            };
            values.insert(d, v);
        }
        Ok(HurwitzTable {
            genus,
            values,
            conjectural: genus == 2,
        })
    }
}

/// Closed form d^{d-3} (2d-2)!/d! for the genus-0 cover count; negative
/// exponents occur at d = 1, 2.
pub fn m0_closed(d: u32) -> Result<Rat> {
    check_degree(d)?;
    let dd = d as i64;
    let power = ipow(dd, d as i32 - 3)?;
    let ratio = Rat::new(factorial(2 * d as u64 - 2), factorial(d as u64));
    Ok(power * ratio)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn store() -> MemoStore {
        MemoStore::new()
    }

    #[test]
    fn genus0_base_values() {
        let mut s = store();
        assert_eq!(s.m0(1).unwrap(), Rat::one());
        assert_eq!(s.m0(2).unwrap(), Rat::frac(1, 2));
        assert_eq!(s.m0(3).unwrap(), Rat::from(4i64));
        assert_eq!(s.m0(4).unwrap(), Rat::from(120i64));
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(m0_closed(1).unwrap(), Rat::one());
        assert_eq!(m0_closed(2).unwrap(), Rat::frac(1, 2));
        assert_eq!(m0_closed(4).unwrap(), Rat::from(120i64));
    }

    #[test]
    fn recursion_matches_closed_form() {
        let mut s = store();
        for d in 1..=15u32 {
            assert_eq!(s.m0(d).unwrap(), m0_closed(d).unwrap(), "d={d}");
        }
    }

    #[test]
    fn genus1_values() {
        let mut s = store();
        assert_eq!(s.m1(1).unwrap(), Rat::zero());
        assert_eq!(s.m1(2).unwrap(), Rat::frac(1, 2));
        assert_eq!(s.m1(3).unwrap(), Rat::from(40i64));
    }

    #[test]
    fn genus2_values() {
        let mut s = store();
        assert_eq!(s.m2(1).unwrap(), Rat::zero());
        assert_eq!(s.m2(2).unwrap(), Rat::frac(1, 2));
        assert_eq!(s.m2(3).unwrap(), Rat::from(364i64));
    }

    #[test]
    fn positivity() {
        let mut s = store();
        for d in 1..=15u32 {
            assert!(!s.m0(d).unwrap().is_negative());
            assert!(!s.m0(d).unwrap().is_zero());
            assert!(!s.m1(d).unwrap().is_negative());
        }
    }

    #[test]
    fn genus0_integral_from_degree_three() {
        let mut s = store();
        for d in 3..=15u32 {
            assert!(s.m0(d).unwrap().is_integer(), "d={d}");
        }
    }

    #[test]
    fn tables() {
        let mut s = store();
        let t = s.hurwitz_table(2, 5).unwrap();
        assert!(t.conjectural);
        assert_eq!(t.values[&2], Rat::frac(1, 2));
        let t = s.hurwitz_table(0, 5).unwrap();
        assert!(!t.conjectural);
        assert_eq!(t.values[&5], m0_closed(5).unwrap());
        assert!(s.hurwitz_table(3, 5).is_err());
    }

    #[test]
    fn invalid_degree() {
        let mut s = store();
        assert!(s.m0(0).is_err());
        assert!(s.m1(0).is_err());
        assert!(s.m2(0).is_err());
        assert!(m0_closed(0).is_err());
    }
}
