//! Degrees of the tautological divisor classes on the one-parameter family
//! of genus-g degree-d curves through 3d+g-2 general points, the generic
//! linear-combination evaluator over the (A, B, C, boundary) basis, and the
//! derived codimension-1 invariants: cuspidal counts, triple-point counts,
//! and the geometric and arithmetic sectional genera of the Severi variety.
//!
//! For genus 0 and 1 everything reduces to the incidence and
//! characteristic-number recursions. For genus 2 and 3 the incidence and
//! one-tangency counts are external inputs; the boundary and
//! dualizing-sheaf degrees are then determined by point-distribution sums
//! and the known expressions for the dualizing sheaf on the genus-2/3
//! moduli stacks (for genus 3 via the hyperelliptic divisor, which brings
//! in the counts H_d).

use crate::comb::binom_rat;
use crate::error::{Error, Result};
use crate::inputs::SeveriInputs;
use crate::rat::Rat;
use crate::store::MemoStore;
use serde::Serialize;

/// Degrees of the five restricted divisor classes for one (genus, degree).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorDegrees {
    pub genus: u8,
    pub d: u32,
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub delta: Rat,
    pub tl: Rat,
}

/// A divisor expressed in the (A, B, C, boundary) basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClass {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub delta: Rat,
}

impl DivisorClass {
    pub fn new(a: Rat, b: Rat, c: Rat, delta: Rat) -> Self {
        DivisorClass { a, b, c, delta }
    }

    /// The divisor of cuspidal curves: 3A + 3B + C - boundary.
    pub fn cuspidal() -> Self {
        DivisorClass::new(
            Rat::from(3i64),
            Rat::from(3i64),
            Rat::one(),
            Rat::from(-1i64),
        )
    }

    /// The canonical bundle of the normalized Severi variety:
    /// -3A/2 + 3B/2 + 11C/12 - 13 boundary/12.
    pub fn canonical() -> Self {
        DivisorClass::new(
            Rat::frac(-3, 2),
            Rat::frac(3, 2),
            Rat::frac(11, 12),
            Rat::frac(-13, 12),
        )
    }
}

/// Degree of a divisor class on the family, by linearity.
pub fn evaluate_class(class: &DivisorClass, deg: &DivisorDegrees) -> Rat {
    &class.a * &deg.a + &class.b * &deg.b + &class.c * &deg.c + &class.delta * &deg.delta
}

/// Derived codimension-1 invariants for one (genus, degree).
///
/// `triple` and `g_tilde` exist only in genus 0. In genus 3 the boundary
/// degree comes from a reconstructed point-distribution formula (validated
/// against the worked examples), and `delta_reconstructed` marks it and its
/// dependents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Codim1Report {
    pub degrees: DivisorDegrees,
    pub cusps: Rat,
    pub triple: Option<Rat>,
    pub g_hat: Rat,
    pub g_arith: Rat,
    pub g_tilde: Option<Rat>,
    pub delta_reconstructed: bool,
}

fn check_genus(genus: u8) -> Result<()> {
    if genus > 3 {
        return Err(Error::InvalidGenus(genus as i64));
    }
    Ok(())
}

fn check_degree(d: u32, min: u32) -> Result<()> {
    if d < min {
        return Err(Error::invalid_degree(d as i64, min));
    }
    Ok(())
}

impl MemoStore {
    /// N^{d,g}: irreducible genus-g degree-d curves through 3d+g-1 points.
    /// Genus 0 and 1 are recursive; genus 2 and 3 read the inputs.
    fn severi_count(&mut self, inputs: &SeveriInputs, genus: u8, d: u32) -> Result<Rat> {
        match genus {
            0 => Ok(self.rd_inner(d)),
            1 => Ok(self.ed_inner(d)),
            2 | 3 => inputs.n(genus, d),
            g => Err(Error::InvalidGenus(g as i64)),
        }
    }

    /// The five divisor degrees for the (genus, d) family, cached per key.
    ///
    /// A store must be paired with a single inputs snapshot; use a fresh
    /// store when switching inputs.
    pub fn degrees(&mut self, genus: u8, d: u32, inputs: &SeveriInputs) -> Result<DivisorDegrees> {
        check_genus(genus)?;
        check_degree(d, 1)?;
        if let Some(deg) = self.degrees.get(&(genus, d)) {
            return Ok(deg.clone());
        }
        let deg = match genus {
            0 => self.degrees_genus0(d),
            1 => self.degrees_genus1(d),
            2 => self.degrees_genus2(d, inputs)?,
            _ => self.degrees_genus3(d, inputs)?,
        };
        self.degrees.insert((genus, d), deg.clone());
        Ok(deg)
    }

    fn degrees_genus0(&mut self, d: u32) -> DivisorDegrees {
        let dd = d as i64;
        let a = self.rd_inner(d);
        let mut b_sum = Rat::zero();
        let mut c_sum = Rat::zero();
        for i in 1..d {
            let j = d - i;
            let (ii, jj) = (i as i64, j as i64);
            let w = binom_rat(3 * dd - 2, 3 * ii - 1);
            if w.is_zero() {
                continue;
            }
            let prod = w * self.rd_inner(i) * self.rd_inner(j);
            b_sum += Rat::from(ii * ii * jj * jj) * &prod;
            c_sum += Rat::from(ii * jj) * prod;
        }
        let b = Rat::frac(-1, dd) * &a + Rat::frac(1, 2 * dd) * b_sum;
        let c = Rat::frac(-1, 2) * c_sum;
        let delta = -&c;
        let tl = &a + &b;
        DivisorDegrees {
            genus: 0,
            d,
            a,
            b,
            c,
            delta,
            tl,
        }
    }

    fn degrees_genus1(&mut self, d: u32) -> DivisorDegrees {
        let dd = d as i64;
        let a = self.ed_inner(d);
        let rd = self.rd_inner(d);
        let nodes = binom_rat(dd - 1, 2);
        let mut delta = &nodes * &rd;
        let mut b = Rat::frac(dd, 12) * &nodes * &rd;
        let mut c = Rat::zero();
        for i in 1..d {
            let j = d - i;
            let (ii, jj) = (i as i64, j as i64);
            let ej = self.ed_inner(j);
            if ej.is_zero() {
                continue;
            }
            let w = binom_rat(3 * dd - 1, 3 * ii - 1) * self.rd_inner(i) * ej;
            delta += Rat::from(ii * jj) * &w;
            b += Rat::from(ii * ii * jj) * &w;
            c -= Rat::from(ii * jj) * w;
        }
        let tl = &a + &b;
        DivisorDegrees {
            genus: 1,
            d,
            a,
            b,
            c,
            delta,
            tl,
        }
    }

    fn degrees_genus2(&mut self, d: u32, inputs: &SeveriInputs) -> Result<DivisorDegrees> {
        let dd = d as i64;
        let a = inputs.n(2, d)?;
        let tl = inputs.tl(2, d)?;
        let b = &tl - &a;
        let nodes = binom_rat(dd - 1, 2) - Rat::one();
        let ed = self.ed_inner(d);
        let mut delta = &nodes * &ed;
        let mut c = Rat::frac(1, 5) * &nodes * &ed;
        for i in 1..d {
            let j = d - i;
            let (ii, jj) = (i as i64, j as i64);
            let ij = Rat::from(ii * jj);

            let tj = inputs.n(2, j)?;
            if !tj.is_zero() {
                let rt = binom_rat(3 * dd, 3 * ii - 1) * self.rd_inner(i) * tj;
                delta += &ij * &rt;
                c -= &ij * rt;
            }

            let ei = self.ed_inner(i);
            if !ei.is_zero() {
                let ej = self.ed_inner(j);
                if !ej.is_zero() {
                    let ee = binom_rat(3 * dd, 3 * ii) * ei * ej;
                    delta += Rat::frac(1, 2) * &ij * &ee;
                    c += Rat::frac(7, 10) * ij * ee;
                }
            }
        }
        Ok(DivisorDegrees {
            genus: 2,
            d,
            a,
            b,
            c,
            delta,
            tl,
        })
    }

    fn degrees_genus3(&mut self, d: u32, inputs: &SeveriInputs) -> Result<DivisorDegrees> {
        let dd = d as i64;
        let a = inputs.n(3, d)?;
        let tl = inputs.tl(3, d)?;
        let b = &tl - &a;
        let td = inputs.n(2, d)?;
        let h = inputs.hyperelliptic(d)?;
        let nodes = binom_rat(dd - 1, 2) - Rat::from(2i64);
        let mut delta = &nodes * &td;
        let mut c = Rat::frac(4, 3) * h + Rat::frac(1, 3) * &nodes * &td;
        for i in 1..d {
            let j = d - i;
            let (ii, jj) = (i as i64, j as i64);
            let ij = Rat::from(ii * jj);

            let uj = inputs.n(3, j)?;
            if !uj.is_zero() {
                let ru = binom_rat(3 * dd + 1, 3 * ii - 1) * self.rd_inner(i) * uj;
                delta += &ij * &ru;
                c -= &ij * ru;
            }

            let ei = self.ed_inner(i);
            if !ei.is_zero() {
                let tj = inputs.n(2, j)?;
                if !tj.is_zero() {
                    let et = binom_rat(3 * dd + 1, 3 * ii) * ei * tj;
                    delta += &ij * &et;
                    c += Rat::from(3i64) * ij * et;
                }
            }
        }
        Ok(DivisorDegrees {
            genus: 3,
            d,
            a,
            b,
            c,
            delta,
            tl,
        })
    }

    /// Number of cuspidal genus-g degree-d curves through 3d+g-2 points.
    pub fn cusp_count(&mut self, genus: u8, d: u32, inputs: &SeveriInputs) -> Result<Rat> {
        let deg = self.degrees(genus, d, inputs)?;
        Ok(evaluate_class(&DivisorClass::cuspidal(), &deg))
    }

    /// Number of degree-d rational curves with a triple point through
    /// 3d - 2 points. Genus 0 only; meaningful from degree 3 up.
    pub fn triple_count(&mut self, d: u32) -> Result<Rat> {
        check_degree(d, 3)?;
        let deg = self.degrees(0, d, &SeveriInputs::empty())?;
        Ok(triple_formula(&deg))
    }

    /// Geometric sectional genus of the Severi variety, by adjunction
    /// against the canonical class.
    pub fn sectional_geometric(&mut self, genus: u8, d: u32, inputs: &SeveriInputs) -> Result<Rat> {
        let deg = self.degrees(genus, d, inputs)?;
        Ok(g_hat_from_degrees(&deg))
    }

    /// Arithmetic sectional genus. On top of the geometric one, the section
    /// acquires a cusp for every cuspidal curve, a coordinate-axes point of
    /// multiplicity ij for every reducible curve whose component genera add
    /// to g, and one of multiplicity (d-1 choose 2)-(g-1) for every
    /// irreducible curve of genus g-1 in the family.
    pub fn sectional_arithmetic(
        &mut self,
        genus: u8,
        d: u32,
        inputs: &SeveriInputs,
    ) -> Result<Rat> {
        let g_hat = self.sectional_geometric(genus, d, inputs)?;
        let cusps = self.cusp_count(genus, d, inputs)?;
        let dd = d as i64;
        let gg = genus as i64;

        let mut split = Rat::zero();
        for i in 1..d {
            let j = d - i;
            let (ii, jj) = (i as i64, j as i64);
            if ii * jj == 1 {
                continue;
            }
            for gi in 0..=genus {
                let gj = genus - gi;
                let ni = self.severi_count(inputs, gi, i)?;
                if ni.is_zero() {
                    continue;
                }
                let nj = self.severi_count(inputs, gj, j)?;
                if nj.is_zero() {
                    continue;
                }
                let w = binom_rat(3 * dd + gg - 2, 3 * ii + gi as i64 - 1);
                split += Rat::from(ii * jj - 1) * w * ni * nj;
            }
        }
        let mut total = g_hat + cusps + Rat::frac(1, 2) * split;

        if genus >= 1 {
            let lower = self.severi_count(inputs, genus - 1, d)?;
            total += (binom_rat(dd - 1, 2) - Rat::from(gg)) * lower;
        }
        Ok(total)
    }

    /// Sectional genus of the normalized section, genus 0 only: the
    /// normalization removes a node over each curve with a node at one of
    /// the fixed points.
    pub fn sectional_tilde(&mut self, d: u32) -> Result<Rat> {
        check_degree(d, 1)?;
        let g_hat = self.sectional_geometric(0, d, &SeveriInputs::empty())?;
        let np = self.npd_inner(d);
        Ok(g_hat - Rat::from(3 * d as i64 - 2) * np)
    }

    /// All codimension-1 invariants for one (genus, degree).
    pub fn report(&mut self, genus: u8, d: u32, inputs: &SeveriInputs) -> Result<Codim1Report> {
        let degrees = self.degrees(genus, d, inputs)?;
        let cusps = evaluate_class(&DivisorClass::cuspidal(), &degrees);
        let triple = (genus == 0).then(|| triple_formula(&degrees));
        let g_hat = g_hat_from_degrees(&degrees);
        let g_arith = self.sectional_arithmetic(genus, d, inputs)?;
        let g_tilde = if genus == 0 {
            Some(self.sectional_tilde(d)?)
        } else {
            None
        };
        Ok(Codim1Report {
            degrees,
            cusps,
            triple,
            g_hat,
            g_arith,
            g_tilde,
            delta_reconstructed: genus == 3,
        })
    }
}

/// (d^2-6d+10) A/2 - (d-6) B/2 + C; vanishes identically below degree 3.
fn triple_formula(deg: &DivisorDegrees) -> Rat {
    let dd = deg.d as i64;
    Rat::frac(dd * dd - 6 * dd + 10, 2) * &deg.a - Rat::frac(dd - 6, 2) * &deg.b + deg.c.clone()
}

/// Solve 2g - 2 = K_W . section + (3d+g-2) A for the geometric sectional
/// genus.
fn g_hat_from_degrees(deg: &DivisorDegrees) -> Rat {
    let points = 3 * deg.d as i64 + deg.genus as i64 - 2;
    let two_g_minus_two =
        evaluate_class(&DivisorClass::canonical(), deg) + Rat::from(points) * &deg.a;
    (two_g_minus_two + Rat::from(2i64)) * Rat::frac(1, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn store() -> MemoStore {
        MemoStore::new()
    }

    fn deg0(d: u32) -> DivisorDegrees {
        store().degrees(0, d, &SeveriInputs::empty()).unwrap()
    }

    #[test]
    fn genus0_cubic_degrees() {
        let deg = deg0(3);
        assert_eq!(deg.a, Rat::from(12i64));
        assert_eq!(deg.b, Rat::from(24i64));
        assert_eq!(deg.c, Rat::from(-42i64));
        assert_eq!(deg.delta, Rat::from(42i64));
        assert_eq!(deg.tl, Rat::from(36i64));
    }

    #[test]
    fn genus0_quartic_degrees() {
        let deg = deg0(4);
        assert_eq!(deg.a, Rat::from(620i64));
        assert_eq!(deg.b, Rat::from(1564i64));
        assert_eq!(deg.c, Rat::from(-2124i64));
        assert_eq!(deg.tl, Rat::from(2184i64));
    }

    #[test]
    fn genus1_low_degrees() {
        let mut s = store();
        let deg = s.degrees(1, 3, &SeveriInputs::empty()).unwrap();
        assert_eq!(deg.a, Rat::one());
        assert_eq!(deg.b, Rat::from(3i64));
        assert_eq!(deg.c, Rat::zero());
        assert_eq!(deg.delta, Rat::from(12i64));
        let deg = s.degrees(1, 4, &SeveriInputs::empty()).unwrap();
        assert_eq!(deg.a, Rat::from(225i64));
        assert_eq!(deg.b, Rat::from(785i64));
        assert_eq!(deg.c, Rat::from(-165i64));
        assert_eq!(deg.delta, Rat::from(2025i64));
        // the one-tangency elliptic quartic count appears as |TL|
        assert_eq!(deg.tl, Rat::from(1010i64));
    }

    #[test]
    fn genus2_table_degrees() {
        let inputs = SeveriInputs::embedded();
        let mut s = store();
        let deg = s.degrees(2, 4, &inputs).unwrap();
        assert_eq!(deg.b, Rat::from(117i64));
        assert_eq!(deg.c, Rat::from(90i64));
        assert_eq!(deg.delta, Rat::from(450i64));
        assert_eq!(deg.tl, Rat::from(144i64));
        let deg = s.degrees(2, 5, &inputs).unwrap();
        assert_eq!(deg.delta, Rat::from(447300i64));
    }

    #[test]
    fn genus3_table_degrees() {
        let inputs = SeveriInputs::embedded();
        let mut s = store();
        let deg = s.degrees(3, 4, &inputs).unwrap();
        assert_eq!(deg.b, Rat::from(5i64));
        assert_eq!(deg.c, Rat::from(9i64));
        assert_eq!(deg.delta, Rat::from(27i64));
        assert_eq!(deg.tl, Rat::from(6i64));
    }

    #[test]
    fn class_evaluation() {
        let deg = deg0(3);
        assert_eq!(
            evaluate_class(&DivisorClass::cuspidal(), &deg),
            Rat::from(24i64)
        );
        let zero = DivisorClass::new(Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero());
        assert_eq!(evaluate_class(&zero, &deg), Rat::zero());
        let tangency = DivisorClass::new(Rat::one(), Rat::one(), Rat::zero(), Rat::zero());
        assert_eq!(evaluate_class(&tangency, &deg), deg.tl);
    }

    #[test]
    fn cusp_counts() {
        let inputs = SeveriInputs::embedded();
        let mut s = store();
        assert_eq!(s.cusp_count(0, 3, &inputs).unwrap(), Rat::from(24i64));
        assert_eq!(s.cusp_count(1, 3, &inputs).unwrap(), Rat::zero());
        assert_eq!(s.cusp_count(2, 4, &inputs).unwrap(), Rat::from(72i64));
        assert_eq!(s.cusp_count(3, 4, &inputs).unwrap(), Rat::zero());
    }

    #[test]
    fn triple_points() {
        let mut s = store();
        assert_eq!(s.triple_count(3).unwrap(), Rat::zero());
        assert_eq!(s.triple_count(4).unwrap(), Rat::from(60i64));
        assert_eq!(s.triple_count(5).unwrap(), Rat::from(56400i64));
        assert_eq!(s.triple_count(2), Err(Error::invalid_degree(2i64, 3)));
    }

    #[test]
    fn sectional_genera_genus1() {
        let mut s = store();
        let inputs = SeveriInputs::empty();
        assert_eq!(s.sectional_geometric(1, 3, &inputs).unwrap(), Rat::zero());
        assert_eq!(
            s.sectional_geometric(1, 4, &inputs).unwrap(),
            Rat::from(486i64)
        );
        assert_eq!(s.sectional_arithmetic(1, 3, &inputs).unwrap(), Rat::zero());
        assert_eq!(
            s.sectional_arithmetic(1, 4, &inputs).unwrap(),
            Rat::from(2676i64)
        );
    }

    #[test]
    fn sectional_genera_genus2() {
        let inputs = SeveriInputs::embedded();
        let mut s = store();
        assert_eq!(
            s.sectional_geometric(2, 4, &inputs).unwrap(),
            Rat::from(28i64)
        );
        assert_eq!(
            s.sectional_arithmetic(2, 4, &inputs).unwrap(),
            Rat::from(325i64)
        );
        assert_eq!(
            s.sectional_arithmetic(2, 5, &inputs).unwrap(),
            Rat::from(762994i64)
        );
    }

    #[test]
    fn sectional_genera_genus3() {
        let inputs = SeveriInputs::embedded();
        let mut s = store();
        assert_eq!(s.sectional_geometric(3, 4, &inputs).unwrap(), Rat::zero());
        assert_eq!(s.sectional_arithmetic(3, 4, &inputs).unwrap(), Rat::zero());
    }

    #[test]
    fn genus0_sectional_chain() {
        let mut s = store();
        let inputs = SeveriInputs::empty();
        assert_eq!(
            s.sectional_geometric(0, 3, &inputs).unwrap(),
            Rat::from(10i64)
        );
        assert_eq!(s.sectional_tilde(1).unwrap(), Rat::zero());
        assert_eq!(s.sectional_tilde(2).unwrap(), Rat::zero());
        assert_eq!(s.sectional_tilde(3).unwrap(), Rat::from(3i64));
    }

    #[test]
    fn reports() {
        let inputs = SeveriInputs::embedded();
        let mut s = store();
        let r = s.report(2, 6, &inputs).unwrap();
        assert_eq!(r.cusps, Rat::from(506246976i64));
        assert_eq!(r.g_hat, Rat::from(420645826i64));
        assert_eq!(r.g_arith, Rat::from(1410743814i64));
        assert!(!r.delta_reconstructed);

        let r = s.report(3, 5, &inputs).unwrap();
        assert_eq!(r.degrees.c, Rat::from(48840i64));
        assert_eq!(r.degrees.delta, Rat::from(147900i64));
        assert_eq!(r.cusps, Rat::from(49680i64));
        assert!(r.delta_reconstructed);

        let r = s.report(0, 1, &inputs).unwrap();
        assert_eq!(r.cusps, Rat::zero());
        assert_eq!(r.triple, Some(Rat::zero()));
        assert_eq!(r.g_tilde, Some(Rat::zero()));
    }

    #[test]
    fn missing_inputs_are_reported() {
        let inputs = SeveriInputs::embedded();
        let mut s = store();
        assert!(matches!(
            s.degrees(2, 7, &inputs),
            Err(Error::MissingInput(_))
        ));
        assert!(matches!(
            s.degrees(3, 8, &inputs),
            Err(Error::MissingInput(_))
        ));
        assert!(s.degrees(4, 4, &inputs).is_err());
    }

    #[test]
    fn divisor_identities() {
        let inputs = SeveriInputs::embedded();
        let mut s = store();
        for d in 3..=8u32 {
            let dd = d as i64;
            for genus in 0..=3u8 {
                if genus >= 2 && !(4..=6).contains(&d) {
                    continue;
                }
                let deg = s.degrees(genus, d, &inputs).unwrap();
                assert_eq!(deg.tl, &deg.a + &deg.b, "TL=A+B g={genus} d={d}");
            }
            let deg = s.degrees(0, d, &inputs).unwrap();
            assert_eq!(deg.c, -&deg.delta, "C=-Delta d={d}");
            assert_eq!(
                Rat::from(9 * (dd - 2)) * &deg.a,
                Rat::from(3 * (dd + 2)) * &deg.b + Rat::from(2 * dd) * &deg.c,
                "Kontsevich divisor identity d={d}"
            );
            let deg = s.degrees(1, d, &inputs).unwrap();
            assert_eq!(
                Rat::from(9i64) * &deg.a,
                Rat::from(3i64) * &deg.b + Rat::from(2i64) * &deg.c,
                "EHX divisor identity d={d}"
            );
        }
    }

    #[test]
    fn genus1_sectional_second_route() {
        // the expanded genus-1 forms, written without the canonical class
        let mut s = store();
        let inputs = SeveriInputs::empty();
        for d in 3..=7u32 {
            let dd = d as i64;
            let ed = s.ed_inner(d);
            let rd = s.rd_inner(d);
            let mut expected = (Rat::from(3 * dd) - Rat::frac(5, 2)) * &ed
                + Rat::frac(3 * dd - 26, 24) * binom_rat(dd - 1, 2) * &rd;
            let mut arith_sum = Rat::zero();
            for i in 1..d {
                let j = d - i;
                let (ii, jj) = (i as i64, j as i64);
                let ej = s.ed_inner(j);
                if ej.is_zero() {
                    continue;
                }
                let w = binom_rat(3 * dd - 1, 3 * ii - 1) * s.rd_inner(i) * ej;
                expected += Rat::from(ii * jj) * (Rat::frac(3 * ii, 2) - Rat::from(2i64)) * &w;
                arith_sum += Rat::from(ii * jj - 1) * w;
            }
            let g_hat = s.sectional_geometric(1, d, &inputs).unwrap();
            assert_eq!(
                &g_hat * Rat::from(2i64) - Rat::from(2i64),
                expected,
                "expanded geometric form, d={d}"
            );
            let cu = s.cusp_count(1, d, &inputs).unwrap();
            let expected_arith = &g_hat + cu + arith_sum + (binom_rat(dd - 1, 2) - Rat::one()) * rd;
            assert_eq!(
                s.sectional_arithmetic(1, d, &inputs).unwrap(),
                expected_arith,
                "expanded arithmetic form, d={d}"
            );
        }
    }
}
