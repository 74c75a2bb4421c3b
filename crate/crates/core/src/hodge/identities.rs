//! Residuals of the two generating-function identities. Each residual is
//! zero up to truncation when its inputs are correct.

use num_bigint::BigInt;

use super::engine::{Engine, UpsilonTable};
use super::HodgeError;
use crate::rational::Rational;
use crate::series::Series;

/// `sum_{k=0}^{i} (-1)^k D_{i-k}'(u) D_k(u)`, with `ds[k] = D_k` and
/// `ds[0]` the constant `1/d`.
///
/// The identity holds for `i >= 2`. At `i = 1` the sum is `D_1'(u) / d`,
/// because the auxiliary integral behind the relation is nonzero there.
pub fn gf_identity_d_residual(ds: &[Series], i: usize) -> Series {
    assert!(i < ds.len(), "need D_0 ..= D_{i}");
    let mut acc = Series::zero(ds[0].order().saturating_sub(1));
    for k in 0..=i {
        let term = ds[i - k].derivative().mul(&ds[k]);
        acc = if k % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// `sum_{k=0}^{i} (-1)^{i-k} V_k'(u) V_{i-k}(iu) - ((2i+2)/d) Upsilon_i u^{2i+1}`.
pub fn gf_identity_v_residual(
    degree: u32,
    vs: &[Series],
    upsilon_i: &Rational,
    i: usize,
) -> Result<Series, HodgeError> {
    assert!(i < vs.len(), "need V_0 ..= V_{i}");
    let mut acc = Series::zero(vs[0].order().saturating_sub(1));
    for k in 0..=i {
        let term = vs[k].derivative().mul(&vs[i - k].substitute_iu()?);
        acc = if (i - k).is_multiple_of(2) {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    let rhs = upsilon_i * BigInt::from(2 * i + 2) / BigInt::from(degree);
    Ok(&acc - &Series::monomial(rhs, 2 * i + 1, acc.order()))
}

impl Engine {
    /// Closed-form series `D_0 ..= D_i`.
    pub fn d_family(&self, i: usize) -> Result<Vec<Series>, HodgeError> {
        let mut ds = vec![self.d0_series()];
        for k in 1..=i {
            ds.push(self.di_closed(k)?);
        }
        Ok(ds)
    }

    /// Residual of the horizontal-slope identity for `1 <= i <= G`, using
    /// closed-form `D_k`.
    pub fn check_gf_identity_d(&self, i: usize) -> Result<Series, HodgeError> {
        let top = self.config().max_genus() as usize;
        if !(1..=top).contains(&i) {
            return Err(HodgeError::IndexOutOfRange {
                index: i,
                min: 1,
                max: top,
            });
        }
        Ok(gf_identity_d_residual(&self.d_family(i)?, i))
    }

    /// Residual of the vertical identity for `0 <= i <= G - 1`, using
    /// closed-form `V_k`.
    pub fn check_gf_identity_v(&self, i: usize) -> Result<Series, HodgeError> {
        self.check_gf_identity_v_with(self.upsilon(), i)
    }

    /// As [`Engine::check_gf_identity_v`], but the right-hand side takes
    /// `Upsilon_i` from `rhs_upsilon` while the `V_k` stay closed-form.
    pub fn check_gf_identity_v_with(
        &self,
        rhs_upsilon: &UpsilonTable,
        i: usize,
    ) -> Result<Series, HodgeError> {
        let top = self.config().max_genus() as usize - 1;
        if i > top {
            return Err(HodgeError::IndexOutOfRange {
                index: i,
                min: 0,
                max: top,
            });
        }
        let vs = (0..=i)
            .map(|k| self.vi_closed(k))
            .collect::<Result<Vec<_>, _>>()?;
        let upsilon_i = rhs_upsilon.get(i).ok_or(HodgeError::IndexOutOfRange {
            index: i,
            min: 0,
            max: rhs_upsilon.len().saturating_sub(1),
        })?;
        gf_identity_v_residual(self.config().degree(), &vs, upsilon_i, i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::EngineConfig;
    use crate::rational::rat;

    fn engine(d: u32, g: u32) -> Engine {
        Engine::new(EngineConfig::new(d, g).unwrap())
    }

    #[test]
    fn d_identity_vanishes_from_two_on() {
        let e = engine(3, 5);
        for i in 2..=5 {
            let r = e.check_gf_identity_d(i).unwrap();
            assert!(r.is_zero(), "i = {i}: {r}");
            assert_eq!(r.order(), 11);
        }
    }

    #[test]
    fn d_identity_at_one_is_scaled_derivative() {
        let e = engine(2, 4);
        let r = e.check_gf_identity_d(1).unwrap();
        let expected = e.d1_series().derivative().scale(&rat(1, 2));
        assert_eq!(r, expected);
    }

    #[test]
    fn corrupted_d1_breaks_d_identity() {
        let e = engine(2, 4);
        let mut ds = e.d_family(3).unwrap();
        let bumped = ds[1].coeff(4) + rat(1, 1000);
        ds[1].set_coeff(4, bumped);
        assert!(!gf_identity_d_residual(&ds, 3).is_zero());
    }

    #[test]
    fn v_identity_vanishes() {
        for d in 2..=4 {
            let e = engine(d, 5);
            for i in 0..=4 {
                let r = e.check_gf_identity_v(i).unwrap();
                assert!(r.is_zero(), "d = {d}, i = {i}: {r}");
            }
        }
    }

    #[test]
    fn v_identity_at_zero_is_linear() {
        let e = engine(5, 3);
        let v0 = e.vi_closed(0).unwrap();
        let lhs = v0.derivative().mul(&v0.substitute_iu().unwrap());
        let slope = e.upsilon().values()[0].clone() * rat(2, 5);
        assert_eq!(lhs, Series::monomial(slope, 1, lhs.order()));
    }

    #[test]
    fn corrupted_upsilon_breaks_v_identity() {
        let e = engine(2, 4);
        let mut vals = e.upsilon().values().to_vec();
        vals[1] += rat(1, 7);
        let bad = UpsilonTable::from_values(vals);
        assert!(!e.check_gf_identity_v_with(&bad, 1).unwrap().is_zero());
    }
}
