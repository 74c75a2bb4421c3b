//! Closed-form generating functions: the degree-`d` initial condition
//! `D_1(u) = ln(d sin(u/2) / sin(du/2))` and everything built from it.

use num_traits::{One, Zero};

use super::table::{IntegralKey, IntegralTable, Path};
use super::HodgeError;
use crate::partitions::{enumerate, Partition};
use crate::rational::{factorial, int, pow, rat, Rational};
use crate::series::Series;

/// Covering degree `d >= 2` and the largest genus `G >= 1` of interest.
/// Every series is carried to `u^{2G+2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EngineConfig {
    degree: u32,
    max_genus: u32,
}

impl EngineConfig {
    pub fn new(degree: u32, max_genus: u32) -> Result<Self, HodgeError> {
        if degree < 2 {
            return Err(HodgeError::DegreeTooSmall(degree));
        }
        if max_genus < 1 {
            return Err(HodgeError::GenusTooSmall(max_genus));
        }
        Ok(EngineConfig { degree, max_genus })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn max_genus(&self) -> u32 {
        self.max_genus
    }

    /// Truncation order `2G + 2`.
    pub fn order(&self) -> usize {
        2 * self.max_genus as usize + 2
    }

    pub fn d(&self) -> Rational {
        int(i64::from(self.degree))
    }
}

/// `ln(d sin(u/2) / sin(du/2))` to `u^order`.
pub fn d1_series_to_order(degree: u32, order: usize) -> Series {
    let d = int(i64::from(degree));
    let num = Series::sin_scaled(&rat(1, 2), order + 1).scale(&d);
    let den = Series::sin_scaled(&(&d / int(2)), order + 1);
    num.divide(&den)
        .and_then(|q| q.log())
        .expect("sin(u/2) and sin(du/2) share valuation 1 and the quotient starts at 1")
}

/// `(1/d) exp(d D_1(u))`, the exponential route to the total series.
pub fn total_via_exp(degree: u32, order: usize) -> Series {
    let d = int(i64::from(degree));
    d1_series_to_order(degree, order)
        .scale(&d)
        .exp()
        .expect("D_1 has zero constant term")
        .scale(&d.recip())
}

/// `d^{d-1} sin^d(u/2) / sin^d(du/2)`, the trigonometric route.
pub fn total_via_sine(degree: u32, order: usize) -> Series {
    let d = int(i64::from(degree));
    let ratio = Series::sin_scaled(&rat(1, 2), order + 1)
        .divide(&Series::sin_scaled(&(&d / int(2)), order + 1))
        .expect("equal valuations");
    ratio.pow(degree).scale(&pow(&d, degree as usize - 1))
}

/// `Upsilon_0 ..= Upsilon_{G-1}`: the EGF coefficients of `D_1` at
/// `u^2, u^4, ..., u^{2G}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpsilonTable {
    values: Vec<Rational>,
}

impl UpsilonTable {
    pub fn from_values(values: Vec<Rational>) -> Self {
        UpsilonTable { values }
    }

    pub fn get(&self, i: usize) -> Option<&Rational> {
        self.values.get(i)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `Upsilon^eta = prod Upsilon_{n_k}^{m_k}`.
    pub fn power(&self, eta: &Partition) -> Rational {
        eta.multiplicities()
            .map(|(n, m)| pow(&self.values[n as usize], m as usize))
            .fold(Rational::one(), |a, b| a * b)
    }
}

/// Immutable closed-form engine for one `(d, G)`.
#[derive(Debug, Clone)]
pub struct Engine {
    cfg: EngineConfig,
    d1: Series,
    upsilon: UpsilonTable,
}

impl Engine {
    pub fn new(cfg: EngineConfig) -> Self {
        let d1 = d1_series_to_order(cfg.degree, cfg.order());
        let upsilon = UpsilonTable::from_values(
            (0..cfg.max_genus as usize)
                .map(|i| d1.coeff(2 * i + 2).clone())
                .collect(),
        );
        Engine { cfg, d1, upsilon }
    }

    pub fn config(&self) -> &EngineConfig {
        &self.cfg
    }

    pub fn d1_series(&self) -> &Series {
        &self.d1
    }

    pub fn upsilon(&self) -> &UpsilonTable {
        &self.upsilon
    }

    /// The constant series `D_0 = 1/d`.
    pub fn d0_series(&self) -> Series {
        Series::constant(self.cfg.d().recip(), self.cfg.order())
    }

    /// `D_i = d^{i-1} / i! * D_1^i` for `1 <= i <= G`.
    pub fn di_closed(&self, i: usize) -> Result<Series, HodgeError> {
        let g = self.cfg.max_genus as usize;
        if !(1..=g).contains(&i) {
            return Err(HodgeError::IndexOutOfRange {
                index: i,
                min: 1,
                max: g,
            });
        }
        let factor = pow(&self.cfg.d(), i - 1) / Rational::from_integer(factorial(i));
        Ok(self.d1.pow(i as u32).scale(&factor))
    }

    /// `V_i = u^{2i} e^{d Upsilon_0 u^2} sum_{eta |- i} u^{2 l(eta)} d^{l(eta)-1} Upsilon^eta / Aut(eta)`
    /// for `0 <= i <= G - 1`.
    pub fn vi_closed(&self, i: usize) -> Result<Series, HodgeError> {
        let top = self.cfg.max_genus as usize - 1;
        if i > top {
            return Err(HodgeError::IndexOutOfRange {
                index: i,
                min: 0,
                max: top,
            });
        }
        self.vi_closed_with(&self.upsilon, i)
    }

    /// Same formula as [`Engine::vi_closed`] over caller-supplied Upsilon
    /// values; used by the identity checks to build perturbed inputs.
    pub fn vi_closed_with(&self, upsilon: &UpsilonTable, i: usize) -> Result<Series, HodgeError> {
        if i >= upsilon.len() {
            return Err(HodgeError::IndexOutOfRange {
                index: i,
                min: 0,
                max: upsilon.len().saturating_sub(1),
            });
        }
        let order = self.cfg.order();
        let d = self.cfg.d();
        let mut poly = Series::zero(order);
        for eta in enumerate(i as u32) {
            let len = eta.len() as i64;
            let d_power = if len == 0 {
                d.recip()
            } else {
                pow(&d, len as usize - 1)
            };
            let weight = d_power * upsilon.power(&eta) / Rational::from_integer(eta.aut());
            let power = 2 * i + 2 * len as usize;
            if power <= order {
                let mut c = poly.coeff(power).clone();
                c += weight;
                poly.set_coeff(power, c);
            }
        }
        let gaussian = Series::monomial(&d * &upsilon.values[0], 2, order)
            .exp()
            .expect("monomial u^2 has zero constant term");
        Ok(poly.mul(&gaussian))
    }

    /// The total series `sum_g T_g(u)`, computed along both closed routes.
    /// Fails with the first differing power if they disagree.
    pub fn t_total(&self) -> Result<Series, HodgeError> {
        let via_exp = total_via_exp(self.cfg.degree, self.cfg.order());
        let via_sine = total_via_sine(self.cfg.degree, self.cfg.order());
        match via_exp.first_mismatch(&via_sine) {
            None => Ok(via_exp),
            Some(power) => Err(HodgeError::PathMismatch { power }),
        }
    }
}

/// Every in-range key up to genus `max_genus`, in table order:
/// `D_i^g` for `1 <= i <= g`, `V_i^g` for `i + 1 <= g` plus the unstable
/// `V_0^0`, and `T_g` for `0 <= g`.
pub fn closed_keys(max_genus: u32) -> Vec<IntegralKey> {
    let top = max_genus;
    let mut keys = Vec::new();
    for i in 1..=top {
        keys.extend((i..=top).map(|g| IntegralKey::D { i, g }));
    }
    keys.push(IntegralKey::V { i: 0, g: 0 });
    for i in 0..top {
        keys.extend((i + 1..=top).map(|g| IntegralKey::V { i, g }));
    }
    keys.extend((0..=top).map(|g| IntegralKey::T { g }));
    keys
}

impl Engine {
    /// Raw closed-form values for every key of [`closed_keys`].
    pub fn closed_table(&self) -> Result<IntegralTable, HodgeError> {
        let top = self.cfg.max_genus as usize;
        let ds = (1..=top)
            .map(|i| self.di_closed(i))
            .collect::<Result<Vec<_>, _>>()?;
        let vs = (0..top)
            .map(|i| self.vi_closed(i))
            .collect::<Result<Vec<_>, _>>()?;
        let t = self.t_total()?;
        let mut table = IntegralTable::new();
        for key in closed_keys(self.cfg.max_genus) {
            let g = key.genus() as usize;
            let value = match key {
                IntegralKey::D { i, .. } => raw_at_genus(&ds[i as usize - 1], g),
                IntegralKey::V { i, .. } => raw_at_genus(&vs[i as usize], g),
                IntegralKey::T { .. } => raw_at_genus(&t, g),
            };
            table.insert(key, value, Path::ClosedForm);
        }
        Ok(table)
    }
}

/// Coefficient of `u^{2g}` of an even series as a raw integral
/// (`(2g)!` times the coefficient).
pub fn raw_at_genus(series: &Series, g: usize) -> Rational {
    if 2 * g > series.order() {
        return Rational::zero();
    }
    series.coeff(2 * g) * factorial(2 * g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine(d: u32, g: u32) -> Engine {
        Engine::new(EngineConfig::new(d, g).unwrap())
    }

    #[test]
    fn config_rejects_degenerate_inputs() {
        assert_eq!(EngineConfig::new(1, 3), Err(HodgeError::DegreeTooSmall(1)));
        assert_eq!(EngineConfig::new(2, 0), Err(HodgeError::GenusTooSmall(0)));
        assert_eq!(EngineConfig::new(2, 3).unwrap().order(), 8);
    }

    #[test]
    fn d1_low_coefficients() {
        let e2 = engine(2, 3);
        let d1 = e2.d1_series();
        assert!(d1.coeff(0).is_zero() && d1.coeff(1).is_zero());
        assert_eq!(d1.coeff(2), &rat(1, 8));
        assert_eq!(d1.coeff(4), &rat(1, 192));
        assert_eq!(d1.coeff(6), &rat(1, 2880));
        assert!(d1.is_even());
        let e3 = engine(3, 2);
        assert_eq!(e3.d1_series().coeff(2), &rat(1, 3));
        assert_eq!(e3.d1_series().coeff(4), &rat(1, 36));
    }

    #[test]
    fn upsilon_values() {
        assert_eq!(
            engine(2, 3).upsilon().values(),
            &[rat(1, 8), rat(1, 192), rat(1, 2880)]
        );
        assert_eq!(engine(3, 1).upsilon().get(0), Some(&rat(1, 3)));
    }

    #[test]
    fn di_closed_values() {
        let e = engine(2, 4);
        let d2 = e.di_closed(2).unwrap();
        assert_eq!(raw_at_genus(&d2, 2), rat(3, 8));
        assert_eq!(raw_at_genus(&d2, 3), rat(15, 16));
        assert!(d2.coeff(0).is_zero() && d2.coeff(2).is_zero());
        assert!(e.di_closed(0).is_err());
        assert!(e.di_closed(5).is_err());
        for d in 2..=5i64 {
            let d22 = raw_at_genus(&engine(d as u32, 3).di_closed(2).unwrap(), 2);
            assert_eq!(d22, rat(d * (d * d - 1) * (d * d - 1), 48));
        }
    }

    #[test]
    fn total_for_degree_two() {
        let t = engine(2, 2).t_total().unwrap();
        assert_eq!(t.coeff(0), &rat(1, 2));
        assert_eq!(raw_at_genus(&t, 1), rat(1, 4));
        assert_eq!(raw_at_genus(&t, 2), rat(1, 2));
    }

    #[test]
    fn vi_closed_values() {
        let e = engine(2, 4);
        let v0 = e.vi_closed(0).unwrap();
        assert_eq!(raw_at_genus(&v0, 0), rat(1, 2));
        assert_eq!(raw_at_genus(&v0, 1), rat(1, 4));
        assert_eq!(raw_at_genus(&v0, 2), rat(3, 8));
        let v1 = e.vi_closed(1).unwrap();
        assert_eq!(raw_at_genus(&v1, 1), Rational::zero());
        assert_eq!(raw_at_genus(&v1, 2), rat(1, 8));
        assert_eq!(raw_at_genus(&v1, 3), rat(15, 16));
        assert!(e.vi_closed(4).is_err());
    }

    #[test]
    fn closed_table_covers_the_triangle() {
        let t = engine(2, 3).closed_table().unwrap();
        // 6 D entries, V_0^0..3 + V_1^2..3 + V_2^3, T_0..3
        assert_eq!(t.len(), 6 + 7 + 4);
        assert_eq!(
            closed_keys(3),
            t.iter().map(|(k, _)| *k).collect::<Vec<_>>()
        );
        assert_eq!(t.value(&IntegralKey::V { i: 0, g: 0 }), Some(rat(1, 2)));
        assert_eq!(t.value(&IntegralKey::D { i: 2, g: 3 }), Some(rat(15, 16)));
        assert_eq!(t.value(&IntegralKey::T { g: 2 }), Some(rat(1, 2)));
    }
}
