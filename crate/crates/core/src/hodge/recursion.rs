//! The localization relations run as exact dynamic programs over raw
//! integral values. They use nothing from the closed forms except the
//! initial condition `D_1`, so they serve as the independent route.

use num_bigint::BigInt;
use num_traits::Zero;

use super::engine::Engine;
use super::table::{IntegralKey, IntegralTable, Path};
use super::HodgeError;
use crate::rational::{binomial, factorial, Rational};
use crate::series::{egf_from_raw, raw_from_egf, Series};

fn signed(value: Rational, exponent: i64) -> Rational {
    if exponent.rem_euclid(2) == 0 {
        value
    } else {
        -value
    }
}

/// Memoized recursion state for one engine.
///
/// Raw values are tabulated for genus `0 ..= G + 1`, which is everything a
/// series of order `2G + 2` can hold.
#[derive(Debug, Clone)]
pub struct Localization<'e> {
    engine: &'e Engine,
    table: IntegralTable,
    genus_limit: u32,
}

impl<'e> Localization<'e> {
    /// Seeds the table with the initial condition `D_1^g` for all `g`.
    pub fn new(engine: &'e Engine) -> Self {
        let genus_limit = engine.config().max_genus() + 1;
        let mut table = IntegralTable::new();
        for g in 1..=genus_limit {
            let raw = raw_from_egf(engine.d1_series().coeff(2 * g as usize), 2 * g as usize);
            table.insert(IntegralKey::D { i: 1, g }, raw, Path::ClosedForm);
        }
        Localization {
            engine,
            table,
            genus_limit,
        }
    }

    pub fn table(&self) -> &IntegralTable {
        &self.table
    }

    pub fn into_table(self) -> IntegralTable {
        self.table
    }

    pub fn genus_limit(&self) -> u32 {
        self.genus_limit
    }

    fn lookup(&self, key: IntegralKey) -> Rational {
        self.table
            .value(&key)
            .unwrap_or_else(|| panic!("{key} requested before it was computed"))
    }

    fn assemble(&self, key_at: impl Fn(u32) -> IntegralKey) -> Series {
        let mut s = Series::zero(2 * self.genus_limit as usize);
        for g in 0..=self.genus_limit {
            let raw = self.lookup(key_at(g));
            if !raw.is_zero() {
                s.set_coeff(2 * g as usize, egf_from_raw(&raw, 2 * g as usize));
            }
        }
        s
    }

    fn fill_d(&mut self, i: u32) {
        if i < 2
            || self.table.contains(&IntegralKey::D {
                i,
                g: self.genus_limit,
            })
        {
            return;
        }
        let d = BigInt::from(self.engine.config().degree());
        for g in i..=self.genus_limit {
            let mut sum = Rational::zero();
            for g1 in 1..g {
                let g2 = g - g1;
                let weight = binomial(2 * g as usize - 1, 2 * g1 as usize - 1);
                let mut inner = Rational::zero();
                for k in 1..=i {
                    let term = self.lookup(IntegralKey::D { i: i - k, g: g1 })
                        * self.lookup(IntegralKey::D { i: k, g: g2 });
                    inner += signed(term, i64::from(k));
                }
                sum += inner * &weight;
            }
            let value = -(sum * &d);
            self.table
                .insert(IntegralKey::D { i, g }, value, Path::Recursion);
        }
    }

    /// `D_i` from
    /// `D_i^g = -d sum_{g1+g2=g} C(2g-1, 2g1-1) sum_{k=1}^{i} (-1)^k D_{i-k}^{g1} D_k^{g2}`,
    /// filling any missing lower index first.
    pub fn di_recursive(&mut self, i: usize) -> Result<Series, HodgeError> {
        let top = self.engine.config().max_genus() as usize;
        if !(2..=top).contains(&i) {
            return Err(HodgeError::IndexOutOfRange {
                index: i,
                min: 2,
                max: top,
            });
        }
        for j in 2..=i as u32 {
            self.fill_d(j);
        }
        let i = i as u32;
        Ok(self.assemble(|g| IntegralKey::D { i, g }))
    }

    fn fill_v(&mut self, i: u32) {
        if self.table.contains(&IntegralKey::V {
            i,
            g: self.genus_limit,
        }) {
            return;
        }
        let d = BigInt::from(self.engine.config().degree());
        if i == 0 {
            let unstable = self.engine.config().d().recip();
            self.table
                .insert(IntegralKey::V { i: 0, g: 0 }, unstable, Path::ClosedForm);
        }
        let upsilon = self
            .engine
            .upsilon()
            .get(i as usize)
            .expect("index checked by caller");
        let initial = raw_from_egf(upsilon, 2 * i as usize + 2);
        self.table
            .insert(IntegralKey::V { i, g: i + 1 }, initial, Path::ClosedForm);
        for g in i + 2..=self.genus_limit {
            let mut sum = Rational::zero();
            for g1 in 1..g {
                let g2 = g - g1;
                let weight = binomial(2 * g as usize - 1, 2 * g1 as usize - 1);
                let mut inner = Rational::zero();
                for k in 0..=i {
                    let term = self.lookup(IntegralKey::V { i: k, g: g1 })
                        * self.lookup(IntegralKey::V { i: i - k, g: g2 });
                    // the sign follows the index paired with g2
                    inner += signed(term, i64::from(g2) - i64::from(i - k));
                }
                sum += inner * &weight;
            }
            let value = -(sum * &d);
            self.table
                .insert(IntegralKey::V { i, g }, value, Path::Recursion);
        }
    }

    /// `V_i` from its initial value `V_i^{i+1}` and, for `g > i + 1`,
    /// `V_i^g = -d sum_{g1+g2=g; g1,g2>=1} C(2g-1, 2g1-1) sum_{k=0}^{i} (-1)^{g2-(i-k)} V_k^{g1} V_{i-k}^{g2}`.
    pub fn vi_recursive(&mut self, i: usize) -> Result<Series, HodgeError> {
        let top = self.engine.config().max_genus() as usize - 1;
        if i > top {
            return Err(HodgeError::IndexOutOfRange {
                index: i,
                min: 0,
                max: top,
            });
        }
        for j in 0..=i as u32 {
            self.fill_v(j);
        }
        let i = i as u32;
        Ok(self.assemble(|g| IntegralKey::V { i, g }))
    }

    /// Fills every recursion column (`D_2 ..= D_G`, `V_0 ..= V_{G-1}`, `T`)
    /// and returns the table.
    pub fn tabulate_all(mut self) -> IntegralTable {
        let top = self.engine.config().max_genus();
        for i in 2..=top {
            self.fill_d(i);
        }
        for i in 0..top {
            self.fill_v(i);
        }
        self.t_row_sums();
        self.table
    }

    /// Row sums `T_g = sum_{i=1}^{g} D_i^g` over the recursion table, with
    /// `T_0 = 1/d`, tabulated for `g <= G` and returned as an EGF series of
    /// order `2G`.
    pub fn t_row_sums(&mut self) -> Series {
        let top = self.engine.config().max_genus();
        for i in 2..=top {
            self.fill_d(i);
        }
        let mut s = Series::zero(2 * top as usize);
        let t0 = self.engine.config().d().recip();
        s.set_coeff(0, t0.clone());
        self.table
            .insert(IntegralKey::T { g: 0 }, t0, Path::Recursion);
        for g in 1..=top {
            let total = (1..=g)
                .map(|i| self.lookup(IntegralKey::D { i, g }))
                .fold(Rational::zero(), |a, b| a + b);
            s.set_coeff(2 * g as usize, &total / factorial(2 * g as usize));
            self.table
                .insert(IntegralKey::T { g }, total, Path::Recursion);
        }
        s
    }
}
