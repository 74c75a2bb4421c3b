//! Independent oracles: every closed-form value here is rebuilt from
//! Bernoulli numbers or elementary expansions, with no engine code on the
//! oracle side.

use hurwitz_hodge::hodge::{d1_series_to_order, raw_at_genus, total_via_exp, total_via_sine};
use hurwitz_hodge::{Engine, EngineConfig, Rational, Series};
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn fact(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

fn big_pow(base: i64, e: usize) -> BigInt {
    (0..e).fold(BigInt::one(), |a, _| a * BigInt::from(base))
}

/// `B_0 ..= B_n` from `sum_{k=0}^{m} C(m+1, k) B_k = 0`, with `B_1 = -1/2`.
fn bernoulli(n: usize) -> Vec<Rational> {
    let mut pascal: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for r in 1..=n + 1 {
        let prev = &pascal[r - 1];
        let mut row = vec![BigInt::one(); r + 1];
        for k in 1..r {
            row[k] = &prev[k - 1] + &prev[k];
        }
        pascal.push(row);
    }
    let mut b: Vec<Rational> = vec![Rational::one()];
    for m in 1..=n {
        let s = (0..m).fold(Rational::zero(), |acc, k| {
            acc + Rational::from_integer(pascal[m + 1][k].clone()) * &b[k]
        });
        b.push(-s / Rational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// `ln(d sin(u/2) / sin(du/2))`, from
/// `ln(sin x / x) = sum_{n>=1} (-1)^n 2^{2n-1} B_{2n} x^{2n} / (n (2n)!)`.
fn d1_oracle(d: i64, order: usize) -> Series {
    let b = bernoulli(order);
    let mut c = vec![Rational::zero(); order + 1];
    for n in 1..=order / 2 {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        let num = Rational::from_integer(
            BigInt::from(sign) * big_pow(2, 2 * n - 1) * (big_pow(d, 2 * n) - BigInt::one()),
        ) * &b[2 * n];
        let den = BigInt::from(n) * fact(2 * n) * big_pow(4, n);
        c[2 * n] = num / Rational::from_integer(den);
    }
    Series::from_coeffs(c)
}

/// `-ln cos(u/2)`, from
/// `-ln cos x = sum_{n>=1} 2^{2n-1} (2^{2n}-1) |B_{2n}| x^{2n} / (n (2n)!)`.
fn neg_log_cos_half(order: usize) -> Series {
    let b = bernoulli(order);
    let mut c = vec![Rational::zero(); order + 1];
    for n in 1..=order / 2 {
        let abs_b = if b[2 * n] < Rational::zero() {
            -b[2 * n].clone()
        } else {
            b[2 * n].clone()
        };
        let num = Rational::from_integer(big_pow(2, 2 * n - 1) * (big_pow(2, 2 * n) - 1)) * abs_b;
        let den = BigInt::from(n) * fact(2 * n) * big_pow(4, n);
        c[2 * n] = num / Rational::from_integer(den);
    }
    Series::from_coeffs(c)
}

/// `(1/2) sec^2(u/2)`, differentiating
/// `tan x = sum_{n>=1} (-1)^{n-1} 2^{2n} (2^{2n}-1) B_{2n} x^{2n-1} / (2n)!`.
fn half_sec_squared_half(order: usize) -> Series {
    let b = bernoulli(order + 2);
    let mut c = vec![Rational::zero(); order + 1];
    for n in 1..=order / 2 + 1 {
        let p = 2 * n - 2;
        if p > order {
            break;
        }
        let sign = if n % 2 == 1 { 1 } else { -1 };
        let num = Rational::from_integer(
            BigInt::from(sign)
                * big_pow(2, 2 * n)
                * (big_pow(2, 2 * n) - 1)
                * BigInt::from(2 * n - 1),
        ) * &b[2 * n];
        let den = fact(2 * n) * big_pow(2, p) * BigInt::from(2);
        c[p] = num / Rational::from_integer(den);
    }
    Series::from_coeffs(c)
}

#[test]
fn bernoulli_sanity() {
    let b = bernoulli(12);
    assert_eq!(b[1], q(-1, 2));
    assert_eq!(b[2], q(1, 6));
    assert_eq!(b[4], q(-1, 30));
    assert_eq!(b[6], q(1, 42));
    assert_eq!(b[12], q(-691, 2730));
    assert!(b[3].is_zero() && b[11].is_zero());
}

#[test]
fn d1_matches_bernoulli_oracle_for_many_degrees() {
    for d in 2..=10 {
        assert_eq!(
            d1_series_to_order(d, 20),
            d1_oracle(d as i64, 20),
            "d = {d}"
        );
    }
}

#[test]
fn d1_at_degree_two_is_neg_log_cos() {
    assert_eq!(d1_oracle(2, 24), neg_log_cos_half(24));
    assert_eq!(d1_series_to_order(2, 24), neg_log_cos_half(24));
}

#[test]
fn degree_two_total_is_half_sec_squared() {
    let oracle = half_sec_squared_half(20);
    assert_eq!(oracle.coeff(0), &q(1, 2));
    assert_eq!(total_via_exp(2, 20), oracle);
    assert_eq!(total_via_sine(2, 20), oracle);
}

#[test]
fn upsilon_matches_bernoulli_oracle() {
    for d in 2..=6 {
        let e = Engine::new(EngineConfig::new(d, 8).unwrap());
        let oracle = d1_oracle(d as i64, 18);
        for (i, u) in e.upsilon().values().iter().enumerate() {
            assert_eq!(u, oracle.coeff(2 * i + 2), "d = {d}, i = {i}");
        }
        assert_eq!(e.upsilon().len(), 8);
    }
}

/// `V_0 = (1/d) exp(d Upsilon_0 u^2)` gives
/// `V_0^g = (2g)! (d Upsilon_0)^g / (g! d)` with `Upsilon_0 = (d^2-1)/24`.
#[test]
fn first_vertical_column_is_gaussian() {
    for d in 2..=5i64 {
        let e = Engine::new(EngineConfig::new(d as u32, 10).unwrap());
        let v0 = e.vi_closed(0).unwrap();
        let rate = q(d * (d * d - 1), 24);
        for g in 0..=10usize {
            let mut want = Rational::from_integer(fact(2 * g)) / Rational::from_integer(fact(g));
            for _ in 0..g {
                want *= &rate;
            }
            want /= Rational::from_integer(BigInt::from(d));
            assert_eq!(raw_at_genus(&v0, g), want, "d = {d}, g = {g}");
        }
    }
}

/// `D_2 = (d/2) D_1^2`, expanded by hand from the oracle coefficients.
#[test]
fn second_diagonal_from_oracle_square() {
    for d in 2..=5i64 {
        let e = Engine::new(EngineConfig::new(d as u32, 6).unwrap());
        let a = d1_oracle(d, 14);
        let d2 = e.di_closed(2).unwrap();
        for g in 2..=6usize {
            let mut coeff = Rational::zero();
            for j in 1..g {
                coeff += a.coeff(2 * j) * a.coeff(2 * (g - j));
            }
            let want = coeff * q(d, 2) * Rational::from_integer(fact(2 * g));
            assert_eq!(raw_at_genus(&d2, g), want, "d = {d}, g = {g}");
        }
    }
}
