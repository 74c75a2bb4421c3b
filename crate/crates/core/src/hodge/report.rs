//! Certification harness: compares the closed forms with the recursions and
//! with each other, and collects the results as data.

use std::fmt;

use num_traits::Zero;

use super::engine::{raw_at_genus, total_via_exp, total_via_sine, Engine};
use super::recursion::Localization;
use super::HodgeError;
use crate::rational::{to_pq, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub scope: String,
    /// Number of series or values compared.
    pub compared: usize,
    /// First counterexample, if any.
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{tag}] {}: {} ({} compared)",
            self.name, self.scope, self.compared
        )?;
        if let Some(why) = &self.failure {
            write!(f, "; first failure: {why}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub degree: u32,
    pub max_genus: u32,
    pub i_max: usize,
    pub checks: Vec<CheckOutcome>,
}

impl CrossCheckReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed())
    }
}

impl fmt::Display for CrossCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "cross-check degree={} gmax={} imax={}",
            self.degree, self.max_genus, self.i_max
        )?;
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        let verdict = if self.all_passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "result: {verdict} ({passed}/{} checks)",
            self.checks.len()
        )
    }
}

fn mismatch_at(i: usize, a: &crate::series::Series, b: &crate::series::Series) -> Option<String> {
    a.first_mismatch(b).map(|n| {
        if n % 2 == 0 {
            format!("i={i} g={}", n / 2)
        } else {
            format!("i={i} u^{n}")
        }
    })
}

/// Runs every certification for `engine` up to index `i_max <= G`:
///
/// 1. closed `D_i` against the recursion for `2 <= i <= i_max`;
/// 2. closed `V_i` against the recursion for `0 <= i <= min(i_max, G-1)`;
/// 3. `D_i^g = V_{g-i}^g` for all `1 <= i <= g <= G`;
/// 4. `T_g` from the closed total series against recursion row sums;
/// 5. the exponential and trigonometric total series against each other;
/// 6. the two generating-function residuals.
pub fn cross_check_report(engine: &Engine, i_max: usize) -> Result<CrossCheckReport, HodgeError> {
    let cfg = *engine.config();
    let top = cfg.max_genus() as usize;
    if i_max > top {
        return Err(HodgeError::IndexOutOfRange {
            index: i_max,
            min: 0,
            max: top,
        });
    }
    let v_top = i_max.min(top - 1);
    let mut loc = Localization::new(engine);
    let mut checks = Vec::new();

    let mut failure = None;
    let mut compared = 0;
    for i in 2..=i_max {
        let closed = engine.di_closed(i)?;
        let rec = loc.di_recursive(i)?;
        compared += 1;
        if failure.is_none() {
            failure = mismatch_at(i, &closed, &rec);
        }
    }
    checks.push(CheckOutcome {
        name: "diagonal-closed-vs-recursion",
        scope: format!("D_i for 2 <= i <= {i_max}"),
        compared,
        failure,
    });

    let mut failure = None;
    let mut compared = 0;
    for i in 0..=v_top {
        let closed = engine.vi_closed(i)?;
        let rec = loc.vi_recursive(i)?;
        compared += 1;
        if failure.is_none() {
            failure = mismatch_at(i, &closed, &rec);
        }
    }
    checks.push(CheckOutcome {
        name: "vertical-closed-vs-recursion",
        scope: format!("V_i for 0 <= i <= {v_top}"),
        compared,
        failure,
    });

    let ds = (1..=top)
        .map(|i| engine.di_closed(i))
        .collect::<Result<Vec<_>, _>>()?;
    let vs = (0..top)
        .map(|i| engine.vi_closed(i))
        .collect::<Result<Vec<_>, _>>()?;
    let mut failure = None;
    let mut compared = 0;
    for g in 1..=top {
        for i in 1..=g {
            let dv = raw_at_genus(&ds[i - 1], g);
            let vv = raw_at_genus(&vs[g - i], g);
            compared += 1;
            if failure.is_none() && dv != vv {
                failure = Some(format!(
                    "D_{i}^{g} = {} but V_{}^{g} = {}",
                    to_pq(&dv),
                    g - i,
                    to_pq(&vv)
                ));
            }
        }
    }
    checks.push(CheckOutcome {
        name: "repackaging",
        scope: format!("D_i^g = V_(g-i)^g for 1 <= i <= g <= {top}"),
        compared,
        failure,
    });

    let via_exp = total_via_exp(cfg.degree(), cfg.order());
    let rows = loc.t_row_sums();
    let mut failure = None;
    let mut compared = 0;
    for g in 0..=top {
        let closed = raw_at_genus(&via_exp, g);
        let summed = raw_at_genus(&rows, g);
        compared += 1;
        if failure.is_none() && closed != summed {
            failure = Some(format!(
                "T_{g} = {} but row sum = {}",
                to_pq(&closed),
                to_pq(&summed)
            ));
        }
    }
    if failure.is_none() && raw_at_genus(&via_exp, 0) != cfg.d().recip() {
        failure = Some("T_0 != 1/d".to_string());
    }
    checks.push(CheckOutcome {
        name: "row-sums",
        scope: format!("T_g = sum_i D_i^g for g <= {top}, T_0 = 1/d"),
        compared,
        failure,
    });

    let via_sine = total_via_sine(cfg.degree(), cfg.order());
    checks.push(CheckOutcome {
        name: "total-exp-vs-sine",
        scope: format!(
            "(1/d)exp(d D_1) = d^(d-1) sin^d(u/2)/sin^d(du/2) to u^{}",
            cfg.order()
        ),
        compared: cfg.order() + 1,
        failure: via_exp.first_mismatch(&via_sine).map(|n| format!("u^{n}")),
    });

    let mut failure = None;
    let mut compared = 0;
    for i in 2..=i_max {
        let r = engine.check_gf_identity_d(i)?;
        compared += 1;
        if failure.is_none() {
            failure = r.valuation().map(|n| format!("i={i} u^{n}"));
        }
    }
    checks.push(CheckOutcome {
        name: "diagonal-identity-residual",
        scope: format!("2 <= i <= {i_max}, to u^{}", cfg.order() - 1),
        compared,
        failure,
    });

    let mut failure = None;
    let mut compared = 0;
    for i in 0..=v_top {
        let r = engine.check_gf_identity_v(i)?;
        compared += 1;
        if failure.is_none() {
            failure = r.valuation().map(|n| format!("i={i} u^{n}"));
        }
    }
    checks.push(CheckOutcome {
        name: "vertical-identity-residual",
        scope: format!("0 <= i <= {v_top}, to u^{}", cfg.order() - 1),
        compared,
        failure,
    });

    Ok(CrossCheckReport {
        degree: cfg.degree(),
        max_genus: cfg.max_genus(),
        i_max,
        checks,
    })
}

/// Sign monitor: true when every raw value in the closed `D` triangle up to
/// genus `G` is positive. Reported, not asserted.
pub fn all_positive(engine: &Engine) -> Result<bool, HodgeError> {
    let top = engine.config().max_genus() as usize;
    for i in 1..=top {
        let s = engine.di_closed(i)?;
        for g in i..=top {
            if raw_at_genus(&s, g) <= Rational::zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::EngineConfig;

    #[test]
    fn degree_two_genus_six() {
        let e = Engine::new(EngineConfig::new(2, 6).unwrap());
        let r = cross_check_report(&e, 4).unwrap();
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.checks.len(), 7);
        assert!(all_positive(&e).unwrap());
    }

    #[test]
    fn degree_five_genus_five() {
        let e = Engine::new(EngineConfig::new(5, 5).unwrap());
        let r = cross_check_report(&e, 3).unwrap();
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn imax_beyond_genus_is_rejected() {
        let e = Engine::new(EngineConfig::new(2, 3).unwrap());
        assert!(cross_check_report(&e, 4).is_err());
    }
}
