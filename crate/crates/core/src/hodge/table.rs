use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    D,
    V,
    T,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::D => "D",
            Family::V => "V",
            Family::T => "T",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "D" => Ok(Family::D),
            "V" => Ok(Family::V),
            "T" => Ok(Family::T),
            other => Err(format!("unknown family {other:?}, expected D, V or T")),
        }
    }
}

/// Which computation produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Path {
    ClosedForm,
    Recursion,
    BothAgree,
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Path::ClosedForm => "closed-form",
            Path::Recursion => "recursion",
            Path::BothAgree => "both-agree",
        })
    }
}

impl FromStr for Path {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "closed-form" => Ok(Path::ClosedForm),
            "recursion" => Ok(Path::Recursion),
            "both-agree" => Ok(Path::BothAgree),
            other => Err(format!("unknown path tag {other:?}")),
        }
    }
}

/// Address of one raw integral.
///
/// * `D { i, g }`: `lambda_g lambda_{g-i} psi^{i-1}` on the genus-`g` space.
/// * `V { i, g }`: `lambda_g lambda_i psi^{g-i-1}`, so `D { i, g } = V { g - i, g }`.
/// * `T { g }`: the row sum over all `lambda_j` at genus `g`.
///
/// The derived order (D before V before T, then by index and genus) is the
/// output order everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IntegralKey {
    D { i: u32, g: u32 },
    V { i: u32, g: u32 },
    T { g: u32 },
}

impl IntegralKey {
    pub fn family(&self) -> Family {
        match self {
            IntegralKey::D { .. } => Family::D,
            IntegralKey::V { .. } => Family::V,
            IntegralKey::T { .. } => Family::T,
        }
    }

    pub fn index(&self) -> Option<u32> {
        match *self {
            IntegralKey::D { i, .. } | IntegralKey::V { i, .. } => Some(i),
            IntegralKey::T { .. } => None,
        }
    }

    pub fn genus(&self) -> u32 {
        match *self {
            IntegralKey::D { g, .. } | IntegralKey::V { g, .. } | IntegralKey::T { g } => g,
        }
    }

    /// True when the key lies outside the region where the integral can be
    /// nonzero: `g < i` or `i < 1` for `D`, `g < i + 1` for `V` (the
    /// unstable `V_0^0` excepted).
    pub fn vanishes_structurally(&self) -> bool {
        match *self {
            IntegralKey::D { i, g } => i < 1 || g < i,
            IntegralKey::V { i, g } => g < i + 1 && !(i == 0 && g == 0),
            IntegralKey::T { .. } => false,
        }
    }
}

impl fmt::Display for IntegralKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntegralKey::D { i, g } => write!(f, "D_{i}^{g}"),
            IntegralKey::V { i, g } => write!(f, "V_{i}^{g}"),
            IntegralKey::T { g } => write!(f, "T_{g}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub value: Rational,
    pub path: Path,
}

/// Memo of raw integral values for one degree.
///
/// Readers share it freely; extending it needs `&mut`, which gives the
/// single-writer discipline for free.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntegralTable {
    entries: BTreeMap<IntegralKey, Entry>,
}

impl IntegralTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, key: IntegralKey, value: Rational, path: Path) {
        self.entries.insert(key, Entry { value, path });
    }

    pub fn get(&self, key: &IntegralKey) -> Option<&Entry> {
        self.entries.get(key)
    }

    pub fn contains(&self, key: &IntegralKey) -> bool {
        self.entries.contains_key(key)
    }

    /// Stored value, or zero for keys that vanish structurally.
    /// `None` means the value is simply not computed yet.
    pub fn value(&self, key: &IntegralKey) -> Option<Rational> {
        match self.entries.get(key) {
            Some(e) => Some(e.value.clone()),
            None if key.vanishes_structurally() => Some(Rational::zero()),
            None => None,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IntegralKey, &Entry)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn family(&self, family: Family) -> impl Iterator<Item = (&IntegralKey, &Entry)> {
        self.entries
            .iter()
            .filter(move |(k, _)| k.family() == family)
    }

    /// Copies every entry of `other`, overwriting existing keys.
    pub fn merge(&mut self, other: &IntegralTable) {
        for (k, e) in other.iter() {
            self.entries.insert(*k, e.clone());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn vanishing_region() {
        assert!(IntegralKey::D { i: 2, g: 1 }.vanishes_structurally());
        assert!(IntegralKey::D { i: 0, g: 3 }.vanishes_structurally());
        assert!(!IntegralKey::D { i: 2, g: 2 }.vanishes_structurally());
        assert!(IntegralKey::V { i: 1, g: 1 }.vanishes_structurally());
        assert!(!IntegralKey::V { i: 0, g: 0 }.vanishes_structurally());
        assert!(!IntegralKey::V { i: 1, g: 2 }.vanishes_structurally());
    }

    #[test]
    fn lookups_apply_the_zero_convention() {
        let mut t = IntegralTable::new();
        t.insert(IntegralKey::D { i: 1, g: 1 }, rat(1, 4), Path::ClosedForm);
        assert_eq!(t.value(&IntegralKey::D { i: 1, g: 1 }), Some(rat(1, 4)));
        assert_eq!(t.value(&IntegralKey::D { i: 3, g: 2 }), Some(rat(0, 1)));
        assert_eq!(t.value(&IntegralKey::D { i: 1, g: 2 }), None);
    }

    #[test]
    fn key_order_is_family_then_index_then_genus() {
        let mut keys = vec![
            IntegralKey::T { g: 0 },
            IntegralKey::V { i: 0, g: 1 },
            IntegralKey::D { i: 2, g: 2 },
            IntegralKey::D { i: 1, g: 3 },
        ];
        keys.sort();
        assert_eq!(
            keys,
            vec![
                IntegralKey::D { i: 1, g: 3 },
                IntegralKey::D { i: 2, g: 2 },
                IntegralKey::V { i: 0, g: 1 },
                IntegralKey::T { g: 0 },
            ]
        );
    }

    #[test]
    fn tags_round_trip() {
        for p in [Path::ClosedForm, Path::Recursion, Path::BothAgree] {
            assert_eq!(p.to_string().parse::<Path>().unwrap(), p);
        }
        for f in [Family::D, Family::V, Family::T] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
    }
}
