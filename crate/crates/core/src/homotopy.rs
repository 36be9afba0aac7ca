//! Homotopy groups of the classical groups and their classifying spaces, in
//! the ranges where they are known here. Queries outside those ranges return
//! [`TableGroup::OutOfRange`] instead of a guess.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::linalg::{smith_normal_form, IntMatrix};

/// Finitely generated abelian group `ℤ/k₁ × ℤ/k₂ × …` on an ordered list of
/// generators; order `0` stands for a copy of `ℤ`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FgAbGroup {
    factors: Vec<BigUint>,
}

impl FgAbGroup {
    /// Drops trivial (order one) factors, keeps the order of the rest.
    pub fn new(factors: Vec<BigUint>) -> Self {
        FgAbGroup {
            factors: factors.into_iter().filter(|k| !k.is_one()).collect(),
        }
    }

    pub fn from_orders(orders: &[u64]) -> Self {
        Self::new(orders.iter().map(|&k| BigUint::from(k)).collect())
    }

    pub fn trivial() -> Self {
        FgAbGroup::default()
    }

    pub fn integers() -> Self {
        Self::from_orders(&[0])
    }

    pub fn cyclic(k: u64) -> Self {
        Self::from_orders(&[k])
    }

    /// Direct product, generators concatenated in order.
    pub fn product(groups: &[&FgAbGroup]) -> Self {
        FgAbGroup {
            factors: groups.iter().flat_map(|g| g.factors.iter().cloned()).collect(),
        }
    }

    pub fn factors(&self) -> &[BigUint] {
        &self.factors
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn free_rank(&self) -> usize {
        self.factors.iter().filter(|k| k.is_zero()).count()
    }

    pub fn is_torsion(&self) -> bool {
        self.free_rank() == 0
    }

    /// Invariant-factor form: torsion orders `d₁ | d₂ | …` followed by the
    /// free part.
    pub fn canonical(&self) -> FgAbGroup {
        let diag = IntMatrix::diagonal(
            &self
                .factors
                .iter()
                .map(|k| BigInt::from(k.clone()))
                .collect::<Vec<_>>(),
        );
        let snf = smith_normal_form(&diag);
        let mut torsion = Vec::new();
        let mut free = 0;
        for d in snf.invariant_factors() {
            if d.is_zero() {
                free += 1;
            } else if !d.is_one() {
                torsion.push(d.to_biguint().expect("nonnegative"));
            }
        }
        torsion.extend(std::iter::repeat_n(BigUint::zero(), free));
        FgAbGroup { factors: torsion }
    }

    pub fn is_isomorphic(&self, other: &FgAbGroup) -> bool {
        self.canonical() == other.canonical()
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|k| {
                if k.is_zero() {
                    "Z".to_string()
                } else {
                    format!("Z/{k}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" x "))
    }
}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FgAbGroup({self})")
    }
}

/// Orders serialize as JSON numbers; an order beyond `u128` falls back to a
/// decimal string.
impl Serialize for FgAbGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.factors.len()))?;
        for k in &self.factors {
            match k.to_u128() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&k.to_string())?,
            }
        }
        seq.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableGroup {
    Group(FgAbGroup),
    /// Known to be a torsion group, not pinned down further.
    TorsionOnly,
    OutOfRange,
}

impl TableGroup {
    pub fn group(&self) -> Option<&FgAbGroup> {
        match self {
            TableGroup::Group(g) => Some(g),
            _ => None,
        }
    }
}

impl Serialize for TableGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            TableGroup::Group(g) => g.serialize(serializer),
            TableGroup::TorsionOnly => serializer.serialize_str("torsion-only"),
            TableGroup::OutOfRange => serializer.serialize_str("out-of-range"),
        }
    }
}

impl fmt::Display for TableGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableGroup::Group(g) => write!(f, "{g}"),
            TableGroup::TorsionOnly => write!(f, "torsion-only"),
            TableGroup::OutOfRange => write!(f, "out-of-range"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableAnswer {
    pub group: TableGroup,
    pub provenance: String,
}

impl TableAnswer {
    fn group(g: FgAbGroup, provenance: impl Into<String>) -> Self {
        TableAnswer {
            group: TableGroup::Group(g),
            provenance: provenance.into(),
        }
    }

    fn out_of_range(provenance: impl Into<String>) -> Self {
        TableAnswer {
            group: TableGroup::OutOfRange,
            provenance: provenance.into(),
        }
    }

    pub fn as_group(&self) -> Option<&FgAbGroup> {
        self.group.group()
    }

    fn with_prefix(mut self, prefix: &str) -> Self {
        self.provenance = format!("{prefix}; {}", self.provenance);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Sp,
    PSp,
    O,
    SO,
    U,
    GL,
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "sp" => Ok(Family::Sp),
            "psp" => Ok(Family::PSp),
            "o" => Ok(Family::O),
            "so" => Ok(Family::SO),
            "u" => Ok(Family::U),
            "gl" => Ok(Family::GL),
            other => Err(format!("unknown family `{other}`")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Sp => "Sp",
            Family::PSp => "PSp",
            Family::O => "O",
            Family::SO => "SO",
            Family::U => "U",
            Family::GL => "GL",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    Group,
    Classifying,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupQuery {
    pub family: Family,
    pub n: u64,
    pub i: u64,
    pub space: Space,
}

impl GroupQuery {
    pub fn answer(&self) -> TableAnswer {
        match self.space {
            Space::Group => pi(self.family, self.i, self.n),
            Space::Classifying => pi_classifying(self.family, self.i, self.n),
        }
    }
}

fn factorial(k: u64) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, j| acc * j)
}

/// πᵢ Sp(n, ℂ).
pub fn pi_sp(i: u64, n: u64) -> TableAnswer {
    if i < 4 * n {
        let g = match i % 8 {
            0 | 1 | 2 | 6 => FgAbGroup::trivial(),
            4 | 5 => FgAbGroup::cyclic(2),
            _ => FgAbGroup::integers(),
        };
        TableAnswer::group(g, "Bott periodicity, stable range i < 4n")
    } else if i == 4 * n || i == 4 * n + 1 {
        let g = if n % 2 == 1 {
            FgAbGroup::cyclic(2)
        } else {
            FgAbGroup::trivial()
        };
        TableAnswer::group(g, "boundary of the stable range, i in {4n, 4n+1}: Z/2 for n odd, 0 for n even")
    } else if i == 4 * n + 2 {
        let mut order = factorial(2 * n + 1);
        if n % 2 == 1 {
            order *= 2u32;
        }
        TableAnswer::group(
            FgAbGroup::new(vec![order]),
            "first unstable group, i = 4n+2: Z/(2n+1)! for n even, Z/((2n+1)!*2) for n odd",
        )
    } else {
        TableAnswer::out_of_range("Sp(n) is tabulated for i <= 4n+2")
    }
}

/// πᵢ PSp(n, ℂ).
pub fn pi_psp(i: u64, n: u64) -> TableAnswer {
    match i {
        0 => TableAnswer::group(FgAbGroup::trivial(), "PSp(n) is connected"),
        1 => TableAnswer::group(
            FgAbGroup::cyclic(2),
            "Sp(n) -> PSp(n) is a universal cover with fiber Z/2",
        ),
        _ => pi_sp(i, n).with_prefix("pi_i PSp(n) = pi_i Sp(n) for i >= 2"),
    }
}

const SO_UNSTABLE_TORSION: [(u64, u64); 3] = [(7, 3), (11, 5), (15, 7)];

fn pi_orthogonal(i: u64, n: u64, full: bool) -> TableAnswer {
    if i == 0 {
        return if full {
            TableAnswer::group(FgAbGroup::cyclic(2), "O(n) has two components")
        } else {
            TableAnswer::group(FgAbGroup::trivial(), "SO(n) is connected")
        };
    }
    if i + 1 < n {
        let g = match i % 8 {
            0 | 1 => FgAbGroup::cyclic(2),
            3 | 7 => FgAbGroup::integers(),
            _ => FgAbGroup::trivial(),
        };
        return TableAnswer::group(g, "Bott periodicity, stable range 0 < i < n-1");
    }
    if SO_UNSTABLE_TORSION.contains(&(i, n)) {
        return TableAnswer {
            group: TableGroup::TorsionOnly,
            provenance: "unstable: pi_i SO(n) is torsion for (i, n) in {(7,3), (11,5), (15,7)}"
                .into(),
        };
    }
    TableAnswer::out_of_range("SO(n) is tabulated for 0 < i < n-1")
}

/// πᵢ SO(n, ℂ).
pub fn pi_so(i: u64, n: u64) -> TableAnswer {
    pi_orthogonal(i, n, false)
}

/// πᵢ O(n, ℂ).
pub fn pi_o(i: u64, n: u64) -> TableAnswer {
    pi_orthogonal(i, n, true)
}

/// πᵢ U(n) = πᵢ GL(n, ℂ) for `i < 2n`.
pub fn pi_u_gl(i: u64, n: u64) -> TableAnswer {
    if i >= 2 * n {
        return TableAnswer::out_of_range("U(n) and GL(n) are tabulated for i < 2n");
    }
    let g = if i % 2 == 1 {
        FgAbGroup::integers()
    } else {
        FgAbGroup::trivial()
    };
    TableAnswer::group(g, "Bott periodicity, stable range i < 2n")
}

/// πᵢ of the group itself.
pub fn pi(family: Family, i: u64, n: u64) -> TableAnswer {
    match family {
        Family::Sp => pi_sp(i, n),
        Family::PSp => pi_psp(i, n),
        Family::O => pi_o(i, n),
        Family::SO => pi_so(i, n),
        Family::U | Family::GL => pi_u_gl(i, n),
    }
}

/// πᵢ of the classifying space, `πᵢ BG = π_{i−1} G`.
///
/// The one value not read off the group tables is `π_{4n+4} BPSp(n) ≅ ℤ/2`
/// (and the same for BSp(n)), which is used as an input by the no-section
/// obstruction and is flagged as asserted in its provenance.
pub fn pi_classifying(family: Family, i: u64, n: u64) -> TableAnswer {
    if i == 0 {
        return TableAnswer::group(FgAbGroup::trivial(), "classifying spaces are connected");
    }
    if matches!(family, Family::Sp | Family::PSp) && i == 4 * n + 4 {
        return TableAnswer::group(
            FgAbGroup::cyclic(2),
            "asserted: pi_{4n+4} BPSp(n) = Z/2 (input to the no-section obstruction, not derived from the tables)",
        );
    }
    pi(family, i - 1, n).with_prefix("pi_i BG = pi_(i-1) G")
}
