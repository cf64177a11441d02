//! Classical root systems in coordinates.
//!
//! Roots live in `R^n` with basis `ε_1, …, ε_n`. Type `A` uses the ambient
//! `n` (Lie rank `n − 1`) and weights are read modulo the all-ones vector,
//! which never matters here since every coroot of type `A` is orthogonal to
//! it. Roots are kept symbolically:
//!
//! | symbol  | type A/D      | type B        | type C        |
//! |---------|---------------|---------------|---------------|
//! | `(i,j)` | `ε_i − ε_j`   | `ε_i − ε_j`   | `ε_i − ε_j`   |
//! | `(i,j̄)` | `ε_i + ε_j` (D) | `ε_i + ε_j` | `ε_i + ε_j`   |
//! | `(i,ī)` | none          | `ε_i`         | `2ε_i`        |
//!
//! The reflection of `(i,ī)` is the same signed permutation in types `B`
//! and `C`; only coroots (and hence pairings) differ.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::WeylElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    /// Whether the Weyl group acts by signed permutations.
    pub fn is_signed(self) -> bool {
        self != Family::A
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// A classical Cartan type together with its size `n`.
///
/// For type `A` the field `n` is the ambient dimension, so `A_{n−1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LieType {
    family: Family,
    n: usize,
}

impl LieType {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let min = match family {
            Family::A | Family::B | Family::C => 2,
            Family::D => 3,
        };
        if n < min {
            return Err(Error::Rank { family: family.letter(), rank: n });
        }
        Ok(LieType { family, n })
    }

    pub fn a(n: usize) -> Result<Self> {
        Self::new(Family::A, n)
    }
    pub fn b(n: usize) -> Result<Self> {
        Self::new(Family::B, n)
    }
    pub fn c(n: usize) -> Result<Self> {
        Self::new(Family::C, n)
    }
    pub fn d(n: usize) -> Result<Self> {
        Self::new(Family::D, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Size of the window (ambient dimension).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the root system.
    pub fn rank(&self) -> usize {
        match self.family {
            Family::A => self.n - 1,
            _ => self.n,
        }
    }

    /// Largest non-spin column height: the range of `k` for `ω_k`.
    pub fn max_height(&self) -> usize {
        match self.family {
            Family::A | Family::B => self.n - 1,
            Family::C => self.n,
            Family::D => self.n - 2,
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let fact: u128 = (1..=self.n as u128).product();
        match self.family {
            Family::A => fact,
            Family::B | Family::C => fact << self.n,
            Family::D => fact << (self.n - 1),
        }
    }

    pub fn fundamental_weight(&self, k: usize) -> Result<Weight> {
        if k == 0 || k > self.max_height() {
            return Err(Error::Height { lie: *self, height: k, max: self.max_height() });
        }
        let mut coords = vec![0; self.n];
        coords[..k].iter_mut().for_each(|c| *c = 1);
        Ok(Weight::new(coords))
    }

    /// `2ρ`, the sum of the positive roots, in coordinates.
    pub fn two_rho(&self) -> Vec<i64> {
        let mut acc = vec![0; self.n];
        for root in positive_roots(self) {
            for (a, c) in acc.iter_mut().zip(root.coords(self)) {
                *a += c;
            }
        }
        acc
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        let n = self.n;
        let mut out: Vec<Root> = (1..n).map(|i| Root::Diff(i, i + 1)).collect();
        match self.family {
            Family::A => {}
            Family::B | Family::C => out.push(Root::Long(n)),
            Family::D => out.push(Root::Sum(n - 1, n)),
        }
        out
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank())
    }
}

/// A positive root, stored symbolically with 1-based indices `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Root {
    /// `ε_i − ε_j`
    Diff(usize, usize),
    /// `ε_i + ε_j`
    Sum(usize, usize),
    /// `ε_i` in type B, `2ε_i` in type C
    Long(usize),
}

impl Root {
    /// Root written as a pair `(l, m)` of a position and a signed position,
    /// e.g. `(2, -1)` for `(2, 1̄)`.
    pub fn from_pair(l: usize, m: i32) -> Self {
        let a = m.unsigned_abs() as usize;
        if m > 0 {
            Root::Diff(l.min(a), l.max(a))
        } else if a == l {
            Root::Long(l)
        } else {
            Root::Sum(l.min(a), l.max(a))
        }
    }

    /// Canonical `(i, m)` form: `(i, j)`, `(i, −j)` or `(i, −i)`.
    pub fn as_pair(&self) -> (usize, i32) {
        match *self {
            Root::Diff(i, j) => (i, j as i32),
            Root::Sum(i, j) => (i, -(j as i32)),
            Root::Long(i) => (i, -(i as i32)),
        }
    }

    pub fn is_valid(&self, lie: &LieType) -> bool {
        let n = lie.n();
        match *self {
            Root::Diff(i, j) => 1 <= i && i < j && j <= n,
            Root::Sum(i, j) => lie.family() != Family::A && 1 <= i && i < j && j <= n,
            Root::Long(i) => matches!(lie.family(), Family::B | Family::C) && 1 <= i && i <= n,
        }
    }

    pub fn check(&self, lie: &LieType) -> Result<()> {
        if self.is_valid(lie) {
            Ok(())
        } else {
            Err(Error::InvalidRoot(self.to_string(), *lie))
        }
    }

    pub fn coords(&self, lie: &LieType) -> Vec<i64> {
        let mut v = vec![0; lie.n()];
        match *self {
            Root::Diff(i, j) => {
                v[i - 1] = 1;
                v[j - 1] = -1;
            }
            Root::Sum(i, j) => {
                v[i - 1] = 1;
                v[j - 1] = 1;
            }
            Root::Long(i) => v[i - 1] = if lie.family() == Family::C { 2 } else { 1 },
        }
        v
    }

    pub fn coroot_coords(&self, lie: &LieType) -> Vec<i64> {
        match *self {
            Root::Long(i) => {
                let mut v = vec![0; lie.n()];
                v[i - 1] = if lie.family() == Family::B { 2 } else { 1 };
                v
            }
            _ => self.coords(lie),
        }
    }

    /// `⟨ρ, α^∨⟩`, the height of the coroot.
    pub fn rho_pairing(&self, lie: &LieType) -> i64 {
        let twice = dot(&lie.two_rho(), &self.coroot_coords(lie));
        debug_assert!(twice % 2 == 0);
        twice / 2
    }

    /// Whether `w(α)` is a positive root.
    pub fn image_is_positive(&self, w: &WeylElement) -> bool {
        // `w` sends ε_k to sign(w(k)) ε_|w(k)|; a sum of two such terms with
        // distinct supports is positive iff the term of smaller index is.
        let leading = |a: i32, b: i32| if a.abs() < b.abs() { a > 0 } else { b > 0 };
        match *self {
            Root::Diff(i, j) => leading(w.at(i as i32), -w.at(j as i32)),
            Root::Sum(i, j) => leading(w.at(i as i32), w.at(j as i32)),
            Root::Long(i) => w.at(i as i32) > 0,
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Root::Diff(i, j) => write!(f, "({i},{j})"),
            Root::Sum(i, j) => write!(f, "({i},{j}b)"),
            Root::Long(i) => write!(f, "({i},{i}b)"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RootRepr {
    kind: String,
    i: usize,
    j: usize,
}

impl Serialize for Root {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (kind, i, j) = match *self {
            Root::Diff(i, j) => ("diff", i, j),
            Root::Sum(i, j) => ("sum", i, j),
            Root::Long(i) => ("long", i, i),
        };
        RootRepr { kind: kind.into(), i, j }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Root {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = RootRepr::deserialize(d)?;
        match r.kind.as_str() {
            "diff" if r.i < r.j => Ok(Root::Diff(r.i, r.j)),
            "sum" if r.i < r.j => Ok(Root::Sum(r.i, r.j)),
            "long" => Ok(Root::Long(r.i)),
            _ => Err(D::Error::custom(format!("bad root {{kind: {}, i: {}, j: {}}}", r.kind, r.i, r.j))),
        }
    }
}

/// All positive roots in a fixed order: differences, then sums, then long
/// roots, each lexicographic in `(i, j)`.
pub fn positive_roots(lie: &LieType) -> Vec<Root> {
    let n = lie.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(Root::Diff(i, j));
        }
    }
    if lie.family() != Family::A {
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(Root::Sum(i, j));
            }
        }
    }
    if matches!(lie.family(), Family::B | Family::C) {
        out.extend((1..=n).map(Root::Long));
    }
    out
}

/// The reflection `s_α` as a signed permutation.
pub fn reflection(lie: &LieType, root: &Root) -> Result<WeylElement> {
    root.check(lie)?;
    let (l, m) = root.as_pair();
    Ok(WeylElement::identity(lie).times_pair(l, m))
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// An integral weight in `ε`-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(lie: &LieType) -> Self {
        Weight(vec![0; lie.n()])
    }

    /// Pads a partition with zeros to length `n`.
    pub fn from_partition(lie: &LieType, parts: &[usize]) -> Result<Self> {
        let as_i64: Vec<i64> = parts.iter().map(|&p| p as i64).collect();
        if parts.len() > lie.n() || !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotDominant(as_i64));
        }
        let mut coords = as_i64;
        coords.resize(lie.n(), 0);
        Ok(Weight(coords))
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Column heights `λ'_1 ≥ λ'_2 ≥ …` of the Young diagram.
    pub fn conjugate(&self) -> Vec<usize> {
        let first = self.0.first().copied().unwrap_or(0).max(0) as usize;
        (1..=first as i64)
            .map(|c| self.0.iter().filter(|&&p| p >= c).count())
            .collect()
    }

    /// Builds `ω_{h_1} + ω_{h_2} + …` from column heights.
    pub fn from_columns(lie: &LieType, heights: &[usize]) -> Result<Self> {
        let mut coords = vec![0; lie.n()];
        for &h in heights {
            let w = lie.fundamental_weight(h)?;
            for (c, x) in coords.iter_mut().zip(w.coords()) {
                *c += x;
            }
        }
        Ok(Weight(coords))
    }

    pub fn pairing(&self, lie: &LieType, root: &Root) -> i64 {
        dot(&self.0, &root.coroot_coords(lie))
    }
}

/// `⟨λ, α^∨⟩`.
pub fn pairing(lie: &LieType, weight: &Weight, root: &Root) -> i64 {
    weight.pairing(lie, root)
}
