//! `ω_k`-chains and `λ`-chains, and an exact alcove-walk validator.
//!
//! Chain entries keep the written orientation `(l, m)` of each root (for
//! instance `(2, 1̄)` rather than the canonical `(1, 2̄)`), since the greedy
//! inverse reads `l` as the row being changed.
//!
//! Type `A` chains have one segment per column. In types `B`, `C`, `D` each
//! column contributes a left segment `Γ^l(k) = Γ^{kk} … Γ^{k1}` with stages
//! `I–IV` and a right segment `Γ^r(k)`:
//!
//! ```text
//! Γ^{ki} = (i,k+1) … (i,n)  ;  (i,ī)  ;  (i,n̄) … (i,k+1̄)  ;  (i,i−1̄) … (i,1̄)
//! Γ^i    = (i,i−1̄) … (i,1̄)
//! ```
//!
//! Type `D` drops stage `II`. Type `B` keeps the type `C` left segment, and
//! its right segment is `Γ^k … Γ^1` with `(i,ī)` put in front of each `Γ^i`,
//! because `⟨ω_k, ε_i^∨⟩ = 2` forces every `ε_i` (`i ≤ k`) to occur twice.
//! For `k ≤ 2` this is the only ordering of the right segment that the
//! validator accepts.

use std::fmt;
use std::ops::Range;

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::alphabet::{letter_from_text, letter_to_text};
use crate::error::{Error, Result};
use crate::roots::{positive_roots, Family, LieType, Root, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Stage {
    I,
    II,
    III,
    IV,
}

/// One root of a chain, written as `(l, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChainEntry {
    pub l: usize,
    pub m: i32,
    /// Stage inside `Γ^{ki}`; `None` in type `A` and in right segments.
    pub stage: Option<Stage>,
}

impl ChainEntry {
    pub fn root(&self) -> Root {
        Root::from_pair(self.l, self.m)
    }
}

impl fmt::Display for ChainEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.l, letter_to_text(self.m))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// The single segment of a type `A` column.
    Full,
    Left,
    Right,
}

/// A contiguous block of the chain producing one column of the filling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    /// Index of the Young diagram column (0-based).
    pub column: usize,
    pub side: Side,
    /// Column height `λ'_i`.
    pub height: usize,
    /// Entry range (0-based, half-open).
    pub range: Range<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaChain {
    pub lie: LieType,
    pub lambda: Weight,
    /// Column heights `λ'_1 ≥ λ'_2 ≥ …`.
    pub heights: Vec<usize>,
    pub entries: Vec<ChainEntry>,
    pub segments: Vec<Segment>,
}

impl LambdaChain {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn roots(&self) -> Vec<Root> {
        self.entries.iter().map(ChainEntry::root).collect()
    }

    /// Segment index of each entry.
    pub fn segment_of(&self, pos: usize) -> usize {
        self.segments.iter().position(|s| s.range.contains(&pos)).expect("position inside the chain")
    }

    /// Text form: segments joined by `|`, stage changes inside left segments
    /// marked by `;`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (si, seg) in self.segments.iter().enumerate() {
            if si > 0 {
                out.push('|');
            }
            let mut prev: Option<Stage> = None;
            for (k, e) in self.entries[seg.range.clone()].iter().enumerate() {
                if k > 0 {
                    out.push(if seg.side == Side::Left && e.stage != prev { ';' } else { ',' });
                }
                out.push_str(&e.to_string());
                prev = e.stage;
            }
        }
        out
    }
}

impl fmt::Display for LambdaChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Parses the text form back into segments of `(l, m)` pairs.
pub fn parse_chain_text(text: &str) -> Result<Vec<Vec<(usize, i32)>>> {
    let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split('|')
        .map(|seg| {
            let mut out = Vec::new();
            let mut rest = seg;
            while !rest.is_empty() {
                rest = rest.trim_start_matches([',', ';']);
                if rest.is_empty() {
                    break;
                }
                let inner = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("expected '(' in {rest:?}")))?;
                let close = inner.find(')').ok_or_else(|| Error::Parse("unclosed root".into()))?;
                let (a, b) = inner[..close].split_once(',').ok_or_else(|| Error::Parse("root needs two indices".into()))?;
                let l: usize = a.parse().map_err(|_| Error::Parse(format!("bad index {a:?}")))?;
                out.push((l, letter_from_text(b)?));
                rest = &inner[close + 1..];
            }
            Ok(out)
        })
        .collect()
}

fn check_height(lie: &LieType, k: usize) -> Result<()> {
    if k == 0 || k > lie.max_height() {
        Err(Error::Height { lie: *lie, height: k, max: lie.max_height() })
    } else {
        Ok(())
    }
}

/// Left and right parts of the `ω_k`-chain as entry lists. Type `A` returns
/// everything in the left part.
fn omega_parts(lie: &LieType, k: usize) -> Result<(Vec<ChainEntry>, Vec<ChainEntry>)> {
    check_height(lie, k)?;
    let n = lie.n();
    let e = |l: usize, m: i32, stage: Option<Stage>| ChainEntry { l, m, stage };
    let mut left = Vec::new();
    let mut right = Vec::new();
    if lie.family() == Family::A {
        for i in (1..=k).rev() {
            left.extend((k + 1..=n).map(|j| e(i, j as i32, None)));
        }
        return Ok((left, right));
    }
    for i in (1..=k).rev() {
        left.extend((k + 1..=n).map(|j| e(i, j as i32, Some(Stage::I))));
        if lie.family() != Family::D {
            left.push(e(i, -(i as i32), Some(Stage::II)));
        }
        left.extend((k + 1..=n).rev().map(|j| e(i, -(j as i32), Some(Stage::III))));
        left.extend((1..i).rev().map(|j| e(i, -(j as i32), Some(Stage::IV))));
    }
    let last = if lie.family() == Family::B { 1 } else { 2 };
    for i in (last..=k).rev() {
        if lie.family() == Family::B {
            right.push(e(i, -(i as i32), None));
        }
        right.extend((1..i).rev().map(|j| e(i, -(j as i32), None)));
    }
    Ok((left, right))
}

/// The `ω_k`-chain.
pub fn omega_chain(lie: &LieType, k: usize) -> Result<LambdaChain> {
    lambda_chain_from_heights(lie, &[k])
}

/// The `λ`-chain obtained by concatenating `ω_{λ'_i}`-chains column by column.
pub fn lambda_chain(lie: &LieType, lambda: &Weight) -> Result<LambdaChain> {
    if !lambda.is_dominant() || lambda.coords().len() != lie.n() {
        return Err(Error::NotDominant(lambda.coords().to_vec()));
    }
    lambda_chain_from_heights(lie, &lambda.conjugate())
}

pub fn lambda_chain_from_heights(lie: &LieType, heights: &[usize]) -> Result<LambdaChain> {
    if !heights.windows(2).all(|w| w[0] >= w[1]) {
        return Err(Error::NotDominant(heights.iter().map(|&h| h as i64).collect()));
    }
    let lambda = Weight::from_columns(lie, heights)?;
    let mut entries = Vec::new();
    let mut segments = Vec::new();
    for (column, &k) in heights.iter().enumerate() {
        let (left, right) = omega_parts(lie, k)?;
        let mut push = |part: Vec<ChainEntry>, side: Side| {
            let start = entries.len();
            entries.extend(part);
            segments.push(Segment { column, side, height: k, range: start..entries.len() });
        };
        if lie.family() == Family::A {
            push(left, Side::Full);
        } else {
            push(left, Side::Left);
            push(right, Side::Right);
        }
    }
    Ok(LambdaChain { lie: *lie, lambda, heights: heights.to_vec(), entries, segments })
}

/// Why a candidate sequence is not a `λ`-chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChainDefect {
    /// `m ≠ Σ ⟨λ, α^∨⟩`.
    Length { expected: usize, got: usize },
    /// Step `step` (1-based) does not cross exactly the wall `H_{β,−l}` of
    /// the current alcove; `crossed` lists every hyperplane met instead.
    NotAWall { step: usize, root: Root, level: i64, crossed: Vec<(Root, i64)> },
    /// The walk ends outside `A∘ − λ`.
    WrongEnd,
}

impl fmt::Display for ChainDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainDefect::Length { expected, got } => write!(f, "chain has {got} roots, expected {expected}"),
            ChainDefect::NotAWall { step, root, level, crossed } => {
                write!(f, "step {step}: H_{{{root},{level}}} is not a wall; segment crosses")?;
                for (r, k) in crossed {
                    write!(f, " H_{{{r},{k}}}")?;
                }
                Ok(())
            }
            ChainDefect::WrongEnd => write!(f, "walk does not end in A - lambda"),
        }
    }
}

fn pair(c: &[Rational64], v: &[i64]) -> Rational64 {
    c.iter().zip(v).fold(Rational64::zero(), |acc, (x, &y)| acc + *x * y)
}

/// Runs the alcove walk of `roots` from a generic interior point of `A∘`
/// in exact arithmetic. `Ok(Ok(()))` means `roots` is a `λ`-chain.
pub fn validate_chain(lie: &LieType, lambda: &Weight, roots: &[Root]) -> Result<std::result::Result<(), ChainDefect>> {
    for r in roots {
        r.check(lie)?;
    }
    let positive = positive_roots(lie);
    let coroots: Vec<Vec<i64>> = positive.iter().map(|r| r.coroot_coords(lie)).collect();
    let expected: i64 = positive.iter().map(|r| lambda.pairing(lie, r)).sum();
    if expected < 0 || roots.len() != expected as usize {
        return Ok(Err(ChainDefect::Length { expected: expected.max(0) as usize, got: roots.len() }));
    }
    let n = lie.n() as i64;
    let denom = 4 * n + 1;
    let mut c: Vec<Rational64> = (0..n).map(|i| Rational64::new(n - i, denom)).collect();
    let mut seen: std::collections::HashMap<Root, i64> = Default::default();
    for (step, beta) in roots.iter().enumerate() {
        let count = seen.entry(*beta).or_insert(0);
        let level = -*count;
        *count += 1;
        let shift = pair(&c, &beta.coroot_coords(lie)) - level;
        let next: Vec<Rational64> = c.iter().zip(beta.coords(lie)).map(|(x, b)| *x - shift * b).collect();
        let mut crossed = Vec::new();
        for (alpha, cv) in positive.iter().zip(&coroots) {
            let (x, y) = (pair(&c, cv), pair(&next, cv));
            let (lo, hi) = if x < y { (x, y) } else { (y, x) };
            let (lo, hi) = (lo.floor().to_i64().unwrap(), hi.floor().to_i64().unwrap());
            crossed.extend((lo + 1..=hi).map(|k| (*alpha, k)));
        }
        if crossed != [(*beta, level)] {
            return Ok(Err(ChainDefect::NotAWall { step: step + 1, root: *beta, level, crossed }));
        }
        c = next;
    }
    let shifted: Vec<Rational64> = c.iter().zip(lambda.coords()).map(|(x, &l)| *x + l).collect();
    let inside = coroots.iter().all(|cv| {
        let v = pair(&shifted, cv);
        v > Rational64::zero() && v < Rational64::from_integer(1)
    });
    Ok(if inside { Ok(()) } else { Err(ChainDefect::WrongEnd) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(chain: &LambdaChain) -> Vec<(usize, i32)> {
        chain.entries.iter().map(|e| (e.l, e.m)).collect()
    }

    #[test]
    fn type_a_omega_chains() {
        let a = LieType::a(3).unwrap();
        assert_eq!(pairs(&omega_chain(&a, 2).unwrap()), vec![(2, 3), (1, 3)]);
        assert_eq!(pairs(&omega_chain(&a, 1).unwrap()), vec![(1, 2), (1, 3)]);
        assert!(omega_chain(&a, 3).is_err());
        assert!(omega_chain(&a, 0).is_err());
    }

    #[test]
    fn type_a_lambda_chains() {
        let a = LieType::a(3).unwrap();
        let chain = lambda_chain(&a, &Weight::from_partition(&a, &[3, 2]).unwrap()).unwrap();
        assert_eq!(chain.to_text(), "(2,3),(1,3)|(2,3),(1,3)|(1,2),(1,3)");
        let a3 = LieType::a(4).unwrap();
        let chain = lambda_chain(&a3, &Weight::from_partition(&a3, &[3, 2, 1]).unwrap()).unwrap();
        assert_eq!(chain.to_text(), "(3,4),(2,4),(1,4)|(2,3),(2,4),(1,3),(1,4)|(1,2),(1,3),(1,4)");
        assert!(lambda_chain(&a, &Weight::zero(&a)).unwrap().is_empty());
    }

    #[test]
    fn b3_left_segment() {
        let b = LieType::b(3).unwrap();
        let chain = omega_chain(&b, 2).unwrap();
        let left: Vec<_> = chain.entries[chain.segments[0].range.clone()].iter().map(|e| (e.l, e.m)).collect();
        assert_eq!(left, vec![(2, 3), (2, -2), (2, -3), (2, -1), (1, 3), (1, -1), (1, -3)]);
        assert_eq!(chain.segments[0].side, Side::Left);
    }

    #[test]
    fn type_c_chain_text() {
        let c = LieType::c(3).unwrap();
        let chain = omega_chain(&c, 2).unwrap();
        assert_eq!(chain.to_text(), "(2,3);(2,2b);(2,3b);(2,1b);(1,3);(1,1b);(1,3b)|(2,1b)");
        let parsed = parse_chain_text(&chain.to_text()).unwrap();
        assert_eq!(parsed.concat(), pairs(&chain));
        assert_eq!(parsed.len(), 2);
    }

    #[test]
    fn validator_examples() {
        let a = LieType::a(3).unwrap();
        let w2 = a.fundamental_weight(2).unwrap();
        let w1 = a.fundamental_weight(1).unwrap();
        assert_eq!(validate_chain(&a, &w2, &[Root::Diff(2, 3), Root::Diff(1, 3)]).unwrap(), Ok(()));
        assert!(validate_chain(&a, &w1, &[Root::Diff(1, 3), Root::Diff(1, 2)]).unwrap().is_err());
        assert_eq!(validate_chain(&a, &Weight::zero(&a), &[]).unwrap(), Ok(()));
        assert!(matches!(
            validate_chain(&a, &w1, &[Root::Diff(1, 2)]).unwrap(),
            Err(ChainDefect::Length { expected: 2, got: 1 })
        ));
        assert!(validate_chain(&a, &w1, &[Root::Sum(1, 2), Root::Diff(1, 2)]).is_err());
    }

    #[test]
    fn constructed_chains_validate_and_obey_multiplicities() {
        for lie in [
            LieType::a(2).unwrap(),
            LieType::a(3).unwrap(),
            LieType::a(4).unwrap(),
            LieType::b(2).unwrap(),
            LieType::b(3).unwrap(),
            LieType::b(4).unwrap(),
            LieType::c(2).unwrap(),
            LieType::c(3).unwrap(),
            LieType::c(4).unwrap(),
            LieType::d(3).unwrap(),
            LieType::d(4).unwrap(),
            LieType::d(5).unwrap(),
        ] {
            for k in 1..=lie.max_height() {
                let chain = omega_chain(&lie, k).unwrap();
                let lambda = lie.fundamental_weight(k).unwrap();
                for root in positive_roots(&lie) {
                    let count = chain.roots().iter().filter(|&&r| r == root).count() as i64;
                    assert_eq!(count, lambda.pairing(&lie, &root), "{lie} k={k} {root}");
                }
                assert_eq!(validate_chain(&lie, &lambda, &chain.roots()).unwrap(), Ok(()), "{lie} k={k}");
            }
        }
    }
}
