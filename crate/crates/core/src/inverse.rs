//! The inverse of `sfill`: reordering, greedy path recovery and the
//! blocked-off variants used in types `B` and `D`.
//!
//! The pipelines are
//!
//! ```text
//! A:  greedy ∘ ord
//! C:  greedy ∘ ord ∘ split
//! B:  mod_greedy ∘ mod_ord ∘ extend ∘ split_B
//! D:  mod_greedy_D ∘ mod_ord_D ∘ extend ∘ split_D
//! ```
//!
//! The greedy scan carries the full window `A` across segments, starting from
//! the identity. At the end of segment `i` the top `λ'_i` entries of `A` must
//! equal the target column, otherwise the input is not in the image.

use serde::{Deserialize, Serialize};

use crate::alcove::{is_admissible, AdmissibleSubset, Filling};
use crate::alphabet::{Circle, Letter};
use crate::chains::{ChainEntry, LambdaChain};
use crate::error::{Error, Result};
use crate::qbg::{edge_kind, EdgeKind};
use crate::roots::{Family, LieType, Root};
use crate::tableaux::TableauElement;
use crate::weyl::WeylElement;

/// Which blocked-off predicate the modified algorithms use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockFlavor {
    B,
    D,
}

impl BlockFlavor {
    pub fn for_type(lie: &LieType) -> Option<Self> {
        match lie.family() {
            Family::B => Some(BlockFlavor::B),
            Family::D => Some(BlockFlavor::D),
            _ => None,
        }
    }

    pub fn blocked(self, left: &[Letter], right: &[Letter], i: usize, b: Letter, n: usize) -> bool {
        match self {
            BlockFlavor::B => blocked_off(left, right, i, b, n),
            BlockFlavor::D => blocked_off_d(left, right, i, b, n),
        }
    }
}

fn odd_count(left: &[Letter], right: &[Letter], i: usize, pick: impl Fn(Letter, Letter) -> bool) -> bool {
    left[..i].iter().zip(&right[..i]).filter(|(&l, &r)| pick(l, r)).count() % 2 == 1
}

fn covers(col: &[Letter], i: usize, range: std::ops::RangeInclusive<Letter>) -> bool {
    range.into_iter().all(|x| col[..i].iter().any(|y| y.abs() == x))
}

/// Columns `left = (l_1, …)` and `right = (r_1, …)` are blocked off at row `i`
/// (1-based) by `b` when `|l_i| ≤ b < n` with `|l_i| = b` only for
/// `l_i = b̄`, both columns contain `1, …, b` up to sign in rows `1..=i`, and
/// an odd number of rows `j ≤ i` have `l_j < 0 < r_j`.
pub fn blocked_off(left: &[Letter], right: &[Letter], i: usize, b: Letter, n: usize) -> bool {
    if i == 0 || i > left.len() || i > right.len() {
        return false;
    }
    let li = left[i - 1];
    let cond1 = b > 0 && (b as usize) < n && li.abs() <= b && (li.abs() != b || li == -b);
    cond1
        && covers(left, i, 1..=b)
        && covers(right, i, 1..=b)
        && odd_count(left, right, i, |l, r| l < 0 && r > 0)
}

/// The type `D` predicate: [`blocked_off`], or the mirrored pattern with a
/// negative blocking letter: `−|l_i| ≤ b < 0` with equality only for
/// `l_i = b̄`, both columns contain `|b|, …, n` up to sign in rows `1..=i`,
/// and an odd number of rows `j ≤ i` have `l_j > 0 > r_j`.
pub fn blocked_off_d(left: &[Letter], right: &[Letter], i: usize, b: Letter, n: usize) -> bool {
    if blocked_off(left, right, i, b, n) {
        return true;
    }
    if i == 0 || i > left.len() || i > right.len() {
        return false;
    }
    let li = left[i - 1];
    let cond1 = b < 0 && -li.abs() <= b && (li.abs() != -b || li == -b);
    cond1
        && covers(left, i, -b..=n as Letter)
        && covers(right, i, -b..=n as Letter)
        && odd_count(left, right, i, |l, r| l > 0 && r < 0)
}

fn check_same_entries(index: usize, expected: &[Letter], got: &[Letter]) -> Result<()> {
    let mut a = expected.to_vec();
    let mut b = got.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    if a == b {
        Ok(())
    } else {
        Err(Error::ColumnMismatch { index, expected: expected.to_vec(), got: got.to_vec() })
    }
}

fn reorder(lie: &LieType, b: &Filling, flavor: Option<BlockFlavor>) -> Result<Filling> {
    let circle = Circle::new(lie);
    let n = lie.n();
    let mut out: Vec<Vec<Letter>> = Vec::with_capacity(b.columns.len());
    for (i, col) in b.columns.iter().enumerate() {
        if i == 0 {
            out.push(col.clone());
            continue;
        }
        let prev = &out[i - 1];
        if col.len() > prev.len() {
            return Err(Error::Shape(format!("column {} is taller than column {}", i + 1, i)));
        }
        let mut rest = col.clone();
        let mut cur: Vec<Letter> = Vec::with_capacity(col.len());
        for j in 0..col.len() {
            let a = prev[j];
            rest.sort_by_key(|&x| circle.dist(a, x));
            let last = j + 1 == col.len();
            let pick = rest.iter().position(|&x| {
                last || flavor.is_none_or(|f| {
                    cur.push(x);
                    let blocked = f.blocked(prev, &cur, j + 1, x, n);
                    cur.pop();
                    !blocked
                })
            });
            let k = pick.ok_or(Error::NoFeasibleLetter { column: i + 1, row: j + 1 })?;
            cur.push(rest.remove(k));
        }
        check_same_entries(i + 1, col, &cur)?;
        out.push(cur);
    }
    Ok(Filling::new(out))
}

/// Row-by-row reordering: `C_1 = b_1` and `C_i(j)` is the `≺_{C_{i−1}(j)}`
/// minimum of the entries of `b_i` not used in rows above.
pub fn ord(lie: &LieType, b: &Filling) -> Result<Filling> {
    reorder(lie, b, None)
}

/// [`ord`] where every row but the last skips letters that would make
/// `C_{i−1}, C_i` blocked off at that row.
pub fn mod_ord(lie: &LieType, b: &Filling) -> Result<Filling> {
    let flavor = BlockFlavor::for_type(lie).ok_or(Error::WrongFamily { expected: "B or D", got: *lie })?;
    reorder(lie, b, Some(flavor))
}

/// A subsequence of a chain, as positions and as roots per segment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FoldingSequence {
    /// 1-based chain positions.
    pub positions: Vec<usize>,
    /// `(l, m)` pairs grouped by segment.
    pub segments: Vec<Vec<(usize, i32)>>,
}

impl FoldingSequence {
    pub fn roots(&self) -> Vec<Root> {
        self.segments.iter().flatten().map(|&(l, m)| Root::from_pair(l, m)).collect()
    }
}

/// One fold taken by the greedy scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub segment: usize,
    pub root: Root,
    pub pair: (usize, i32),
    /// `None` when the step is not an edge of the quantum Bruhat graph.
    pub kind: Option<EdgeKind>,
    pub forced: bool,
    pub before: Vec<Letter>,
    pub after: Vec<Letter>,
}

/// The outcome of scanning one chain segment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentRun {
    /// Offsets (0-based, inside the segment) of the folded entries.
    pub offsets: Vec<usize>,
    pub pairs: Vec<(usize, i32)>,
    pub trace: Vec<TraceStep>,
    pub end: WeylElement,
    /// Whether the first `target.len()` entries of `end` equal `target`.
    pub reached: bool,
}

/// Runs the greedy rule (or its blocked-off version when `flavor` is set)
/// over `entries` from the window `start` towards `target`. Entries whose
/// row lies below the target are skipped.
pub fn scan_segment(
    entries: &[ChainEntry],
    segment: usize,
    start: &WeylElement,
    target: &[Letter],
    flavor: Option<BlockFlavor>,
) -> SegmentRun {
    let lie = start.lie();
    let n = lie.n();
    let circle = Circle::new(lie);
    let mut a = start.clone();
    let (mut offsets, mut pairs, mut trace) = (Vec::new(), Vec::new(), Vec::new());
    for (off, e) in entries.iter().enumerate() {
        let (l, m) = (e.l, e.m);
        if l > target.len() {
            continue;
        }
        let goal = target[l - 1];
        let next = a.times_pair(l, m);
        let forced = flavor.is_some_and(|f| m == l as i32 + 1 && f.blocked(a.window(), target, l, goal, n));
        let take = forced
            || (a.at(l as i32) != goal
                && circle.between_incl(a.at(l as i32), a.at(m), goal)
                && flavor.is_none_or(|f| !f.blocked(next.window(), target, l, goal, n) && edge_kind(&a, &e.root()).is_some()));
        if take {
            trace.push(TraceStep {
                segment,
                root: e.root(),
                pair: (l, m),
                kind: edge_kind(&a, &e.root()),
                forced,
                before: a.window().to_vec(),
                after: next.window().to_vec(),
            });
            offsets.push(off);
            pairs.push((l, m));
            a = next;
        }
    }
    let reached = a.window().len() >= target.len() && a.window()[..target.len()] == target[..];
    SegmentRun { offsets, pairs, trace, end: a, reached }
}

fn scan(chain: &LambdaChain, c: &Filling, flavor: Option<BlockFlavor>, trace: &mut Vec<TraceStep>) -> Result<FoldingSequence> {
    if c.columns.len() != chain.segments.len() {
        return Err(Error::Shape(format!("{} columns for {} chain segments", c.columns.len(), chain.segments.len())));
    }
    let mut a = WeylElement::identity(&chain.lie);
    let mut positions = Vec::new();
    let mut segments = Vec::with_capacity(chain.segments.len());
    for (si, seg) in chain.segments.iter().enumerate() {
        let target = &c.columns[si];
        if target.len() != seg.height {
            return Err(Error::Shape(format!("column {} has height {}, expected {}", si + 1, target.len(), seg.height)));
        }
        let run = scan_segment(&chain.entries[seg.range.clone()], si, &a, target, flavor);
        if !run.reached {
            return Err(Error::Termination { column: si + 1, window: run.end.into_window(), target: target.clone() });
        }
        positions.extend(run.offsets.iter().map(|o| seg.range.start + o + 1));
        segments.push(run.pairs);
        trace.extend(run.trace);
        a = run.end;
    }
    Ok(FoldingSequence { positions, segments })
}

/// The greedy scan: inside segment `i`, fold `(l, m)` whenever
/// `A(l) ≠ C_i(l)` and `A(l) ≺ A(m) ≼ C_i(l)` in the order `≺_{A(l)}`.
pub fn greedy(chain: &LambdaChain, c: &Filling) -> Result<FoldingSequence> {
    scan(chain, c, None, &mut Vec::new())
}

/// [`greedy`] with the two blocked-off changes: a forced fold of `(l, l+1)`
/// when `A, C_i` are blocked off at `l` by `C_i(l)`, and no fold that would
/// leave `A(l, m), C_i` blocked off at `l` by `C_i(l)`. Unforced folds must
/// also be edges of the quantum Bruhat graph; in type `B` the circular guard
/// alone admits `(i, ī)` steps from a negative entry, which are not edges.
pub fn mod_greedy(chain: &LambdaChain, c: &Filling) -> Result<FoldingSequence> {
    let flavor = BlockFlavor::for_type(&chain.lie).ok_or(Error::WrongFamily { expected: "B or D", got: chain.lie })?;
    scan(chain, c, Some(flavor), &mut Vec::new())
}

/// Intermediate values of one inversion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inversion {
    /// The filling compared against `sfill` (split and extended outside type `A`).
    pub split: Filling,
    pub reordered: Filling,
    pub folding: FoldingSequence,
    pub subset: AdmissibleSubset,
    pub trace: Vec<TraceStep>,
}

/// Inverts a filling in the image of `sfill` (already split in types
/// `B`, `C`, `D`), keeping every intermediate stage.
pub fn invert_filling_traced(chain: &LambdaChain, split: &Filling) -> Result<Inversion> {
    let lie = &chain.lie;
    let flavor = BlockFlavor::for_type(lie);
    let reordered = reorder(lie, split, flavor)?;
    let mut trace = Vec::new();
    let folding = scan(chain, &reordered, flavor, &mut trace)?;
    if !is_admissible(chain, &folding.positions)? {
        return Err(Error::NotAdmissible(folding.positions));
    }
    let subset = AdmissibleSubset::new_unchecked(folding.positions.clone());
    Ok(Inversion { split: split.clone(), reordered, folding, subset, trace })
}

pub fn invert_filling(chain: &LambdaChain, split: &Filling) -> Result<AdmissibleSubset> {
    invert_filling_traced(chain, split).map(|inv| inv.subset)
}

/// Inverts a tensor element of `B^{λ'}`.
pub fn invert_traced(chain: &LambdaChain, b: &TableauElement) -> Result<Inversion> {
    let split = b.to_split_filling(&chain.lie, &chain.heights)?;
    invert_filling_traced(chain, &split)
}

/// The admissible subset `J` with `sfill(J)` equal to the split form of `b`.
pub fn invert(chain: &LambdaChain, b: &TableauElement) -> Result<AdmissibleSubset> {
    invert_traced(chain, b).map(|inv| inv.subset)
}
