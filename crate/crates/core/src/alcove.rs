//! The quantum alcove model: admissible subsets of a `λ`-chain and the
//! filling maps.
//!
//! A set of positions `J = {j_1 < … < j_s}` is admissible when
//! `1 → r_{j_1} → r_{j_1} r_{j_2} → …` is a path in the quantum Bruhat graph.
//! `fill` records, at the end of every segment, the top `λ'_i` entries of the
//! running window; `sfill` sorts each of those columns.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alphabet::{sort_natural, Letter};
use crate::chains::LambdaChain;
use crate::error::{Error, Result};
use crate::qbg::{edge_kind, EdgeKind};
use crate::weyl::WeylElement;

/// Positions are 1-based, as in `J ⊆ [m]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AdmissibleSubset {
    positions: Vec<usize>,
}

impl AdmissibleSubset {
    /// Wraps positions without checking admissibility.
    pub fn new_unchecked(positions: Vec<usize>) -> Self {
        AdmissibleSubset { positions }
    }

    pub fn empty() -> Self {
        AdmissibleSubset { positions: Vec::new() }
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

/// A filling as a list of columns, top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Filling {
    pub columns: Vec<Vec<Letter>>,
}

impl Filling {
    pub fn new(columns: Vec<Vec<Letter>>) -> Self {
        Filling { columns }
    }

    pub fn sorted(&self, n: usize) -> Filling {
        let columns = self
            .columns
            .iter()
            .map(|c| {
                let mut c = c.clone();
                sort_natural(&mut c, n);
                c
            })
            .collect();
        Filling { columns }
    }
}

impl std::fmt::Display for Filling {
    /// Columns in text form, `[2,3][1,2][1]`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.columns {
            write!(f, "[{}]", crate::alphabet::column_to_text(c))?;
        }
        Ok(())
    }
}

fn check_positions(chain: &LambdaChain, positions: &[usize]) -> Result<()> {
    let m = chain.len();
    let mut prev = 0;
    for &p in positions {
        if p == 0 || p > m || p <= prev {
            return Err(Error::BadPositions { pos: p, len: m });
        }
        prev = p;
    }
    Ok(())
}

/// One step of the walk through `Γ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkStep {
    pub position: usize,
    pub segment: usize,
    pub before: WeylElement,
    pub after: WeylElement,
    pub kind: Option<EdgeKind>,
}

/// The folds of `positions` applied left to right from the identity, with
/// the edge kind of each step (`None` if it is not a QBG edge).
pub fn walk(chain: &LambdaChain, positions: &[usize]) -> Result<Vec<WalkStep>> {
    check_positions(chain, positions)?;
    let mut w = WeylElement::identity(&chain.lie);
    let mut steps = Vec::with_capacity(positions.len());
    for &p in positions {
        let entry = chain.entries[p - 1];
        let after = w.times_pair(entry.l, entry.m);
        let kind = edge_kind(&w, &entry.root());
        steps.push(WalkStep { position: p, segment: chain.segment_of(p - 1), before: w, after: after.clone(), kind });
        w = after;
    }
    Ok(steps)
}

pub fn is_admissible(chain: &LambdaChain, positions: &[usize]) -> Result<bool> {
    Ok(walk(chain, positions)?.iter().all(|s| s.kind.is_some()))
}

pub fn admissible(chain: &LambdaChain, positions: Vec<usize>) -> Result<AdmissibleSubset> {
    if is_admissible(chain, &positions)? {
        Ok(AdmissibleSubset { positions })
    } else {
        Err(Error::NotAdmissible(positions))
    }
}

pub const DEFAULT_MAX_M: usize = 26;

/// All admissible subsets in lexicographic order of position lists.
pub fn enumerate_admissible(chain: &LambdaChain) -> Result<Vec<AdmissibleSubset>> {
    enumerate_admissible_guarded(chain, DEFAULT_MAX_M)
}

pub fn enumerate_admissible_guarded(chain: &LambdaChain, max_m: usize) -> Result<Vec<AdmissibleSubset>> {
    if chain.len() > max_m {
        return Err(Error::ChainTooLong { len: chain.len(), guard: max_m });
    }
    fn dfs(chain: &LambdaChain, w: &WeylElement, start: usize, prefix: &mut Vec<usize>, out: &mut Vec<AdmissibleSubset>) {
        out.push(AdmissibleSubset { positions: prefix.clone() });
        for p in start..chain.len() {
            let e = chain.entries[p];
            if edge_kind(w, &e.root()).is_some() {
                prefix.push(p + 1);
                dfs(chain, &w.times_pair(e.l, e.m), p + 1, prefix, out);
                prefix.pop();
            }
        }
    }
    let id = WeylElement::identity(&chain.lie);
    // Subtrees rooted at different first positions are independent; their
    // concatenation in position order is the lexicographic order.
    let subtrees: Vec<Vec<AdmissibleSubset>> = (0..chain.len())
        .into_par_iter()
        .map(|p| {
            let e = chain.entries[p];
            let mut out = Vec::new();
            if edge_kind(&id, &e.root()).is_some() {
                dfs(chain, &id.times_pair(e.l, e.m), p + 1, &mut vec![p + 1], &mut out);
            }
            out
        })
        .collect();
    let mut all = vec![AdmissibleSubset::empty()];
    all.extend(subtrees.into_iter().flatten());
    Ok(all)
}

/// Brute-force enumeration over all `2^m` subsets; test oracle only.
pub fn enumerate_admissible_brute(chain: &LambdaChain) -> Result<Vec<AdmissibleSubset>> {
    if chain.len() > 20 {
        return Err(Error::ChainTooLong { len: chain.len(), guard: 20 });
    }
    let m = chain.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        let positions: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        if is_admissible(chain, &positions)? {
            out.push(AdmissibleSubset { positions });
        }
    }
    out.sort();
    Ok(out)
}

/// The unsorted filling: one column per segment, the top `λ'_i` entries of
/// the window at the end of that segment.
pub fn fill(chain: &LambdaChain, subset: &AdmissibleSubset) -> Result<Filling> {
    if !is_admissible(chain, subset.positions())? {
        return Err(Error::NotAdmissible(subset.positions().to_vec()));
    }
    Ok(fill_unchecked(chain, subset.positions()))
}

/// `fill` for any position set, admissible or not.
pub fn fill_unchecked(chain: &LambdaChain, positions: &[usize]) -> Filling {
    let mut w = WeylElement::identity(&chain.lie);
    let mut folds = positions.iter().peekable();
    let mut columns = Vec::with_capacity(chain.segments.len());
    for seg in &chain.segments {
        while let Some(&&p) = folds.peek() {
            if p > seg.range.end {
                break;
            }
            let e = chain.entries[p - 1];
            w = w.times_pair(e.l, e.m);
            folds.next();
        }
        columns.push(w.window()[..seg.height].to_vec());
    }
    Filling { columns }
}

pub fn sfill(chain: &LambdaChain, subset: &AdmissibleSubset) -> Result<Filling> {
    Ok(fill(chain, subset)?.sorted(chain.lie.n()))
}

/// JSON record `{"J": […], "fill": [[…]…], "sfill": [[…]…]}`.
pub fn model_record(chain: &LambdaChain, subset: &AdmissibleSubset) -> Result<serde_json::Value> {
    let f = fill(chain, subset)?;
    let s = f.sorted(chain.lie.n());
    Ok(serde_json::json!({ "J": subset.positions(), "fill": f.columns, "sfill": s.columns }))
}
