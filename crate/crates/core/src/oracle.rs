//! Brute-force checks against which the fast algorithms are compared.
//!
//! Everything here enumerates: whole Weyl groups, all subsets of a chain
//! segment, whole crystals. Sizes are guarded by the callers.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::alcove::{enumerate_admissible_guarded, sfill, Filling};
use crate::chains::{lambda_chain_from_heights, omega_chain, ChainEntry, Side};
use crate::error::{Error, Result};
use crate::inverse::{invert, invert_filling, BlockFlavor};
use crate::qbg::{edge_fast_a, edge_fast_c, edge_kind};
use crate::roots::{positive_roots, Family, LieType};
use crate::tableaux::enumerate_tensor;
use crate::weyl::WeylElement;

/// For each `(source, target)` pair of column prefixes, the rows `i` such
/// that some joining path avoids `(i, i+1)`.
pub type Reach = HashMap<(Vec<i32>, Vec<i32>), HashSet<usize>>;

/// A joined blocked pair: `(k, side, source, target, row)`.
pub type Counterexample = (usize, Side, Vec<i32>, Vec<i32>, usize);

/// Counts from an exhaustive round trip over one `(type, λ)`.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RoundTrip {
    pub model: usize,
    pub tableaux: usize,
    pub forward_failures: usize,
    pub backward_failures: usize,
}

impl RoundTrip {
    pub fn passed(&self) -> bool {
        self.model == self.tableaux && self.forward_failures == 0 && self.backward_failures == 0
    }
}

/// `invert ∘ sfill` on every admissible subset and `sfill ∘ invert` on every
/// tensor element, the latter also compared with a lookup table built from
/// the forward map alone.
pub fn round_trip(lie: &LieType, heights: &[usize], max_m: usize) -> Result<RoundTrip> {
    let chain = lambda_chain_from_heights(lie, heights)?;
    let subsets = enumerate_admissible_guarded(&chain, max_m)?;
    let images = subsets.iter().map(|j| sfill(&chain, j)).collect::<Result<Vec<_>>>()?;
    let table: HashMap<&Filling, usize> = images.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let forward_failures = subsets
        .iter()
        .zip(&images)
        .filter(|(j, s)| invert_filling(&chain, s).ok().as_ref() != Some(*j))
        .count();
    let elements = enumerate_tensor(lie, heights)?;
    let mut backward_failures = 0;
    for b in &elements {
        let target = b.to_split_filling(lie, heights)?;
        let ok = invert(&chain, b).is_ok_and(|j| table.get(&target).map(|&i| &subsets[i]) == Some(&j));
        if !ok {
            backward_failures += 1;
        }
    }
    Ok(RoundTrip { model: subsets.len(), tableaux: elements.len(), forward_failures, backward_failures })
}

/// Every `(source, target)` pair of column prefixes of height `k` joined by a
/// quantum Bruhat graph path through a subsequence of `entries`, starting
/// anywhere in the group. For each pair, the rows `i` for which some joining
/// path avoids the root `(i, i+1)`.
pub fn segment_reach(lie: &LieType, entries: &[ChainEntry], k: usize, group_guard: u128) -> Result<Reach> {
    if entries.len() > 20 {
        return Err(Error::ChainTooLong { len: entries.len(), guard: 20 });
    }
    let mut reach = Reach::new();
    for w in WeylElement::all(lie, group_guard)? {
        for mask in 0u32..(1 << entries.len()) {
            let mut a = w.clone();
            let mut ok = true;
            let mut used = Vec::new();
            for (t, e) in entries.iter().enumerate() {
                if mask >> t & 1 == 1 {
                    if edge_kind(&a, &e.root()).is_none() {
                        ok = false;
                        break;
                    }
                    if e.m == e.l as i32 + 1 {
                        used.push(e.l);
                    }
                    a = a.times_pair(e.l, e.m);
                }
            }
            if ok {
                let rows = reach.entry((w.window()[..k].to_vec(), a.window()[..k].to_vec())).or_default();
                rows.extend((1..=k).filter(|i| !used.contains(i)));
            }
        }
    }
    Ok(reach)
}

/// Result of checking the blocked-off obstruction on the segments of every
/// `ω_k`-chain of a type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub segments: usize,
    pub blocked_pairs: usize,
    /// Blocked pairs that are joined.
    pub counterexamples: Vec<Counterexample>,
}

/// For every `k`, every segment of the `ω_k`-chain and every pair of column
/// prefixes blocked off at some row `i`, checks that no path through the
/// segment avoiding `(i, i+1)` joins them.
pub fn blocked_off_no_path(lie: &LieType, group_guard: u128) -> Result<BlockReport> {
    let flavor = BlockFlavor::for_type(lie).ok_or(Error::WrongFamily { expected: "B or D", got: *lie })?;
    let n = lie.n();
    let all = WeylElement::all(lie, group_guard)?;
    let mut report = BlockReport { segments: 0, blocked_pairs: 0, counterexamples: Vec::new() };
    for k in 1..=lie.max_height() {
        let chain = omega_chain(lie, k)?;
        let mut cols: Vec<Vec<i32>> = all.iter().map(|w| w.window()[..k].to_vec()).collect();
        cols.sort();
        cols.dedup();
        for seg in &chain.segments {
            report.segments += 1;
            let reach = segment_reach(lie, &chain.entries[seg.range.clone()], k, group_guard)?;
            for c in &cols {
                for d in &cols {
                    for i in 1..=k {
                        if !flavor.blocked(c, d, i, d[i - 1], n) {
                            continue;
                        }
                        report.blocked_pairs += 1;
                        if reach.get(&(c.clone(), d.clone())).is_some_and(|rows| rows.contains(&i)) {
                            report.counterexamples.push((k, seg.side, c.clone(), d.clone(), i));
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Pairs `(w, α)` on which the circular-order edge criterion of type `A` or
/// `C` disagrees with the length criterion; also returns how many were
/// checked. Other types have no fast criterion and check nothing.
pub fn qbg_fast_mismatches(lie: &LieType, group_guard: u128) -> Result<(usize, Vec<(WeylElement, String)>)> {
    let fast = match lie.family() {
        Family::A => edge_fast_a,
        Family::C => edge_fast_c,
        _ => return Ok((0, Vec::new())),
    };
    let roots = positive_roots(lie);
    let mut checked = 0;
    let mut bad = Vec::new();
    for w in WeylElement::all(lie, group_guard)? {
        for r in &roots {
            checked += 1;
            if fast(&w, r)? != edge_kind(&w, r).is_some() {
                bad.push((w.clone(), r.to_string()));
            }
        }
    }
    Ok((checked, bad))
}
