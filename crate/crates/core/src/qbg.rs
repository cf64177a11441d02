//! The quantum Bruhat graph.
//!
//! [`edge_kind`] decides edges from the length function and is the only
//! criterion used by the model. The circular-order criteria for types `A` and
//! `C` are faster and are tested against it exhaustively.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alphabet::{natural_key, Circle};
use crate::error::{Error, Result};
use crate::roots::{positive_roots, Family, LieType, Root};
use crate::weyl::WeylElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeKind {
    /// Bruhat cover `w ⋖ w s_α`.
    BruhatUp,
    /// `ℓ(w s_α) = ℓ(w) − 2⟨ρ, α^∨⟩ + 1`.
    QuantumDown,
}

/// Classifies the candidate edge `w → w s_α` for a positive root `α`.
pub fn edge_kind(w: &WeylElement, root: &Root) -> Option<EdgeKind> {
    let lie = w.lie();
    let before = w.length() as i64;
    let after = w.times_root(root).length() as i64;
    if after == before + 1 {
        Some(EdgeKind::BruhatUp)
    } else if after == before - 2 * root.rho_pairing(lie) + 1 {
        Some(EdgeKind::QuantumDown)
    } else {
        None
    }
}

fn require(w: &WeylElement, family: Family, name: &'static str) -> Result<()> {
    if w.lie().family() == family {
        Ok(())
    } else {
        Err(Error::WrongFamily { expected: name, got: *w.lie() })
    }
}

/// Type `A`: `w → w(i,j)` is an edge iff no `i < k < j` has
/// `w(i) ≺ w(k) ≺ w(j)`.
pub fn edge_fast_a(w: &WeylElement, root: &Root) -> Result<bool> {
    require(w, Family::A, "A")?;
    root.check(w.lie())?;
    let Root::Diff(i, j) = *root else { unreachable!("type A roots are differences") };
    let circle = Circle::new(w.lie());
    let (wi, wj) = (w.at(i as i32), w.at(j as i32));
    Ok(!(i + 1..j).any(|k| circle.strictly_between(wi, w.at(k as i32), wj)))
}

/// Type `C`: the three circular-order clauses, with positions `k` running
/// over `[n̄]` strictly between `i` and the (possibly barred) second index.
pub fn edge_fast_c(w: &WeylElement, root: &Root) -> Result<bool> {
    require(w, Family::C, "C")?;
    root.check(w.lie())?;
    let n = w.lie().n();
    let circle = Circle::new(w.lie());
    let (i, m) = root.as_pair();
    let (wi, wm) = (w.at(i as i32), w.at(m));
    let between = |k: i32| natural_key(i as i32, n) < natural_key(k, n) && natural_key(k, n) < natural_key(m, n);
    let positions = (1..=n as i32).chain((1..=n as i32).map(|k| -k));
    let blocked = positions.filter(|&k| between(k)).any(|k| circle.strictly_between(wi, w.at(k), wm));
    let extra = match root {
        Root::Sum(..) => natural_key(wi, n) < natural_key(wm, n) && wi.signum() == wm.signum(),
        _ => true,
    };
    Ok(extra && !blocked)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QbgEdge {
    pub source: usize,
    pub target: usize,
    pub label: Root,
    pub kind: EdgeKind,
}

/// The full labeled graph `QBG(W)`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Qbg {
    pub lie: LieType,
    pub vertices: Vec<WeylElement>,
    pub edges: Vec<QbgEdge>,
}

pub const DEFAULT_GROUP_GUARD: u128 = 100_000;

pub fn build_qbg(lie: &LieType) -> Result<Qbg> {
    build_qbg_guarded(lie, DEFAULT_GROUP_GUARD)
}

pub fn build_qbg_guarded(lie: &LieType, guard: u128) -> Result<Qbg> {
    let vertices = WeylElement::all(lie, guard)?;
    let index: HashMap<&WeylElement, usize> = vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let roots = positive_roots(lie);
    let edges: Vec<QbgEdge> = vertices
        .par_iter()
        .enumerate()
        .flat_map_iter(|(s, w)| {
            let index = &index;
            roots.iter().filter_map(move |r| {
                edge_kind(w, r).map(|kind| QbgEdge { source: s, target: index[&w.times_root(r)], label: *r, kind })
            })
        })
        .collect();
    Ok(Qbg { lie: *lie, vertices, edges })
}

impl Qbg {
    /// Graphviz rendering: solid arrows for Bruhat covers, dashed for
    /// quantum edges, labelled by the root.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"QBG({})\" {{", self.lie);
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"{v}\"];");
        }
        for e in &self.edges {
            let style = match e.kind {
                EdgeKind::BruhatUp => "solid",
                EdgeKind::QuantumDown => "dashed",
            };
            let _ = writeln!(out, "  v{} -> v{} [label=\"{}\", style={style}];", e.source, e.target, e.label);
        }
        out.push_str("}\n");
        out
    }

    /// Adjacency as JSON: `{"type", "vertices": [window…], "edges": […]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "type": self.lie.to_string(),
            "vertices": self.vertices.iter().map(|v| v.window().to_vec()).collect::<Vec<_>>(),
            "edges": self.edges,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(lie: &LieType, v: &[i32]) -> WeylElement {
        WeylElement::from_window(lie, v.to_vec()).unwrap()
    }

    #[test]
    fn edge_kinds_in_a2() {
        let a = LieType::a(3).unwrap();
        let id = WeylElement::identity(&a);
        for s in a.simple_roots() {
            assert_eq!(edge_kind(&id, &s), Some(EdgeKind::BruhatUp));
        }
        assert_eq!(edge_kind(&w(&a, &[2, 3, 1]), &Root::Diff(2, 3)), Some(EdgeKind::QuantumDown));
        assert_eq!(edge_kind(&w(&a, &[2, 1, 3]), &Root::Diff(1, 2)), Some(EdgeKind::QuantumDown));
    }

    #[test]
    fn fast_a_examples() {
        let a = LieType::a(3).unwrap();
        assert!(edge_fast_a(&WeylElement::identity(&a), &Root::Diff(1, 2)).unwrap());
        assert!(edge_fast_a(&w(&a, &[2, 3, 1]), &Root::Diff(2, 3)).unwrap());
        assert!(edge_fast_a(&w(&a, &[1, 3, 2]), &Root::Diff(1, 3)).unwrap());
        assert!(!edge_fast_a(&w(&a, &[1, 2, 3]), &Root::Diff(1, 3)).unwrap());
        assert!(edge_kind(&w(&a, &[1, 2, 3]), &Root::Diff(1, 3)).is_none());
        assert!(edge_fast_a(&WeylElement::identity(&LieType::c(2).unwrap()), &Root::Diff(1, 2)).is_err());
    }

    #[test]
    fn fast_c_examples() {
        let c = LieType::c(2).unwrap();
        let id = WeylElement::identity(&c);
        assert!(edge_fast_c(&id, &Root::Long(2)).unwrap());
        assert_eq!(edge_fast_c(&id, &Root::Sum(1, 2)).unwrap(), edge_kind(&id, &Root::Sum(1, 2)).is_some());
        assert!(!edge_fast_c(&id, &Root::Sum(1, 2)).unwrap());
    }

    #[test]
    fn small_graphs() {
        let a1 = LieType::a(2).unwrap();
        let g = build_qbg(&a1).unwrap();
        assert_eq!((g.vertices.len(), g.edges.len()), (2, 2));
        let a2 = build_qbg(&LieType::a(3).unwrap()).unwrap();
        assert_eq!(a2.vertices.len(), 6);
        // every vertex of QBG(S_3) has out-degree 3 minus the blocked (1,3) moves
        let brute = a2.vertices.iter().map(|v| positive_roots(&a2.lie).iter().filter(|r| edge_kind(v, r).is_some()).count()).sum::<usize>();
        assert_eq!(a2.edges.len(), brute);
        assert_eq!(a2.edges.len(), 15);
        let c2 = build_qbg(&LieType::c(2).unwrap()).unwrap();
        assert_eq!(c2.vertices.len(), 8);
        assert!(build_qbg_guarded(&LieType::a(9).unwrap(), 1000).is_err());
        assert!(a2.to_dot().contains("style=dashed"));
    }

    #[test]
    fn quantum_edges_drop_exactly() {
        for lie in [LieType::a(4).unwrap(), LieType::b(3).unwrap(), LieType::c(3).unwrap(), LieType::d(4).unwrap()] {
            let g = build_qbg(&lie).unwrap();
            for e in &g.edges {
                let (s, t) = (&g.vertices[e.source], &g.vertices[e.target]);
                assert_eq!(&s.times_root(&e.label), t);
                let drop = s.length() as i64 - t.length() as i64;
                match e.kind {
                    EdgeKind::BruhatUp => assert_eq!(drop, -1),
                    EdgeKind::QuantumDown => assert_eq!(drop, 2 * e.label.rho_pairing(&lie) - 1),
                }
            }
        }
    }
}
