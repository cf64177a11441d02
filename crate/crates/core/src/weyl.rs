//! (Signed) permutations in window notation.
//!
//! An element is stored as its window `w(1) … w(n)`; `w(ī) = −w(i)` extends
//! it to the signed alphabet. Products are composition of functions,
//! `(u·v)(i) = u(v(i))`, so `w·s_α` acts on positions: right multiplication
//! by the reflection of `(l, m)` rewrites the window entries at `l` and `|m|`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Circle, Letter};
use crate::error::{Error, Result};
use crate::roots::{positive_roots, Family, LieType, Root};

pub use crate::alphabet::Circle as CircleOrder;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElement {
    lie: LieType,
    window: Vec<Letter>,
}

impl WeylElement {
    pub fn identity(lie: &LieType) -> Self {
        WeylElement { lie: *lie, window: (1..=lie.n() as i32).collect() }
    }

    pub fn from_window(lie: &LieType, window: Vec<Letter>) -> Result<Self> {
        let n = lie.n();
        let mut seen = vec![false; n + 1];
        let bad = || Error::InvalidWindow(window.clone(), *lie);
        if window.len() != n {
            return Err(bad());
        }
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if x == 0 || a > n || seen[a] {
                return Err(bad());
            }
            seen[a] = true;
        }
        let negatives = window.iter().filter(|&&x| x < 0).count();
        match lie.family() {
            Family::A if negatives > 0 => return Err(bad()),
            Family::D if negatives % 2 == 1 => return Err(bad()),
            _ => {}
        }
        Ok(WeylElement { lie: *lie, window })
    }

    pub fn lie(&self) -> &LieType {
        &self.lie
    }

    pub fn window(&self) -> &[Letter] {
        &self.window
    }

    pub fn into_window(self) -> Vec<Letter> {
        self.window
    }

    /// `w(x)` for a signed position `x`, with `w(0) = 0`.
    pub fn at(&self, x: Letter) -> Letter {
        match x {
            0 => 0,
            x if x > 0 => self.window[x as usize - 1],
            x => -self.window[(-x) as usize - 1],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &x)| x == i as i32 + 1)
    }

    pub fn compose(&self, other: &WeylElement) -> Result<WeylElement> {
        if self.lie != other.lie {
            return Err(Error::RankMismatch(self.lie, other.lie));
        }
        let window = other.window.iter().map(|&x| self.at(x)).collect();
        Ok(WeylElement { lie: self.lie, window })
    }

    pub fn inverse(&self) -> WeylElement {
        let mut window = vec![0; self.window.len()];
        for (i, &x) in self.window.iter().enumerate() {
            let pos = i as i32 + 1;
            window[x.unsigned_abs() as usize - 1] = if x > 0 { pos } else { -pos };
        }
        WeylElement { lie: self.lie, window }
    }

    /// `w · s_{(l,m)}` for a root written as `(l, m)` with `m` a signed
    /// position: the new window has `w(m)` at `l` and `sign(m)·w(l)` at `|m|`.
    pub fn times_pair(&self, l: usize, m: i32) -> WeylElement {
        let mut window = self.window.clone();
        let a = m.unsigned_abs() as usize;
        let (wl, wm) = (self.at(l as i32), self.at(m));
        window[l - 1] = wm;
        if a != l {
            window[a - 1] = m.signum() * wl;
        }
        WeylElement { lie: self.lie, window }
    }

    /// `w · s_α`.
    pub fn times_root(&self, root: &Root) -> WeylElement {
        let (l, m) = root.as_pair();
        self.times_pair(l, m)
    }

    /// `ℓ(w) = |{α ∈ Φ⁺ : w(α) ∈ Φ⁻}|`.
    pub fn length(&self) -> usize {
        positive_roots(&self.lie).iter().filter(|r| !r.image_is_positive(self)).count()
    }

    /// Action on a coordinate vector: `ε_i ↦ sign(w(i)) ε_|w(i)|`.
    pub fn act(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (i, &c) in v.iter().enumerate() {
            let x = self.window[i];
            out[x.unsigned_abs() as usize - 1] = if x > 0 { c } else { -c };
        }
        out
    }

    /// Every element of the Weyl group, in lexicographic order of windows
    /// (type `A` windows first by value; signed windows by `|x|` then sign).
    pub fn all(lie: &LieType, guard: u128) -> Result<Vec<WeylElement>> {
        let size = lie.weyl_order();
        if size > guard {
            return Err(Error::GroupTooLarge { lie: *lie, size, guard });
        }
        let n = lie.n();
        let mut perms: Vec<Vec<i32>> = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for p in &perms {
                for v in 1..=n as i32 {
                    if !p.iter().any(|x: &i32| x.abs() == v) {
                        let mut q = p.clone();
                        q.push(v);
                        next.push(q);
                    }
                }
            }
            perms = next;
        }
        let mut out = Vec::with_capacity(size as usize);
        for p in perms {
            if lie.family() == Family::A {
                out.push(WeylElement { lie: *lie, window: p });
                continue;
            }
            for mask in 0u32..(1 << n) {
                if lie.family() == Family::D && mask.count_ones() % 2 == 1 {
                    continue;
                }
                let window = p.iter().enumerate().map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x }).collect();
                out.push(WeylElement { lie: *lie, window });
            }
        }
        Ok(out)
    }

    /// Length by greedy descent: repeatedly multiply by a simple reflection
    /// that lowers the length until reaching the identity. Used to cross-check
    /// [`WeylElement::length`].
    pub fn length_by_descents(&self) -> usize {
        let simples = self.lie.simple_roots();
        let mut w = self.clone();
        let mut steps = 0;
        while !w.is_identity() {
            // s_i is a right descent iff w(α_i) < 0
            let s = simples.iter().find(|s| !s.image_is_positive(&w)).expect("non-identity element has a descent");
            w = w.times_root(s);
            steps += 1;
        }
        steps
    }
}

impl fmt::Display for WeylElement {
    /// Space-separated signed integers, e.g. `2 -1 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl WeylElement {
    pub fn parse(lie: &LieType, s: &str) -> Result<Self> {
        let window = s
            .split_whitespace()
            .map(|t| t.parse::<i32>().map_err(|_| Error::Parse(format!("bad window entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_window(lie, window)
    }
}

/// Minimum of `set` under the circular order `≺_a` of the alphabet of `lie`.
pub fn circle_min(lie: &LieType, a: Letter, set: &[Letter]) -> Result<Letter> {
    Circle::new(lie).min(a, set)
}
