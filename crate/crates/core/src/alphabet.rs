//! Letters of the column alphabets and their orders.
//!
//! A letter is an `i32`: `j` for `j`, `−j` for `j̄`, and `0` for the type `B`
//! zero letter. The natural order is `1 < … < n < 0 < n̄ < … < 1̄`. The circular
//! orders `≺_a` run over `[n]` in type `A` and over `[n̄]` (no `0`) otherwise.

use crate::error::{Error, Result};
use crate::roots::{Family, LieType};

pub type Letter = i32;

/// Rank of a letter in the natural order, starting from 1.
pub fn natural_key(x: Letter, n: usize) -> i32 {
    let n = n as i32;
    match x {
        x if x > 0 => x,
        0 => n + 1,
        x => 2 * n + 2 + x,
    }
}

pub fn natural_cmp(x: Letter, y: Letter, n: usize) -> std::cmp::Ordering {
    natural_key(x, n).cmp(&natural_key(y, n))
}

pub fn sort_natural(col: &mut [Letter], n: usize) {
    col.sort_by_key(|&x| natural_key(x, n));
}

/// Checks membership in the column alphabet of `lie`.
pub fn check_letter(lie: &LieType, x: Letter) -> Result<()> {
    let n = lie.n() as i32;
    let ok = match lie.family() {
        Family::A => 1 <= x && x <= n,
        Family::B => x.abs() <= n,
        Family::C | Family::D => x != 0 && x.abs() <= n,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Alphabet { letter: x, lie: *lie })
    }
}

/// The circular order on the window alphabet of a Cartan type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Circle {
    n: usize,
    signed: bool,
}

impl Circle {
    pub fn new(lie: &LieType) -> Self {
        Circle { n: lie.n(), signed: lie.family().is_signed() }
    }

    pub fn unsigned(n: usize) -> Self {
        Circle { n, signed: false }
    }

    pub fn signed(n: usize) -> Self {
        Circle { n, signed: true }
    }

    fn size(&self) -> i32 {
        if self.signed {
            2 * self.n as i32
        } else {
            self.n as i32
        }
    }

    fn index(&self, x: Letter) -> Result<i32> {
        let n = self.n as i32;
        if x == 0 || x.abs() > n || (!self.signed && x < 0) {
            return Err(Error::Parse(format!("letter {x} not on the circle of size {}", self.size())));
        }
        Ok(if x > 0 { x - 1 } else { 2 * n + x })
    }

    /// Clockwise distance from `a` to `x`; `0` iff `x == a`.
    pub fn dist(&self, a: Letter, x: Letter) -> i32 {
        let (ia, ix) = (self.index(a).expect("letter on circle"), self.index(x).expect("letter on circle"));
        (ix - ia).rem_euclid(self.size())
    }

    /// `x ≺_a y`.
    pub fn less(&self, a: Letter, x: Letter, y: Letter) -> bool {
        self.dist(a, x) < self.dist(a, y)
    }

    /// `a ≺ x ≺ c` in the order `≺_a`.
    pub fn strictly_between(&self, a: Letter, x: Letter, c: Letter) -> bool {
        let d = self.dist(a, x);
        0 < d && d < self.dist(a, c)
    }

    /// `a ≺ x ≼ c` in the order `≺_a`.
    pub fn between_incl(&self, a: Letter, x: Letter, c: Letter) -> bool {
        let d = self.dist(a, x);
        0 < d && d <= self.dist(a, c)
    }

    /// Minimum of `set` under `≺_a`.
    pub fn min(&self, a: Letter, set: &[Letter]) -> Result<Letter> {
        self.index(a)?;
        for &x in set {
            self.index(x)?;
        }
        set.iter().copied().min_by_key(|&x| self.dist(a, x)).ok_or(Error::EmptySet)
    }
}

/// Renders a letter in text form: bars as a trailing `b`.
pub fn letter_to_text(x: Letter) -> String {
    if x < 0 {
        format!("{}b", -x)
    } else {
        x.to_string()
    }
}

pub fn letter_from_text(s: &str) -> Result<Letter> {
    let s = s.trim();
    let (body, barred) = match s.strip_suffix('b') {
        Some(b) => (b, true),
        None => (s, false),
    };
    let v: i32 = body.parse().map_err(|_| Error::Parse(format!("bad letter {s:?}")))?;
    if v < 0 || (barred && v == 0) {
        return Err(Error::Parse(format!("bad letter {s:?}")));
    }
    Ok(if barred { -v } else { v })
}

/// Text form of a column: `"2,3,3b"`.
pub fn column_to_text(col: &[Letter]) -> String {
    col.iter().map(|&x| letter_to_text(x)).collect::<Vec<_>>().join(",")
}

pub fn column_from_text(s: &str) -> Result<Vec<Letter>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(letter_from_text).collect()
}
