//! Kashiwara–Nakashima columns and their split forms.
//!
//! Letters and orders are those of [`crate::alphabet`]. Columns are listed
//! top to bottom. In types `B`, `C`, `D` a column is replaced by a split pair
//! `(lC, rC)` of strictly increasing columns over `[n̄]`; in types `B` and `D`
//! a pair shorter than its tensor factor is then padded by [`extend`].

use serde::{Deserialize, Serialize};

use crate::alcove::Filling;
use crate::alphabet::{check_letter, natural_key, sort_natural, Letter};
use crate::error::{Error, Result};
use crate::roots::{Family, LieType};

/// A split (doubled) column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SplitColumn {
    pub left: Vec<Letter>,
    pub right: Vec<Letter>,
}

impl SplitColumn {
    pub fn new(left: Vec<Letter>, right: Vec<Letter>) -> Self {
        SplitColumn { left, right }
    }

    pub fn height(&self) -> usize {
        self.left.len()
    }

    fn contains(&self, x: Letter) -> bool {
        self.left.contains(&x) || self.right.contains(&x)
    }
}

/// Checks the column conditions: strict increase (with repeated `0` in type
/// `B` and adjacent `n`, `n̄` in either order in type `D`), and `a + b ≤ z`
/// whenever `z` sits in box `a` from the top and `z̄` in box `b` from the
/// bottom.
pub fn is_kn_column(lie: &LieType, col: &[Letter]) -> Result<bool> {
    for &x in col {
        check_letter(lie, x)?;
    }
    let n = lie.n();
    let increasing = col.windows(2).all(|p| {
        let (x, y) = (p[0], p[1]);
        match lie.family() {
            Family::B if x == 0 && y == 0 => true,
            Family::D if x == -y && x.unsigned_abs() as usize == n => true,
            _ => natural_key(x, n) < natural_key(y, n),
        }
    });
    if !increasing {
        return Ok(false);
    }
    let h = col.len();
    for z in 1..=n as Letter {
        let a = col.iter().position(|&x| x == z);
        let b = col.iter().rposition(|&x| x == -z).map(|p| h - p);
        if let (Some(a), Some(b)) = (a, b) {
            if a + 1 + b > z as usize {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All KN columns of height `r`, in lexicographic order of natural keys.
pub fn enumerate_columns(lie: &LieType, r: usize) -> Result<Vec<Vec<Letter>>> {
    let n = lie.n() as i32;
    let alphabet: Vec<Letter> = match lie.family() {
        Family::A => (1..=n).collect(),
        Family::B => (1..=n).chain(std::iter::once(0)).chain((1..=n).rev().map(|x| -x)).collect(),
        Family::C | Family::D => (1..=n).chain((1..=n).rev().map(|x| -x)).collect(),
    };
    if r > alphabet.len() + n as usize {
        return Err(Error::Guard(format!("column height {r} exceeds alphabet")));
    }
    fn go(lie: &LieType, alphabet: &[Letter], r: usize, cur: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
        if cur.len() == r {
            if is_kn_column(lie, cur).unwrap_or(false) {
                out.push(cur.clone());
            }
            return;
        }
        for &x in alphabet {
            cur.push(x);
            // prune on the increase condition of the new adjacent pair
            let ok = cur.len() < 2 || is_kn_column(lie, &cur[cur.len() - 2..]).unwrap_or(false) || {
                let (a, b) = (cur[cur.len() - 2], x);
                (lie.family() == Family::B && a == 0 && b == 0)
                    || (lie.family() == Family::D && a == -b && a.unsigned_abs() as usize == lie.n())
            };
            if ok {
                go(lie, alphabet, r, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lie, &alphabet, r, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Core of the splitting rule. `zeros` counts `0` slots, which sit above
/// every unbarred letter in the natural order and so come first in `I`.
fn split_core(col: &[Letter], n: usize) -> Result<SplitColumn> {
    let zeros = col.iter().filter(|&&x| x == 0).count();
    let mut pairs: Vec<Letter> = col.iter().copied().filter(|&z| z > 0 && col.contains(&-z)).collect();
    pairs.sort_unstable_by(|a, b| b.cmp(a));
    // I = {z_1 > z_2 > …}; a zero slot is written as 0 and has bound n + 1.
    let slots: Vec<Letter> = std::iter::repeat_n(0, zeros).chain(pairs.iter().copied()).collect();
    let free = |t: Letter| !col.contains(&t) && !col.contains(&-t);
    let mut ts = Vec::with_capacity(slots.len());
    let mut bound = n as Letter + 1;
    for &z in &slots {
        let zb = if z == 0 { n as Letter + 1 } else { z };
        let cap = bound.min(zb);
        let t = (1..cap).rev().find(|&t| free(t)).ok_or_else(|| Error::Unsplittable(col.to_vec()))?;
        ts.push(t);
        bound = t;
    }
    let mut left = col.to_vec();
    let mut right = col.to_vec();
    for (&z, &t) in slots.iter().zip(&ts) {
        let i = left.iter().position(|&x| x == z).unwrap();
        left[i] = t;
        let i = right.iter().position(|&x| x == -z).unwrap();
        right[i] = -t;
    }
    sort_natural(&mut left, n);
    sort_natural(&mut right, n);
    Ok(SplitColumn { left, right })
}

fn require_family(lie: &LieType, family: Family) -> Result<()> {
    if lie.family() == family {
        Ok(())
    } else {
        Err(Error::WrongFamily { expected: ["A", "B", "C", "D"][family as usize], got: *lie })
    }
}

fn require_kn(lie: &LieType, col: &[Letter]) -> Result<()> {
    if is_kn_column(lie, col)? {
        Ok(())
    } else {
        Err(Error::NotKnColumn(col.to_vec()))
    }
}

/// Type `C` splitting.
pub fn split_c(lie: &LieType, col: &[Letter]) -> Result<SplitColumn> {
    require_family(lie, Family::C)?;
    require_kn(lie, col)?;
    split_core(col, lie.n())
}

/// Type `B` splitting: each `0` takes a slot of `I` and becomes `t` on the
/// left and `t̄` on the right.
pub fn split_b(lie: &LieType, col: &[Letter]) -> Result<SplitColumn> {
    require_family(lie, Family::B)?;
    require_kn(lie, col)?;
    split_core(col, lie.n())
}

/// Type `D` splitting: each `n` sitting directly above `n̄` turns the pair into
/// `0 0`, then as in type `B`. A pair written `n̄ n` splits like any other
/// `(z, z̄)` pair, which keeps the two orders apart.
pub fn split_d(lie: &LieType, col: &[Letter]) -> Result<SplitColumn> {
    require_family(lie, Family::D)?;
    require_kn(lie, col)?;
    if col.len() > lie.max_height() {
        return Err(Error::Height { lie: *lie, height: col.len(), max: lie.max_height() });
    }
    split_core(&zero_out_d(col, lie.n()), lie.n())
}

fn zero_out_d(col: &[Letter], n: usize) -> Vec<Letter> {
    let n = n as Letter;
    let mut out = col.to_vec();
    let mut i = 0;
    while i + 1 < out.len() {
        if out[i] == n && out[i + 1] == -n {
            out[i] = 0;
            out[i + 1] = 0;
            i += 2;
        } else {
            i += 1;
        }
    }
    out
}

/// Splitting for the family of `lie`; type `A` columns split trivially.
pub fn split(lie: &LieType, col: &[Letter]) -> Result<SplitColumn> {
    match lie.family() {
        Family::A => {
            require_kn(lie, col)?;
            Ok(SplitColumn::new(col.to_vec(), col.to_vec()))
        }
        Family::B => split_b(lie, col),
        Family::C => split_c(lie, col),
        Family::D => split_d(lie, col),
    }
}

/// Pads a split column of height `r` to height `k` by appending
/// `ī_1, …, ī_{k−r}` on the left and `i_1, …, i_{k−r}` on the right, where
/// `i_1 < i_2 < …` are the smallest letters of `[n]` with neither `i` nor `ī`
/// present in either column.
pub fn extend(lie: &LieType, pair: &SplitColumn, k: usize) -> Result<SplitColumn> {
    let r = pair.height();
    if k < r {
        return Err(Error::Height { lie: *lie, height: k, max: r });
    }
    let n = lie.n() as Letter;
    let fresh: Vec<Letter> = (1..=n).filter(|&i| !pair.contains(i) && !pair.contains(-i)).take(k - r).collect();
    if fresh.len() < k - r {
        return Err(Error::NoFreeLetters(k));
    }
    let mut left = pair.left.clone();
    let mut right = pair.right.clone();
    left.extend(fresh.iter().map(|&i| -i));
    right.extend(fresh.iter().copied());
    sort_natural(&mut left, lie.n());
    sort_natural(&mut right, lie.n());
    Ok(SplitColumn { left, right })
}

/// Recovers the KN column whose split is `pair`, by search over columns of
/// the same height.
pub fn unsplit(lie: &LieType, pair: &SplitColumn) -> Result<Vec<Letter>> {
    let h = pair.height();
    if pair.right.len() != h {
        return Err(Error::NotInImage(pair.left.clone(), pair.right.clone()));
    }
    for col in enumerate_columns(lie, h)? {
        if split(lie, &col).as_ref() == Ok(pair) {
            return Ok(col);
        }
    }
    Err(Error::NotInImage(pair.left.clone(), pair.right.clone()))
}

fn subsets(items: &[Letter], size: usize) -> Vec<Vec<Letter>> {
    if size == 0 {
        return vec![Vec::new()];
    }
    if items.len() < size {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in subsets(&items[i + 1..], size - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// Removes the padding added by [`extend`]: finds a pair `p` of height `r`
/// with `extend(p, height(pair)) == pair`.
pub fn unextend(lie: &LieType, pair: &SplitColumn, r: usize) -> Result<SplitColumn> {
    let k = pair.height();
    let not_image = || Error::NotInImage(pair.left.clone(), pair.right.clone());
    if r > k {
        return Err(not_image());
    }
    let candidates: Vec<Letter> = pair
        .right
        .iter()
        .copied()
        .filter(|&i| i > 0 && pair.left.contains(&-i) && !pair.left.contains(&i) && !pair.right.contains(&-i))
        .collect();
    for drop in subsets(&candidates, k - r) {
        let p = SplitColumn {
            left: pair.left.iter().copied().filter(|x| !drop.contains(&-x)).collect(),
            right: pair.right.iter().copied().filter(|x| !drop.contains(x)).collect(),
        };
        if extend(lie, &p, k).as_ref() == Ok(pair) {
            return Ok(p);
        }
    }
    Err(not_image())
}

/// Heights allowed for a tensor factor `B^{k,1}`: `k` in types `A`, `C`;
/// `k, k−2, …` in types `B`, `D`.
pub fn factor_heights(lie: &LieType, k: usize) -> Vec<usize> {
    match lie.family() {
        Family::A | Family::C => vec![k],
        Family::B | Family::D => (0..=k).rev().step_by(2).collect(),
    }
}

/// The split (and, in types `B`/`D`, extended) form of a KN column sitting
/// in a factor of height `k`.
pub fn split_extended(lie: &LieType, col: &[Letter], k: usize) -> Result<SplitColumn> {
    if !factor_heights(lie, k).contains(&col.len()) {
        return Err(Error::Shape(format!("column of height {} in factor B^{{{k},1}}", col.len())));
    }
    if col.is_empty() {
        return extend(lie, &SplitColumn::new(Vec::new(), Vec::new()), k);
    }
    let p = split(lie, col)?;
    extend(lie, &p, k)
}

/// Inverse of [`split_extended`].
pub fn unsplit_extended(lie: &LieType, pair: &SplitColumn) -> Result<Vec<Letter>> {
    let k = pair.height();
    for r in factor_heights(lie, k) {
        let Ok(p) = unextend(lie, pair, r) else { continue };
        if r == 0 {
            return Ok(Vec::new());
        }
        if let Ok(col) = unsplit(lie, &p) {
            return Ok(col);
        }
    }
    Err(Error::NotInImage(pair.left.clone(), pair.right.clone()))
}

/// An element of `B^{λ'} = B^{λ'_1,1} ⊗ B^{λ'_2,1} ⊗ …`: one KN column per
/// factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TableauElement {
    pub columns: Vec<Vec<Letter>>,
}

impl std::fmt::Display for TableauElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.columns {
            write!(f, "[{}]", crate::alphabet::column_to_text(c))?;
        }
        Ok(())
    }
}

impl TableauElement {
    pub fn new(columns: Vec<Vec<Letter>>) -> Self {
        TableauElement { columns }
    }

    /// Checks the element against the factor heights.
    pub fn check(&self, lie: &LieType, heights: &[usize]) -> Result<()> {
        if self.columns.len() != heights.len() {
            return Err(Error::Shape(format!("{} columns for {} factors", self.columns.len(), heights.len())));
        }
        for (col, &k) in self.columns.iter().zip(heights) {
            if !factor_heights(lie, k).contains(&col.len()) {
                return Err(Error::Shape(format!("column {col:?} in factor of height {k}")));
            }
            if !col.is_empty() {
                require_kn(lie, col)?;
            }
        }
        Ok(())
    }

    /// The filling compared against `sfill`: the columns themselves in type
    /// `A`, otherwise `lC_1 rC_1 lC_2 rC_2 …` after splitting and extending.
    pub fn to_split_filling(&self, lie: &LieType, heights: &[usize]) -> Result<Filling> {
        self.check(lie, heights)?;
        if lie.family() == Family::A {
            return Ok(Filling::new(self.columns.clone()));
        }
        let mut cols = Vec::with_capacity(2 * heights.len());
        for (col, &k) in self.columns.iter().zip(heights) {
            let p = split_extended(lie, col, k)?;
            cols.push(p.left);
            cols.push(p.right);
        }
        Ok(Filling::new(cols))
    }

    /// Inverse of [`TableauElement::to_split_filling`].
    pub fn from_split_filling(lie: &LieType, filling: &Filling) -> Result<Self> {
        if lie.family() == Family::A {
            for c in &filling.columns {
                require_kn(lie, c)?;
            }
            return Ok(TableauElement::new(filling.columns.clone()));
        }
        if filling.columns.len() % 2 == 1 {
            return Err(Error::Shape("odd number of split columns".into()));
        }
        let columns = filling
            .columns
            .chunks(2)
            .map(|p| unsplit_extended(lie, &SplitColumn::new(p[0].clone(), p[1].clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(TableauElement { columns })
    }
}

/// All elements of `B^{λ'}` for column heights `heights`, first factor
/// outermost.
pub fn enumerate_tensor(lie: &LieType, heights: &[usize]) -> Result<Vec<TableauElement>> {
    let mut factors = Vec::with_capacity(heights.len());
    for &k in heights {
        let mut cols = Vec::new();
        for h in factor_heights(lie, k) {
            if h == 0 {
                cols.push(Vec::new());
            } else {
                cols.extend(enumerate_columns(lie, h)?);
            }
        }
        factors.push(cols);
    }
    let total: usize = factors.iter().map(Vec::len).product();
    if total > 10_000_000 {
        return Err(Error::Guard(format!("{total} tensor elements")));
    }
    let mut out = vec![TableauElement { columns: Vec::new() }];
    for f in &factors {
        out = out
            .into_iter()
            .flat_map(|e| {
                f.iter().map(move |c| {
                    let mut cols = e.columns.clone();
                    cols.push(c.clone());
                    TableauElement { columns: cols }
                })
            })
            .collect();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: isize) -> usize {
        if k < 0 || k as usize > n {
            return 0;
        }
        let k = k as usize;
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn column_validity() {
        let c3 = LieType::c(3).unwrap();
        assert!(is_kn_column(&c3, &[1, 2, 3]).unwrap());
        assert!(is_kn_column(&c3, &[2, 3, -3]).unwrap());
        assert!(!is_kn_column(&LieType::c(2).unwrap(), &[1, 2, -2]).unwrap());
        assert!(!is_kn_column(&c3, &[2, 1]).unwrap());
        assert!(is_kn_column(&c3, &[0]).is_err());
        let b3 = LieType::b(3).unwrap();
        assert!(is_kn_column(&b3, &[0, 0]).unwrap());
        assert!(!is_kn_column(&c3, &[3, 3]).unwrap());
        let d4 = LieType::d(4).unwrap();
        assert!(is_kn_column(&d4, &[4, -4]).unwrap());
        assert!(is_kn_column(&d4, &[-4, 4]).unwrap());
        assert!(is_kn_column(&d4, &[1, 4, -4]).unwrap());
        assert!(is_kn_column(&LieType::d(5).unwrap(), &[5, -5, 5]).unwrap());
        assert!(!is_kn_column(&d4, &[1, -1]).unwrap());
    }

    #[test]
    fn column_counts() {
        assert_eq!(enumerate_columns(&LieType::a(5).unwrap(), 1).unwrap().len(), 5);
        assert_eq!(enumerate_columns(&LieType::c(2).unwrap(), 1).unwrap(), vec![vec![1], vec![2], vec![-2], vec![-1]]);
        assert_eq!(enumerate_columns(&LieType::b(2).unwrap(), 1).unwrap(), vec![vec![1], vec![2], vec![0], vec![-2], vec![-1]]);
        for n in 2..=3 {
            let c = LieType::c(n).unwrap();
            for r in 1..=n {
                let expect = binom(2 * n, r as isize) - binom(2 * n, r as isize - 2);
                assert_eq!(enumerate_columns(&c, r).unwrap().len(), expect, "C{n} r={r}");
            }
        }
        // dim B(ω_r) = C(2n+1, r) in type B_n (r < n)
        for n in 2..=4 {
            let b = LieType::b(n).unwrap();
            for r in 1..n {
                assert_eq!(enumerate_columns(&b, r).unwrap().len(), binom(2 * n + 1, r as isize), "B{n} r={r}");
            }
        }
        // dim B(ω_r) = C(2n, r) in type D_n (r ≤ n − 2)
        for n in 4..=5 {
            let d = LieType::d(n).unwrap();
            for r in 1..=n - 2 {
                assert_eq!(enumerate_columns(&d, r).unwrap().len(), binom(2 * n, r as isize), "D{n} r={r}");
            }
        }
    }

    // Oracle for splitting: search every set of candidate t-letters and
    // keep the one satisfying the greatest-letter conditions literally.
    fn split_oracle(col: &[Letter], n: usize) -> Option<SplitColumn> {
        let zeros = col.iter().filter(|&&x| x == 0).count();
        let mut zs: Vec<Letter> = col.iter().copied().filter(|&z| z > 0 && col.contains(&-z)).collect();
        zs.sort_by(|a, b| b.cmp(a));
        let bounds: Vec<Letter> = std::iter::repeat_n(n as Letter + 1, zeros).chain(zs.iter().copied()).collect();
        let r = bounds.len();
        let free: Vec<Letter> = (1..=n as Letter).filter(|t| !col.contains(t) && !col.contains(&-t)).collect();
        let valid = |ts: &[Letter]| {
            ts.iter().enumerate().all(|(i, &t)| {
                let cap = if i == 0 { bounds[0] } else { bounds[i].min(ts[i - 1]) };
                t < cap && !free.iter().any(|&u| u > t && u < cap)
            })
        };
        let mut best = None;
        for mut ts in subsets(&free, r) {
            ts.sort_by(|a, b| b.cmp(a));
            if valid(&ts) {
                best = Some(ts);
            }
        }
        let ts = best?;
        let mut left: Vec<Letter> = col.iter().copied().filter(|&x| x != 0 && !zs.contains(&x)).collect();
        let mut right: Vec<Letter> = col.iter().copied().filter(|&x| x != 0 && !zs.contains(&-x)).collect();
        left.extend(ts.iter().copied());
        right.extend(ts.iter().map(|t| -t));
        sort_natural(&mut left, n);
        sort_natural(&mut right, n);
        Some(SplitColumn { left, right })
    }

    #[test]
    fn split_examples() {
        let c3 = LieType::c(3).unwrap();
        assert_eq!(split_c(&c3, &[1, -2]).unwrap(), SplitColumn::new(vec![1, -2], vec![1, -2]));
        assert!(split_c(&c3, &[1, 2, -1]).is_err());
        assert_eq!(split_c(&c3, &[2, 3, -3]).unwrap(), SplitColumn::new(vec![1, 2, -3], vec![2, 3, -1]));
        assert_eq!(split_c(&c3, &[1, 3, -3]).unwrap(), SplitColumn::new(vec![1, 2, -3], vec![1, 3, -2]));
        assert_eq!(split_c(&c3, &[1, 3]).unwrap(), SplitColumn::new(vec![1, 3], vec![1, 3]));
        let b3 = LieType::b(3).unwrap();
        assert_eq!(split_b(&b3, &[2, -1]).unwrap(), SplitColumn::new(vec![2, -1], vec![2, -1]));
        assert_eq!(split_b(&b3, &[3, 0]).unwrap(), SplitColumn::new(vec![2, 3], vec![3, -2]));
        assert_eq!(split_b(&b3, &[0, 0]).unwrap(), SplitColumn::new(vec![2, 3], vec![-3, -2]));
        let d4 = LieType::d(4).unwrap();
        assert_eq!(split_d(&d4, &[1, 2]).unwrap(), SplitColumn::new(vec![1, 2], vec![1, 2]));
        assert_eq!(split_d(&d4, &[4, -4]).unwrap(), SplitColumn::new(vec![3, 4], vec![-4, -3]));
        assert_eq!(split_d(&d4, &[-4, 4]).unwrap(), SplitColumn::new(vec![3, -4], vec![4, -3]));
        assert!(split_d(&d4, &[1, 4, -4]).is_err(), "height 3 is a spin column in D4");
        assert!(split_c(&c3, &[2, 1]).is_err());
    }

    #[test]
    fn split_matches_oracle_and_inverts() {
        for lie in [LieType::b(2).unwrap(), LieType::b(3).unwrap(), LieType::c(2).unwrap(), LieType::c(3).unwrap(), LieType::d(4).unwrap()] {
            for r in 1..=lie.max_height().min(3) {
                for col in enumerate_columns(&lie, r).unwrap() {
                    let p = split(&lie, &col).unwrap();
                    let source = if lie.family() == Family::D { zero_out_d(&col, lie.n()) } else { col.clone() };
                    assert_eq!(Some(p.clone()), split_oracle(&source, lie.n()), "{lie} {col:?}");
                    for half in [&p.left, &p.right] {
                        assert!(half.windows(2).all(|w| natural_key(w[0], lie.n()) < natural_key(w[1], lie.n())));
                        assert!(!half.contains(&0));
                        assert!(half.iter().all(|&x| !half.contains(&-x)));
                    }
                    assert_eq!(unsplit(&lie, &p).unwrap(), col);
                }
            }
        }
    }

    #[test]
    fn extend_examples() {
        let b3 = LieType::b(3).unwrap();
        let p = SplitColumn::new(vec![2], vec![2]);
        assert_eq!(extend(&b3, &p, 1).unwrap(), p);
        assert_eq!(extend(&b3, &p, 2).unwrap(), SplitColumn::new(vec![2, -1], vec![1, 2]));
        let q = SplitColumn::new(vec![1], vec![1]);
        assert_eq!(extend(&b3, &q, 2).unwrap(), SplitColumn::new(vec![1, -2], vec![1, 2]));
        assert_eq!(unextend(&b3, &extend(&b3, &q, 2).unwrap(), 1).unwrap(), q);
        assert_eq!(extend(&b3, &SplitColumn::new(vec![], vec![]), 2).unwrap(), SplitColumn::new(vec![-2, -1], vec![1, 2]));
    }

    #[test]
    fn unsplit_rejects_non_images() {
        let c3 = LieType::c(3).unwrap();
        assert_eq!(unsplit(&c3, &SplitColumn::new(vec![1, 2, -3], vec![2, 3, -1])).unwrap(), vec![2, 3, -3]);
        assert!(unsplit(&c3, &SplitColumn::new(vec![1, 2], vec![1, -3])).is_err());
    }

    #[test]
    fn tensor_counts() {
        let c2 = LieType::c(2).unwrap();
        assert_eq!(enumerate_tensor(&c2, &[1]).unwrap().len(), 4);
        assert_eq!(enumerate_tensor(&c2, &[1, 1]).unwrap().len(), 16);
        let b3 = LieType::b(3).unwrap();
        assert_eq!(enumerate_tensor(&b3, &[2]).unwrap().len(), 21 + 1);
        let a = LieType::a(3).unwrap();
        assert_eq!(enumerate_tensor(&a, &[2, 1]).unwrap().len(), 9);
    }

    #[test]
    fn split_filling_round_trip() {
        for (lie, heights) in [(LieType::b(3).unwrap(), vec![2, 1]), (LieType::c(3).unwrap(), vec![2, 2]), (LieType::d(4).unwrap(), vec![2])] {
            for b in enumerate_tensor(&lie, &heights).unwrap() {
                let f = b.to_split_filling(&lie, &heights).unwrap();
                assert_eq!(f.columns.len(), 2 * heights.len());
                assert_eq!(TableauElement::from_split_filling(&lie, &f).unwrap(), b);
            }
        }
    }
}
