//! Case lists shared by the integration tests.

#![allow(dead_code)]

use qalcove::LieType;

/// Partitions with parts at most `max_part`, at most `max_len` parts and
/// size at most `max_size`, as column heights `λ'`.
pub fn column_heights_up_to(max_part: usize, max_len: usize, max_size: usize) -> Vec<Vec<usize>> {
    fn go(prev: usize, left: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_len {
            return;
        }
        for p in (1..=prev.min(left)).rev() {
            cur.push(p);
            go(p, left - p, max_len, cur, out);
            cur.pop();
        }
    }
    let mut parts = Vec::new();
    go(max_part, max_size, max_len, &mut Vec::new(), &mut parts);
    parts.into_iter().map(|p| conjugate(&p)).collect()
}

pub fn conjugate(parts: &[usize]) -> Vec<usize> {
    let max = parts.first().copied().unwrap_or(0);
    (1..=max).map(|i| parts.iter().filter(|&&p| p >= i).count()).collect()
}

/// The exhaustive round-trip cases: type `A` with windows of size up to 5
/// (rank up to 4), `λ_1 ≤ 3`,
/// `|λ| ≤ 6`; types `B`, `C` with `n ≤ 3` and `λ ∈ {ω_1, ω_2, ω_1+ω_2, 2ω_1}`
/// where the heights are allowed; type `D_4` with `ω_1`, `ω_2`.
pub fn round_trip_cases() -> Vec<(LieType, Vec<usize>)> {
    let mut cases = Vec::new();
    for n in 2..=5 {
        let lie = LieType::a(n).unwrap();
        for h in column_heights_up_to(3, n - 1, 6) {
            cases.push((lie, h));
        }
    }
    let small = [vec![1], vec![2], vec![2, 1], vec![1, 1]];
    for n in 2..=3 {
        for lie in [LieType::b(n).unwrap(), LieType::c(n).unwrap()] {
            for h in &small {
                if h[0] <= lie.max_height() {
                    cases.push((lie, h.clone()));
                }
            }
        }
    }
    let d4 = LieType::d(4).unwrap();
    cases.push((d4, vec![1]));
    cases.push((d4, vec![2]));
    cases
}
