#![allow(dead_code)]

use frieze::cyclo::RingElement;
use frieze::{BigInt, Frieze, Ring};

/// Parses hand-copied table entries such as `t+2st`, `1+s+st`, `2t` built from
/// named ring elements. Independent of the library's renderer and parser.
pub fn entry(text: &str, ring: &Ring, names: &[(char, RingElement<BigInt>)]) -> RingElement<BigInt> {
    let mut acc = ring.zero();
    for term in text.split('+') {
        let digits: String = term.chars().take_while(char::is_ascii_digit).collect();
        let coef: i64 = if digits.is_empty() { 1 } else { digits.parse().unwrap() };
        let mut value = ring.integer(BigInt::from(coef));
        for ch in term[digits.len()..].chars() {
            let (_, g) = names.iter().find(|(n, _)| *n == ch).unwrap_or_else(|| panic!("bad entry {text}"));
            value = &value * g;
        }
        acc = &acc + &value;
    }
    acc
}

pub fn table(rows: &[&[&str]], ring: &Ring, names: &[(char, RingElement<BigInt>)]) -> Vec<Vec<RingElement<BigInt>>> {
    rows.iter().map(|r| r.iter().map(|e| entry(e, ring, names)).collect()).collect()
}

/// Checks a printed frieze fragment against a pattern, up to horizontal shift
/// and reflection. `rows[k]` is printed row `k + first_row`, where row -1 is
/// the top row of zeros and row 0 the upper row of ones; as printed, entry p
/// of row i sits at half-column `2p + (i + 1) % 2`.
pub fn matches_table(f: &Frieze, rows: &[Vec<RingElement<BigInt>>], first_row: isize) -> bool {
    let m = f.m() as isize;
    let zero = f.ring().zero();
    let ours = |i: isize, h: isize| -> &RingElement<BigInt> {
        if i < 0 {
            return &zero;
        }
        let j = (h - i).div_euclid(2).rem_euclid(m);
        f.entry(i as usize, j as usize)
    };
    for sigma in [1isize, -1] {
        for shift in (1..4 * m).step_by(2) {
            let ok = rows.iter().enumerate().all(|(k, row)| {
                let i = k as isize + first_row;
                if i > f.width() as isize + 2 {
                    return false;
                }
                row.iter().enumerate().all(|(p, e)| {
                    let h = 2 * p as isize + (i + 1).rem_euclid(2);
                    ours(i, sigma * h + shift) == e
                })
            });
            if ok {
                return true;
            }
        }
    }
    false
}

/// Number of dissections of a convex m-gon with k diagonals,
/// `C(m-3, k) C(m+k-1, k) / (k+1)`.
pub fn kirkman_cayley(m: u64, k: u64) -> u64 {
    num_integer::binomial(m - 3, k) * num_integer::binomial(m + k - 1, k) / (k + 1)
}

pub fn dissection_count_formula(m: u64) -> u64 {
    (0..=m - 3).map(|k| kirkman_cayley(m, k)).sum()
}

pub fn catalan(n: u64) -> u64 {
    num_integer::binomial(2 * n, n) / (n + 1)
}

/// Counts non-crossing diagonal subsets by testing every subset of the
/// candidate diagonals. Returns (all, maximal) counts.
pub fn brute_force_counts(m: usize) -> (u64, u64) {
    let diags: Vec<(usize, usize)> = (0..m)
        .flat_map(|a| (a + 2..m).map(move |b| (a, b)))
        .filter(|&(a, b)| !(a == 0 && b == m - 1))
        .collect();
    let n = diags.len();
    let cross = |(a, b): (usize, usize), (c, d): (usize, usize)| {
        let distinct = a != c && a != d && b != c && b != d;
        distinct && ((a < c && c < b) != (a < d && d < b))
    };
    let mut conflict = vec![0u64; n];
    for i in 0..n {
        for j in 0..n {
            if cross(diags[i], diags[j]) {
                conflict[i] |= 1 << j;
            }
        }
    }
    let (mut all, mut full) = (0, 0);
    for mask in 0u64..(1 << n) {
        if (0..n).all(|i| mask & (1 << i) == 0 || conflict[i] & mask == 0) {
            all += 1;
            if mask.count_ones() as usize == m - 3 {
                full += 1;
            }
        }
    }
    (all, full)
}
