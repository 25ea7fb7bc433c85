//! Semistandard Young tableaux: enumeration and counting.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::partition::Partition;

/// Calls `visit` with the content vector (count of each letter `1..=n`)
/// of every SSYT of shape `shape` with entries at most `n`.
///
/// Cells are filled row by row, left to right; each entry must be at least
/// its left neighbour and strictly greater than the entry above.
pub fn for_each_ssyt<F: FnMut(&[u32])>(shape: &Partition, n: u32, mut visit: F) {
    if shape.len() > n as usize {
        return;
    }
    let rows: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let cells: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = rows.iter().map(|&len| vec![0; len]).collect();
    let mut content = vec![0u32; n as usize];

    fn fill<F: FnMut(&[u32])>(
        idx: usize,
        cells: &[(usize, usize)],
        n: u32,
        grid: &mut Vec<Vec<u32>>,
        content: &mut Vec<u32>,
        visit: &mut F,
    ) {
        let Some(&(r, c)) = cells.get(idx) else {
            visit(content);
            return;
        };
        let left = if c > 0 { grid[r][c - 1] } else { 1 };
        let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        // Rows below still need room for strictly larger entries.
        let below = cells_below(grid.len(), r, c, grid);
        let lo = left.max(above);
        let hi = n.saturating_sub(below);
        for v in lo..=hi {
            grid[r][c] = v;
            content[(v - 1) as usize] += 1;
            fill(idx + 1, cells, n, grid, content, visit);
            content[(v - 1) as usize] -= 1;
        }
        grid[r][c] = 0;
    }

    fn cells_below(nrows: usize, r: usize, c: usize, grid: &[Vec<u32>]) -> u32 {
        (r + 1..nrows).take_while(|&rr| grid[rr].len() > c).count() as u32
    }

    fill(0, &cells, n, &mut grid, &mut content, &mut visit);
}

/// Number of SSYT by explicit enumeration. Only sensible for small shapes.
pub fn count_ssyt_enumerated(shape: &Partition, n: u32) -> u64 {
    let mut count = 0u64;
    for_each_ssyt(shape, n, |_| count += 1);
    count
}

/// Counts SSYT with entries in `1..=n` by removing the cells holding the
/// largest letter, which always form a horizontal strip. Results are cached
/// per `(shape, n)`, so one counter can serve a whole sweep.
#[derive(Default)]
pub struct SsytCounter {
    cache: HashMap<(Partition, u32), BigUint>,
}

impl SsytCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&mut self, shape: &Partition, n: u32) -> BigUint {
        if shape.is_empty() {
            return BigUint::one();
        }
        if n == 0 || shape.len() > n as usize {
            return BigUint::zero();
        }
        if n == 1 {
            return if shape.len() == 1 { BigUint::one() } else { BigUint::zero() };
        }
        if let Some(v) = self.cache.get(&(shape.clone(), n)) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for mu in horizontal_strip_removals(shape, n as usize - 1) {
            total += self.count(&mu, n - 1);
        }
        self.cache.insert((shape.clone(), n), total.clone());
        total
    }
}

/// All `μ ⊆ λ` with `λ/μ` a horizontal strip and at most `max_len` rows.
fn horizontal_strip_removals(lambda: &Partition, max_len: usize) -> Vec<Partition> {
    let len = lambda.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(i: usize, lambda: &Partition, len: usize, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == len {
            out.push(Partition::from_parts_unsorted(cur.clone()));
            return;
        }
        let lo = lambda.part(i + 1);
        let hi = if i >= max_len { 0 } else { lambda.part(i) };
        if lo > hi {
            return;
        }
        for v in lo..=hi {
            cur.push(v);
            rec(i + 1, lambda, len, max_len, cur, out);
            cur.pop();
        }
    }
    rec(0, lambda, len, max_len, &mut cur, &mut out);
    out
}

pub fn count_ssyt(shape: &Partition, n: u32) -> BigUint {
    SsytCounter::new().count(shape, n)
}
