//! Brute-force checks, written independently of the main constructions, and
//! Fibonacci cubes.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::{adjacent, bfs_distances, HoradamGraph};
use crate::limits::Limits;
use crate::structure::SigmaIndex;
use crate::words::is_valid_word;

fn check_cap(what: &'static str, size: usize, cap: u64) -> Result<()> {
    if size as u64 > cap {
        Err(Error::limit(what, size, cap))
    } else {
        Ok(())
    }
}

/// Edge count by testing every vertex pair.
pub fn brute_edge_count(g: &HoradamGraph) -> Result<u64> {
    brute_edge_count_with(g, &Limits::DEFAULT, Exec::default())
}

pub fn brute_edge_count_with(g: &HoradamGraph, limits: &Limits, exec: Exec) -> Result<u64> {
    check_cap("pairwise edge scan", g.order(), limits.brute_edge_cap)?;
    let vs = g.vertices();
    Ok(exec.sum_range(vs.len(), |i| {
        vs[i + 1..]
            .iter()
            .filter(|w| adjacent(&vs[i], w).unwrap_or(false))
            .count() as u64
    }))
}

/// Number of induced `Q_k`: pairs of a base vertex `v` and a `k`-set of
/// positions such that raising any subset of those positions by one keeps
/// the word valid.
pub fn brute_subcube_count(g: &HoradamGraph, k: usize) -> Result<u64> {
    brute_subcube_count_with(g, k, &Limits::DEFAULT, Exec::default())
}

pub fn brute_subcube_count_with(g: &HoradamGraph, k: usize, limits: &Limits, exec: Exec) -> Result<u64> {
    check_cap("subcube scan", g.order(), limits.subcube_cap)?;
    if k > limits.subcube_dim_cap {
        return Err(Error::limit("subcube dimension", k, limits.subcube_dim_cap as u64));
    }
    let p = *g.params();
    let positions: Vec<Vec<usize>> = combinations(p.n, k);
    Ok(exec.sum_range(g.order(), |v| {
        let base = g.vertex(v).letters();
        positions
            .iter()
            .filter(|dirs| {
                (0u32..1 << k).all(|mask| {
                    let mut word = base.to_vec();
                    for (bit, &i) in dirs.iter().enumerate() {
                        if mask >> bit & 1 == 1 {
                            word[i] += 1;
                        }
                    }
                    is_valid_word(&word, &p)
                })
            })
            .count() as u64
    }))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// For every triple of distinct vertices, exactly one vertex lies on
/// geodesics between all three pairs, and it is the majority-rule median.
pub fn brute_median_closed(g: &HoradamGraph) -> Result<bool> {
    brute_median_closed_with(g, &Limits::DEFAULT, Exec::default())
}

pub fn brute_median_closed_with(g: &HoradamGraph, limits: &Limits, exec: Exec) -> Result<bool> {
    check_cap("median triple scan", g.order(), limits.median_cap)?;
    let n = g.order();
    let dist: Vec<Vec<u32>> = exec
        .map_range(n, |v| bfs_distances(g, v))
        .into_iter()
        .collect::<Result<_>>()?;
    // interval[x * n + y]: bitset of vertices on some x-y geodesic
    let words = n.div_ceil(64);
    let interval: Vec<Vec<u64>> = exec.map_range(n * n, |xy| {
        let (x, y) = (xy / n, xy % n);
        let mut set = vec![0u64; words];
        for m in 0..n {
            if dist[x][m] + dist[m][y] == dist[x][y] {
                set[m / 64] |= 1 << (m % 64);
            }
        }
        set
    });
    let sigma = SigmaIndex::new(g)?;
    Ok(exec.all_range(n, |x| {
        for y in x + 1..n {
            for z in y + 1..n {
                let (ixy, ixz, iyz) = (&interval[x * n + y], &interval[x * n + z], &interval[y * n + z]);
                let mut count = 0;
                let mut found = 0;
                for i in 0..words {
                    let common = ixy[i] & ixz[i] & iyz[i];
                    if common != 0 {
                        count += common.count_ones();
                        found = i * 64 + common.trailing_zeros() as usize;
                    }
                }
                if count != 1 || sigma.median(x, y, z) != Some(found) {
                    return false;
                }
            }
        }
        true
    }))
}

/// The Fibonacci cube `Γ_m`: binary strings of length `m` with no `11`,
/// adjacent at Hamming distance 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibonacciCube {
    pub dimension: usize,
    /// Vertices as integers whose binary expansion (most significant bit
    /// first) is the string; increasing, so also lexicographic.
    codes: Vec<u32>,
}

impl FibonacciCube {
    pub fn order(&self) -> usize {
        self.codes.len()
    }

    pub fn vertex(&self, i: usize) -> Vec<u8> {
        let code = self.codes[i];
        (0..self.dimension)
            .rev()
            .map(|bit| (code >> bit & 1) as u8)
            .collect()
    }

    pub fn index_of(&self, bits: &[u8]) -> Option<usize> {
        if bits.len() != self.dimension || bits.iter().any(|&b| b > 1) {
            return None;
        }
        let code = bits.iter().fold(0u32, |acc, &b| acc << 1 | b as u32);
        self.codes.binary_search(&code).ok()
    }

    /// Sorted pairs `(i, j)`, `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &code) in self.codes.iter().enumerate() {
            for bit in 0..self.dimension {
                let other = code ^ (1 << bit);
                if other > code {
                    if let Ok(j) = self.codes.binary_search(&other) {
                        out.push((i, j));
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}

pub fn fibonacci_cube(m: usize) -> Result<FibonacciCube> {
    let cap = Limits::DEFAULT.fibonacci_dim_cap;
    if m > cap {
        return Err(Error::limit("Fibonacci cube dimension", m, cap as u64));
    }
    let codes = (0u32..1 << m).filter(|c| c & (c >> 1) == 0).collect();
    Ok(FibonacciCube { dimension: m, codes })
}
