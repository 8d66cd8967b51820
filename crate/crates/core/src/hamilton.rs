//! Hamiltonian paths of every `Π^{a,b}_n` and Hamiltonian cycles in the
//! parity classes where they are known to exist.
//!
//! Paths follow the inductive decomposition: the `a` letter copies of
//! `Π_{n-1}` are traversed from `a-1` down to `0` with alternating
//! orientation, then the `b` block copies of `Π_{n-2}`. Cycles are found in
//! an L-shaped grid graph that spans the cube.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::HoradamGraph;
use crate::words::{Params, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum WalkKind {
    Path,
    Cycle,
}

/// A vertex sequence claimed to be a Hamiltonian path or cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Walk {
    pub kind: WalkKind,
    pub vertices: Vec<usize>,
}

/// Parities of `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ParityCase {
    OddEven,
    OddOdd,
    EvenEven,
    EvenOdd,
}

impl ParityCase {
    pub fn of(p: &Params) -> Self {
        match (p.a.is_multiple_of(2), p.b.is_multiple_of(2)) {
            (false, true) => ParityCase::OddEven,
            (false, false) => ParityCase::OddOdd,
            (true, true) => ParityCase::EvenEven,
            (true, false) => ParityCase::EvenOdd,
        }
    }
}

/// The two ends of the constructed Hamiltonian path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndpointContract {
    pub start: Word,
    pub end: Word,
    pub parity_case: ParityCase,
}

fn repeat_prefix(pattern: &[u8], len: usize) -> Vec<u8> {
    pattern.iter().copied().cycle().take(len).collect()
}

/// `(start, end)` letters for length `m >= 1`.
fn endpoints(case: ParityCase, t: u8, z: u8, m: usize) -> (Vec<u8>, Vec<u8>) {
    if m == 1 {
        return (vec![0], vec![t]);
    }
    // (0z)^{m/2}, or (0z)^{(m-1)/2}0 for odd m
    let zigzag = |len: usize| repeat_prefix(&[0, z], len);
    match case {
        ParityCase::OddEven => {
            let mut end = vec![t];
            end.extend(zigzag(m - 1));
            (zigzag(m), end)
        }
        ParityCase::OddOdd => (repeat_prefix(&[0, z, t], m), repeat_prefix(&[t, 0, z], m)),
        ParityCase::EvenEven => {
            let mut start = vec![0, z];
            start.extend(std::iter::repeat_n(t, m - 2));
            (start, vec![t; m])
        }
        ParityCase::EvenOdd => (zigzag(m), vec![t; m]),
    }
}

pub fn path_endpoints(p: &Params) -> Result<EndpointContract> {
    if p.n == 0 {
        return Err(Error::InvalidParams("Hamiltonian path endpoints need n >= 1".into()));
    }
    let case = ParityCase::of(p);
    let (start, end) = endpoints(case, p.top_single(), p.top_letter(), p.n);
    Ok(EndpointContract {
        start: Word(start),
        end: Word(end),
        parity_case: case,
    })
}

/// `seq` or its reverse, whichever begins with `start`.
fn oriented<'a>(seq: &'a [Vec<u8>], start: &[u8]) -> Result<Box<dyn Iterator<Item = &'a Vec<u8>> + 'a>> {
    if seq.first().map(Vec::as_slice) == Some(start) {
        Ok(Box::new(seq.iter()))
    } else if seq.last().map(Vec::as_slice) == Some(start) {
        Ok(Box::new(seq.iter().rev()))
    } else {
        Err(Error::Internal(format!("no sub-path has endpoint {start:?}")))
    }
}

fn prefixed(prefix: &[u8], rest: &[u8]) -> Vec<u8> {
    let mut w = Vec::with_capacity(prefix.len() + rest.len());
    w.extend_from_slice(prefix);
    w.extend_from_slice(rest);
    w
}

/// Hamiltonian path of `Π_2` from the end to the start of its contract.
fn base_two(p: &Params) -> Vec<Vec<u8>> {
    let (a, t, z) = (p.a as u8, p.top_single(), p.top_letter());
    // Forward: 0z down to 0a, then row x of the a×a grid for x = 0..a-1,
    // leftwards on even rows and rightwards on odd ones.
    let mut forward: Vec<Vec<u8>> = (a..=z).rev().map(|l| vec![0, l]).collect();
    for x in 0..=t {
        if x % 2 == 0 {
            forward.extend((0..=t).rev().map(|y| vec![x, y]));
        } else {
            forward.extend((0..=t).map(|y| vec![x, y]));
        }
    }
    forward.reverse();
    forward
}

/// One inductive step: `Π_m` from `Π_{m-1}` and `Π_{m-2}`, from the end to
/// the start of the contract.
fn step(p: &Params, m: usize, h1: &[Vec<u8>], h2: &[Vec<u8>]) -> Result<Vec<Vec<u8>>> {
    let case = ParityCase::of(p);
    let (t, z) = (p.top_single(), p.top_letter());
    let (start, end) = endpoints(case, t, z, m);
    let mut out = Vec::with_capacity(p.a as usize * h1.len() + p.b as usize * h2.len());

    let mut from = end[1..].to_vec();
    for k in (0..=t).rev() {
        for w in oriented(h1, &from)? {
            out.push(prefixed(&[k], w));
            from.clone_from(w);
        }
    }
    // copy 0 must leave through 0(a-1)β into 0aβ
    if from.first() != Some(&t) {
        return Err(Error::Internal(format!(
            "letter copies end at 0{from:?}, which has no edge into the block copies"
        )));
    }
    let mut from = from[1..].to_vec();
    for l in p.a as u8..=z {
        for w in oriented(h2, &from)? {
            out.push(prefixed(&[0, l], w));
            from.clone_from(w);
        }
    }
    if out.last() != Some(&start) {
        return Err(Error::Internal(format!(
            "path of {} ends at {:?}, expected {start:?}",
            p.with_n(m),
            out.last()
        )));
    }
    Ok(out)
}

/// Hamiltonian path of `Π_m` for `m = n`, running from the end of the
/// endpoint contract to its start.
fn reversed_path_words(p: &Params, n: usize) -> Result<Vec<Vec<u8>>> {
    let t = p.top_single();
    let h1: Vec<Vec<u8>> = (0..=t).rev().map(|k| vec![k]).collect();
    match n {
        0 => return Ok(vec![Vec::new()]),
        1 => return Ok(h1),
        2 => return Ok(base_two(p)),
        _ => {}
    }
    let (mut older, mut newer) = (h1, base_two(p));
    for m in 3..=n {
        let next = step(p, m, &newer, &older)?;
        older = std::mem::replace(&mut newer, next);
    }
    Ok(newer)
}

/// Hamiltonian path of `g` from `path_endpoints().start` to `.end`.
pub fn hamiltonian_path(g: &HoradamGraph) -> Result<Walk> {
    let p = *g.params();
    let contract = path_endpoints(&p)?;
    let mut words = reversed_path_words(&p, p.n)?;
    words.reverse();
    let walk = Walk {
        kind: WalkKind::Path,
        vertices: indices(g, words)?,
    };
    if !validate_walk(g, &walk)
        || g.vertex(walk.vertices[0]) != &contract.start
        || g.vertex(*walk.vertices.last().expect("nonempty")) != &contract.end
    {
        return Err(Error::Internal(format!("constructed path of {p} failed validation")));
    }
    Ok(walk)
}

fn indices(g: &HoradamGraph, words: Vec<Vec<u8>>) -> Result<Vec<usize>> {
    words
        .into_iter()
        .map(|w| {
            let w = Word(w);
            g.index_of(&w)
                .ok_or_else(|| Error::Internal(format!("{:?} is not a vertex", w.letters())))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CycleOutcome {
    Cycle(Walk),
    /// Outside the parity classes with a known Hamiltonian cycle.
    NotGuaranteed,
    Impossible { reason: String },
}

/// Whether `(a, b, n)` lies in one of the three classes with a known
/// Hamiltonian cycle: `a, b` even with `n >= 3`; `a` even, `b` odd, `n >= 3`
/// odd; `a, b` odd with `n = 3k - 1 >= 5`.
pub fn cycle_guaranteed(p: &Params) -> bool {
    match ParityCase::of(p) {
        ParityCase::EvenEven => p.n >= 3,
        ParityCase::EvenOdd => p.n >= 3 && p.n % 2 == 1,
        ParityCase::OddOdd => p.n >= 5 && p.n % 3 == 2,
        ParityCase::OddEven => false,
    }
}

pub fn hamiltonian_cycle(g: &HoradamGraph) -> Result<CycleOutcome> {
    let p = *g.params();
    if g.order() % 2 == 1 {
        return Ok(CycleOutcome::Impossible {
            reason: "bipartite graph of odd order".into(),
        });
    }
    if !cycle_guaranteed(&p) {
        return Ok(CycleOutcome::NotGuaranteed);
    }
    let layout = Layout::new(&p)?;
    let cells = layout.cycle()?;
    let words = cells.into_iter().map(|c| layout.word(c)).collect();
    let walk = Walk {
        kind: WalkKind::Cycle,
        vertices: indices(g, words)?,
    };
    if !validate_walk(g, &walk) {
        return Err(Error::Internal(format!("constructed cycle of {p} failed validation")));
    }
    Ok(CycleOutcome::Cycle(walk))
}

type Cell = (isize, isize);

/// A spanning L-shaped grid graph of `Π_n`.
///
/// The main block has `rows.len()` rows and `width` columns; row `r`,
/// column `c` is `main_prefix(c) ++ rows[r]`, so consecutive rows and
/// columns are adjacent. Rows `0..bump_rows` start with `a-1` (for `a = 1`,
/// with a single `0`); they continue to the left over columns `-1..=-bump_width`,
/// cell `(r, -(j+1))` being `bump_prefix(j) ++ rows[r][1..]`.
///
/// For `a >= 2` the rows are a Hamiltonian path of `Π_{n-1}` and
/// `main_prefix(c) = c`, `bump_prefix(j) = 0(a+j)`. For `a = 1` they are a
/// Hamiltonian path of `Π_{n-2}`, `main_prefix(c) = 0c` and
/// `bump_prefix(j) = 00(1+j)`.
struct Layout {
    a: u8,
    rows: Vec<Vec<u8>>,
    width: usize,
    bump_rows: usize,
    bump_width: usize,
}

impl Layout {
    fn new(p: &Params) -> Result<Self> {
        let (a, t) = (p.a as u8, p.top_single());
        let lower = if p.a >= 2 { p.n - 1 } else { p.n - 2 };
        let mut rows = reversed_path_words(p, lower)?;
        let width = if p.a >= 2 { p.a } else { p.b + 1 } as usize;
        let is_bump = |row: &Vec<u8>| {
            row.first() == Some(&t) && row.get(1).is_none_or(|&l| !p.is_block_letter(l))
        };
        let marks: Vec<bool> = rows.iter().map(is_bump).collect();
        let bump_rows = marks.iter().filter(|&&m| m).count();
        let first = marks.iter().position(|&m| m).unwrap_or(0);
        if marks[first..first + bump_rows].iter().any(|&m| !m) {
            return Err(Error::Internal("bump rows are not contiguous".into()));
        }
        if first != 0 {
            if first + bump_rows != rows.len() {
                return Err(Error::Internal("bump rows are not at either end".into()));
            }
            rows.reverse();
        }
        Ok(Layout {
            a,
            rows,
            width,
            bump_rows,
            bump_width: p.b as usize,
        })
    }

    fn word(&self, (r, c): Cell) -> Vec<u8> {
        let row = &self.rows[r as usize];
        if c >= 0 {
            let prefix: &[u8] = if self.a >= 2 { &[c as u8] } else { &[0, c as u8] };
            prefixed(prefix, row)
        } else {
            let l = self.a + (-c - 1) as u8;
            let prefix: &[u8] = if self.a >= 2 { &[0, l] } else { &[0, 0, l] };
            prefixed(prefix, &row[1..])
        }
    }

    fn adjacent(&self, x: Cell, y: Cell) -> bool {
        let inside = |(r, c): Cell| {
            r >= 0
                && (r as usize) < self.rows.len()
                && c < self.width as isize
                && (c >= 0 || ((r as usize) < self.bump_rows && c >= -(self.bump_width as isize)))
        };
        inside(x) && inside(y) && (x.0.abs_diff(y.0) + x.1.abs_diff(y.1)) == 1
    }

    fn cycle(&self) -> Result<Vec<Cell>> {
        let (m, w) = (self.rows.len() as isize, self.width as isize);
        let (k, b) = (self.bump_rows as isize, self.bump_width as isize);
        if (m * w) % 2 == 0 {
            let main = rectangle_cycle(0, m - 1, 0, w - 1)?;
            if k % 2 == 0 {
                Ok(comb(main, k, b))
            } else {
                let bump = rectangle_cycle(0, k - 1, -b, -1)?;
                self.merge(&main, &bump)
            }
        } else {
            let top = rectangle_cycle(0, k - 1, -b, w - 1)?;
            let bottom = rectangle_cycle(k, m - 1, 0, w - 1)?;
            self.merge(&top, &bottom)
        }
    }

    fn merge(&self, c1: &[Cell], c2: &[Cell]) -> Result<Vec<Cell>> {
        merge_cycles(c1, c2, |x, y| self.adjacent(x, y))
            .ok_or_else(|| Error::Internal("no rung joins the two cycles".into()))
    }
}

/// Hamiltonian cycle of the grid on rows `r0..=r1`, columns `c0..=c1`,
/// running down the whole left column first.
fn rectangle_cycle(r0: isize, r1: isize, c0: isize, c1: isize) -> Result<Vec<Cell>> {
    let (h, w) = (r1 - r0 + 1, c1 - c0 + 1);
    if h < 2 || w < 2 || (h * w) % 2 == 1 {
        return Err(Error::Internal(format!("no Hamiltonian cycle in a {h}×{w} grid")));
    }
    let mut out = Vec::with_capacity((h * w) as usize);
    if w % 2 == 0 {
        out.extend((r0..=r1).map(|r| (r, c0)));
        for (i, c) in (c0 + 1..=c1).enumerate() {
            if i % 2 == 0 {
                out.extend((r0 + 1..=r1).rev().map(|r| (r, c)));
            } else {
                out.extend((r0 + 1..=r1).map(|r| (r, c)));
            }
        }
        out.extend((c0 + 1..=c1).rev().map(|c| (r0, c)));
    } else {
        out.extend((c0..=c1).map(|c| (r0, c)));
        for (i, r) in (r0 + 1..=r1).enumerate() {
            if i % 2 == 0 {
                out.extend((c0 + 1..=c1).rev().map(|c| (r, c)));
            } else {
                out.extend((c0 + 1..=c1).map(|c| (r, c)));
            }
        }
        out.extend((r0 + 1..=r1).rev().map(|r| (r, c0)));
    }
    Ok(out)
}

/// Replaces each edge `(2i, 0) ~ (2i+1, 0)`, `2i < k`, by a detour through
/// rows `2i` and `2i+1` of columns `-1..=-b`.
fn comb(cycle: Vec<Cell>, k: isize, b: isize) -> Vec<Cell> {
    let detour = |top: isize| -> Vec<Cell> {
        (1..=b)
            .map(|j| (top, -j))
            .chain((1..=b).rev().map(|j| (top + 1, -j)))
            .collect()
    };
    let len = cycle.len();
    let mut out = Vec::with_capacity(len + (k * b) as usize);
    for i in 0..len {
        let (x, y) = (cycle[i], cycle[(i + 1) % len]);
        out.push(x);
        if x.1 == 0 && y.1 == 0 && x.0.min(y.0) % 2 == 0 && x.0.min(y.0) < k && x.0.abs_diff(y.0) == 1 {
            let mut d = detour(x.0.min(y.0));
            if x.0 > y.0 {
                d.reverse();
            }
            out.extend(d);
        }
    }
    out
}

/// Joins two disjoint cycles: the first edge `u ~ v` of `c1` (in cycle
/// order) with neighbors `u' ~ v'` consecutive on `c2` is exchanged for the
/// rungs `u ~ u'` and `v ~ v'`.
pub fn merge_cycles<T, F>(c1: &[T], c2: &[T], adjacent: F) -> Option<Vec<T>>
where
    T: Copy,
    F: Fn(T, T) -> bool,
{
    let (n1, n2) = (c1.len(), c2.len());
    for i in 0..n1 {
        let (u, v) = (c1[i], c1[(i + 1) % n1]);
        for (j, &u2) in c2.iter().enumerate() {
            if !adjacent(u, u2) {
                continue;
            }
            for forward in [true, false] {
                let jv = if forward { (j + 1) % n2 } else { (j + n2 - 1) % n2 };
                if !adjacent(v, c2[jv]) {
                    continue;
                }
                let mut out = Vec::with_capacity(n1 + n2);
                out.extend((1..=n1).map(|s| c1[(i + s) % n1]));
                // walk c2 from u' away from v', ending at v'
                out.extend((0..n2).map(|s| {
                    if forward {
                        c2[(j + n2 - s) % n2]
                    } else {
                        c2[(j + s) % n2]
                    }
                }));
                return Some(out);
            }
        }
    }
    None
}

/// True iff `walk` visits every vertex of `g` once along edges, returning to
/// the start for a cycle.
pub fn validate_walk(g: &HoradamGraph, walk: &Walk) -> bool {
    let vs = &walk.vertices;
    if vs.len() != g.order() || vs.iter().any(|&v| v >= g.order()) {
        return false;
    }
    let mut seen = vec![false; g.order()];
    for &v in vs {
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    if !vs.windows(2).all(|w| g.has_edge(w[0], w[1])) {
        return false;
    }
    match walk.kind {
        WalkKind::Path => true,
        WalkKind::Cycle => vs.len() >= 3 && g.has_edge(vs[vs.len() - 1], vs[0]),
    }
}
