//! The cube `Π^{a,b}_n` as an immutable graph over its lexicographically
//! ordered vertex list.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::limits::Limits;
use crate::words::{enumerate_words_capped, is_valid_word, Params, Word};

/// Vertices in lexicographic order with CSR adjacency; neighbor lists are
/// strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoradamGraph {
    params: Params,
    vertices: Vec<Word>,
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl HoradamGraph {
    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn vertex(&self, index: usize) -> &Word {
        &self.vertices[index]
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn neighbors(&self, index: usize) -> &[usize] {
        &self.targets[self.offsets[index]..self.offsets[index + 1]]
    }

    pub fn degree(&self, index: usize) -> usize {
        self.offsets[index + 1] - self.offsets[index]
    }

    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        u < self.order() && self.neighbors(u).binary_search(&w).is_ok()
    }

    /// Vertex index of `word`, by binary search over the sorted vertex list.
    pub fn index_of(&self, word: &Word) -> Option<usize> {
        self.vertices.binary_search(word).ok()
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order of index pairs.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |i| {
            self.neighbors(i)
                .iter()
                .copied()
                .filter(move |&j| j > i)
                .map(move |j| (i, j))
        })
    }

    /// Builds a graph from explicit parts, checking that the vertices are
    /// valid and strictly increasing and that every edge obeys the adjacency
    /// rule. Used by importers.
    pub fn from_edges(params: Params, vertices: Vec<Word>, edges: &[(usize, usize)]) -> Result<Self> {
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParams("vertex list is not strictly increasing".into()));
        }
        if let Some(v) = vertices.iter().find(|v| !is_valid_word(v.letters(), &params)) {
            return Err(Error::InvalidWord(format!("{:?} is not a word of {params}", v.letters())));
        }
        let mut lists = vec![Vec::new(); vertices.len()];
        for &(u, w) in edges {
            if u >= vertices.len() || w >= vertices.len() || !adjacent(&vertices[u], &vertices[w])? {
                return Err(Error::InvalidParams(format!("({u}, {w}) is not an edge")));
            }
            lists[u].push(w);
            lists[w].push(u);
        }
        for list in &mut lists {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParams("duplicate edge".into()));
            }
        }
        Ok(Self::from_lists(params, vertices, lists))
    }

    fn from_lists(params: Params, vertices: Vec<Word>, lists: Vec<Vec<usize>>) -> Self {
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        offsets.push(0);
        let mut targets = Vec::with_capacity(lists.iter().map(Vec::len).sum());
        for list in lists {
            targets.extend(list);
            offsets.push(targets.len());
        }
        HoradamGraph {
            params,
            vertices,
            offsets,
            targets,
        }
    }
}

/// True iff `u` and `w` differ in exactly one position, by exactly 1.
pub fn adjacent(u: &Word, w: &Word) -> Result<bool> {
    if u.len() != w.len() {
        return Err(Error::InvalidParams(format!(
            "words of different lengths {} and {}",
            u.len(),
            w.len()
        )));
    }
    let mut diffs = u.letters().iter().zip(w.letters()).filter(|(x, y)| x != y);
    Ok(match (diffs.next(), diffs.next()) {
        (Some((&x, &y)), None) => x.abs_diff(y) == 1,
        _ => false,
    })
}

/// Whether the letter at `i` may be replaced by `letter` in an otherwise valid
/// word.
fn edit_is_valid(letters: &[u8], i: usize, letter: u8, p: &Params) -> bool {
    if letter as u32 >= p.alphabet_size() {
        return false;
    }
    if p.is_block_letter(letter) && (i == 0 || letters[i - 1] != 0) {
        return false;
    }
    // the next letter may need this one to stay 0
    !(letter != 0 && i + 1 < letters.len() && p.is_block_letter(letters[i + 1]))
}

/// All vertices adjacent to `word`, in lexicographic order.
pub fn neighbor_words(word: &Word, p: &Params) -> Vec<Word> {
    let letters = word.letters();
    let mut out = Vec::new();
    for i in 0..letters.len() {
        let l = letters[i];
        for candidate in [l.checked_sub(1), l.checked_add(1)].into_iter().flatten() {
            if edit_is_valid(letters, i, candidate, p) {
                let mut next = letters.to_vec();
                next[i] = candidate;
                out.push(Word(next));
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn build_graph(p: &Params) -> Result<HoradamGraph> {
    build_graph_with(p, &Limits::DEFAULT, Exec::default())
}

/// Builds the graph under the given caps. Neighbor lists come from the
/// `2n` single-letter edits of each vertex, looked up by binary search.
pub fn build_graph_with(p: &Params, limits: &Limits, exec: Exec) -> Result<HoradamGraph> {
    let vertices = enumerate_words_capped(p, limits.vertex_cap)?;
    let lists = exec.map_slice(&vertices, |word| {
        neighbor_words(word, p)
            .iter()
            .map(|nb| {
                vertices
                    .binary_search(nb)
                    .expect("neighbor of a valid word is a valid word")
            })
            .collect::<Vec<_>>()
    });
    Ok(HoradamGraph::from_lists(*p, vertices, lists))
}

/// Degree `k` mapped to the number of vertices of degree `k`.
pub fn degree_histogram(g: &HoradamGraph) -> BTreeMap<usize, u64> {
    let mut hist = BTreeMap::new();
    for i in 0..g.order() {
        *hist.entry(g.degree(i)).or_insert(0) += 1;
    }
    hist
}

/// Letter-sum parity of `w`.
pub fn color_of(w: &Word) -> u8 {
    (w.letter_sum() % 2) as u8
}

/// Per-vertex colors `χ(v) = Σ v_i mod 2`.
pub fn two_coloring(g: &HoradamGraph) -> Vec<u8> {
    g.vertices().iter().map(color_of).collect()
}

/// True iff no edge joins two vertices of the same color.
pub fn is_proper_coloring(g: &HoradamGraph, colors: &[u8]) -> bool {
    colors.len() == g.order() && g.edges().all(|(u, w)| colors[u] != colors[w])
}

/// Shortest-path distances from `source`. An unreachable vertex means the
/// graph was built wrong, and is reported as an internal error.
pub fn bfs_distances(g: &HoradamGraph, source: usize) -> Result<Vec<u32>> {
    if source >= g.order() {
        return Err(Error::InvalidParams(format!(
            "source {source} out of range for {} vertices",
            g.order()
        )));
    }
    let mut dist = vec![u32::MAX; g.order()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == u32::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    if let Some(v) = dist.iter().position(|&d| d == u32::MAX) {
        return Err(Error::Internal(format!(
            "vertex {:?} unreachable from {:?} in {}",
            g.vertex(v).letters(),
            g.vertex(source).letters(),
            g.params()
        )));
    }
    Ok(dist)
}
