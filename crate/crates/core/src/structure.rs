//! Structural decompositions of `Π^{a,b}_n` and its hypercube embedding.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{build_graph, HoradamGraph};
use crate::oracle::fibonacci_cube;
use crate::sequences::fibonacci_number;
use crate::words::{decompose_blocks, Params, PrimitiveBlock, Word};

fn violation(msg: impl Into<String>) -> Error {
    Error::InvariantViolation(msg.into())
}

/// Split of `Π_n` by leading primitive block: `a` copies of `Π_{n-1}` and `b`
/// copies of `Π_{n-2}`, with the edges running between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalPartition {
    /// `letter_copies[k]`: vertices `kα`, in vertex order.
    pub letter_copies: Vec<Vec<usize>>,
    /// `block_copies[j]`: vertices `0(a+j)β`, in vertex order.
    pub block_copies: Vec<Vec<usize>>,
    /// `letter_cross[k]`: edges between letter copies `k` and `k+1`.
    pub letter_cross: Vec<Vec<(usize, usize)>>,
    /// `block_cross[j]`: edges between block copies `j` and `j+1`.
    pub block_cross: Vec<Vec<(usize, usize)>>,
    /// Edges `0(a-1)β ~ 0aβ` joining letter copy 0 to block copy 0.
    pub bridge: Vec<(usize, usize)>,
}

impl CanonicalPartition {
    pub fn cross_edge_count(&self) -> usize {
        self.letter_cross.iter().map(Vec::len).sum::<usize>()
            + self.block_cross.iter().map(Vec::len).sum::<usize>()
            + self.bridge.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Copy {
    Letter(usize),
    Block(usize),
}

/// Decomposes `g` by leading block and checks every count and the
/// drop-prefix isomorphism of each copy onto the smaller cube.
pub fn canonical_partition(g: &HoradamGraph) -> Result<CanonicalPartition> {
    let p = *g.params();
    if p.n < 2 {
        return Err(Error::InvalidParams(format!(
            "canonical partition needs n >= 2, got {p}"
        )));
    }
    let (a, b) = (p.a as usize, p.b as usize);
    let copy_of = |w: &Word| -> Copy {
        let l = w.letters();
        if p.is_block_letter(l[1]) {
            Copy::Block(l[1] as usize - a)
        } else {
            Copy::Letter(l[0] as usize)
        }
    };

    let mut letter_copies = vec![Vec::new(); a];
    let mut block_copies = vec![Vec::new(); b];
    let mut position = Vec::with_capacity(g.order());
    for (i, w) in g.vertices().iter().enumerate() {
        let copy = copy_of(w);
        let list = match copy {
            Copy::Letter(k) => &mut letter_copies[k],
            Copy::Block(j) => &mut block_copies[j],
        };
        position.push((copy, list.len()));
        list.push(i);
    }

    let mut letter_cross = vec![Vec::new(); a.saturating_sub(1)];
    let mut block_cross = vec![Vec::new(); b - 1];
    let mut bridge = Vec::new();
    let mut internal = 0usize;
    for (u, w) in g.edges() {
        match (position[u].0, position[w].0) {
            (x, y) if x == y => internal += 1,
            (Copy::Letter(k), Copy::Letter(l)) if l == k + 1 => letter_cross[k].push((u, w)),
            (Copy::Block(i), Copy::Block(j)) if j == i + 1 => block_cross[i].push((u, w)),
            (Copy::Letter(0), Copy::Block(0)) if g.vertex(u).letters()[1] == p.top_single() => {
                bridge.push((u, w))
            }
            _ => {
                return Err(violation(format!(
                    "edge {:?} ~ {:?} joins copies outside the decomposition",
                    g.vertex(u).letters(),
                    g.vertex(w).letters()
                )))
            }
        }
    }

    let lower1 = build_graph(&p.with_n(p.n - 1))?;
    let lower2 = build_graph(&p.with_n(p.n - 2))?;
    let (s1, s2) = (lower1.order(), lower2.order());
    let expect = |what: &str, got: usize, want: usize| -> Result<()> {
        if got == want {
            Ok(())
        } else {
            Err(violation(format!("{what}: got {got}, expected {want} in {p}")))
        }
    };
    for copy in &letter_copies {
        expect("letter copy size", copy.len(), s1)?;
    }
    for copy in &block_copies {
        expect("block copy size", copy.len(), s2)?;
    }
    for group in &letter_cross {
        expect("letter cross edges", group.len(), s1)?;
    }
    for group in &block_cross {
        expect("block cross edges", group.len(), s2)?;
    }
    expect("bridge edges", bridge.len(), s2)?;
    expect(
        "internal edges",
        internal,
        a * lower1.size() + b * lower2.size(),
    )?;

    // Each copy, with its prefix dropped, is the smaller cube in the same
    // vertex order, with the same neighbor lists.
    let copies = letter_copies
        .iter()
        .map(|c| (c, &lower1, 1))
        .chain(block_copies.iter().map(|c| (c, &lower2, 2)));
    for (copy, lower, drop) in copies {
        for (pos, &u) in copy.iter().enumerate() {
            if g.vertex(u).letters()[drop..] != *lower.vertex(pos).letters() {
                return Err(violation("copy is not a prefixed smaller cube"));
            }
            let inside: Vec<usize> = g
                .neighbors(u)
                .iter()
                .filter(|&&w| position[w].0 == position[u].0)
                .map(|&w| position[w].1)
                .collect();
            if inside != lower.neighbors(pos) {
                return Err(violation("copy adjacency differs from the smaller cube"));
            }
        }
    }

    Ok(CanonicalPartition {
        letter_copies,
        block_copies,
        letter_cross,
        block_cross,
        bridge,
    })
}

/// Binary string over `{0, 1}`, one entry per bit.
pub type FibonacciString = Vec<u8>;

/// Letters below `a` map to 0, the others to 1.
pub fn rho_project(w: &Word, p: &Params) -> FibonacciString {
    w.letters().iter().map(|&l| p.is_block_letter(l) as u8).collect()
}

/// Vertices sharing one `ρ` image; they induce the grid
/// `P_a^{n-2k} □ P_b^k`, `k` the number of 1s in the label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridClass {
    pub label: FibonacciString,
    pub members: Vec<usize>,
    /// `(n - 2k, k)`.
    pub shape: (usize, usize),
}

/// Positions of `w`'s letters that vary freely inside the class of `label`,
/// with their ranges: `(position, lowest letter, side length)`.
fn grid_coordinates(label: &[u8], p: &Params) -> Vec<(usize, u8, usize)> {
    (0..label.len())
        .filter_map(|i| {
            if label[i] == 1 {
                Some((i, p.a as u8, p.b as usize))
            } else if label.get(i + 1) != Some(&1) {
                Some((i, 0, p.a as usize))
            } else {
                None
            }
        })
        .collect()
}

/// Groups vertices by `ρ` image and checks that each group is the grid its
/// label predicts.
pub fn grid_partition(g: &HoradamGraph) -> Result<Vec<GridClass>> {
    let p = *g.params();
    if p.n == 0 {
        return Err(Error::InvalidParams("grid partition needs n >= 1".into()));
    }
    let mut classes: BTreeMap<FibonacciString, Vec<usize>> = BTreeMap::new();
    let mut class_of = Vec::with_capacity(g.order());
    for (i, w) in g.vertices().iter().enumerate() {
        let label = rho_project(w, &p);
        class_of.push(label.clone());
        classes.entry(label).or_default().push(i);
    }
    let want = fibonacci_number(p.n + 1);
    if num_bigint::BigUint::from(classes.len()) != want {
        return Err(violation(format!(
            "{} grid classes, expected {want} in {p}",
            classes.len()
        )));
    }

    let mut internal: BTreeMap<&FibonacciString, usize> = BTreeMap::new();
    for (u, w) in g.edges() {
        if class_of[u] == class_of[w] {
            *internal.entry(&class_of[u]).or_default() += 1;
        }
    }

    let (a, b) = (p.a as u128, p.b as u128);
    let mut out = Vec::with_capacity(classes.len());
    for (label, members) in &classes {
        let k = label.iter().filter(|&&x| x == 1).count();
        if label[0] != 0 || label.windows(2).any(|w| w == [1, 1]) {
            return Err(violation(format!("label {label:?} is not a Fibonacci string")));
        }
        let free = p.n - 2 * k;
        let size = a.pow(free as u32) * b.pow(k as u32);
        if members.len() as u128 != size {
            return Err(violation(format!("class {label:?} has {} vertices, expected {size}", members.len())));
        }
        // (n-2k)(a-1)a^{n-2k-1}b^k + k(b-1)a^{n-2k}b^{k-1}
        let mut edges = 0u128;
        if free > 0 {
            edges += free as u128 * (a - 1) * a.pow(free as u32 - 1) * b.pow(k as u32);
        }
        if k > 0 {
            edges += k as u128 * (b - 1) * a.pow(free as u32) * b.pow(k as u32 - 1);
        }
        let got = internal.get(label).copied().unwrap_or(0) as u128;
        if got != edges {
            return Err(violation(format!("class {label:?} has {got} edges, expected {edges}")));
        }
        // Coordinates are in range and distinct, so the members fill the
        // grid; every internal edge is a unit step along one coordinate, so
        // with matching counts the edge sets coincide.
        let coords = grid_coordinates(label, &p);
        let mut seen = std::collections::HashSet::with_capacity(members.len());
        for &m in members {
            let letters = g.vertex(m).letters();
            let point: Vec<usize> = coords
                .iter()
                .map(|&(i, lo, side)| {
                    let c = letters[i].wrapping_sub(lo) as usize;
                    (c < side).then_some(c)
                })
                .collect::<Option<_>>()
                .ok_or_else(|| violation(format!("{letters:?} leaves the grid of {label:?}")))?;
            if !seen.insert(point) {
                return Err(violation(format!("two members of {label:?} share coordinates")));
            }
            for &nb in g.neighbors(m) {
                if class_of[nb] == *label {
                    let moved = letters
                        .iter()
                        .zip(g.vertex(nb).letters())
                        .position(|(x, y)| x != y)
                        .unwrap_or(usize::MAX);
                    if !coords.iter().any(|&(i, _, _)| i == moved) {
                        return Err(violation("class edge moves a fixed position"));
                    }
                }
            }
        }
        out.push(GridClass {
            label: label.clone(),
            members: members.clone(),
            shape: (free, k),
        });
    }
    Ok(out)
}

/// The graph on `ρ` classes: two classes are adjacent when some edge of `g`
/// joins them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientGraph {
    /// Sorted class labels.
    pub labels: Vec<FibonacciString>,
    /// Index pairs `(i, j)`, `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
}

/// Builds the quotient by `ρ` and checks that dropping the leading 0 of each
/// label is an isomorphism onto the Fibonacci cube `Γ_{n-1}`.
pub fn quotient_graph(g: &HoradamGraph) -> Result<QuotientGraph> {
    let p = *g.params();
    if p.n == 0 {
        return Err(Error::InvalidParams("quotient needs n >= 1".into()));
    }
    let images: Vec<FibonacciString> = g.vertices().iter().map(|w| rho_project(w, &p)).collect();
    let mut labels = images.clone();
    labels.sort_unstable();
    labels.dedup();
    let index = |l: &FibonacciString| labels.binary_search(l).expect("label of a vertex");
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .filter_map(|(u, w)| {
            let (x, y) = (index(&images[u]), index(&images[w]));
            (x != y).then_some((x.min(y), x.max(y)))
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();

    let cube = fibonacci_cube(p.n - 1)?;
    if cube.order() != labels.len() {
        return Err(violation(format!(
            "quotient has {} vertices, Γ_{} has {}",
            labels.len(),
            p.n - 1,
            cube.order()
        )));
    }
    let image: Vec<usize> = labels
        .iter()
        .map(|l| {
            if l[0] != 0 {
                return None;
            }
            cube.index_of(&l[1..])
        })
        .collect::<Option<_>>()
        .ok_or_else(|| violation("quotient label does not map into the Fibonacci cube"))?;
    let mut mapped: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(x, y)| (image[x].min(image[y]), image[x].max(image[y])))
        .collect();
    mapped.sort_unstable();
    if mapped != cube.edges() {
        return Err(violation(format!(
            "quotient of {p} is not isomorphic to Γ_{} under dropping the first bit",
            p.n - 1
        )));
    }
    Ok(QuotientGraph { labels, edges })
}

/// A vertex of a hypercube.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinaryWord(pub Vec<u8>);

impl BinaryWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn hamming(&self, other: &BinaryWord) -> usize {
        self.0.iter().zip(&other.0).filter(|(x, y)| x != y).count()
            + self.0.len().abs_diff(other.0.len())
    }

    /// Coordinate-wise majority.
    pub fn majority(x: &BinaryWord, y: &BinaryWord, z: &BinaryWord) -> BinaryWord {
        BinaryWord(
            x.0.iter()
                .zip(&y.0)
                .zip(&z.0)
                .map(|((&x, &y), &z)| ((x + y + z) >= 2) as u8)
                .collect(),
        )
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for bit in &self.0 {
            write!(f, "{bit}")?;
        }
        Ok(())
    }
}

fn push_run(bits: &mut Vec<u8>, bit: u8, len: usize) {
    bits.extend(std::iter::repeat_n(bit, len));
}

fn block_image(block: PrimitiveBlock, p: &Params, bits: &mut Vec<u8>) {
    let (a, b) = (p.a as usize, p.b as usize);
    match block {
        PrimitiveBlock::Single(k) => {
            let k = k as usize;
            push_run(bits, 0, k + 1);
            push_run(bits, 1, a - 1 - k);
            push_run(bits, 0, b - 1);
        }
        PrimitiveBlock::Pair(l) => {
            let l = l as usize - a;
            push_run(bits, 1, a);
            push_run(bits, 0, b - 1);
            push_run(bits, 0, a);
            push_run(bits, 1, l);
            push_run(bits, 0, b - 1 - l);
        }
    }
}

/// Image of `w` in `Q_{(a+b-1)n}`, block by block.
pub fn sigma_embed(w: &Word, p: &Params) -> Result<BinaryWord> {
    let mut bits = Vec::with_capacity((p.a + p.b - 1) as usize * w.len());
    for block in decompose_blocks(w, p)? {
        block_image(block, p, &mut bits);
    }
    Ok(BinaryWord(bits))
}

/// Preimage of `bits` under `σ`, if any.
pub fn sigma_decode(bits: &BinaryWord, p: &Params) -> Option<Word> {
    let m = (p.a + p.b - 1) as usize;
    if bits.len() != m * p.n {
        return None;
    }
    let blocks: Vec<PrimitiveBlock> = (0..p.a as u8)
        .map(PrimitiveBlock::Single)
        .chain((p.a..p.a + p.b).map(|l| PrimitiveBlock::Pair(l as u8)))
        .collect();
    let images: Vec<(PrimitiveBlock, Vec<u8>)> = blocks
        .into_iter()
        .map(|block| {
            let mut img = Vec::new();
            block_image(block, p, &mut img);
            (block, img)
        })
        .collect();
    let mut letters = Vec::with_capacity(p.n);
    let mut rest = &bits.0[..];
    while !rest.is_empty() {
        let (block, img) = images.iter().find(|(_, img)| rest.starts_with(img))?;
        letters.extend(block.letters());
        rest = &rest[img.len()..];
    }
    Some(Word(letters))
}

/// Median of three vertices by majority of their `σ` images, pulled back.
pub fn median_of_triple(u: &Word, v: &Word, w: &Word, p: &Params) -> Result<Word> {
    let maj = BinaryWord::majority(&sigma_embed(u, p)?, &sigma_embed(v, p)?, &sigma_embed(w, p)?);
    sigma_decode(&maj, p).ok_or_else(|| {
        violation(format!(
            "majority {maj} of {:?}, {:?}, {:?} has no preimage in {p}",
            u.letters(),
            v.letters(),
            w.letters()
        ))
    })
}

/// `σ` images of every vertex of a graph, with reverse lookup.
#[derive(Debug, Clone)]
pub struct SigmaIndex {
    images: Vec<BinaryWord>,
    lookup: HashMap<BinaryWord, usize>,
}

impl SigmaIndex {
    pub fn new(g: &HoradamGraph) -> Result<Self> {
        let images: Vec<BinaryWord> = g
            .vertices()
            .iter()
            .map(|w| sigma_embed(w, g.params()))
            .collect::<Result<_>>()?;
        let lookup: HashMap<BinaryWord, usize> =
            images.iter().cloned().enumerate().map(|(i, img)| (img, i)).collect();
        if lookup.len() != images.len() {
            return Err(violation(format!("σ is not injective on {}", g.params())));
        }
        Ok(SigmaIndex { images, lookup })
    }

    pub fn image(&self, v: usize) -> &BinaryWord {
        &self.images[v]
    }

    pub fn vertex_of(&self, bits: &BinaryWord) -> Option<usize> {
        self.lookup.get(bits).copied()
    }

    /// Vertex index of the majority of three vertices' images.
    pub fn median(&self, u: usize, v: usize, w: usize) -> Option<usize> {
        self.vertex_of(&BinaryWord::majority(&self.images[u], &self.images[v], &self.images[w]))
    }
}

/// Checks that `σ` is injective and that `u ~ w` iff their images are at
/// Hamming distance 1.
pub fn check_embedding(g: &HoradamGraph) -> Result<()> {
    let index = SigmaIndex::new(g)?;
    let width = (g.params().a + g.params().b - 1) as usize * g.params().n;
    let mut unit_pairs = 0usize;
    for u in 0..g.order() {
        if index.image(u).len() != width {
            return Err(violation("σ image has the wrong length"));
        }
        let mut bits = index.image(u).clone();
        for i in 0..width {
            bits.0[i] ^= 1;
            if let Some(w) = index.vertex_of(&bits) {
                if !g.has_edge(u, w) {
                    return Err(violation(format!(
                        "images of {:?} and {:?} are adjacent in the hypercube only",
                        g.vertex(u).letters(),
                        g.vertex(w).letters()
                    )));
                }
                unit_pairs += 1;
            }
            bits.0[i] ^= 1;
        }
    }
    if unit_pairs != 2 * g.size() {
        return Err(violation("some edge does not map to a hypercube edge"));
    }
    Ok(())
}
