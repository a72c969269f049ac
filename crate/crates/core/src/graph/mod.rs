//! Simple undirected graphs stored as adjacency bitsets.

mod parse;

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

pub use parse::{parse_edge_list, parse_graph_spec};

/// Largest order for which all `2^n` vertex subsets are enumerated.
pub const ENUMERATION_CAP: usize = 26;

/// A subset of the vertices `0..order` of some graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: u32,
    order: u8,
}

impl VertexSet {
    pub fn empty(order: usize) -> Self {
        Self {
            bits: 0,
            order: order as u8,
        }
    }

    pub fn full(order: usize) -> Self {
        Self {
            bits: full_mask(order),
            order: order as u8,
        }
    }

    /// Builds a set from a raw bitmask; bits at or above `order` are rejected.
    pub fn from_bits(order: usize, bits: u32) -> Result<Self> {
        if order > ENUMERATION_CAP {
            return Err(Error::Capacity {
                order,
                cap: ENUMERATION_CAP,
            });
        }
        if bits & !full_mask(order) != 0 {
            return Err(Error::invalid(format!(
                "bitmask {bits:#x} has members outside 0..{order}"
            )));
        }
        Ok(Self {
            bits,
            order: order as u8,
        })
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(order: usize, vertices: I) -> Result<Self> {
        let mut bits = 0u32;
        for v in vertices {
            if v >= order {
                return Err(Error::invalid(format!("vertex {v} outside 0..{order}")));
            }
            bits |= 1 << v;
        }
        Self::from_bits(order, bits)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 32 && self.bits & (1 << v) != 0
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits & other.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.bits)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

struct BitIter(u32);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

pub(crate) fn full_mask(order: usize) -> u32 {
    if order >= 32 {
        u32::MAX
    } else {
        (1u32 << order) - 1
    }
}

/// The classical graph families, named by their spec-language letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `K_n`
    Complete,
    /// `E_n`, no edges
    Empty,
    /// `S_n`, hub 0 joined to every other vertex
    Star,
    /// `P_n`, 0-1-...-(n-1)
    Path,
    /// `C_n`, 0-1-...-(n-1)-0
    Cycle,
    /// `W_n`, hub 0 joined to the rim cycle 1..n−1
    Wheel,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::Complete => 'K',
            Family::Empty => 'E',
            Family::Star => 'S',
            Family::Path => 'P',
            Family::Cycle => 'C',
            Family::Wheel => 'W',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c {
            'K' => Family::Complete,
            'E' => Family::Empty,
            'S' => Family::Star,
            'P' => Family::Path,
            'C' => Family::Cycle,
            'W' => Family::Wheel,
            _ => return None,
        })
    }

    pub fn min_order(self) -> usize {
        match self {
            Family::Cycle => 3,
            Family::Wheel => 4,
            _ => 1,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u32>,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::invalid("graph order must be at least 1"));
        }
        if order > ENUMERATION_CAP {
            return Err(Error::Capacity {
                order,
                cap: ENUMERATION_CAP,
            });
        }
        Ok(Self {
            adj: alloc::vec![0; order],
        })
    }

    /// Builds a simple graph; self-loops and repeated edges are rejected.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        if u >= n || v >= n {
            return Err(Error::invalid(format!("edge {u}-{v} outside 0..{n}")));
        }
        if u == v {
            return Err(Error::invalid(format!("self-loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::invalid(format!("repeated edge {u}-{v}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] & (1 << v) != 0
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet {
            bits: self.adj[v],
            order: self.order() as u8,
        }
    }

    pub(crate) fn adjacency_rows(&self) -> &[u32] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order() {
            for v in BitIter(self.adj[u] >> (u + 1) << (u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn count_degree(&self, d: usize) -> usize {
        (0..self.order()).filter(|&v| self.degree(v) == d).count()
    }

    /// Exterior vertex boundary: vertices outside `s` adjacent to some member.
    pub fn vertex_boundary(&self, s: VertexSet) -> VertexSet {
        VertexSet {
            bits: self.boundary_bits(s.bits & full_mask(self.order())),
            order: self.order() as u8,
        }
    }

    #[inline]
    pub(crate) fn boundary_bits(&self, s: u32) -> u32 {
        let mut reach = 0u32;
        for v in BitIter(s) {
            reach |= self.adj[v];
        }
        reach & !s
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen = 0u32;
        let mut out = Vec::new();
        for start in 0..n {
            if seen & (1 << start) != 0 {
                continue;
            }
            let mut comp = 1u32 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u32;
                for v in BitIter(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(VertexSet {
                bits: comp,
                order: n as u8,
            });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// The subgraph induced on `s`, relabelled in increasing vertex order.
    pub fn induced(&self, s: VertexSet) -> Result<Graph> {
        let members: Vec<usize> = s.iter().filter(|&v| v < self.order()).collect();
        let mut g = Graph::empty(members.len())?;
        for (a, &u) in members.iter().enumerate() {
            for (b, &v) in members.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b)?;
                }
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

pub fn make_family(kind: Family, n: usize) -> Result<Graph> {
    if n < kind.min_order() {
        return Err(Error::invalid(format!(
            "{}{n}: family {:?} requires n >= {}",
            kind.letter(),
            kind,
            kind.min_order()
        )));
    }
    let mut g = Graph::empty(n)?;
    match kind {
        Family::Empty => {}
        Family::Complete => {
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v)?;
                }
            }
        }
        Family::Star => {
            for v in 1..n {
                g.add_edge(0, v)?;
            }
        }
        Family::Path => {
            for v in 1..n {
                g.add_edge(v - 1, v)?;
            }
        }
        Family::Cycle => {
            for v in 1..n {
                g.add_edge(v - 1, v)?;
            }
            g.add_edge(n - 1, 0)?;
        }
        Family::Wheel => {
            for v in 1..n {
                g.add_edge(0, v)?;
            }
            for v in 2..n {
                g.add_edge(v - 1, v)?;
            }
            g.add_edge(n - 1, 1)?;
        }
    }
    Ok(g)
}

/// `g ⊔ h`: `h`'s vertices are shifted by `g.order()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let order = g.order() + h.order();
    if order > ENUMERATION_CAP {
        return Err(Error::Capacity {
            order,
            cap: ENUMERATION_CAP,
        });
    }
    let shift = g.order();
    let mut adj = g.adj.clone();
    adj.extend(h.adj.iter().map(|row| row << shift));
    Ok(Graph { adj })
}

/// `k·g`, the disjoint union of `k` copies.
pub fn repeat_union(k: usize, g: &Graph) -> Result<Graph> {
    if k == 0 {
        return Err(Error::invalid("repeat count must be at least 1"));
    }
    let order = k * g.order();
    if order > ENUMERATION_CAP {
        return Err(Error::Capacity {
            order,
            cap: ENUMERATION_CAP,
        });
    }
    let mut acc = g.clone();
    for _ in 1..k {
        acc = disjoint_union(&acc, g)?;
    }
    Ok(acc)
}
