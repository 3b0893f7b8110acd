use serde::Serialize;

use super::complex::SimplicialComplex;
use crate::subset::Subset;

/// Facets as vertices; `{F, G}` is an edge iff `|F ∩ G| = dim Δ`.
///
/// On non-pure complexes the rule is applied literally: only pairs meeting in
/// a face of dimension `dim Δ - 1` are joined, whatever the facet sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    pub facets: Vec<Subset>,
    pub edges: Vec<(usize, usize)>,
    pub components: usize,
}

#[derive(Serialize)]
struct DualGraphJson {
    facets: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    components: usize,
}

impl DualGraph {
    pub fn is_connected(&self) -> bool {
        self.components <= 1
    }

    /// Component label of every facet; labels are the smallest facet index in the component.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.facets.len());
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        let mut smallest = vec![usize::MAX; self.facets.len()];
        for i in 0..self.facets.len() {
            let r = uf.find(i);
            smallest[r] = smallest[r].min(i);
        }
        (0..self.facets.len()).map(|i| smallest[uf.find(i)]).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(DualGraphJson {
            facets: self.facets.iter().map(|f| f.elements()).collect(),
            edges: self.edges.clone(),
            components: self.components,
        })
        .expect("plain data")
    }
}

pub fn dual_graph(complex: &SimplicialComplex) -> DualGraph {
    let facets = complex.facets().to_vec();
    let Some(dim) = complex.dimension() else {
        return DualGraph {
            facets,
            edges: Vec::new(),
            components: 0,
        };
    };
    let mut edges = Vec::new();
    let mut uf = UnionFind::new(facets.len());
    for j in 0..facets.len() {
        for i in 0..j {
            if facets[i].intersection(facets[j]).len() as isize == dim {
                edges.push((i, j));
                uf.union(i, j);
            }
        }
    }
    DualGraph {
        components: uf.count(),
        facets,
        edges,
    }
}

struct UnionFind {
    parent: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            sets: n,
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
            self.sets -= 1;
        }
    }

    fn count(&self) -> usize {
        self.sets
    }
}
