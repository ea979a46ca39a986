use super::{Edge, PlaneCubicGraph, Vertex};
use std::collections::VecDeque;

/// An undirected simple graph on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<Vertex>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph { adj: vec![Vec::new(); n] }
    }

    /// Builds from adjacency lists; lists are sorted and deduplicated, loops dropped.
    pub fn from_adjacency(mut adj: Vec<Vec<Vertex>>) -> Self {
        for (v, list) in adj.iter_mut().enumerate() {
            list.retain(|&w| w != v);
            list.sort_unstable();
            list.dedup();
        }
        SimpleGraph { adj }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        let mut g = SimpleGraph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn add_edge(&mut self, a: Vertex, b: Vertex) {
        if a == b || self.has_edge(a, b) {
            return;
        }
        let pa = self.adj[a].binary_search(&b).unwrap_err();
        self.adj[a].insert(pa, b);
        let pb = self.adj[b].binary_search(&a).unwrap_err();
        self.adj[b].insert(pb, a);
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for (v, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&w| v < w).map(|&w| Edge(v, w)));
        }
        out
    }

    /// The subgraph induced by `keep`, vertices renumbered in the order given.
    /// Returns the subgraph and the map from new to old ids.
    pub fn induced(&self, keep: &[Vertex]) -> (SimpleGraph, Vec<Vertex>) {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                let mut l: Vec<Vertex> =
                    self.adj[v].iter().filter(|&&w| index[w] != usize::MAX).map(|&w| index[w]).collect();
                l.sort_unstable();
                l
            })
            .collect();
        (SimpleGraph { adj }, keep.to_vec())
    }

    /// `G - removed`, keeping the remaining vertices in increasing order.
    pub fn without_vertices(&self, removed: &[Vertex]) -> (SimpleGraph, Vec<Vertex>) {
        let mut gone = vec![false; self.order()];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<Vertex> = (0..self.order()).filter(|&v| !gone[v]).collect();
        self.induced(&keep)
    }

    /// `G - edges`, same vertex set.
    pub fn without_edges(&self, edges: &[Edge]) -> SimpleGraph {
        let mut adj = self.adj.clone();
        for e in edges {
            adj[e.0].retain(|&w| w != e.1);
            adj[e.1].retain(|&w| w != e.0);
        }
        SimpleGraph { adj }
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        self.components_avoiding(&vec![false; self.order()])
    }

    /// Components of the graph with the `blocked` vertices deleted.
    pub fn components_avoiding(&self, blocked: &[bool]) -> Vec<Vec<Vertex>> {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if blocked[s] || comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !blocked[w] && comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Finds a planar rotation system by exhaustive search over the two
    /// cyclic orders at each vertex. Only intended for small cubic graphs.
    pub fn planar_cubic_embedding(&self) -> Option<PlaneCubicGraph> {
        let n = self.order();
        if self.adj.iter().any(|l| l.len() != 3) {
            return None;
        }
        let base: Vec<[Vertex; 3]> = self.adj.iter().map(|l| [l[0], l[1], l[2]]).collect();
        // Vertex 0 keeps its order: mirror images are equally good.
        for mask in 0u64..(1u64 << (n - 1)) {
            let rot: Vec<Vec<Vertex>> = base
                .iter()
                .enumerate()
                .map(|(v, &[a, b, c])| if v > 0 && mask >> (v - 1) & 1 == 1 { vec![a, c, b] } else { vec![a, b, c] })
                .collect();
            if let Ok(g) = PlaneCubicGraph::from_rotation(rot) {
                return Some(g);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_and_removal() {
        let g = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (3, 4)]);
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4], vec![5]]);
        let (h, map) = g.without_vertices(&[1]);
        assert_eq!(map, vec![0, 2, 3, 4, 5]);
        assert_eq!(h.size(), 1);
        assert!(h.has_edge(2, 3));
        let k = g.without_edges(&[Edge(0, 1)]);
        assert_eq!(k.size(), 2);
    }

    #[test]
    fn k33_has_no_planar_embedding() {
        let k33 = SimpleGraph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        assert!(k33.planar_cubic_embedding().is_none());
        let k4 = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(k4.planar_cubic_embedding().unwrap().faces().faces.len(), 4);
    }
}
