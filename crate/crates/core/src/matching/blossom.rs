//! Edmonds' blossom algorithm, O(n^3).

use super::Matching;
use crate::graph::{Edge, SimpleGraph, Vertex};
use std::collections::VecDeque;

const NONE: usize = usize::MAX;

struct Search<'a> {
    g: &'a SimpleGraph,
    mate: Vec<Vertex>,
    parent: Vec<Vertex>,
    base: Vec<Vertex>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    on_path: Vec<bool>,
    queue: VecDeque<Vertex>,
}

impl<'a> Search<'a> {
    fn new(g: &'a SimpleGraph) -> Self {
        let n = g.order();
        Search {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            on_path: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&mut self, mut a: Vertex, mut b: Vertex) -> Vertex {
        self.on_path.iter_mut().for_each(|x| *x = false);
        loop {
            a = self.base[a];
            self.on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: Vertex, b: Vertex, mut child: Vertex) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from the exposed vertex `root`; returns the
    /// exposed endpoint of an augmenting path if one exists.
    fn find_path(&mut self, root: Vertex) -> Option<Vertex> {
        let n = self.g.order();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.g.degree(v) {
                let to = self.g.neighbors(v)[idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: Vertex) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

/// A maximum-cardinality matching. After a greedy start, one alternating
/// search runs from each exposed vertex; when every search fails there is
/// no augmenting path and the matching is maximum.
pub fn maximum_matching(g: &SimpleGraph) -> Matching {
    let n = g.order();
    let mut s = Search::new(g);
    for v in 0..n {
        if s.mate[v] == NONE {
            if let Some(&w) = g.neighbors(v).iter().find(|&&w| s.mate[w] == NONE) {
                s.mate[v] = w;
                s.mate[w] = v;
            }
        }
    }
    for v in 0..n {
        if s.mate[v] == NONE {
            if let Some(end) = s.find_path(v) {
                s.augment(end);
            }
        }
    }
    let edges = (0..n).filter(|&v| s.mate[v] != NONE && v < s.mate[v]).map(|v| Edge(v, s.mate[v])).collect();
    Matching::new(edges)
}
