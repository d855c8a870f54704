//! Backtracking enumeration: always branch on the least uncovered cell (in
//! `(i, j, orient)` order), trying its partners in increasing order.
//!
//! Every cell below the branching cell is already covered, so an up-cell has
//! at most one candidate partner (the down-cell to its right) and a
//! down-cell at most two.

use std::ops::ControlFlow;

use num_bigint::BigUint;

use super::graph::CellGraph;
use super::{Count, Tiling};
use crate::lattice::{lozenge_of, Region};
use crate::par::Exec;

struct Search<'g> {
    g: &'g CellGraph,
    covered: Vec<bool>,
    placed: Vec<(usize, usize)>,
}

impl<'g> Search<'g> {
    fn new(g: &'g CellGraph) -> Self {
        Search { g, covered: vec![false; g.len()], placed: Vec::new() }
    }

    fn first_uncovered(&self, from: usize) -> Option<usize> {
        (from..self.g.len()).find(|&k| !self.covered[k])
    }

    fn visit<F>(&mut self, from: usize, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[(usize, usize)]) -> ControlFlow<()>,
    {
        let Some(c) = self.first_uncovered(from) else {
            return f(&self.placed);
        };
        self.covered[c] = true;
        for idx in 0..self.g.adj[c].len() {
            let d = self.g.adj[c][idx];
            if self.covered[d] {
                continue;
            }
            self.covered[d] = true;
            self.placed.push((c, d));
            let flow = self.visit(c + 1, f);
            self.placed.pop();
            self.covered[d] = false;
            flow?;
        }
        self.covered[c] = false;
        ControlFlow::Continue(())
    }

    fn count(&mut self, from: usize) -> u128 {
        let Some(c) = self.first_uncovered(from) else {
            return 1;
        };
        self.covered[c] = true;
        let mut total = 0;
        for idx in 0..self.g.adj[c].len() {
            let d = self.g.adj[c][idx];
            if self.covered[d] {
                continue;
            }
            self.covered[d] = true;
            total += self.count(c + 1);
            self.covered[d] = false;
        }
        self.covered[c] = false;
        total
    }
}

/// Every tiling of `r`, in the deterministic search order, stopping after
/// `cap` tilings when a cap is given.
pub fn enumerate_tilings(r: &Region, cap: Option<usize>) -> Vec<Tiling> {
    let mut out = Vec::new();
    for_each_tiling(r, |t| {
        out.push(t);
        if cap.is_some_and(|m| out.len() >= m) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    out
}

/// Streams tilings to `f` in search order until it breaks.
pub fn for_each_tiling<F>(r: &Region, mut f: F)
where
    F: FnMut(Tiling) -> ControlFlow<()>,
{
    let g = CellGraph::new(r);
    if r.up_count() != r.down_count() {
        return;
    }
    let mut search = Search::new(&g);
    let _ = search.visit(0, &mut |placed: &[(usize, usize)]| {
        let lozenges = placed
            .iter()
            .map(|&(a, b)| lozenge_of(g.cells[a], g.cells[b]).expect("graph edges are adjacent"))
            .collect();
        f(Tiling { lozenges })
    });
}

pub fn count_enumeration(r: &Region) -> Count {
    count_enumeration_with(r, Exec::default())
}

/// Count-only search. In parallel mode the first levels of the search tree
/// are expanded sequentially and the resulting subtrees counted concurrently.
pub fn count_enumeration_with(r: &Region, exec: Exec) -> Count {
    if r.up_count() != r.down_count() {
        return BigUint::ZERO;
    }
    let g = CellGraph::new(r);
    if !exec.is_parallel() {
        return BigUint::from(Search::new(&g).count(0));
    }
    // Frontier of partial states: (covered, resume index).
    let mut frontier: Vec<(Vec<bool>, usize)> = vec![(vec![false; g.len()], 0)];
    let mut complete: u128 = 0;
    while frontier.len() < 64 && !frontier.is_empty() {
        let mut next = Vec::new();
        for (covered, from) in frontier {
            let Some(c) = (from..g.len()).find(|&k| !covered[k]) else {
                complete += 1;
                continue;
            };
            for &d in &g.adj[c] {
                if !covered[d] {
                    let mut cov = covered.clone();
                    cov[c] = true;
                    cov[d] = true;
                    next.push((cov, c + 1));
                }
            }
        }
        frontier = next;
    }
    let parts = exec.map(&frontier, |(covered, from)| {
        let mut s = Search::new(&g);
        s.covered.clone_from(covered);
        s.count(*from)
    });
    BigUint::from(complete + parts.into_iter().sum::<u128>())
}
