use std::collections::HashMap;

use crate::lattice::{neighbors, Region, TriCell};

/// Cells of a region in lexicographic order with their in-region neighbors.
pub(crate) struct CellGraph {
    pub cells: Vec<TriCell>,
    pub index: HashMap<TriCell, usize>,
    /// Neighbor indices, ascending.
    pub adj: Vec<Vec<usize>>,
}

impl CellGraph {
    pub fn new(r: &Region) -> Self {
        let cells: Vec<TriCell> = r.iter().copied().collect();
        let index: HashMap<TriCell, usize> = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let adj = cells
            .iter()
            .map(|&c| {
                let mut v: Vec<usize> = neighbors(c).iter().filter_map(|d| index.get(d).copied()).collect();
                v.sort_unstable();
                v
            })
            .collect();
        CellGraph { cells, index, adj }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }
}
