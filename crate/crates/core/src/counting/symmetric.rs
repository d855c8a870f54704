//! Counting tilings invariant under a symmetry group.
//!
//! Placing a lozenge forces its whole orbit, so the search branches on the
//! least uncovered cell and places orbits instead of single lozenges.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::graph::CellGraph;
use super::{Count, Tiling};
use crate::error::{Error, Result};
use crate::lattice::{apply_isometry, Isometry, IsometryKind, Point, Region, TriCell};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryTag {
    Plain,
    R,
    V,
    Rv,
}

/// A symmetry class together with the point the group acts about. For `v`
/// the mirror is the vertical line through the center.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetryClass {
    pub tag: SymmetryTag,
    pub center: Point,
}

impl SymmetryClass {
    pub fn new(tag: SymmetryTag, center: Point) -> Self {
        SymmetryClass { tag, center }
    }

    fn generators(&self) -> Vec<Isometry> {
        let r = Isometry::new(IsometryKind::Rotate120, self.center);
        let f = Isometry::new(IsometryKind::ReflectVertical, self.center);
        match self.tag {
            SymmetryTag::Plain => vec![],
            SymmetryTag::R => vec![r],
            SymmetryTag::V => vec![f],
            SymmetryTag::Rv => vec![r, f],
        }
    }

    /// Group elements as words applied left to right.
    fn elements(&self) -> Vec<Vec<Isometry>> {
        let r = Isometry::new(IsometryKind::Rotate120, self.center);
        let f = Isometry::new(IsometryKind::ReflectVertical, self.center);
        let rot = [vec![], vec![r], vec![r, r]];
        match self.tag {
            SymmetryTag::Plain => vec![vec![]],
            SymmetryTag::R => rot.to_vec(),
            SymmetryTag::V => vec![vec![], vec![f]],
            SymmetryTag::Rv => {
                let mut out = rot.to_vec();
                out.extend(rot.iter().map(|w| {
                    let mut w = w.clone();
                    w.push(f);
                    w
                }));
                out
            }
        }
    }

    /// Whether the region is mapped onto itself by every generator.
    pub fn preserves(&self, r: &Region) -> bool {
        self.generators().iter().all(|g| apply_isometry(g, r).is_ok_and(|img| img == *r))
    }

    /// Whether every generator maps the tiling's lozenge set onto itself.
    pub fn fixes(&self, t: &Tiling) -> bool {
        self.generators().iter().all(|g| {
            t.lozenges.iter().all(|l| {
                match (g.map_cell(l.a), g.map_cell(l.b)) {
                    (Ok(a), Ok(b)) => crate::lattice::lozenge_of(a, b).is_ok_and(|m| t.lozenges.contains(&m)),
                    _ => false,
                }
            })
        })
    }
}

fn map_word(word: &[Isometry], c: TriCell) -> Result<TriCell> {
    word.iter().try_fold(c, |c, g| g.map_cell(c))
}

struct OrbitSearch<'g> {
    g: &'g CellGraph,
    /// `perm[e][k]`: index of the image of cell `k` under element `e`.
    perm: Vec<Vec<usize>>,
    partner: Vec<Option<usize>>,
}

impl OrbitSearch<'_> {
    fn count(&mut self, from: usize) -> u128 {
        let Some(c) = (from..self.g.len()).find(|&k| self.partner[k].is_none()) else {
            return 1;
        };
        let mut total = 0;
        for idx in 0..self.g.adj[c].len() {
            let d = self.g.adj[c][idx];
            if self.partner[d].is_some() {
                continue;
            }
            let mut touched = Vec::new();
            let mut ok = true;
            for e in 0..self.perm.len() {
                let (a, b) = (self.perm[e][c], self.perm[e][d]);
                let fits = |p: Option<usize>, want: usize| p.is_none() || p == Some(want);
                if !fits(self.partner[a], b) || !fits(self.partner[b], a) {
                    ok = false;
                    break;
                }
                for (x, y) in [(a, b), (b, a)] {
                    if self.partner[x].is_none() {
                        self.partner[x] = Some(y);
                        touched.push(x);
                    }
                }
            }
            if ok {
                total += self.count(c + 1);
            }
            for x in touched {
                self.partner[x] = None;
            }
        }
        total
    }
}

/// Number of tilings of `r` fixed by every element of the class's group.
pub fn count_symmetric(r: &Region, class: &SymmetryClass) -> Result<Count> {
    for g in class.generators() {
        if !apply_isometry(&g, r).is_ok_and(|img| img == *r) {
            return Err(Error::NotInvariant(g.kind));
        }
    }
    if r.up_count() != r.down_count() {
        return Ok(BigUint::ZERO);
    }
    let g = CellGraph::new(r);
    let perm = class
        .elements()
        .iter()
        .map(|w| g.cells.iter().map(|&c| map_word(w, c).map(|m| g.index[&m])).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let mut s = OrbitSearch { g: &g, perm, partner: vec![None; g.len()] };
    Ok(BigUint::from(s.count(0)))
}
