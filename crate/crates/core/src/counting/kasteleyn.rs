//! Determinant count via a Kasteleyn signing of the cell adjacency graph.
//!
//! Each connected component is embedded in the plane at cell centroids. The
//! faces of that embedding are traced from a rotation system and signs are
//! chosen by solving the face conditions over GF(2): a bounded face whose
//! boundary walk has length `2k` needs a sign product of `(-1)^(k+1)`.
//! The count is then `|det K|`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};

use super::graph::CellGraph;
use super::Count;
use crate::error::{Error, Result};
use crate::lattice::{Region, TriCell};
use crate::linalg::determinant;

/// Neighbors in counter-clockwise angular order around the cell centroid.
fn ccw_neighbors(c: TriCell) -> [TriCell; 3] {
    let (i, j) = (c.i, c.j);
    if c.is_up() {
        [TriCell::down(i, j), TriCell::down(i, j - 1), TriCell::down(i - 1, j)]
    } else {
        [TriCell::up(i + 1, j), TriCell::up(i, j), TriCell::up(i, j + 1)]
    }
}

/// Centroid scaled by 3, in skew coordinates.
fn centroid3(c: TriCell) -> (i64, i64) {
    if c.is_up() {
        (3 * c.j + 1, 3 * c.i + 1)
    } else {
        (3 * c.j + 2, 3 * c.i + 2)
    }
}

/// GF(2) row: coefficient bits plus right-hand side.
struct Row {
    bits: Vec<u64>,
    rhs: bool,
}

impl Row {
    fn toggle(&mut self, k: usize) {
        self.bits[k / 64] ^= 1 << (k % 64);
    }
    fn get(&self, k: usize) -> bool {
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }
    fn xor(&mut self, o: &Row) {
        for (a, b) in self.bits.iter_mut().zip(&o.bits) {
            *a ^= b;
        }
        self.rhs ^= o.rhs;
    }
}

/// Solves the system, setting free variables to zero.
fn solve_gf2(mut rows: Vec<Row>, vars: usize) -> Option<Vec<bool>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..vars {
        let Some(p) = (r..rows.len()).find(|&k| rows[k].get(col)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows.swap_remove(r);
        for row in rows.iter_mut() {
            if row.get(col) {
                row.xor(&pivot);
            }
        }
        rows.push(pivot);
        let last = rows.len() - 1;
        rows.swap(r, last);
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| row.rhs) {
        return None;
    }
    let mut x = vec![false; vars];
    for (k, &col) in pivots.iter().enumerate() {
        x[col] = rows[k].rhs;
    }
    Some(x)
}

fn components(g: &CellGraph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.len()];
    let mut out = Vec::new();
    for s in 0..g.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut k = 0;
        while k < comp.len() {
            for &d in &g.adj[comp[k]] {
                if !seen[d] {
                    seen[d] = true;
                    comp.push(d);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn count_component(g: &CellGraph, comp: &[usize]) -> Result<BigInt> {
    let ups: Vec<usize> = comp.iter().copied().filter(|&k| g.cells[k].is_up()).collect();
    let downs: Vec<usize> = comp.iter().copied().filter(|&k| !g.cells[k].is_up()).collect();
    if ups.len() != downs.len() {
        return Ok(BigInt::ZERO);
    }
    let down_pos: HashMap<usize, usize> = downs.iter().enumerate().map(|(p, &k)| (k, p)).collect();
    let up_pos: HashMap<usize, usize> = ups.iter().enumerate().map(|(p, &k)| (k, p)).collect();

    // Edge ids keyed by (up index, down index).
    let mut edge_id: HashMap<(usize, usize), usize> = HashMap::new();
    for &u in &ups {
        for &d in &g.adj[u] {
            let next = edge_id.len();
            edge_id.entry((u, d)).or_insert(next);
        }
    }
    let edge_of = |a: usize, b: usize| {
        let key = if g.cells[a].is_up() { (a, b) } else { (b, a) };
        edge_id[&key]
    };

    // Rotation system restricted to cells present in the region.
    let rot: HashMap<usize, Vec<usize>> = comp
        .iter()
        .map(|&k| {
            let order = ccw_neighbors(g.cells[k]).iter().filter_map(|c| g.index.get(c).copied()).collect();
            (k, order)
        })
        .collect();

    // Trace faces: after arriving at v from u, leave along the neighbor
    // immediately clockwise from u.
    let mut used: HashMap<(usize, usize), bool> = HashMap::new();
    let mut faces: Vec<Vec<(usize, usize)>> = Vec::new();
    for &a in comp {
        for &b in &rot[&a] {
            if used.contains_key(&(a, b)) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut u, mut v) = (a, b);
            loop {
                used.insert((u, v), true);
                walk.push((u, v));
                let around = &rot[&v];
                let p = around.iter().position(|&w| w == u).expect("rotation contains neighbor");
                let w = around[(p + around.len() - 1) % around.len()];
                (u, v) = (v, w);
                if (u, v) == (a, b) {
                    break;
                }
            }
            faces.push(walk);
        }
    }

    let area2 = |walk: &[(usize, usize)]| -> i64 {
        walk.iter()
            .map(|&(u, v)| {
                let (x1, y1) = centroid3(g.cells[u]);
                let (x2, y2) = centroid3(g.cells[v]);
                x1 * y2 - x2 * y1
            })
            .sum()
    };
    let areas: Vec<i64> = faces.iter().map(|f| area2(f)).collect();
    let outer = (0..faces.len()).min_by_key(|&k| areas[k]).unwrap_or(0);

    let vars = edge_id.len();
    let words = vars.div_ceil(64).max(1);
    let rows: Vec<Row> = faces
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != outer)
        .map(|(_, walk)| {
            let mut row = Row { bits: vec![0; words], rhs: false };
            for &(u, v) in walk {
                row.toggle(edge_of(u, v));
            }
            row.rhs = (walk.len() / 2 + 1) % 2 == 1;
            row
        })
        .collect();
    let signs = solve_gf2(rows, vars)
        .ok_or_else(|| Error::SignAssignment(format!("component of {} cells", comp.len())))?;

    let m = ups.len();
    let mut k = vec![vec![BigInt::ZERO; m]; m];
    for (&(u, d), &e) in &edge_id {
        let s = if signs[e] { -BigInt::one() } else { BigInt::one() };
        k[up_pos[&u]][down_pos[&d]] = s;
    }
    Ok(determinant(&k).abs())
}

/// Number of tilings, as the product of per-component Kasteleyn determinants.
pub fn count_determinant(r: &Region) -> Result<Count> {
    if r.up_count() != r.down_count() {
        return Ok(BigUint::ZERO);
    }
    let g = CellGraph::new(r);
    let mut total = BigInt::one();
    for comp in components(&g) {
        let c = count_component(&g, &comp)?;
        if c == BigInt::ZERO {
            return Ok(BigUint::ZERO);
        }
        total *= c;
    }
    Ok(total.to_biguint().expect("product of absolute values"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_enumeration;
    use crate::regions::{build_h, build_hexagon};

    #[test]
    fn hexagons_match_enumeration() {
        for a in 0..=3 {
            for b in 0..=3 {
                for c in 0..=2 {
                    let r = build_hexagon(a, b, c);
                    assert_eq!(count_determinant(&r).unwrap(), count_enumeration(&r), "hexagon({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn disconnected_and_empty() {
        assert_eq!(count_determinant(&Region::new()).unwrap(), BigUint::one());
        let two: Region = build_hexagon(1, 1, 1).iter().copied().chain(build_hexagon(1, 1, 1).translate(10, 0).iter().copied()).collect();
        assert_eq!(count_determinant(&two).unwrap(), BigUint::from(4u32));
        let unbalanced: Region = [TriCell::up(0, 0), TriCell::down(5, 5)].into_iter().collect();
        assert_eq!(count_determinant(&unbalanced).unwrap(), BigUint::ZERO);
    }

    #[test]
    fn holed_region_matches_enumeration() {
        for (n, x) in [(1, 1), (2, 1), (1, 2), (2, 0)] {
            let r = build_h(n, x);
            assert_eq!(count_determinant(&r).unwrap(), count_enumeration(&r), "H({n},{x})");
        }
    }
}
