//! Domino tilings of (mixed) Aztec rectangles with unit holes, and the
//! correspondence with non-intersecting Delannoy paths.
//!
//! Cells live on the square lattice turned through 45 degrees. A cell is indexed
//! by diagonal coordinates `(a, b)` with `a + b` odd; its centre is
//! `((a - b) / 2, (a + b) / 2)`. The right neighbour of `(a, b)` is
//! `(a + 1, b - 1)` and the one above is `(a + 1, b + 1)`. Cells with `a` even are
//! black.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::drawing::{Drawing, LatticePath, MarkedConfig, VertexId};
use crate::error::{Error, Result};
use crate::lattices::{build_tri_box, theorem51, tri_vertex, xyz, ClosedFormParams, TriCoord, TriStep};
use crate::pathcount::{matrix_m_with, Limits, PathFamily};
use crate::poly::WeightPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub a: i64,
    pub b: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    Black,
    White,
}

impl Cell {
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn is_valid(self) -> bool {
        (self.a + self.b).rem_euclid(2) == 1
    }

    pub fn color(self) -> Color {
        if self.a.rem_euclid(2) == 0 {
            Color::Black
        } else {
            Color::White
        }
    }

    /// Twice the centre, as integers: `(a - b, a + b)`.
    pub fn doubled_center(self) -> (i64, i64) {
        (self.a - self.b, self.a + self.b)
    }

    pub fn right(self) -> Self {
        Self::new(self.a + 1, self.b - 1)
    }

    pub fn left(self) -> Self {
        Self::new(self.a - 1, self.b + 1)
    }

    pub fn up(self) -> Self {
        Self::new(self.a + 1, self.b + 1)
    }

    pub fn down(self) -> Self {
        Self::new(self.a - 1, self.b - 1)
    }

    pub fn translate(self, da: i64, db: i64) -> Self {
        Self::new(self.a + da, self.b + db)
    }

    /// Reading order: bottom row first, left to right.
    fn reading_key(self) -> (i64, i64) {
        (self.a + self.b, self.a - self.b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegionKind {
    /// `AR_{m,n}`: `0 <= a <= 2n`, `0 <= b <= 2m`.
    Full,
    /// `MR_{m,n}`: `AR_{m,n}` without its southwest and southeast boundary rows.
    Mixed,
}

/// An Aztec rectangle or mixed Aztec rectangle with some cells removed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AztecRegion {
    pub m: i64,
    pub n: i64,
    pub kind: RegionKind,
    holes: BTreeSet<Cell>,
}

impl AztecRegion {
    fn new(m: i64, n: i64, kind: RegionKind) -> Result<Self> {
        if m < 1 || n < 1 {
            return Err(Error::InvalidParameters(format!(
                "m = {m} and n = {n} must be positive"
            )));
        }
        Ok(Self {
            m,
            n,
            kind,
            holes: BTreeSet::new(),
        })
    }

    /// True when `c` is a cell of the underlying rectangle (holes included).
    pub fn in_shape(&self, c: Cell) -> bool {
        let lo = match self.kind {
            RegionKind::Full => 0,
            RegionKind::Mixed => 1,
        };
        c.is_valid() && (lo..=2 * self.n).contains(&c.a) && (lo..=2 * self.m).contains(&c.b)
    }

    /// True when `c` is a cell still to be covered.
    pub fn contains(&self, c: Cell) -> bool {
        self.in_shape(c) && !self.holes.contains(&c)
    }

    pub fn holes(&self) -> impl Iterator<Item = Cell> + '_ {
        self.holes.iter().copied()
    }

    pub fn num_holes(&self) -> usize {
        self.holes.len()
    }

    /// Every cell of the rectangle, holes included, in reading order.
    pub fn shape_cells(&self) -> Vec<Cell> {
        let lo = match self.kind {
            RegionKind::Full => 0,
            RegionKind::Mixed => 1,
        };
        let mut cells: Vec<Cell> = (lo..=2 * self.n)
            .flat_map(|a| (lo..=2 * self.m).map(move |b| Cell::new(a, b)))
            .filter(|c| c.is_valid())
            .collect();
        cells.sort_by_key(|c| c.reading_key());
        cells
    }

    /// The cells to be covered, in reading order.
    pub fn cells(&self) -> Vec<Cell> {
        self.shape_cells()
            .into_iter()
            .filter(|c| !self.holes.contains(c))
            .collect()
    }

    /// `(black, white)` counts of the cells to be covered.
    pub fn color_counts(&self) -> (usize, usize) {
        let cells = self.cells();
        let black = cells.iter().filter(|c| c.color() == Color::Black).count();
        (black, cells.len() - black)
    }

    /// White and black holes in reading order.
    pub fn holes_by_color(&self) -> (Vec<Cell>, Vec<Cell>) {
        let mut hs: Vec<Cell> = self.holes().collect();
        hs.sort_by_key(|c| c.reading_key());
        hs.into_iter().partition(|c| c.color() == Color::White)
    }

    /// The same rectangle with its holes moved by `(da, db)`.
    pub fn translate_holes(&self, da: i64, db: i64) -> Result<Self> {
        let moved: Vec<Cell> = self.holes().map(|c| c.translate(da, db)).collect();
        let mut r = self.clone();
        r.holes.clear();
        punch_holes(&r, &moved)
    }
}

/// `MR_{m,n}`.
pub fn build_mixed_aztec(m: i64, n: i64) -> Result<AztecRegion> {
    AztecRegion::new(m, n, RegionKind::Mixed)
}

/// `AR_{m,n}`.
pub fn build_aztec_rectangle(m: i64, n: i64) -> Result<AztecRegion> {
    AztecRegion::new(m, n, RegionKind::Full)
}

/// The Aztec diamond of order `n`.
pub fn build_aztec_diamond(n: i64) -> Result<AztecRegion> {
    build_aztec_rectangle(n, n)
}

/// Adds holes to a region. Each hole must be a remaining cell, listed once.
pub fn punch_holes(r: &AztecRegion, holes: &[Cell]) -> Result<AztecRegion> {
    let mut out = r.clone();
    for &h in holes {
        if !r.in_shape(h) {
            return Err(Error::InvalidRegion(format!(
                "hole ({}, {}) lies outside the region",
                h.a, h.b
            )));
        }
        if !out.holes.insert(h) {
            return Err(Error::InvalidRegion(format!("hole ({}, {}) is listed twice", h.a, h.b)));
        }
    }
    Ok(out)
}

/// A domino: two edge-adjacent cells.
pub type Domino = (Cell, Cell);

/// A set of dominoes covering a region exactly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tiling(pub Vec<Domino>);

struct CellIndex {
    cells: Vec<Cell>,
    index: HashMap<Cell, usize>,
}

impl CellIndex {
    fn new(r: &AztecRegion, limits: &Limits) -> Result<Self> {
        let cells = r.cells();
        if cells.len() > limits.max_cells {
            return Err(Error::LimitExceeded {
                what: "cells",
                limit: limits.max_cells,
            });
        }
        let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let window = cells
            .iter()
            .enumerate()
            .flat_map(|(k, c)| {
                [c.right(), c.up()]
                    .into_iter()
                    .filter_map(|d| index.get(&d))
                    .map(move |&j| j - k)
            })
            .max()
            .unwrap_or(0);
        // the memo key holds the occupancy of the next `window` cells in a u128
        if window >= 128 {
            return Err(Error::LimitExceeded {
                what: "cells between vertical neighbours",
                limit: 127,
            });
        }
        Ok(Self { cells, index })
    }

    /// Partners of cell `k` that come later in reading order.
    fn forward(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        let c = self.cells[k];
        [c.right(), c.up()]
            .into_iter()
            .filter_map(|d| self.index.get(&d).copied())
    }
}

/// Number of domino tilings, by filling the first empty cell in reading order
/// and memoising on the occupancy of the cells just ahead of it.
pub fn count_tilings_brute(r: &AztecRegion, limits: &Limits) -> Result<BigUint> {
    let (black, white) = r.color_counts();
    if black != white {
        return Ok(BigUint::zero());
    }
    let idx = CellIndex::new(r, limits)?;
    let mut memo: HashMap<(usize, u128), BigUint> = HashMap::new();
    fn go(idx: &CellIndex, k: usize, mask: u128, memo: &mut HashMap<(usize, u128), BigUint>) -> BigUint {
        if k == idx.cells.len() {
            return BigUint::one();
        }
        if mask & 1 == 1 {
            return go(idx, k + 1, mask >> 1, memo);
        }
        if let Some(v) = memo.get(&(k, mask)) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for j in idx.forward(k) {
            let bit = 1u128 << (j - k);
            if mask & bit == 0 {
                total += go(idx, k + 1, (mask | bit) >> 1, memo);
            }
        }
        memo.insert((k, mask), total.clone());
        total
    }
    Ok(go(&idx, 0, 0, &mut memo))
}

/// Every domino tiling, in a deterministic order. At most `limits.max_tuples`
/// tilings are produced.
pub fn enumerate_tilings(r: &AztecRegion, limits: &Limits) -> Result<Vec<Tiling>> {
    let (black, white) = r.color_counts();
    if black != white {
        return Ok(Vec::new());
    }
    let idx = CellIndex::new(r, limits)?;
    let mut filled = vec![false; idx.cells.len()];
    let mut current = Vec::new();
    let mut out = Vec::new();
    fn go(
        idx: &CellIndex,
        filled: &mut [bool],
        current: &mut Vec<Domino>,
        out: &mut Vec<Tiling>,
        limit: usize,
    ) -> Result<()> {
        let Some(k) = filled.iter().position(|&f| !f) else {
            if out.len() >= limit {
                return Err(Error::LimitExceeded { what: "tilings", limit });
            }
            out.push(Tiling(current.clone()));
            return Ok(());
        };
        for j in idx.forward(k).collect::<Vec<_>>() {
            if !filled[j] {
                filled[k] = true;
                filled[j] = true;
                current.push((idx.cells[k], idx.cells[j]));
                go(idx, filled, current, out, limit)?;
                current.pop();
                filled[k] = false;
                filled[j] = false;
            }
        }
        Ok(())
    }
    go(&idx, &mut filled, &mut current, &mut out, limits.max_tuples)?;
    Ok(out)
}

/// The path instance attached to a mixed Aztec rectangle with holes.
#[derive(Clone, Debug)]
pub struct AztecPaths {
    pub drawing: Drawing,
    pub config: MarkedConfig,
    /// Vertex of each black (or virtual black) cell whose left-edge midpoint is a
    /// lattice point.
    pub vertex_of: HashMap<Cell, VertexId>,
    /// White holes sitting immediately left of a black hole; each forces a
    /// path of length zero and is left out of the marked points.
    pub forced_pairs: usize,
}

/// Lattice step taken by a domino, from the left-edge midpoint of its black cell.
fn domino_step(black: Cell, white: Cell) -> Option<(TriStep, Cell)> {
    if white == black.down() {
        Some((TriStep::P, Cell::new(black.a, black.b - 2)))
    } else if white == black.up() {
        Some((TriStep::Q, Cell::new(black.a + 2, black.b)))
    } else if white == black.right() {
        Some((TriStep::Diagonal, Cell::new(black.a + 2, black.b - 2)))
    } else {
        None
    }
}

/// Builds the triangular-lattice path instance of a holey mixed Aztec rectangle,
/// hosted by a full lattice rhombus with one spare row on every side.
pub fn region_to_paths(r: &AztecRegion) -> Result<AztecPaths> {
    region_to_paths_with_margin(r, 1)
}

pub fn region_to_paths_with_margin(r: &AztecRegion, margin: i64) -> Result<AztecPaths> {
    if r.kind != RegionKind::Mixed {
        return Err(Error::InvalidRegion(
            "the path correspondence is defined for mixed Aztec rectangles".into(),
        ));
    }
    if margin < 0 {
        return Err(Error::InvalidParameters(format!(
            "margin {margin} must be non-negative"
        )));
    }
    let (white_holes, black_holes) = r.holes_by_color();
    if white_holes.len() != black_holes.len() {
        return Err(Error::NoTilings {
            white: white_holes.len(),
            black: black_holes.len(),
        });
    }
    let shape = r.shape_cells();
    let mut points: BTreeSet<Cell> = BTreeSet::new();
    for &c in &shape {
        points.insert(if c.color() == Color::Black { c } else { c.right() });
    }
    let a0 = points.iter().map(|c| c.a).min().unwrap();
    let b0 = points.iter().map(|c| c.b).max().unwrap();
    let a1 = points.iter().map(|c| c.a).max().unwrap();
    let b1 = points.iter().map(|c| c.b).min().unwrap();
    let to_tri = |c: Cell| TriCoord::new((b0 - c.b) / 2 + margin, (c.a - a0) / 2 + margin);
    let to_cell = |t: TriCoord| Cell::new(a0 + 2 * (t.q - margin), b0 - 2 * (t.p - margin));
    let (p_max, q_max) = ((b0 - b1) / 2 + 2 * margin, (a1 - a0) / 2 + 2 * margin);
    let vars = xyz();
    let w = |n| WeightPoly::var(&vars, n).expect("x, y, z are declared");
    let (x, y, z) = (w("x"), w("y"), w("z"));
    let drawing = build_tri_box((0, p_max.max(1)), (0, q_max.max(1)), [&x, &y, &z], |t, step| {
        let black = to_cell(t);
        if !r.contains(black) {
            return false;
        }
        let white = match step {
            TriStep::P => black.down(),
            TriStep::Q => black.up(),
            TriStep::Diagonal => black.right(),
        };
        r.contains(white)
    })?;
    let mut vertex_of = HashMap::new();
    for &c in &points {
        vertex_of.insert(c, tri_vertex(&drawing, to_tri(c))?);
    }
    let mut starts = Vec::new();
    let mut ends = Vec::new();
    let black_set: BTreeSet<Cell> = black_holes.iter().copied().collect();
    let mut forced_pairs = 0;
    let forced: BTreeSet<Cell> = white_holes
        .iter()
        .map(|c| c.right())
        .filter(|c| black_set.contains(c))
        .collect();
    for h in &white_holes {
        if !forced.contains(&h.right()) {
            starts.push(vertex_of[&h.right()]);
        } else {
            forced_pairs += 1;
        }
    }
    for h in &black_holes {
        if !forced.contains(h) {
            ends.push(vertex_of[h]);
        }
    }
    let config = MarkedConfig::new(&drawing, starts, ends)?;
    Ok(AztecPaths {
        drawing,
        config,
        vertex_of,
        forced_pairs,
    })
}

/// Reads off the path family of a tiling.
pub fn tiling_to_paths(inst: &AztecPaths, tiling: &Tiling) -> Result<PathFamily> {
    let mut next: HashMap<VertexId, VertexId> = HashMap::new();
    for &(c1, c2) in &tiling.0 {
        let (black, white) = if c1.color() == Color::Black { (c1, c2) } else { (c2, c1) };
        if let Some((_, to)) = domino_step(black, white) {
            let from = inst.vertex_of.get(&black);
            let to = inst.vertex_of.get(&to);
            match (from, to) {
                (Some(&f), Some(&t)) => {
                    next.insert(f, t);
                }
                _ => return Err(Error::Internal("domino outside the lattice".into())),
            }
        }
    }
    let ends = inst.config.ends();
    let mut paths = Vec::new();
    let mut connection = Vec::new();
    for &u in inst.config.starts() {
        let mut vs = vec![u];
        let mut cur = u;
        while let Some(&t) = next.get(&cur) {
            vs.push(t);
            cur = t;
            if vs.len() > inst.drawing.num_vertices() {
                return Err(Error::Internal("cycle in tiling paths".into()));
            }
        }
        let j = ends
            .iter()
            .position(|&v| v == cur)
            .ok_or_else(|| Error::Internal("tiling path does not end at a black hole".into()))?;
        paths.push(LatticePath::new(vs));
        connection.push(j);
    }
    Ok(PathFamily::new(paths, connection))
}

/// Number of tilings as the sign-normalised determinant of the path instance,
/// evaluated at `x = y = z = 1`.
pub fn count_tilings_via_paths(r: &AztecRegion, limits: &Limits) -> Result<BigUint> {
    count_tilings_via_paths_with_margin(r, 1, limits)
}

pub fn count_tilings_via_paths_with_margin(r: &AztecRegion, margin: i64, limits: &Limits) -> Result<BigUint> {
    let inst = match region_to_paths_with_margin(r, margin) {
        Ok(i) => i,
        Err(Error::NoTilings { .. }) => return Ok(BigUint::zero()),
        Err(e) => return Err(e),
    };
    let count = matrix_m_with(&inst.drawing, &inst.config, limits)?
        .normalized_count
        .eval_ones();
    count
        .to_biguint()
        .ok_or_else(|| Error::Internal(format!("negative tiling count {count}")))
}

/// The closed form for four holes in a row, at `x = y = z = 1`.
pub fn aztec_formula(a: u32, b: u32, c: u32) -> Result<BigUint> {
    let v = theorem51(ClosedFormParams::new(a, b, c)?)?.eval_ones();
    v.to_biguint()
        .ok_or_else(|| Error::Internal(format!("negative closed form {v}")))
}

/// Offsets along a row of the four holes: white, white, black, black.
pub fn hole_row_offsets(params: ClosedFormParams) -> [i64; 4] {
    let (a, b, c) = (params.a as i64, params.b as i64, params.c as i64);
    [0, 2 * a, 2 * a + 2 * b + 1, 2 * a + 2 * b + 2 * c + 1]
}

/// The four holes in a row, starting at the white cell `first`.
pub fn hole_row(params: ClosedFormParams, first: Cell) -> Result<[Cell; 4]> {
    if !first.is_valid() || first.color() != Color::White {
        return Err(Error::InvalidParameters(format!(
            "the leftmost hole ({}, {}) must be a white cell",
            first.a, first.b
        )));
    }
    Ok(hole_row_offsets(params).map(|o| Cell::new(first.a + o, first.b - o)))
}

/// `MR_{m,n}(a,b,c)` with its leftmost hole at `first`.
pub fn four_hole_region(params: ClosedFormParams, m: i64, n: i64, first: Cell) -> Result<AztecRegion> {
    punch_holes(&build_mixed_aztec(m, n)?, &hole_row(params, first)?)
}

/// The smallest `(m, n)` whose mixed rectangle holds the row of holes, with the
/// leftmost hole placed to make that possible.
pub fn minimal_four_hole_region(params: ClosedFormParams) -> Result<AztecRegion> {
    let span = hole_row_offsets(params)[3];
    // the row runs from a = 1 up to a = 1 + span, and from b = 1 + span down to b = 1
    let first = Cell::new(1, 1 + span);
    let half = (span + 2) / 2;
    four_hole_region(params, half, half, first)
}

/// Several distinct enclosing rectangles and hole positions for the same
/// separations: the minimal one, then ones grown by a row on either side, with
/// the holes shifted.
pub fn four_hole_placements(params: ClosedFormParams) -> Result<Vec<AztecRegion>> {
    let min = minimal_four_hole_region(params)?;
    let first = min.holes_by_color().0[0];
    let (m, n) = (min.m, min.n);
    let mut out = vec![min.clone()];
    out.push(four_hole_region(params, m + 1, n, first.translate(0, 2))?);
    out.push(four_hole_region(params, m, n + 1, first.translate(2, 0))?);
    out.push(four_hole_region(params, m + 1, n + 1, first.translate(2, 2))?);
    out.push(four_hole_region(params, m + 1, n + 1, first)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathcount::brute_force_nonintersecting;

    fn l() -> Limits {
        Limits::default()
    }

    /// Independent tiling count: a plain search over cells with no memo.
    fn naive_count(r: &AztecRegion) -> u64 {
        let cells: BTreeSet<Cell> = r.cells().into_iter().collect();
        fn go(free: &mut BTreeSet<Cell>) -> u64 {
            let Some(&c) = free.iter().min_by_key(|c| c.reading_key()) else {
                return 1;
            };
            free.remove(&c);
            let mut total = 0;
            for d in [c.right(), c.up(), c.left(), c.down()] {
                if free.remove(&d) {
                    total += go(free);
                    free.insert(d);
                }
            }
            free.insert(c);
            total
        }
        go(&mut cells.clone())
    }

    #[test]
    fn shapes_and_colors() {
        let d = build_aztec_diamond(1).unwrap();
        assert_eq!(d.cells().len(), 4);
        for n in 1..5 {
            assert_eq!(build_aztec_diamond(n).unwrap().cells().len() as i64, 2 * n * (n + 1));
        }
        let mr = build_mixed_aztec(1, 1).unwrap();
        let cells = mr.cells();
        assert_eq!(cells, vec![Cell::new(1, 2), Cell::new(2, 1)]);
        assert_eq!(cells[0].right(), cells[1]);
        assert_eq!(cells[0].color(), Color::White);
        let mr = build_mixed_aztec(3, 5).unwrap();
        assert_eq!(mr.cells().len(), 30);
        assert_eq!(mr.color_counts(), (15, 15));
        // the top-right side of the rectangle is black
        let ar = build_aztec_rectangle(3, 5).unwrap();
        assert!((0..=6)
            .filter(|b| b % 2 == 1)
            .all(|b| Cell::new(10, b).color() == Color::Black));
        assert_eq!(ar.cells().len(), 2 * 15 + 3 + 5);
    }

    #[test]
    fn hole_validation() {
        let r = build_mixed_aztec(2, 2).unwrap();
        assert!(punch_holes(&r, &[]).unwrap() == r);
        assert!(punch_holes(&r, &[Cell::new(0, 1)]).is_err());
        assert!(punch_holes(&r, &[Cell::new(2, 2)]).is_err());
        assert!(punch_holes(&r, &[Cell::new(1, 2), Cell::new(1, 2)]).is_err());
    }

    #[test]
    fn known_counts() {
        for n in 1..=4 {
            assert_eq!(
                count_tilings_brute(&build_aztec_diamond(n).unwrap(), &l()).unwrap(),
                BigUint::from(1u32) << (n * (n + 1) / 2) as usize
            );
        }
        for m in 1..=4 {
            for n in 1..=4 {
                let r = build_mixed_aztec(m, n).unwrap();
                assert!(count_tilings_brute(&r, &l()).unwrap().is_one());
                assert!(count_tilings_via_paths(&r, &l()).unwrap().is_one());
            }
        }
    }

    #[test]
    fn brute_force_matches_naive_search() {
        let r = build_aztec_rectangle(2, 3).unwrap();
        assert_eq!(count_tilings_brute(&r, &l()).unwrap(), BigUint::from(naive_count(&r)));
        let r = punch_holes(&build_mixed_aztec(3, 3).unwrap(), &[Cell::new(1, 4), Cell::new(4, 3)]).unwrap();
        assert_eq!(count_tilings_brute(&r, &l()).unwrap(), BigUint::from(naive_count(&r)));
        assert_eq!(enumerate_tilings(&r, &l()).unwrap().len() as u64, naive_count(&r));
    }

    #[test]
    fn parity_kills_tilings() {
        let r = build_mixed_aztec(2, 2).unwrap();
        let one = punch_holes(&r, &[Cell::new(1, 2)]).unwrap();
        assert!(count_tilings_brute(&one, &l()).unwrap().is_zero());
        assert!(count_tilings_via_paths(&one, &l()).unwrap().is_zero());
        assert!(matches!(
            region_to_paths(&one),
            Err(Error::NoTilings { white: 1, black: 0 })
        ));
        let two = punch_holes(&r, &[Cell::new(1, 2), Cell::new(3, 2)]).unwrap();
        assert!(count_tilings_brute(&two, &l()).unwrap().is_zero());
        assert!(count_tilings_via_paths(&two, &l()).unwrap().is_zero());
    }

    #[test]
    fn hole_free_region_has_no_marked_points() {
        let inst = region_to_paths(&build_mixed_aztec(2, 3).unwrap()).unwrap();
        assert_eq!(inst.config.n(), 0);
    }

    #[test]
    fn every_tiling_gives_a_distinct_disjoint_family() {
        let r = punch_holes(&build_mixed_aztec(3, 3).unwrap(), &[Cell::new(1, 4), Cell::new(4, 3)]).unwrap();
        let inst = region_to_paths(&r).unwrap();
        assert_eq!(inst.config.n(), 1);
        let tilings = enumerate_tilings(&r, &l()).unwrap();
        let mut seen = BTreeSet::new();
        for t in &tilings {
            let f = tiling_to_paths(&inst, t).unwrap();
            f.check(&inst.drawing, &inst.config).unwrap();
            assert!(f.is_disjoint());
            seen.insert(format!("{:?}", f.paths));
        }
        assert_eq!(seen.len(), tilings.len());
        let bf = brute_force_nonintersecting(&inst.drawing, &inst.config, &l()).unwrap();
        assert_eq!(bf.eval_ones(), num_bigint::BigInt::from(tilings.len()));
    }

    #[test]
    fn formula_values() {
        assert_eq!(aztec_formula(1, 0, 1).unwrap(), BigUint::from(4u32));
        assert_eq!(aztec_formula(1, 1, 1).unwrap(), BigUint::from(36u32));
        assert_eq!(aztec_formula(2, 0, 1).unwrap(), BigUint::from(24u32));
    }

    #[test]
    fn four_hole_geometry() {
        let p = ClosedFormParams::new(1, 1, 1).unwrap();
        let r = minimal_four_hole_region(p).unwrap();
        let (w, b) = r.holes_by_color();
        assert_eq!(w.len(), 2);
        assert_eq!(b.len(), 2);
        let mut all: Vec<Cell> = r.holes().collect();
        all.sort_by_key(|c| c.reading_key());
        let xs: Vec<i64> = all.iter().map(|c| c.doubled_center().0).collect();
        let ys: Vec<i64> = all.iter().map(|c| c.doubled_center().1).collect();
        assert!(ys.iter().all(|&y| y == ys[0]));
        // gaps of 2a-1, 2b and 2c-1 cells between consecutive holes
        let gaps: Vec<i64> = xs.windows(2).map(|w| (w[1] - w[0]) / 2 - 1).collect();
        assert_eq!(gaps, vec![1, 2, 1]);
        assert!(hole_row(p, Cell::new(2, 1)).is_err());
        let inst = region_to_paths(&r).unwrap();
        let d = &inst.drawing;
        let pts: Vec<_> = inst.config.marked().map(|v| d.pos(v)).collect();
        // u1, u2, v1, v2 on one vertical line of the drawing, a, b, c diagonal steps apart
        assert!(pts.iter().all(|pt| pt.x == pts[0].x));
        let dy: Vec<i64> = pts.windows(2).map(|w| w[1].y - w[0].y).collect();
        assert_eq!(dy, vec![2, 2, 2]);
    }

    #[test]
    fn four_hole_count_small() {
        for (a, b, c) in [(1, 0, 1), (1, 1, 1)] {
            let p = ClosedFormParams::new(a, b, c).unwrap();
            let want = aztec_formula(a, b, c).unwrap();
            let r = minimal_four_hole_region(p).unwrap();
            assert_eq!(count_tilings_brute(&r, &l()).unwrap(), want, "brute ({a},{b},{c})");
            assert_eq!(count_tilings_via_paths(&r, &l()).unwrap(), want, "paths ({a},{b},{c})");
        }
    }

    #[test]
    fn margin_does_not_change_the_count() {
        let r = punch_holes(&build_mixed_aztec(3, 3).unwrap(), &[Cell::new(1, 4), Cell::new(4, 3)]).unwrap();
        let c1 = count_tilings_via_paths_with_margin(&r, 1, &l()).unwrap();
        let c2 = count_tilings_via_paths_with_margin(&r, 3, &l()).unwrap();
        assert_eq!(c1, c2);
    }

    #[test]
    fn full_rectangles_have_no_path_instance() {
        assert!(region_to_paths(&build_aztec_diamond(2).unwrap()).is_err());
    }
}
