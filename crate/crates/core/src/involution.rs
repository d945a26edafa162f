//! The tail-swapping involution on path families and transversal intersection
//! numbers.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::drawing::{Drawing, LatticePath, VertexId};
use crate::pathcount::PathFamily;

/// A strict total order on the vertices of a drawing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrder {
    rank: Vec<usize>,
}

impl VertexOrder {
    /// Lexicographic by `(y, x, id)`.
    pub fn by_position(d: &Drawing) -> Self {
        let mut ids: Vec<VertexId> = (0..d.num_vertices()).collect();
        ids.sort_by_key(|&v| (d.pos(v).y, d.pos(v).x, v));
        Self::from_sequence(&ids)
    }

    /// The order in which `seq` lists the vertices. `seq` must be a permutation of
    /// all vertex ids.
    pub fn from_sequence(seq: &[VertexId]) -> Self {
        let mut rank = vec![usize::MAX; seq.len()];
        for (r, &v) in seq.iter().enumerate() {
            rank[v] = r;
        }
        assert!(
            rank.iter().all(|&r| r != usize::MAX),
            "not a permutation of the vertices"
        );
        Self { rank }
    }

    pub fn rank(&self, v: VertexId) -> usize {
        self.rank[v]
    }

    pub fn cmp(&self, a: VertexId, b: VertexId) -> Ordering {
        self.rank[a].cmp(&self.rank[b])
    }
}

/// The least vertex (under `ord`) lying on two or more paths of `family`,
/// together with the two smallest indices of paths through it.
pub fn first_intersection(family: &PathFamily, ord: &VertexOrder) -> Option<(VertexId, usize, usize)> {
    let mut owners: HashMap<VertexId, Vec<usize>> = HashMap::new();
    for (i, p) in family.paths.iter().enumerate() {
        for &v in p.vertices() {
            owners.entry(v).or_default().push(i);
        }
    }
    owners
        .into_iter()
        .filter(|(_, who)| who.len() >= 2)
        .min_by(|a, b| ord.cmp(a.0, b.0))
        .map(|(v, who)| (v, who[0], who[1]))
}

/// Swaps the tails of the two lowest-indexed paths after the least intersection
/// vertex. Vertex-disjoint families are fixed points.
pub fn phi(family: &PathFamily, ord: &VertexOrder) -> PathFamily {
    let Some((x, i, j)) = first_intersection(family, ord) else {
        return family.clone();
    };
    let split = |p: &LatticePath| p.vertices().iter().position(|&v| v == x).unwrap();
    let (pi, pj) = (&family.paths[i], &family.paths[j]);
    let (ki, kj) = (split(pi), split(pj));
    let mut paths = family.paths.clone();
    paths[i] = LatticePath::new(
        pi.vertices()[..ki]
            .iter()
            .chain(&pj.vertices()[kj..])
            .copied()
            .collect(),
    );
    paths[j] = LatticePath::new(
        pj.vertices()[..kj]
            .iter()
            .chain(&pi.vertices()[ki..])
            .copied()
            .collect(),
    );
    let mut connection = family.connection.clone();
    connection.swap(i, j);
    PathFamily { paths, connection }
}

/// A maximal run of consecutive vertices shared by two paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonSubpath {
    pub vertices: Vec<VertexId>,
    /// Index of the first shared vertex in the first path.
    pub p_start: usize,
    /// Index of the first shared vertex in the second path.
    pub q_start: usize,
}

impl CommonSubpath {
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() == 1
    }
}

/// Maximal common subpaths of `p` and `q`, in the order `p` meets them. In a DAG
/// both paths visit shared vertices in the same order.
pub fn common_subpaths(p: &LatticePath, q: &LatticePath) -> Vec<CommonSubpath> {
    let in_q: HashMap<VertexId, usize> = q.vertices().iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let mut out: Vec<CommonSubpath> = Vec::new();
    let mut prev: Option<(usize, usize)> = None;
    for (k, &v) in p.vertices().iter().enumerate() {
        let Some(&kq) = in_q.get(&v) else {
            prev = None;
            continue;
        };
        match (prev, out.last_mut()) {
            (Some((kp, kq0)), Some(run)) if kp + 1 == k && kq0 + 1 == kq => run.vertices.push(v),
            _ => out.push(CommonSubpath {
                vertices: vec![v],
                p_start: k,
                q_start: kq,
            }),
        }
        prev = Some((k, kq));
    }
    out
}

fn direction(d: &Drawing, from: VertexId, to: VertexId) -> (i128, i128) {
    let (a, b) = (d.pos(from), d.pos(to));
    ((b.x - a.x) as i128, (b.y - a.y) as i128)
}

fn cross(a: (i128, i128), b: (i128, i128)) -> i128 {
    a.0 * b.1 - a.1 * b.0
}

/// True when `t` lies strictly inside the counterclockwise sweep from `a` to `b`.
fn in_ccw_sector(a: (i128, i128), b: (i128, i128), t: (i128, i128)) -> bool {
    let ab = cross(a, b);
    if ab > 0 {
        cross(a, t) > 0 && cross(t, b) > 0
    } else if ab < 0 {
        !(cross(b, t) >= 0 && cross(t, a) >= 0)
    } else {
        cross(a, t) > 0
    }
}

/// Whether `t` (an edge direction at `w`) lies on the left of `q`, which passes
/// through `w` from `q_prev` to `q_next`.
fn left_of(d: &Drawing, w: VertexId, q_prev: VertexId, q_next: VertexId, t: VertexId) -> bool {
    in_ccw_sector(direction(d, w, q_next), direction(d, w, q_prev), direction(d, w, t))
}

/// Whether `p` arrives at and leaves `c` on different sides of `q`. Subpaths that
/// contain an endpoint of either path are classified as non-transversal.
pub fn is_transversal(p: &LatticePath, q: &LatticePath, c: &CommonSubpath, d: &Drawing) -> bool {
    let (pv, qv) = (p.vertices(), q.vertices());
    let (pa, pb) = (c.p_start, c.p_start + c.len());
    let (qa, qb) = (c.q_start, c.q_start + c.len());
    if pa == 0 || qa == 0 || pb + 1 >= pv.len() || qb + 1 >= qv.len() {
        return false;
    }
    let arrive = left_of(d, pv[pa], qv[qa - 1], qv[qa + 1], pv[pa - 1]);
    let leave = left_of(d, pv[pb], qv[qb - 1], qv[qb + 1], pv[pb + 1]);
    arrive != leave
}

/// `I(p, q)`: the number of transversal common subpaths.
pub fn pair_intersection_number(p: &LatticePath, q: &LatticePath, d: &Drawing) -> usize {
    common_subpaths(p, q)
        .iter()
        .filter(|c| is_transversal(p, q, c, d))
        .count()
}

/// `I(P)`, summed over unordered pairs of paths.
pub fn intersection_number(family: &PathFamily, d: &Drawing) -> usize {
    let ps = &family.paths;
    (0..ps.len())
        .flat_map(|i| (i + 1..ps.len()).map(move |j| (i, j)))
        .map(|(i, j)| pair_intersection_number(&ps[i], &ps[j], d))
        .sum()
}

/// True when no path visits a marked point other than its own endpoints.
pub fn avoids_interior_marks(family: &PathFamily, is_marked: impl Fn(VertexId) -> bool) -> bool {
    family.paths.iter().all(|p| path_avoids_interior_marks(p, &is_marked))
}

pub fn path_avoids_interior_marks(p: &LatticePath, is_marked: impl Fn(VertexId) -> bool) -> bool {
    let v = p.vertices();
    v.len() <= 2 || v[1..v.len() - 1].iter().all(|&w| !is_marked(w))
}
