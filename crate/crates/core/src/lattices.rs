//! Square and triangular lattice builders, and the closed forms for weighted
//! Delannoy, Schröder, binomial and Catalan numbers and the four-point counts.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Zero};

use crate::drawing::{Drawing, Edge, MarkedConfig, Vertex, VertexId};
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::poly::{variables, WeightPoly};

/// The `x, y, z` variable list used by every closed form.
pub fn xyz() -> Arc<[String]> {
    variables(&["x", "y", "z"])
}

fn xyz_vars(vars: &Arc<[String]>) -> (WeightPoly, WeightPoly, WeightPoly) {
    let v = |n| WeightPoly::var(vars, n).expect("x, y, z are declared");
    (v("x"), v("y"), v("z"))
}

/// Square grid `(0..=w) x (0..=h)`, east edges weighted `wx`, north edges `wy`.
pub fn build_grid(w: i64, h: i64, wx: WeightPoly, wy: WeightPoly) -> Result<Drawing> {
    if w < 1 || h < 1 {
        return Err(Error::InvalidParameters(format!(
            "grid {w}x{h}: sides must be positive"
        )));
    }
    let vars = wx.vars().clone();
    let id = |x: i64, y: i64| (y * (w + 1) + x) as VertexId;
    let mut vertices = Vec::new();
    for y in 0..=h {
        for x in 0..=w {
            vertices.push(Vertex {
                label: format!("v{x}_{y}"),
                pos: Point::new(x, y),
            });
        }
    }
    let mut edges = Vec::new();
    for y in 0..=h {
        for x in 0..=w {
            if x < w {
                edges.push(Edge {
                    src: id(x, y),
                    dst: id(x + 1, y),
                    weight: wx.clone(),
                    in_subgraph: true,
                });
            }
            if y < h {
                edges.push(Edge {
                    src: id(x, y),
                    dst: id(x, y + 1),
                    weight: wy.clone(),
                    in_subgraph: true,
                });
            }
        }
    }
    Drawing::new(vars, vertices, edges, id(0, 0), id(w, h))
}

/// A point of the triangular lattice in the coordinates where the three edge
/// directions are `(1,0)`, `(0,1)` and `(1,1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriCoord {
    pub p: i64,
    pub q: i64,
}

impl TriCoord {
    pub const fn new(p: i64, q: i64) -> Self {
        Self { p, q }
    }

    /// Plane position `(q - p, p + q)`; all three edge directions point upward.
    pub fn to_plane(self) -> Point {
        Point::new(self.q - self.p, self.p + self.q)
    }

    pub fn label(self) -> String {
        format!("t{}_{}", self.p, self.q)
    }
}

/// Which kind of triangular-lattice step an edge is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriStep {
    /// `(1, 0)`, weight `x`
    P,
    /// `(0, 1)`, weight `y`
    Q,
    /// `(1, 1)`, weight `z`
    Diagonal,
}

/// Triangular lattice on the box `p0..=p1, q0..=q1`. `keep` decides which edges
/// belong to the subgraph; the others are kept as host-only edges.
pub fn build_tri_box(
    (p0, p1): (i64, i64),
    (q0, q1): (i64, i64),
    [wx, wy, wz]: [&WeightPoly; 3],
    keep: impl Fn(TriCoord, TriStep) -> bool,
) -> Result<Drawing> {
    if p1 < p0 || q1 < q0 || (p0 == p1 && q0 == q1) {
        return Err(Error::InvalidParameters("empty triangular box".into()));
    }
    let vars = wx.vars().clone();
    let width = q1 - q0 + 1;
    let id = |c: TriCoord| ((c.p - p0) * width + (c.q - q0)) as VertexId;
    let mut vertices = Vec::new();
    for p in p0..=p1 {
        for q in q0..=q1 {
            let c = TriCoord::new(p, q);
            vertices.push(Vertex {
                label: c.label(),
                pos: c.to_plane(),
            });
        }
    }
    let mut edges = Vec::new();
    for p in p0..=p1 {
        for q in q0..=q1 {
            let c = TriCoord::new(p, q);
            let steps = [
                (TriStep::P, TriCoord::new(p + 1, q), wx),
                (TriStep::Q, TriCoord::new(p, q + 1), wy),
                (TriStep::Diagonal, TriCoord::new(p + 1, q + 1), wz),
            ];
            for (step, to, w) in steps {
                if to.p <= p1 && to.q <= q1 {
                    edges.push(Edge {
                        src: id(c),
                        dst: id(to),
                        weight: w.clone(),
                        in_subgraph: keep(c, step),
                    });
                }
            }
        }
    }
    Drawing::new(
        vars,
        vertices,
        edges,
        id(TriCoord::new(p0, q0)),
        id(TriCoord::new(p1, q1)),
    )
}

/// Rhombus `0 <= p, q <= n` of the triangular lattice with weights `x`, `y`, `z`
/// on the `(1,0)`, `(0,1)`, `(1,1)` steps.
pub fn build_tri_rhombus(n: i64, wx: &WeightPoly, wy: &WeightPoly, wz: &WeightPoly) -> Result<Drawing> {
    if n < 1 {
        return Err(Error::InvalidParameters(format!("rhombus size {n} must be positive")));
    }
    build_tri_box((0, n), (0, n), [wx, wy, wz], |_, _| true)
}

/// Rhombus with the standard symbolic weights `x, y, z`.
pub fn xyz_rhombus(n: i64) -> Result<Drawing> {
    let (x, y, z) = xyz_vars(&xyz());
    build_tri_rhombus(n, &x, &y, &z)
}

pub fn tri_vertex(d: &Drawing, c: TriCoord) -> Result<VertexId> {
    d.vertex_at(c.to_plane()).ok_or_else(|| Error::UnknownVertex(c.label()))
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        BigInt::zero()
    } else {
        binomial(big(n), big(k))
    }
}

/// `sum_i C(n,i) C(k,i) x^(n-i) y^(k-i) (xy + z)^i`.
pub fn weighted_delannoy(n: u32, k: u32) -> WeightPoly {
    let vars = xyz();
    let (x, y, z) = xyz_vars(&vars);
    let xy_z = &(&x * &y) + &z;
    let mut total = WeightPoly::zero(&vars);
    for i in 0..=n.min(k) {
        let c = binom(n as u64, i as u64) * binom(k as u64, i as u64);
        let t = &(&x.pow(n - i) * &y.pow(k - i)) * &xy_z.pow(i);
        total.add_assign_ref(&t.scale(&c));
    }
    total
}

/// Weighted Delannoy numbers by the three-step recurrence, as a full table
/// `table[n][k]` for `n <= max_n`, `k <= max_k`.
pub fn weighted_delannoy_table(max_n: u32, max_k: u32) -> Vec<Vec<WeightPoly>> {
    let vars = xyz();
    let (x, y, z) = xyz_vars(&vars);
    let mut t: Vec<Vec<WeightPoly>> = Vec::new();
    for n in 0..=max_n as usize {
        let mut row = Vec::new();
        for k in 0..=max_k as usize {
            let v = if k == 0 {
                x.pow(n as u32)
            } else if n == 0 {
                y.pow(k as u32)
            } else {
                let a = &z * &t[n - 1][k - 1];
                let b = &x * &t[n - 1][k];
                let c = &y * &row[k - 1];
                &(&a + &b) + &c
            };
            row.push(v);
        }
        t.push(row);
    }
    t
}

/// `sum_i 1/(i+1) C(2i,i) C(n+i, n-i) x^i y^i z^(n-i)`.
pub fn weighted_schroder(n: u32) -> Result<WeightPoly> {
    let vars = xyz();
    let mut total = WeightPoly::zero(&vars);
    for i in 0..=n {
        let num = binom(2 * i as u64, i as u64) * binom((n + i) as u64, (n - i) as u64);
        let (c, r) = num.div_rem(&big(i as u64 + 1));
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "Schröder coefficient {i} of {n} is not integral"
            )));
        }
        total.add_assign_ref(&WeightPoly::monomial(&vars, c, vec![i, i, n - i]));
    }
    Ok(total)
}

/// `C(n+k, k) x^k y^n`.
pub fn weighted_binomial(n: u32, k: u32) -> WeightPoly {
    WeightPoly::monomial(&xyz(), binom((n + k) as u64, k as u64), vec![k, n, 0])
}

/// `1/(n+1) C(2n, n) x^n y^n`.
pub fn weighted_catalan(n: u32) -> Result<WeightPoly> {
    let (c, r) = binom(2 * n as u64, n as u64).div_rem(&big(n as u64 + 1));
    if !r.is_zero() {
        return Err(Error::Internal(format!("Catalan number {n} is not integral")));
    }
    Ok(WeightPoly::monomial(&xyz(), c, vec![n, n, 0]))
}

/// Spacing parameters of four collinear marked points: `a, c >= 1`, `b >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClosedFormParams {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl ClosedFormParams {
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        if a == 0 || c == 0 {
            return Err(Error::InvalidParameters(format!(
                "a and c must be positive (got a={a}, c={c})"
            )));
        }
        Ok(Self { a, b, c })
    }

    pub fn size(&self) -> u32 {
        self.a + self.b + self.c
    }
}

fn four_point_formula(
    params: ClosedFormParams,
    outer: impl Fn(u32) -> WeightPoly,
    inner: impl Fn(u32) -> Result<WeightPoly>,
) -> Result<WeightPoly> {
    let ClosedFormParams { a, b, c } = params;
    let vars = xyz();
    let mut rho = WeightPoly::zero(&vars);
    for i in 1..=a {
        for j in 1..=c {
            let t = &(&inner(b + i + j - 1)? * &outer(a - i)) * &outer(c - j);
            rho.add_assign_ref(&t);
        }
    }
    // every family in rho also takes one north and one east unit step to leave
    // and rejoin the diagonal
    let steps = WeightPoly::monomial(&vars, 1, vec![1, 1, 0]);
    Ok((&(&outer(b) * &rho) * &steps).scale(&big(2)))
}

/// Total weight of non-intersecting pairs for the four collinear points on the
/// triangular lattice:
/// `2xy D(b,b) sum_{i<=a, j<=c} R(b+i+j-1) D(a-i,a-i) D(c-j,c-j)`.
pub fn theorem51(params: ClosedFormParams) -> Result<WeightPoly> {
    four_point_formula(params, |k| weighted_delannoy(k, k), weighted_schroder)
}

/// The square-lattice specialisation of [`theorem51`], built from binomial and
/// Catalan weights.
pub fn corollary52(params: ClosedFormParams) -> Result<WeightPoly> {
    four_point_formula(params, |k| weighted_binomial(k, k), weighted_catalan)
}

/// Starts `(0,0), (a,a)` and ends `(a+b,a+b), (a+b+c,a+b+c)` on the rhombus of size
/// `a+b+c`. Fails when `b = 0`, where the second start and first end coincide.
pub fn marked_config_thm51(d: &Drawing, params: ClosedFormParams) -> Result<MarkedConfig> {
    let ClosedFormParams { a, b, c } = params;
    let (a, b, c) = (a as i64, b as i64, c as i64);
    let pt = |k: i64| tri_vertex(d, TriCoord::new(k, k));
    MarkedConfig::new(d, vec![pt(0)?, pt(a)?], vec![pt(a + b)?, pt(a + b + c)?])
}

/// The rhombus with symbolic weights and the four collinear marked points.
pub fn thm51_instance(params: ClosedFormParams) -> Result<(Drawing, MarkedConfig)> {
    let d = xyz_rhombus(params.size() as i64)?;
    let m = marked_config_thm51(&d, params)?;
    Ok((d, m))
}

/// Value of a closed form at `x = y = z = 1`.
pub fn at_ones(p: &WeightPoly) -> BigInt {
    p.eval_ones()
}

/// `true` when `p` is the constant 1.
pub fn is_unit(p: &WeightPoly) -> bool {
    p.as_constant().is_some_and(|c| c.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathcount::{h_dp, h_enumerated, Limits};

    fn px(s: &str) -> WeightPoly {
        WeightPoly::parse(&xyz(), s).unwrap()
    }

    /// Large Schröder paths by explicit enumeration, weighted x, y, z.
    fn schroder_brute(n: i64) -> WeightPoly {
        fn go(p: i64, q: i64, n: i64, w: WeightPoly, out: &mut WeightPoly, steps: &[WeightPoly; 3]) {
            if q < p || p > n || q > n {
                return;
            }
            if p == n && q == n {
                out.add_assign_ref(&w);
                return;
            }
            let [x, y, z] = steps;
            go(p + 1, q, n, &w * x, out, steps);
            go(p, q + 1, n, &w * y, out, steps);
            go(p + 1, q + 1, n, &w * z, out, steps);
        }
        let vars = xyz();
        let (x, y, z) = xyz_vars(&vars);
        let mut out = WeightPoly::zero(&vars);
        go(0, 0, n, WeightPoly::one(&vars), &mut out, &[x, y, z]);
        out
    }

    fn dyck_count(n: i64) -> u64 {
        fn go(p: i64, q: i64, n: i64) -> u64 {
            if q < p || q > n {
                return 0;
            }
            if p == n && q == n {
                return 1;
            }
            go(p + 1, q, n) + go(p, q + 1, n)
        }
        go(0, 0, n)
    }

    #[test]
    fn grid_builder() {
        let v = variables(&["x", "y"]);
        let d = build_grid(
            1,
            1,
            WeightPoly::var(&v, "x").unwrap(),
            WeightPoly::var(&v, "y").unwrap(),
        )
        .unwrap();
        assert_eq!(d.num_vertices(), 4);
        assert_eq!(d.edges().len(), 4);
        let d = build_grid(
            3,
            2,
            WeightPoly::var(&v, "x").unwrap(),
            WeightPoly::var(&v, "y").unwrap(),
        )
        .unwrap();
        let h = h_dp(&d, d.source(), d.sink());
        assert_eq!(h, WeightPoly::monomial(&v, 10, vec![3, 2]));
        assert!(build_grid(0, 3, WeightPoly::one(&v), WeightPoly::one(&v)).is_err());
    }

    #[test]
    fn rhombus_builder() {
        let d = xyz_rhombus(1).unwrap();
        assert_eq!(d.num_vertices(), 4);
        assert_eq!(d.edges().len(), 5);
        let h = h_enumerated(&d, d.source(), d.sink(), &Limits::default()).unwrap();
        assert_eq!(h, px("2*x*y + z"));
        assert_eq!(h, weighted_delannoy(1, 1));
        let d = xyz_rhombus(2).unwrap();
        assert_eq!(at_ones(&h_dp(&d, d.source(), d.sink())), big(13));
    }

    #[test]
    fn triangular_vertex_directions() {
        let d = xyz_rhombus(2).unwrap();
        let v = tri_vertex(&d, TriCoord::new(1, 1)).unwrap();
        let dirs: Vec<(i64, i64)> = d
            .out_edges(v, false)
            .iter()
            .map(|&e| {
                let w = d.pos(d.edges()[e].dst);
                (w.x - d.pos(v).x, w.y - d.pos(v).y)
            })
            .collect();
        assert_eq!(dirs, vec![(1, 1), (0, 2), (-1, 1)]);
    }

    #[test]
    fn delannoy_examples() {
        for n in 0..5 {
            assert_eq!(weighted_delannoy(n, 0), px("x").pow(n));
            assert_eq!(weighted_delannoy(0, n), px("y").pow(n));
        }
        assert_eq!(weighted_delannoy(1, 1), px("2*x*y + z"));
        assert_eq!(at_ones(&weighted_delannoy(2, 2)), big(13));
    }

    #[test]
    fn delannoy_closed_form_matches_recurrence() {
        let table = weighted_delannoy_table(8, 8);
        for n in 0..=8 {
            for k in 0..=8 {
                assert_eq!(weighted_delannoy(n, k), table[n as usize][k as usize], "({n},{k})");
            }
        }
    }

    #[test]
    fn delannoy_matches_rhombus_paths() {
        let d = xyz_rhombus(4).unwrap();
        let s = d.source();
        for n in 0..=4 {
            for k in 0..=4 {
                let v = tri_vertex(&d, TriCoord::new(n, k)).unwrap();
                assert_eq!(h_dp(&d, s, v), weighted_delannoy(n as u32, k as u32));
            }
        }
    }

    #[test]
    fn schroder_examples() {
        assert_eq!(weighted_schroder(0).unwrap(), px("1"));
        assert_eq!(weighted_schroder(1).unwrap(), px("z + x*y"));
        assert_eq!(at_ones(&weighted_schroder(3).unwrap()), big(22));
        for n in 0..=6 {
            assert_eq!(weighted_schroder(n).unwrap(), schroder_brute(n as i64), "n={n}");
        }
    }

    #[test]
    fn binomial_and_catalan() {
        assert_eq!(weighted_binomial(0, 0), px("1"));
        assert_eq!(weighted_binomial(2, 1), px("3*x*y^2"));
        assert_eq!(at_ones(&weighted_catalan(3).unwrap()), big(dyck_count(3)));
        for n in 0..=6 {
            assert_eq!(at_ones(&weighted_catalan(n).unwrap()), big(dyck_count(n as i64)));
        }
    }

    #[test]
    fn four_point_formulas() {
        let p = |a, b, c| ClosedFormParams::new(a, b, c).unwrap();
        assert_eq!(at_ones(&theorem51(p(1, 0, 1)).unwrap()), big(4));
        assert_eq!(at_ones(&theorem51(p(1, 1, 1)).unwrap()), big(36));
        assert_eq!(theorem51(p(1, 0, 1)).unwrap(), px("2*x*y*z + 2*x^2*y^2"));
        assert_eq!(at_ones(&corollary52(p(1, 0, 1)).unwrap()), big(2));
        assert_eq!(at_ones(&corollary52(p(1, 1, 1)).unwrap()), big(8));
        for a in 1..=2 {
            for b in 0..=1 {
                for c in 1..=2 {
                    let t = theorem51(p(a, b, c)).unwrap().specialize("z", &BigInt::zero()).unwrap();
                    assert_eq!(corollary52(p(a, b, c)).unwrap(), t);
                }
            }
        }
        assert!(ClosedFormParams::new(0, 1, 1).is_err());
        assert!(ClosedFormParams::new(1, 1, 0).is_err());
    }

    #[test]
    fn thm51_marked_points() {
        let (d, m) = thm51_instance(ClosedFormParams::new(1, 1, 1).unwrap()).unwrap();
        let pts: Vec<Point> = m.marked().map(|v| d.pos(v)).collect();
        let expect: Vec<Point> = [0, 1, 2, 3].iter().map(|&k| TriCoord::new(k, k).to_plane()).collect();
        assert_eq!(pts, expect);
        let (d, m) = thm51_instance(ClosedFormParams::new(2, 1, 1).unwrap()).unwrap();
        let pts: Vec<Point> = m.marked().map(|v| d.pos(v)).collect();
        let expect: Vec<Point> = [0, 2, 3, 4].iter().map(|&k| TriCoord::new(k, k).to_plane()).collect();
        assert_eq!(pts, expect);
        assert!(thm51_instance(ClosedFormParams::new(1, 0, 1).unwrap()).is_err());
    }
}
