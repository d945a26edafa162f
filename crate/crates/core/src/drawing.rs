//! Upward planar drawings: the data model, validation, the embedding read off the
//! drawing, leftmost paths, left-side regions and path signs.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geom::{self, Point};
use crate::poly::WeightPoly;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub label: String,
    pub pos: Point,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub src: VertexId,
    pub dst: VertexId,
    pub weight: WeightPoly,
    /// `false` for edges that only belong to the st-planar host graph.
    pub in_subgraph: bool,
}

impl Edge {
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.src == v {
            self.dst
        } else {
            self.src
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    Coordinates,
    Simplicity,
    Upwardness,
    Planarity,
    Acyclicity,
    Connectivity,
    Source,
    Sink,
    OuterFace,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Coordinates => "coordinates",
            Self::Simplicity => "simplicity",
            Self::Upwardness => "upwardness",
            Self::Planarity => "planarity",
            Self::Acyclicity => "acyclicity",
            Self::Connectivity => "connectivity",
            Self::Source => "source",
            Self::Sink => "sink",
            Self::OuterFace => "outer-face",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.detail)
    }
}

/// An st-planar host graph drawn with straight upward segments, together with the
/// subgraph flag on each edge. The host is the full edge set; the subgraph is the
/// set of edges with `in_subgraph`.
#[derive(Clone, Debug)]
pub struct Drawing {
    vars: Arc<[String]>,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    source: VertexId,
    sink: VertexId,
    labels: HashMap<String, VertexId>,
    rotation: Vec<Vec<EdgeId>>,
    out_all: Vec<Vec<EdgeId>>,
    out_sub: Vec<Vec<EdgeId>>,
    edge_at: HashMap<(VertexId, VertexId), EdgeId>,
}

impl PartialEq for Drawing {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
            && self.vertices == other.vertices
            && self.edges == other.edges
            && self.source == other.source
            && self.sink == other.sink
    }
}

impl Eq for Drawing {}

impl Drawing {
    /// Assembles a drawing and checks every drawing invariant.
    pub fn new(
        vars: Arc<[String]>,
        vertices: Vec<Vertex>,
        edges: Vec<Edge>,
        source: VertexId,
        sink: VertexId,
    ) -> Result<Self> {
        let d = Self::from_parts(vars, vertices, edges, source, sink)?;
        let violations = d.validate();
        if violations.is_empty() {
            Ok(d)
        } else {
            Err(Error::InvalidDrawing(
                violations.iter().map(ToString::to_string).collect(),
            ))
        }
    }

    /// Assembles a drawing without the geometric and graph checks of [`Drawing::validate`].
    /// Only structural problems (dangling ids, duplicate labels, foreign weights) fail here.
    pub fn from_parts(
        vars: Arc<[String]>,
        vertices: Vec<Vertex>,
        edges: Vec<Edge>,
        source: VertexId,
        sink: VertexId,
    ) -> Result<Self> {
        let nv = vertices.len();
        let mut labels = HashMap::with_capacity(nv);
        for (i, v) in vertices.iter().enumerate() {
            if labels.insert(v.label.clone(), i).is_some() {
                return Err(Error::InvalidDrawing(vec![format!(
                    "duplicate vertex id `{}`",
                    v.label
                )]));
            }
        }
        for &v in &[source, sink] {
            if v >= nv {
                return Err(Error::UnknownVertex(format!("#{v}")));
            }
        }
        let mut edge_at = HashMap::with_capacity(edges.len());
        for (k, e) in edges.iter().enumerate() {
            if e.src >= nv || e.dst >= nv {
                return Err(Error::UnknownVertex(format!("#{}", e.src.max(e.dst))));
            }
            if e.weight.vars() != &vars {
                return Err(Error::VariableMismatch {
                    left: vars.join(","),
                    right: e.weight.vars().join(","),
                });
            }
            edge_at.entry((e.src, e.dst)).or_insert(k);
        }
        let mut d = Self {
            vars,
            vertices,
            edges,
            source,
            sink,
            labels,
            rotation: vec![Vec::new(); nv],
            out_all: vec![Vec::new(); nv],
            out_sub: vec![Vec::new(); nv],
            edge_at,
        };
        for (k, e) in d.edges.iter().enumerate() {
            d.rotation[e.src].push(k);
            if e.src != e.dst {
                d.rotation[e.dst].push(k);
            }
            d.out_all[e.src].push(k);
            if e.in_subgraph {
                d.out_sub[e.src].push(k);
            }
        }
        for v in 0..nv {
            let mut rot = std::mem::take(&mut d.rotation[v]);
            rot.sort_by(|&a, &b| geom::cmp_angle(d.direction(a, v), d.direction(b, v)));
            d.rotation[v] = rot;
            let mut out = std::mem::take(&mut d.out_all[v]);
            out.sort_by(|&a, &b| geom::cmp_angle(d.direction(a, v), d.direction(b, v)));
            d.out_all[v] = out;
            let mut out = std::mem::take(&mut d.out_sub[v]);
            out.sort_by(|&a, &b| geom::cmp_angle(d.direction(a, v), d.direction(b, v)));
            d.out_sub[v] = out;
        }
        Ok(d)
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn sink(&self) -> VertexId {
        self.sink
    }

    pub fn pos(&self, v: VertexId) -> Point {
        self.vertices[v].pos
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.vertices[v].label
    }

    pub fn vertex_id(&self, label: &str) -> Result<VertexId> {
        self.labels
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// The vertex drawn at `pos`, if any.
    pub fn vertex_at(&self, pos: Point) -> Option<VertexId> {
        self.vertices.iter().position(|v| v.pos == pos)
    }

    pub fn edge_between(&self, src: VertexId, dst: VertexId) -> Option<EdgeId> {
        self.edge_at.get(&(src, dst)).copied()
    }

    /// Outgoing edges, ordered counterclockwise from east.
    pub fn out_edges(&self, v: VertexId, subgraph_only: bool) -> &[EdgeId] {
        if subgraph_only {
            &self.out_sub[v]
        } else {
            &self.out_all[v]
        }
    }

    /// Direction of edge `e` as it leaves `v`.
    fn direction(&self, e: EdgeId, v: VertexId) -> (i64, i64) {
        let edge = &self.edges[e];
        let a = self.pos(v);
        let b = self.pos(edge.other(v));
        (b.x - a.x, b.y - a.y)
    }

    /// Incident edges of `v` sorted counterclockwise by the angle of the segment
    /// leaving `v`, measured from the positive x-axis.
    pub fn angular_order(&self, v: VertexId) -> Result<&[EdgeId]> {
        self.rotation
            .get(v)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::UnknownVertex(format!("#{v}")))
    }

    /// Vertices from which `target` can be reached.
    pub fn reaching(&self, target: VertexId, subgraph_only: bool) -> Vec<bool> {
        let mut preds: Vec<Vec<VertexId>> = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            if e.in_subgraph || !subgraph_only {
                preds[e.dst].push(e.src);
            }
        }
        let mut seen = vec![false; self.vertices.len()];
        seen[target] = true;
        let mut queue = VecDeque::from([target]);
        while let Some(v) = queue.pop_front() {
            for &w in &preds[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Follows, at every vertex, the most counterclockwise outgoing host edge from
    /// which `to` is still reachable.
    pub fn leftmost_path(&self, from: VertexId, to: VertexId) -> Result<LatticePath> {
        let n = self.vertices.len();
        if from >= n || to >= n {
            return Err(Error::UnknownVertex(format!("#{}", from.max(to))));
        }
        let reach = self.reaching(to, false);
        if !reach[from] {
            return Err(Error::Unreachable {
                from: self.label(from).to_string(),
                to: self.label(to).to_string(),
            });
        }
        let mut path = vec![from];
        let mut cur = from;
        while cur != to {
            let next = self.out_all[cur]
                .iter()
                .rev()
                .map(|&e| self.edges[e].dst)
                .find(|&w| reach[w])
                .ok_or_else(|| Error::Internal("leftmost walk reached a dead end".into()))?;
            path.push(next);
            cur = next;
        }
        Ok(LatticePath(path))
    }

    /// Every violated drawing invariant; empty when the drawing is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut push = |kind, detail: String| out.push(Violation { kind, detail });
        let nv = self.vertices.len();

        let mut seen_pos: HashMap<Point, VertexId> = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if let Some(&j) = seen_pos.get(&v.pos) {
                push(
                    ViolationKind::Coordinates,
                    format!(
                        "vertices `{}` and `{}` share position ({}, {})",
                        self.label(j),
                        v.label,
                        v.pos.x,
                        v.pos.y
                    ),
                );
            } else {
                seen_pos.insert(v.pos, i);
            }
        }

        let mut pairs = HashSet::new();
        for e in &self.edges {
            let (a, b) = (self.label(e.src), self.label(e.dst));
            if e.src == e.dst {
                push(ViolationKind::Simplicity, format!("self-loop at `{a}`"));
                continue;
            }
            if !pairs.insert((e.src.min(e.dst), e.src.max(e.dst))) {
                push(
                    ViolationKind::Simplicity,
                    format!("parallel edges between `{a}` and `{b}`"),
                );
            }
            if self.pos(e.dst).y < self.pos(e.src).y {
                push(
                    ViolationKind::Upwardness,
                    format!("edge `{a}` -> `{b}` points downward"),
                );
            }
        }

        let mut planar = true;
        for (i, e) in self.edges.iter().enumerate() {
            let (a, b) = (self.pos(e.src), self.pos(e.dst));
            for (v, vert) in self.vertices.iter().enumerate() {
                if v != e.src && v != e.dst && geom::on_segment(vert.pos, a, b) {
                    planar = false;
                    push(
                        ViolationKind::Planarity,
                        format!(
                            "vertex `{}` lies on edge `{}` -> `{}`",
                            vert.label,
                            self.label(e.src),
                            self.label(e.dst)
                        ),
                    );
                }
            }
            for f in &self.edges[i + 1..] {
                let (c, d) = (self.pos(f.src), self.pos(f.dst));
                let shared: Vec<VertexId> = [e.src, e.dst]
                    .into_iter()
                    .filter(|v| *v == f.src || *v == f.dst)
                    .collect();
                let bad = match shared.len() {
                    0 => geom::segments_intersect(a, b, c, d),
                    1 => {
                        // collinear overlap beyond the shared endpoint
                        let s = self.pos(shared[0]);
                        let p = if e.src == shared[0] { b } else { a };
                        let q = if f.src == shared[0] { d } else { c };
                        geom::orient(s, p, q) == 0 && ((p.x - s.x) * (q.x - s.x) + (p.y - s.y) * (q.y - s.y)) > 0
                    }
                    _ => false,
                };
                if bad {
                    planar = false;
                    push(
                        ViolationKind::Planarity,
                        format!(
                            "edges `{}` -> `{}` and `{}` -> `{}` cross",
                            self.label(e.src),
                            self.label(e.dst),
                            self.label(f.src),
                            self.label(f.dst)
                        ),
                    );
                }
            }
        }

        // acyclicity via Kahn's algorithm
        let mut indeg = vec![0usize; nv];
        let mut outdeg = vec![0usize; nv];
        for e in &self.edges {
            indeg[e.dst] += 1;
            outdeg[e.src] += 1;
        }
        let mut remaining = indeg.clone();
        let mut queue: VecDeque<VertexId> = (0..nv).filter(|&v| remaining[v] == 0).collect();
        let mut visited = 0;
        while let Some(v) = queue.pop_front() {
            visited += 1;
            for &e in &self.out_all[v] {
                let w = self.edges[e].dst;
                remaining[w] -= 1;
                if remaining[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        if visited != nv {
            push(
                ViolationKind::Acyclicity,
                format!("{} vertices lie on or behind a directed cycle", nv - visited),
            );
        }

        let mut connected = true;
        if nv > 0 {
            let mut seen = vec![false; nv];
            seen[0] = true;
            let mut stack = vec![0];
            while let Some(v) = stack.pop() {
                for &e in &self.rotation[v] {
                    let w = self.edges[e].other(v);
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            let missing = seen.iter().filter(|s| !**s).count();
            if missing > 0 {
                connected = false;
                push(
                    ViolationKind::Connectivity,
                    format!("{missing} vertices are disconnected from `{}`", self.label(0)),
                );
            }
        }

        for v in 0..nv {
            if indeg[v] == 0 && v != self.source {
                push(
                    ViolationKind::Source,
                    format!("`{}` has no incoming edges but is not the source", self.label(v)),
                );
            }
            if outdeg[v] == 0 && v != self.sink {
                push(
                    ViolationKind::Sink,
                    format!("`{}` has no outgoing edges but is not the sink", self.label(v)),
                );
            }
        }
        if indeg[self.source] != 0 {
            push(
                ViolationKind::Source,
                format!("source `{}` has incoming edges", self.label(self.source)),
            );
        }
        if outdeg[self.sink] != 0 {
            push(
                ViolationKind::Sink,
                format!("sink `{}` has outgoing edges", self.label(self.sink)),
            );
        }

        if planar && connected && !self.edges.is_empty() {
            let outer = self.outer_face();
            for (v, name) in [(self.source, "source"), (self.sink, "sink")] {
                if !outer.contains(&v) {
                    push(
                        ViolationKind::OuterFace,
                        format!("{name} `{}` is not on the outer face", self.label(v)),
                    );
                }
            }
        }
        out
    }

    /// Vertices on the unbounded face, found by tracing every face of the embedding
    /// and taking the one with nonpositive signed area.
    fn outer_face(&self) -> HashSet<VertexId> {
        // half-edge index: 2*e for src->dst, 2*e+1 for dst->src
        let m = self.edges.len();
        let mut used = vec![false; 2 * m];
        let mut best: Option<(i128, HashSet<VertexId>)> = None;
        for start in 0..2 * m {
            if used[start] {
                continue;
            }
            let mut h = start;
            let mut area = 0i128;
            let mut verts = HashSet::new();
            loop {
                used[h] = true;
                let e = &self.edges[h / 2];
                let (a, b) = if h % 2 == 0 { (e.src, e.dst) } else { (e.dst, e.src) };
                verts.insert(a);
                let (pa, pb) = (self.pos(a), self.pos(b));
                area += pa.x as i128 * pb.y as i128 - pb.x as i128 * pa.y as i128;
                let rot = &self.rotation[b];
                let idx = rot.iter().position(|&k| k == h / 2).unwrap_or(0);
                let next_e = rot[(idx + rot.len() - 1) % rot.len()];
                let next_h = if self.edges[next_e].src == b {
                    2 * next_e
                } else {
                    2 * next_e + 1
                };
                h = next_h;
                if h == start || used[h] {
                    break;
                }
            }
            if best.as_ref().is_none_or(|(a, _)| area < *a) {
                best = Some((area, verts));
            }
        }
        best.map(|(_, v)| v).unwrap_or_default()
    }
}

/// A directed path given by its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath(Vec<VertexId>);

impl LatticePath {
    /// Panics on an empty vertex list.
    pub fn new(vertices: Vec<VertexId>) -> Self {
        assert!(!vertices.is_empty(), "a path has at least one vertex");
        Self(vertices)
    }

    pub fn trivial(v: VertexId) -> Self {
        Self(vec![v])
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn start(&self) -> VertexId {
        self.0[0]
    }

    pub fn end(&self) -> VertexId {
        self.0[self.0.len() - 1]
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() == 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    /// Checks that consecutive vertices are joined by edges of the drawing.
    pub fn check(&self, d: &Drawing, subgraph_only: bool) -> Result<()> {
        for w in self.0.windows(2) {
            let ok = d
                .edge_between(w[0], w[1])
                .is_some_and(|e| d.edges()[e].in_subgraph || !subgraph_only);
            if !ok || w[0] >= d.num_vertices() {
                return Err(Error::InvalidConfig(format!(
                    "no {}edge `{}` -> `{}`",
                    if subgraph_only { "subgraph " } else { "" },
                    d.label(w[0]),
                    d.label(w[1])
                )));
            }
        }
        Ok(())
    }

    /// Product of edge weights; 1 for the length-zero path.
    pub fn weight(&self, d: &Drawing) -> WeightPoly {
        let mut w = WeightPoly::one(d.vars());
        for pair in self.0.windows(2) {
            let e = d
                .edge_between(pair[0], pair[1])
                .expect("path step is not an edge of the drawing");
            w = &w * &d.edges()[e].weight;
        }
        w
    }

    pub fn points(&self, d: &Drawing) -> Vec<Point> {
        self.0.iter().map(|&v| d.pos(v)).collect()
    }

    pub fn concat(&self, tail: &[VertexId]) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(tail);
        Self(v)
    }
}

/// Ordered starting points and ending points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedConfig {
    starts: Vec<VertexId>,
    ends: Vec<VertexId>,
}

impl MarkedConfig {
    /// Requires equal lengths, distinct points and disjoint start/end sets.
    /// The empty configuration is allowed; its determinant is 1.
    pub fn new(d: &Drawing, starts: Vec<VertexId>, ends: Vec<VertexId>) -> Result<Self> {
        if starts.len() != ends.len() {
            return Err(Error::InvalidConfig(format!(
                "{} starting points but {} ending points",
                starts.len(),
                ends.len()
            )));
        }
        let mut seen = HashSet::new();
        for &v in starts.iter().chain(&ends) {
            if v >= d.num_vertices() {
                return Err(Error::UnknownVertex(format!("#{v}")));
            }
            if !seen.insert(v) {
                return Err(Error::InvalidConfig(format!(
                    "marked point `{}` is used twice",
                    d.label(v)
                )));
            }
        }
        Ok(Self { starts, ends })
    }

    pub fn from_labels(d: &Drawing, starts: &[&str], ends: &[&str]) -> Result<Self> {
        let ids = |ls: &[&str]| ls.iter().map(|l| d.vertex_id(l)).collect::<Result<Vec<_>>>();
        Self::new(d, ids(starts)?, ids(ends)?)
    }

    pub fn starts(&self) -> &[VertexId] {
        &self.starts
    }

    pub fn ends(&self) -> &[VertexId] {
        &self.ends
    }

    pub fn n(&self) -> usize {
        self.starts.len()
    }

    pub fn marked(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.starts.iter().chain(&self.ends).copied()
    }

    pub fn is_marked(&self, v: VertexId) -> bool {
        self.starts.contains(&v) || self.ends.contains(&v)
    }
}

/// Closed region bounded by leftmost(s, u), the path, leftmost(v, t) and the left
/// boundary of the host graph walked back from t to s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftSideRegion {
    pub boundary: Vec<Point>,
}

impl LeftSideRegion {
    pub fn contains(&self, p: Point) -> bool {
        geom::in_closed_region(p, &self.boundary)
    }
}

/// Precomputed leftmost paths for one drawing and marked configuration, so that path
/// signs can be evaluated repeatedly without re-walking the host graph.
#[derive(Debug)]
pub struct SideOracle<'a> {
    d: &'a Drawing,
    marked: Vec<VertexId>,
    left_boundary: Vec<VertexId>,
    from_source: HashMap<VertexId, LatticePath>,
    to_sink: HashMap<VertexId, LatticePath>,
}

impl<'a> SideOracle<'a> {
    pub fn new(d: &'a Drawing, m: &MarkedConfig) -> Result<Self> {
        let left_boundary = d.leftmost_path(d.source(), d.sink())?.0;
        let mut from_source = HashMap::new();
        let mut to_sink = HashMap::new();
        for &u in m.starts() {
            from_source.insert(u, d.leftmost_path(d.source(), u)?);
        }
        for &v in m.ends() {
            to_sink.insert(v, d.leftmost_path(v, d.sink())?);
        }
        Ok(Self {
            d,
            marked: m.marked().collect(),
            left_boundary,
            from_source,
            to_sink,
        })
    }

    pub fn drawing(&self) -> &'a Drawing {
        self.d
    }

    pub fn region(&self, p: &LatticePath) -> Result<LeftSideRegion> {
        let d = self.d;
        let lower = match self.from_source.get(&p.start()) {
            Some(l) => l.clone(),
            None => d.leftmost_path(d.source(), p.start())?,
        };
        let upper = match self.to_sink.get(&p.end()) {
            Some(l) => l.clone(),
            None => d.leftmost_path(p.end(), d.sink())?,
        };
        let mut ring: Vec<VertexId> = lower.0;
        ring.extend_from_slice(&p.0[1..]);
        ring.extend_from_slice(&upper.0[1..]);
        let back = &self.left_boundary;
        if back.len() > 2 {
            ring.extend(back[1..back.len() - 1].iter().rev());
        }
        Ok(LeftSideRegion {
            boundary: ring.into_iter().map(|v| d.pos(v)).collect(),
        })
    }

    /// Marked points in the closed left side of `p`, in configuration order.
    pub fn left_marked_points(&self, p: &LatticePath) -> Result<Vec<VertexId>> {
        let region = self.region(p)?;
        Ok(self
            .marked
            .iter()
            .copied()
            .filter(|&v| region.contains(self.d.pos(v)))
            .collect())
    }

    /// `(-1)^|L(p)|`.
    pub fn path_sign(&self, p: &LatticePath) -> Result<i8> {
        Ok(if self.left_marked_points(p)?.len() % 2 == 0 {
            1
        } else {
            -1
        })
    }

    pub fn family_sign<'p, I>(&self, paths: I) -> Result<i8>
    where
        I: IntoIterator<Item = &'p LatticePath>,
    {
        let mut s = 1;
        for p in paths {
            s *= self.path_sign(p)?;
        }
        Ok(s)
    }
}

pub fn left_side_region(d: &Drawing, p: &LatticePath) -> Result<LeftSideRegion> {
    let empty = MarkedConfig {
        starts: vec![],
        ends: vec![],
    };
    SideOracle::new(d, &empty)?.region(p)
}

pub fn left_marked_points(d: &Drawing, p: &LatticePath, m: &MarkedConfig) -> Result<Vec<VertexId>> {
    SideOracle::new(d, m)?.left_marked_points(p)
}

pub fn path_sign(d: &Drawing, p: &LatticePath, m: &MarkedConfig) -> Result<i8> {
    SideOracle::new(d, m)?.path_sign(p)
}
