//! Path enumeration, the classic LGV determinant, the signed matrix `M` and the
//! brute-force oracles it is checked against.

use std::collections::BTreeMap;

use crate::drawing::{Drawing, LatticePath, MarkedConfig, SideOracle, VertexId};
use crate::error::{Error, Result};
use crate::poly::{PolyMatrix, WeightPoly};

/// Hard ceilings for the exponential enumerations. Exceeding one is an error,
/// never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Paths produced by one call to [`enumerate_paths`].
    pub max_paths: usize,
    /// Partial tuples visited by a brute-force family search.
    pub max_tuples: usize,
    /// Cells in a region handed to the brute-force tiling counter.
    pub max_cells: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_paths: 1_000_000,
            max_tuples: 20_000_000,
            max_cells: 400,
        }
    }
}

impl Limits {
    /// Defaults, with every ceiling replaced by `LGVX_LIMIT` when it is set to a
    /// positive integer.
    pub fn from_env() -> Self {
        let mut l = Self::default();
        if let Some(n) = std::env::var("LGVX_LIMIT")
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&n| n > 0)
        {
            l = Self::uniform(n);
        }
        l
    }

    pub fn uniform(n: usize) -> Self {
        Self {
            max_paths: n,
            max_tuples: n,
            max_cells: n,
        }
    }
}

/// An n-tuple of paths, `paths[i]` starting at `u_i` and ending at
/// `v_{connection[i]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathFamily {
    pub paths: Vec<LatticePath>,
    pub connection: Vec<usize>,
}

impl PathFamily {
    pub fn new(paths: Vec<LatticePath>, connection: Vec<usize>) -> Self {
        debug_assert_eq!(paths.len(), connection.len());
        Self { paths, connection }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn weight(&self, d: &Drawing) -> WeightPoly {
        self.paths
            .iter()
            .fold(WeightPoly::one(d.vars()), |acc, p| &acc * &p.weight(d))
    }

    /// True when no two paths share a vertex.
    pub fn is_disjoint(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.paths.iter().flat_map(|p| p.vertices()).all(|&v| seen.insert(v))
    }

    /// Checks that the family matches the marked configuration and uses only
    /// subgraph edges.
    pub fn check(&self, d: &Drawing, m: &MarkedConfig) -> Result<()> {
        if self.len() != m.n() || !is_permutation(&self.connection) {
            return Err(Error::InvalidConfig("family does not match the marked points".into()));
        }
        for (i, p) in self.paths.iter().enumerate() {
            p.check(d, true)?;
            if p.start() != m.starts()[i] || p.end() != m.ends()[self.connection[i]] {
                return Err(Error::InvalidConfig(format!("path {i} has the wrong endpoints")));
            }
        }
        Ok(())
    }
}

fn is_permutation(pi: &[usize]) -> bool {
    let mut seen = vec![false; pi.len()];
    pi.iter()
        .all(|&j| j < pi.len() && !std::mem::replace(&mut seen[j], true))
}

/// Sign of a permutation given in one-line notation.
pub fn permutation_sign(pi: &[usize]) -> i8 {
    let mut seen = vec![false; pi.len()];
    let mut sign = 1;
    for start in 0..pi.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = pi[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for j in 0..used.len() {
            if !used[j] {
                used[j] = true;
                cur.push(j);
                go(cur, used, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn check_vertex(d: &Drawing, v: VertexId) -> Result<()> {
    if v < d.num_vertices() {
        Ok(())
    } else {
        Err(Error::UnknownVertex(format!("#{v}")))
    }
}

/// Every directed path `u -> v` in the subgraph, depth first with out-edges taken
/// in counterclockwise order.
pub fn enumerate_paths(d: &Drawing, u: VertexId, v: VertexId, limits: &Limits) -> Result<Vec<LatticePath>> {
    check_vertex(d, u)?;
    check_vertex(d, v)?;
    let reach = d.reaching(v, true);
    let mut out = Vec::new();
    if !reach[u] {
        return Ok(out);
    }
    let mut stack = vec![u];
    fn go(
        d: &Drawing,
        v: VertexId,
        reach: &[bool],
        stack: &mut Vec<VertexId>,
        out: &mut Vec<LatticePath>,
        limit: usize,
    ) -> Result<()> {
        let w = *stack.last().unwrap();
        if w == v {
            if out.len() >= limit {
                return Err(Error::LimitExceeded { what: "paths", limit });
            }
            out.push(LatticePath::new(stack.clone()));
            return Ok(());
        }
        for &e in d.out_edges(w, true) {
            let next = d.edges()[e].dst;
            if reach[next] {
                stack.push(next);
                go(d, v, reach, stack, out, limit)?;
                stack.pop();
            }
        }
        Ok(())
    }
    go(d, v, &reach, &mut stack, &mut out, limits.max_paths)?;
    Ok(out)
}

/// `h(u, v)` as the sum of path weights over an explicit enumeration.
pub fn h_enumerated(d: &Drawing, u: VertexId, v: VertexId, limits: &Limits) -> Result<WeightPoly> {
    let mut total = WeightPoly::zero(d.vars());
    for p in enumerate_paths(d, u, v, limits)? {
        total.add_assign_ref(&p.weight(d));
    }
    Ok(total)
}

/// `h(u, v)` by dynamic programming over a topological order of the subgraph.
pub fn h_dp(d: &Drawing, u: VertexId, v: VertexId) -> WeightPoly {
    let n = d.num_vertices();
    let reach = d.reaching(v, true);
    let mut memo: Vec<Option<WeightPoly>> = vec![None; n];
    // iterative post-order so deep graphs do not overflow the stack
    let mut stack = vec![(u, false)];
    while let Some((w, expanded)) = stack.pop() {
        if memo[w].is_some() {
            continue;
        }
        if w == v {
            memo[w] = Some(WeightPoly::one(d.vars()));
            continue;
        }
        let outs = d.out_edges(w, true);
        if expanded {
            let mut total = WeightPoly::zero(d.vars());
            for &e in outs {
                let edge = &d.edges()[e];
                if let Some(sub) = memo[edge.dst].as_ref().filter(|_| reach[edge.dst]) {
                    total.add_assign_ref(&(&edge.weight * sub));
                }
            }
            memo[w] = Some(total);
        } else {
            stack.push((w, true));
            for &e in outs {
                let dst = d.edges()[e].dst;
                if reach[dst] && memo[dst].is_none() {
                    stack.push((dst, false));
                }
            }
        }
    }
    memo[u].take().unwrap_or_else(|| WeightPoly::zero(d.vars()))
}

/// `h(u, v)`, the generating function of all subgraph paths from `u` to `v`.
pub fn h(d: &Drawing, u: VertexId, v: VertexId) -> WeightPoly {
    h_dp(d, u, v)
}

/// `sum sgn(p) wt(p)` over the paths `u_i -> v_j`.
pub fn signed_entry(d: &Drawing, m: &MarkedConfig, i: usize, j: usize, limits: &Limits) -> Result<WeightPoly> {
    let oracle = SideOracle::new(d, m)?;
    signed_entry_with(&oracle, m, i, j, limits, &|_, s| s)
}

fn signed_entry_with(
    oracle: &SideOracle,
    m: &MarkedConfig,
    i: usize,
    j: usize,
    limits: &Limits,
    tweak: &SignTweak,
) -> Result<WeightPoly> {
    let d = oracle.drawing();
    let mut total = WeightPoly::zero(d.vars());
    for (k, p) in enumerate_paths(d, m.starts()[i], m.ends()[j], limits)?
        .iter()
        .enumerate()
    {
        let w = p.weight(d);
        if tweak((i, j, k), oracle.path_sign(p)?) > 0 {
            total.add_assign_ref(&w);
        } else {
            total.add_assign_ref(&-w);
        }
    }
    Ok(total)
}

/// The signed matrix, its determinant and the sign-normalised count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMatrixResult {
    pub matrix: PolyMatrix,
    pub determinant: WeightPoly,
    pub normalized_count: WeightPoly,
}

/// Flips `det` so every coefficient is non-negative, or reports a mixed sign.
pub fn normalize_sign(det: &WeightPoly) -> Result<WeightPoly> {
    if det.all_coefficients_nonnegative() {
        Ok(det.clone())
    } else if det.all_coefficients_nonpositive() {
        Ok(-det)
    } else {
        Err(Error::MixedSignDeterminant(det.to_string()))
    }
}

/// Builds `M` with default limits.
pub fn matrix_m(d: &Drawing, m: &MarkedConfig) -> Result<SignedMatrixResult> {
    matrix_m_with(d, m, &Limits::default())
}

pub fn matrix_m_with(d: &Drawing, m: &MarkedConfig, limits: &Limits) -> Result<SignedMatrixResult> {
    signed_matrix(d, m, limits, &|_, s| s)
}

/// Rewrites the sign of path `k` of entry `(i, j)`.
pub(crate) type SignTweak = dyn Fn((usize, usize, usize), i8) -> i8;

/// `tweak` is applied to every path sign; only fault-injection tests pass
/// anything other than the identity.
pub(crate) fn signed_matrix(
    d: &Drawing,
    m: &MarkedConfig,
    limits: &Limits,
    tweak: &SignTweak,
) -> Result<SignedMatrixResult> {
    let oracle = SideOracle::new(d, m)?;
    let n = m.n();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(signed_entry_with(&oracle, m, i, j, limits, tweak)?);
        }
        rows.push(row);
    }
    let matrix = PolyMatrix::from_rows(d.vars(), rows)?;
    let determinant = matrix.det();
    let normalized_count = normalize_sign(&determinant)?;
    Ok(SignedMatrixResult {
        matrix,
        determinant,
        normalized_count,
    })
}

/// The matrix `h(u_i, v_j)`.
pub fn h_matrix(d: &Drawing, m: &MarkedConfig) -> Result<PolyMatrix> {
    let rows = m
        .starts()
        .iter()
        .map(|&u| m.ends().iter().map(|&v| h_dp(d, u, v)).collect())
        .collect();
    PolyMatrix::from_rows(d.vars(), rows)
}

/// `det(h(u_i, v_j))`.
pub fn lgv_signed(d: &Drawing, m: &MarkedConfig) -> Result<WeightPoly> {
    Ok(h_matrix(d, m)?.det())
}

/// `det(h(u_i, v_j))`, checked against the signed brute-force sum over connection
/// types.
pub fn lgv_signed_verified(d: &Drawing, m: &MarkedConfig, limits: &Limits) -> Result<WeightPoly> {
    let det = lgv_signed(d, m)?;
    let signed = signed_type_sum(d, &brute_force_by_type(d, m, limits)?);
    if det != signed {
        return Err(Error::Internal(format!(
            "det(h) = {det} but the signed brute-force sum is {signed}"
        )));
    }
    Ok(det)
}

/// `sum_pi sgn(pi) GF(P_0^pi)` from a per-type table.
pub fn signed_type_sum(d: &Drawing, by_type: &BTreeMap<Vec<usize>, WeightPoly>) -> WeightPoly {
    let mut total = WeightPoly::zero(d.vars());
    for (pi, w) in by_type {
        if permutation_sign(pi) > 0 {
            total.add_assign_ref(w);
        } else {
            total.add_assign_ref(&-w);
        }
    }
    total
}

type Bits = Vec<u64>;

fn bits_of(p: &LatticePath, words: usize) -> Bits {
    let mut b = vec![0u64; words];
    for &v in p.vertices() {
        b[v / 64] |= 1 << (v % 64);
    }
    b
}

fn overlaps(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

struct FamilySearch<'a> {
    paths: Vec<Vec<(LatticePath, Bits)>>,
    limits: &'a Limits,
    visited: usize,
    disjoint_only: bool,
}

impl FamilySearch<'_> {
    fn new<'a>(d: &Drawing, m: &MarkedConfig, limits: &'a Limits, disjoint_only: bool) -> Result<FamilySearch<'a>> {
        let words = d.num_vertices().div_ceil(64).max(1);
        let mut paths = Vec::new();
        for &u in m.starts() {
            for &v in m.ends() {
                let ps = enumerate_paths(d, u, v, limits)?;
                paths.push(
                    ps.into_iter()
                        .map(|p| {
                            let b = bits_of(&p, words);
                            (p, b)
                        })
                        .collect(),
                );
            }
        }
        Ok(FamilySearch {
            paths,
            limits,
            visited: 0,
            disjoint_only,
        })
    }

    fn run(&mut self, n: usize, f: &mut dyn FnMut(&[&LatticePath], &[usize])) -> Result<()> {
        let words = self.paths.first().and_then(|ps| ps.first()).map_or(1, |(_, b)| b.len());
        let mut chosen: Vec<&LatticePath> = Vec::new();
        let mut conn = Vec::new();
        let mut used_ends = vec![false; n];
        let paths = std::mem::take(&mut self.paths);
        let res = self.go(&paths, n, &mut chosen, &mut conn, &mut used_ends, &vec![0; words], f);
        self.paths = paths;
        res
    }

    #[allow(clippy::too_many_arguments)]
    fn go<'p>(
        &mut self,
        paths: &'p [Vec<(LatticePath, Bits)>],
        n: usize,
        chosen: &mut Vec<&'p LatticePath>,
        conn: &mut Vec<usize>,
        used_ends: &mut [bool],
        occupied: &Bits,
        f: &mut dyn FnMut(&[&LatticePath], &[usize]),
    ) -> Result<()> {
        let i = chosen.len();
        if i == n {
            f(chosen, conn);
            return Ok(());
        }
        for j in 0..n {
            if used_ends[j] {
                continue;
            }
            for (p, b) in &paths[i * n + j] {
                if self.disjoint_only && overlaps(occupied, b) {
                    continue;
                }
                self.visited += 1;
                if self.visited > self.limits.max_tuples {
                    return Err(Error::LimitExceeded {
                        what: "partial path tuples",
                        limit: self.limits.max_tuples,
                    });
                }
                let next: Bits = occupied.iter().zip(b).map(|(x, y)| x | y).collect();
                used_ends[j] = true;
                chosen.push(p);
                conn.push(j);
                self.go(paths, n, chosen, conn, used_ends, &next, f)?;
                conn.pop();
                chosen.pop();
                used_ends[j] = false;
            }
        }
        Ok(())
    }
}

/// Calls `f` on every vertex-disjoint family, in a deterministic order.
pub fn for_each_disjoint_family(
    d: &Drawing,
    m: &MarkedConfig,
    limits: &Limits,
    mut f: impl FnMut(PathFamily),
) -> Result<()> {
    FamilySearch::new(d, m, limits, true)?.run(m.n(), &mut |ps, conn| {
        f(PathFamily::new(ps.iter().map(|&p| p.clone()).collect(), conn.to_vec()))
    })
}

/// Every family of any connection type, intersecting or not.
pub fn all_families(d: &Drawing, m: &MarkedConfig, limits: &Limits) -> Result<Vec<PathFamily>> {
    let mut out = Vec::new();
    FamilySearch::new(d, m, limits, false)?.run(m.n(), &mut |ps, conn| {
        out.push(PathFamily::new(ps.iter().map(|&p| p.clone()).collect(), conn.to_vec()))
    })?;
    Ok(out)
}

/// `GF(P_0^pi)` for every connection type `pi` that has at least one
/// non-intersecting family.
pub fn brute_force_by_type(d: &Drawing, m: &MarkedConfig, limits: &Limits) -> Result<BTreeMap<Vec<usize>, WeightPoly>> {
    let mut out: BTreeMap<Vec<usize>, WeightPoly> = BTreeMap::new();
    FamilySearch::new(d, m, limits, true)?.run(m.n(), &mut |ps, conn| {
        let w = ps.iter().fold(WeightPoly::one(d.vars()), |acc, p| &acc * &p.weight(d));
        out.entry(conn.to_vec())
            .or_insert_with(|| WeightPoly::zero(d.vars()))
            .add_assign_ref(&w);
    })?;
    Ok(out)
}

/// `GF(P_0(U, V))`: total weight of vertex-disjoint families of every type.
pub fn brute_force_nonintersecting(d: &Drawing, m: &MarkedConfig, limits: &Limits) -> Result<WeightPoly> {
    let mut total = WeightPoly::zero(d.vars());
    for w in brute_force_by_type(d, m, limits)?.values() {
        total.add_assign_ref(w);
    }
    Ok(total)
}

/// True when every path `u_i -> v_k` meets every path `u_j -> v_l` for `i < j`,
/// `k > l`.
pub fn check_compatibility(d: &Drawing, m: &MarkedConfig, limits: &Limits) -> Result<bool> {
    let n = m.n();
    let words = d.num_vertices().div_ceil(64).max(1);
    let mut cache: BTreeMap<(usize, usize), Vec<Bits>> = BTreeMap::new();
    let mut get = |i: usize, j: usize| -> Result<Vec<Bits>> {
        if let Some(v) = cache.get(&(i, j)) {
            return Ok(v.clone());
        }
        let v: Vec<Bits> = enumerate_paths(d, m.starts()[i], m.ends()[j], limits)?
            .iter()
            .map(|p| bits_of(p, words))
            .collect();
        cache.insert((i, j), v.clone());
        Ok(v)
    };
    let mut pairs = 0usize;
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                for l in 0..k {
                    let a = get(i, k)?;
                    let b = get(j, l)?;
                    for pa in &a {
                        for pb in &b {
                            pairs += 1;
                            if pairs > limits.max_tuples {
                                return Err(Error::LimitExceeded {
                                    what: "path pairs",
                                    limit: limits.max_tuples,
                                });
                            }
                            if !overlaps(pa, pb) {
                                return Ok(false);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}
