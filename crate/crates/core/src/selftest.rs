//! Randomised property suites over seeded instances. Each check returns an
//! [`Outcome`]; instances too large for the brute-force oracles are skipped
//! rather than truncated.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::aztec::{count_tilings_brute, count_tilings_via_paths, AztecRegion};
use crate::drawing::SideOracle;
use crate::error::Error;
use crate::instances::{random_holey_region, random_instance, random_translation, Instance};
use crate::involution::{avoids_interior_marks, intersection_number, path_avoids_interior_marks, phi, VertexOrder};
use crate::pathcount::{
    all_families, brute_force_by_type, check_compatibility, enumerate_paths, for_each_disjoint_family, h_dp,
    h_enumerated, lgv_signed, matrix_m_with, permutation_sign, signed_matrix, signed_type_sum, Limits, PathFamily,
};
use crate::poly::WeightPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Skip(String),
    Fail(String),
}

impl Outcome {
    fn from_error(e: Error) -> Self {
        match e {
            Error::LimitExceeded { .. } => Outcome::Skip(e.to_string()),
            other => Outcome::Fail(other.to_string()),
        }
    }
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return Outcome::from_error(e),
        }
    };
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Outcome::Fail(format!($($fmt)+));
        }
    };
}

/// A deliberately wrong behaviour, for checking that the suites notice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Flip the sign of the first path of the last diagonal entry of `M`.
    SignFlip,
}

/// The signed-matrix count against the brute-force sum over disjoint families.
pub fn check_main_theorem(inst: &Instance, limits: &Limits, fault: Option<Fault>) -> Outcome {
    let (d, m) = (&inst.drawing, &inst.config);
    let last = m.n().saturating_sub(1);
    let flip = move |(i, j, k): (usize, usize, usize), s: i8| {
        if fault == Some(Fault::SignFlip) && (i, j, k) == (last, last, 0) {
            -s
        } else {
            s
        }
    };
    let brute = tri!(brute_force_by_type(d, m, limits));
    let mut total = WeightPoly::zero(d.vars());
    for w in brute.values() {
        total.add_assign_ref(w);
    }
    let r = tri!(signed_matrix(d, m, limits, &flip));
    ensure!(
        r.normalized_count == total,
        "|det M| = {} but brute force gives {}",
        r.normalized_count,
        total
    );
    // sgn(pi) sgn(P) is constant over disjoint families
    let oracle = tri!(SideOracle::new(d, m));
    let mut signs = BTreeSet::new();
    let mut err = None;
    tri!(for_each_disjoint_family(d, m, limits, |f| {
        match oracle.family_sign(&f.paths) {
            Ok(s) => {
                signs.insert(s * permutation_sign(&f.connection));
            }
            Err(e) => err = Some(e),
        }
    }));
    if let Some(e) = err {
        return Outcome::Fail(e.to_string());
    }
    ensure!(signs.len() <= 1, "sgn(pi) sgn(P) takes both signs");
    Outcome::Pass
}

/// `det(h)` against the signed sum over connection types, `h` by DP against
/// enumeration, and the compatible case.
pub fn check_lgv(inst: &Instance, limits: &Limits) -> Outcome {
    let (d, m) = (&inst.drawing, &inst.config);
    for &u in m.starts() {
        for &v in m.ends() {
            let e = tri!(h_enumerated(d, u, v, limits));
            ensure!(h_dp(d, u, v) == e, "h by DP differs from enumeration");
        }
    }
    let by_type = tri!(brute_force_by_type(d, m, limits));
    let det = tri!(lgv_signed(d, m));
    let signed = signed_type_sum(d, &by_type);
    ensure!(det == signed, "det(h) = {det} but the signed sum is {signed}");
    if tri!(check_compatibility(d, m, limits)) {
        let total = by_type.values().fold(WeightPoly::zero(d.vars()), |acc, w| &acc + w);
        ensure!(det == total, "compatible but det(h) = {det} differs from {total}");
        let count = tri!(matrix_m_with(d, m, limits)).normalized_count;
        ensure!(count == total, "compatible but |det M| = {count} differs from {total}");
    }
    Outcome::Pass
}

/// phi is an involution preserving weight and family sign and flipping the
/// permutation sign of intersecting families.
pub fn check_involution(inst: &Instance, limits: &Limits) -> Outcome {
    let (d, m) = (&inst.drawing, &inst.config);
    let oracle = tri!(SideOracle::new(d, m));
    let ord = VertexOrder::by_position(d);
    for f in tri!(all_families(d, m, limits)) {
        let g = phi(&f, &ord);
        ensure!(phi(&g, &ord) == f, "phi is not an involution");
        ensure!(g.weight(d) == f.weight(d), "phi changes the weight");
        let (sf, sg) = (tri!(oracle.family_sign(&f.paths)), tri!(oracle.family_sign(&g.paths)));
        ensure!(sf == sg, "phi changes the family sign");
        if !f.is_disjoint() {
            ensure!(
                permutation_sign(&g.connection) == -permutation_sign(&f.connection),
                "phi keeps the permutation sign of an intersecting family"
            );
        } else {
            ensure!(g == f, "phi moves a disjoint family");
        }
    }
    Outcome::Pass
}

/// Parity shift under single-path substitution, and the sign relation with a
/// disjoint family of the same type, on families avoiding interior marks.
pub fn check_intersection_lemmas(inst: &Instance, limits: &Limits) -> Outcome {
    let (d, m) = (&inst.drawing, &inst.config);
    let oracle = tri!(SideOracle::new(d, m));
    let marked = |v| m.is_marked(v);
    let n = m.n();
    let mut paths = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            let ps = tri!(enumerate_paths(d, m.starts()[i], m.ends()[j], limits));
            let ps: Vec<_> = ps
                .into_iter()
                .filter(|p| path_avoids_interior_marks(p, marked))
                .collect();
            paths.insert((i, j), ps);
        }
    }
    let mut left = HashMap::new();
    for ps in paths.values() {
        for p in ps {
            left.insert(p.clone(), tri!(oracle.left_marked_points(p)).len() as i64);
        }
    }
    let mut disjoint: HashMap<Vec<usize>, PathFamily> = HashMap::new();
    tri!(for_each_disjoint_family(d, m, limits, |f| {
        disjoint.entry(f.connection.clone()).or_insert(f);
    }));
    let mut work = 0usize;
    for f in tri!(all_families(d, m, limits)) {
        if !avoids_interior_marks(&f, marked) {
            continue;
        }
        let i_f = intersection_number(&f, d) as i64;
        for i in 0..n {
            for alt in &paths[&(i, f.connection[i])] {
                work += 1;
                if work > limits.max_tuples {
                    return Outcome::Skip("too many substitutions".into());
                }
                let delta = left[&f.paths[i]] - left[alt];
                let mut g = f.clone();
                g.paths[i] = alt.clone();
                let i_g = intersection_number(&g, d) as i64;
                ensure!(
                    (i_g - i_f - delta).rem_euclid(2) == 0,
                    "intersection parity does not shift by d"
                );
            }
        }
        if let Some(q) = disjoint.get(&f.connection) {
            let sq = tri!(oracle.family_sign(&q.paths));
            let sf = tri!(oracle.family_sign(&f.paths));
            let expect = if i_f % 2 == 0 { sq } else { -sq };
            ensure!(sf == expect, "sgn(P) differs from sgn(Q)(-1)^I(P)");
        }
    }
    // disjoint families of types one transposition apart have opposite signs
    let reps: Vec<(&Vec<usize>, i8)> = disjoint
        .iter()
        .map(|(t, q)| (t, oracle.family_sign(&q.paths).unwrap_or(0)))
        .collect();
    for (ta, sa) in &reps {
        for (tb, sb) in &reps {
            let diff = ta.iter().zip(tb.iter()).filter(|(x, y)| x != y).count();
            ensure!(diff != 2 || sa == &-sb, "types one transposition apart share a sign");
        }
    }
    Outcome::Pass
}

/// Both tiling counters agree.
pub fn check_bijection(r: &AztecRegion, limits: &Limits) -> Outcome {
    let brute = tri!(count_tilings_brute(r, limits));
    let paths = tri!(count_tilings_via_paths(r, limits));
    ensure!(
        brute == paths,
        "brute force counts {brute} tilings, the path engine {paths}"
    );
    Outcome::Pass
}

/// Moving all holes by a color-preserving translation keeps the count.
pub fn check_translation(r: &AztecRegion, da: i64, db: i64, limits: &Limits) -> Outcome {
    let moved = tri!(r.translate_holes(da, db));
    let before = tri!(count_tilings_brute(r, limits));
    let after = tri!(count_tilings_brute(&moved, limits));
    ensure!(
        before == after,
        "translation by ({da}, {db}) changes {before} to {after}"
    );
    Outcome::Pass
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub instances: usize,
    pub passed: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, what: &str, o: Outcome) {
        self.instances += 1;
        match o {
            Outcome::Pass => self.passed += 1,
            Outcome::Skip(_) => self.skipped += 1,
            Outcome::Fail(msg) => self.failures.push(format!("{what}: {msg}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelftestReport {
    pub seed: u64,
    pub requested: usize,
    pub suites: Vec<SuiteResult>,
}

impl SelftestReport {
    pub fn ok(&self) -> bool {
        self.suites.iter().all(SuiteResult::ok)
    }
}

impl fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed {}", self.seed)?;
        if self.requested == 0 {
            writeln!(f, "warning: 0 instances requested, every suite passes vacuously")?;
        }
        for s in &self.suites {
            writeln!(
                f,
                "{} {}: {} instances, {} passed, {} skipped, {} failed",
                if s.ok() { "PASS" } else { "FAIL" },
                s.name,
                s.instances,
                s.passed,
                s.skipped,
                s.failures.len()
            )?;
            for msg in s.failures.iter().take(5) {
                writeln!(f, "  {msg}")?;
            }
        }
        write!(
            f,
            "{}",
            if self.ok() {
                "selftest passed"
            } else {
                "selftest FAILED"
            }
        )
    }
}

/// Runs every suite on `k` seeded instances each.
pub fn run_selftest(seed: u64, k: usize, fault: Option<Fault>) -> SelftestReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let limits = Limits {
        max_paths: 20_000,
        max_tuples: 200_000,
        max_cells: 60,
    };
    let mut main = SuiteResult {
        name: "main-theorem",
        ..Default::default()
    };
    let mut lgv = SuiteResult {
        name: "lgv",
        ..Default::default()
    };
    let mut inv = SuiteResult {
        name: "involution",
        ..Default::default()
    };
    let mut lemmas = SuiteResult {
        name: "intersection-lemmas",
        ..Default::default()
    };
    let mut bij = SuiteResult {
        name: "bijection",
        ..Default::default()
    };
    let mut trans = SuiteResult {
        name: "translation",
        ..Default::default()
    };
    for t in 0..k {
        let n = 1 + t % 3;
        let inst = match random_instance(&mut rng, n) {
            Ok(i) => i,
            Err(e) => {
                main.record("instance generation", Outcome::Fail(e.to_string()));
                continue;
            }
        };
        main.record(&inst.name, check_main_theorem(&inst, &limits, fault));
        lgv.record(&inst.name, check_lgv(&inst, &limits));
        let small = Limits {
            max_tuples: 20_000,
            ..limits
        };
        inv.record(&inst.name, check_involution(&inst, &small));
        lemmas.record(&inst.name, check_intersection_lemmas(&inst, &small));
        match random_holey_region(&mut rng, 4, 4, 2) {
            Ok(r) => {
                let name = crate::format::emit_region_file(&r).replace('\n', "; ");
                bij.record(&name, check_bijection(&r, &limits));
                let mv = random_translation(&mut rng, &r);
                match mv {
                    Some((da, db)) => trans.record(&name, check_translation(&r, da, db, &limits)),
                    None => trans.record(&name, Outcome::Skip("no translation fits".into())),
                }
            }
            Err(e) => bij.record("region generation", Outcome::Fail(e.to_string())),
        }
    }
    SelftestReport {
        seed,
        requested: k,
        suites: vec![main, lgv, inv, lemmas, bij, trans],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_run_passes_and_is_deterministic() {
        let a = run_selftest(11, 6, None);
        assert!(a.ok(), "{a}");
        assert_eq!(a, run_selftest(11, 6, None));
        assert!(a.suites.iter().all(|s| s.instances == 6));
    }

    #[test]
    fn zero_instances_warns() {
        let r = run_selftest(1, 0, None);
        assert!(r.ok());
        assert!(r.to_string().contains("0 instances"));
    }

    #[test]
    fn sign_flip_is_caught() {
        let r = run_selftest(5, 12, Some(Fault::SignFlip));
        assert!(!r.ok());
        assert!(!r.suites[0].ok());
        assert!(r.suites[1..].iter().all(SuiteResult::ok));
    }
}
