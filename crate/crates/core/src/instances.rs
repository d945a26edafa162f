//! Seeded random instances for the property suites: small grids and rhombi with
//! random subgraph masks and marked points, and small holey Aztec regions.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

use crate::aztec::{build_mixed_aztec, punch_holes, AztecRegion, Cell, Color};
use crate::drawing::{Drawing, Edge, MarkedConfig, VertexId};
use crate::error::Result;
use crate::lattices::{build_grid, xyz_rhombus};
use crate::poly::{variables, WeightPoly};

/// A drawing, its marked points and a short description.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub drawing: Drawing,
    pub config: MarkedConfig,
}

fn xy_grid(w: i64, h: i64) -> Result<Drawing> {
    let v = variables(&["x", "y"]);
    build_grid(w, h, WeightPoly::var(&v, "x")?, WeightPoly::var(&v, "y")?)
}

fn with_mask(d: &Drawing, keep: &[bool]) -> Result<Drawing> {
    let edges: Vec<Edge> = d
        .edges()
        .iter()
        .zip(keep)
        .map(|(e, &k)| Edge {
            in_subgraph: k,
            ..e.clone()
        })
        .collect();
    Drawing::new(d.vars().clone(), d.vertices().to_vec(), edges, d.source(), d.sink())
}

/// Every start reaches some end and every end is reached from some start.
fn connected_enough(d: &Drawing, starts: &[VertexId], ends: &[VertexId]) -> bool {
    let reach: Vec<Vec<bool>> = ends.iter().map(|&v| d.reaching(v, true)).collect();
    starts.iter().all(|&u| reach.iter().any(|r| r[u])) && reach.iter().all(|r| starts.iter().any(|&u| r[u]))
}

/// A random host of the allowed sizes: a grid up to 5x5 or a rhombus up to 4.
pub fn random_host<R: Rng>(rng: &mut R) -> Result<(String, Drawing)> {
    if rng.random_bool(0.5) {
        let (w, h) = (rng.random_range(2..=5), rng.random_range(2..=5));
        Ok((format!("grid {w}x{h}"), xy_grid(w, h)?))
    } else {
        let n = rng.random_range(2..=4);
        Ok((format!("rhombus {n}"), xyz_rhombus(n)?))
    }
}

/// A random instance with `n` marked pairs on a random host, with a random
/// subgraph mask that keeps every start and end connected to the other side.
pub fn random_instance<R: Rng>(rng: &mut R, n: usize) -> Result<Instance> {
    loop {
        let (name, host) = random_host(rng)?;
        if host.num_vertices() < 2 * n + 2 {
            continue;
        }
        let mut ids: Vec<VertexId> = (0..host.num_vertices()).collect();
        ids.shuffle(rng);
        let starts = ids[..n].to_vec();
        let ends = ids[n..2 * n].to_vec();
        if !connected_enough(&host, &starts, &ends) {
            continue;
        }
        let drop_rate = [0.0, 0.1, 0.25][rng.random_range(0..3)];
        let mut drawing = host.clone();
        for _ in 0..20 {
            let keep: Vec<bool> = (0..host.edges().len()).map(|_| !rng.random_bool(drop_rate)).collect();
            let masked = with_mask(&host, &keep)?;
            if connected_enough(&masked, &starts, &ends) {
                drawing = masked;
                break;
            }
        }
        let config = MarkedConfig::new(&drawing, starts, ends)?;
        let label = |vs: &[VertexId]| {
            vs.iter()
                .map(|&v| format!("({},{})", drawing.pos(v).x, drawing.pos(v).y))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let hidden = drawing.edges().iter().filter(|e| !e.in_subgraph).count();
        let name = format!(
            "{name}, {hidden} host-only edges, U = {}, V = {}",
            label(config.starts()),
            label(config.ends())
        );
        return Ok(Instance { name, drawing, config });
    }
}

/// A mixed Aztec rectangle with up to `max_pairs` white/black hole pairs.
pub fn random_holey_region<R: Rng>(rng: &mut R, max_m: i64, max_n: i64, max_pairs: usize) -> Result<AztecRegion> {
    let m = rng.random_range(1..=max_m);
    let n = rng.random_range(1..=max_n);
    let r = build_mixed_aztec(m, n)?;
    let cells = r.cells();
    let (mut black, mut white): (Vec<Cell>, Vec<Cell>) = cells.into_iter().partition(|c| c.color() == Color::Black);
    black.shuffle(rng);
    white.shuffle(rng);
    let pairs = rng.random_range(0..=max_pairs).min(black.len());
    let holes: Vec<Cell> = black[..pairs].iter().chain(&white[..pairs]).copied().collect();
    punch_holes(&r, &holes)
}

/// A random color-preserving translation keeping every hole inside, if one
/// other than the identity exists.
pub fn random_translation<R: Rng>(rng: &mut R, r: &AztecRegion) -> Option<(i64, i64)> {
    let mut moves = Vec::new();
    let span = 2 * r.m.max(r.n);
    for da in (-span..=span).step_by(2) {
        for db in (-span..=span).step_by(2) {
            if (da, db) != (0, 0) && r.holes().all(|h| r.in_shape(h.translate(da, db))) {
                moves.push((da, db));
            }
        }
    }
    moves.choose(rng).copied()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn instances_are_deterministic_and_valid() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=3 {
            let x = random_instance(&mut a, n).unwrap();
            let y = random_instance(&mut b, n).unwrap();
            assert_eq!(x.name, y.name);
            assert_eq!(x.drawing, y.drawing);
            assert!(x.drawing.validate().is_empty());
            assert_eq!(x.config.n(), n);
            assert!(connected_enough(&x.drawing, x.config.starts(), x.config.ends()));
        }
    }

    #[test]
    fn translations_preserve_color() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let r = random_holey_region(&mut rng, 4, 4, 2).unwrap();
            if let Some((da, db)) = random_translation(&mut rng, &r) {
                let t = r.translate_holes(da, db).unwrap();
                let colors = |r: &AztecRegion| r.color_counts();
                assert_eq!(colors(&r), colors(&t));
            }
        }
    }
}
