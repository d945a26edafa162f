//! Line-oriented text formats for path instances and holey Aztec regions.
//!
//! Graph files:
//!
//! ```text
//! # comment
//! variables x y
//! vertex <id> <x> <y>
//! edge <src> <dst> <weight> [supergraph_only]
//! source <id>
//! sink <id>
//! starts <id>...
//! ends <id>...
//! ```
//!
//! The weight is everything between the two endpoints and the optional trailing
//! flag, in polynomial syntax. Region files start with `aztec <m> <n> [full]`
//! followed by `hole <a> <b>` lines in diagonal cell coordinates.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::aztec::{build_aztec_rectangle, build_mixed_aztec, punch_holes, AztecRegion, Cell, RegionKind};
use crate::drawing::{Drawing, Edge, MarkedConfig, Vertex, VertexId};
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::poly::{variables, WeightPoly};

const SUPERGRAPH_ONLY: &str = "supergraph_only";

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn int(lineno: usize, tok: (usize, &str)) -> Result<i64> {
    tok.1
        .parse()
        .map_err(|_| perr(lineno, tok.0, format!("expected an integer, found `{}`", tok.1)))
}

#[derive(Default)]
struct GraphBuilder {
    vars: Option<Arc<[String]>>,
    vertices: Vec<Vertex>,
    ids: HashMap<String, VertexId>,
    edges: Vec<Edge>,
    source: Option<VertexId>,
    sink: Option<VertexId>,
    starts: Option<Vec<VertexId>>,
    ends: Option<Vec<VertexId>>,
}

impl GraphBuilder {
    fn vertex(&self, lineno: usize, tok: (usize, &str)) -> Result<VertexId> {
        self.ids
            .get(tok.1)
            .copied()
            .ok_or_else(|| perr(lineno, tok.0, format!("unknown vertex `{}`", tok.1)))
    }

    fn vars(&self, lineno: usize) -> Result<&Arc<[String]>> {
        self.vars
            .as_ref()
            .ok_or_else(|| perr(lineno, 1, "`variables` must come before any weight"))
    }
}

/// Parses and validates a graph file.
pub fn parse_graph_file(text: &str) -> Result<(Drawing, MarkedConfig)> {
    let mut g = GraphBuilder::default();
    for (k, raw) in text.lines().enumerate() {
        let lineno = k + 1;
        let line = strip_comment(raw);
        let toks = tokens(line);
        let Some(&(col, keyword)) = toks.first() else {
            continue;
        };
        let args = &toks[1..];
        let arity = |n: usize| -> Result<()> {
            if args.len() == n {
                Ok(())
            } else {
                Err(perr(
                    lineno,
                    col,
                    format!("`{keyword}` takes {n} argument(s), found {}", args.len()),
                ))
            }
        };
        match keyword {
            "variables" => {
                if g.vars.is_some() {
                    return Err(perr(lineno, col, "duplicate `variables` line"));
                }
                let names: Vec<&str> = args.iter().map(|t| t.1).collect();
                for (i, t) in args.iter().enumerate() {
                    let ok = t.1.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                        && t.1.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                    if !ok {
                        return Err(perr(lineno, t.0, format!("invalid variable name `{}`", t.1)));
                    }
                    if names[..i].contains(&t.1) {
                        return Err(perr(lineno, t.0, format!("duplicate variable `{}`", t.1)));
                    }
                }
                g.vars = Some(variables(&names));
            }
            "vertex" => {
                arity(3)?;
                let id = args[0].1;
                if g.ids.contains_key(id) {
                    return Err(perr(lineno, args[0].0, format!("duplicate vertex id `{id}`")));
                }
                let pos = Point::new(int(lineno, args[1])?, int(lineno, args[2])?);
                g.ids.insert(id.to_string(), g.vertices.len());
                g.vertices.push(Vertex {
                    label: id.to_string(),
                    pos,
                });
            }
            "edge" => {
                if args.len() < 3 {
                    return Err(perr(lineno, col, "`edge` needs a source, a target and a weight"));
                }
                let src = g.vertex(lineno, args[0])?;
                let dst = g.vertex(lineno, args[1])?;
                let mut weight_toks = &args[2..];
                let mut in_subgraph = true;
                if weight_toks.last().is_some_and(|t| t.1 == SUPERGRAPH_ONLY) {
                    in_subgraph = false;
                    weight_toks = &weight_toks[..weight_toks.len() - 1];
                }
                let Some(first) = weight_toks.first() else {
                    return Err(perr(lineno, col, "missing edge weight"));
                };
                let last = weight_toks.last().unwrap();
                let (from, to) = (first.0 - 1, last.0 - 1 + last.1.len());
                let vars = g.vars(lineno)?.clone();
                let weight = WeightPoly::parse(&vars, &line[from..to]).map_err(|e| match e {
                    Error::Parse { column, message, .. } => perr(lineno, from + column, message),
                    other => other,
                })?;
                g.edges.push(Edge {
                    src,
                    dst,
                    weight,
                    in_subgraph,
                });
            }
            "source" | "sink" => {
                arity(1)?;
                let v = Some(g.vertex(lineno, args[0])?);
                let slot = if keyword == "source" {
                    &mut g.source
                } else {
                    &mut g.sink
                };
                if slot.is_some() {
                    return Err(perr(lineno, col, format!("duplicate `{keyword}` line")));
                }
                *slot = v;
            }
            "starts" | "ends" => {
                let vs = args.iter().map(|&t| g.vertex(lineno, t)).collect::<Result<Vec<_>>>()?;
                let slot = if keyword == "starts" {
                    &mut g.starts
                } else {
                    &mut g.ends
                };
                if slot.is_some() {
                    return Err(perr(lineno, col, format!("duplicate `{keyword}` line")));
                }
                *slot = Some(vs);
            }
            other => return Err(perr(lineno, col, format!("unknown keyword `{other}`"))),
        }
    }
    let end = text.lines().count().max(1);
    let vars = g.vars.clone().ok_or_else(|| perr(end, 1, "missing `variables` line"))?;
    let source = g.source.ok_or_else(|| perr(end, 1, "missing `source` line"))?;
    let sink = g.sink.ok_or_else(|| perr(end, 1, "missing `sink` line"))?;
    let d = Drawing::new(vars, g.vertices, g.edges, source, sink)?;
    let m = MarkedConfig::new(&d, g.starts.unwrap_or_default(), g.ends.unwrap_or_default())?;
    Ok((d, m))
}

/// Canonical text of a drawing and marked configuration.
pub fn emit_graph_file(d: &Drawing, m: &MarkedConfig) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "variables {}", d.vars().join(" "));
    for v in d.vertices() {
        let _ = writeln!(s, "vertex {} {} {}", v.label, v.pos.x, v.pos.y);
    }
    for e in d.edges() {
        let flag = if e.in_subgraph { "" } else { " supergraph_only" };
        let _ = writeln!(s, "edge {} {} {}{}", d.label(e.src), d.label(e.dst), e.weight, flag);
    }
    let _ = writeln!(s, "source {}", d.label(d.source()));
    let _ = writeln!(s, "sink {}", d.label(d.sink()));
    let list = |vs: &[VertexId]| vs.iter().map(|&v| format!(" {}", d.label(v))).collect::<String>();
    let _ = writeln!(s, "starts{}", list(m.starts()));
    let _ = writeln!(s, "ends{}", list(m.ends()));
    s
}

/// Parses a region file.
pub fn parse_region_file(text: &str) -> Result<AztecRegion> {
    let mut region: Option<AztecRegion> = None;
    let mut holes = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let lineno = k + 1;
        let toks = tokens(strip_comment(raw));
        let Some(&(col, keyword)) = toks.first() else {
            continue;
        };
        match keyword {
            "aztec" => {
                if region.is_some() {
                    return Err(perr(lineno, col, "duplicate `aztec` line"));
                }
                let full = match toks.len() {
                    3 => false,
                    4 if toks[3].1 == "full" => true,
                    _ => return Err(perr(lineno, col, "expected `aztec <m> <n> [full]`")),
                };
                let (m, n) = (int(lineno, toks[1])?, int(lineno, toks[2])?);
                let r = if full {
                    build_aztec_rectangle(m, n)
                } else {
                    build_mixed_aztec(m, n)
                };
                region = Some(r.map_err(|e| perr(lineno, toks[1].0, e.to_string()))?);
            }
            "hole" => {
                if toks.len() != 3 {
                    return Err(perr(lineno, col, "expected `hole <a> <b>`"));
                }
                if region.is_none() {
                    return Err(perr(lineno, col, "`hole` before the `aztec` line"));
                }
                holes.push(Cell::new(int(lineno, toks[1])?, int(lineno, toks[2])?));
            }
            other => return Err(perr(lineno, col, format!("unknown keyword `{other}`"))),
        }
    }
    let r = region.ok_or_else(|| perr(text.lines().count().max(1), 1, "missing `aztec` line"))?;
    punch_holes(&r, &holes)
}

/// Canonical text of a region, holes in increasing `(a, b)` order.
pub fn emit_region_file(r: &AztecRegion) -> String {
    let mut s = String::new();
    let full = if r.kind == RegionKind::Full { " full" } else { "" };
    let _ = writeln!(s, "aztec {} {}{}", r.m, r.n, full);
    for h in r.holes() {
        let _ = writeln!(s, "hole {} {}", h.a, h.b);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::{build_grid, thm51_instance, ClosedFormParams};

    fn grid22() -> Drawing {
        let v = variables(&["x", "y"]);
        build_grid(
            2,
            2,
            WeightPoly::var(&v, "x").unwrap(),
            WeightPoly::var(&v, "y").unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn graph_round_trip() {
        let d = grid22();
        let m = MarkedConfig::new(&d, vec![1], vec![7]).unwrap();
        let text = emit_graph_file(&d, &m);
        let (d2, m2) = parse_graph_file(&text).unwrap();
        assert_eq!(d, d2);
        assert_eq!(m, m2);
        assert_eq!(emit_graph_file(&d2, &m2), text);
        let (d, m) = thm51_instance(ClosedFormParams::new(1, 1, 1).unwrap()).unwrap();
        let (d2, m2) = parse_graph_file(&emit_graph_file(&d, &m)).unwrap();
        assert_eq!((d, m), (d2, m2));
    }

    #[test]
    fn supergraph_flag_and_comments() {
        let text = "variables x\n# a comment\nvertex s 0 0\nvertex t 0 1 # trailing\nedge s t 2*x supergraph_only\nsource s\nsink t\nstarts\nends\n";
        let (d, m) = parse_graph_file(text).unwrap();
        assert!(!d.edges()[0].in_subgraph);
        assert_eq!(d.edges()[0].weight.to_string(), "2*x");
        assert_eq!(m.n(), 0);
    }

    #[test]
    fn weights_with_spaces() {
        let text = "variables x y\nvertex s 0 0\nvertex t 0 1\nedge s t x + 3*y\nsource s\nsink t\n";
        let (d, _) = parse_graph_file(text).unwrap();
        assert_eq!(d.edges()[0].weight.to_string(), "x + 3*y");
    }

    #[test]
    fn duplicate_vertex_names_the_id() {
        let text = "variables x\nvertex a 0 0\nvertex a 1 1\n";
        let e = parse_graph_file(text).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, column: 8, .. }), "{e}");
        assert!(e.to_string().contains("`a`"));
    }

    #[test]
    fn downward_edge_fails_validation() {
        let text = "variables x\nvertex s 0 1\nvertex t 0 0\nedge s t x\nsource s\nsink t\n";
        let e = parse_graph_file(text).unwrap_err();
        assert!(e.to_string().contains("upwardness"), "{e}");
    }

    #[test]
    fn weight_errors_carry_the_column() {
        let text = "variables x\nvertex s 0 0\nvertex t 0 1\nedge s t 2*q\n";
        match parse_graph_file(text).unwrap_err() {
            Error::Parse { line, column, .. } => {
                assert_eq!(line, 4);
                assert_eq!(column, 12);
            }
            e => panic!("{e}"),
        }
        assert!(parse_graph_file("variables x\nfrob 1\n").is_err());
        assert!(parse_graph_file("vertex a 0 zero\n").is_err());
    }

    #[test]
    fn region_round_trip() {
        let text = "aztec 3 5\nhole 1 4\nhole 4 3\n";
        let r = parse_region_file(text).unwrap();
        assert_eq!(r.num_holes(), 2);
        assert_eq!(emit_region_file(&r), text);
        let full = parse_region_file("# diamond\naztec 2 2 full\n").unwrap();
        assert_eq!(full.kind, RegionKind::Full);
        assert_eq!(parse_region_file(&emit_region_file(&full)).unwrap(), full);
        assert!(parse_region_file("aztec 2 2\nhole 0 1\n").is_err());
        assert!(parse_region_file("hole 1 2\n").is_err());
        assert!(parse_region_file("aztec 0 2\n").is_err());
    }
}
