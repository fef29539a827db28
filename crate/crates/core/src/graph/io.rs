//! Line-based graph text format and DOT output.
//!
//! ```text
//! # a path on three vertices
//! p 3 2
//! e 0 1
//! e 1 2
//! ---
//! p 1 0
//! ```

use std::fmt::Write as _;
use std::io::{Read, Write};

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut graphs = parse_family(text)?;
    match graphs.len() {
        1 => Ok(graphs.pop().unwrap()),
        k => Err(Error::Parse {
            line: 0,
            msg: format!("expected one graph, found {k}"),
        }),
    }
}

/// Parses `---`-separated graphs. Empty sections are skipped.
pub fn parse_family(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut cur: Option<Section> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        if line == "---" {
            if let Some(s) = cur.take() {
                out.push(s.finish()?);
            }
            continue;
        }
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let toks: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| err(format!("not a non-negative integer: {s:?}")));
        match toks[0] {
            "p" => {
                if cur.is_some() {
                    return Err(err("second header in one graph".into()));
                }
                if toks.len() != 3 {
                    return Err(err("header must be `p <n> <m>`".into()));
                }
                cur = Some(Section {
                    line: line_no,
                    n: num(toks[1])?,
                    m: num(toks[2])?,
                    edges: Vec::new(),
                });
            }
            "e" => {
                let s = cur.as_mut().ok_or_else(|| err("edge before header".into()))?;
                if toks.len() != 3 {
                    return Err(err("edge must be `e <u> <v>`".into()));
                }
                let (u, v) = (num(toks[1])?, num(toks[2])?);
                if u >= s.n || v >= s.n {
                    return Err(err(format!("edge ({u}, {v}) out of range for n = {}", s.n)));
                }
                if u == v {
                    return Err(err(format!("self-loop at {u}")));
                }
                s.edges.push((u, v));
            }
            t => return Err(err(format!("unknown record {t:?}"))),
        }
    }
    if let Some(s) = cur {
        out.push(s.finish()?);
    }
    Ok(out)
}

struct Section {
    line: usize,
    n: usize,
    m: usize,
    edges: Vec<(usize, usize)>,
}

impl Section {
    fn finish(self) -> Result<Graph> {
        let g = Graph::from_edges(self.n, &self.edges)?;
        if g.m() != self.m || self.edges.len() != self.m {
            return Err(Error::Parse {
                line: self.line,
                msg: format!("header declares {} edges, found {} distinct", self.m, g.m()),
            });
        }
        Ok(g)
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("p {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(s, "e {u} {v}").unwrap();
    }
    s
}

pub fn write_family(gs: &[Graph]) -> String {
    gs.iter().map(write_graph).collect::<Vec<_>>().join("---\n")
}

pub fn read_family_from(mut r: impl Read) -> Result<Vec<Graph>> {
    let mut s = String::new();
    r.read_to_string(&mut s)?;
    parse_family(&s)
}

pub fn read_graph_from(mut r: impl Read) -> Result<Graph> {
    let mut s = String::new();
    r.read_to_string(&mut s)?;
    parse_graph(&s)
}

pub fn write_graph_to(g: &Graph, mut w: impl Write) -> Result<()> {
    w.write_all(write_graph(g).as_bytes())?;
    Ok(())
}

/// Undirected DOT; vertex labels become node labels when present.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut s = format!("graph {name} {{\n");
    for v in g.vertices() {
        match g.labels() {
            Some(l) => writeln!(s, "  {v} [label=\"{}\"];", l[v].replace('"', "\\\"")).unwrap(),
            None => writeln!(s, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(s, "  {u} -- {v};").unwrap();
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::*;

    #[test]
    fn round_trip() {
        for g in [petersen(), Graph::empty(0), Graph::empty(3), paw()] {
            assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        }
        let fam = vec![p(3), two_k2(), k(1)];
        assert_eq!(parse_family(&write_family(&fam)).unwrap(), fam);
    }

    #[test]
    fn comments_and_blanks() {
        let text = "# header\n\np 3 1  # trailing\n\ne 0 2\n---\n---\np 0 0\n";
        let fam = parse_family(text).unwrap();
        assert_eq!(fam.len(), 2);
        assert!(fam[0].has_edge(0, 2));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_graph("p 2 1\ne 0 5\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        let e = parse_graph("e 0 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        let e = parse_graph("p 2 2\ne 0 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        assert!(parse_graph("p 2 1\ne 1 1\n").is_err());
        assert!(parse_graph("q 1 0\n").is_err());
    }

    #[test]
    fn dot_output() {
        let mut g = p(2);
        g.set_labels(vec!["a".into(), "b".into()]).unwrap();
        let d = to_dot(&g, "g");
        assert!(d.contains("0 -- 1;"));
        assert!(d.contains("label=\"a\""));
    }
}
