//! Edge-list and certificate documents.
//!
//! An edge list is a header line `n m` followed by `m` lines `u v` with
//! 0-based vertex ids. Lines starting with `#` and blank lines are ignored.
//! Certificates are JSON objects listing arcs and vertex sums together with
//! a `meta` block naming the pipeline that produced them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Certificate, Graph, Labeling, Orientation, MAX_EDGES};

fn parse_field<T: std::str::FromStr>(token: &str, line: usize, what: &str) -> Result<T> {
    token.parse().map_err(|_| {
        Error::Malformed(format!(
            "line {line}: {what} {token:?} is not a non-negative integer"
        ))
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::Malformed("missing header line \"n m\"".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Malformed(format!(
            "line {hline}: header must be \"n m\", got {header:?}"
        )));
    }
    let n: usize = parse_field(fields[0], hline, "vertex count")?;
    let m: usize = parse_field(fields[1], hline, "edge count")?;
    if m > MAX_EDGES {
        return Err(Error::Malformed(format!("edge count {m} exceeds {MAX_EDGES}")));
    }
    let mut edges = Vec::with_capacity(m);
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Malformed(format!(
                "line {line}: expected \"u v\", got {content:?}"
            )));
        }
        if edges.len() == m {
            return Err(Error::Malformed(format!(
                "line {line}: more than the declared {m} edges"
            )));
        }
        edges.push((
            parse_field(fields[0], line, "vertex")?,
            parse_field(fields[1], line, "vertex")?,
        ));
    }
    if edges.len() != m {
        return Err(Error::Malformed(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::new(n, edges)
}

/// Canonical edge list: header plus one line per edge, in edge order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(16 * (g.m() + 1));
    out.push_str(&format!("{} {}\n", g.n(), g.m()));
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub label: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexSum {
    pub vertex: usize,
    pub sum: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub pipeline: String,
    #[serde(default)]
    pub case: Option<String>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub versions: BTreeMap<String, String>,
}

impl Meta {
    /// Meta block stamped with this library's version.
    pub fn new(pipeline: impl Into<String>) -> Self {
        let mut versions = BTreeMap::new();
        versions.insert("antimagic".to_string(), env!("CARGO_PKG_VERSION").to_string());
        Meta {
            pipeline: pipeline.into(),
            case: None,
            seed: None,
            versions,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDocument {
    pub n: usize,
    pub m: usize,
    pub arcs: Vec<Arc>,
    pub sums: Vec<VertexSum>,
    pub meta: Meta,
}

impl CertificateDocument {
    pub fn from_certificate(cert: &Certificate, meta: Meta) -> Self {
        CertificateDocument {
            n: cert.graph.n(),
            m: cert.graph.m(),
            arcs: cert
                .arcs()
                .map(|(tail, head, label)| Arc { tail, head, label })
                .collect(),
            sums: cert
                .sums
                .iter()
                .enumerate()
                .map(|(vertex, &sum)| VertexSum { vertex, sum })
                .collect(),
            meta,
        }
    }

    /// Rebuilds the certificate with the recorded sums kept as given, so the
    /// verifier can compare them against the arcs.
    pub fn to_certificate(&self) -> Result<Certificate> {
        if self.arcs.len() != self.m {
            return Err(Error::Malformed(format!(
                "m = {} but {} arcs listed",
                self.m,
                self.arcs.len()
            )));
        }
        let graph = Graph::new(self.n, self.arcs.iter().map(|a| (a.tail, a.head)).collect())?;
        let mut sums = vec![None; self.n];
        for s in &self.sums {
            let slot = sums
                .get_mut(s.vertex)
                .ok_or_else(|| Error::Malformed(format!("sum listed for unknown vertex {}", s.vertex)))?;
            if slot.replace(s.sum).is_some() {
                return Err(Error::Malformed(format!("vertex {} has two sums", s.vertex)));
            }
        }
        let sums = sums
            .into_iter()
            .enumerate()
            .map(|(v, s)| s.ok_or_else(|| Error::Malformed(format!("no sum listed for vertex {v}"))))
            .collect::<Result<Vec<i64>>>()?;
        Ok(Certificate {
            orientation: Orientation::all_forward(graph.m()),
            labeling: Labeling::new(self.arcs.iter().map(|a| a.label).collect()),
            graph,
            sums,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate documents serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(format!("certificate JSON: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{verify_antimagic, Verdict, Violation};
    use crate::theorem1::antimagic_orientation_bipartite;

    #[test]
    fn edge_list_round_trip() {
        let text = "4 3\n0 1\n0 2\n0 3\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!((g.n(), g.m()), (4, 3));
        assert_eq!(write_edge_list(&g), text);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_edge_list("# star\n\n3 2\n# edges\n0 1\n  1 2  \n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn malformed_edge_lists() {
        for bad in [
            "",
            "3\n",
            "3 x\n",
            "3 2\n0 1\n",
            "3 1\n0 1\n1 2\n",
            "3 1\n0 1 2\n",
            "3 1\n0 3\n",
            "3 1\n1 1\n",
            "3 2\n0 1\n1 0\n",
            "3 1\n-1 2\n",
        ] {
            assert!(
                matches!(parse_edge_list(bad), Err(Error::Malformed(_))),
                "{bad:?}"
            );
        }
    }

    fn star_doc() -> CertificateDocument {
        let g = parse_edge_list("4 3\n0 1\n0 2\n0 3\n").unwrap();
        let cert = antimagic_orientation_bipartite(&g).unwrap();
        CertificateDocument::from_certificate(&cert, Meta::new("bipartite"))
    }

    #[test]
    fn certificate_round_trip() {
        let doc = star_doc();
        let json = doc.to_json();
        let back = CertificateDocument::from_json(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), json);
        let cert = back.to_certificate().unwrap();
        assert_eq!(verify_antimagic(&cert), Verdict::Accept);
    }

    #[test]
    fn tampered_certificates_are_caught() {
        let mut doc = star_doc();
        doc.arcs[1].label = doc.arcs[0].label;
        let cert = doc.to_certificate().unwrap();
        assert!(matches!(
            verify_antimagic(&cert),
            Verdict::Reject(Violation::DuplicateLabel { .. })
        ));

        let mut doc = star_doc();
        doc.sums[0].sum += 1;
        let cert = doc.to_certificate().unwrap();
        assert!(matches!(
            verify_antimagic(&cert),
            Verdict::Reject(Violation::SumMismatch { .. })
        ));
    }

    #[test]
    fn malformed_certificates() {
        let mut doc = star_doc();
        doc.sums.pop();
        assert!(matches!(doc.to_certificate(), Err(Error::Malformed(_))));
        let mut doc = star_doc();
        doc.m = 5;
        assert!(matches!(doc.to_certificate(), Err(Error::Malformed(_))));
        assert!(matches!(
            CertificateDocument::from_json("{"),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            CertificateDocument::from_json(
                r#"{"n":1,"m":0,"arcs":[],"sums":[],"meta":{"pipeline":"x"},"extra":1}"#
            ),
            Err(Error::Malformed(_))
        ));
    }
}
