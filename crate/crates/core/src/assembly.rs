use crate::error::{Error, Result};
use crate::graph::{verify_antimagic, Certificate, Graph, Labeling, Orientation, Verdict};

/// Orientation and labeling of a graph filled in piece by piece.
pub(crate) struct Assembly<'a> {
    g: &'a Graph,
    orientation: Orientation,
    labels: Vec<u64>,
}

impl<'a> Assembly<'a> {
    pub fn new(g: &'a Graph) -> Self {
        Assembly {
            g,
            orientation: Orientation::all_forward(g.m()),
            labels: vec![0; g.m()],
        }
    }

    pub fn set(&mut self, e: usize, tail: usize, label: u64) {
        debug_assert_eq!(self.labels[e], 0, "edge {e} labeled twice");
        self.orientation.set_tail(self.g, e, tail);
        self.labels[e] = label;
    }

    /// Copies a labeling of a spanning subgraph whose edge `i` is `parent[i]` here.
    pub fn import(&mut self, sub: &Graph, parent: &[usize], orientation: &Orientation, labeling: &Labeling) {
        for (i, &e) in parent.iter().enumerate() {
            self.set(e, orientation.tail(sub, i), labeling.get(i));
        }
    }

    /// Oriented sums over the edges labeled so far.
    pub fn partial_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.g.n()];
        for e in 0..self.g.m() {
            let l = self.labels[e] as i64;
            if l != 0 {
                sums[self.orientation.head(self.g, e)] += l;
                sums[self.orientation.tail(self.g, e)] -= l;
            }
        }
        sums
    }

    /// `vertices` sorted by current partial sum, ties by id.
    pub fn sort_by_partial_sum(&self, vertices: &[usize]) -> Vec<usize> {
        let sums = self.partial_sums();
        let mut order = vertices.to_vec();
        order.sort_by_key(|&v| (sums[v], v));
        order
    }

    /// Builds the certificate and runs the verifier on it.
    pub fn finish(self, what: &str) -> Result<Certificate> {
        let cert = self.finish_unverified(what)?;
        match verify_antimagic(&cert) {
            Verdict::Accept => Ok(cert),
            Verdict::Reject(v) => Err(Error::Internal(format!("{what}: verifier rejected output: {v}"))),
        }
    }

    pub fn finish_unverified(self, what: &str) -> Result<Certificate> {
        if let Some(e) = self.labels.iter().position(|&l| l == 0) {
            return Err(Error::Internal(format!("{what}: edge {e} left unlabeled")));
        }
        Certificate::new(self.g.clone(), self.orientation, Labeling::new(self.labels))
            .map_err(|e| Error::Internal(format!("{what}: {e}")))
    }
}
