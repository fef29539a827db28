use super::Graph;

/// Canonical byte encoding: the smallest adjacency-matrix encoding over the
/// leaves of an individualisation-refinement search tree.
///
/// The first four bytes hold the order (big-endian), followed by the upper
/// triangle of the relabelled adjacency matrix, row-major, packed MSB first.
/// Equal outputs iff the graphs are isomorphic.
pub fn canonical_certificate(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut matrix = vec![false; n * n];
    for (u, v) in g.edges() {
        matrix[u * n + v] = true;
        matrix[v * n + u] = true;
    }
    let search = Search { g, n, matrix };
    let colors = search.refine(vec![0; n]);
    let mut best: Option<Vec<u8>> = None;
    search.descend(colors, &mut best);
    let mut out = (n as u32).to_be_bytes().to_vec();
    out.extend(best.unwrap_or_default());
    out
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let mut da: Vec<_> = a.vertices().map(|v| a.degree(v)).collect();
    let mut db: Vec<_> = b.vertices().map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    da == db && canonical_certificate(a) == canonical_certificate(b)
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    matrix: Vec<bool>,
}

impl Search<'_> {
    /// Colour refinement. New colours order sub-cells inside their parent
    /// cell, so the ordered partition stays isomorphism-invariant.
    fn refine(&self, mut colors: Vec<usize>) -> Vec<usize> {
        let n = self.n;
        let mut classes = count_classes(&colors);
        loop {
            let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<usize> = self.g.neighbors(v).iter().map(|&w| colors[w]).collect();
                    nb.sort_unstable();
                    (colors[v], nb, v)
                })
                .collect();
            sigs.sort();
            let mut next = vec![0; n];
            let mut c = 0;
            for i in 0..n {
                if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                    c = i;
                }
                next[sigs[i].2] = c;
            }
            let nc = count_classes(&next);
            colors = next;
            if nc == classes {
                return colors;
            }
            classes = nc;
        }
    }

    fn descend(&self, colors: Vec<usize>, best: &mut Option<Vec<u8>>) {
        let n = self.n;
        // Colours are cell start positions, so a cell of size s is colour c
        // with s vertices sharing it.
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c] += 1;
        }
        let target = (0..n).find(|&c| sizes[c] > 1);
        let Some(cell) = target else {
            let enc = self.encode(&colors);
            if best.as_ref().map_or(true, |b| enc < *b) {
                *best = Some(enc);
            }
            return;
        };
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == cell).collect();
        let twins = self.is_twin_class(&members);
        for (i, &v) in members.iter().enumerate() {
            if twins && i > 0 {
                break;
            }
            let mut next = colors.clone();
            for (u, c) in next.iter_mut().enumerate() {
                if *c == cell && u != v {
                    *c = cell + 1;
                }
            }
            self.descend(self.refine(next), best);
        }
    }

    /// Members pairwise interchangeable by an automorphism: identical
    /// outside neighbourhoods and the cell is a clique or independent set.
    fn is_twin_class(&self, members: &[usize]) -> bool {
        let n = self.n;
        let first = members[0];
        let inner_adj = members.len() > 1 && self.matrix[first * n + members[1]];
        for &a in members {
            for &b in members {
                if a != b && self.matrix[a * n + b] != inner_adj {
                    return false;
                }
            }
        }
        let mut inside = vec![false; n];
        for &m in members {
            inside[m] = true;
        }
        members[1..].iter().all(|&v| {
            (0..n).all(|w| inside[w] || self.matrix[first * n + w] == self.matrix[v * n + w])
        })
    }

    fn encode(&self, colors: &[usize]) -> Vec<u8> {
        let n = self.n;
        let mut inv = vec![0; n];
        for (v, &c) in colors.iter().enumerate() {
            inv[c] = v;
        }
        let bits = n * n.saturating_sub(1) / 2;
        let mut out = vec![0u8; bits.div_ceil(8)];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.matrix[inv[i] * n + inv[j]] {
                    out[k / 8] |= 0x80 >> (k % 8);
                }
                k += 1;
            }
        }
        out
    }
}

fn count_classes(colors: &[usize]) -> usize {
    let mut seen = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}
