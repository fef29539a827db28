//! Planarity testing by path addition (Demoucron–Malgrange–Pertuiset) on
//! biconnected blocks, with block rotations merged at cut vertices.

use serde::Serialize;

use super::{Graph, Vertex};

/// Combinatorial embedding: a cyclic neighbour order per vertex and the
/// faces traced from it. Face tracing follows dart `(u, v)` with
/// `(v, w)` where `w` succeeds `u` in the rotation at `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RotationEmbedding {
    pub rotation: Vec<Vec<Vertex>>,
    pub faces: Vec<Vec<(Vertex, Vertex)>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlanarityResult {
    Planar(RotationEmbedding),
    NotPlanar,
}

impl PlanarityResult {
    pub fn is_planar(&self) -> bool {
        matches!(self, PlanarityResult::Planar(_))
    }

    pub fn embedding(self) -> Option<RotationEmbedding> {
        match self {
            PlanarityResult::Planar(e) => Some(e),
            PlanarityResult::NotPlanar => None,
        }
    }
}

impl RotationEmbedding {
    /// Traces all faces of a rotation system.
    pub fn from_rotation(rotation: Vec<Vec<Vertex>>) -> Self {
        let n = rotation.len();
        let succ = |v: Vertex, u: Vertex| -> Vertex {
            let r = &rotation[v];
            let i = r.iter().position(|&x| x == u).expect("dart endpoint not in rotation");
            r[(i + 1) % r.len()]
        };
        let mut used: Vec<Vec<bool>> = rotation.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = Vec::new();
        for u in 0..n {
            for i in 0..rotation[u].len() {
                if used[u][i] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (u, rotation[u][i]);
                loop {
                    let idx = rotation[a].iter().position(|&x| x == b).unwrap();
                    if used[a][idx] {
                        break;
                    }
                    used[a][idx] = true;
                    face.push((a, b));
                    let c = succ(b, a);
                    a = b;
                    b = c;
                }
                faces.push(face);
            }
        }
        RotationEmbedding { rotation, faces }
    }

    /// Euler's formula per connected component of `g`, counting a single
    /// face for an isolated vertex.
    pub fn euler_holds(&self, g: &Graph) -> bool {
        let comps = g.connected_components();
        let mut comp_of = vec![0; g.n()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut faces = vec![0usize; comps.len()];
        for f in &self.faces {
            faces[comp_of[f[0].0]] += 1;
        }
        comps.iter().enumerate().all(|(i, c)| {
            let edges: usize = c.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
            let f = if edges == 0 { 1 } else { faces[i] };
            c.len() + f == edges + 2
        })
    }

    /// Distinct boundary vertices of each face, in first-visit order.
    /// Isolated vertices contribute a face of their own.
    pub fn face_boundaries(&self, g: &Graph) -> Vec<Vec<Vertex>> {
        let mut out: Vec<Vec<Vertex>> = self
            .faces
            .iter()
            .map(|f| {
                let mut seen = Vec::new();
                for &(a, _) in f {
                    if !seen.contains(&a) {
                        seen.push(a);
                    }
                }
                seen
            })
            .collect();
        for v in g.vertices() {
            if g.degree(v) == 0 {
                out.push(vec![v]);
            }
        }
        out
    }
}

pub fn planar_embedding(g: &Graph) -> PlanarityResult {
    let n = g.n();
    if n >= 3 && g.m() > 3 * n - 6 {
        return PlanarityResult::NotPlanar;
    }
    let mut rotation: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let mut verts: Vec<Vertex> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let local = |x: Vertex| verts.binary_search(&x).unwrap();
        let edges: Vec<_> = block.iter().map(|&(u, v)| (local(u), local(v))).collect();
        let sub = Graph::from_edges(verts.len(), &edges).unwrap();
        match embed_biconnected(&sub) {
            Some(rot) => {
                for (i, r) in rot.into_iter().enumerate() {
                    rotation[verts[i]].extend(r.into_iter().map(|w| verts[w]));
                }
            }
            None => return PlanarityResult::NotPlanar,
        }
    }
    let emb = RotationEmbedding::from_rotation(rotation);
    debug_assert!(emb.euler_holds(g), "path addition produced a non-planar rotation");
    if !emb.euler_holds(g) {
        return PlanarityResult::NotPlanar;
    }
    PlanarityResult::Planar(emb)
}

/// Edge sets of the biconnected blocks (bridges are single-edge blocks).
fn biconnected_blocks(g: &Graph) -> Vec<Vec<(Vertex, Vertex)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(Vertex, Vertex)>,
        blocks: Vec<Vec<(Vertex, Vertex)>>,
    }
    fn dfs(s: &mut State, v: Vertex, parent: Option<Vertex>) {
        s.disc[v] = s.time;
        s.low[v] = s.time;
        s.time += 1;
        for &w in s.g.neighbors(v) {
            if Some(w) == parent {
                continue;
            }
            if s.disc[w] == usize::MAX {
                s.stack.push((v, w));
                dfs(s, w, Some(v));
                s.low[v] = s.low[v].min(s.low[w]);
                if s.low[w] >= s.disc[v] {
                    let mut block = Vec::new();
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == (v, w) {
                            break;
                        }
                    }
                    s.blocks.push(block);
                }
            } else if s.disc[w] < s.disc[v] {
                s.stack.push((v, w));
                s.low[v] = s.low[v].min(s.disc[w]);
            }
        }
    }
    let n = g.n();
    let mut s = State {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..n {
        if s.disc[v] == usize::MAX {
            dfs(&mut s, v, None);
        }
    }
    s.blocks
}

fn find_cycle(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some((v, i)) = stack.pop() {
        if i < g.degree(v) {
            stack.push((v, i + 1));
            let w = g.neighbors(v)[i];
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                stack.push((w, 0));
            } else if w != parent[v] && depth[w] < depth[v] {
                let mut cyc = vec![v];
                let mut x = v;
                while x != w {
                    x = parent[x];
                    cyc.push(x);
                }
                return cyc;
            }
        }
    }
    unreachable!("biconnected block with three or more vertices has a cycle")
}

enum Fragment {
    Chord(Vertex, Vertex),
    Piece { vertices: Vec<Vertex>, attach: Vec<Vertex> },
}

impl Fragment {
    fn attachments(&self) -> Vec<Vertex> {
        match self {
            Fragment::Chord(u, v) => vec![*u, *v],
            Fragment::Piece { attach, .. } => attach.clone(),
        }
    }
}

/// Path addition on a biconnected graph with at least three vertices.
/// Returns the rotation system, or `None` when the graph is not planar.
fn embed_biconnected(g: &Graph) -> Option<Vec<Vec<Vertex>>> {
    let n = g.n();
    let m = g.m();
    let mut in_h = vec![false; n];
    let mut edge_in_h = vec![Vec::<Vertex>::new(); n];
    let mut embedded_edges = 0;
    let add_edge = |edge_in_h: &mut Vec<Vec<Vertex>>, u: Vertex, v: Vertex| {
        edge_in_h[u].push(v);
        edge_in_h[v].push(u);
    };
    let cycle = find_cycle(g);
    for i in 0..cycle.len() {
        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        in_h[u] = true;
        add_edge(&mut edge_in_h, u, v);
        embedded_edges += 1;
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces: Vec<Vec<Vertex>> = vec![cycle, rev];

    while embedded_edges < m {
        let fragments = fragments(g, &in_h, &edge_in_h);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let att = frag.attachments();
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| att.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("at least one fragment remains");
        let path = fragment_path(g, &in_h, &fragments[fi]);
        for w in path.windows(2) {
            add_edge(&mut edge_in_h, w[0], w[1]);
            embedded_edges += 1;
        }
        for &x in &path {
            in_h[x] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }

    let mut succ: Vec<Vec<(Vertex, Vertex)>> = vec![Vec::new(); n];
    for f in &faces {
        let l = f.len();
        for i in 0..l {
            let (u, v, w) = (f[(i + l - 1) % l], f[i], f[(i + 1) % l]);
            succ[v].push((u, w));
        }
    }
    let rotation = (0..n)
        .map(|v| {
            let start = *g.neighbors(v).first().unwrap();
            let mut r = vec![start];
            let mut cur = start;
            loop {
                let next = succ[v].iter().find(|&&(a, _)| a == cur).unwrap().1;
                if next == start {
                    break;
                }
                r.push(next);
                cur = next;
            }
            r
        })
        .collect();
    Some(rotation)
}

fn fragments(g: &Graph, in_h: &[bool], edge_in_h: &[Vec<Vertex>]) -> Vec<Fragment> {
    let n = g.n();
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if in_h[u] && in_h[v] && !edge_in_h[u].contains(&v) {
            out.push(Fragment::Chord(u, v));
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut vertices = vec![s];
        let mut attach = Vec::new();
        let mut i = 0;
        while i < vertices.len() {
            let v = vertices[i];
            i += 1;
            for &w in g.neighbors(v) {
                if in_h[w] {
                    if !attach.contains(&w) {
                        attach.push(w);
                    }
                } else if !seen[w] {
                    seen[w] = true;
                    vertices.push(w);
                }
            }
        }
        attach.sort_unstable();
        out.push(Fragment::Piece { vertices, attach });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(g: &Graph, in_h: &[bool], frag: &Fragment) -> Vec<Vertex> {
    match frag {
        Fragment::Chord(u, v) => vec![*u, *v],
        Fragment::Piece { vertices, attach } => {
            let a = attach[0];
            let n = g.n();
            let mut inside = vec![false; n];
            for &v in vertices {
                inside[v] = true;
            }
            let mut parent = vec![usize::MAX; n];
            let mut queue = std::collections::VecDeque::new();
            for &w in g.neighbors(a) {
                if inside[w] && parent[w] == usize::MAX {
                    parent[w] = a;
                    queue.push_back(w);
                }
            }
            while let Some(x) = queue.pop_front() {
                if let Some(&b) = g.neighbors(x).iter().find(|&&b| in_h[b] && b != a) {
                    let mut path = vec![b, x];
                    let mut y = x;
                    while parent[y] != a {
                        y = parent[y];
                        path.push(y);
                    }
                    path.push(a);
                    path.reverse();
                    return path;
                }
                for &w in g.neighbors(x) {
                    if inside[w] && parent[w] == usize::MAX {
                        parent[w] = x;
                        queue.push_back(w);
                    }
                }
            }
            unreachable!("fragment of a biconnected graph has two attachments")
        }
    }
}

/// Splits an oriented face along `path` (from `a` to `b`, both on the face).
fn split_face(face: &[Vertex], path: &[Vertex]) -> (Vec<Vertex>, Vec<Vertex>) {
    let l = face.len();
    let a = path[0];
    let b = *path.last().unwrap();
    let i = face.iter().position(|&x| x == a).unwrap();
    let j = face.iter().position(|&x| x == b).unwrap();
    let interior = &path[1..path.len() - 1];
    let walk = |from: usize, to: usize| -> Vec<Vertex> {
        let mut out = Vec::new();
        let mut k = from;
        loop {
            out.push(face[k]);
            if k == to {
                break;
            }
            k = (k + 1) % l;
        }
        out
    };
    // a .. b along the face, then back to a through the path
    let mut f1 = walk(i, j);
    f1.extend(interior.iter().rev());
    // b .. a along the face, then forward along the path
    let mut f2 = walk(j, i);
    f2.extend(interior.iter());
    (f1, f2)
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::*;

    #[test]
    fn small_examples() {
        let e = planar_embedding(&k(4)).embedding().unwrap();
        assert_eq!(e.faces.len(), 4);
        assert!(!planar_embedding(&k(5)).is_planar());
        assert!(!planar_embedding(&Graph::complete_bipartite(3, 3)).is_planar());
        assert!(!planar_embedding(&petersen()).is_planar());
        let e = planar_embedding(&k(2)).embedding().unwrap();
        assert_eq!(e.faces.len(), 1);
        assert!(planar_embedding(&Graph::empty(0)).is_planar());
    }

    #[test]
    fn cut_vertices_and_forests() {
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let e = planar_embedding(&bowtie).embedding().unwrap();
        assert!(e.euler_holds(&bowtie));
        assert_eq!(e.faces.len(), 3);
        let forest = claw().disjoint_union(&p(3)).disjoint_union(&k(1));
        let e = planar_embedding(&forest).embedding().unwrap();
        assert!(e.euler_holds(&forest));
        assert_eq!(e.face_boundaries(&forest).len(), 3);
    }

    #[test]
    fn octahedron_and_cube() {
        let octa = Graph::complete(6).remove_edges(&[(0, 1), (2, 3), (4, 5)]);
        let e = planar_embedding(&octa).embedding().unwrap();
        assert_eq!(e.faces.len(), 8);
        let cube = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
        )
        .unwrap();
        assert_eq!(planar_embedding(&cube).embedding().unwrap().faces.len(), 6);
        // K3,3 subdivided stays nonplanar
        let k33 = Graph::complete_bipartite(3, 3).subdivide(0, 3, 2).unwrap();
        assert!(!planar_embedding(&k33).is_planar());
    }

    impl Graph {
        fn remove_edges(mut self, es: &[(Vertex, Vertex)]) -> Graph {
            for &(u, v) in es {
                self.remove_edge(u, v);
            }
            self
        }
    }
}
