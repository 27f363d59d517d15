//! The projective plane of order 3: points, lines, collineations, the
//! 26-node point–line incidence graph, and diagram embeddings into it.

use crate::fields::{Field, F3};
use crate::fmat::{group_closure, Perm};
use crate::Error;
use std::collections::HashMap;

/// Number of points (and of lines).
pub const N_POINTS: usize = 13;

/// The plane: points and lines are both stored as normalized homogeneous
/// triples (first nonzero coordinate 1), sorted, so indices are canonical.
/// A point lies on a line iff the dot product of their triples vanishes,
/// which makes the representation manifestly self-dual.
#[derive(Clone, Debug)]
pub struct Plane {
    pub triples: Vec<[F3; 3]>,
    index: HashMap<[F3; 3], usize>,
    on: Vec<Vec<bool>>,
    pub line_points: Vec<Vec<usize>>,
    pub point_lines: Vec<Vec<usize>>,
}

fn dot3(a: &[F3; 3], b: &[F3; 3]) -> F3 {
    let mut s = F3::new(0);
    for i in 0..3 {
        s = s.add(a[i].mul(b[i]));
    }
    s
}

fn normalize(mut v: [F3; 3]) -> [F3; 3] {
    let lead = v.iter().copied().find(|x| !x.is_zero()).expect("nonzero triple");
    let inv = lead.inv();
    for x in v.iter_mut() {
        *x = x.mul(inv);
    }
    v
}

impl Plane {
    pub fn new() -> Plane {
        let mut triples = Vec::new();
        for a in 0..3u8 {
            for b in 0..3u8 {
                for c in 0..3u8 {
                    let v = [F3::new(a), F3::new(b), F3::new(c)];
                    if v.iter().all(|x| x.is_zero()) {
                        continue;
                    }
                    if normalize(v) == v {
                        triples.push(v);
                    }
                }
            }
        }
        triples.sort();
        assert_eq!(triples.len(), N_POINTS);
        let index: HashMap<[F3; 3], usize> =
            triples.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let on: Vec<Vec<bool>> = triples
            .iter()
            .map(|p| triples.iter().map(|l| dot3(p, l).is_zero()).collect())
            .collect();
        let line_points: Vec<Vec<usize>> = (0..N_POINTS)
            .map(|l| (0..N_POINTS).filter(|&p| on[p][l]).collect())
            .collect();
        let point_lines: Vec<Vec<usize>> = (0..N_POINTS)
            .map(|p| (0..N_POINTS).filter(|&l| on[p][l]).collect())
            .collect();
        Plane { triples, index, on, line_points, point_lines }
    }

    pub fn on(&self, point: usize, line: usize) -> bool {
        self.on[point][line]
    }

    pub fn index_of(&self, t: [F3; 3]) -> usize {
        self.index[&normalize(t)]
    }

    /// The unique line through two distinct points.
    pub fn line_through(&self, p: usize, q: usize) -> usize {
        assert_ne!(p, q);
        let matches: Vec<usize> = (0..N_POINTS)
            .filter(|&l| self.on[p][l] && self.on[q][l])
            .collect();
        assert_eq!(matches.len(), 1);
        matches[0]
    }

    /// The unique intersection point of two distinct lines.
    pub fn meet(&self, l: usize, m: usize) -> usize {
        assert_ne!(l, m);
        let matches: Vec<usize> = (0..N_POINTS)
            .filter(|&p| self.on[p][l] && self.on[p][m])
            .collect();
        assert_eq!(matches.len(), 1);
        matches[0]
    }

    /// Whether three distinct lines pass through a common point.
    pub fn concurrent(&self, l: usize, m: usize, n: usize) -> bool {
        self.meet(l, m) == self.meet(l, n)
    }
}

impl Default for Plane {
    fn default() -> Self {
        Plane::new()
    }
}

/// The collineation group acting on point and line indices.
#[derive(Clone, Debug)]
pub struct PlaneGroup {
    pub point_perms: Vec<Perm>,
    pub line_perms: Vec<Perm>,
}

fn apply_matrix(plane: &Plane, m: &[[i64; 3]; 3], p: usize) -> usize {
    let v = plane.triples[p];
    let mut out = [F3::new(0); 3];
    for (j, o) in out.iter_mut().enumerate() {
        for (i, vi) in v.iter().enumerate() {
            *o = o.add(vi.mul(F3::from_i64(m[i][j])));
        }
    }
    plane.index_of(out)
}

fn point_perm_of_matrix(plane: &Plane, m: &[[i64; 3]; 3]) -> Perm {
    Perm((0..N_POINTS).map(|p| apply_matrix(plane, m, p)).collect())
}

/// Generating matrices: a coordinate 3-cycle, a transposition, a diagonal
/// scaling, and a transvection.
fn generator_matrices() -> Vec<[[i64; 3]; 3]> {
    vec![
        [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
        [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
        [[1, 0, 0], [0, 1, 0], [0, 0, -1]],
        [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
    ]
}

/// The permutation of lines induced by a collineation given on points.
pub fn line_perm_from_point_perm(plane: &Plane, sigma: &Perm) -> Perm {
    Perm(
        (0..N_POINTS)
            .map(|l| {
                let pts = &plane.line_points[l];
                plane.line_through(sigma.0[pts[0]], sigma.0[pts[1]])
            })
            .collect(),
    )
}

impl PlaneGroup {
    /// Generate the full collineation group by closure; the order is a
    /// structural invariant checked by tests and verification suites.
    pub fn new(plane: &Plane) -> Result<PlaneGroup, Error> {
        let gens: Vec<Perm> = generator_matrices()
            .iter()
            .map(|m| point_perm_of_matrix(plane, m))
            .collect();
        let point_perms = group_closure(&gens, |a, b| a.compose(b), 20_000)?;
        let line_perms = point_perms
            .iter()
            .map(|s| line_perm_from_point_perm(plane, s))
            .collect();
        Ok(PlaneGroup { point_perms, line_perms })
    }

    pub fn order(&self) -> usize {
        self.point_perms.len()
    }

    /// Generator permutations on points (a small set, not the whole group).
    pub fn point_generators(plane: &Plane) -> Vec<Perm> {
        generator_matrices()
            .iter()
            .map(|m| point_perm_of_matrix(plane, m))
            .collect()
    }

    /// Lift a group element to a permutation of the 26 graph nodes
    /// (points 0..13, lines 13..26).
    pub fn node_perm(&self, k: usize) -> Perm {
        let mut v: Vec<usize> = self.point_perms[k].0.clone();
        v.extend(self.line_perms[k].0.iter().map(|&l| l + N_POINTS));
        Perm(v)
    }
}

/// Adjacency matrix of the 26-node incidence graph: node `p < 13` is the
/// point `p`, node `13 + l` is the line `l`; edges are incidences.
pub fn incidence_graph(plane: &Plane) -> Vec<Vec<bool>> {
    let n = 2 * N_POINTS;
    let mut adj = vec![vec![false; n]; n];
    for p in 0..N_POINTS {
        for l in 0..N_POINTS {
            if plane.on(p, l) {
                adj[p][N_POINTS + l] = true;
                adj[N_POINTS + l][p] = true;
            }
        }
    }
    adj
}

/// The self-duality `point i ↔ line i` (valid because the incidence
/// relation is symmetric in the stored triples).
pub fn duality_perm() -> Perm {
    Perm((0..2 * N_POINTS).map(|i| (i + N_POINTS) % (2 * N_POINTS)).collect())
}

/// The full automorphism group of the incidence graph: collineations
/// extended to the 26 nodes, together with the duality.
pub fn graph_aut_group(plane: &Plane) -> Result<Vec<Perm>, Error> {
    let mut gens: Vec<Perm> = PlaneGroup::point_generators(plane)
        .into_iter()
        .map(|s| {
            let lp = line_perm_from_point_perm(plane, &s);
            let mut v = s.0;
            v.extend(lp.0.iter().map(|&l| l + N_POINTS));
            Perm(v)
        })
        .collect();
    gens.push(duality_perm());
    group_closure(&gens, |a, b| a.compose(b), 30_000)
}

/// Adjacency of the 16-node diagram: a central node joined to the first
/// node of each of three 5-node chains. Node 0 is the center; arm `a`
/// occupies nodes `1+5a ..= 5+5a` in chain order.
pub fn y555_adjacency() -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; 16]; 16];
    let mut join = |i: usize, j: usize| {
        adj[i][j] = true;
        adj[j][i] = true;
    };
    for a in 0..3 {
        join(0, 1 + 5 * a);
        for k in 0..4 {
            join(1 + 5 * a + k, 2 + 5 * a + k);
        }
    }
    adj
}

/// All induced embeddings of the `small` graph into the `big` graph:
/// injective maps preserving both adjacency and non-adjacency. Nodes of
/// `small` must be ordered so each one is adjacent to an earlier one.
pub fn induced_embeddings(small: &[Vec<bool>], big: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let k = small.len();
    let n = big.len();
    for i in 1..k {
        assert!((0..i).any(|j| small[i][j]), "connected node order required");
    }
    let mut out = Vec::new();
    let mut phi: Vec<usize> = Vec::with_capacity(k);
    let mut used = vec![false; n];
    fn rec(
        small: &[Vec<bool>],
        big: &[Vec<bool>],
        phi: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let level = phi.len();
        if level == small.len() {
            out.push(phi.clone());
            return;
        }
        'cand: for v in 0..big.len() {
            if used[v] {
                continue;
            }
            for (j, &pj) in phi.iter().enumerate() {
                if small[level][j] != big[v][pj] {
                    continue 'cand;
                }
            }
            used[v] = true;
            phi.push(v);
            rec(small, big, phi, used, out);
            phi.pop();
            used[v] = false;
        }
    }
    rec(small, big, &mut phi, &mut used, &mut out);
    out
}

/// All induced paths with `k` vertices, one orientation per path
/// (first endpoint less than last).
pub fn induced_paths(adj: &[Vec<bool>], k: usize) -> Vec<Vec<usize>> {
    assert!(k >= 2);
    let n = adj.len();
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::with_capacity(k);
    fn rec(adj: &[Vec<bool>], k: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if path.len() == k {
            if path[0] < path[k - 1] {
                out.push(path.clone());
            }
            return;
        }
        let last = *path.last().unwrap();
        'cand: for v in 0..adj.len() {
            if !adj[last][v] || path.contains(&v) {
                continue;
            }
            for &p in &path[..path.len() - 1] {
                if adj[p][v] {
                    continue 'cand;
                }
            }
            path.push(v);
            rec(adj, k, path, out);
            path.pop();
        }
    }
    for v in 0..n {
        path.push(v);
        rec(adj, k, &mut path, &mut out);
        path.pop();
    }
    out
}

/// Vertices that close an induced path into an induced cycle: adjacent to
/// both endpoints and to no interior vertex.
pub fn induced_cycle_closers(adj: &[Vec<bool>], path: &[usize]) -> Vec<usize> {
    let (first, last) = (path[0], *path.last().unwrap());
    (0..adj.len())
        .filter(|&v| {
            !path.contains(&v)
                && adj[v][first]
                && adj[v][last]
                && path[1..path.len() - 1].iter().all(|&p| !adj[v][p])
        })
        .collect()
}

/// Vertices outside `set` with no neighbor in `set`.
pub fn nodes_not_joined(adj: &[Vec<bool>], set: &[usize]) -> Vec<usize> {
    (0..adj.len())
        .filter(|&v| !set.contains(&v) && set.iter().all(|&s| !adj[v][s]))
        .collect()
}

/// Whether the induced subgraph on `nodes` is a single path.
pub fn induces_path(adj: &[Vec<bool>], nodes: &[usize]) -> bool {
    let k = nodes.len();
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let deg: Vec<usize> = nodes
        .iter()
        .map(|&v| nodes.iter().filter(|&&u| adj[v][u]).count())
        .collect();
    let edges: usize = deg.iter().sum::<usize>() / 2;
    if edges != k - 1 || deg.iter().any(|&d| d > 2) {
        return false;
    }
    // A connected graph on k nodes with k−1 edges and max degree 2 is a path.
    let mut seen = vec![false; k];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..k {
            if !seen[j] && adj[nodes[i]][nodes[j]] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.iter().all(|&s| s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_axioms() {
        let pl = Plane::new();
        assert_eq!(pl.triples.len(), 13);
        for l in 0..13 {
            assert_eq!(pl.line_points[l].len(), 4);
            assert_eq!(pl.point_lines[l].len(), 4);
        }
        for p in 0..13 {
            for q in p + 1..13 {
                let l = pl.line_through(p, q); // unique by the inner assert
                assert!(pl.on(p, l) && pl.on(q, l));
                let m = pl.meet(p, q); // dually: unique common point
                assert!(pl.on(m, p) && pl.on(m, q));
            }
        }
    }

    #[test]
    fn collineation_group_order_and_transitivity() {
        let pl = Plane::new();
        let g = PlaneGroup::new(&pl).unwrap();
        assert_eq!(g.order(), 5616);
        // Incidence is preserved.
        for k in (0..g.order()).step_by(401) {
            let (sp, sl) = (&g.point_perms[k], &g.line_perms[k]);
            for p in 0..13 {
                for l in 0..13 {
                    assert_eq!(pl.on(p, l), pl.on(sp.0[p], sl.0[l]));
                }
            }
        }
        // Point-transitivity.
        let orbit: std::collections::HashSet<usize> =
            g.point_perms.iter().map(|s| s.0[0]).collect();
        assert_eq!(orbit.len(), 13);
    }

    #[test]
    fn incidence_graph_and_its_automorphisms() {
        let pl = Plane::new();
        let adj = incidence_graph(&pl);
        for (i, row) in adj.iter().enumerate() {
            assert_eq!(row.iter().filter(|&&b| b).count(), 4);
            assert!(!row[i]);
        }
        let auts = graph_aut_group(&pl).unwrap();
        assert_eq!(auts.len(), 11232); // collineations and dualities
        let d = duality_perm();
        assert!(auts.contains(&d));
    }

    #[test]
    fn diagram_embedding_machinery() {
        let y = y555_adjacency();
        let deg: Vec<usize> = y.iter().map(|r| r.iter().filter(|&&b| b).count()).collect();
        assert_eq!(deg[0], 3);
        assert_eq!(deg.iter().filter(|&&d| d == 1).count(), 3);
        // A 3-path embeds into a 4-cycle in 8 ways (4 positions × 2
        // orientations), and a triangle does not embed at all.
        let mut c4 = vec![vec![false; 4]; 4];
        for i in 0..4 {
            c4[i][(i + 1) % 4] = true;
            c4[(i + 1) % 4][i] = true;
        }
        let p3 = vec![
            vec![false, true, false],
            vec![true, false, true],
            vec![false, true, false],
        ];
        assert_eq!(induced_embeddings(&p3, &c4).len(), 8);
        let k3 = vec![
            vec![false, true, true],
            vec![true, false, true],
            vec![true, true, false],
        ];
        assert_eq!(induced_embeddings(&k3, &c4).len(), 0);
        // Induced paths in the 4-cycle: four edges, four 3-paths.
        assert_eq!(induced_paths(&c4, 2).len(), 4);
        assert_eq!(induced_paths(&c4, 3).len(), 4);
        let p = &induced_paths(&c4, 3)[0];
        assert_eq!(induced_cycle_closers(&c4, p).len(), 1);
        assert!(induces_path(&c4, &[0, 1, 2]));
        assert!(!induces_path(&c4, &[0, 2]));
    }
}
