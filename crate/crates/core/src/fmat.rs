//! Linear algebra over the small fields, coordinate permutations, and
//! finite group closure.
//!
//! Subspaces are kept in reduced row echelon form, which is unique per
//! subspace, so equality of spans is equality of `Rref` values. `spin`
//! grows a subspace to the smallest one invariant under a permutation
//! group; iterating the generators suffices because invariance under
//! generators is invariance under the group they generate.

use crate::fields::Field;
use std::collections::HashSet;
use std::hash::Hash;

/// A subspace in reduced row echelon form: unit pivots, pivot columns
/// strictly increasing and zero elsewhere in their column.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rref<F> {
    pub rows: Vec<Vec<F>>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Rref<F> {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut cur = v.to_vec();
        for (i, &c) in self.pivots.iter().enumerate() {
            let f = cur[c];
            if f.is_zero() {
                continue;
            }
            for (k, x) in cur.iter_mut().enumerate() {
                *x = x.sub(f.mul(self.rows[i][k]));
            }
        }
        cur.iter().all(|x| x.is_zero())
    }
}

pub fn rref<F: Field>(rows: &[Vec<F>]) -> Rref<F> {
    let n = rows.first().map_or(0, |r| r.len());
    for r in rows {
        assert_eq!(r.len(), n, "ragged matrix");
    }
    let mut a: Vec<Vec<F>> = rows.to_vec();
    let m = a.len();
    let mut r = 0usize;
    let mut pivots = Vec::new();
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inv();
        for x in a[r].iter_mut() {
            *x = x.mul(inv);
        }
        for i in 0..m {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c];
            for k in 0..n {
                let v = a[r][k];
                a[i][k] = a[i][k].sub(f.mul(v));
            }
        }
        pivots.push(c);
        r += 1;
        if r == m {
            break;
        }
    }
    a.truncate(r);
    Rref { rows: a, pivots }
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    rref(rows).dim()
}

/// Basis (in echelon form) of `{v : Σⱼ A[i][j]·v[j] = 0 for all i}`.
pub fn right_kernel<F: Field>(rows: &[Vec<F>]) -> Vec<Vec<F>> {
    let n = rows.first().map_or(0, |r| r.len());
    let e = rref(rows);
    let mut basis = Vec::new();
    let mut piv_iter = e.pivots.iter().peekable();
    for f in 0..n {
        if piv_iter.peek() == Some(&&f) {
            piv_iter.next();
            continue;
        }
        let mut v = vec![F::zero(); n];
        v[f] = F::one();
        for (i, &p) in e.pivots.iter().enumerate() {
            v[p] = e.rows[i][f].neg();
        }
        basis.push(v);
    }
    basis
}

/// A permutation of `{0, …, n−1}`, stored as the image table `i ↦ p[i]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.0.len(), other.0.len());
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0usize; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p] = i;
        }
        Perm(inv)
    }

    /// Push a coordinate vector forward: entry `i` moves to slot `p[i]`,
    /// so standard basis vectors map by the index action.
    pub fn act_vec<T: Copy>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.0.len());
        let mut out = v.to_vec();
        for (i, &p) in self.0.iter().enumerate() {
            out[p] = v[i];
        }
        out
    }
}

/// Every product of the generators, by breadth-first closure (deterministic
/// order). Errors out once more than `cap` elements appear.
pub fn group_closure<T, M>(gens: &[T], mul: M, cap: usize) -> Result<Vec<T>, crate::Error>
where
    T: Clone + Eq + Hash,
    M: Fn(&T, &T) -> T,
{
    let mut seen: HashSet<T> = gens.iter().cloned().collect();
    let mut order: Vec<T> = Vec::new();
    let mut frontier: Vec<T> = Vec::new();
    for g in gens {
        if !order.contains(g) {
            order.push(g.clone());
            frontier.push(g.clone());
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = mul(x, g);
                if seen.insert(y.clone()) {
                    order.push(y.clone());
                    next.push(y);
                    if order.len() > cap {
                        return Err(crate::Error::ClosureCapExceeded { cap });
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(order)
}

/// Smallest subspace containing `seed` and invariant under every generator.
pub fn spin<F: Field>(seed: &[Vec<F>], gens: &[Perm]) -> Rref<F> {
    let mut cur = rref(seed);
    loop {
        let mut rows = cur.rows.clone();
        for g in gens {
            for b in &cur.rows {
                rows.push(g.act_vec(b));
            }
        }
        let next = rref(&rows);
        if next.dim() == cur.dim() {
            return cur;
        }
        cur = next;
    }
}
