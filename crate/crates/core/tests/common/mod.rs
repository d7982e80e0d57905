//! Brute-force helpers shared by the integration tests.
#![allow(dead_code)]

use quiver_hall::gfq::{Matrix, Prime};
use quiver_hall::rep::Representation;

/// Every morphism `M -> N` as per-vertex matrices, by running over all coefficient vectors on
/// a basis of `Hom(M, N)`.
pub fn all_morphisms(m: &Representation, n: &Representation) -> Vec<Vec<Matrix>> {
    let p = m.prime();
    let q = p.get() as usize;
    let basis = m.hom_basis(n).unwrap();
    let shapes: Vec<(usize, usize)> = (0..m.dims().0.len())
        .map(|v| (n.dims().0[v], m.dims().0[v]))
        .collect();
    let count = q.pow(basis.len() as u32);
    let mut out = Vec::with_capacity(count);
    for code in 0..count {
        let mut c = code;
        let coeffs: Vec<u32> = (0..basis.len())
            .map(|_| {
                let k = (c % q) as u32;
                c /= q;
                k
            })
            .collect();
        let maps = shapes
            .iter()
            .enumerate()
            .map(|(v, &(r, cols))| {
                let mut acc = Matrix::zeros(p, r, cols);
                for (f, &k) in basis.iter().zip(&coeffs) {
                    let fv = &f.vertex_maps()[v];
                    for i in 0..r {
                        for j in 0..cols {
                            acc.set(i, j, p.add(acc.get(i, j), p.mul(k, fv.get(i, j))));
                        }
                    }
                }
                acc
            })
            .collect();
        out.push(maps);
    }
    out
}

/// Number of idempotent endomorphisms of `m`.
pub fn idempotent_count(m: &Representation) -> usize {
    all_morphisms(m, m)
        .iter()
        .filter(|f| f.iter().all(|fv| fv.mul(fv) == *fv))
        .count()
}

/// Deterministic invertible `n x n` matrix built from `seed` (product of elementary matrices).
pub fn invertible_from_seed(p: Prime, n: usize, seed: u64) -> Matrix {
    let mut g = Matrix::identity(p, n);
    let mut s = seed;
    let mut next = || {
        s = s
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (s >> 33) as usize
    };
    for _ in 0..3 * n {
        if n == 0 {
            break;
        }
        let (i, j) = (next() % n, next() % n);
        let mut e = Matrix::identity(p, n);
        if i == j {
            e.set(i, i, 1 + (next() % (p.get() as usize - 1)) as u32);
        } else {
            e.set(i, j, (next() % p.get() as usize) as u32);
        }
        g = e.mul(&g);
    }
    g
}
