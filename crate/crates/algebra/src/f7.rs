//! Linear algebra over F7: dense matrices and subspaces in canonical
//! reduced row echelon form, so subspace equality is representation
//! equality.

const P: u16 = 7;

fn inv7(a: u8) -> u8 {
    // Inverses mod 7 for 1..=6.
    const INV: [u8; 7] = [0, 1, 4, 5, 2, 3, 6];
    INV[a as usize]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatF7 {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u8>,
}

impl MatF7 {
    pub fn zero(rows: usize, cols: usize) -> Self {
        MatF7 {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = MatF7::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = MatF7::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v % 7);
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v % 7;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> MatF7 {
        let mut t = MatF7::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &MatF7) -> MatF7 {
        assert_eq!(self.cols, rhs.rows);
        let mut out = MatF7::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u16;
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = (out.get(i, j) as u16 + a * rhs.get(k, j) as u16) % P;
                    out.set(i, j, v as u8);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u16;
                for j in 0..self.cols {
                    acc = (acc + self.get(i, j) as u16 * v[j] as u16) % P;
                }
                acc as u8
            })
            .collect()
    }

    pub fn vstack(&self, below: &MatF7) -> MatF7 {
        assert_eq!(self.cols, below.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        MatF7 {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        }
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let pivot_row = (r..self.rows).find(|&i| self.get(i, c) != 0);
            let pivot_row = match pivot_row {
                None => continue,
                Some(p) => p,
            };
            if pivot_row != r {
                for j in 0..self.cols {
                    let a = self.get(r, j);
                    let b = self.get(pivot_row, j);
                    self.set(r, j, b);
                    self.set(pivot_row, j, a);
                }
            }
            let inv = inv7(self.get(r, c));
            for j in 0..self.cols {
                let v = (self.get(r, j) as u16 * inv as u16) % P;
                self.set(r, j, v as u8);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let v = (self.get(i, j) as u16 + P - (factor as u16 * self.get(r, j) as u16) % P) % P;
                    self.set(i, j, v as u8);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel, one row per basis vector, in RREF.
    pub fn kernel(&self) -> MatF7 {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|&c| !pivot_set[c]).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut vec = vec![0u8; self.cols];
            vec[fc] = 1;
            for (ri, &pc) in pivots.iter().enumerate() {
                // pivot var = -coefficient of free var in that row
                let coef = m.get(ri, fc);
                vec[pc] = ((P - coef as u16) % P) as u8;
            }
            rows.push(vec);
        }
        let mut out = MatF7::from_rows(&rows);
        out.rref();
        out
    }

    fn drop_zero_rows(&self) -> MatF7 {
        let rows: Vec<Vec<u8>> = (0..self.rows)
            .map(|i| self.row(i).to_vec())
            .filter(|r| r.iter().any(|&v| v != 0))
            .collect();
        if rows.is_empty() {
            MatF7::zero(0, self.cols)
        } else {
            MatF7::from_rows(&rows)
        }
    }
}

/// A subspace of F7^n, held as an RREF basis (canonical: equal subspaces
/// have equal representations).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F7Subspace {
    ambient: usize,
    basis: MatF7,
}

impl F7Subspace {
    pub fn zero(ambient: usize) -> Self {
        F7Subspace {
            ambient,
            basis: MatF7::zero(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        F7Subspace {
            ambient,
            basis: MatF7::identity(ambient),
        }
    }

    pub fn span(ambient: usize, vectors: &[Vec<u8>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "ambient dimension mismatch");
        }
        if vectors.is_empty() {
            return F7Subspace::zero(ambient);
        }
        let mut m = MatF7::from_rows(vectors);
        m.rref();
        F7Subspace {
            ambient,
            basis: m.drop_zero_rows(),
        }
    }

    pub fn from_kernel_of(m: &MatF7) -> Self {
        let k = m.kernel();
        F7Subspace {
            ambient: m.cols,
            basis: k.drop_zero_rows(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &MatF7 {
        &self.basis
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        assert_eq!(v.len(), self.ambient);
        // Reduce v against the RREF basis.
        let mut v: Vec<u8> = v.iter().map(|&x| x % 7).collect();
        for i in 0..self.basis.rows {
            let pivot_col = (0..self.ambient).find(|&j| self.basis.get(i, j) != 0);
            if let Some(pc) = pivot_col {
                let factor = v[pc];
                if factor != 0 {
                    for j in 0..self.ambient {
                        let t = (v[j] as u16 + P - (factor as u16 * self.basis.get(i, j) as u16) % P) % P;
                        v[j] = t as u8;
                    }
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    pub fn sum(&self, other: &F7Subspace) -> F7Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut vecs: Vec<Vec<u8>> = Vec::new();
        for i in 0..self.basis.rows {
            vecs.push(self.basis.row(i).to_vec());
        }
        for i in 0..other.basis.rows {
            vecs.push(other.basis.row(i).to_vec());
        }
        F7Subspace::span(self.ambient, &vecs)
    }

    /// Annihilator basis: matrix whose rows span { w : w . v = 0 for v in self }.
    pub fn annihilator(&self) -> MatF7 {
        if self.dim() == 0 {
            return MatF7::identity(self.ambient);
        }
        self.basis.kernel()
    }

    pub fn intersect(&self, other: &F7Subspace) -> F7Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        // (U cap W) = annihilator(ann(U) stacked on ann(W)).
        let a = self.annihilator();
        let b = other.annihilator();
        let stacked = a.vstack(&b);
        F7Subspace::from_kernel_of(&stacked)
    }

    /// Preimage { x : m x in self } of this subspace under the linear map m
    /// (given as a matrix acting on column vectors, rows = target dim).
    pub fn preimage_under(&self, m: &MatF7) -> F7Subspace {
        assert_eq!(m.rows, self.ambient, "map target dimension mismatch");
        // x in preimage iff (A m) x = 0 where rows of A span the annihilator.
        let ann = self.annihilator();
        if ann.rows == 0 {
            return F7Subspace::full(m.cols);
        }
        let constraints = ann.mul(m);
        F7Subspace::from_kernel_of(&constraints)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn random_subspace(rng: &mut SplitMix64, ambient: usize, gens: usize) -> F7Subspace {
        let vecs: Vec<Vec<u8>> = (0..gens)
            .map(|_| (0..ambient).map(|_| (rng.u64_below(7)) as u8).collect())
            .collect();
        F7Subspace::span(ambient, &vecs)
    }

    #[test]
    fn intersection_idempotent() {
        let mut rng = SplitMix64::new(1);
        for _ in 0..20 {
            let v = random_subspace(&mut rng, 8, 3);
            assert_eq!(v.intersect(&v), v);
        }
    }

    #[test]
    fn preimage_of_zero_under_identity_is_zero() {
        let z = F7Subspace::zero(10);
        let pre = z.preimage_under(&MatF7::identity(10));
        assert_eq!(pre.dim(), 0);
    }

    #[test]
    fn dimension_formula() {
        // dim(U cap W) + dim(U + W) = dim U + dim W.
        let mut rng = SplitMix64::new(2);
        for _ in 0..50 {
            let u = random_subspace(&mut rng, 9, 4);
            let w = random_subspace(&mut rng, 9, 4);
            let inter = u.intersect(&w);
            let sum = u.sum(&w);
            assert_eq!(inter.dim() + sum.dim(), u.dim() + w.dim());
            for i in 0..inter.basis().rows {
                let v = inter.basis().row(i).to_vec();
                assert!(u.contains(&v) && w.contains(&v));
            }
        }
    }

    #[test]
    fn kernel_matches_rank_nullity() {
        let mut rng = SplitMix64::new(3);
        for _ in 0..30 {
            let rows = 1 + rng.u64_below(6) as usize;
            let cols = 1 + rng.u64_below(8) as usize;
            let m = MatF7::from_rows(
                &(0..rows)
                    .map(|_| (0..cols).map(|_| rng.u64_below(7) as u8).collect())
                    .collect::<Vec<_>>(),
            );
            let k = F7Subspace::from_kernel_of(&m);
            assert_eq!(k.dim(), cols - m.rank());
            for i in 0..k.basis().rows {
                let img = m.mul_vec(k.basis().row(i));
                assert!(img.iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    #[should_panic]
    fn dimension_mismatch_rejected() {
        let u = F7Subspace::zero(4);
        let w = F7Subspace::zero(5);
        let _ = u.intersect(&w);
    }
}
