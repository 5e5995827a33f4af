//! Row reduction and subspaces over a prime field.

use std::fmt;

use super::PrimeField;

pub type Vector = Vec<u32>;

/// Reduced row echelon form of `rows`, zero rows dropped. Pivots are 1,
/// strictly increasing, and the only nonzero entry in their column, so the
/// result depends only on the row space.
pub fn rref(field: PrimeField, rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut m: Vec<Vector> = rows.to_vec();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = field.inv(m[rank][col]);
        for x in m[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = field.sub(*x, field.mul(factor, y));
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    m
}

pub fn rank(field: PrimeField, rows: &[Vector], ncols: usize) -> usize {
    rref(field, rows, ncols).len()
}

fn pivot(row: &[u32]) -> usize {
    row.iter().position(|&x| x != 0).expect("rows in echelon form are nonzero")
}

/// Basis of `{x : M x = 0}` where `rows` are the rows of `M`.
pub fn kernel(field: PrimeField, rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let r = rref(field, rows, ncols);
    let pivots: Vec<usize> = r.iter().map(|row| pivot(row)).collect();
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = vec![0; ncols];
            x[free] = 1;
            for (row, &pc) in r.iter().zip(&pivots) {
                x[pc] = field.neg(row[free]);
            }
            x
        })
        .collect()
}

pub fn mat_vec(field: PrimeField, m: &[Vector], v: &[u32]) -> Vector {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
        })
        .collect()
}

pub fn mat_mul(field: PrimeField, a: &[Vector], b: &[Vector]) -> Vec<Vector> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| {
                    row.iter()
                        .zip(b)
                        .fold(0, |acc, (&x, brow)| field.add(acc, field.mul(x, brow[c])))
                })
                .collect()
        })
        .collect()
}

pub fn identity(n: usize) -> Vec<Vector> {
    (0..n)
        .map(|i| {
            let mut r = vec![0; n];
            r[i] = 1;
            r
        })
        .collect()
}

/// A subspace of `F_t^n`, stored as its canonical reduced basis. Two subspaces
/// are equal iff their representations are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: PrimeField,
    n: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn span(field: PrimeField, n: usize, vectors: &[Vector]) -> Self {
        debug_assert!(vectors.iter().all(|v| v.len() == n));
        Subspace {
            field,
            n,
            basis: rref(field, vectors, n),
        }
    }

    pub fn zero(field: PrimeField, n: usize) -> Self {
        Subspace {
            field,
            n,
            basis: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, n: usize) -> Self {
        Subspace {
            field,
            n,
            basis: identity(n),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the
    /// subspace.
    fn residue(&self, v: &[u32]) -> Vector {
        let f = self.field;
        let mut w = v.to_vec();
        for row in &self.basis {
            let pc = pivot(row);
            let c = w[pc];
            if c != 0 {
                for (x, &r) in w.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.residue(v).iter().all(|&x| x == 0)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.dim() <= other.dim() && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.n, &rows)
    }

    pub fn with_vector(&self, v: &[u32]) -> Subspace {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Subspace::span(self.field, self.n, &rows)
    }

    /// Linear functionals vanishing on the subspace, as rows.
    pub fn annihilator(&self) -> Vec<Vector> {
        kernel(self.field, &self.basis, self.n)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let mut rows = self.annihilator();
        rows.extend(other.annihilator());
        Subspace::span(self.field, self.n, &kernel(self.field, &rows, self.n))
    }

    /// `{v : M v ∈ self}`.
    pub fn preimage(&self, m: &[Vector]) -> Subspace {
        let pulled = mat_mul(self.field, &self.annihilator(), m);
        Subspace::span(self.field, self.n, &kernel(self.field, &pulled, self.n))
    }

    pub fn image(&self, m: &[Vector]) -> Subspace {
        let vs: Vec<Vector> = self.basis.iter().map(|v| mat_vec(self.field, m, v)).collect();
        Subspace::span(self.field, self.n, &vs)
    }

    /// Vectors of `larger` that extend a basis of `self` to one of `larger`.
    /// Requires `self ⊆ larger`.
    pub fn complement_in(&self, larger: &Subspace) -> Vec<Vector> {
        let mut acc = self.clone();
        let mut out = Vec::new();
        for v in &larger.basis {
            if !acc.contains(v) {
                acc = acc.with_vector(v);
                out.push(v.clone());
            }
        }
        out
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of {}, {:?})", self.dim(), self.n, self.basis)
    }
}

/// Representatives of the projective points of `F_t^d`: the first nonzero
/// coordinate is 1.
pub fn projective_points(field: PrimeField, d: usize) -> Vec<Vector> {
    let t = field.order();
    let mut out = Vec::new();
    for lead in 0..d {
        let free = d - lead - 1;
        let total = (t as u64).pow(free as u32);
        for mut code in 0..total {
            let mut x = vec![0; d];
            x[lead] = 1;
            for slot in x.iter_mut().skip(lead + 1) {
                *slot = (code % t as u64) as u32;
                code /= t as u64;
            }
            out.push(x);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(t: u32) -> PrimeField {
        PrimeField::new(t).unwrap()
    }

    #[test]
    fn kernel_of_small_matrix() {
        let field = f(3);
        let m = vec![vec![1, 2, 0], vec![0, 0, 1]];
        let k = kernel(field, &m, 3);
        assert_eq!(k, vec![vec![1, 1, 0]]);
        assert!(k.iter().all(|x| mat_vec(field, &m, x).iter().all(|&y| y == 0)));
    }

    #[test]
    fn intersections_and_sums() {
        let field = f(2);
        let a = Subspace::span(field, 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Subspace::span(field, 3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(a.intersection(&b), Subspace::span(field, 3, &[vec![0, 1, 0]]));
        assert_eq!(a.sum(&b), Subspace::full(field, 3));
        assert!(Subspace::zero(field, 3).is_subspace_of(&a));
        assert_eq!(projective_points(field, 3).len(), 7);
        assert_eq!(projective_points(f(3), 2).len(), 4);
    }

    fn arb_rows(t: u32) -> impl Strategy<Value = Vec<Vector>> {
        prop::collection::vec(prop::collection::vec(0..t, 4), 0..5)
    }

    proptest! {
        #[test]
        fn rref_is_canonical(rows in arb_rows(5), mix in prop::collection::vec(0u32..5, 25)) {
            let field = f(5);
            let s = Subspace::span(field, 4, &rows);
            prop_assert_eq!(rref(field, s.basis(), 4), s.basis().to_vec());
            // Random combinations of the rows span a subspace of s; adding
            // the original rows back recovers s exactly.
            let combos: Vec<Vector> = (0..rows.len()).map(|i| {
                let mut v = vec![0; 4];
                for (j, r) in rows.iter().enumerate() {
                    let c = mix[(i * 5 + j) % mix.len()];
                    for k in 0..4 { v[k] = field.add(v[k], field.mul(c, r[k])); }
                }
                v
            }).collect();
            let sub = Subspace::span(field, 4, &combos);
            prop_assert!(sub.is_subspace_of(&s));
            prop_assert_eq!(sub.sum(&s), s.clone());
        }

        #[test]
        fn rank_nullity(rows in arb_rows(3)) {
            let field = f(3);
            let r = rank(field, &rows, 4);
            prop_assert_eq!(r + kernel(field, &rows, 4).len(), 4);
        }

        #[test]
        fn intersection_dimension_formula(a in arb_rows(2), b in arb_rows(2)) {
            let field = f(2);
            let (a, b) = (Subspace::span(field, 4, &a), Subspace::span(field, 4, &b));
            prop_assert_eq!(a.sum(&b).dim() + a.intersection(&b).dim(), a.dim() + b.dim());
        }
    }
}
