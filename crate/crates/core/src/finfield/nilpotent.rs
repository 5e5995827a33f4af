use super::linalg::{identity, mat_mul, mat_vec, Subspace, Vector};
use super::{FieldError, PrimeField};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerKind {
    Kernel,
    Image,
}

/// A nilpotent operator in an adapted basis `e_{i,j}` (`1 <= j <= s`,
/// `1 <= i <= λ_j`) with `N e_{i,j} = e_{i-1,j}` and `e_{0,j} = 0`. Block `j`
/// occupies consecutive coordinates, bottom vector `e_{1,j}` first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentOp {
    jordan: Vec<usize>,
    field: PrimeField,
    matrix: Vec<Vector>,
}

impl NilpotentOp {
    pub fn of_type(jordan: &[usize], field: PrimeField) -> Result<Self, FieldError> {
        if jordan.is_empty() || jordan.contains(&0) || jordan.windows(2).any(|w| w[0] < w[1]) {
            return Err(FieldError::BadPartition(jordan.to_vec()));
        }
        let n = jordan.iter().sum();
        let mut matrix = vec![vec![0; n]; n];
        let mut offset = 0;
        for &len in jordan {
            for i in 1..len {
                matrix[offset + i - 1][offset + i] = 1;
            }
            offset += len;
        }
        Ok(NilpotentOp {
            jordan: jordan.to_vec(),
            field,
            matrix,
        })
    }

    /// Operator of two-block type `(p, q)`; `q = 0` gives a single block.
    pub fn two_block(p: usize, q: usize, field: PrimeField) -> Result<Self, FieldError> {
        if q == 0 {
            Self::of_type(&[p], field)
        } else {
            Self::of_type(&[p, q], field)
        }
    }

    pub fn jordan_type(&self) -> &[usize] {
        &self.jordan
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vector] {
        &self.matrix
    }

    /// Coordinate of `e_{i,j}` (both 1-based).
    pub fn basis_index(&self, i: usize, j: usize) -> usize {
        assert!(j >= 1 && j <= self.jordan.len() && i >= 1 && i <= self.jordan[j - 1]);
        self.jordan[..j - 1].iter().sum::<usize>() + i - 1
    }

    pub fn basis_vector(&self, i: usize, j: usize) -> Vector {
        let mut v = vec![0; self.n()];
        v[self.basis_index(i, j)] = 1;
        v
    }

    pub fn apply(&self, v: &[u32]) -> Vector {
        mat_vec(self.field, &self.matrix, v)
    }

    pub fn power_matrix(&self, k: usize) -> Vec<Vector> {
        (0..k).fold(identity(self.n()), |acc, _| mat_mul(self.field, &self.matrix, &acc))
    }

    pub fn kernel_power(&self, k: usize) -> Subspace {
        Subspace::zero(self.field, self.n()).preimage(&self.power_matrix(k))
    }

    pub fn image_power(&self, k: usize) -> Subspace {
        Subspace::full(self.field, self.n()).image(&self.power_matrix(k))
    }

    pub fn power_subspace(&self, k: usize, kind: PowerKind) -> Subspace {
        match kind {
            PowerKind::Kernel => self.kernel_power(k),
            PowerKind::Image => self.image_power(k),
        }
    }

    /// `Σ_j min(k, λ_j)`.
    pub fn expected_kernel_dim(&self, k: usize) -> usize {
        self.jordan.iter().map(|&l| l.min(k)).sum()
    }

    /// `Σ_j max(λ_j - k, 0)`.
    pub fn expected_image_dim(&self, k: usize) -> usize {
        self.jordan.iter().map(|&l| l.saturating_sub(k)).sum()
    }
}

/// Jordan type (descending) of a nilpotent operator whose kernels of powers
/// have dimensions `ker_dims[k]` for `k = 0, 1, ...` until they stabilise.
pub fn jordan_type_from_kernel_dims(ker_dims: &[usize]) -> Vec<usize> {
    // Number of blocks of size >= k is ker_dims[k] - ker_dims[k-1].
    let at_least: Vec<usize> = ker_dims.windows(2).map(|w| w[1] - w[0]).collect();
    let mut parts = Vec::new();
    for (k, &count) in at_least.iter().enumerate() {
        let next = at_least.get(k + 1).copied().unwrap_or(0);
        for _ in 0..count.saturating_sub(next) {
            parts.push(k + 1);
        }
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(jordan: &[usize], t: u32) -> NilpotentOp {
        NilpotentOp::of_type(jordan, PrimeField::new(t).unwrap()).unwrap()
    }

    #[test]
    fn adapted_matrix() {
        let n = op(&[2, 1], 2);
        assert_eq!(n.matrix(), &[vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 0]]);
        assert_eq!(n.apply(&n.basis_vector(2, 1)), n.basis_vector(1, 1));
        assert!(n.apply(&n.basis_vector(1, 2)).iter().all(|&x| x == 0));
        assert!(op(&[1, 1], 3).matrix().iter().flatten().all(|&x| x == 0));
        assert!(NilpotentOp::of_type(&[1, 2], PrimeField::new(2).unwrap()).is_err());
        assert!(NilpotentOp::of_type(&[], PrimeField::new(2).unwrap()).is_err());
    }

    #[test]
    fn power_subspaces() {
        let n = op(&[2, 1], 2);
        let k1 = n.power_subspace(1, PowerKind::Kernel);
        assert_eq!(k1, Subspace::span(n.field(), 3, &[n.basis_vector(1, 1), n.basis_vector(1, 2)]));
        let i1 = n.power_subspace(1, PowerKind::Image);
        assert_eq!(i1, Subspace::span(n.field(), 3, &[n.basis_vector(1, 1)]));

        let n = op(&[3, 2], 2);
        let dims: Vec<usize> = (1..=3).map(|k| n.kernel_power(k).dim()).collect();
        assert_eq!(dims, vec![2, 4, 5]);
    }

    #[test]
    fn dimension_formulas_for_small_types() {
        fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in (1..=n.min(max)).rev() {
                for mut rest in partitions(n - first, first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        for n in 1..=7 {
            for lambda in partitions(n, n) {
                for t in [2, 3] {
                    let op = op(&lambda, t);
                    let mut ker_dims = Vec::new();
                    for k in 0..=n {
                        let kd = op.kernel_power(k).dim();
                        let id = op.image_power(k).dim();
                        assert_eq!(kd, op.expected_kernel_dim(k));
                        assert_eq!(id, op.expected_image_dim(k));
                        assert_eq!(kd + id, n);
                        ker_dims.push(kd);
                    }
                    assert_eq!(jordan_type_from_kernel_dims(&ker_dims), lambda);
                }
            }
        }
    }
}
