use num_complex::Complex;
use num_traits::Zero;

use crate::qfa::matrix::{inner, norm_sqr, ComplexMatrix, Vector};
use crate::scalar::Real;

/// Norm below which an orthogonalized vector counts as dependent.
pub fn drop_tolerance<T: Real>() -> T {
    T::cast(1e-10).max(T::epsilon() * T::cast(1e3))
}

/// Frobenius threshold for projector comparisons.
pub fn projector_tolerance<T: Real>() -> T {
    T::cast(1e-6).max(T::epsilon() * T::cast(1e4))
}

/// Subspace of `C^n` held as an orthonormal basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<T> {
    n: usize,
    basis: Vec<Vector<T>>,
}

impl<T: Real> Subspace<T> {
    pub fn zero(n: usize) -> Self {
        Self { n, basis: Vec::new() }
    }

    /// Span of `vectors` by modified Gram-Schmidt with one
    /// re-orthogonalization pass.
    pub fn span(n: usize, vectors: impl IntoIterator<Item = Vector<T>>) -> Self {
        let mut s = Self::zero(n);
        for v in vectors {
            s.push(v);
        }
        s
    }

    /// Adds the component of `v` orthogonal to the subspace, if it is not
    /// negligible. Returns whether the dimension grew.
    pub fn push(&mut self, mut v: Vector<T>) -> bool {
        assert_eq!(v.len(), self.n, "vector length differs");
        for _ in 0..2 {
            for b in &self.basis {
                let c = inner(b, &v);
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = *x - c * y;
                }
            }
        }
        let norm = norm_sqr(&v).sqrt();
        if norm <= drop_tolerance() {
            return false;
        }
        let scale = T::one() / norm;
        self.basis.push(v.into_iter().map(|z| z * scale).collect());
        true
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector<T>] {
        &self.basis
    }

    /// `B B^dagger`.
    pub fn projector(&self) -> ComplexMatrix<T> {
        let mut p = ComplexMatrix::zeros(self.n, self.n);
        for b in &self.basis {
            for i in 0..self.n {
                if b[i].is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    p[(i, j)] = p[(i, j)] + b[i] * b[j].conj();
                }
            }
        }
        p
    }

    /// `|| v - P v ||`.
    pub fn residual(&self, v: &[Complex<T>]) -> T {
        let mut r = v.to_vec();
        for b in &self.basis {
            let c = inner(b, v);
            for (x, &y) in r.iter_mut().zip(b) {
                *x = *x - c * y;
            }
        }
        norm_sqr(&r).sqrt()
    }

    /// Whether every basis vector of `other` lies in `self` within `tol`.
    pub fn contains(&self, other: &Self, tol: T) -> bool {
        other.basis.iter().all(|v| self.residual(v) <= tol)
    }

    /// `|| P Q ||_F`; zero exactly when the subspaces are orthogonal.
    pub fn overlap(&self, other: &Self) -> T {
        // ||P Q||_F^2 = sum |<a_i|b_j>|^2 for orthonormal bases
        self.basis
            .iter()
            .flat_map(|a| other.basis.iter().map(move |b| inner(a, b).norm_sqr()))
            .sum::<T>()
            .sqrt()
    }

    /// `|| P - Q ||_F`.
    pub fn distance(&self, other: &Self) -> T {
        self.projector().sub(&other.projector()).frobenius_norm()
    }

    pub fn join(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for v in &other.basis {
            s.push(v.clone());
        }
        s
    }

    /// `span { E v : v in basis, E in elements }`.
    pub fn image<'a>(&self, elements: impl IntoIterator<Item = &'a ComplexMatrix<T>>) -> Self {
        let mut s = Self::zero(self.n);
        for e in elements {
            for v in &self.basis {
                s.push(e.apply(v));
            }
        }
        s
    }

    /// Norm of the part of the subspace supported on the coordinates where
    /// `mask` holds: `|| D B ||_F` for the diagonal projector `D`.
    pub fn weight_on(&self, mask: impl Fn(usize) -> bool) -> T {
        self.basis
            .iter()
            .map(|b| (0..self.n).filter(|&i| mask(i)).map(|i| b[i].norm_sqr()).sum::<T>())
            .sum::<T>()
            .sqrt()
    }
}
