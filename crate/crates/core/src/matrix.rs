use crate::poly::Polynomial;
use num::Integer;
use num_traits::{FromPrimitive, One, Signed, Zero};
use std::ops::{Add, Mul, Neg};

/// Dense square matrix in row-major order, generic over the scalar ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zero(n: usize) -> Self {
        Matrix { n, data: vec![T::zero(); n * n] }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix { n, data: rows.into_iter().flatten().collect() }
    }

    pub fn identity(n: usize) -> Self
    where
        T: One,
    {
        let mut m = Self::zero(n);
        for i in 0..n {
            *m.get_mut(i, i) = T::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> T
    where
        T: Add<Output = T>,
    {
        (0..self.n).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn row_sums(&self) -> Vec<T>
    where
        T: Add<Output = T>,
    {
        (0..self.n)
            .map(|i| self.row(i).iter().cloned().fold(T::zero(), |a, b| a + b))
            .collect()
    }

    pub fn mul_ref(&self, other: &Self) -> Self
    where
        T: Mul<Output = T> + Add<Output = T>,
    {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    let cur = out.get(i, j).clone();
                    *out.get_mut(i, j) = cur + a.clone() * other.get(k, j).clone();
                }
            }
        }
        out
    }

    pub fn add_ref(&self, other: &Self) -> Self
    where
        T: Add<Output = T>,
    {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a = a.clone() + b.clone();
        }
        out
    }

    pub fn scale(&self, s: &T) -> Self
    where
        T: Mul<Output = T>,
    {
        Matrix { n: self.n, data: self.data.iter().map(|c| c.clone() * s.clone()).collect() }
    }

    /// Principal submatrix on the given (distinct) index set, in order.
    pub fn principal_submatrix(&self, idx: &[usize]) -> Self {
        let mut out = Self::zero(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                *out.get_mut(a, b) = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn map<U: Clone + Zero>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { n: self.n, data: self.data.iter().map(f).collect() }
    }
}

impl<T> Matrix<T>
where
    T: Integer + Clone + Signed + FromPrimitive,
{
    /// Exact characteristic polynomial `det(xI - M)`, monic, by the
    /// Faddeev-LeVerrier recurrence. The trace divisions are exact over
    /// the integers at every step; this is asserted.
    pub fn char_poly(&self) -> Polynomial<T> {
        let n = self.n;
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        if n == 0 {
            return Polynomial::new(coeffs);
        }
        let mut m = self.clone();
        coeffs[n - 1] = -m.trace();
        for k in 2..=n {
            // M_k = A (M_{k-1} + c_{n-k+1} I)
            let mut shifted = m;
            for i in 0..n {
                let cur = shifted.get(i, i).clone();
                *shifted.get_mut(i, i) = cur + coeffs[n - k + 1].clone();
            }
            m = self.mul_ref(&shifted);
            let t = m.trace();
            let (q, r) = t.div_rem(&T::from_usize(k).expect("small integer fits scalar"));
            assert!(r.is_zero(), "Faddeev-LeVerrier trace division must be exact");
            coeffs[n - k] = -q;
        }
        Polynomial::new(coeffs)
    }
}

/// Determinant by cofactor expansion along the first row. Exponential in
/// the dimension; used as an independent cross-check for small matrices.
pub fn det_cofactor<T>(m: &Matrix<T>) -> T
where
    T: Clone + Zero + Mul<Output = T> + Add<Output = T> + Neg<Output = T>,
{
    let n = m.dim();
    if n == 0 {
        panic!("determinant of empty matrix");
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut det = T::zero();
    for j in 0..n {
        let a = m.get(0, j);
        if a.is_zero() {
            continue;
        }
        let mut minor = Matrix::zero(n - 1);
        for i in 1..n {
            let mut col = 0;
            for jj in 0..n {
                if jj == j {
                    continue;
                }
                *minor.get_mut(i - 1, col) = m.get(i, jj).clone();
                col += 1;
            }
        }
        let term = a.clone() * det_cofactor(&minor);
        det = if j % 2 == 0 { det + term } else { det + (-term) };
    }
    det
}

/// Evaluate a polynomial at a square matrix (Horner over the matrix ring).
pub fn eval_at_matrix<T>(p: &Polynomial<T>, m: &Matrix<T>) -> Matrix<T>
where
    T: Clone + Zero + One + Mul<Output = T> + Add<Output = T>,
{
    let n = m.dim();
    let mut acc = Matrix::zero(n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul_ref(m);
        for i in 0..n {
            let cur = acc.get(i, i).clone();
            *acc.get_mut(i, i) = cur + c.clone();
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;
    use proptest::prelude::*;

    fn im(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&c| BigInt::from(c)).collect()).collect(),
        )
    }

    fn ip(coeffs: &[i64]) -> Polynomial<BigInt> {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn char_poly_known_cases() {
        assert_eq!(im(&[&[1, 1], &[0, 1]]).char_poly(), ip(&[1, -2, 1]));
        assert_eq!(im(&[&[2, 1], &[1, 1]]).char_poly(), ip(&[1, -3, 1]));
        let id3 = Matrix::<BigInt>::identity(3);
        assert_eq!(id3.char_poly(), ip(&[-1, 3, -3, 1]));
    }

    /// det(xI - M) by cofactor expansion over polynomial entries. Slow,
    /// independent of the Faddeev-LeVerrier path.
    fn char_poly_cofactor(m: &Matrix<BigInt>) -> Polynomial<BigInt> {
        let x_minus = m.map(|c| {
            // entry of xI - M
            Polynomial::new(vec![-c.clone()])
        });
        let n = m.dim();
        let mut shifted = x_minus;
        for i in 0..n {
            let cur = shifted.get(i, i).clone();
            *shifted.get_mut(i, i) =
                cur.add_ref(&Polynomial::monomial(BigInt::from(1), 1));
        }
        det_cofactor(&shifted)
    }

    proptest! {
        #[test]
        fn char_poly_matches_cofactor_expansion(
            n in 1usize..5,
            seed in proptest::collection::vec(-3i64..4, 25),
        ) {
            let rows: Vec<Vec<BigInt>> = (0..n)
                .map(|i| (0..n).map(|j| BigInt::from(seed[i * 5 + j])).collect())
                .collect();
            let m = Matrix::from_rows(rows);
            prop_assert_eq!(m.char_poly(), char_poly_cofactor(&m));
        }

        #[test]
        fn cayley_hamilton(
            n in 1usize..5,
            seed in proptest::collection::vec(-3i64..4, 25),
        ) {
            let rows: Vec<Vec<BigInt>> = (0..n)
                .map(|i| (0..n).map(|j| BigInt::from(seed[i * 5 + j])).collect())
                .collect();
            let m = Matrix::from_rows(rows);
            let chi = m.char_poly();
            let z = eval_at_matrix(&chi, &m);
            prop_assert_eq!(z, Matrix::zero(n));
        }
    }

    #[test]
    fn submatrix_and_row_sums() {
        let m = im(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(m.row_sums(), vec![BigInt::from(6), BigInt::from(15), BigInt::from(24)]);
        assert_eq!(m.principal_submatrix(&[0, 2]), im(&[&[1, 3], &[7, 9]]));
    }
}
