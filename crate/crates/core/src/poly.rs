use num::complex::Complex64;
use num::{BigInt, BigRational};
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Dense univariate polynomial with coefficients in ascending degree order.
/// The zero polynomial stores no coefficients; all constructors trim
/// trailing zeros so representations are canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Zero> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `1 + x + x^2 + ... + x^d`.
    pub fn all_ones(d: usize) -> Self
    where
        T: One,
    {
        Self::new(vec![T::one(); d + 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool
    where
        T: One + PartialEq,
    {
        self.leading().is_some_and(|c| *c == T::one())
    }

    /// Number of trailing zero coefficients, i.e. the multiplicity of the
    /// root 0 (zero for the zero polynomial).
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Exact division by `x^l`; panics if the low coefficients are not zero.
    pub fn shift_down(&self, l: usize) -> Self {
        assert!(self.trailing_zeros() >= l || self.is_zero(), "not divisible by x^{l}");
        Self::new(self.coeffs.iter().skip(l).cloned().collect())
    }

    pub fn eval(&self, x: &T) -> T
    where
        T: Mul<Output = T> + Add<Output = T>,
    {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add_ref(&self, other: &Self) -> Self
    where
        T: Add<Output = T>,
    {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub_ref(&self, other: &Self) -> Self
    where
        T: Sub<Output = T>,
    {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Self::new(out)
    }

    pub fn neg_ref(&self) -> Self
    where
        T: Neg<Output = T>,
    {
        Self::new(self.coeffs.iter().cloned().map(|c| -c).collect())
    }

    pub fn mul_ref(&self, other: &Self) -> Self
    where
        T: Mul<Output = T> + Add<Output = T>,
    {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, s: &T) -> Self
    where
        T: Mul<Output = T>,
    {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Equality up to an overall sign flip, used to compare a computed
    /// monic polynomial against a formula printed with the opposite sign.
    pub fn eq_up_to_sign(&self, other: &Self) -> bool
    where
        T: Neg<Output = T> + PartialEq,
    {
        self == other || *self == other.neg_ref()
    }

    /// Long division by a monic divisor; exact over any commutative ring.
    /// Panics if the divisor is not monic.
    pub fn divmod_monic(&self, divisor: &Self) -> (Self, Self)
    where
        T: One + PartialEq + Sub<Output = T> + Mul<Output = T>,
    {
        assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let q = rem[i].clone();
            if q.is_zero() {
                continue;
            }
            quot[i - d] = q.clone();
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i - d + j] = rem[i - d + j].clone() - q.clone() * b.clone();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Long division over a field (divisor need not be monic).
    pub fn divmod(&self, divisor: &Self) -> (Self, Self)
    where
        T: Sub<Output = T> + Mul<Output = T> + Div<Output = T>,
    {
        let lead = divisor.leading().expect("division by zero polynomial").clone();
        let d = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].clone() / lead.clone();
            quot[i - d] = q.clone();
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i - d + j] = rem[i - d + j].clone() - q.clone() * b.clone();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn derivative(&self) -> Self
    where
        T: Mul<Output = T> + FromPrimitive,
    {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_usize(i).expect("small integer fits scalar"))
                .collect(),
        )
    }
}

impl<T: Clone + Zero> Add for Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl<T: Clone + Zero + Sub<Output = T>> Sub for Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl<T: Clone + Zero + Mul<Output = T>> Mul for Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<T: Clone + Zero + Neg<Output = T>> Neg for Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl<T: Clone + Zero> Zero for Polynomial<T> {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
}

impl<T: Clone + Zero + One + PartialEq> One for Polynomial<T> {
    fn one() -> Self {
        Polynomial::constant(T::one())
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

impl Polynomial<BigInt> {
    pub fn to_rational(&self) -> Polynomial<BigRational> {
        Polynomial::new(self.coeffs.iter().map(|c| BigRational::from(c.clone())).collect())
    }

    /// Float coefficients for numerical root finding; panics when a
    /// coefficient does not fit a double (never the case here: inputs are
    /// characteristic polynomials of small-entry matrices).
    pub fn to_complex(&self) -> Vec<Complex64> {
        self.coeffs
            .iter()
            .map(|c| Complex64::new(c.to_f64().expect("coefficient exceeds f64"), 0.0))
            .collect()
    }
}

impl<T: Signed + fmt::Display + Clone + Zero + One + PartialEq> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Greatest common divisor over a field, normalized monic.
pub fn gcd_poly<T>(a: &Polynomial<T>, b: &Polynomial<T>) -> Polynomial<T>
where
    T: Clone + Zero + One + PartialEq + Sub<Output = T> + Mul<Output = T> + Div<Output = T>,
{
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = a.divmod(&b);
        a = b;
        b = r;
    }
    if a.is_zero() {
        return a;
    }
    let lead = a.leading().unwrap().clone();
    Polynomial::new(a.coeffs().iter().map(|c| c.clone() / lead.clone()).collect())
}
