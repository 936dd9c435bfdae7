use crate::error::Error;
use crate::poly::{gcd_poly, Polynomial};
use num::complex::Complex64;
use num::{BigInt, BigRational};
use num_traits::{Signed, Zero};

/// Certified enclosure of a real algebraic number.
#[derive(Debug, Clone, PartialEq)]
pub struct RootBounds {
    pub lo: BigRational,
    pub hi: BigRational,
    /// When true, `lo == hi` is the root exactly.
    pub exact: bool,
}

impl RootBounds {
    pub fn exact_at(x: BigRational) -> Self {
        RootBounds { lo: x.clone(), hi: x, exact: true }
    }

    pub fn midpoint_f64(&self) -> f64 {
        let two = BigRational::from(BigInt::from(2));
        rational_to_f64(&((&self.lo + &self.hi) / two))
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().expect("rational out of f64 range")
}

fn sign(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Positive rescale to leading coefficient of absolute value 1; keeps the
/// coefficient sizes in a Sturm chain from blowing up.
fn normalize_positive(p: Polynomial<BigRational>) -> Polynomial<BigRational> {
    match p.leading() {
        None => p,
        Some(l) => {
            let s = l.abs();
            Polynomial::new(p.coeffs().iter().map(|c| c / &s).collect())
        }
    }
}

fn sturm_chain(p: &Polynomial<BigRational>) -> Vec<Polynomial<BigRational>> {
    let mut chain = vec![normalize_positive(p.clone()), normalize_positive(p.derivative())];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[k - 2].divmod(&chain[k - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(normalize_positive(r.neg_ref()));
    }
}

/// Sign changes in the chain at `x`, zeros skipped. With this convention
/// `V(a) - V(b)` counts the distinct roots in the half-open interval
/// `(a, b]` for a squarefree polynomial, with no restriction on the
/// endpoints themselves.
fn sign_changes(chain: &[Polynomial<BigRational>], x: &BigRational) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in chain {
        let sg = sign(&s.eval(x));
        if sg == 0 {
            continue;
        }
        if last != 0 && sg != last {
            count += 1;
        }
        last = sg;
    }
    count
}

/// Largest real root of `p` in `[lo, hi]`, bisected down to an enclosure of
/// width at most `width` (or detected exactly when a bisection point or an
/// endpoint is a root). Returns None when the interval contains no root.
pub fn largest_real_root_in(
    p: &Polynomial<BigInt>,
    lo: &BigRational,
    hi: &BigRational,
    width: &BigRational,
) -> Option<RootBounds> {
    assert!(lo <= hi, "empty interval");
    assert!(!p.is_zero(), "zero polynomial");
    let pr = p.to_rational();
    let g = gcd_poly(&pr, &pr.derivative());
    let ps = if g.degree().unwrap_or(0) > 0 { pr.divmod(&g).0 } else { pr };
    if ps.degree().unwrap_or(0) == 0 {
        return None;
    }
    if ps.eval(hi).is_zero() {
        return Some(RootBounds::exact_at(hi.clone()));
    }
    if lo == hi {
        return None;
    }
    let chain = sturm_chain(&ps);
    let mut a = lo.clone();
    let mut b = hi.clone();
    let mut v_a = sign_changes(&chain, &a);
    let mut v_b = sign_changes(&chain, &b);
    if v_a == v_b {
        // No roots in (lo, hi]; lo itself may still be one.
        return ps.eval(lo).is_zero().then(|| RootBounds::exact_at(lo.clone()));
    }
    let two = BigRational::from(BigInt::from(2));
    while &b - &a > *width {
        let mid = (&a + &b) / &two;
        let v_mid = sign_changes(&chain, &mid);
        if v_mid > v_b {
            // Roots remain strictly above mid.
            a = mid;
            v_a = v_mid;
        } else if ps.eval(&mid).is_zero() {
            // Nothing above mid and mid itself is a root: found it exactly.
            return Some(RootBounds::exact_at(mid));
        } else {
            b = mid;
            v_b = v_mid;
        }
    }
    debug_assert!(v_a > v_b);
    Some(RootBounds { lo: a, hi: b, exact: false })
}

/// All complex roots of a polynomial with f64 coefficients (ascending), by
/// the Aberth-Ehrlich simultaneous iteration. Deterministic start points,
/// so repeated runs produce identical output. Roots are sorted by real
/// part, then imaginary part.
pub fn complex_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>, Error> {
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while c.last().is_some_and(|z| z.norm() == 0.0) {
        c.pop();
    }
    if c.len() <= 1 {
        return Ok(Vec::new());
    }
    let mut roots_at_zero = 0usize;
    while c[0].norm() == 0.0 {
        c.remove(0);
        roots_at_zero += 1;
    }
    let lead = *c.last().unwrap();
    for z in c.iter_mut() {
        *z /= lead;
    }
    let d = c.len() - 1;
    let mut roots = vec![Complex64::new(0.0, 0.0); roots_at_zero];
    if d == 0 {
        return Ok(roots);
    }

    // Cauchy bound: every root has modulus below 1 + max |a_i|.
    let radius = 1.0 + c[..d].iter().map(|z| z.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..d)
        .map(|j| {
            let theta = 2.0 * std::f64::consts::PI * (j as f64) / (d as f64) + 0.43;
            Complex64::from_polar(radius, theta)
        })
        .collect();

    let eval = |x: Complex64| -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for &coeff in c.iter().rev() {
            dp = dp * x + p;
            p = p * x + coeff;
        }
        (p, dp)
    };

    let tol = 1e-13;
    let mut converged = false;
    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for j in 0..d {
            let (p, dp) = eval(z[j]);
            if p.norm() == 0.0 {
                continue;
            }
            let w = if dp.norm() == 0.0 { p } else { p / dp };
            let s: Complex64 = (0..d)
                .filter(|&k| k != j)
                .map(|k| (z[j] - z[k]).finv())
                .sum();
            let denom = Complex64::new(1.0, 0.0) - w * s;
            let step = if denom.norm() == 0.0 { w } else { w / denom };
            z[j] -= step;
            max_step = max_step.max(step.norm() / (1.0 + z[j].norm()));
        }
        if max_step < tol {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::RootFinding(format!(
            "Aberth iteration did not converge for degree {d}"
        )));
    }
    roots.extend(z);
    roots.sort_by(|a, b| {
        a.re.partial_cmp(&b.re).unwrap().then(a.im.partial_cmp(&b.im).unwrap())
    });
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(coeffs: &[i64]) -> Polynomial<BigInt> {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    fn rat_eps() -> BigRational {
        BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000_000i64))
    }

    #[test]
    fn golden_mean_square_bracket() {
        // x^2 - 3x + 1: largest root (3 + sqrt 5)/2.
        let b = largest_real_root_in(&ip(&[1, -3, 1]), &rat(1), &rat(3), &rat_eps()).unwrap();
        assert!(!b.exact);
        assert!((b.midpoint_f64() - 2.618_033_988_749_895).abs() < 1e-11);
        assert!(b.width() <= rat_eps());
    }

    #[test]
    fn exact_endpoint_and_midpoint_detection() {
        // Double root at 1; interval degenerate at the root.
        assert_eq!(
            largest_real_root_in(&ip(&[1, -2, 1]), &rat(1), &rat(1), &rat_eps()),
            Some(RootBounds::exact_at(rat(1)))
        );
        // (x-1)(x-2)(x-3) in [0,4]: the first bisection midpoint is 2, the
        // second is 3, which is hit exactly.
        let b = largest_real_root_in(&ip(&[-6, 11, -6, 1]), &rat(0), &rat(4), &rat_eps()).unwrap();
        assert!(b.exact);
        assert_eq!(b.lo, rat(3));
    }

    #[test]
    fn squarefree_reduction_finds_multiple_root() {
        let b = largest_real_root_in(&ip(&[4, -4, 1]), &rat(0), &rat(5), &rat_eps()).unwrap();
        assert!((b.midpoint_f64() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn no_root_in_interval() {
        assert_eq!(largest_real_root_in(&ip(&[1, 0, 1]), &rat(0), &rat(10), &rat_eps()), None);
        // Roots exist but below the interval.
        assert_eq!(largest_real_root_in(&ip(&[1, -3, 1]), &rat(4), &rat(9), &rat_eps()), None);
        // Root exactly at the lower endpoint only.
        let b = largest_real_root_in(&ip(&[-2, 1]), &rat(2), &rat(7), &rat_eps()).unwrap();
        assert!(b.exact);
        assert_eq!(b.lo, rat(2));
    }

    #[test]
    fn aberth_quadratic() {
        let roots = complex_roots(&ip(&[1, -3, 1]).to_complex()).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].re - 0.381_966_011_250_105).abs() < 1e-9);
        assert!((roots[1].re - 2.618_033_988_749_895).abs() < 1e-9);
        assert!(roots.iter().all(|z| z.im.abs() < 1e-9));
    }

    #[test]
    fn aberth_palindromic_quartic_unit_circle_pair() {
        // x^4 - 2x^3 - 2x + 1 has real roots r, 1/r and a conjugate pair of
        // modulus one.
        let roots = complex_roots(&ip(&[1, -2, 0, -2, 1]).to_complex()).unwrap();
        assert_eq!(roots.len(), 4);
        let on_circle: Vec<_> =
            roots.iter().filter(|z| (z.norm() - 1.0).abs() < 1e-9 && z.im.abs() > 0.1).collect();
        assert_eq!(on_circle.len(), 2);
        let real: Vec<_> = roots.iter().filter(|z| z.im.abs() < 1e-9).collect();
        assert_eq!(real.len(), 2);
        assert!((real[0].re * real[1].re - 1.0).abs() < 1e-9);
    }

    #[test]
    fn aberth_factors_out_zero_roots() {
        // x^3 - x = x(x-1)(x+1).
        let roots = complex_roots(&ip(&[0, -1, 0, 1]).to_complex()).unwrap();
        assert_eq!(roots.len(), 3);
        assert!((roots[0].re + 1.0).abs() < 1e-10);
        assert!(roots[1].norm() < 1e-10);
        assert!((roots[2].re - 1.0).abs() < 1e-10);
    }
}
