//! First-order differential operators with polynomial coefficients.
//!
//! `L_N w = (alpha + beta z)(gamma + delta z) w' - beta delta N z w` maps
//! polynomials of degree at most `N` into themselves; its matrix in the
//! monomial basis is `J_N`. The three-parameter form
//! `L_{a,b,c} u = (a + b z + c z^2) u' - N c z u` has matrix `B_N(a, b, c)`.
//! Derivatives are taken by shift-and-scale on coefficient vectors.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{int, Polynomial, QuadExt, Rational};
use crate::matrices::build_general;
use crate::spectral::{abc_eigenvalue, discriminant_abc};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
    pub n: usize,
}

impl OperatorParams {
    pub fn new(
        alpha: Rational,
        beta: Rational,
        gamma: Rational,
        delta: Rational,
        n: usize,
    ) -> Result<Self> {
        if n < 1 {
            return Err(Error::SizeTooSmall { min: 1, got: n });
        }
        Ok(OperatorParams {
            alpha,
            beta,
            gamma,
            delta,
            n,
        })
    }

    /// `alpha delta - beta gamma`.
    pub fn discriminant(&self) -> Rational {
        &self.alpha * &self.delta - &self.beta * &self.gamma
    }
}

fn check_degree(p: &Polynomial, n: usize) -> Result<()> {
    match p.degree() {
        Some(degree) if degree > n => Err(Error::DegreeTooHigh { degree, n }),
        _ => Ok(()),
    }
}

fn linear(c0: &Rational, c1: &Rational) -> Polynomial {
    Polynomial::from_rationals([c0, c1])
}

/// `L_N p` for `deg p <= N`.
pub fn apply_operator(params: &OperatorParams, p: &Polynomial) -> Result<Polynomial> {
    check_degree(p, params.n)?;
    let lead =
        linear(&params.alpha, &params.beta).try_mul(&linear(&params.gamma, &params.delta))?;
    let first = lead.try_mul(&p.derivative())?;
    let bdn = &params.beta * &params.delta * int(params.n as i64);
    first.try_sub(&p.shift(1).scale_rational(&bdn))
}

/// `L_{a,b,c} p` for `deg p <= N`.
pub fn apply_operator_abc(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    n: usize,
    p: &Polynomial,
) -> Result<Polynomial> {
    check_degree(p, n)?;
    let lead = Polynomial::from_rationals([a, b, c]);
    let first = lead.try_mul(&p.derivative())?;
    first.try_sub(&p.shift(1).scale_rational(&(c * int(n as i64))))
}

/// The operator `z d/dz` on polynomials of degree at most `N`: the
/// `(a, b, c) = (0, 1, 0)` preset, whose eigenpairs are `(j, z^j)`.
pub fn apply_classic(n: usize, p: &Polynomial) -> Result<Polynomial> {
    apply_operator_abc(&int(0), &int(1), &int(0), n, p)
}

/// `w_j = (alpha + beta z)^j (gamma + delta z)^(N - j)`, expanded.
pub fn eigenpolynomial(params: &OperatorParams, j: usize) -> Result<Polynomial> {
    if j > params.n {
        return Err(Error::IndexOutOfRange {
            index: j as i64,
            max: params.n,
        });
    }
    let left = linear(&params.alpha, &params.beta).pow(j as u32)?;
    let right = linear(&params.gamma, &params.delta).pow((params.n - j) as u32)?;
    left.try_mul(&right)
}

/// `mu_j = alpha delta N - (alpha delta - beta gamma) j` for any integer `j`.
pub fn mobius_eigen_map(params: &OperatorParams, j: i64) -> Result<QuadExt> {
    let d = params.discriminant();
    if d.is_zero() {
        return Err(Error::Degenerate("alpha*delta - beta*gamma = 0".into()));
    }
    Ok(QuadExt::from(
        &params.alpha * &params.delta * int(params.n as i64) - d * int(j),
    ))
}

/// `scale * prod (z - root)^exp`, kept factored so that negative exponents
/// never have to be expanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredEigenfunction {
    pub j: i64,
    pub scale: QuadExt,
    pub factors: Vec<(QuadExt, i64)>,
}

impl FactoredEigenfunction {
    fn is_pole(&self, z: &QuadExt) -> bool {
        self.factors.iter().any(|(r, e)| *e < 0 && r == z)
    }

    pub fn eval(&self, z: &QuadExt) -> Result<QuadExt> {
        if self.is_pole(z) {
            return Err(Error::Pole);
        }
        self.factors
            .iter()
            .try_fold(self.scale.clone(), |acc, (r, e)| {
                acc.try_mul(&z.try_sub(r)?.powi(*e)?)
            })
    }

    /// Derivative by the product rule on the factored form.
    pub fn eval_derivative(&self, z: &QuadExt) -> Result<QuadExt> {
        if self.is_pole(z) {
            return Err(Error::Pole);
        }
        let diffs = self
            .factors
            .iter()
            .map(|(r, _)| z.try_sub(r))
            .collect::<Result<Vec<_>>>()?;
        let mut total = QuadExt::zero();
        for (m, (_, em)) in self.factors.iter().enumerate() {
            if *em == 0 {
                continue;
            }
            let mut term = diffs[m].powi(em - 1)?.scale(&int(*em));
            for (l, (_, el)) in self.factors.iter().enumerate() {
                if l != m {
                    term = term.try_mul(&diffs[l].powi(*el)?)?;
                }
            }
            total = total.try_add(&term)?;
        }
        total.try_mul(&self.scale)
    }

    /// Expanded polynomial when every exponent is nonnegative.
    pub fn expand(&self) -> Result<Option<Polynomial>> {
        if self.factors.iter().any(|(_, e)| *e < 0) {
            return Ok(None);
        }
        let mut acc = Polynomial::constant(self.scale.clone());
        for (r, e) in &self.factors {
            let lin = Polynomial::new(vec![-r, QuadExt::one()]);
            acc = acc.try_mul(&lin.pow(*e as u32)?)?;
        }
        Ok(Some(acc))
    }
}

/// `Q_j(z) = (2c)^N / ((sqrt D - b)^j (sqrt D + b)^(N-j))
///           * (z - (sqrt D - b)/(2c))^j (z + (sqrt D + b)/(2c))^(N-j)`.
///
/// With this normalization `Q_j(0) = (-1)^j`.
pub fn rational_eigenfunction(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    n: usize,
    j: i64,
) -> Result<FactoredEigenfunction> {
    if a.is_zero() || c.is_zero() {
        return Err(Error::Domain(
            "rational eigenfunctions need a != 0 and c != 0".into(),
        ));
    }
    let d = discriminant_abc(a, b, c);
    if d.is_zero() {
        return Err(Error::Degenerate("b^2 - 4ac = 0".into()));
    }
    let root = QuadExt::sqrt(&d);
    let bq = QuadExt::from(b).in_field(&d);
    let two_c = QuadExt::from(c * int(2));
    let minus = root.try_sub(&bq)?;
    let plus = root.try_add(&bq)?;
    let nj = n as i64 - j;
    let scale = two_c
        .powi(n as i64)?
        .try_div(&minus.powi(j)?.try_mul(&plus.powi(nj)?)?)?;
    let root1 = minus.try_div(&two_c)?;
    let root2 = -plus.try_div(&two_c)?;
    Ok(FactoredEigenfunction {
        j,
        scale,
        factors: vec![(root1, j), (root2, nj)],
    })
}

pub fn rational_eigenfunction_eval(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    n: usize,
    j: i64,
    z: &QuadExt,
) -> Result<QuadExt> {
    rational_eigenfunction(a, b, c, n, j)?.eval(z)
}

/// Pointwise check of `(a + b z + c z^2) Q_j'(z) - N c z Q_j(z) = lambda_j Q_j(z)`.
pub fn rational_eigen_identity_at(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    n: usize,
    j: i64,
    z: &QuadExt,
) -> Result<bool> {
    let q = rational_eigenfunction(a, b, c, n, j)?;
    let value = q.eval(z)?;
    let slope = q.eval_derivative(z)?;
    let coef = Polynomial::from_rationals([a, b, c]).eval(z)?;
    let lhs = coef
        .try_mul(&slope)?
        .try_sub(&z.try_mul(&value)?.scale(&(c * int(n as i64))))?;
    let rhs = abc_eigenvalue(a, b, c, n, j).try_mul(&value)?;
    Ok(lhs == rhs)
}

/// Coefficients of `L_N p` agree with `J_N` times the coefficients of `p`.
pub fn operator_matrix_consistency(params: &OperatorParams, p: &Polynomial) -> bool {
    let check = || -> Result<bool> {
        let lhs = apply_operator(params, p)?;
        let j = build_general(
            &params.alpha,
            &params.beta,
            &params.gamma,
            &params.delta,
            params.n,
        )?;
        let rhs = j.matvec(&p.padded(params.n + 1))?;
        Ok(lhs.padded(params.n + 1) == rhs && lhs.degree().is_none_or(|d| d <= params.n))
    };
    check().unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    fn kac2() -> OperatorParams {
        OperatorParams::new(int(1), int(1), int(1), int(-1), 2).unwrap()
    }

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn apply_examples() {
        assert_eq!(apply_operator(&kac2(), &p(&[1])).unwrap(), p(&[0, 2]));
        assert_eq!(
            apply_operator(&kac2(), &p(&[1, 0, -1])).unwrap(),
            Polynomial::zero()
        );
        assert_eq!(
            apply_operator(&kac2(), &Polynomial::zero()).unwrap(),
            Polynomial::zero()
        );
        assert_eq!(
            apply_operator(&kac2(), &p(&[0, 0, 0, 1])),
            Err(Error::DegreeTooHigh { degree: 3, n: 2 })
        );
    }

    #[test]
    fn apply_abc_examples() {
        let (one, zero, m1) = (int(1), int(0), int(-1));
        assert_eq!(
            apply_operator_abc(&one, &zero, &m1, 2, &p(&[1])).unwrap(),
            p(&[0, 2])
        );
        assert_eq!(
            apply_operator_abc(&one, &one, &one, 1, &p(&[0, 1])).unwrap(),
            p(&[1, 1])
        );
        let k = ratio(3, 7);
        let out = apply_operator_abc(
            &int(2),
            &int(5),
            &ratio(1, 3),
            4,
            &Polynomial::from_rationals([&k]),
        )
        .unwrap();
        assert_eq!(
            out,
            Polynomial::from_rationals([&int(0), &(-(int(4) * ratio(1, 3) * &k))])
        );
    }

    #[test]
    fn classic_monomials() {
        for n in 1..=10usize {
            for j in 0..=n {
                let m = Polynomial::monomial(j, QuadExt::one());
                assert_eq!(
                    apply_classic(n, &m).unwrap(),
                    m.scale_rational(&int(j as i64))
                );
            }
        }
    }

    #[test]
    fn eigenpolynomial_examples() {
        assert_eq!(eigenpolynomial(&kac2(), 1).unwrap(), p(&[1, 0, -1]));
        assert_eq!(eigenpolynomial(&kac2(), 0).unwrap(), p(&[1, -2, 1]));
        let params = OperatorParams::new(int(2), int(3), int(5), int(7), 3).unwrap();
        assert_eq!(eigenpolynomial(&params, 3).unwrap(), p(&[8, 36, 54, 27]));
        assert!(matches!(
            eigenpolynomial(&kac2(), 3),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius_eigen_map(&kac2(), 1).unwrap(), QuadExt::zero());
        assert_eq!(mobius_eigen_map(&kac2(), 0).unwrap(), QuadExt::from_int(-2));
        assert_eq!(
            mobius_eigen_map(&kac2(), -1).unwrap(),
            QuadExt::from_int(-4)
        );
        let deg = OperatorParams::new(int(1), int(1), int(2), int(2), 2).unwrap();
        assert!(matches!(
            mobius_eigen_map(&deg, 0),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn rational_eigenfunction_examples() {
        let (a, b, c) = (int(1), int(0), int(-1));
        let at =
            |j, z| rational_eigenfunction_eval(&a, &b, &c, 1, j, &QuadExt::from_int(z)).unwrap();
        assert_eq!(at(0, 0), QuadExt::one());
        assert_eq!(at(0, 1), QuadExt::zero());
        // normalization Q_1(z) = -(1 + z)
        assert_eq!(at(1, 0), QuadExt::from_int(-1));
        assert_eq!(at(1, 2), QuadExt::from_int(-3));
        let q0 = rational_eigenfunction(&a, &b, &c, 1, 0).unwrap();
        assert_eq!(q0.expand().unwrap().unwrap(), p(&[1, -1]));
    }

    #[test]
    fn rational_eigenfunction_poles() {
        let (a, b, c) = (int(1), int(0), int(-1));
        // j = -1: pole at the zero of the first factor, (sqrt D - b)/(2c) = -1
        let err = rational_eigenfunction_eval(&a, &b, &c, 2, -1, &QuadExt::from_int(-1));
        assert_eq!(err, Err(Error::Pole));
        // j = N + 1: pole at -(sqrt D + b)/(2c) = 1
        let err = rational_eigenfunction_eval(&a, &b, &c, 2, 3, &QuadExt::from_int(1));
        assert_eq!(err, Err(Error::Pole));
        assert!(rational_eigenfunction(&a, &b, &c, 2, -1)
            .unwrap()
            .expand()
            .unwrap()
            .is_none());
    }

    #[test]
    fn rational_eigenfunction_field_mismatch() {
        let (a, b, c) = (int(1), int(1), int(1));
        let z = QuadExt::sqrt(&int(2));
        assert!(matches!(
            rational_eigenfunction_eval(&a, &b, &c, 2, 1, &z),
            Err(Error::RadicandMismatch { .. })
        ));
    }

    #[test]
    fn identity_for_negative_and_large_j() {
        let (a, b, c) = (int(2), int(3), int(-1));
        for j in -3..=6 {
            for z in [int(0), int(5), ratio(-7, 3)] {
                assert!(rational_eigen_identity_at(&a, &b, &c, 3, j, &QuadExt::from(z)).unwrap());
            }
        }
    }

    #[test]
    fn consistency_examples() {
        assert!(operator_matrix_consistency(&kac2(), &p(&[1])));
        assert!(operator_matrix_consistency(&kac2(), &p(&[0, 0, 1])));
        assert!(!operator_matrix_consistency(&kac2(), &p(&[0, 0, 0, 1])));
    }

    #[test]
    fn eigen_identity() {
        let params = OperatorParams::new(ratio(2, 3), int(-1), int(4), ratio(1, 5), 5).unwrap();
        for j in 0..=5 {
            let w = eigenpolynomial(&params, j).unwrap();
            let mu = mobius_eigen_map(&params, j as i64).unwrap();
            assert_eq!(
                apply_operator(&params, &w).unwrap(),
                w.try_scale(&mu).unwrap()
            );
        }
    }
}
