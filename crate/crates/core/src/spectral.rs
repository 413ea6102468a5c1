//! Closed-form eigendata of `J_N` and `B_N`, the degenerate case, the
//! left-to-right eigenvector conversion and exact residual checks.
//!
//! Eigenvectors are returned exactly as the closed forms produce them: the
//! first entry is 1 and no further normalization is applied. Comparisons
//! between eigenvectors go through [`proportional`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{binomial, int, Polynomial, QuadExt, Rational};
use crate::matrices::{build_general, Tridiagonal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenPair {
    pub index: i64,
    pub value: QuadExt,
    pub vector: Vec<QuadExt>,
    pub side: Side,
    verified: bool,
}

impl EigenPair {
    pub fn new(index: i64, value: QuadExt, vector: Vec<QuadExt>, side: Side) -> Self {
        EigenPair {
            index,
            value,
            vector,
            side,
            verified: false,
        }
    }

    /// Runs the exact residual check against `t`; the flag records the outcome.
    pub fn verify(&mut self, t: &Tridiagonal) -> bool {
        self.verified = verify_eigenpair(t, &self.value, &self.vector, self.side);
        self.verified
    }

    pub fn verified(&self) -> bool {
        self.verified
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegenerateCase {
    BetaDeltaZero,
    BetaDeltaNonzero,
}

impl DegenerateCase {
    pub fn tag(&self) -> &'static str {
        match self {
            DegenerateCase::BetaDeltaZero => "beta_delta_zero",
            DegenerateCase::BetaDeltaNonzero => "beta_delta_nonzero",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerateReport {
    pub eigenvalue: QuadExt,
    pub algebraic_multiplicity: usize,
    pub geometric_multiplicity: usize,
    pub eigenvector: Vec<QuadExt>,
    pub case_tag: DegenerateCase,
}

pub fn discriminant_general(
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
    delta: &Rational,
) -> Rational {
    alpha * delta - beta * gamma
}

/// `mu_j = alpha delta (N - j) + beta gamma j`, `j = 0..=N`.
pub fn eigenvalues_general(
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
    delta: &Rational,
    n: usize,
) -> Result<Vec<Rational>> {
    if n < 1 {
        return Err(Error::SizeTooSmall { min: 1, got: n });
    }
    if discriminant_general(alpha, beta, gamma, delta).is_zero() {
        return Err(Error::Degenerate(
            "alpha*delta - beta*gamma = 0; use degenerate_analysis".into(),
        ));
    }
    let ad = alpha * delta;
    let bg = beta * gamma;
    let values: Vec<Rational> = (0..=n)
        .map(|j| &ad * int((n - j) as i64) + &bg * int(j as i64))
        .collect();
    // consecutive values differ by beta*gamma - alpha*delta != 0
    if values.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Consistency(
            "closed-form eigenvalues are not distinct".into(),
        ));
    }
    Ok(values)
}

/// Coefficients of `(alpha + beta z)^j (gamma + delta z)^(N-j)` divided by
/// `alpha^j gamma^(N-j)`.
pub fn eigenvector_general(
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
    delta: &Rational,
    n: usize,
    j: usize,
) -> Result<Vec<Rational>> {
    if n < 1 {
        return Err(Error::SizeTooSmall { min: 1, got: n });
    }
    if j > n {
        return Err(Error::IndexOutOfRange {
            index: j as i64,
            max: n,
        });
    }
    if alpha.is_zero() || gamma.is_zero() {
        return Err(Error::Domain(
            "alpha = 0 or gamma = 0: the matrix is triangular and the closed-form \
             eigenvectors divide by alpha and gamma"
                .into(),
        ));
    }
    if discriminant_general(alpha, beta, gamma, delta).is_zero() {
        return Err(Error::Degenerate(
            "alpha*delta - beta*gamma = 0; use degenerate_analysis".into(),
        ));
    }
    let r1 = delta / gamma;
    let r2 = beta / alpha;
    let p1 = powers(&r1, n);
    let p2 = powers(&r2, j);
    let (n, j) = (n as i64, j as i64);
    let v = (0..=n)
        .map(|k| {
            (0..=k.min(j)).fold(Rational::zero(), |acc, i| {
                let c = binomial(j, i).unwrap() * binomial(n - j, k - i).unwrap();
                acc + Rational::from_integer(c) * &p1[(k - i) as usize] * &p2[i as usize]
            })
        })
        .collect();
    Ok(v)
}

fn powers(r: &Rational, max: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(max + 1);
    let mut acc = Rational::one();
    for _ in 0..=max {
        out.push(acc.clone());
        acc *= r;
    }
    out
}

fn check_abc(a: &Rational, c: &Rational, n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::SizeTooSmall { min: 1, got: n });
    }
    if a.is_zero() || c.is_zero() {
        return Err(Error::Domain(
            "closed forms for B_N(a, b, c) need a != 0 and c != 0".into(),
        ));
    }
    Ok(())
}

/// `D = b^2 - 4ac`.
pub fn discriminant_abc(a: &Rational, b: &Rational, c: &Rational) -> Rational {
    b * b - int(4) * a * c
}

/// `lambda_j = j (b + sqrt D)/2 + (N - j)(b - sqrt D)/2` for any integer `j`.
///
/// Swapping the sign of the root is the same as `j -> N - j`, so only the
/// `+sqrt(D)` branch is ever represented.
pub fn abc_eigenvalue(a: &Rational, b: &Rational, c: &Rational, n: usize, j: i64) -> QuadExt {
    let d = discriminant_abc(a, b, c);
    let nn = int(n as i64);
    QuadExt::new(&nn * b / int(2), (int(2 * j) - &nn) / int(2), d.clone()).in_field(&d)
}

pub fn eigenvalues_abc(a: &Rational, b: &Rational, c: &Rational, n: usize) -> Result<Vec<QuadExt>> {
    check_abc(a, c, n)?;
    if discriminant_abc(a, b, c).is_zero() {
        return Err(Error::Degenerate("b^2 - 4ac = 0".into()));
    }
    Ok((0..=n as i64)
        .map(|j| abc_eigenvalue(a, b, c, n, j))
        .collect())
}

pub fn eigenvector_abc(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    n: usize,
    j: usize,
) -> Result<Vec<QuadExt>> {
    check_abc(a, c, n)?;
    if j > n {
        return Err(Error::IndexOutOfRange {
            index: j as i64,
            max: n,
        });
    }
    let d = discriminant_abc(a, b, c);
    if d.is_zero() {
        return Err(Error::Degenerate("b^2 - 4ac = 0".into()));
    }
    let root = QuadExt::sqrt(&d);
    let bq = QuadExt::from(b).in_field(&d);
    let plus = &bq + &root;
    let minus = &bq - &root;
    // (b + sqrt D)(b - sqrt D) = 4ac != 0, so neither factor vanishes
    let r1 = QuadExt::from(c * int(2)).try_div(&plus)?;
    let r2 = plus.try_div(&minus)?;
    let p1: Vec<QuadExt> = (0..=n as i64).map(|k| r1.powi(k)).collect::<Result<_>>()?;
    let p2: Vec<QuadExt> = (0..=j as i64).map(|i| r2.powi(i)).collect::<Result<_>>()?;
    let (nn, jj) = (n as i64, j as i64);
    (0..=nn)
        .map(|k| {
            let mut sum = QuadExt::zero().in_field(&d);
            for i in 0..=k.min(jj) {
                let c = binomial(jj, i)? * binomial(nn - jj, k - i)?;
                sum = sum.try_add(&p2[i as usize].scale(&Rational::from_integer(c)))?;
            }
            sum.try_mul(&p1[k as usize])
        })
        .collect()
}

/// Rank of a rational matrix by fraction-free (Bareiss) elimination.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    // clear denominators row by row; row scaling preserves rank
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            for k in col + 1..ncols {
                let v = (&m[r][col] * &m[i][k] - &m[i][col] * &m[r][k]) / &prev;
                m[i][k] = v;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[r][col].clone();
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}

/// The `alpha delta = beta gamma` case: a single eigenvalue of algebraic
/// multiplicity `N+1` with a one-dimensional eigenspace.
pub fn degenerate_analysis(
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
    delta: &Rational,
    n: usize,
) -> Result<DegenerateReport> {
    if !discriminant_general(alpha, beta, gamma, delta).is_zero() {
        return Err(Error::Domain(
            "alpha*delta - beta*gamma != 0: the spectrum is simple, use the closed forms".into(),
        ));
    }
    let j = build_general(alpha, beta, gamma, delta, n)?;
    let (case_tag, mu, vector) = match (beta.is_zero(), delta.is_zero()) {
        (true, true) => {
            if (alpha * gamma).is_zero() {
                return Err(Error::TrivialOperator(
                    "alpha*gamma = 0 with beta = delta = 0".into(),
                ));
            }
            let mut e0 = vec![QuadExt::zero(); n + 1];
            e0[0] = QuadExt::one();
            (DegenerateCase::BetaDeltaZero, Rational::zero(), e0)
        }
        (false, false) => {
            let mu = alpha * delta * int(n as i64);
            let nn = n as i64;
            let v = (0..=nn)
                .map(|k| {
                    let c = Rational::from_integer(binomial(nn, k).unwrap());
                    QuadExt::from(c * pow_rat(alpha, nn - k) * pow_rat(beta, k))
                })
                .collect();
            (DegenerateCase::BetaDeltaNonzero, mu, v)
        }
        // one of beta, delta vanishes: D = 0 then forces alpha = 0 (resp. gamma = 0)
        _ => {
            return Err(Error::TrivialOperator(
                "exactly one of beta, delta is zero: the operator vanishes identically".into(),
            ))
        }
    };

    let value = QuadExt::from(&mu);
    if !verify_eigenpair(&j, &value, &vector, Side::Right) {
        return Err(Error::Consistency(
            "degenerate eigenvector fails the residual check".into(),
        ));
    }
    let algebraic = root_multiplicity(&j.char_poly(), &value)?;
    let shifted = j.shifted(&-&mu);
    let geometric = j.size() - rank(&shifted.to_dense());
    if algebraic != n + 1 || geometric != 1 {
        return Err(Error::Consistency(format!(
            "degenerate case multiplicities ({algebraic}, {geometric}) differ from ({}, 1)",
            n + 1
        )));
    }
    Ok(DegenerateReport {
        eigenvalue: value,
        algebraic_multiplicity: algebraic,
        geometric_multiplicity: geometric,
        eigenvector: vector,
        case_tag,
    })
}

fn pow_rat(r: &Rational, e: i64) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * r)
}

/// Number of times `(x - root)` divides `p` exactly.
pub fn root_multiplicity(p: &Polynomial, root: &QuadExt) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Domain(
            "multiplicity of a root of the zero polynomial".into(),
        ));
    }
    let lin = Polynomial::new(vec![-root, QuadExt::one()]);
    let mut cur = p.clone();
    let mut count = 0;
    loop {
        let (q, r) = cur.divide(&lin)?;
        if !r.is_zero() {
            return Ok(count);
        }
        count += 1;
        cur = q;
    }
}

/// Diagonal `Delta` with `Delta T Delta^{-1} = T^T`: `d_0 = 1`,
/// `d_{k+1} = d_k sup_k / sub_k`.
pub fn symmetrizer(t: &Tridiagonal) -> Result<Vec<Rational>> {
    let mut d = Vec::with_capacity(t.size());
    d.push(Rational::one());
    for k in 0..t.size() - 1 {
        if t.sub()[k].is_zero() || t.sup()[k].is_zero() {
            return Err(Error::ZeroOffDiagonal { index: k });
        }
        let next = &d[k] * &t.sup()[k] / &t.sub()[k];
        d.push(next);
    }
    Ok(d)
}

/// Converts a left eigenvector `u` (with `u T = lambda u`) into the right
/// eigenvector `Delta^{-1} u^T` for the same eigenvalue.
pub fn left_to_right(t: &Tridiagonal, u: &[QuadExt]) -> Result<Vec<QuadExt>> {
    if u.len() != t.size() {
        return Err(Error::DimensionMismatch {
            expected: t.size(),
            found: u.len(),
        });
    }
    let d = symmetrizer(t)?;
    Ok(u.iter()
        .zip(&d)
        .map(|(x, w)| x.scale(&(Rational::one() / w)))
        .collect())
}

/// Exact residual check of `T v = lambda v` (right) or `u T = lambda u` (left).
/// The zero vector is never an eigenvector.
pub fn verify_eigenpair(t: &Tridiagonal, lambda: &QuadExt, v: &[QuadExt], side: Side) -> bool {
    if v.len() != t.size() || v.iter().all(QuadExt::is_zero) {
        return false;
    }
    let product = match side {
        Side::Right => t.matvec(v),
        Side::Left => t.vecmat(v),
    };
    let Ok(product) = product else {
        return false;
    };
    product
        .iter()
        .zip(v)
        .all(|(p, x)| x.try_mul(lambda).is_ok_and(|lx| &lx == p))
}

/// Right eigenvector of an eigenvalue of `t` from the three-term recurrence
/// (`v_0 = 1`); needs a nonzero superdiagonal.
pub fn eigenvector_by_recurrence(t: &Tridiagonal, lambda: &QuadExt) -> Result<Vec<QuadExt>> {
    let n = t.size();
    let mut v = vec![QuadExt::one()];
    for k in 0..n - 1 {
        if t.sup()[k].is_zero() {
            return Err(Error::ZeroOffDiagonal { index: k });
        }
        let mut r = v[k].try_mul(&lambda.try_sub(&QuadExt::from(&t.main()[k]))?)?;
        if k > 0 {
            r = r.try_sub(&v[k - 1].scale(&t.sub()[k - 1]))?;
        }
        v.push(r.scale(&(Rational::one() / &t.sup()[k])));
    }
    if !verify_eigenpair(t, lambda, &v, Side::Right) {
        return Err(Error::Domain(format!("{lambda} is not an eigenvalue")));
    }
    Ok(v)
}

/// `u` and `v` are nonzero and `u = s v` for some scalar `s`.
pub fn proportional(u: &[QuadExt], v: &[QuadExt]) -> bool {
    if u.len() != v.len() || u.iter().all(QuadExt::is_zero) || v.iter().all(QuadExt::is_zero) {
        return false;
    }
    // cross-multiplication: u_i v_k == u_k v_i for all pairs against a pivot
    let p = v.iter().position(|x| !x.is_zero()).unwrap();
    u.iter()
        .zip(v)
        .all(|(ui, vi)| match (ui.try_mul(&v[p]), u[p].try_mul(vi)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;
    use crate::matrices::{build_abc, build_appendix_matrix, build_sylvester_kac, AppendixKind};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn qv(v: &[i64]) -> Vec<QuadExt> {
        v.iter().map(|&x| QuadExt::from_int(x)).collect()
    }

    fn kac_params() -> [Rational; 4] {
        [int(1), int(1), int(1), int(-1)]
    }

    #[test]
    fn general_eigenvalue_examples() {
        let [a, b, g, d] = kac_params();
        assert_eq!(
            eigenvalues_general(&a, &b, &g, &d, 2).unwrap(),
            ints(&[-2, 0, 2])
        );
        assert_eq!(
            eigenvalues_general(&a, &b, &g, &d, 1).unwrap(),
            ints(&[-1, 1])
        );
        let v = eigenvalues_general(&int(2), &int(1), &int(1), &int(1), 3).unwrap();
        assert_eq!(v, ints(&[6, 5, 4, 3]));
        assert!(matches!(
            eigenvalues_general(&int(1), &int(1), &int(2), &int(2), 2),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn general_eigenvector_examples() {
        let [a, b, g, d] = kac_params();
        assert_eq!(
            eigenvector_general(&a, &b, &g, &d, 2, 0).unwrap(),
            ints(&[1, -2, 1])
        );
        assert_eq!(
            eigenvector_general(&a, &b, &g, &d, 2, 2).unwrap(),
            ints(&[1, 2, 1])
        );
        // j = 0 collapses to C(N,k) (delta/gamma)^k
        let v = eigenvector_general(&int(2), &int(3), &int(5), &int(7), 4, 0).unwrap();
        let expect: Vec<Rational> = (0..=4)
            .map(|k| Rational::from_integer(binomial(4, k).unwrap()) * pow_rat(&ratio(7, 5), k))
            .collect();
        assert_eq!(v, expect);
        assert!(matches!(
            eigenvector_general(&int(0), &b, &g, &d, 2, 0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            eigenvector_general(&a, &b, &int(0), &d, 2, 0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            eigenvector_general(&a, &b, &g, &d, 2, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn triangular_case_still_verifies() {
        // beta = 0 keeps alpha, gamma nonzero so the formula applies
        let (a, b, g, d) = (int(2), int(0), int(3), int(5));
        let t = build_general(&a, &b, &g, &d, 3).unwrap();
        let mu = eigenvalues_general(&a, &b, &g, &d, 3).unwrap();
        for (j, m) in mu.iter().enumerate() {
            let v: Vec<QuadExt> = eigenvector_general(&a, &b, &g, &d, 3, j)
                .unwrap()
                .into_iter()
                .map(QuadExt::from)
                .collect();
            assert!(verify_eigenpair(&t, &QuadExt::from(m), &v, Side::Right));
        }
    }

    #[test]
    fn abc_eigenvalue_examples() {
        let v = eigenvalues_abc(&int(1), &int(0), &int(-1), 2).unwrap();
        assert_eq!(v, qv(&[-2, 0, 2]));
        let v = eigenvalues_abc(&int(1), &int(1), &int(1), 1).unwrap();
        let half = ratio(1, 2);
        assert_eq!(v[0], QuadExt::new(half.clone(), -half.clone(), int(-3)));
        assert_eq!(v[1], QuadExt::new(half.clone(), half.clone(), int(-3)));
        assert_eq!(&v[0] + &v[1], QuadExt::one());
        let b1 = build_abc(&int(1), &int(1), &int(1), 1).unwrap();
        for lam in &v {
            assert!(b1.char_poly().eval(lam).unwrap().is_zero());
        }
        assert!(matches!(
            eigenvalues_abc(&int(1), &int(2), &int(1), 2),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(
            eigenvalues_abc(&int(0), &int(2), &int(1), 2),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            eigenvalues_abc(&int(1), &int(2), &int(0), 2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn abc_eigenvector_examples() {
        let (a, b, c) = (int(1), int(0), int(-1));
        assert_eq!(eigenvector_abc(&a, &b, &c, 1, 1).unwrap(), qv(&[1, 1]));
        assert_eq!(eigenvector_abc(&a, &b, &c, 1, 0).unwrap(), qv(&[1, -1]));
        assert_eq!(eigenvector_abc(&a, &b, &c, 2, 1).unwrap(), qv(&[1, 0, -1]));
        let k2 = build_sylvester_kac(2).unwrap();
        assert!(verify_eigenpair(
            &k2,
            &QuadExt::zero(),
            &qv(&[1, 0, -1]),
            Side::Right
        ));
    }

    #[test]
    fn abc_eigenpairs_irrational() {
        let (a, b, c) = (int(1), int(1), int(1));
        let t = build_abc(&a, &b, &c, 4).unwrap();
        let vals = eigenvalues_abc(&a, &b, &c, 4).unwrap();
        for (j, lam) in vals.iter().enumerate() {
            let v = eigenvector_abc(&a, &b, &c, 4, j).unwrap();
            assert!(verify_eigenpair(&t, lam, &v, Side::Right), "j = {j}");
        }
    }

    #[test]
    fn degenerate_examples() {
        let r = degenerate_analysis(&int(1), &int(0), &int(5), &int(0), 3).unwrap();
        assert_eq!(r.eigenvalue, QuadExt::zero());
        assert_eq!((r.algebraic_multiplicity, r.geometric_multiplicity), (4, 1));
        assert_eq!(r.eigenvector, qv(&[1, 0, 0, 0]));
        assert_eq!(r.case_tag, DegenerateCase::BetaDeltaZero);

        let r = degenerate_analysis(&int(1), &int(1), &int(2), &int(2), 2).unwrap();
        assert_eq!(r.eigenvalue, QuadExt::from_int(4));
        assert_eq!(r.eigenvector, qv(&[1, 2, 1]));
        assert_eq!(r.case_tag, DegenerateCase::BetaDeltaNonzero);

        let one = int(1);
        let r = degenerate_analysis(&one, &one, &one, &one, 1).unwrap();
        assert_eq!(r.eigenvalue, QuadExt::one());
        let j1 = build_general(&one, &one, &one, &one, 1).unwrap();
        assert_eq!(j1.char_poly(), Polynomial::from_ints(&[1, -2, 1]));
    }

    #[test]
    fn degenerate_errors() {
        assert!(matches!(
            degenerate_analysis(&int(1), &int(1), &int(1), &int(-1), 2),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            degenerate_analysis(&int(0), &int(0), &int(3), &int(2), 2),
            Err(Error::TrivialOperator(_))
        ));
        assert!(matches!(
            degenerate_analysis(&int(0), &int(0), &int(3), &int(0), 2),
            Err(Error::TrivialOperator(_))
        ));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[ints(&[1, 2]), ints(&[2, 4])]), 1);
        assert_eq!(rank(&[ints(&[0, 0]), ints(&[0, 0])]), 0);
        assert_eq!(
            rank(&[ints(&[0, 1, 0]), ints(&[0, 0, 1]), ints(&[0, 0, 0])]),
            2
        );
        let m = vec![
            vec![ratio(1, 2), ratio(1, 3), int(1)],
            vec![int(1), ratio(2, 3), int(2)],
            vec![int(0), int(1), ratio(-7, 5)],
        ];
        assert_eq!(rank(&m), 2);
        let k4 = build_sylvester_kac(4).unwrap();
        assert_eq!(rank(&k4.to_dense()), 4);
    }

    #[test]
    fn left_to_right_examples() {
        let h1 = build_appendix_matrix(AppendixKind::H, 1).unwrap();
        assert_eq!(left_to_right(&h1, &qv(&[1, -1])).unwrap(), qv(&[1, -1]));
        let g1 = build_appendix_matrix(AppendixKind::G, 1).unwrap();
        assert_eq!(symmetrizer(&g1).unwrap(), vec![int(1), ratio(1, 4)]);
        let v = left_to_right(&g1, &qv(&[2, -1])).unwrap();
        assert_eq!(v, qv(&[2, -4]));
        assert!(verify_eigenpair(
            &g1,
            &QuadExt::from_int(-2),
            &v,
            Side::Right
        ));
        let v3 = left_to_right(&g1, &qv(&[6, -3])).unwrap();
        assert_eq!(v3, qv(&[6, -12]));
        let upper = build_general(&int(1), &int(0), &int(1), &int(1), 2).unwrap();
        assert!(matches!(
            left_to_right(&upper, &qv(&[1, 0, 0])),
            Err(Error::ZeroOffDiagonal { index: 0 })
        ));
    }

    #[test]
    fn verify_examples() {
        let k2 = build_sylvester_kac(2).unwrap();
        let m2 = QuadExt::from_int(-2);
        assert!(verify_eigenpair(&k2, &m2, &qv(&[1, -2, 1]), Side::Right));
        assert!(!verify_eigenpair(&k2, &m2, &qv(&[1, 1, 1]), Side::Right));
        assert!(!verify_eigenpair(&k2, &m2, &qv(&[0, 0, 0]), Side::Right));
        assert!(!verify_eigenpair(&k2, &m2, &qv(&[1, -2]), Side::Right));
        // left eigenvector of K_2 for -2 is the symmetrized right one
        assert!(verify_eigenpair(&k2, &m2, &qv(&[1, -1, 1]), Side::Left));
    }

    #[test]
    fn eigenpair_flag_tracks_residual() {
        let k2 = build_sylvester_kac(2).unwrap();
        let mut p = EigenPair::new(0, QuadExt::from_int(-2), qv(&[1, -2, 1]), Side::Right);
        assert!(!p.verified());
        assert!(p.verify(&k2));
        assert!(p.verified());
        let mut q = EigenPair::new(0, QuadExt::from_int(2), qv(&[1, -2, 1]), Side::Right);
        assert!(!q.verify(&k2));
    }

    #[test]
    fn recurrence_eigenvectors() {
        let s3 = build_appendix_matrix(AppendixKind::S, 3).unwrap();
        for lam in [-6, -2, 2, 6] {
            let v = eigenvector_by_recurrence(&s3, &QuadExt::from_int(lam)).unwrap();
            assert!(verify_eigenpair(
                &s3,
                &QuadExt::from_int(lam),
                &v,
                Side::Right
            ));
        }
        assert!(eigenvector_by_recurrence(&s3, &QuadExt::from_int(1)).is_err());
    }

    #[test]
    fn proportionality() {
        assert!(proportional(&qv(&[2, -4, 0]), &qv(&[-1, 2, 0])));
        assert!(!proportional(&qv(&[2, -4, 1]), &qv(&[-1, 2, 0])));
        assert!(!proportional(&qv(&[0, 0]), &qv(&[0, 0])));
    }
}
