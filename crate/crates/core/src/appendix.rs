//! The matrices `G_N`, `S_N`, `H_N` and their relation to the Sylvester-Kac
//! matrix and to the Hahn recurrence matrix `C_N(alpha)`.
//!
//! Two routes to the integer spectra are implemented: the characteristic
//! polynomial split `det(xI - K_{2N+2}) = Omega_0 Omega_1` with the identities
//! for `S_{N+1}` and the leading block `M_{N+1}`, and the similarity of
//! `H_N^T`, `G_N^T` to shifted multiples of `C_N(-1/2)`, `C_N(1/2)`. The
//! closed-form left eigenvectors are verified directly; the closed-form right
//! eigenvector formulas are audited against every eigenvalue instead of being
//! trusted with a fixed index pairing.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{binomial, int, pochhammer, ratio, Polynomial, QuadExt, Rational};
use crate::matrices::{
    build_appendix_matrix, build_hahn, build_sylvester_kac, factorial_weights, AppendixKind,
    Tridiagonal,
};
use crate::spectral::{left_to_right, proportional, verify_eigenpair, Side};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaPair {
    pub omega0: Polynomial,
    pub omega1: Polynomial,
    pub n: usize,
}

/// `Omega_1 = det(xI - G_N)` and `Omega_0 = det(xI - K_{2N+2}) / Omega_1`.
pub fn omega_pair(n: usize) -> Result<OmegaPair> {
    let omega1 = build_appendix_matrix(AppendixKind::G, n)?.char_poly();
    let full = build_sylvester_kac(2 * n + 2)?.char_poly();
    let (omega0, rem) = full.divide(&omega1)?;
    if !rem.is_zero() {
        return Err(Error::Consistency(format!(
            "det(xI - G_{n}) does not divide det(xI - K_{})",
            2 * n + 2
        )));
    }
    Ok(OmegaPair { omega0, omega1, n })
}

/// `det(xI - S_{N+1}) == Omega_0`.
pub fn s_identity_check(n: usize) -> Result<bool> {
    let pair = omega_pair(n)?;
    let s = build_appendix_matrix(AppendixKind::S, n + 1)?;
    Ok(s.char_poly() == pair.omega0)
}

/// `det(xI - M_{N+1}) == (Omega_0 + x Omega_1) / 2`, where `M_{N+1}` is the
/// leading `(N+2) x (N+2)` block of `K_{2N+2}`.
pub fn m_identity_check(n: usize) -> Result<bool> {
    let pair = omega_pair(n)?;
    let m = build_sylvester_kac(2 * n + 2)?.leading_principal(n + 2)?;
    let rhs = pair
        .omega0
        .try_add(&pair.omega1.shift(1))?
        .scale_rational(&ratio(1, 2));
    Ok(m.char_poly() == rhs)
}

/// Eigenvalue `lambda_j` of `G_N`, `S_N` (`2(2j - N)`) or `H_N` (`2j - N`).
pub fn appendix_eigenvalue(kind: AppendixKind, n: usize, j: usize) -> Rational {
    let base = int(2 * j as i64 - n as i64);
    match kind {
        AppendixKind::G | AppendixKind::S => base * int(2),
        AppendixKind::H => base,
    }
}

/// The integer spectrum, checked against the characteristic polynomial.
pub fn appendix_spectra(kind: AppendixKind, n: usize) -> Result<Vec<Rational>> {
    if n < 1 {
        return Err(Error::SizeTooSmall { min: 1, got: n });
    }
    let values: Vec<Rational> = (0..=n).map(|j| appendix_eigenvalue(kind, n, j)).collect();
    let roots: Vec<QuadExt> = values.iter().map(QuadExt::from).collect();
    let product = Polynomial::from_roots(&roots)?;
    if product != build_appendix_matrix(kind, n)?.char_poly() {
        return Err(Error::Consistency(format!(
            "spectrum of {kind}_{n} is not the integer set"
        )));
    }
    Ok(values)
}

/// `det(xI - C_N(alpha)) == prod_{j=0}^{N} (x - j)`.
pub fn hahn_spectrum_check(alpha: &Rational, n: usize) -> Result<bool> {
    let c = build_hahn(alpha, n)?;
    let roots: Vec<QuadExt> = (0..=n as i64).map(QuadExt::from_int).collect();
    Ok(c.char_poly() == Polynomial::from_roots(&roots)?)
}

/// The right-hand side of the Hahn relation before conjugation:
/// `2 C_N(-1/2) - N I` for `H`, `4 C_N(1/2) - 2N I` for `G`.
pub fn hahn_image(kind: AppendixKind, n: usize) -> Result<Tridiagonal> {
    let nn = int(n as i64);
    match kind {
        AppendixKind::H => Ok(build_hahn(&ratio(-1, 2), n)?.scaled(&int(2)).shifted(&-nn)),
        AppendixKind::G => Ok(build_hahn(&ratio(1, 2), n)?
            .scaled(&int(4))
            .shifted(&-(nn * int(2)))),
        AppendixKind::S => Err(Error::Domain("no Hahn relation is defined for S_N".into())),
    }
}

/// Anti-diagonal weights of the conjugating matrices: `E_N` has unit
/// weights, `R_N = ||(i+1) delta_{i,N-j}||` has weight `i+1` in row `i`.
pub fn relation_weights(kind: AppendixKind, n: usize) -> Result<Vec<Rational>> {
    match kind {
        AppendixKind::H => Ok(vec![int(1); n + 1]),
        AppendixKind::G => Ok((0..=n).map(|i| int(i as i64 + 1)).collect()),
        AppendixKind::S => Err(Error::Domain("no Hahn relation is defined for S_N".into())),
    }
}

/// `X^T == P [hahn_image] P^{-1}` with `P` the anti-diagonal matrix carrying
/// `weights[i]` in row `i`.
pub fn relation_check_with_weights(
    kind: AppendixKind,
    n: usize,
    weights: &[Rational],
) -> Result<bool> {
    let lhs = build_appendix_matrix(kind, n)?.transpose();
    let rhs = hahn_image(kind, n)?.reversal_similarity(weights)?;
    Ok(lhs == rhs)
}

/// The relations `H_N^T = E_N [2C_N(-1/2) - N I] E_N^{-1}` and
/// `G_N^T = R_N [4C_N(1/2) - 2N I] R_N^{-1}`, with `E_N`, `R_N` as defined by [`relation_weights`].
pub fn relation_check(kind: AppendixKind, n: usize) -> Result<bool> {
    if n < 1 {
        return Err(Error::SizeTooSmall { min: 1, got: n });
    }
    relation_check_with_weights(kind, n, &relation_weights(kind, n)?)
}

fn check_index(n: usize, j: usize) -> Result<()> {
    if j > n {
        return Err(Error::IndexOutOfRange {
            index: j as i64,
            max: n,
        });
    }
    Ok(())
}

fn binom(n: i64, k: i64) -> Rational {
    Rational::from_integer(binomial(n, k).expect("nonnegative top index"))
}

fn sign(e: i64) -> Rational {
    if e % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// Shared sum `sum_i (-1)^(k+i) C(N-k, i) C(N-i, j-i) * weight(k, i)`.
fn left_sum(n: usize, j: usize, weight: impl Fn(i64, i64) -> Rational) -> Vec<Rational> {
    let (n, j) = (n as i64, j as i64);
    (0..=n)
        .map(|k| {
            (0..=(n - k).min(j)).fold(Rational::zero(), |acc, i| {
                acc + sign(k + i) * binom(n - k, i) * binom(n - i, j - i) * weight(k, i)
            })
        })
        .collect()
}

/// Left eigenvector of `H_N` for `lambda_j = 2j - N`:
/// weight `(N-k)_i / (1/2)_i`.
pub fn h_left_eigenvector(n: usize, j: usize) -> Result<Vec<Rational>> {
    check_index(n, j)?;
    let nn = n as i64;
    Ok(left_sum(n, j, |k, i| {
        pochhammer(&int(nn - k), i as usize) / pochhammer(&ratio(1, 2), i as usize)
    }))
}

/// Left eigenvector of `G_N` for `lambda_j = 2(2j - N)`:
/// weight `(N+1-k)_{i+1} / (3/2)_i`.
pub fn g_left_eigenvector(n: usize, j: usize) -> Result<Vec<Rational>> {
    check_index(n, j)?;
    let nn = n as i64;
    Ok(left_sum(n, j, |k, i| {
        pochhammer(&int(nn + 1 - k), i as usize + 1) / pochhammer(&ratio(3, 2), i as usize)
    }))
}

/// The closed-form right vector for `H_N`: `C(2N, k) u_kj` for `k < N`
/// and `v_Nj = C(2N, N) C(N, j) / 2`.
pub fn h_right_eigenvector(n: usize, j: usize) -> Result<Vec<Rational>> {
    let u = h_left_eigenvector(n, j)?;
    let nn = n as i64;
    let mut v: Vec<Rational> = u
        .iter()
        .take(n)
        .enumerate()
        .map(|(k, x)| binom(2 * nn, k as i64) * x)
        .collect();
    v.push(binom(2 * nn, nn) * binom(nn, j as i64) * ratio(1, 2));
    Ok(v)
}

/// The closed-form right vector for `G_N`: `C(2N+2, k) u_kj` for all `k`.
pub fn g_right_eigenvector(n: usize, j: usize) -> Result<Vec<Rational>> {
    let u = g_left_eigenvector(n, j)?;
    let nn = n as i64;
    Ok(u.iter()
        .enumerate()
        .map(|(k, x)| binom(2 * nn + 2, k as i64) * x)
        .collect())
}

pub fn left_eigenvector(kind: AppendixKind, n: usize, j: usize) -> Result<Vec<Rational>> {
    match kind {
        AppendixKind::H => h_left_eigenvector(n, j),
        AppendixKind::G => g_left_eigenvector(n, j),
        AppendixKind::S => Err(Error::Domain(
            "no eigenvector formula is defined for S_N".into(),
        )),
    }
}

pub fn right_eigenvector(kind: AppendixKind, n: usize, j: usize) -> Result<Vec<Rational>> {
    match kind {
        AppendixKind::H => h_right_eigenvector(n, j),
        AppendixKind::G => g_right_eigenvector(n, j),
        AppendixKind::S => Err(Error::Domain(
            "no eigenvector formula is defined for S_N".into(),
        )),
    }
}

fn to_quad(v: &[Rational]) -> Vec<QuadExt> {
    v.iter().map(QuadExt::from).collect()
}

/// Does the left formula verify against `lambda_j` with direct pairing?
pub fn left_formula_verifies(kind: AppendixKind, n: usize, j: usize) -> Result<bool> {
    let t = build_appendix_matrix(kind, n)?;
    let u = to_quad(&left_eigenvector(kind, n, j)?);
    let lam = QuadExt::from(appendix_eigenvalue(kind, n, j));
    Ok(verify_eigenpair(&t, &lam, &u, Side::Left))
}

/// One closed-form right vector that did not verify against exactly one eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditFailure {
    pub j: usize,
    /// Every eigenvalue index whose residual vanished (empty or more than one).
    pub matches: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingAudit {
    pub family: AppendixKind,
    pub n: usize,
    /// `mapping[j] = Some(j')` when the closed-form `j`-th right vector verifies
    /// against `lambda_{j'}` and no other eigenvalue.
    pub mapping: Vec<Option<usize>>,
    pub failures: Vec<AuditFailure>,
    /// Indices `j` whose closed-form vector is proportional to `left_to_right`
    /// of the verified left vector at the audited eigenvalue.
    pub agrees_with_left: Vec<bool>,
}

impl PairingAudit {
    /// Every closed-form vector verified against exactly one eigenvalue and the
    /// resulting map is a permutation of `0..=N`.
    pub fn is_bijection(&self) -> bool {
        if !self.failures.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.n + 1];
        for m in &self.mapping {
            match m {
                Some(k) if !seen[*k] => seen[*k] = true,
                _ => return false,
            }
        }
        true
    }

    pub fn all_verified(&self) -> bool {
        self.is_bijection() && self.agrees_with_left.iter().all(|&b| b)
    }
}

/// Scans every eigenvalue for each closed-form right eigenvector and
/// records which one it verifies against; cross-checks with `left_to_right`
/// applied to the (directly paired) left vectors.
pub fn pairing_audit(family: AppendixKind, n: usize) -> Result<PairingAudit> {
    if n < 1 {
        return Err(Error::SizeTooSmall { min: 1, got: n });
    }
    let t = build_appendix_matrix(family, n)?;
    let eigenvalues: Vec<QuadExt> = (0..=n)
        .map(|j| QuadExt::from(appendix_eigenvalue(family, n, j)))
        .collect();
    let mut mapping = Vec::with_capacity(n + 1);
    let mut failures = Vec::new();
    let mut agrees = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let v = to_quad(&right_eigenvector(family, n, j)?);
        let matches: Vec<usize> = eigenvalues
            .iter()
            .enumerate()
            .filter(|(_, lam)| verify_eigenpair(&t, lam, &v, Side::Right))
            .map(|(k, _)| k)
            .collect();
        if let [k] = matches[..] {
            mapping.push(Some(k));
            let u = to_quad(&left_eigenvector(family, n, k)?);
            agrees.push(proportional(&left_to_right(&t, &u)?, &v));
        } else {
            mapping.push(None);
            agrees.push(false);
            failures.push(AuditFailure { j, matches });
        }
    }
    Ok(PairingAudit {
        family,
        n,
        mapping,
        failures,
        agrees_with_left: agrees,
    })
}

/// Right eigenvector of `H_N`/`G_N` for `lambda_j`, derived from the verified
/// left vector with [`left_to_right`].
pub fn derived_right_eigenvector(kind: AppendixKind, n: usize, j: usize) -> Result<Vec<QuadExt>> {
    let t = build_appendix_matrix(kind, n)?;
    let u = to_quad(&left_eigenvector(kind, n, j)?);
    left_to_right(&t, &u)
}

/// Parameters of `C_N(alpha)` checked by the battery.
pub const HAHN_SAMPLE_ALPHAS: [(i64, i64); 5] = [(-1, 2), (1, 2), (1, 3), (2, 1), (-2, 5)];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

/// Every identity of this module evaluated at a single `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppendixBattery {
    pub n: usize,
    pub checks: Vec<CheckOutcome>,
    pub omega: Option<OmegaPair>,
    pub audits: Vec<PairingAudit>,
}

impl AppendixBattery {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn outcome(name: impl Into<String>, result: Result<bool>) -> CheckOutcome {
    let (passed, detail) = match result {
        Ok(b) => (b, None),
        Err(e) => (false, Some(e.to_string())),
    };
    CheckOutcome {
        name: name.into(),
        passed,
        detail,
    }
}

/// Runs the full set of checks at `N`. A failing identity is recorded, not
/// raised; only invalid input is an error.
pub fn battery(n: usize) -> Result<AppendixBattery> {
    if n < 1 {
        return Err(Error::SizeTooSmall { min: 1, got: n });
    }
    let mut checks = Vec::new();
    let omega = omega_pair(n);
    checks.push(outcome(
        "omega_division",
        omega.as_ref().map(|_| true).map_err(Clone::clone),
    ));
    checks.push(outcome("s_identity", s_identity_check(n)));
    checks.push(outcome("m_identity", m_identity_check(n)));
    for kind in [AppendixKind::G, AppendixKind::S, AppendixKind::H] {
        checks.push(outcome(
            format!("spectrum_{kind}"),
            appendix_spectra(kind, n).map(|_| true),
        ));
    }
    for (p, q) in HAHN_SAMPLE_ALPHAS {
        let alpha = ratio(p, q);
        checks.push(outcome(
            format!("hahn_spectrum_alpha={alpha}"),
            hahn_spectrum_check(&alpha, n),
        ));
    }
    checks.push(outcome(
        "factorial_conjugation_persymmetric",
        factorial_conjugation_check(n),
    ));
    for kind in [AppendixKind::H, AppendixKind::G] {
        checks.push(outcome(format!("relation_{kind}"), relation_check(kind, n)));
    }
    for kind in [AppendixKind::H, AppendixKind::G] {
        let all = (0..=n).try_fold(true, |acc, j| {
            Ok::<_, Error>(acc && left_formula_verifies(kind, n, j)?)
        });
        checks.push(outcome(format!("left_vectors_{kind}"), all));
    }
    let mut audits = Vec::new();
    for kind in [AppendixKind::H, AppendixKind::G] {
        let audit = pairing_audit(kind, n)?;
        checks.push(outcome(
            format!("right_vectors_{kind}"),
            Ok(audit.all_verified()),
        ));
        audits.push(audit);
    }
    Ok(AppendixBattery {
        n,
        checks,
        omega: omega.ok(),
        audits,
    })
}

/// `D K_{2N+2} D^{-1}` with `D = diag(0!, ..., (2N+2)!)` is persymmetric with
/// unit superdiagonal and its leading `(N+1)` block is the same conjugate of `G_N`.
pub fn factorial_conjugation_check(n: usize) -> Result<bool> {
    let k = build_sylvester_kac(2 * n + 2)?;
    let p = k.diag_similarity(&factorial_weights(2 * n + 2))?;
    let g = build_appendix_matrix(AppendixKind::G, n)?.diag_similarity(&factorial_weights(n))?;
    Ok(p.is_persymmetric()
        && p.sup().iter().all(|x| *x == int(1))
        && p.leading_principal(n + 1)? == g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn omega_examples() {
        let p0 = omega_pair(0).unwrap();
        assert_eq!(p0.omega1, Polynomial::from_ints(&[0, 1]));
        assert_eq!(p0.omega0, Polynomial::from_ints(&[-4, 0, 1]));
        let p1 = omega_pair(1).unwrap();
        assert_eq!(p1.omega1, Polynomial::from_ints(&[-4, 0, 1]));
        assert_eq!(
            &p1.omega0 * &p1.omega1,
            build_sylvester_kac(4).unwrap().char_poly()
        );
        assert_eq!(
            omega_pair(2).unwrap().omega1,
            Polynomial::from_ints(&[0, -16, 0, 1])
        );
    }

    #[test]
    fn s_and_m_identities() {
        for n in [0, 1, 4, 5] {
            assert!(s_identity_check(n).unwrap(), "S at N = {n}");
            assert!(m_identity_check(n).unwrap(), "M at N = {n}");
        }
    }

    #[test]
    fn spectra_examples() {
        assert_eq!(
            appendix_spectra(AppendixKind::G, 2).unwrap(),
            ints(&[-4, 0, 4])
        );
        assert_eq!(
            appendix_spectra(AppendixKind::S, 2).unwrap(),
            ints(&[-4, 0, 4])
        );
        assert_eq!(
            appendix_spectra(AppendixKind::H, 1).unwrap(),
            ints(&[-1, 1])
        );
    }

    #[test]
    fn hahn_examples() {
        assert!(hahn_spectrum_check(&ratio(-1, 2), 1).unwrap());
        assert!(hahn_spectrum_check(&ratio(1, 2), 3).unwrap());
        assert!(hahn_spectrum_check(&ratio(1, 3), 5).unwrap());
        assert!(hahn_spectrum_check(&ratio(-5, 2), 3).is_err());
    }

    #[test]
    fn h_relation_holds() {
        for n in [1, 2, 6] {
            assert!(relation_check(AppendixKind::H, n).unwrap());
        }
    }

    #[test]
    fn g_relation_with_row_weights_fails_and_transposed_weights_hold() {
        for n in 1..=6 {
            assert!(!relation_check(AppendixKind::G, n).unwrap(), "N = {n}");
            let w: Vec<Rational> = (0..=n).map(|i| int((n + 1 - i) as i64)).collect();
            assert!(
                relation_check_with_weights(AppendixKind::G, n, &w).unwrap(),
                "N = {n}"
            );
        }
    }

    #[test]
    fn left_vector_examples() {
        assert_eq!(h_left_eigenvector(1, 0).unwrap(), ints(&[1, -1]));
        assert_eq!(h_left_eigenvector(1, 1).unwrap(), ints(&[-1, -1]));
        assert_eq!(g_left_eigenvector(1, 0).unwrap(), ints(&[2, -1]));
        for kind in [AppendixKind::H, AppendixKind::G] {
            for j in 0..=1 {
                assert!(left_formula_verifies(kind, 1, j).unwrap());
            }
        }
        assert!(h_left_eigenvector(2, 3).is_err());
    }

    #[test]
    fn right_vector_examples() {
        assert_eq!(g_right_eigenvector(1, 0).unwrap(), ints(&[2, -4]));
        assert_eq!(h_right_eigenvector(1, 0).unwrap(), ints(&[1, 1]));
        assert_eq!(h_right_eigenvector(1, 1).unwrap(), ints(&[-1, 1]));
    }

    #[test]
    fn audit_examples() {
        let g1 = pairing_audit(AppendixKind::G, 1).unwrap();
        assert_eq!(g1.mapping, vec![Some(0), Some(1)]);
        assert!(g1.all_verified());
        let h1 = pairing_audit(AppendixKind::H, 1).unwrap();
        assert_eq!(h1.mapping, vec![Some(1), Some(0)]);
        assert!(h1.is_bijection());
        let g4 = pairing_audit(AppendixKind::G, 4).unwrap();
        assert!(g4.is_bijection());
    }

    #[test]
    fn h_right_last_entry_sign() {
        // at odd N the closed-form last entry has the wrong sign: no eigenvalue verifies
        let h3 = pairing_audit(AppendixKind::H, 3).unwrap();
        assert!(!h3.is_bijection());
        assert_eq!(h3.failures.len(), 4);
        assert!(h3.failures.iter().all(|f| f.matches.is_empty()));
        for j in 0..=3 {
            let derived = derived_right_eigenvector(AppendixKind::H, 3, j).unwrap();
            let closed = h_right_eigenvector(3, j).unwrap();
            assert_eq!(derived[..3], to_quad(&closed[..3])[..]);
            assert_eq!(derived[3], -QuadExt::from(&closed[3]));
        }
        assert!(pairing_audit(AppendixKind::H, 4).unwrap().all_verified());
    }

    #[test]
    fn factorial_conjugate_of_kac_is_persymmetric() {
        for n in 0..=4 {
            assert!(factorial_conjugation_check(n).unwrap());
        }
    }

    #[test]
    fn battery_records_known_failures() {
        let b = battery(2).unwrap();
        let failed: Vec<&str> = b.failed().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, vec!["relation_G"]);
        let b = battery(3).unwrap();
        let failed: Vec<&str> = b.failed().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, vec!["relation_G", "right_vectors_H"]);
        assert_eq!(b.audits.len(), 2);
        assert!(b.omega.is_some());
    }
}
