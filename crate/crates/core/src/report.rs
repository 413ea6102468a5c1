//! Closed-form spectra of the matrix families, bundled with their exact
//! verification verdicts.

use std::fmt;
use std::str::FromStr;

use crate::appendix::{appendix_eigenvalue, derived_right_eigenvector, g_right_eigenvector};
use crate::error::{Error, Result};
use crate::exactnum::{int, Polynomial, QuadExt, Rational};
use crate::matrices::{
    build_abc, build_appendix_matrix, build_general, build_hahn, build_sylvester_kac, AppendixKind,
    Tridiagonal,
};
use crate::spectral::{
    discriminant_abc, eigenvalues_abc, eigenvalues_general, eigenvector_abc,
    eigenvector_by_recurrence, eigenvector_general, EigenPair, Side,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Kac,
    General,
    Abc,
    G,
    S,
    H,
    Hahn,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 7] = [
        FamilyKind::Kac,
        FamilyKind::General,
        FamilyKind::Abc,
        FamilyKind::G,
        FamilyKind::S,
        FamilyKind::H,
        FamilyKind::Hahn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Kac => "kac",
            FamilyKind::General => "general",
            FamilyKind::Abc => "abc",
            FamilyKind::G => "g",
            FamilyKind::S => "s",
            FamilyKind::H => "h",
            FamilyKind::Hahn => "hahn",
        }
    }

    /// Parameter names, in output order.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FamilyKind::General => &["alpha", "beta", "gamma", "delta"],
            FamilyKind::Abc => &["a", "b", "c"],
            FamilyKind::Hahn => &["alpha"],
            _ => &[],
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// A matrix family together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Kac,
    General {
        alpha: Rational,
        beta: Rational,
        gamma: Rational,
        delta: Rational,
    },
    Abc {
        a: Rational,
        b: Rational,
        c: Rational,
    },
    Appendix(AppendixKind),
    Hahn {
        alpha: Rational,
    },
}

impl Family {
    /// Builds a family from named parameters; every name listed by
    /// [`FamilyKind::param_names`] must be present and no other may be.
    pub fn from_params(kind: FamilyKind, params: &[(String, Rational)]) -> Result<Self> {
        let names = kind.param_names();
        if let Some((extra, _)) = params.iter().find(|(k, _)| !names.contains(&k.as_str())) {
            return Err(Error::Domain(format!(
                "family {kind} takes no parameter {extra:?}"
            )));
        }
        let get = |name: &str| {
            params
                .iter()
                .find(|(k, _)| k == name)
                .map(|(_, v)| v.clone())
                .ok_or_else(|| Error::Domain(format!("family {kind} needs parameter {name:?}")))
        };
        Ok(match kind {
            FamilyKind::Kac => Family::Kac,
            FamilyKind::General => Family::General {
                alpha: get("alpha")?,
                beta: get("beta")?,
                gamma: get("gamma")?,
                delta: get("delta")?,
            },
            FamilyKind::Abc => Family::Abc {
                a: get("a")?,
                b: get("b")?,
                c: get("c")?,
            },
            FamilyKind::G => Family::Appendix(AppendixKind::G),
            FamilyKind::S => Family::Appendix(AppendixKind::S),
            FamilyKind::H => Family::Appendix(AppendixKind::H),
            FamilyKind::Hahn => Family::Hahn {
                alpha: get("alpha")?,
            },
        })
    }

    /// `B_N(1, 0, -1)`, the Sylvester-Kac matrix.
    pub fn sylvester_kac_preset() -> Self {
        Family::Abc {
            a: int(1),
            b: int(0),
            c: int(-1),
        }
    }

    /// `b = 1`, `c = 1 - a`.
    pub fn painvin_preset(a: Rational) -> Self {
        let c = int(1) - &a;
        Family::Abc { a, b: int(1), c }
    }

    /// `a = 1 - p`, `b = 2p - 1`, `c = -p`.
    pub fn krawtchouk_preset(p: Rational) -> Self {
        Family::Abc {
            a: int(1) - &p,
            b: &p * int(2) - int(1),
            c: -p,
        }
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            Family::Kac => FamilyKind::Kac,
            Family::General { .. } => FamilyKind::General,
            Family::Abc { .. } => FamilyKind::Abc,
            Family::Appendix(AppendixKind::G) => FamilyKind::G,
            Family::Appendix(AppendixKind::S) => FamilyKind::S,
            Family::Appendix(AppendixKind::H) => FamilyKind::H,
            Family::Hahn { .. } => FamilyKind::Hahn,
        }
    }

    pub fn params(&self) -> Vec<(String, Rational)> {
        let values: Vec<&Rational> = match self {
            Family::General {
                alpha,
                beta,
                gamma,
                delta,
            } => vec![alpha, beta, gamma, delta],
            Family::Abc { a, b, c } => vec![a, b, c],
            Family::Hahn { alpha } => vec![alpha],
            Family::Kac | Family::Appendix(_) => vec![],
        };
        self.kind()
            .param_names()
            .iter()
            .zip(values)
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect()
    }

    pub fn matrix(&self, n: usize) -> Result<Tridiagonal> {
        match self {
            Family::Kac => build_sylvester_kac(n),
            Family::General {
                alpha,
                beta,
                gamma,
                delta,
            } => build_general(alpha, beta, gamma, delta, n),
            Family::Abc { a, b, c } => build_abc(a, b, c, n),
            Family::Appendix(kind) => {
                if n < 1 {
                    return Err(Error::SizeTooSmall { min: 1, got: n });
                }
                build_appendix_matrix(*kind, n)
            }
            Family::Hahn { alpha } => build_hahn(alpha, n),
        }
    }

    /// `b^2 - 4ac` for the families parameterized by `(a, b, c)`.
    pub fn radicand(&self) -> Option<Rational> {
        match self {
            Family::Kac => Some(int(4)),
            Family::Abc { a, b, c } => Some(discriminant_abc(a, b, c)),
            _ => None,
        }
    }

    /// Closed-form eigenvalues, indexed by `j = 0..=N`.
    pub fn eigenvalues(&self, n: usize) -> Result<Vec<QuadExt>> {
        let rational = |v: Vec<Rational>| v.into_iter().map(QuadExt::from).collect();
        match self {
            Family::Kac => {
                if n < 1 {
                    return Err(Error::SizeTooSmall { min: 1, got: n });
                }
                Ok((0..=n)
                    .map(|j| QuadExt::from_int(2 * j as i64 - n as i64))
                    .collect())
            }
            Family::General {
                alpha,
                beta,
                gamma,
                delta,
            } => Ok(rational(eigenvalues_general(alpha, beta, gamma, delta, n)?)),
            Family::Abc { a, b, c } => eigenvalues_abc(a, b, c, n),
            Family::Appendix(kind) => {
                if n < 1 {
                    return Err(Error::SizeTooSmall { min: 1, got: n });
                }
                Ok((0..=n)
                    .map(|j| QuadExt::from(appendix_eigenvalue(*kind, n, j)))
                    .collect())
            }
            Family::Hahn { alpha } => {
                build_hahn(alpha, n)?;
                Ok((0..=n as i64).map(QuadExt::from_int).collect())
            }
        }
    }

    /// Closed-form right eigenvector for the `j`-th eigenvalue. Families
    /// without a closed form fall back to the three-term recurrence;
    /// `H_N` uses its left formula converted to a right vector.
    pub fn eigenvector(&self, n: usize, j: usize) -> Result<Vec<QuadExt>> {
        if j > n {
            return Err(Error::IndexOutOfRange {
                index: j as i64,
                max: n,
            });
        }
        match self {
            Family::Kac => eigenvector_abc(&int(1), &int(0), &int(-1), n, j),
            Family::General {
                alpha,
                beta,
                gamma,
                delta,
            } => Ok(eigenvector_general(alpha, beta, gamma, delta, n, j)?
                .into_iter()
                .map(QuadExt::from)
                .collect()),
            Family::Abc { a, b, c } => eigenvector_abc(a, b, c, n, j),
            Family::Appendix(AppendixKind::G) => Ok(g_right_eigenvector(n, j)?
                .into_iter()
                .map(QuadExt::from)
                .collect()),
            Family::Appendix(AppendixKind::H) => derived_right_eigenvector(AppendixKind::H, n, j),
            Family::Appendix(AppendixKind::S) | Family::Hahn { .. } => {
                let lambda = &self.eigenvalues(n)?[j];
                eigenvector_by_recurrence(&self.matrix(n)?, lambda)
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind())?;
        for (k, v) in self.params() {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralReport {
    pub family: FamilyKind,
    pub params: Vec<(String, Rational)>,
    pub n: usize,
    pub pairs: Vec<EigenPair>,
    pub char_poly: Polynomial,
    /// `prod (x - value)` over all `N+1` closed-form eigenvalues equals `char_poly`.
    pub char_poly_match: bool,
    pub radicand: Option<Rational>,
}

impl SpectralReport {
    pub fn values(&self) -> Vec<&QuadExt> {
        self.pairs.iter().map(|p| &p.value).collect()
    }

    pub fn verified_count(&self) -> usize {
        self.pairs.iter().filter(|p| p.verified()).count()
    }

    pub fn all_verified(&self) -> bool {
        self.char_poly_match && self.pairs.iter().all(EigenPair::verified)
    }
}

/// Eigenpairs for every `j` (or only `only`), each verified by exact residual.
pub fn spectral_report(family: &Family, n: usize, only: Option<usize>) -> Result<SpectralReport> {
    let t = family.matrix(n)?;
    let values = family.eigenvalues(n)?;
    let char_poly = t.char_poly();
    let char_poly_match = Polynomial::from_roots(&values)? == char_poly;
    let indices: Vec<usize> = match only {
        Some(j) if j > n => {
            return Err(Error::IndexOutOfRange {
                index: j as i64,
                max: n,
            })
        }
        Some(j) => vec![j],
        None => (0..=n).collect(),
    };
    let pairs = indices
        .into_iter()
        .map(|j| {
            let mut pair = EigenPair::new(
                j as i64,
                values[j].clone(),
                family.eigenvector(n, j)?,
                Side::Right,
            );
            pair.verify(&t);
            Ok(pair)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectralReport {
        family: family.kind(),
        params: family.params(),
        n,
        pairs,
        char_poly,
        char_poly_match,
        radicand: family.radicand(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    #[test]
    fn kac_report() {
        let r = spectral_report(&Family::Kac, 4, None).unwrap();
        let values: Vec<String> = r.values().iter().map(|v| v.to_string()).collect();
        assert_eq!(values, ["-4", "-2", "0", "2", "4"]);
        assert!(r.all_verified());
        assert_eq!(r.radicand, Some(int(4)));
    }

    #[test]
    fn every_family_verifies() {
        let families = [
            Family::Kac,
            Family::General {
                alpha: int(1),
                beta: int(2),
                gamma: int(3),
                delta: ratio(-1, 2),
            },
            Family::Abc {
                a: int(1),
                b: int(1),
                c: int(1),
            },
            Family::Appendix(AppendixKind::G),
            Family::Appendix(AppendixKind::S),
            Family::Appendix(AppendixKind::H),
            Family::Hahn { alpha: ratio(1, 3) },
            Family::sylvester_kac_preset(),
            Family::painvin_preset(ratio(2, 7)),
            Family::krawtchouk_preset(ratio(1, 4)),
        ];
        for f in &families {
            for n in [1, 3, 4] {
                let r = spectral_report(f, n, None).unwrap();
                assert!(r.all_verified(), "{f} at N = {n}");
            }
        }
    }

    #[test]
    fn abc_radicand() {
        let f = Family::Abc {
            a: int(1),
            b: int(1),
            c: int(1),
        };
        let r = spectral_report(&f, 6, None).unwrap();
        assert_eq!(r.radicand, Some(int(-3)));
        assert_eq!(r.verified_count(), 7);
    }

    #[test]
    fn single_index_and_errors() {
        let r = spectral_report(&Family::Kac, 2, Some(1)).unwrap();
        assert_eq!(r.pairs.len(), 1);
        assert!(spectral_report(&Family::Kac, 2, Some(3)).is_err());
        let params = vec![("a".to_string(), int(1))];
        assert!(Family::from_params(FamilyKind::Abc, &params).is_err());
        assert!(Family::from_params(FamilyKind::Kac, &params).is_err());
        assert_eq!("hahn".parse::<FamilyKind>().unwrap(), FamilyKind::Hahn);
    }
}
