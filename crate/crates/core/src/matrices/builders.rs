use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::Tridiagonal;
use crate::error::{Error, Result};
use crate::exactnum::{factorial, int, ratio, Rational};

fn require_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::SizeTooSmall { min, got: n });
    }
    Ok(())
}

/// The `(N+1) x (N+1)` matrix of the operator
/// `(alpha + beta z)(gamma + delta z) d/dz - beta delta N z` on polynomials
/// of degree at most `N`, in the monomial basis.
pub fn build_general(
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
    delta: &Rational,
    n: usize,
) -> Result<Tridiagonal> {
    require_n(n, 1)?;
    let ag = alpha * gamma;
    let diag = alpha * delta + beta * gamma;
    let bd = beta * delta;
    Tridiagonal::new(
        (0..n).map(|k| -(int((n - k) as i64) * &bd)).collect(),
        (0..=n).map(|k| int(k as i64) * &diag).collect(),
        (0..n).map(|k| int(k as i64 + 1) * &ag).collect(),
    )
}

pub fn build_sylvester_kac(n: usize) -> Result<Tridiagonal> {
    require_n(n, 1)?;
    Tridiagonal::new(
        (0..n).map(|k| int((n - k) as i64)).collect(),
        vec![Rational::zero(); n + 1],
        (0..n).map(|k| int(k as i64 + 1)).collect(),
    )
}

/// `B_N(a, b, c)`: the matrix of `(a + b z + c z^2) d/dz - N c z`.
pub fn build_abc(a: &Rational, b: &Rational, c: &Rational, n: usize) -> Result<Tridiagonal> {
    require_n(n, 1)?;
    Tridiagonal::new(
        (0..n).map(|k| -(int((n - k) as i64) * c)).collect(),
        (0..=n).map(|k| int(k as i64) * b).collect(),
        (0..n).map(|k| int(k as i64 + 1) * a).collect(),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AppendixKind {
    G,
    S,
    H,
}

impl FromStr for AppendixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "G" | "g" => Ok(AppendixKind::G),
            "S" | "s" => Ok(AppendixKind::S),
            "H" | "h" => Ok(AppendixKind::H),
            other => Err(Error::Domain(format!(
                "unknown appendix matrix kind {other:?}"
            ))),
        }
    }
}

impl fmt::Display for AppendixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AppendixKind::G => "G",
            AppendixKind::S => "S",
            AppendixKind::H => "H",
        };
        f.write_str(s)
    }
}

/// `G_N`, `S_N` and `H_N = S_N / 2`.
///
/// `G_N` is the leading `(N+1) x (N+1)` block of `K_{2N+2}`; `S_N` is the
/// leading block of `K_{2N}` with its last superdiagonal entry doubled.
/// `G_0` (the `1 x 1` zero matrix) is allowed; `S` and `H` need `N >= 1`.
pub fn build_appendix_matrix(kind: AppendixKind, n: usize) -> Result<Tridiagonal> {
    let main = vec![Rational::zero(); n + 1];
    match kind {
        AppendixKind::G => Tridiagonal::new(
            (0..n).map(|k| int((2 * n + 2 - k) as i64)).collect(),
            main,
            (0..n).map(|k| int(k as i64 + 1)).collect(),
        ),
        AppendixKind::S => {
            require_n(n, 1)?;
            let mut sup: Vec<Rational> = (0..n).map(|k| int(k as i64 + 1)).collect();
            sup[n - 1] = int(2 * n as i64);
            Tridiagonal::new((0..n).map(|k| int((2 * n - k) as i64)).collect(), main, sup)
        }
        AppendixKind::H => Ok(build_appendix_matrix(AppendixKind::S, n)?.scaled(&ratio(1, 2))),
    }
}

/// Recurrence matrix `C_N(alpha)` of the Hahn polynomials with equal parameters.
pub fn build_hahn(alpha: &Rational, n: usize) -> Result<Tridiagonal> {
    require_n(n, 1)?;
    let nn = int(n as i64);
    let two_alpha = alpha * int(2);
    let denom = |i: usize| int(2 * i as i64 + 1) + &two_alpha;
    for i in 1..=n {
        if denom(i).is_zero() {
            return Err(Error::VanishingDenominator { index: i });
        }
    }
    let half_n = &nn / int(2);
    let sup = (0..n)
        .map(|i| {
            if i == 0 {
                half_n.clone()
            } else {
                let i_r = int(i as i64);
                (&i_r + &two_alpha + int(1)) * (&nn - &i_r) / (int(2) * denom(i))
            }
        })
        .collect();
    let sub = (1..=n)
        .map(|i| {
            let i_r = int(i as i64);
            &i_r * (&i_r + &two_alpha + &nn + int(1)) / (int(2) * denom(i))
        })
        .collect();
    Tridiagonal::new(sub, vec![half_n; n + 1], sup)
}

/// `(0!, 1!, ..., n!)`.
pub fn factorial_weights(n: usize) -> Vec<Rational> {
    (0..=n as u64)
        .map(|k| Rational::from_integer(factorial(k)))
        .collect()
}
