use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Polynomial, QuadExt, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tridiagonal {
    sub: Vec<Rational>,
    main: Vec<Rational>,
    sup: Vec<Rational>,
}

impl Tridiagonal {
    pub fn new(sub: Vec<Rational>, main: Vec<Rational>, sup: Vec<Rational>) -> Result<Self> {
        let n = main.len();
        if n == 0 {
            return Err(Error::Domain(
                "tridiagonal matrix must be at least 1x1".into(),
            ));
        }
        for side in [&sub, &sup] {
            if side.len() != n - 1 {
                return Err(Error::DimensionMismatch {
                    expected: n - 1,
                    found: side.len(),
                });
            }
        }
        Ok(Tridiagonal { sub, main, sup })
    }

    pub fn size(&self) -> usize {
        self.main.len()
    }

    pub fn sub(&self) -> &[Rational] {
        &self.sub
    }

    pub fn main(&self) -> &[Rational] {
        &self.main
    }

    pub fn sup(&self) -> &[Rational] {
        &self.sup
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational {
        if i == j {
            self.main[i].clone()
        } else if j == i + 1 {
            self.sup[i].clone()
        } else if i == j + 1 {
            self.sub[j].clone()
        } else {
            Rational::zero()
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Tridiagonal {
            sub: self.sup.clone(),
            main: self.main.clone(),
            sup: self.sub.clone(),
        }
    }

    pub fn scaled(&self, k: &Rational) -> Self {
        let s = |v: &[Rational]| v.iter().map(|x| x * k).collect();
        Tridiagonal {
            sub: s(&self.sub),
            main: s(&self.main),
            sup: s(&self.sup),
        }
    }

    /// `self + s I`.
    pub fn shifted(&self, s: &Rational) -> Self {
        Tridiagonal {
            sub: self.sub.clone(),
            main: self.main.iter().map(|x| x + s).collect(),
            sup: self.sup.clone(),
        }
    }

    /// Leading principal `m x m` block.
    pub fn leading_principal(&self, m: usize) -> Result<Self> {
        if m == 0 || m > self.size() {
            return Err(Error::Domain(format!(
                "leading principal block of size {m} in a {n}x{n} matrix",
                n = self.size()
            )));
        }
        Ok(Tridiagonal {
            sub: self.sub[..m - 1].to_vec(),
            main: self.main[..m].to_vec(),
            sup: self.sup[..m - 1].to_vec(),
        })
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.size() {
            return Err(Error::DimensionMismatch {
                expected: self.size(),
                found: len,
            });
        }
        Ok(())
    }

    /// `T v` for a column vector.
    pub fn matvec(&self, v: &[QuadExt]) -> Result<Vec<QuadExt>> {
        self.check_len(v.len())?;
        let n = self.size();
        (0..n)
            .map(|k| {
                let mut acc = v[k].scale(&self.main[k]);
                if k > 0 {
                    acc = acc.try_add(&v[k - 1].scale(&self.sub[k - 1]))?;
                }
                if k + 1 < n {
                    acc = acc.try_add(&v[k + 1].scale(&self.sup[k]))?;
                }
                Ok(acc)
            })
            .collect()
    }

    /// `u T` for a row vector.
    pub fn vecmat(&self, u: &[QuadExt]) -> Result<Vec<QuadExt>> {
        self.transpose().matvec(u)
    }

    /// Monic `det(xI - T)` by the three-term recurrence.
    pub fn char_poly(&self) -> Polynomial {
        // p_{k+1} = (x - main_k) p_k - sup_{k-1} sub_{k-1} p_{k-1}
        let mut prev: Vec<Rational> = Vec::new();
        let mut cur: Vec<Rational> = vec![Rational::one()];
        for k in 0..self.size() {
            let mut next = vec![Rational::zero(); cur.len() + 1];
            for (i, c) in cur.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * &self.main[k];
            }
            if k > 0 {
                let w = &self.sup[k - 1] * &self.sub[k - 1];
                if !w.is_zero() {
                    for (i, c) in prev.iter().enumerate() {
                        next[i] -= c * &w;
                    }
                }
            }
            prev = std::mem::replace(&mut cur, next);
        }
        Polynomial::from_rationals(&cur)
    }

    /// `D T D^{-1}` with `D = diag(d)`.
    pub fn diag_similarity(&self, d: &[Rational]) -> Result<Self> {
        self.check_len(d.len())?;
        if let Some(index) = d.iter().position(Zero::is_zero) {
            return Err(Error::ZeroWeight { index });
        }
        let n = self.size();
        Ok(Tridiagonal {
            sub: (0..n - 1)
                .map(|k| &self.sub[k] * &d[k + 1] / &d[k])
                .collect(),
            main: self.main.clone(),
            sup: (0..n - 1)
                .map(|k| &self.sup[k] * &d[k] / &d[k + 1])
                .collect(),
        })
    }

    /// `P T P^{-1}` where `P` has `w[i]` at `(i, n-1-i)` and zeros elsewhere.
    pub fn reversal_similarity(&self, w: &[Rational]) -> Result<Self> {
        self.check_len(w.len())?;
        if let Some(index) = w.iter().position(Zero::is_zero) {
            return Err(Error::ZeroWeight { index });
        }
        // (P T P^{-1})_{ij} = w_i T_{n-1-i, n-1-j} / w_j
        let n = self.size();
        let r = |k: usize| n - 1 - k;
        Ok(Tridiagonal {
            sub: (0..n - 1)
                .map(|k| &w[k + 1] * &self.sup[r(k + 1)] / &w[k])
                .collect(),
            main: (0..n).map(|k| self.main[r(k)].clone()).collect(),
            sup: (0..n - 1)
                .map(|k| &w[k] * &self.sub[r(k + 1)] / &w[k + 1])
                .collect(),
        })
    }

    /// Symmetric with respect to the anti-diagonal.
    pub fn is_persymmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|k| self.main[k] == self.main[n - 1 - k])
            && (0..n - 1)
                .all(|k| self.sup[k] == self.sup[n - 2 - k] && self.sub[k] == self.sub[n - 2 - k])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, ratio};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn t(sub: &[i64], main: &[i64], sup: &[i64]) -> Tridiagonal {
        Tridiagonal::new(ints(sub), ints(main), ints(sup)).unwrap()
    }

    fn qv(v: &[i64]) -> Vec<QuadExt> {
        v.iter().map(|&x| QuadExt::from_int(x)).collect()
    }

    fn k2() -> Tridiagonal {
        t(&[2, 1], &[0, 0, 0], &[1, 2])
    }

    #[test]
    fn rejects_bad_lengths() {
        assert!(matches!(
            Tridiagonal::new(ints(&[1]), ints(&[0, 0, 0]), ints(&[1, 2])),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        ));
        assert!(Tridiagonal::new(vec![], vec![], vec![]).is_err());
    }

    #[test]
    fn matvec_examples() {
        assert_eq!(k2().matvec(&qv(&[1, -2, 1])).unwrap(), qv(&[-2, 4, -2]));
        let k1 = t(&[1], &[0, 0], &[1]);
        assert_eq!(k1.matvec(&qv(&[1, 1])).unwrap(), qv(&[1, 1]));
        assert_eq!(k2().matvec(&qv(&[0, 0, 0])).unwrap(), qv(&[0, 0, 0]));
        assert!(matches!(
            k2().matvec(&qv(&[1, 1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn vecmat_is_row_product() {
        // (1, 1, 1) K_2 = (2, 2, 2) column sums
        assert_eq!(k2().vecmat(&qv(&[1, 1, 1])).unwrap(), qv(&[2, 2, 2]));
    }

    #[test]
    fn char_poly_examples() {
        let k1 = t(&[1], &[0, 0], &[1]);
        assert_eq!(k1.char_poly(), Polynomial::from_ints(&[-1, 0, 1]));
        let g2 = t(&[6, 5], &[0, 0, 0], &[1, 2]);
        assert_eq!(g2.char_poly(), Polynomial::from_ints(&[0, -16, 0, 1]));
        let s2 = t(&[4, 3], &[0, 0, 0], &[1, 4]);
        assert_eq!(s2.char_poly(), Polynomial::from_ints(&[0, -16, 0, 1]));
        let one = t(&[], &[5], &[]);
        assert_eq!(one.char_poly(), Polynomial::from_ints(&[-5, 1]));
    }

    #[test]
    fn char_poly_matches_cofactor_expansion() {
        // dense Leibniz expansion over permutations, independent of the recurrence
        fn det(m: &[Vec<Polynomial>]) -> Polynomial {
            let n = m.len();
            if n == 1 {
                return m[0][0].clone();
            }
            let mut acc = Polynomial::zero();
            for j in 0..n {
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &det(&minor);
                acc = if j % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
        let m = Tridiagonal::new(
            vec![ratio(1, 2), int(-3), int(4)],
            vec![int(1), ratio(2, 3), int(0), int(-1)],
            vec![int(2), int(5), ratio(-1, 7)],
        )
        .unwrap();
        let n = m.size();
        let xi: Vec<Vec<Polynomial>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let e = Polynomial::constant(QuadExt::from(-m.entry(i, j)));
                        if i == j {
                            &e + &Polynomial::x()
                        } else {
                            e
                        }
                    })
                    .collect()
            })
            .collect();
        assert_eq!(m.char_poly(), det(&xi));
    }

    #[test]
    fn diag_similarity_examples() {
        let r = k2().diag_similarity(&ints(&[1, 1, 2])).unwrap();
        assert_eq!(r, t(&[2, 2], &[0, 0, 0], &[1, 1]));
        assert_eq!(k2().diag_similarity(&ints(&[1, 1, 1])).unwrap(), k2());
        assert_eq!(
            k2().diag_similarity(&ints(&[1, 0, 1])),
            Err(Error::ZeroWeight { index: 1 })
        );
    }

    #[test]
    fn reversal_similarity_examples() {
        assert_eq!(k2().reversal_similarity(&ints(&[1, 1, 1])).unwrap(), k2());
        let g1 = t(&[4], &[0, 0], &[1]);
        assert_eq!(
            g1.reversal_similarity(&ints(&[1, 2])).unwrap(),
            t(&[2], &[0, 0], &[2])
        );
        let m = t(&[3, 5], &[1, 2, 7], &[4, 6]);
        let once = m.reversal_similarity(&ints(&[1, 1, 1])).unwrap();
        assert_eq!(once, t(&[6, 4], &[7, 2, 1], &[5, 3]));
        assert_eq!(once.reversal_similarity(&ints(&[1, 1, 1])).unwrap(), m);
        assert!(matches!(
            m.reversal_similarity(&ints(&[1, 0, 1])),
            Err(Error::ZeroWeight { index: 1 })
        ));
    }

    #[test]
    fn reversal_similarity_matches_dense_product() {
        let m = Tridiagonal::new(
            vec![int(3), ratio(-1, 2), int(5)],
            vec![int(1), int(2), int(7), ratio(1, 3)],
            vec![int(4), int(6), int(-2)],
        )
        .unwrap();
        let w = vec![int(2), ratio(1, 3), int(-5), int(7)];
        let n = 4;
        let p = |i: usize, j: usize| if j == n - 1 - i { w[i].clone() } else { int(0) };
        let pinv = |i: usize, j: usize| {
            if i == n - 1 - j {
                Rational::one() / &w[j]
            } else {
                int(0)
            }
        };
        let r = m.reversal_similarity(&w).unwrap();
        for i in 0..n {
            for j in 0..n {
                let mut acc = int(0);
                for a in 0..n {
                    for b in 0..n {
                        acc += p(i, a) * m.entry(a, b) * pinv(b, j);
                    }
                }
                assert_eq!(r.entry(i, j), acc, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn persymmetry() {
        assert!(t(&[2, 2], &[0, 0, 0], &[1, 1]).is_persymmetric());
        // (0,1) and (1,0) both lie on their own anti-diagonal mirror
        assert!(t(&[4], &[0, 0], &[1]).is_persymmetric());
        assert!(!t(&[4], &[0, 1], &[1]).is_persymmetric());
        assert!(t(&[], &[3], &[]).is_persymmetric());
        assert!(!t(&[1, 2], &[0, 0, 0], &[1, 1]).is_persymmetric());
        assert!(!t(&[1, 1], &[1, 0, 0], &[1, 1]).is_persymmetric());
    }

    #[test]
    fn leading_principal_block() {
        let m = k2().leading_principal(2).unwrap();
        assert_eq!(m, t(&[2], &[0, 0], &[1]));
        assert!(k2().leading_principal(4).is_err());
        assert!(k2().leading_principal(0).is_err());
    }
}
