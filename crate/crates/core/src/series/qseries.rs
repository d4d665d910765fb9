use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A power series in `q` truncated after `q^order`, with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

impl QSeries {
    pub fn zero(order: u32) -> Self {
        QSeries {
            coeffs: vec![BigInt::zero(); order as usize + 1],
        }
    }

    pub fn one(order: u32) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a q-series needs at least the constant term"
        );
        QSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Euler function `prod_{n >= 1} (1 - q^{step * n})`.
    pub fn phi_step(step: u32, order: u32) -> Self {
        assert!(step > 0);
        let mut s = Self::one(order);
        let mut k = step;
        while k <= order {
            s = s.mul_binomial(k, 1);
            k += step;
        }
        s
    }

    pub fn phi(order: u32) -> Self {
        Self::phi_step(1, order)
    }

    pub fn order(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: u32) -> BigInt {
        self.coeffs.get(k as usize).cloned().unwrap_or_default()
    }

    pub fn add_at(&mut self, k: u32, c: &BigInt) {
        if let Some(slot) = self.coeffs.get_mut(k as usize) {
            *slot += c;
        }
    }

    pub fn truncate(&self, order: u32) -> Self {
        let n = (order as usize + 1).min(self.coeffs.len());
        QSeries {
            coeffs: self.coeffs[..n].to_vec(),
        }
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let order = self.order().min(other.order());
        let mut out = self.truncate(order);
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.scalar_mul(&BigInt::from(-1)))
    }

    pub fn scalar_mul(&self, k: &BigInt) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        let order = self.order().min(other.order()) as usize;
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        QSeries { coeffs: out }
    }

    pub fn pow(&self, n: u32) -> QSeries {
        let mut out = QSeries::one(self.order());
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Inverse; needs constant term `+1` or `-1`.
    pub fn invert(&self) -> Result<QSeries> {
        let c0 = self.coeffs[0].clone();
        if c0.abs() != BigInt::one() {
            return Err(Error::NonUnitConstant(c0.to_string()));
        }
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n];
        out[0] = c0.clone();
        for k in 1..n {
            let mut acc = BigInt::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -(&c0 * acc);
        }
        Ok(QSeries { coeffs: out })
    }

    /// Multiplies by `(1 - q^k)^power`.
    pub fn mul_binomial(&self, k: u32, power: i32) -> QSeries {
        assert!(k > 0);
        let k = k as usize;
        let mut c = self.coeffs.clone();
        for _ in 0..power.unsigned_abs() {
            if power > 0 {
                for i in (k..c.len()).rev() {
                    let t = c[i - k].clone();
                    c[i] -= t;
                }
            } else {
                for i in k..c.len() {
                    let t = c[i - k].clone();
                    c[i] += t;
                }
            }
        }
        QSeries { coeffs: c }
    }

    pub fn div_exact(&self, d: i64) -> Result<QSeries> {
        let dd = BigInt::from(d);
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (k, c) in self.coeffs.iter().enumerate() {
            let (quot, rem) = c.div_rem(&dd);
            if !rem.is_zero() {
                return Err(Error::NonIntegral {
                    exps: vec![k as u32],
                    coeff: c.to_string(),
                    divisor: d,
                });
            }
            out.push(quot);
        }
        Ok(QSeries { coeffs: out })
    }

    /// Substitutes `q -> q^k`.
    pub fn dilate(&self, k: u32) -> QSeries {
        let mut out = QSeries::zero(self.order());
        for (i, c) in self.coeffs.iter().enumerate() {
            let j = i * k as usize;
            if j < out.coeffs.len() {
                out.coeffs[j] = c.clone();
            }
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{c}")?;
            } else if c.is_negative() {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "*q")?,
                _ => write!(f, "*q^{k}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Partition numbers by the naive recursion over largest part.
    fn partitions(n: usize) -> Vec<i64> {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for part in 1..=n {
            for m in part..=n {
                p[m] += p[m - part];
            }
        }
        p
    }

    #[test]
    fn inverse_euler_counts_partitions() {
        let inv = QSeries::phi(30).invert().unwrap();
        assert_eq!(inv, QSeries::from_i64(&partitions(30)));
    }

    #[test]
    fn dilated_phi_agrees_with_stepped_product() {
        assert_eq!(QSeries::phi(20).dilate(2), QSeries::phi_step(2, 20));
    }

    #[test]
    fn division_undoes_multiplication() {
        let s = QSeries::from_i64(&[1, 3, -2, 0, 5, 1, 1]);
        assert_eq!(s.mul_binomial(3, 2).mul_binomial(3, -2), s);
    }

    #[test]
    fn sigma_eigen_characters_are_integral() {
        // (1/phi(q) +- phi(q)/phi(q^2)) / 2 has integer coefficients, and the
        // difference of squares is 1/phi(q^2).
        let n = 40;
        let a = QSeries::phi(n).invert().unwrap();
        let b = QSeries::phi(n).mul(&QSeries::phi_step(2, n).invert().unwrap());
        let v1 = a.add(&b).div_exact(2).unwrap();
        let vm = a.sub(&b).div_exact(2).unwrap();
        let lhs = v1.mul(&v1).sub(&vm.mul(&vm));
        assert_eq!(lhs, QSeries::phi_step(2, n).invert().unwrap());
    }
}
