//! The involution `sigma(phi^{(i)}_k) = (-1)^i phi^{(n+1-i)*}_k` on the
//! charge-zero Fock space and the resulting `sp_n` characters.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::fock::{fock_char_product, for_each_state, FockCharacter, Mode, FOCK_STATE_BUDGET};
use super::restriction::fock_to_sp;
use crate::error::{Error, Result};
use crate::formulas::long_root_product;
use crate::formulas::sp::sp_system;
use crate::lie::RootSystem;
use crate::series::{mul_q, ExpSeries, QSeries};

/// Counts from an exhaustive scan of charge-zero monomials.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SigmaScan {
    /// Monomials with `sigma(v) = v`.
    pub fixed: u64,
    /// Monomials with `sigma(v) = -v` (there should be none).
    pub anti_fixed: u64,
    /// Monomials not proportional to their image.
    pub paired: u64,
}

/// `sp_n` characters of the `sigma`-eigenspaces of `F_0` and of the span of
/// the fixed monomials, all with base `-Lambda_0`.
#[derive(Clone, Debug)]
pub struct SigmaDecomposition {
    pub plus: ExpSeries,
    pub minus: ExpSeries,
    pub sharp: ExpSeries,
    pub scan: SigmaScan,
}

/// Image of a monomial under `sigma`: new creators, new stars and the sign.
pub fn sigma_image(n: usize, creators: &[Mode], stars: &[Mode]) -> (Vec<Mode>, Vec<Mode>, i64) {
    let mut cre: Vec<Mode> = stars.iter().map(|&(j, l)| (n + 1 - j, l)).collect();
    let mut st: Vec<Mode> = creators.iter().map(|&(i, k)| (n + 1 - i, k)).collect();
    cre.sort_by_key(|&(c, m)| (m, c));
    st.sort_by_key(|&(c, m)| (m, c));
    let exponent: usize = creators.iter().map(|m| m.0).sum::<usize>()
        + stars.iter().map(|m| m.0).sum::<usize>()
        + creators.len();
    let sign = if exponent.is_multiple_of(2) { 1 } else { -1 };
    (cre, st, sign)
}

fn fold_key(n: usize, creators: &[Mode], stars: &[Mode]) -> (u32, Vec<i64>) {
    let mut w = vec![0i64; n];
    for (c, _) in creators {
        w[c - 1] += 1;
    }
    for (c, _) in stars {
        w[c - 1] -= 1;
    }
    let e: u32 = creators.iter().chain(stars).map(|m| m.1).sum();
    (e, w)
}

fn to_series(
    rs: &RootSystem,
    n: usize,
    max_e2: u32,
    m: BTreeMap<(u32, Vec<i64>), u64>,
    order: u32,
) -> Result<ExpSeries> {
    let mut fc = FockCharacter {
        n,
        max_energy2: max_e2,
        terms: BTreeMap::new(),
    };
    for ((e, w), c) in m {
        fc.terms.insert((0, e, w), BigInt::from(c));
    }
    fock_to_sp(rs, &fc, 0, order)
}

/// Exhaustive enumeration of `F_0` up to energy `order`, sorted into
/// fixed monomials and pairs `{v, sigma(v)}`.
pub fn sigma_decomposition_brute(n: usize, order: u32) -> Result<SigmaDecomposition> {
    let rs = sp_system(n)?;
    let max_e2 = 2 * order;
    let mut scan = SigmaScan::default();
    let mut fixed: BTreeMap<(u32, Vec<i64>), u64> = BTreeMap::new();
    let mut paired: BTreeMap<(u32, Vec<i64>), u64> = BTreeMap::new();
    for_each_state(n, 0, max_e2, FOCK_STATE_BUDGET, |cre, st| {
        let (c2, s2, sign) = sigma_image(n, cre, st);
        let key = fold_key(n, cre, st);
        if c2 == cre && s2 == st {
            if sign == 1 {
                scan.fixed += 1;
                *fixed.entry(key).or_default() += 1;
            } else {
                scan.anti_fixed += 1;
            }
        } else {
            scan.paired += 1;
            *paired.entry(key).or_default() += 1;
        }
    })?;
    if scan.anti_fixed > 0 {
        return Err(Error::Precondition(format!(
            "{} monomials are negated by sigma",
            scan.anti_fixed
        )));
    }
    let sharp = to_series(&rs, n, max_e2, fixed, order)?;
    let pairs = to_series(&rs, n, max_e2, paired, order)?.div_exact(2)?;
    let plus = sharp.add(&pairs)?;
    Ok(SigmaDecomposition {
        plus,
        minus: pairs,
        sharp,
        scan,
    })
}

/// Same decomposition from the product formulas: `F_0` from the Fock
/// product and `F_0^sharp` from the long-root product.
pub fn sigma_decomposition_product(n: usize, order: u32) -> Result<SigmaDecomposition> {
    let rs = sp_system(n)?;
    let f0 = fock_to_sp(&rs, &fock_char_product(n, 2 * order), 0, order)?;
    // The long-root product carries phi(q^2)/phi(q); strip it.
    let lrp = long_root_product(&rs, order)?;
    let ratio = QSeries::phi(order).mul(&QSeries::phi_step(2, order).invert()?);
    let sharp = mul_q(&rs, &lrp, &ratio)?.with_base(lrp.base().clone());
    let plus = f0.add(&sharp)?.div_exact(2)?;
    let minus = f0.sub(&sharp)?.div_exact(2)?;
    Ok(SigmaDecomposition {
        plus,
        minus,
        sharp,
        scan: SigmaScan::default(),
    })
}

/// `ch V^{+1}` and `ch V^{-1}`: `(1/phi(q) +- phi(q)/phi(q^2)) / 2`.
pub fn v_characters(order: u32) -> Result<(QSeries, QSeries)> {
    let a = QSeries::phi(order).invert()?;
    let b = QSeries::phi(order).mul(&QSeries::phi_step(2, order).invert()?);
    Ok((a.add(&b).div_exact(2)?, a.sub(&b).div_exact(2)?))
}

/// Solves `V^{+-} ch L(-Lambda_0) + V^{-+} ch L(-Lambda_0 + Lambda_bar_2 - delta) = ch F_0^{+-}`
/// for the two characters. The second is returned relative to its own top
/// weight `-Lambda_0 + Lambda_bar_2` (so it has order `order - 2`).
pub fn sigma_characters(n: usize, order: u32) -> Result<(ExpSeries, ExpSeries)> {
    let rs = sp_system(n)?;
    let dec = sigma_decomposition_brute(n, order)?;
    let (v1, vm) = v_characters(order)?;
    let phi2 = QSeries::phi_step(2, order);
    let mulq = |s: &ExpSeries, q: &QSeries| -> Result<ExpSeries> {
        Ok(mul_q(&rs, s, q)?.with_base(s.base().clone()))
    };
    let vac = mulq(&mulq(&dec.plus, &v1)?.sub(&mulq(&dec.minus, &vm)?)?, &phi2)?;
    let other = mulq(&mulq(&dec.minus, &v1)?.sub(&mulq(&dec.plus, &vm)?)?, &phi2)?;
    let mut offset = vec![0i64; rs.rank() + 1];
    offset[0] = -1;
    offset[1] = -1;
    let mut labels = vec![0i64; rs.rank() + 1];
    labels[0] = -2;
    labels[2] = 1;
    let base = crate::series::AffineWeight::from_labels(&rs, &labels, Zero::zero())?;
    Ok((vac, other.rebase(&offset, base)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_monomial_is_negated() {
        for n in [4, 6] {
            let d = sigma_decomposition_brute(n, 3).unwrap();
            assert_eq!(d.scan.anti_fixed, 0);
            assert!(d.scan.fixed > 0 && d.scan.paired > 0);
        }
    }

    #[test]
    fn brute_force_and_product_paths_agree() {
        let a = sigma_decomposition_brute(4, 3).unwrap();
        let b = sigma_decomposition_product(4, 3).unwrap();
        assert_eq!(a.sharp, b.sharp);
        assert_eq!(a.plus, b.plus);
        assert_eq!(a.minus, b.minus);
    }

    #[test]
    fn v_characters_low_order() {
        let (v1, vm) = v_characters(8).unwrap();
        assert_eq!(v1.coeff(0), BigInt::from(1));
        assert_eq!(vm.coeff(0), BigInt::from(0));
        assert_eq!(v1.coeff(1), BigInt::from(0));
        assert_eq!(vm.coeff(1), BigInt::from(1));
        let lhs = v1.mul(&v1).sub(&vm.mul(&vm));
        assert_eq!(lhs, QSeries::phi_step(2, 8).invert().unwrap());
    }

    #[test]
    fn vacuum_is_fixed() {
        let (c, s, sign) = sigma_image(4, &[], &[]);
        assert!(c.is_empty() && s.is_empty() && sign == 1);
    }
}
