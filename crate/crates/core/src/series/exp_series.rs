use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::affine::AffineWeight;
use crate::error::{Error, Result};

/// Exponent vector `(k_0, ..., k_l)` of the monomial `e^{base - sum k_i alpha_i}`.
pub type Exps = Vec<u32>;

pub fn height(e: &[u32]) -> u32 {
    e.iter().sum()
}

/// A truncated formal sum `sum c_k e^{base - sum_i k_i alpha_i}` with exact
/// integer coefficients. Only terms of total height `sum k_i <= order` are
/// stored; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpSeries {
    base: AffineWeight,
    nvars: usize,
    order: u32,
    q_half: bool,
    terms: BTreeMap<Exps, BigInt>,
}

impl ExpSeries {
    pub fn zero(base: AffineWeight, nvars: usize, order: u32) -> Self {
        ExpSeries {
            base,
            nvars,
            order,
            q_half: false,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(base: AffineWeight, nvars: usize, order: u32) -> Self {
        let mut s = Self::zero(base, nvars, order);
        s.add_term(vec![0; nvars], BigInt::one());
        s
    }

    pub fn from_terms<I>(base: AffineWeight, nvars: usize, order: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exps, BigInt)>,
    {
        let mut s = Self::zero(base, nvars, order);
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s
    }

    pub(crate) fn set_q_half(&mut self, q_half: bool) {
        self.q_half = q_half;
    }

    pub fn base(&self) -> &AffineWeight {
        &self.base
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn q_half(&self) -> bool {
        self.q_half
    }

    pub fn terms(&self) -> &BTreeMap<Exps, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// Adds `c` to the coefficient of `e`, ignoring terms above the order.
    pub fn add_term(&mut self, e: Exps, c: BigInt) {
        assert_eq!(e.len(), self.nvars, "exponent length mismatch");
        if height(&e) > self.order || c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &ExpSeries) -> Result<()> {
        if self.nvars != other.nvars || self.q_half != other.q_half {
            return Err(Error::BaseMismatch(format!(
                "{} vs {} variables (q_half {} vs {})",
                self.nvars, other.nvars, self.q_half, other.q_half
            )));
        }
        Ok(())
    }

    /// Restricts to terms of height at most `order`.
    pub fn truncate(&self, order: u32) -> ExpSeries {
        let order = order.min(self.order);
        ExpSeries {
            base: self.base.clone(),
            nvars: self.nvars,
            order,
            q_half: self.q_half,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| height(e) <= order)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &ExpSeries) -> Result<ExpSeries> {
        self.check_compatible(other)?;
        if self.base != other.base {
            return Err(Error::BaseMismatch(format!(
                "{} vs {}",
                self.base, other.base
            )));
        }
        let order = self.order.min(other.order);
        let mut out = self.truncate(order);
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ExpSeries) -> Result<ExpSeries> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ExpSeries {
        self.scalar_mul(&BigInt::from(-1))
    }

    pub fn scalar_mul(&self, k: &BigInt) -> ExpSeries {
        let mut out = Self::zero(self.base.clone(), self.nvars, self.order);
        out.q_half = self.q_half;
        if k.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect();
        out
    }

    /// Exact division of every coefficient by `d`.
    pub fn div_exact(&self, d: i64) -> Result<ExpSeries> {
        let dd = BigInt::from(d);
        let mut out = self.clone();
        for (e, c) in out.terms.iter_mut() {
            let (quot, rem) = c.div_rem(&dd);
            if !rem.is_zero() {
                return Err(Error::NonIntegral {
                    exps: e.clone(),
                    coeff: c.to_string(),
                    divisor: d,
                });
            }
            *c = quot;
        }
        Ok(out)
    }

    fn buckets(&self) -> Vec<Vec<(&Exps, &BigInt)>> {
        let mut b: Vec<Vec<(&Exps, &BigInt)>> = vec![Vec::new(); self.order as usize + 1];
        for (e, c) in &self.terms {
            b[height(e) as usize].push((e, c));
        }
        b
    }

    /// Product; the bases add and the order is the smaller of the two.
    pub fn mul(&self, other: &ExpSeries) -> Result<ExpSeries> {
        self.check_compatible(other)?;
        let order = self.order.min(other.order);
        let b = other.buckets();
        let mut acc: HashMap<Exps, BigInt> = HashMap::new();
        for (ea, ca) in &self.terms {
            let ha = height(ea);
            if ha > order {
                continue;
            }
            for bucket in b.iter().take((order - ha) as usize + 1) {
                for (eb, cb) in bucket {
                    let e: Exps = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                    *acc.entry(e).or_default() += ca * *cb;
                }
            }
        }
        let mut out = ExpSeries::zero(&self.base + &other.base, self.nvars, order);
        out.q_half = self.q_half;
        out.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(out)
    }

    /// Multiplicative inverse; needs constant term `+1` or `-1`. The base is
    /// negated.
    pub fn invert(&self) -> Result<ExpSeries> {
        let zero = vec![0u32; self.nvars];
        let c0 = self.coeff(&zero);
        if c0.abs() != BigInt::one() {
            return Err(Error::NonUnitConstant(c0.to_string()));
        }
        let order = self.order;
        let a = self.buckets();
        let mut res: Vec<HashMap<Exps, BigInt>> = vec![HashMap::new(); order as usize + 1];
        res[0].insert(zero, c0.clone());
        for h in 1..=order as usize {
            let mut contrib: HashMap<Exps, BigInt> = HashMap::new();
            for (ha, bucket) in a.iter().enumerate().take(h + 1).skip(1) {
                for (ea, ca) in bucket {
                    for (eb, cb) in &res[h - ha] {
                        let e: Exps = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                        *contrib.entry(e).or_default() += *ca * cb;
                    }
                }
            }
            res[h] = contrib
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e, -(&c0 * c)))
                .collect();
        }
        let mut out = ExpSeries::zero(-&self.base, self.nvars, order);
        out.q_half = self.q_half;
        out.terms = res.into_iter().flatten().collect();
        Ok(out)
    }

    /// Multiplies by `(1 - x^beta)^power` where `x^beta = e^{-sum beta_i alpha_i}`.
    /// Negative powers divide. The base is unchanged.
    pub fn mul_binomial(&self, beta: &[u32], power: i32) -> ExpSeries {
        assert_eq!(beta.len(), self.nvars);
        let hb = height(beta);
        assert!(hb > 0, "binomial factor needs positive height");
        let mut cur = self.clone();
        for _ in 0..power.unsigned_abs() {
            cur = if power > 0 {
                cur.mul_one_minus(beta, hb)
            } else {
                cur.div_one_minus(beta, hb)
            };
        }
        cur
    }

    fn mul_one_minus(&self, beta: &[u32], hb: u32) -> ExpSeries {
        let mut out = self.clone();
        for (e, c) in &self.terms {
            if height(e) + hb <= self.order {
                let shifted: Exps = e.iter().zip(beta).map(|(x, y)| x + y).collect();
                out.add_term(shifted, -c.clone());
            }
        }
        out
    }

    fn div_one_minus(&self, beta: &[u32], hb: u32) -> ExpSeries {
        // b_m = a_m + b_{m - beta}, filled in order of increasing height.
        let mut buckets: Vec<HashMap<Exps, BigInt>> = vec![HashMap::new(); self.order as usize + 1];
        for (e, c) in &self.terms {
            buckets[height(e) as usize].insert(e.clone(), c.clone());
        }
        for h in 0..=self.order {
            if h + hb > self.order {
                break;
            }
            let items: Vec<(Exps, BigInt)> = buckets[h as usize]
                .iter()
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect();
            let target = &mut buckets[(h + hb) as usize];
            for (e, c) in items {
                let shifted: Exps = e.iter().zip(beta).map(|(x, y)| x + y).collect();
                *target.entry(shifted).or_default() += c;
            }
        }
        let mut out = ExpSeries::zero(self.base.clone(), self.nvars, self.order);
        out.q_half = self.q_half;
        out.terms = buckets
            .into_iter()
            .flatten()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        out
    }

    /// Re-expresses the series relative to `new_base = base + sum offset_i alpha_i`.
    /// Fails if a term would get a negative exponent.
    pub fn rebase(&self, offset: &[i64], new_base: AffineWeight) -> Result<ExpSeries> {
        assert_eq!(offset.len(), self.nvars);
        let shift: i64 = offset.iter().sum();
        let new_order = self.order as i64 + shift;
        if new_order < 0 {
            return Err(Error::Precondition(format!(
                "rebasing by {offset:?} leaves no terms below order {}",
                self.order
            )));
        }
        let mut out = ExpSeries::zero(new_base, self.nvars, new_order as u32);
        out.q_half = self.q_half;
        for (e, c) in &self.terms {
            let shifted: Vec<i64> = e.iter().zip(offset).map(|(&x, &o)| x as i64 + o).collect();
            if shifted.iter().any(|&x| x < 0) {
                return Err(Error::OutsideCone(shifted));
            }
            out.add_term(shifted.into_iter().map(|x| x as u32).collect(), c.clone());
        }
        Ok(out)
    }

    /// Relabels exponents through `f` (which must be linear, non-decreasing in
    /// height), with a new base and order.
    pub fn remap<F>(&self, nvars: usize, base: AffineWeight, order: u32, f: F) -> ExpSeries
    where
        F: Fn(&[u32]) -> Exps,
    {
        let mut out = ExpSeries::zero(base, nvars, order);
        out.q_half = self.q_half;
        for (e, c) in &self.terms {
            out.add_term(f(e), c.clone());
        }
        out
    }

    /// Replaces the base, keeping the exponents.
    pub fn with_base(mut self, base: AffineWeight) -> ExpSeries {
        self.base = base;
        self
    }

    /// Sets the delta coefficient of the base to zero (characters differing
    /// by a delta shift are identified).
    pub fn normalize_delta(&self) -> ExpSeries {
        let mut out = self.clone();
        out.base = self.base.with_delta(Zero::zero());
        out
    }

    /// First monomial (in lexicographic order) where the two series differ,
    /// compared up to the smaller order, with both coefficients.
    pub fn first_difference(&self, other: &ExpSeries) -> Option<(Exps, BigInt, BigInt)> {
        let order = self.order.min(other.order);
        let a = self.truncate(order);
        let b = other.truncate(order);
        let mut keys: Vec<&Exps> = a.terms.keys().chain(b.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .map(|k| (k.clone(), a.coeff(k), b.coeff(k)))
            .find(|(_, x, y)| x != y)
    }

    /// True if the bases agree up to a delta shift and all coefficients agree
    /// up to the smaller order.
    pub fn agrees_with(&self, other: &ExpSeries) -> bool {
        self.nvars == other.nvars
            && self.base.with_delta(Zero::zero()) == other.base.with_delta(Zero::zero())
            && self.first_difference(other).is_none()
    }

    /// Sum of coefficients grouped by `k_0`.
    pub fn grade_sums(&self) -> BTreeMap<u32, BigInt> {
        let mut out: BTreeMap<u32, BigInt> = BTreeMap::new();
        for (e, c) in &self.terms {
            *out.entry(e[0]).or_default() += c;
        }
        out
    }
}

impl fmt::Display for ExpSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e^{{{}}} * (", self.base)?;
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if c.is_negative() {
                write!(f, "- {}", -c)?;
            } else {
                if i > 0 {
                    write!(f, "+ ")?;
                }
                write!(f, "{c}")?;
            }
            for (j, k) in e.iter().enumerate() {
                if *k > 0 {
                    write!(f, "*x{j}")?;
                    if *k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        write!(f, " + O(h^{}))", self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> AffineWeight {
        AffineWeight::zero(1)
    }

    fn series(order: u32, terms: &[(&[u32], i64)]) -> ExpSeries {
        ExpSeries::from_terms(
            base(),
            terms.first().map_or(2, |t| t.0.len()),
            order,
            terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))),
        )
    }

    #[test]
    fn one_is_a_unit() {
        let s = series(4, &[(&[0, 0], 3), (&[1, 0], -2), (&[1, 2], 5)]);
        let one = ExpSeries::one(base(), 2, 6);
        assert_eq!(one.mul(&s).unwrap(), s);
    }

    #[test]
    fn geometric_series_inverts_one_minus_x() {
        let one_minus = series(6, &[(&[0], 1), (&[1], -1)]);
        let geo = one_minus.invert().unwrap();
        for k in 0..=6 {
            assert_eq!(geo.coeff(&[k]), BigInt::one());
        }
        assert_eq!(one_minus.mul(&geo).unwrap().terms().len(), 1);
        let via_binomial = ExpSeries::one(base(), 1, 6).mul_binomial(&[1], -1);
        assert_eq!(via_binomial, geo.with_base(base()));
        assert!(series(3, &[(&[0], 2)]).invert().is_err());
        assert_eq!(
            ExpSeries::one(base(), 1, 3).invert().unwrap(),
            ExpSeries::one(base(), 1, 3)
        );
    }

    #[test]
    fn euler_function_matches_pentagonal_numbers() {
        let n = 40;
        let mut phi = ExpSeries::one(base(), 1, n);
        for k in 1..=n {
            phi = phi.mul_binomial(&[k], 1);
        }
        let mut expect = ExpSeries::zero(base(), 1, n);
        for j in -6i64..=6 {
            let e = j * (3 * j - 1) / 2;
            let sign = if j % 2 == 0 { 1 } else { -1 };
            if e <= n as i64 {
                expect.add_term(vec![e as u32], BigInt::from(sign));
            }
        }
        assert_eq!(phi, expect);
    }

    #[test]
    fn rebase_and_cone_check() {
        let s = series(4, &[(&[1, 1], 2), (&[2, 1], 1)]);
        let r = s.rebase(&[-1, -1], base()).unwrap();
        assert_eq!(r.order(), 2);
        assert_eq!(r.coeff(&[0, 0]), BigInt::from(2));
        assert!(matches!(
            s.rebase(&[-2, 0], base()),
            Err(Error::OutsideCone(_))
        ));
    }

    #[test]
    fn div_exact_reports_residue() {
        let s = series(2, &[(&[0], 4), (&[1], 3)]);
        assert!(matches!(s.div_exact(2), Err(Error::NonIntegral { .. })));
        assert_eq!(
            series(2, &[(&[0], 4)]).div_exact(2).unwrap().coeff(&[0]),
            BigInt::from(2)
        );
    }

    #[test]
    fn add_requires_equal_bases() {
        let a = series(2, &[(&[0], 1)]);
        let b = a.clone().with_base(AffineWeight::lambda0(1));
        assert!(matches!(a.add(&b), Err(Error::BaseMismatch(_))));
        assert!(a.sub(&a).unwrap().is_empty());
    }
}
