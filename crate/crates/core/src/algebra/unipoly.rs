use std::fmt;
use std::sync::Arc;

use super::multipoly::Coeff;
use crate::{Error, Result};

/// Dense univariate polynomial over a field-like coefficient ring.
/// Coefficients are stored from degree 0 upward; the top coefficient is
/// always nonzero.
#[derive(Clone, PartialEq)]
pub struct UniPoly<C: Coeff> {
    pub coeffs: Vec<C>,
}

impl<C: Coeff> UniPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly {
            coeffs: vec![C::one()],
        }
    }

    pub fn x() -> Self {
        UniPoly {
            coeffs: vec![C::zero(), C::one()],
        }
    }

    pub fn constant(c: C) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn from_i64(cs: &[i64]) -> Self {
        UniPoly::new(cs.iter().map(|&c| C::from_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports as `usize::MAX` sentinel-free `None`.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn lc(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i).add(&other.coeff(i)));
        }
        UniPoly::new(c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i).sub(&other.coeff(i)));
        }
        UniPoly::new(c)
    }

    pub fn neg(&self) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(c)
    }

    pub fn scale(&self, s: &C) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c.mul(s)).collect())
    }

    /// Division with remainder; requires an invertible leading coefficient.
    pub fn divrem(&self, g: &Self) -> Result<(Self, Self)> {
        let gd = g.degree().expect("division by zero polynomial");
        let glc_inv = g.lc().unwrap().inv().ok_or(Error::BadLeadingCoeff)?;
        let mut r = self.clone();
        let mut q = vec![C::zero(); self.coeffs.len().saturating_sub(gd)];
        while let Some(rd) = r.degree() {
            if rd < gd {
                break;
            }
            let t = r.lc().unwrap().mul(&glc_inv);
            let shift = rd - gd;
            for (j, b) in g.coeffs.iter().enumerate() {
                let idx = j + shift;
                let sub = t.mul(b);
                r.coeffs[idx] = r.coeffs[idx].sub(&sub);
            }
            // force exact cancellation of the top coefficient
            r.coeffs.truncate(rd);
            while r.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
                r.coeffs.pop();
            }
            q[shift] = t;
        }
        Ok((UniPoly::new(q), r))
    }

    pub fn rem(&self, g: &Self) -> Result<Self> {
        Ok(self.divrem(g)?.1)
    }

    /// Monic normalization by the (invertible) leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        let inv = self.lc().ok_or(Error::BadLeadingCoeff)?.inv().ok_or(Error::BadLeadingCoeff)?;
        Ok(self.scale(&inv))
    }

    pub fn gcd(&self, other: &Self) -> Result<Self> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic()
        }
    }

    /// Extended gcd: returns `(g, u, v)` with `u*self + v*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return Ok((r0, s0, t0));
        }
        let lcinv = r0.lc().unwrap().inv().ok_or(Error::BadLeadingCoeff)?;
        Ok((
            r0.scale(&lcinv),
            s0.scale(&lcinv),
            t0.scale(&lcinv),
        ))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        UniPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.mul(&C::from_i64((i + 1) as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }
}

impl<C: Coeff> fmt::Debug for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{}*X^{}", c, i))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Element of the quotient ring `C[X]/(modulus)`. The modulus is normalized
/// monic on construction so representatives are canonical.
#[derive(Clone, PartialEq)]
pub struct QuotElem<C: Coeff> {
    pub modulus: Arc<UniPoly<C>>,
    pub value: UniPoly<C>,
}

impl<C: Coeff> QuotElem<C> {
    /// Build the quotient-ring context from a modulus (normalized monic) and
    /// return the class of `value`.
    pub fn new(modulus: &Arc<UniPoly<C>>, value: UniPoly<C>) -> Result<Self> {
        debug_assert!(modulus.lc().map(|c| *c == C::one()).unwrap_or(false));
        let v = value.rem(modulus)?;
        Ok(QuotElem {
            modulus: modulus.clone(),
            value: v,
        })
    }

    pub fn modulus_monic(m: UniPoly<C>) -> Result<Arc<UniPoly<C>>> {
        Ok(Arc::new(m.monic()?))
    }

    pub fn zero(modulus: &Arc<UniPoly<C>>) -> Self {
        QuotElem {
            modulus: modulus.clone(),
            value: UniPoly::zero(),
        }
    }

    pub fn one(modulus: &Arc<UniPoly<C>>) -> Self {
        QuotElem {
            modulus: modulus.clone(),
            value: UniPoly::one(),
        }
    }

    pub fn x(modulus: &Arc<UniPoly<C>>) -> Result<Self> {
        QuotElem::new(modulus, UniPoly::x())
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        QuotElem {
            modulus: self.modulus.clone(),
            value: self.value.add(&other.value),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        QuotElem {
            modulus: self.modulus.clone(),
            value: self.value.sub(&other.value),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        QuotElem {
            modulus: self.modulus.clone(),
            value: self
                .value
                .mul(&other.value)
                .rem(&self.modulus)
                .expect("monic modulus"),
        }
    }

    pub fn neg(&self) -> Self {
        QuotElem {
            modulus: self.modulus.clone(),
            value: self.value.neg(),
        }
    }

    /// Inverse when the value is a unit (gcd with the modulus is 1).
    pub fn inv(&self) -> Option<Self> {
        let (g, u, _) = self.value.xgcd(&self.modulus).ok()?;
        if g.degree() != Some(0) {
            return None;
        }
        Some(QuotElem {
            modulus: self.modulus.clone(),
            value: u.rem(&self.modulus).ok()?,
        })
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = QuotElem::one(&self.modulus);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }
}

impl<C: Coeff> fmt::Debug for QuotElem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?} mod {:?}]", self.value, self.modulus)
    }
}
