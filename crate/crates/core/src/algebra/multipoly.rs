use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::{GaussRat, Rat};
use crate::{Error, Result};

/// Coefficient ring abstraction for polynomials. Implemented by [`Rat`] and
/// [`GaussRat`]; both are fields, so `inv` fails only at zero.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_i64(n: i64) -> Self;
}

impl Coeff for Rat {
    fn zero() -> Self {
        super::rat(0)
    }
    fn one() -> Self {
        super::rat(1)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_i64(n: i64) -> Self {
        super::rat(n)
    }
}

impl Coeff for GaussRat {
    fn zero() -> Self {
        GaussRat::zero()
    }
    fn one() -> Self {
        GaussRat::one()
    }
    fn is_zero(&self) -> bool {
        GaussRat::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        GaussRat::inv(self)
    }
    fn from_i64(n: i64) -> Self {
        GaussRat::from_int(n)
    }
}

/// Sparse multivariate polynomial over `C` with a fixed, ordered variable
/// list. Exponent vectors are keyed in lexicographic order; no zero
/// coefficients are ever stored.
#[derive(Clone, PartialEq)]
pub struct MultiPoly<C: Coeff> {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u16>, C>,
}

impl<C: Coeff> MultiPoly<C> {
    pub fn zero(vars: &[&str]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: C) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn int(vars: &[&str], n: i64) -> Self {
        Self::constant(vars, C::from_i64(n))
    }

    pub fn var(vars: &[&str], name: &str) -> Self {
        let mut p = Self::zero(vars);
        let i = p.var_index(name).expect("unknown variable");
        let mut e = vec![0u16; p.vars.len()];
        e[i] = 1;
        p.terms.insert(e, C::one());
        p
    }

    /// Build from a list of `(coefficient, exponent-vector)` pairs.
    pub fn from_terms(vars: &[&str], terms: &[(i64, &[u16])]) -> Self {
        let mut p = Self::zero(vars);
        for (c, e) in terms {
            assert_eq!(e.len(), p.vars.len());
            p.add_term(e.to_vec(), C::from_i64(*c));
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &C)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, e: Vec<u16>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_same_ring(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "polynomials from different rings");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same_ring(other);
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut r = self.clone();
        for c in r.terms.values_mut() {
            *c = c.neg();
        }
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same_ring(other);
        let mut r = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1.mul(c2));
            }
        }
        r
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut r = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, v) in &self.terms {
            r.add_term(e.clone(), v.mul(c));
        }
        r
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::constant(
            &self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
            C::one(),
        );
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    /// Total degree, or 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    /// Degree in one variable.
    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Coefficient of `var^k`, a polynomial in the same ring with the `var`
    /// exponent zeroed out.
    pub fn coeff_of(&self, var: usize, k: u16) -> Self {
        let mut r = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            if e[var] == k {
                let mut e2 = e.clone();
                e2[var] = 0;
                r.add_term(e2, c.clone());
            }
        }
        r
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut r = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            r.add_term(e2, c.mul(&C::from_i64(e[var] as i64)));
        }
        r
    }

    /// Exact expansion of the composite `self(assignment)`. Every variable of
    /// `self` that actually occurs must be assigned; all assigned polynomials
    /// must live in one common target ring.
    pub fn substitute(&self, assignment: &[(&str, MultiPoly<C>)]) -> Result<MultiPoly<C>> {
        let target_vars = match assignment.first() {
            Some((_, p)) => p.vars.clone(),
            None => self.vars.clone(),
        };
        let tv: Vec<&str> = target_vars.iter().map(|s| s.as_str()).collect();
        let mut images: Vec<Option<&MultiPoly<C>>> = vec![None; self.vars.len()];
        for (name, img) in assignment {
            assert_eq!(img.vars, target_vars, "assignment rings differ");
            if let Some(i) = self.var_index(name) {
                images[i] = Some(img);
            }
        }
        for (i, img) in images.iter().enumerate() {
            if img.is_none() && self.degree_in(i) > 0 {
                return Err(Error::MissingVariable(self.vars[i].clone()));
            }
        }
        // memoized powers per variable
        let mut powers: Vec<Vec<MultiPoly<C>>> =
            images.iter().map(|_| vec![MultiPoly::constant(&tv, C::one())]).collect();
        let mut out = MultiPoly::zero(&tv);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(&tv, c.clone());
            for (i, &ei) in e.iter().enumerate() {
                if ei == 0 {
                    continue;
                }
                let img = images[i].expect("checked above");
                while powers[i].len() <= ei as usize {
                    let next = powers[i].last().unwrap().mul(img);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][ei as usize]);
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Substitute `g` for `var^2`; every exponent of `var` must be even.
    pub fn substitute_even(&self, var: usize, g: &MultiPoly<C>) -> Result<MultiPoly<C>> {
        self.check_same_ring(g);
        let tv: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let mut powers: Vec<MultiPoly<C>> = vec![MultiPoly::constant(&tv, C::one())];
        let mut out = MultiPoly::zero(&tv);
        for (e, c) in &self.terms {
            if e[var] % 2 != 0 {
                return Err(Error::Other(format!(
                    "odd exponent {} of `{}` in even substitution",
                    e[var], self.vars[var]
                )));
            }
            let h = (e[var] / 2) as usize;
            while powers.len() <= h {
                let last = powers.last().unwrap();
                powers.push(last.mul(g));
            }
            let mut e2 = e.clone();
            e2[var] = 0;
            let mut mono = MultiPoly::zero(&tv);
            mono.add_term(e2, c.clone());
            out = out.add(&mono.mul(&powers[h]));
        }
        Ok(out)
    }

    fn leading_in(&self, var: usize) -> (u16, Self) {
        let d = self.degree_in(var);
        (d, self.coeff_of(var, d))
    }

    /// Exact multivariate division: returns `q` with `self = q * g`, or an
    /// error when no such polynomial exists.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        self.check_same_ring(g);
        assert!(!g.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut q = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        let (ge, gc) = g.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let gcinv = gc.inv().ok_or(Error::BadLeadingCoeff)?;
        while !rem.is_zero() {
            let (re, rc) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
            let mut de = vec![0u16; re.len()];
            for i in 0..re.len() {
                if re[i] < ge[i] {
                    return Err(Error::Other("inexact polynomial division".into()));
                }
                de[i] = re[i] - ge[i];
            }
            let dc = rc.mul(&gcinv);
            let mut mono = Self {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
            mono.add_term(de.clone(), dc.clone());
            q.add_term(de, dc);
            rem = rem.sub(&mono.mul(g));
        }
        Ok(q)
    }

    /// Long division by `g` viewed as a polynomial in `var`: returns `(q, r)`
    /// with `self = q*g + r` and `deg_var r < deg_var g`. Each step divides
    /// leading coefficients exactly in the remaining variables; fails when
    /// the quotient does not exist over the coefficient ring.
    pub fn divrem_in_var(&self, g: &Self, var: usize) -> Result<(Self, Self)> {
        self.check_same_ring(g);
        assert!(!g.is_zero(), "division by zero polynomial");
        let (gd, glc) = g.leading_in(var);
        let tv: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let mut q = MultiPoly::zero(&tv);
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(var) >= gd {
            let (rd, rlc) = r.leading_in(var);
            // exact division of the leading coefficients
            let t = if glc.num_terms() == 1 && glc.terms.iter().next().unwrap().0.iter().all(|&x| x == 0) {
                let c = glc.terms.values().next().unwrap();
                let cinv = c.inv().ok_or(Error::BadLeadingCoeff)?;
                rlc.scale(&cinv)
            } else {
                rlc.exact_div(&glc).map_err(|_| Error::BadLeadingCoeff)?
            };
            let mut shift = MultiPoly::zero(&tv);
            let mut e = vec![0u16; self.vars.len()];
            e[var] = rd - gd;
            shift.add_term(e, C::one());
            let qterm = t.mul(&shift);
            q = q.add(&qterm);
            r = r.sub(&qterm.mul(g));
            if !r.is_zero() && r.degree_in(var) == rd && rd >= gd {
                // no progress: the subtraction failed to kill the lead term
                return Err(Error::BadLeadingCoeff);
            }
        }
        Ok((q, r))
    }

    /// Map coefficients into another ring.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        let mut r = MultiPoly::<D> {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            r.add_term(e.clone(), f(c));
        }
        r
    }
}

impl<C: Coeff> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            for (i, &ei) in e.iter().enumerate() {
                if ei > 0 {
                    write!(f, "*{}^{}", self.vars[i], ei)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn xy() -> [&'static str; 2] {
        ["x", "y"]
    }

    #[test]
    fn substitute_linear() {
        // f = x + y, {x -> t, y -> t} = 2t
        let f = MultiPoly::<Rat>::var(&xy(), "x").add(&MultiPoly::var(&xy(), "y"));
        let t = MultiPoly::<Rat>::var(&["t"], "t");
        let r = f
            .substitute(&[("x", t.clone()), ("y", t.clone())])
            .unwrap();
        assert_eq!(r, t.scale(&rat(2)));
    }

    #[test]
    fn substitute_missing_var_errors() {
        let f = MultiPoly::<Rat>::var(&xy(), "x").add(&MultiPoly::var(&xy(), "y"));
        let t = MultiPoly::<Rat>::var(&["t"], "t");
        assert!(matches!(
            f.substitute(&[("x", t)]),
            Err(Error::MissingVariable(v)) if v == "y"
        ));
    }

    #[test]
    fn divrem_univariate() {
        // (t^2, t) -> (t, 0)
        let t = MultiPoly::<Rat>::var(&["t"], "t");
        let t2 = t.mul(&t);
        let (q, r) = t2.divrem_in_var(&t, 0).unwrap();
        assert_eq!(q, t);
        assert!(r.is_zero());
    }

    #[test]
    fn divrem_reconstructs() {
        let vars = xy();
        let f = MultiPoly::<Rat>::from_terms(&vars, &[(3, &[4, 0]), (2, &[2, 1]), (7, &[0, 2]), (1, &[1, 0])]);
        let g = MultiPoly::<Rat>::from_terms(&vars, &[(2, &[2, 0]), (1, &[0, 1])]);
        let (q, r) = f.divrem_in_var(&g, 0).unwrap();
        assert_eq!(q.mul(&g).add(&r), f);
        assert!(r.degree_in(0) < g.degree_in(0));
    }

    #[test]
    fn exact_div_detects_failure() {
        let vars = xy();
        let f = MultiPoly::<Rat>::from_terms(&vars, &[(1, &[1, 0]), (1, &[0, 0])]);
        let g = MultiPoly::<Rat>::from_terms(&vars, &[(1, &[0, 1])]);
        assert!(f.exact_div(&g).is_err());
    }
}
