//! Prime fields F_p and extensions F_{p^k} (k <= 4): context construction
//! with deterministic moduli, quadratic characters, small-degree root
//! solving, and the table-driven element representations used by the point
//! counting kernels.

use crate::{Error, Result};

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

pub fn mod_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mod_mul(r, a, p);
        }
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    r
}

pub fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

/// Element of F_{p^k}, coefficients of 1, X, X^2, X^3 mod p (unused slots 0).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct FqElem(pub [u64; 4]);

impl FqElem {
    pub fn zero() -> Self {
        FqElem([0; 4])
    }
    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }
}

/// Field context for F_q, q = p^k. The modulus is monic irreducible of
/// degree k over F_p, chosen deterministically so fixtures reproduce across
/// runs and machines.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    pub p: u64,
    pub k: u32,
    pub q: u64,
    /// monic modulus, k+1 coefficients from degree 0 up (last = 1)
    pub modulus: Vec<u64>,
}

/// Build F_{p^k} with the smallest irreducible monic modulus in coefficient
/// order (c0 + c1*p + ... ascending). Rejects p <= 5 (bad reduction for every
/// variety in the workbench) and k outside 1..=4.
pub fn build_ext(p: u64, k: u32) -> Result<FieldCtx> {
    if p <= 5 {
        return Err(Error::BadPrime(p));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !(1..=4).contains(&k) {
        return Err(Error::BadDegree(k));
    }
    if k == 1 {
        return Ok(FieldCtx {
            p,
            k,
            q: p,
            modulus: vec![0, 1],
        });
    }
    let q = p.pow(k);
    let mut code = 0u64;
    loop {
        let mut modulus = Vec::with_capacity(k as usize + 1);
        let mut c = code;
        for _ in 0..k {
            modulus.push(c % p);
            c /= p;
        }
        modulus.push(1);
        let ctx = FieldCtx { p, k, q, modulus };
        if ctx.modulus_irreducible() {
            return Ok(ctx);
        }
        code += 1;
        assert!(code < q, "no irreducible polynomial found (impossible)");
    }
}

impl FieldCtx {
    pub fn zero(&self) -> FqElem {
        FqElem::zero()
    }

    pub fn one(&self) -> FqElem {
        let mut e = FqElem::zero();
        e.0[0] = 1;
        e
    }

    pub fn from_int(&self, n: i64) -> FqElem {
        let p = self.p as i64;
        let mut e = FqElem::zero();
        e.0[0] = n.rem_euclid(p) as u64;
        e
    }

    /// The i-th element in the deterministic enumeration (base-p digits).
    pub fn nth(&self, mut i: u64) -> FqElem {
        debug_assert!(i < self.q);
        let mut e = FqElem::zero();
        for j in 0..self.k as usize {
            e.0[j] = i % self.p;
            i /= self.p;
        }
        e
    }

    pub fn index_of(&self, e: &FqElem) -> u64 {
        let mut i = 0u64;
        for j in (0..self.k as usize).rev() {
            i = i * self.p + e.0[j];
        }
        i
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let mut r = FqElem::zero();
        for j in 0..self.k as usize {
            let s = a.0[j] + b.0[j];
            r.0[j] = if s >= self.p { s - self.p } else { s };
        }
        r
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let mut r = FqElem::zero();
        for j in 0..self.k as usize {
            r.0[j] = if a.0[j] >= b.0[j] {
                a.0[j] - b.0[j]
            } else {
                a.0[j] + self.p - b.0[j]
            };
        }
        r
    }

    pub fn neg(&self, a: &FqElem) -> FqElem {
        self.sub(&FqElem::zero(), a)
    }

    pub fn scalar_mul(&self, s: u64, a: &FqElem) -> FqElem {
        let mut r = FqElem::zero();
        for j in 0..self.k as usize {
            r.0[j] = mod_mul(s % self.p, a.0[j], self.p);
        }
        r
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let k = self.k as usize;
        if k == 1 {
            let mut r = FqElem::zero();
            r.0[0] = mod_mul(a.0[0], b.0[0], self.p);
            return r;
        }
        // schoolbook product then reduction by the monic modulus
        let mut prod = [0u64; 7];
        for i in 0..k {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + mod_mul(a.0[i], b.0[j], self.p)) % self.p;
            }
        }
        for d in (k..=2 * k - 2).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for j in 0..k {
                let m = mod_mul(c, self.modulus[j], self.p);
                let idx = d - k + j;
                prod[idx] = (prod[idx] + self.p - m % self.p) % self.p;
            }
        }
        let mut r = FqElem::zero();
        r.0[..k].copy_from_slice(&prod[..k]);
        r
    }

    pub fn sq(&self, a: &FqElem) -> FqElem {
        self.mul(a, a)
    }

    pub fn pow(&self, a: &FqElem, mut e: u64) -> FqElem {
        let mut base = *a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.sq(&base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FqElem) -> FqElem {
        assert!(!a.is_zero(), "inverse of zero");
        self.pow(a, self.q - 2)
    }

    /// The Frobenius x -> x^p.
    pub fn frobenius(&self, a: &FqElem) -> FqElem {
        self.pow(a, self.p)
    }

    /// Quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise.
    pub fn quad_char(&self, a: &FqElem) -> i32 {
        if a.is_zero() {
            return 0;
        }
        let r = self.pow(a, (self.q - 1) / 2);
        if r == self.one() {
            1
        } else {
            -1
        }
    }

    /// Verify the modulus is irreducible of degree k:
    /// X^{p^k} = X mod m and gcd(X^{p^{k/r}} - X, m) = 1 for prime r | k.
    pub fn modulus_irreducible(&self) -> bool {
        let k = self.k;
        if k == 1 {
            return true;
        }
        let xq = self.xp_pow_tower(k);
        if xq != vec_x(self) {
            return false;
        }
        let mut prime_divs = vec![];
        let mut kk = k;
        for r in [2u32, 3] {
            if kk % r == 0 {
                prime_divs.push(r);
                while kk % r == 0 {
                    kk /= r;
                }
            }
        }
        for r in prime_divs {
            let sub = self.xp_pow_tower(k / r);
            let diff = poly_sub_modcoeff(&sub, &vec_x(self), self.p);
            if poly_gcd_modp(&diff, &self.modulus, self.p).len() > 1 {
                return false;
            }
        }
        true
    }

    /// X^{p^j} mod modulus, as a coefficient vector over F_p.
    fn xp_pow_tower(&self, j: u32) -> Vec<u64> {
        let mut cur = vec![0, 1]; // X
        for _ in 0..j {
            cur = poly_powmod_modp(&cur, self.p, &self.modulus, self.p);
        }
        cur
    }
}

fn vec_x(ctx: &FieldCtx) -> Vec<u64> {
    if ctx.k == 1 {
        vec![0]
    } else {
        vec![0, 1]
    }
}

// ---- dense polynomial helpers over F_p (coefficient vecs, low degree) ----

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_sub_modcoeff(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut r = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        r[i] = (x + p - y) % p;
    }
    poly_trim(&mut r);
    r
}

fn poly_mulmod_modp(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + mod_mul(x, y, p)) % p;
        }
    }
    poly_rem_modp(&prod, m, p)
}

fn poly_rem_modp(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    let lcinv = mod_inv(m[dm], p);
    while r.len() > dm {
        let d = r.len() - 1;
        let c = mod_mul(r[d], lcinv, p);
        for j in 0..=dm {
            let idx = d - dm + j;
            r[idx] = (r[idx] + p - mod_mul(c, m[j], p)) % p;
        }
        debug_assert_eq!(r[d], 0);
        r.pop();
        poly_trim(&mut r);
    }
    r
}

fn poly_powmod_modp(a: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut base = poly_rem_modp(a, m, p);
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod_modp(&acc, &base, m, p);
        }
        base = poly_mulmod_modp(&base, &base, m, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd_modp(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    while !y.is_empty() {
        let r = poly_rem_modp(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&lc) = x.last() {
        let inv = mod_inv(lc, p);
        for c in &mut x {
            *c = mod_mul(*c, inv, p);
        }
    }
    x
}

// ---- roots of low-degree polynomials over F_q ----

type FqPoly = Vec<FqElem>;

fn fq_trim(ctx: &FieldCtx, v: &mut FqPoly) {
    let _ = ctx;
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

fn fq_rem(ctx: &FieldCtx, a: &[FqElem], m: &[FqElem]) -> FqPoly {
    let mut r = a.to_vec();
    fq_trim(ctx, &mut r);
    let dm = m.len() - 1;
    let lcinv = ctx.inv(&m[dm]);
    while r.len() > dm {
        let d = r.len() - 1;
        let c = ctx.mul(&r[d], &lcinv);
        if !c.is_zero() {
            for j in 0..=dm {
                let t = ctx.mul(&c, &m[j]);
                r[d - dm + j] = ctx.sub(&r[d - dm + j], &t);
            }
        }
        r.pop();
        fq_trim(ctx, &mut r);
    }
    r
}

fn fq_mulmod(ctx: &FieldCtx, a: &[FqElem], b: &[FqElem], m: &[FqElem]) -> FqPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut prod = vec![FqElem::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = ctx.mul(x, y);
            prod[i + j] = ctx.add(&prod[i + j], &t);
        }
    }
    fq_rem(ctx, &prod, m)
}

fn fq_powmod(ctx: &FieldCtx, a: &[FqElem], mut e: u64, m: &[FqElem]) -> FqPoly {
    let mut base = fq_rem(ctx, a, m);
    let mut acc = vec![ctx.one()];
    while e > 0 {
        if e & 1 == 1 {
            acc = fq_mulmod(ctx, &acc, &base, m);
        }
        base = fq_mulmod(ctx, &base, &base, m);
        e >>= 1;
    }
    acc
}

fn fq_gcd(ctx: &FieldCtx, a: &[FqElem], b: &[FqElem]) -> FqPoly {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    fq_trim(ctx, &mut x);
    fq_trim(ctx, &mut y);
    while !y.is_empty() {
        let r = fq_rem(ctx, &x, &y);
        x = y;
        y = r;
    }
    if let Some(lc) = x.last().copied() {
        let inv = ctx.inv(&lc);
        for c in &mut x {
            *c = ctx.mul(c, &inv);
        }
    }
    x
}

fn fq_div_exact(ctx: &FieldCtx, a: &[FqElem], b: &[FqElem]) -> FqPoly {
    // long division, remainder asserted zero
    let mut r = a.to_vec();
    fq_trim(ctx, &mut r);
    let db = b.len() - 1;
    let lcinv = ctx.inv(&b[db]);
    let mut q = vec![FqElem::zero(); r.len().saturating_sub(db)];
    while r.len() > db {
        let d = r.len() - 1;
        let c = ctx.mul(&r[d], &lcinv);
        q[d - db] = c;
        for j in 0..=db {
            let t = ctx.mul(&c, &b[j]);
            r[d - db + j] = ctx.sub(&r[d - db + j], &t);
        }
        fq_trim(ctx, &mut r);
    }
    assert!(r.is_empty(), "inexact division");
    q
}

fn fq_eval(ctx: &FieldCtx, f: &[FqElem], x: &FqElem) -> FqElem {
    let mut acc = FqElem::zero();
    for c in f.iter().rev() {
        acc = ctx.add(&ctx.mul(&acc, x), c);
    }
    acc
}

fn fq_derivative(ctx: &FieldCtx, f: &[FqElem]) -> FqPoly {
    if f.len() <= 1 {
        return vec![];
    }
    let mut d: FqPoly = f[1..]
        .iter()
        .enumerate()
        .map(|(i, c)| ctx.scalar_mul((i as u64 + 1) % ctx.p, c))
        .collect();
    fq_trim(ctx, &mut d);
    d
}

/// Find all roots of `h`, a monic product of distinct linear factors, by
/// deterministic character splitting with shifts a = 0, 1, 2, ...
fn split_linear_product(ctx: &FieldCtx, h: &[FqElem], out: &mut Vec<FqElem>) {
    let d = h.len() - 1;
    if d == 0 {
        return;
    }
    if d == 1 {
        // monic X + c -> root -c
        out.push(ctx.neg(&h[0]));
        return;
    }
    let e = (ctx.q - 1) / 2;
    for shift in 0..ctx.q {
        let a = ctx.nth(shift);
        // w = (X + a)^e - 1 mod h
        let xa = vec![a, ctx.one()];
        let mut w = fq_powmod(ctx, &xa, e, h);
        if w.is_empty() {
            w = vec![ctx.neg(&ctx.one())];
        } else {
            w[0] = ctx.sub(&w[0], &ctx.one());
            fq_trim(ctx, &mut w);
        }
        let g = fq_gcd(ctx, h, &w);
        let dg = g.len().saturating_sub(1);
        if dg > 0 && dg < d {
            let h2 = fq_div_exact(ctx, h, &g);
            split_linear_product(ctx, &g, out);
            split_linear_product(ctx, &h2, out);
            return;
        }
    }
    unreachable!("splitting must succeed over a finite field");
}

/// All roots of `f` in F_q with multiplicity, for deg f <= 4 (works for any
/// degree but the pre-condition keeps the cost at O(log q) field ops).
/// Implemented as gcd(X^q - X, squarefree part) followed by explicit
/// small-degree splitting; multiplicities recovered by trial division.
pub fn low_degree_roots(ctx: &FieldCtx, f: &[FqElem]) -> Vec<(FqElem, usize)> {
    let mut fv = f.to_vec();
    fq_trim(ctx, &mut fv);
    assert!(!fv.is_empty(), "zero polynomial");
    if fv.len() == 1 {
        return vec![];
    }
    // squarefree part (char p > deg f, so gcd with the derivative suffices)
    let deriv = fq_derivative(ctx, &fv);
    let sf = if deriv.is_empty() {
        fv.clone()
    } else {
        let g = fq_gcd(ctx, &fv, &deriv);
        if g.len() > 1 {
            fq_div_exact(ctx, &fv, &g)
        } else {
            fv.clone()
        }
    };
    // monic normalize
    let lcinv = ctx.inv(sf.last().unwrap());
    let sf: FqPoly = sf.iter().map(|c| ctx.mul(c, &lcinv)).collect();
    // gcd(X^q - X, sf)
    let xq = fq_powmod(ctx, &[ctx.zero(), ctx.one()], ctx.q, &sf);
    let mut diff = xq;
    while diff.len() < 2 {
        diff.push(FqElem::zero());
    }
    diff[1] = ctx.sub(&diff[1], &ctx.one());
    fq_trim(ctx, &mut diff);
    let lin = if diff.is_empty() {
        sf.clone()
    } else {
        fq_gcd(ctx, &sf, &diff)
    };
    let mut roots = vec![];
    if lin.len() > 1 {
        split_linear_product(ctx, &lin, &mut roots);
    }
    // multiplicities by synthetic division of the original polynomial
    let mut result = Vec::with_capacity(roots.len());
    for r in roots {
        let mut m = 0usize;
        let mut cur = fv.clone();
        loop {
            if fq_eval(ctx, &cur, &r).is_zero() && cur.len() > 1 {
                // divide by (X - r)
                let divisor = vec![ctx.neg(&r), ctx.one()];
                cur = fq_div_exact(ctx, &cur, &divisor);
                m += 1;
            } else {
                break;
            }
        }
        debug_assert!(m > 0);
        result.push((r, m));
    }
    result.sort_by_key(|(r, _)| ctx.index_of(r));
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_primes_and_degrees() {
        assert!(matches!(build_ext(5, 1), Err(Error::BadPrime(5))));
        assert!(matches!(build_ext(9, 1), Err(Error::NotPrime(9))));
        assert!(matches!(build_ext(7, 5), Err(Error::BadDegree(5))));
    }

    #[test]
    fn f7_trivial_modulus() {
        let ctx = build_ext(7, 1).unwrap();
        assert_eq!(ctx.modulus, vec![0, 1]);
        assert_eq!(ctx.q, 7);
    }

    #[test]
    fn f49_frobenius_identity() {
        let ctx = build_ext(7, 2).unwrap();
        assert_eq!(ctx.q, 49);
        // X^49 = X mod modulus for every element: check on X itself
        let x = ctx.nth(ctx.p); // the element X
        assert_eq!(ctx.pow(&x, 49), x);
        assert!(ctx.modulus_irreducible());
    }

    #[test]
    fn f361_context() {
        let ctx = build_ext(19, 2).unwrap();
        assert_eq!(ctx.q, 361);
        let x = ctx.nth(19);
        assert_eq!(ctx.pow(&x, 361), x);
    }

    #[test]
    fn quad_char_f7() {
        let ctx = build_ext(7, 1).unwrap();
        assert_eq!(ctx.quad_char(&ctx.zero()), 0);
        // oracle: brute-force square set mod 7
        let squares: std::collections::HashSet<u64> = (1..7).map(|x| x * x % 7).collect();
        for u in 1..7 {
            let want = if squares.contains(&u) { 1 } else { -1 };
            assert_eq!(ctx.quad_char(&ctx.from_int(u as i64)), want, "u={u}");
        }
        assert_eq!(ctx.quad_char(&ctx.from_int(2)), 1);
        assert_eq!(ctx.quad_char(&ctx.from_int(3)), -1);
    }

    #[test]
    fn quad_char_multiplicative_and_balanced() {
        for (p, k) in [(7, 1), (11, 1), (7, 2)] {
            let ctx = build_ext(p, k).unwrap();
            let mut sum = 0i64;
            for i in 0..ctx.q {
                sum += ctx.quad_char(&ctx.nth(i)) as i64;
            }
            assert_eq!(sum, 0, "character sum must vanish for q={}", ctx.q);
            for i in 1..ctx.q.min(25) {
                for j in 1..ctx.q.min(25) {
                    let a = ctx.nth(i);
                    let b = ctx.nth(j);
                    assert_eq!(
                        ctx.quad_char(&ctx.mul(&a, &b)),
                        ctx.quad_char(&a) * ctx.quad_char(&b)
                    );
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_exactly_fp() {
        let ctx = build_ext(11, 2).unwrap();
        let mut fixed = 0;
        for i in 0..ctx.q {
            let a = ctx.nth(i);
            if ctx.frobenius(&a) == a {
                fixed += 1;
            }
        }
        assert_eq!(fixed, 11);
    }

    #[test]
    fn roots_x4_minus_1_f5_like() {
        // p must be > 5 here; use F_13 where X^4-1 has 4 roots (4 | 12)
        let ctx = build_ext(13, 1).unwrap();
        let f = vec![
            ctx.from_int(-1),
            ctx.zero(),
            ctx.zero(),
            ctx.zero(),
            ctx.one(),
        ];
        let roots = low_degree_roots(&ctx, &f);
        assert_eq!(roots.len(), 4);
        for (r, m) in &roots {
            assert_eq!(*m, 1);
            assert_eq!(ctx.pow(r, 4), ctx.one());
        }
    }

    #[test]
    fn roots_x2_plus_1_f7_empty() {
        let ctx = build_ext(7, 1).unwrap();
        let f = vec![ctx.one(), ctx.zero(), ctx.one()];
        assert!(low_degree_roots(&ctx, &f).is_empty());
    }

    #[test]
    fn roots_match_exhaustive_scan_f101() {
        let ctx = build_ext(101, 1).unwrap();
        // deterministic pseudo-random quartics
        let mut state = 12345u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) % 101
        };
        for _ in 0..50 {
            let f: Vec<FqElem> = (0..5).map(|_| ctx.from_int(next() as i64)).collect();
            if f.iter().all(|c| c.is_zero()) {
                continue;
            }
            let roots = low_degree_roots(&ctx, &f);
            let mut brute = vec![];
            for v in 0..101 {
                let x = ctx.from_int(v);
                if fq_eval(&ctx, &f, &x).is_zero() {
                    brute.push(x);
                }
            }
            let found: Vec<FqElem> = roots.iter().map(|(r, _)| *r).collect();
            assert_eq!(found, brute);
            let total: usize = roots.iter().map(|(_, m)| m).sum();
            assert!(total <= 4);
        }
    }

    #[test]
    fn root_multiplicity() {
        let ctx = build_ext(11, 1).unwrap();
        // (X-2)^2 (X-3) = X^3 - 7X^2 + 16X - 12
        let f = vec![
            ctx.from_int(-12),
            ctx.from_int(16),
            ctx.from_int(-7),
            ctx.one(),
        ];
        let roots = low_degree_roots(&ctx, &f);
        assert_eq!(roots.len(), 2);
        let m: std::collections::HashMap<u64, usize> =
            roots.iter().map(|(r, m)| (ctx.index_of(r), *m)).collect();
        assert_eq!(m[&2], 2);
        assert_eq!(m[&3], 1);
    }

    #[test]
    fn extension_roots_scan() {
        let ctx = build_ext(7, 2).unwrap();
        // X^2 + 1 splits over F_49
        let f = vec![ctx.one(), ctx.zero(), ctx.one()];
        let roots = low_degree_roots(&ctx, &f);
        assert_eq!(roots.len(), 2);
        for (r, _) in roots {
            assert_eq!(ctx.sq(&r), ctx.from_int(-1));
        }
    }
}
