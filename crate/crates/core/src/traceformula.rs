//! Trace formulas for automorphisms of smooth hypersurfaces in P^{n+1} and
//! of cyclic covers branched along them. Inputs are just the degree, the
//! dimension, the cover order and eigenvalue multiplicities; no geometry.

use crate::{Error, Result};

/// Eigenvalue-multiplicity data of a linear automorphism acting on an
/// (n+2)-dimensional space, relative to a degree-d hypersurface. `mults[j]`
/// is the multiplicity of the eigenvalue zeta_d^j (a fixed primitive d-th
/// root of unity); eigenvalues that are not d-th roots of unity are simply
/// not recorded — they contribute multiplicity 0 terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultSpec {
    pub d: u32,
    pub n: u32,
    pub r: u32,
    pub mults: Vec<u32>,
}

impl MultSpec {
    pub fn new(d: u32, n: u32, r: u32, mults: Vec<u32>) -> Self {
        assert_eq!(mults.len(), d as usize);
        assert_eq!(d % r, 0, "cover order must divide the degree");
        MultSpec { d, n, r, mults }
    }

    /// Identity automorphism: all n+2 eigenvalues equal 1.
    pub fn identity(d: u32, n: u32, r: u32) -> Self {
        let mut mults = vec![0; d as usize];
        mults[0] = n + 2;
        MultSpec::new(d, n, r, mults)
    }
}

fn pow_i128(base: i128, e: u32) -> i128 {
    let mut r = 1i128;
    for _ in 0..e {
        r = r.checked_mul(base).expect("overflow in trace formula");
    }
    r
}

fn exact_div(num: i128, den: i128, what: &'static str) -> Result<i64> {
    if num % den != 0 {
        return Err(Error::NonIntegral(what, format!("{num}/{den}")));
    }
    Ok(i64::try_from(num / den).expect("trace out of i64 range"))
}

/// Euler characteristic and primitive middle cohomology dimension of a
/// smooth degree-d hypersurface of dimension n:
/// chi = n+2 + ((1-d)^{n+2} - 1)/d,  h^n_pr = (-1)^n((1-d)^{n+2} + d - 1)/d.
pub fn euler_and_primitive(d: u32, n: u32) -> Result<(i64, i64)> {
    assert!(d >= 2 && n >= 1);
    let base = 1 - d as i128;
    let t = pow_i128(base, n + 2);
    let chi = n as i128 + 2 + (t - 1) / (d as i128);
    if (t - 1) % d as i128 != 0 {
        return Err(Error::NonIntegral("euler characteristic", format!("{t}")));
    }
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let h = exact_div(sign * (t + d as i128 - 1), d as i128, "primitive dimension")?;
    Ok((i64::try_from(chi).unwrap(), h))
}

/// Trace of the induced automorphism on primitive middle cohomology of the
/// hypersurface: ((-1)^n / d) * sum over d-th roots alpha of (1-d)^{m_alpha}.
pub fn chenevert_hypersurface(spec: &MultSpec) -> Result<i64> {
    let d = spec.d;
    let base = 1 - d as i128;
    let mut s = 0i128;
    for j in 0..d as usize {
        s += pow_i128(base, spec.mults[j]);
    }
    let sign = if spec.n % 2 == 0 { 1 } else { -1 };
    exact_div(sign * s, d as i128, "hypersurface trace")
}

/// Trace on primitive H^{n+1} of the cyclic r:1 cover branched along the
/// hypersurface:
/// ((-1)^{n+1}/d) * (sum_{alpha^d=1}(1-d)^{m_alpha} - r*sum_{gamma^{d/r}=1}(1-d)^{m_gamma}).
pub fn chenevert_cover(spec: &MultSpec) -> Result<i64> {
    let d = spec.d;
    let r = spec.r;
    let base = 1 - d as i128;
    let mut s1 = 0i128;
    for j in 0..d as usize {
        s1 += pow_i128(base, spec.mults[j]);
    }
    let mut s2 = 0i128;
    let step = (d / r) as usize;
    // gamma^{d/r} = 1 iff gamma = zeta_d^j with r | j... j multiples of r
    let _ = step;
    let mut j = 0usize;
    while j < d as usize {
        s2 += pow_i128(base, spec.mults[j]);
        j += r as usize;
    }
    let sign = if (spec.n + 1) % 2 == 0 { 1 } else { -1 };
    exact_div(sign * (s1 - (r as i128) * s2), d as i128, "cover trace")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octic_surface_numbers() {
        let (chi, h) = euler_and_primitive(8, 2).unwrap();
        assert_eq!((chi, h), (304, 301));
    }

    #[test]
    fn quintic_threefold() {
        let (_, h) = euler_and_primitive(5, 3).unwrap();
        assert_eq!(h, 204);
    }

    #[test]
    fn conic() {
        let (chi, h) = euler_and_primitive(2, 1).unwrap();
        assert_eq!((chi, h), (2, 0));
    }

    #[test]
    fn hypersurface_identity_is_primitive_dim() {
        let spec = MultSpec::identity(8, 2, 2);
        assert_eq!(chenevert_hypersurface(&spec).unwrap(), 301);
        // (2401 + 7)/8
        for d in 2..=10 {
            for n in 1..=4 {
                let spec = MultSpec::identity(d, n, 1);
                let (_, h) = euler_and_primitive(d, n).unwrap();
                assert_eq!(chenevert_hypersurface(&spec).unwrap(), h);
            }
        }
    }

    #[test]
    fn diag_11ii() {
        // g1 = diag(1,1,i,i): m_1 = 2, m_i = 2 -> (49 + 49 + 6)/8 = 13
        let mut mults = vec![0u32; 8];
        mults[0] = 2;
        mults[2] = 2; // i = zeta_8^2
        let spec = MultSpec::new(8, 2, 2, mults);
        assert_eq!(chenevert_hypersurface(&spec).unwrap(), 13);
    }

    #[test]
    fn scalar_i_acts_trivially() {
        // c = i*Id: m_i = 4 -> (2401 + 7)/8 = 301
        let mut mults = vec![0u32; 8];
        mults[2] = 4;
        let spec = MultSpec::new(8, 2, 2, mults);
        assert_eq!(chenevert_hypersurface(&spec).unwrap(), 301);
        assert_eq!(chenevert_cover(&spec).unwrap(), 300);
    }

    #[test]
    fn cover_identity_case() {
        let spec = MultSpec::identity(8, 2, 2);
        assert_eq!(chenevert_cover(&spec).unwrap(), 300);
    }

    #[test]
    fn cover_diag_minus1() {
        // diag(-1,1,1,1): m_1 = 3, m_{-1} = 1 -> -44
        let mut mults = vec![0u32; 8];
        mults[0] = 3;
        mults[4] = 1; // -1 = zeta_8^4
        let spec = MultSpec::new(8, 2, 2, mults);
        assert_eq!(chenevert_cover(&spec).unwrap(), -44);
    }

    #[test]
    fn r_equals_d_specializes_to_hypersurface() {
        // cover with r = d equals the hypersurface formula on the extension
        // of the automorphism by one trivial eigenvalue
        let mut state = 99u64;
        let mut next = |m: u32| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % m as u64) as u32
        };
        for d in 2..=10u32 {
            for n in 1..=4u32 {
                for _ in 0..20 {
                    // random multiplicity vector summing to n+2
                    let mut mults = vec![0u32; d as usize];
                    for _ in 0..n + 2 {
                        let j = next(d);
                        mults[j as usize] += 1;
                    }
                    let cover = MultSpec::new(d, n, d, mults.clone());
                    let mut ext = mults.clone();
                    ext[0] += 1;
                    let hyper = MultSpec::new(d, n + 1, 1, ext);
                    assert_eq!(
                        chenevert_cover(&cover).unwrap(),
                        chenevert_hypersurface(&hyper).unwrap(),
                        "d={d} n={n} mults={mults:?}"
                    );
                }
            }
        }
    }
}
