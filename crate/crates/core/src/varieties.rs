//! The defining polynomials of every variety in the workbench, with integer
//! coefficients exactly as fixed, plus the auxiliary polynomials used by the
//! symbolic checks.

use crate::algebra::{GaussRat, MultiPoly, Rat, UniPoly};

pub const P3_VARS: [&str; 4] = ["x0", "x1", "x2", "x3"];
pub const P4_VARS: [&str; 5] = ["y0", "y1", "y2", "y3", "y4"];
pub const W_VARS: [&str; 4] = ["y0", "y1", "y2", "y3"];
pub const XY_VARS: [&str; 2] = ["x", "y"];

/// The octic invariant
/// F = sum x_i^8 + 14 sum_{i<j} x_i^4 x_j^4 + 168 x0^2 x1^2 x2^2 x3^2.
pub fn maschke_octic() -> MultiPoly<Rat> {
    let mut terms: Vec<(i64, Vec<u16>)> = vec![];
    for i in 0..4 {
        let mut e = vec![0u16; 4];
        e[i] = 8;
        terms.push((1, e));
    }
    for i in 0..4 {
        for j in i + 1..4 {
            let mut e = vec![0u16; 4];
            e[i] = 4;
            e[j] = 4;
            terms.push((14, e));
        }
    }
    terms.push((168, vec![2, 2, 2, 2]));
    let borrowed: Vec<(i64, &[u16])> = terms.iter().map(|(c, e)| (*c, e.as_slice())).collect();
    MultiPoly::from_terms(&P3_VARS, &borrowed)
}

pub fn maschke_octic_gauss() -> MultiPoly<GaussRat> {
    maschke_octic().map_coeffs(|c| GaussRat::new(c.clone(), crate::algebra::rat(0)))
}

/// The K3 quartic underneath F (F is this polynomial in the squares):
/// sum x_i^4 + 14 sum_{i<j} x_i^2 x_j^2 + 168 x0 x1 x2 x3.
pub fn sbar_quartic() -> MultiPoly<Rat> {
    let mut terms: Vec<(i64, Vec<u16>)> = vec![];
    for i in 0..4 {
        let mut e = vec![0u16; 4];
        e[i] = 4;
        terms.push((1, e));
    }
    for i in 0..4 {
        for j in i + 1..4 {
            let mut e = vec![0u16; 4];
            e[i] = 2;
            e[j] = 2;
            terms.push((14, e));
        }
    }
    terms.push((168, vec![1, 1, 1, 1]));
    let borrowed: Vec<(i64, &[u16])> = terms.iter().map(|(c, e)| (*c, e.as_slice())).collect();
    MultiPoly::from_terms(&P3_VARS, &borrowed)
}

/// The five generators of the Heisenberg-invariant quartics:
/// p0 = sum x_i^4, p1 = 2(x0^2x1^2 + x2^2x3^2), p2 = 2(x0^2x2^2 + x1^2x3^2),
/// p3 = 2(x0^2x3^2 + x1^2x2^2), p4 = 4 x0x1x2x3.
pub fn invariant_quartics() -> [MultiPoly<Rat>; 5] {
    let p0 = MultiPoly::from_terms(
        &P3_VARS,
        &[
            (1, &[4, 0, 0, 0]),
            (1, &[0, 4, 0, 0]),
            (1, &[0, 0, 4, 0]),
            (1, &[0, 0, 0, 4]),
        ],
    );
    let p1 = MultiPoly::from_terms(&P3_VARS, &[(2, &[2, 2, 0, 0]), (2, &[0, 0, 2, 2])]);
    let p2 = MultiPoly::from_terms(&P3_VARS, &[(2, &[2, 0, 2, 0]), (2, &[0, 2, 0, 2])]);
    let p3 = MultiPoly::from_terms(&P3_VARS, &[(2, &[2, 0, 0, 2]), (2, &[0, 2, 2, 0])]);
    let p4 = MultiPoly::from_terms(&P3_VARS, &[(4, &[1, 1, 1, 1])]);
    [p0, p1, p2, p3, p4]
}

/// The Igusa quartic G_I in P^4:
/// y4^4 + (y0^2-y1^2-y2^2-y3^2)y4^2 + y1^2y2^2+y1^2y3^2+y2^2y3^2 - 2 y0y1y2y3.
pub fn igusa_quartic() -> MultiPoly<Rat> {
    MultiPoly::from_terms(
        &P4_VARS,
        &[
            (1, &[0, 0, 0, 0, 4]),
            (1, &[2, 0, 0, 0, 2]),
            (-1, &[0, 2, 0, 0, 2]),
            (-1, &[0, 0, 2, 0, 2]),
            (-1, &[0, 0, 0, 2, 2]),
            (1, &[0, 2, 2, 0, 0]),
            (1, &[0, 2, 0, 2, 0]),
            (1, &[0, 0, 2, 2, 0]),
            (-2, &[1, 1, 1, 1, 0]),
        ],
    )
}

/// The S6-invariant quadric G_M = y0^2 + 3(y1^2+y2^2+y3^2) + 6 y4^2.
pub fn gm_quadric() -> MultiPoly<Rat> {
    MultiPoly::from_terms(
        &P4_VARS,
        &[
            (1, &[2, 0, 0, 0, 0]),
            (3, &[0, 2, 0, 0, 0]),
            (3, &[0, 0, 2, 0, 0]),
            (3, &[0, 0, 0, 2, 0]),
            (6, &[0, 0, 0, 0, 2]),
        ],
    )
}

/// The 12-nodal quartic model of W in P^3:
/// 5y0^4 + 6y0^2(y1^2+y2^2+y3^2) - 27(y1^4+y2^4+y3^4)
/// - 90(y1^2y2^2+y1^2y3^2+y2^2y3^2) + 72 y0y1y2y3.
pub fn w_quartic() -> MultiPoly<Rat> {
    MultiPoly::from_terms(
        &W_VARS,
        &[
            (5, &[4, 0, 0, 0]),
            (6, &[2, 2, 0, 0]),
            (6, &[2, 0, 2, 0]),
            (6, &[2, 0, 0, 2]),
            (-27, &[0, 4, 0, 0]),
            (-27, &[0, 0, 4, 0]),
            (-27, &[0, 0, 0, 4]),
            (-90, &[0, 2, 2, 0]),
            (-90, &[0, 2, 0, 2]),
            (-90, &[0, 0, 2, 2]),
            (72, &[1, 1, 1, 1]),
        ],
    )
}

/// g_+(x,y) = (2y^4+y^2+2)x^4 - (y^4-24y^2+1)x^2 + 2y^4+y^2+2.
pub fn g_plus() -> MultiPoly<Rat> {
    MultiPoly::from_terms(
        &XY_VARS,
        &[
            (2, &[4, 4]),
            (1, &[4, 2]),
            (2, &[4, 0]),
            (-1, &[2, 4]),
            (24, &[2, 2]),
            (-1, &[2, 0]),
            (2, &[0, 4]),
            (1, &[0, 2]),
            (2, &[0, 0]),
        ],
    )
}

/// g_-(x,y) = (2y^4-y^2+2)x^4 + (y^4+24y^2+1)x^2 + 2y^4-y^2+2.
pub fn g_minus() -> MultiPoly<Rat> {
    MultiPoly::from_terms(
        &XY_VARS,
        &[
            (2, &[4, 4]),
            (-1, &[4, 2]),
            (2, &[4, 0]),
            (1, &[2, 4]),
            (24, &[2, 2]),
            (1, &[2, 0]),
            (2, &[0, 4]),
            (-1, &[0, 2]),
            (2, &[0, 0]),
        ],
    )
}

/// A = y^8 + 14 y^4 + 1 as a polynomial in (x, y).
pub fn poly_a() -> MultiPoly<Rat> {
    MultiPoly::from_terms(&XY_VARS, &[(1, &[0, 8]), (14, &[0, 4]), (1, &[0, 0])])
}

/// B = 14(x^4y^4 + x^4 + y^4 + 12 x^2 y^2 + 1).
pub fn poly_b() -> MultiPoly<Rat> {
    MultiPoly::from_terms(
        &XY_VARS,
        &[
            (14, &[4, 4]),
            (14, &[4, 0]),
            (14, &[0, 4]),
            (168, &[2, 2]),
            (14, &[0, 0]),
        ],
    )
}

/// C = x^8 + 14 x^4 + 1.
pub fn poly_c() -> MultiPoly<Rat> {
    MultiPoly::from_terms(&XY_VARS, &[(1, &[8, 0]), (14, &[4, 0]), (1, &[0, 0])])
}

/// P = 2y^4 + y^2 + 2 (univariate in y).
pub fn poly_p() -> UniPoly<Rat> {
    UniPoly::from_i64(&[2, 0, 1, 0, 2])
}

/// Q = y^4 - 24y^2 + 1.
pub fn poly_q() -> UniPoly<Rat> {
    UniPoly::from_i64(&[1, 0, -24, 0, 1])
}

/// A as a univariate polynomial in y.
pub fn poly_a_univar() -> UniPoly<Rat> {
    UniPoly::from_i64(&[1, 0, 0, 0, 14, 0, 0, 0, 1])
}

/// x^8 + 14x^4 + 1, the branch octic shared by A and C.
pub fn octic_pm() -> UniPoly<Rat> {
    poly_a_univar()
}

/// The two quartic factors of x^8 + 14x^4 + 1.
pub fn octic_factors() -> (UniPoly<Rat>, UniPoly<Rat>) {
    (
        UniPoly::from_i64(&[1, 2, 2, -2, 1]),
        UniPoly::from_i64(&[1, -2, 2, 2, 1]),
    )
}

/// The minimal polynomial of the line seed alpha = zeta_12 + zeta_12^2:
/// x^4 - 2x^3 + 2x^2 + 2x + 1.
pub fn l3_min_poly() -> UniPoly<Rat> {
    UniPoly::from_i64(&[1, 2, 2, -2, 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn octic_term_count() {
        let f = maschke_octic();
        assert_eq!(f.num_terms(), 11);
        assert_eq!(f.total_degree(), 8);
    }

    #[test]
    fn octic_is_quartic_in_squares() {
        // F(x0..x3) = sbar(x0^2, .., x3^2)
        let f = maschke_octic();
        let sb = sbar_quartic();
        let sq = |name: &str| {
            let v = MultiPoly::<Rat>::var(&P3_VARS, name);
            v.mul(&v)
        };
        let composed = sb
            .substitute(&[
                ("x0", sq("x0")),
                ("x1", sq("x1")),
                ("x2", sq("x2")),
                ("x3", sq("x3")),
            ])
            .unwrap();
        assert_eq!(composed, f);
    }

    #[test]
    fn octic_factorization() {
        let (f1, f2) = octic_factors();
        assert_eq!(f1.mul(&f2), octic_pm());
    }

    #[test]
    fn l3_min_poly_is_an_octic_factor() {
        // x^8+14x^4+1 divided by the seed quartic leaves remainder 0
        let (q, r) = octic_pm().divrem(&l3_min_poly()).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::from_i64(&[1, -2, 2, 2, 1]));
    }

    #[test]
    fn delta_lc_sanity() {
        // leading x-coefficient of B^2-4AC is 48*(2y^4-y^2+2)(2y^4+y^2+2)
        let b = poly_b();
        let a = poly_a();
        let c = poly_c();
        let delta = b.mul(&b).sub(&a.mul(&c).scale(&rat(4)));
        assert_eq!(delta.degree_in(0), 8);
    }
}
