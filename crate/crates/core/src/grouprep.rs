//! The Heisenberg group H (order 64) and Maschke's group G (order 46080) as
//! exact matrix groups, their conjugacy classes, eigenvalue multiplicities,
//! the Chenevert trace class functions on H^2(S)_pr and H^3(X), and the
//! character-free decomposition checks built from them.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{rat, ratf, GaussRat, MultiPoly, QuotElem, Rat, UniPoly};
use num_traits::Zero;
use crate::traceformula::{chenevert_cover, chenevert_hypersurface, MultSpec};
use crate::varieties::{maschke_octic_gauss, P3_VARS};
use crate::{Error, Result};

/// Element of G: a 4x4 matrix with entries in (1/2)Z[i], stored as twice the
/// matrix so all entries are Gaussian integers. Every element of G and H is
/// unitary, so inverses are conjugate transposes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement {
    /// twice the actual matrix: (re, im) Gaussian-integer entries
    pub m2: [[(i32, i32); 4]; 4],
}

impl GroupElement {
    pub fn identity() -> Self {
        let mut m2 = [[(0, 0); 4]; 4];
        for (i, row) in m2.iter_mut().enumerate() {
            row[i] = (2, 0);
        }
        GroupElement { m2 }
    }

    /// Matrix product; entries must stay in (1/2)Z[i].
    pub fn mul(&self, other: &Self) -> Self {
        let mut m2 = [[(0, 0); 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let mut re = 0i32;
                let mut im = 0i32;
                for k in 0..4 {
                    let (a, b) = self.m2[i][k];
                    let (c, d) = other.m2[k][j];
                    re += a * c - b * d;
                    im += a * d + b * c;
                }
                assert!(re % 2 == 0 && im % 2 == 0, "entry left (1/2)Z[i]");
                m2[i][j] = (re / 2, im / 2);
            }
        }
        GroupElement { m2 }
    }

    /// Inverse of a unitary matrix: the conjugate transpose.
    pub fn inv(&self) -> Self {
        let mut m2 = [[(0, 0); 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let (a, b) = self.m2[j][i];
                m2[i][j] = (a, -b);
            }
        }
        GroupElement { m2 }
    }

    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.mul(self).mul(&g.inv())
    }

    /// Entries as Gaussian rationals (the actual matrix, halved back).
    pub fn to_gauss(&self) -> [[GaussRat; 4]; 4] {
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let (a, b) = self.m2[i][j];
                GaussRat::new(ratf(a as i64, 2), ratf(b as i64, 2))
            })
        })
    }

    /// Exact determinant of the actual matrix (m2 determinant / 16).
    pub fn det(&self) -> GaussRat {
        fn det3(m: &[[(i64, i64); 3]; 3]) -> (i64, i64) {
            let mut re = 0;
            let mut im = 0;
            let idx = [(0usize, 1usize, 2usize), (1, 2, 0), (2, 0, 1)];
            for &(a, b, c) in &idx {
                // + m[0][a] * (m[1][b]*m[2][c] - m[1][c]*m[2][b])
                let (p1, q1) = m[1][b];
                let (p2, q2) = m[2][c];
                let (p3, q3) = m[1][c];
                let (p4, q4) = m[2][b];
                let t1 = (p1 * p2 - q1 * q2 - (p3 * p4 - q3 * q4), p1 * q2 + q1 * p2 - (p3 * q4 + q3 * p4));
                let (p0, q0) = m[0][a];
                re += p0 * t1.0 - q0 * t1.1;
                im += p0 * t1.1 + q0 * t1.0;
            }
            (re, im)
        }
        // Laplace along the first row of the 4x4
        let mut re = 0i64;
        let mut im = 0i64;
        for j in 0..4 {
            let minor: [[(i64, i64); 3]; 3] = std::array::from_fn(|r| {
                let mut out = [(0i64, 0i64); 3];
                let mut col = 0;
                for c in 0..4 {
                    if c == j {
                        continue;
                    }
                    let (a, b) = self.m2[r + 1][c];
                    out[col] = (a as i64, b as i64);
                    col += 1;
                }
                out
            });
            let (dre, dim) = det3(&minor);
            let (a, b) = self.m2[0][j];
            let sign = if j % 2 == 0 { 1 } else { -1 };
            re += sign * (a as i64 * dre - b as i64 * dim);
            im += sign * (a as i64 * dim + b as i64 * dre);
        }
        GaussRat::new(ratf(re, 16), ratf(im, 16))
    }
}

/// Generator g1 = diag(1, 1, i, i).
pub fn gen_g1() -> GroupElement {
    let mut m2 = [[(0, 0); 4]; 4];
    m2[0][0] = (2, 0);
    m2[1][1] = (2, 0);
    m2[2][2] = (0, 2);
    m2[3][3] = (0, 2);
    GroupElement { m2 }
}

/// Generator g2 = (1/2) [[-1,-i,-i,-1],[i,1,-1,-i],[i,-1,1,-i],[1,-i,-i,1]].
pub fn gen_g2() -> GroupElement {
    let rows = [
        [(-1, 0), (0, -1), (0, -1), (-1, 0)],
        [(0, 1), (1, 0), (-1, 0), (0, -1)],
        [(0, 1), (-1, 0), (1, 0), (0, -1)],
        [(1, 0), (0, -1), (0, -1), (1, 0)],
    ];
    GroupElement { m2: rows }
}

/// Label of a Heisenberg element: scalar i^s and the class (a,b,c,d) in
/// H/mu_4 = (Z/2)^4, with (a,b) the translation part and (c,d) the character
/// part of the Schrodinger action.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeisLabel {
    pub s: u8,
    pub a: u8,
    pub b: u8,
    pub c: u8,
    pub d: u8,
}

/// The Schrodinger matrix U_{(i^s, (a,b), (c,d))} on the basis
/// x0 = d_00, x1 = d_01, x2 = d_10, x3 = d_11.
pub fn heis_matrix(l: HeisLabel) -> GroupElement {
    let idx = |z1: u8, z2: u8| (z1 * 2 + z2) as usize;
    let scal: [(i32, i32); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];
    let (sr, si) = scal[(l.s % 4) as usize];
    let mut m2 = [[(0, 0); 4]; 4];
    for z1 in 0..2u8 {
        for z2 in 0..2u8 {
            let j = idx(z1, z2);
            let t1 = (l.a + z1) % 2;
            let t2 = (l.b + z2) % 2;
            let i = idx(t1, t2);
            let sign = if (l.c * t1 + l.d * t2) % 2 == 1 { -1 } else { 1 };
            m2[i][j] = (2 * sign * sr, 2 * sign * si);
        }
    }
    GroupElement { m2 }
}

/// All 64 elements of H, labeled.
pub fn heisenberg_elements() -> Vec<(HeisLabel, GroupElement)> {
    let mut v = Vec::with_capacity(64);
    for s in 0..4u8 {
        for a in 0..2u8 {
            for b in 0..2u8 {
                for c in 0..2u8 {
                    for d in 0..2u8 {
                        let l = HeisLabel { s, a, b, c, d };
                        v.push((l, heis_matrix(l)));
                    }
                }
            }
        }
    }
    v
}

/// The symplectic form E on H/mu_4 from the commutator pairing.
pub fn symplectic_form(v: &HeisLabel, w: &HeisLabel) -> u8 {
    (w.c * v.a + w.d * v.b + v.c * w.a + v.d * w.b) % 2
}

const CLOSURE_BOUND: usize = 1_000_000;

/// The multiplication-closed table of the group generated by `generators`,
/// built by breadth-first closure with exact matrix equality.
pub struct GroupTable {
    pub elements: Vec<GroupElement>,
    pub index: HashMap<GroupElement, u32>,
    pub generators: Vec<GroupElement>,
}

pub fn generate_group(generators: &[GroupElement]) -> Result<GroupTable> {
    let mut elements = vec![GroupElement::identity()];
    let mut index = HashMap::new();
    index.insert(GroupElement::identity(), 0u32);
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = vec![];
        for &ei in &frontier {
            let e = elements[ei];
            for g in generators {
                let f = e.mul(g);
                if let std::collections::hash_map::Entry::Vacant(slot) = index.entry(f) {
                    if elements.len() >= CLOSURE_BOUND {
                        return Err(Error::ClosureExceeded(CLOSURE_BOUND));
                    }
                    let id = elements.len() as u32;
                    elements.push(f);
                    slot.insert(id);
                    next.push(id as usize);
                }
            }
        }
        frontier = next;
    }
    Ok(GroupTable {
        elements,
        index,
        generators: generators.to_vec(),
    })
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn id_of(&self, g: &GroupElement) -> u32 {
        *self.index.get(g).expect("element not in group")
    }

    /// Elements commuting with every generator.
    pub fn center(&self) -> Vec<GroupElement> {
        self.elements
            .iter()
            .filter(|e| {
                self.generators
                    .iter()
                    .all(|g| e.mul(g) == g.mul(e))
            })
            .copied()
            .collect()
    }
}

/// One conjugacy class: representative index, all member indices.
pub struct ConjClass {
    pub rep: u32,
    pub members: Vec<u32>,
}

impl ConjClass {
    pub fn size(&self) -> u64 {
        self.members.len() as u64
    }
}

/// Partition into conjugacy classes by orbit closure under conjugation by
/// the generators (which generate the group, so orbits are full classes).
pub fn conjugacy_classes(table: &GroupTable) -> Vec<ConjClass> {
    let n = table.order();
    let mut seen = vec![false; n];
    let gens: Vec<(GroupElement, GroupElement)> = table
        .generators
        .iter()
        .map(|g| (*g, g.inv()))
        .collect();
    let mut classes = vec![];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut members = vec![start as u32];
        let mut frontier = vec![start];
        while !frontier.is_empty() {
            let mut next = vec![];
            for &ei in &frontier {
                let e = table.elements[ei];
                for (g, gi) in &gens {
                    let c = g.mul(&e).mul(gi);
                    let ci = table.id_of(&c) as usize;
                    if !seen[ci] {
                        seen[ci] = true;
                        members.push(ci as u32);
                        next.push(ci);
                    }
                }
            }
            frontier = next;
        }
        members.sort_unstable();
        classes.push(ConjClass {
            rep: start as u32,
            members,
        });
    }
    classes
}

/// Group context: table, classes, class lookup and inverse-class map.
pub struct GroupCtx {
    pub table: GroupTable,
    pub classes: Vec<ConjClass>,
    pub class_of: Vec<u32>,
    pub inverse_class: Vec<u32>,
}

impl GroupCtx {
    pub fn build(table: GroupTable) -> Self {
        let classes = conjugacy_classes(&table);
        let mut class_of = vec![0u32; table.order()];
        for (ci, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m as usize] = ci as u32;
            }
        }
        let inverse_class = classes
            .iter()
            .map(|c| {
                let inv = table.elements[c.rep as usize].inv();
                class_of[table.id_of(&inv) as usize]
            })
            .collect();
        GroupCtx {
            table,
            classes,
            class_of,
            inverse_class,
        }
    }

    /// The full group G = <g1, g2>.
    pub fn maschke_group() -> Result<Self> {
        Ok(Self::build(generate_group(&[gen_g1(), gen_g2()])?))
    }
}

/// Rational-valued class function, one value per conjugacy class.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction {
    pub values: Vec<i64>,
}

impl ClassFunction {
    pub fn at_element(&self, ctx: &GroupCtx, id: u32) -> i64 {
        self.values[ctx.class_of[id as usize] as usize]
    }
}

// ---- eigenvalue multiplicities over Q[x]/(x^4 + 1) ----

type C8 = QuotElem<Rat>;

fn zeta8_modulus() -> Arc<UniPoly<Rat>> {
    QuotElem::<Rat>::modulus_monic(UniPoly::from_i64(&[1, 0, 0, 0, 1])).unwrap()
}

fn c8_from_gauss(m: &Arc<UniPoly<Rat>>, g: &GaussRat) -> C8 {
    // i = zeta_8^2 = x^2
    let v = UniPoly::new(vec![g.re.clone(), rat(0), g.im.clone()]);
    QuotElem::new(m, v).unwrap()
}

fn c8_zeta_pow(m: &Arc<UniPoly<Rat>>, j: u32) -> C8 {
    let x = QuotElem::x(m).unwrap();
    x.pow(j as u64)
}

fn rank4_c8(mut a: Vec<Vec<C8>>) -> usize {
    let n = a.len();
    let m = a[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..m {
        let Some(piv) = (row..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, piv);
        let inv = a[row][col].inv().expect("field element");
        for c in col..m {
            a[row][c] = a[row][c].mul(&inv);
        }
        for r in row + 1..n {
            if !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..m {
                    let t = f.mul(&a[row][c]);
                    a[r][c] = a[r][c].sub(&t);
                }
            }
        }
        row += 1;
        rank += 1;
        if row == n {
            break;
        }
    }
    rank
}

/// Multiplicity of each d-th root of unity as an eigenvalue of `g`, computed
/// as the kernel dimension of (g - zeta^j I) by exact elimination over
/// Q[x]/(x^4+1). Only d = 8 (and its divisors via the same vector) is used.
pub fn eig_mults(g: &GroupElement, d: u32) -> MultSpec {
    assert_eq!(d, 8, "the workbench only needs d = 8");
    let m = zeta8_modulus();
    let gg = g.to_gauss();
    let mut mults = vec![0u32; 8];
    for (j, slot) in mults.iter_mut().enumerate() {
        let zeta = c8_zeta_pow(&m, j as u32);
        let mat: Vec<Vec<C8>> = (0..4)
            .map(|r| {
                (0..4)
                    .map(|c| {
                        let mut e = c8_from_gauss(&m, &gg[r][c]);
                        if r == c {
                            e = e.sub(&zeta);
                        }
                        e
                    })
                    .collect()
            })
            .collect();
        *slot = 4 - rank4_c8(mat) as u32;
    }
    MultSpec::new(8, 2, 2, mults)
}

/// The two trace class functions: t_S on H^2(S,Q)_pr (hypersurface formula,
/// d=8, n=2) and t_X on H^3(X,Q) (2:1 cover formula, r=2). Both are
/// integer-valued on every class; a non-integral value is an error.
pub fn trace_class_functions(ctx: &GroupCtx) -> Result<(ClassFunction, ClassFunction)> {
    let mut ts = Vec::with_capacity(ctx.classes.len());
    let mut tx = Vec::with_capacity(ctx.classes.len());
    for c in &ctx.classes {
        let g = &ctx.table.elements[c.rep as usize];
        let spec = eig_mults(g, 8);
        ts.push(chenevert_hypersurface(&spec)?);
        tx.push(chenevert_cover(&spec)?);
    }
    Ok((ClassFunction { values: ts }, ClassFunction { values: tx }))
}

/// Class-function inner product (1/|G|) sum_g t1(g) t2(g^{-1}).
pub fn class_inner(ctx: &GroupCtx, t1: &ClassFunction, t2: &ClassFunction) -> Rat {
    let mut s = rat(0);
    for (ci, c) in ctx.classes.iter().enumerate() {
        let v1 = t1.values[ci];
        let v2 = t2.values[ctx.inverse_class[ci] as usize];
        s += rat(c.size() as i64 * v1 * v2);
    }
    s / rat(ctx.table.order() as i64)
}

/// The sign-like character of G realized through the determinant, verified
/// to be +-1 valued on the generators (hence on all of G).
pub fn epsilon_character(ctx: &GroupCtx) -> Result<ClassFunction> {
    let mut values = Vec::with_capacity(ctx.classes.len());
    for c in &ctx.classes {
        let d = ctx.table.elements[c.rep as usize].det();
        if !d.im.is_zero() || (!(d.re == rat(1)) && !(d.re == rat(-1))) {
            return Err(Error::Other(format!(
                "determinant character is not +-1 valued: {d:?}"
            )));
        }
        values.push(if d.re == rat(1) { 1 } else { -1 });
    }
    let f = ClassFunction { values };
    if f.values.iter().all(|&v| v == 1) {
        return Err(Error::Other("determinant character is trivial".into()));
    }
    Ok(f)
}

/// Isotypic dimensions of H^3(X,Q) under the abelianized Heisenberg action:
/// dim_chi = (1/64) sum_{h in H} chi(h) t_X(h), for the 16 characters of
/// H/mu_4 = (Z/2)^4.
pub fn h_isotypic_dims() -> Result<Vec<(u8, i64)>> {
    let hs = heisenberg_elements();
    let tx: Vec<i64> = hs
        .iter()
        .map(|(_, m)| chenevert_cover(&eig_mults(m, 8)))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(16);
    for v in 0..16u8 {
        let (v1, v2, v3, v4) = ((v >> 3) & 1, (v >> 2) & 1, (v >> 1) & 1, v & 1);
        let mut s = 0i64;
        for ((l, _), t) in hs.iter().zip(&tx) {
            let e = (v1 * l.a + v2 * l.b + v3 * l.c + v4 * l.d) % 2;
            s += if e == 1 { -t } else { *t };
        }
        if s % 64 != 0 {
            return Err(Error::NonIntegral("isotypic dimension", format!("{s}/64")));
        }
        out.push((v, s / 64));
    }
    Ok(out)
}

/// Check F(g x) = F(x) symbolically for a group element.
pub fn preserves_octic(g: &GroupElement) -> bool {
    let f = maschke_octic_gauss();
    let gg = g.to_gauss();
    let vars: Vec<MultiPoly<GaussRat>> = (0..4)
        .map(|i| MultiPoly::var(&P3_VARS, P3_VARS[i]))
        .collect();
    let images: Vec<MultiPoly<GaussRat>> = (0..4)
        .map(|i| {
            let mut acc = MultiPoly::zero(&P3_VARS);
            for (j, v) in vars.iter().enumerate() {
                acc = acc.add(&v.scale(&gg[i][j]));
            }
            acc
        })
        .collect();
    let composed = f
        .substitute(&[
            ("x0", images[0].clone()),
            ("x1", images[1].clone()),
            ("x2", images[2].clone()),
            ("x3", images[3].clone()),
        ])
        .unwrap();
    composed == f
}

/// Heisenberg commutator relation U_w U_v U_w^{-1} = (-1)^{E(v,w)} U_v over
/// all pairs; the scalar parts are central so labels suffice.
pub fn heisenberg_commutator_holds() -> bool {
    let hs = heisenberg_elements();
    for (lw, mw) in &hs {
        let mwi = mw.inv();
        for (lv, mv) in &hs {
            let lhs = mw.mul(mv).mul(&mwi);
            let sign = symplectic_form(lv, lw);
            let rhs = if sign == 1 {
                // multiply by -1
                let mut m2 = mv.m2;
                for row in &mut m2 {
                    for e in row {
                        *e = (-e.0, -e.1);
                    }
                }
                GroupElement { m2 }
            } else {
                *mv
            };
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let t = generate_group(&[GroupElement::identity()]).unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(conjugacy_classes(&t).len(), 1);
    }

    #[test]
    fn heisenberg_order_and_classes() {
        let gens: Vec<GroupElement> = [
            HeisLabel { s: 0, a: 0, b: 0, c: 0, d: 1 },
            HeisLabel { s: 0, a: 0, b: 0, c: 1, d: 0 },
            HeisLabel { s: 0, a: 0, b: 1, c: 0, d: 0 },
            HeisLabel { s: 0, a: 1, b: 0, c: 0, d: 0 },
            HeisLabel { s: 1, a: 0, b: 0, c: 0, d: 0 },
        ]
        .iter()
        .map(|&l| heis_matrix(l))
        .collect();
        let t = generate_group(&gens).unwrap();
        assert_eq!(t.order(), 64);
        assert_eq!(conjugacy_classes(&t).len(), 34);
    }

    #[test]
    fn schroedinger_matrices_match_printed_action() {
        // h_0001(x) = (x0, -x1, x2, -x3)
        let h = heis_matrix(HeisLabel { s: 0, a: 0, b: 0, c: 0, d: 1 });
        let mut want = [[(0, 0); 4]; 4];
        want[0][0] = (2, 0);
        want[1][1] = (-2, 0);
        want[2][2] = (2, 0);
        want[3][3] = (-2, 0);
        assert_eq!(h.m2, want);
        // h_0100(x) = (x1, x0, x3, x2)
        let h = heis_matrix(HeisLabel { s: 0, a: 0, b: 1, c: 0, d: 0 });
        let mut want = [[(0, 0); 4]; 4];
        want[0][1] = (2, 0);
        want[1][0] = (2, 0);
        want[2][3] = (2, 0);
        want[3][2] = (2, 0);
        assert_eq!(h.m2, want);
        // h_1000(x) = (x2, x3, x0, x1)
        let h = heis_matrix(HeisLabel { s: 0, a: 1, b: 0, c: 0, d: 0 });
        let mut want = [[(0, 0); 4]; 4];
        want[0][2] = (2, 0);
        want[1][3] = (2, 0);
        want[2][0] = (2, 0);
        want[3][1] = (2, 0);
        assert_eq!(h.m2, want);
        // c(x) = i*x
        let h = heis_matrix(HeisLabel { s: 1, a: 0, b: 0, c: 0, d: 0 });
        for i in 0..4 {
            assert_eq!(h.m2[i][i], (0, 2));
        }
    }

    #[test]
    fn eig_mults_examples() {
        let id = GroupElement::identity();
        let spec = eig_mults(&id, 8);
        assert_eq!(spec.mults[0], 4);
        assert_eq!(spec.mults[1..].iter().sum::<u32>(), 0);

        let g1 = gen_g1();
        let spec = eig_mults(&g1, 8);
        assert_eq!(spec.mults[0], 2); // eigenvalue 1
        assert_eq!(spec.mults[2], 2); // eigenvalue i

        let c = heis_matrix(HeisLabel { s: 1, a: 0, b: 0, c: 0, d: 0 });
        let spec = eig_mults(&c, 8);
        assert_eq!(spec.mults[2], 4);
    }

    #[test]
    fn generators_preserve_octic() {
        assert!(preserves_octic(&gen_g1()));
        assert!(preserves_octic(&gen_g2()));
    }

    #[test]
    fn commutator_relation() {
        assert!(heisenberg_commutator_holds());
    }

    #[test]
    fn trivial_inner_product() {
        let ctx = GroupCtx::maschke_group().unwrap();
        let triv = ClassFunction {
            values: vec![1; ctx.classes.len()],
        };
        assert_eq!(class_inner(&ctx, &triv, &triv), rat(1));
    }

    #[test]
    fn eig_mults_is_a_class_function() {
        // conjugate elements have identical multiplicity vectors
        let ctx = GroupCtx::maschke_group().unwrap();
        let mut state = 31u64;
        let mut next = |m: usize| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) as usize) % m
        };
        for _ in 0..12 {
            let g = ctx.table.elements[next(ctx.table.order())];
            let h = ctx.table.elements[next(ctx.table.order())];
            let conj = g.conjugate_by(&h);
            assert_eq!(eig_mults(&g, 8).mults, eig_mults(&conj, 8).mults);
        }
    }

    #[test]
    fn determinants() {
        assert_eq!(gen_g1().det(), GaussRat::from_int(-1));
        assert_eq!(gen_g2().det(), GaussRat::from_int(-1));
        assert_eq!(GroupElement::identity().det(), GaussRat::one());
    }
}
