//! The acceptance suite: one test per criterion, each printing a single
//! pass/fail line. Every expected value is an exact integer; there are no
//! tolerances anywhere. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines; failures abort with the offending values.

use std::collections::BTreeMap;

use maschke_core::algebra::rat;
use maschke_core::counting::{
    count_curve_pair, count_over_prime, count_points, oracle, Kernel, VarietyId,
};
use maschke_core::ffield::build_ext;
use maschke_core::fixtures::{FixtureSet, FormLabel};
use maschke_core::grouprep::{
    class_inner, epsilon_character, gen_g1, gen_g2, generate_group, h_isotypic_dims,
    heisenberg_commutator_holds, heisenberg_elements, preserves_octic, trace_class_functions,
    ClassFunction, GroupCtx, GroupElement,
};
use maschke_core::hecke::{hecke_ap, hecke_prime_power, hecke_witness};
use maschke_core::lefschetz::{
    a_from_sbar, a_from_u, a_from_w, b_from_s, cm_exclusion, epsilon_and_charpoly,
    infer_sextic_split, predicted_x_count, primes_in, sigma_abc, t_core_from_counts,
    tr_yhat_from_y, CmVerdict,
};
use maschke_core::nslattice;
use maschke_core::tangent;
use maschke_core::traceformula::{
    chenevert_cover, chenevert_hypersurface, euler_and_primitive, MultSpec,
};

fn verdict(n: u32, what: &str, pass: bool) {
    println!(
        "criterion {n:2}: {} - {what}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {n} failed: {what}");
}

#[test]
fn criterion_01_trace_formulas() {
    let (chi, h) = euler_and_primitive(8, 2).unwrap();
    let mut pass = (chi, h) == (304, 301);

    let identity = MultSpec::identity(8, 2, 2);
    pass &= chenevert_cover(&identity).unwrap() == 300;

    // chi_top(X) = 2 chi(P^3) - chi(S) = 8 - 304 = -296
    pass &= 2 * 4 - chi == -296;

    // r = d specialization for all d <= 10, n <= 4
    let mut state = 7u64;
    let mut next = |m: u32| {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((state >> 33) % m as u64) as u32
    };
    for d in 2..=10u32 {
        for n in 1..=4u32 {
            for _ in 0..25 {
                let mut mults = vec![0u32; d as usize];
                for _ in 0..n + 2 {
                    let j = next(d) as usize;
                    mults[j] += 1;
                }
                let cover = MultSpec::new(d, n, d, mults.clone());
                let mut ext = mults;
                ext[0] += 1;
                let hyper = MultSpec::new(d, n + 1, 1, ext);
                pass &= chenevert_cover(&cover).unwrap()
                    == chenevert_hypersurface(&hyper).unwrap();
            }
        }
    }
    verdict(1, "trace formulas: (304, 301), cover 300, chi_top -296, r = d specialization", pass);
}

#[test]
fn criterion_02_group_structure() {
    let ctx = GroupCtx::maschke_group().unwrap();
    let mut pass = ctx.table.order() == 46080;
    pass &= ctx.classes.len() == 59;

    let hgens: Vec<GroupElement> = heisenberg_elements().into_iter().map(|(_, m)| m).collect();
    let h = generate_group(&hgens).unwrap();
    pass &= h.order() == 64;

    // center = {1, i, -1, -i} * Id
    let center = ctx.table.center();
    pass &= center.len() == 4;
    let scalars: Vec<GroupElement> = [(2, 0), (0, 2), (-2, 0), (0, -2)]
        .iter()
        .map(|&(re, im)| {
            let mut m2 = [[(0, 0); 4]; 4];
            for (i, row) in m2.iter_mut().enumerate() {
                row[i] = (re, im);
            }
            GroupElement { m2 }
        })
        .collect();
    for s in &scalars {
        pass &= center.contains(s);
    }

    pass &= preserves_octic(&gen_g1()) && preserves_octic(&gen_g2());
    pass &= heisenberg_commutator_holds();
    verdict(2, "|G| = 46080, 59 classes, |H| = 64, center mu_4, F o g = F, commutator relation", pass);
}

#[test]
fn criterion_03_decomposition_checks() {
    let ctx = GroupCtx::maschke_group().unwrap();
    let (ts, tx) = trace_class_functions(&ctx).unwrap();
    let id_class = ctx.class_of[0] as usize;
    let mut pass = tx.values[id_class] == 300 && ts.values[id_class] == 301;
    pass &= class_inner(&ctx, &tx, &tx) == rat(28);
    pass &= class_inner(&ctx, &ts, &ts) == rat(29);

    // supporting decomposition facts
    let triv = ClassFunction {
        values: vec![1; ctx.classes.len()],
    };
    pass &= class_inner(&ctx, &tx, &triv) == rat(0);
    let eps = epsilon_character(&ctx).unwrap();
    // the sign character appears with multiplicity two (7 pieces, each twice)
    pass &= class_inner(&ctx, &tx, &eps) == rat(2);
    // sum over classes of size * t_S^2 = 29 |G|
    let s: i64 = ctx
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| c.size() as i64 * ts.values[i] * ts.values[i])
        .sum();
    pass &= s == 29 * 46080;

    let dims = h_isotypic_dims().unwrap();
    pass &= dims.iter().find(|(v, _)| *v == 0).unwrap().1 == 30;
    pass &= dims.iter().filter(|(v, _)| *v != 0).all(|(_, d)| *d == 18);
    pass &= dims.iter().map(|(_, d)| d).sum::<i64>() == 300;
    verdict(3, "<tX,tX> = 28, <tS,tS> = 29, tX(e) = 300, tS(e) = 301, isotypic dims 30 / 15 x 18", pass);
}

#[test]
fn criterion_04_w_hecke_pipeline() {
    let fx = FixtureSet::load_default().unwrap();
    let mut pass = true;
    for p in primes_in(7, 200) {
        let w = count_over_prime(VarietyId::W, p, Kernel::Naive).unwrap().count;
        let a_w = a_from_w(w, p, 1).unwrap();
        let a_h = hecke_ap(p).unwrap();
        pass &= a_w == a_h;
        if let Some(t) = fx.get(FormLabel::HeckeW, p) {
            pass &= a_w == t;
        }
    }
    let w17 = hecke_witness(17).unwrap().unwrap();
    pass &= w17.trace() == 14 && (w17.a, w17.b) == (11, -8) || (w17.a, w17.b) == (3, 8);
    pass &= hecke_ap(17).unwrap() == 14;
    verdict(4, "a_p from #W equals the Hecke character for all p in 7..200, matching the table", pass);
}

#[test]
fn criterion_05_cross_surface_consistency() {
    let mut pass = true;
    for p in primes_in(7, 100) {
        let a_h = hecke_ap(p).unwrap();
        let sbar = count_over_prime(VarietyId::Sbar, p, Kernel::Naive).unwrap().count;
        pass &= a_from_sbar(sbar, p).unwrap() == a_h;
        let u = count_over_prime(VarietyId::U, p, Kernel::Naive).unwrap().count;
        pass &= a_from_u(u, p).unwrap() == a_h;
    }
    verdict(5, "the same a_p from #Sbar and from #U (+30p node correction) for all p in 7..100", pass);
}

#[test]
fn criterion_06_w7_tower() {
    let fx = FixtureSet::load_default().unwrap();
    let mut pass = true;
    let mut b_of: BTreeMap<u64, i64> = BTreeMap::new();
    for p in primes_in(7, 100) {
        let a_q = hecke_ap(p).unwrap();
        let s = count_over_prime(VarietyId::S, p, Kernel::Naive).unwrap().count;
        let b = b_from_s(s, p, 1, a_q).unwrap();
        b_of.insert(p, b);
        if let Some(t) = fx.get(FormLabel::BpW7, p) {
            pass &= b == t;
        }
    }
    // epsilon via the two-power relation, confirmed by F_{p^2} counts
    for p in [7u64, 11, 13] {
        let ctx = build_ext(p, 2).unwrap();
        let s2 = count_points(VarietyId::S, &ctx, Kernel::Structured).unwrap().count;
        let a_q2 = hecke_prime_power(p, 2).unwrap();
        let b2 = b_from_s(s2, p, 2, a_q2).unwrap();
        let (eps, flagged, f) = epsilon_and_charpoly(b_of[&p], b2, p).unwrap();
        pass &= !flagged;
        pass &= eps == sigma_abc(1, 0, 1, p);
        let x = eps * p as i64;
        pass &= f[0] + f[1] * x + f[2] * x * x + f[3] * x * x * x == 0;
    }
    // for the remaining primes: eps = sigma_{1,0,1} must be Weil-admissible
    for (&p, &b) in &b_of {
        if b == 0 {
            continue;
        }
        let eps = sigma_abc(1, 0, 1, p);
        pass &= (b - eps * p as i64).abs() <= 2 * p as i64;
    }
    // 2(a - b) b_11 = -78 with (a, b) = (9, 6): the count-side residue at 11
    {
        let p = 11u64;
        let s = count_over_prime(VarietyId::S, p, Kernel::Naive).unwrap().count;
        let a_q = hecke_ap(p).unwrap();
        let residue = s as i64 - 1 - 5 * a_q - maschke_core::lefschetz::tr_ls(p, 1) - (p * p) as i64;
        pass &= residue == -78;
        pass &= 2 * (9 - 6) * b_of[&p] == -78;
    }
    // CM exclusion from p in {13, 17, 29}
    let wit: Vec<(u64, i64, i64)> = [13u64, 17, 29]
        .iter()
        .map(|&p| (p, b_of[&p], sigma_abc(1, 0, 1, p)))
        .collect();
    pass &= matches!(cm_exclusion(&wit).unwrap(), CmVerdict::Excluded { .. });
    verdict(6, "b_p table, epsilon_p = sigma_{1,0,1}, b_{p^2} confirmation, -78 residue, CM excluded", pass);
}

#[test]
fn criterion_07_yhat_trace_table() {
    let fx = FixtureSet::load_default().unwrap();
    let mut pass = true;
    // prime rows of the table
    for p in [7u64, 11, 13, 17, 19, 23, 29] {
        let y = count_over_prime(VarietyId::Y, p, Kernel::Naive).unwrap().count;
        let tr = tr_yhat_from_y(y, p, 1).unwrap();
        pass &= tr == fx.get(FormLabel::TrYhat, p).unwrap();
    }
    // prime-power rows q = 49, 361
    for (p, q) in [(7u64, 49u64), (19, 361)] {
        let ctx = build_ext(p, 2).unwrap();
        let y = count_points(VarietyId::Y, &ctx, Kernel::Naive).unwrap().count;
        let tr = tr_yhat_from_y(y, p, 2).unwrap();
        pass &= tr == fx.get(FormLabel::TrYhat, q).unwrap();
    }
    // modular expression a_p + p(9 b_p + 5 c_p) at every covered prime <= 97
    for p in fx.common_primes(&[FormLabel::F120, FormLabel::F24B, FormLabel::F120E]) {
        if p > 97 {
            continue;
        }
        let y = count_over_prime(VarietyId::Y, p, Kernel::Naive).unwrap().count;
        let tr = tr_yhat_from_y(y, p, 1).unwrap();
        let want = fx.get(FormLabel::F120, p).unwrap()
            + p as i64
                * (9 * fx.get(FormLabel::F24B, p).unwrap()
                    + 5 * fx.get(FormLabel::F120E, p).unwrap());
        pass &= tr == want;
    }
    verdict(7, "tr H^3(Yhat) matches the table at q in {7..29, 49, 361} and the modular form data", pass);
}

#[test]
fn criterion_08_x_conjecture() {
    let fx = FixtureSet::load_default().unwrap();
    let mut pass = true;
    let mut formula_checked = 0;
    for p in primes_in(7, 100) {
        let x = count_over_prime(VarietyId::X, p, Kernel::Naive).unwrap().count;
        let y = count_over_prime(VarietyId::Y, p, Kernel::Naive).unwrap().count;
        // the count formula at every fixture-covered prime
        if let Some(want) = predicted_x_count(&fx, p) {
            pass &= x as i64 == want;
            formula_checked += 1;
        }
        // 45-divisibility of tr(F_q|H^3_c) for q = 1 mod 4
        if p % 4 == 1 {
            pass &= (y as i128 - x as i128) % 45 == 0;
        }
    }
    pass &= formula_checked >= 12;

    // sextic-split inference
    let core_at = |p: u64, k: u32| -> (i64, u64) {
        let ctx = build_ext(p, k).unwrap();
        let x = count_points(VarietyId::X, &ctx, Kernel::Naive).unwrap().count;
        let y = count_points(VarietyId::Y, &ctx, Kernel::Naive).unwrap().count;
        (t_core_from_counts(x, y, p, k).unwrap(), x)
    };
    for p in [13u64, 17, 29, 37, 41] {
        let (t1, _) = core_at(p, 1);
        let (t2, _) = core_at(p, 2);
        let split = infer_sextic_split(t1, t2, p).unwrap();
        if let (Some(b), Some(c), Some(d)) = (
            fx.get(FormLabel::F24B, p),
            fx.get(FormLabel::F120E, p),
            fx.get(FormLabel::F15C, p),
        ) {
            let mut want = [b, c, d];
            want.sort_unstable();
            pass &= split.factors == want;
        } else {
            // beyond the printed tables: pin b_p through the proven C3
            // decomposition and the c_p + d_p sum through the Prym trace
            let nc3 = count_over_prime(VarietyId::C3, p, Kernel::Naive).unwrap().count;
            let b = (1 + p as i64 - nc3 as i64) / (2 + sigma_abc(1, 0, 0, p));
            let (ncp, nct) = count_curve_pair(p).unwrap();
            // p = 1 mod 4: prym = 12b + 6c + 6d
            let prym = ncp as i64 - nct as i64;
            let cd_sum = (prym - 12 * b) / 6;
            pass &= (prym - 12 * b) % 6 == 0;
            let mut fs = split.factors.to_vec();
            let Some(pos) = fs.iter().position(|&m| m == b) else {
                panic!("criterion 8: C3-derived b_p = {b} absent from split {fs:?} at p = {p}");
            };
            fs.remove(pos);
            pass &= fs[0] + fs[1] == cd_sum;
        }
    }
    verdict(8, "#X formula 7..100, 45-divisibility, sextic splits at {13,17,29,37,41}", pass);
}

#[test]
fn criterion_09_curves() {
    let fx = FixtureSet::load_default().unwrap();
    let mut pass = true;
    let mut formula_hits = 0;
    for p in primes_in(7, 1000) {
        let (ncp, nct) = count_curve_pair(p).unwrap();
        let prym = ncp as i64 - nct as i64;
        // fixture-free consistency over the whole range
        pass &= (prym as i128).pow(2) <= (48u64 * 48) as i128 * p as i128;
        let tr_cp = 1 + p as i64 - ncp as i64;
        pass &= (tr_cp as i128).pow(2) <= (18u64 * 18) as i128 * p as i128;
        let c3 = count_over_prime(VarietyId::C3, p, Kernel::Naive).unwrap().count;
        let cb = count_over_prime(VarietyId::Cbar, p, Kernel::Naive).unwrap().count;
        let c7 = count_over_prime(VarietyId::C7, p, Kernel::Naive).unwrap().count;
        let c13 = count_over_prime(VarietyId::C13, p, Kernel::Naive).unwrap().count;
        pass &= c13 + 2 * (p + 1) == cb + c3 + c7;
        // fixture identities at the covered primes
        let s = sigma_abc(1, 0, 0, p);
        if let (Some(b), Some(c), Some(d)) = (
            fx.get(FormLabel::F24B, p),
            fx.get(FormLabel::F120E, p),
            fx.get(FormLabel::F15C, p),
        ) {
            pass &= prym == (9 + 3 * s) * b + (5 + s) * c + (4 + 2 * s) * d;
            formula_hits += 1;
        }
        if let (Some(bp), Some(cp), Some(dp)) = (
            fx.get(FormLabel::F210, p),
            fx.get(FormLabel::F840, p),
            fx.get(FormLabel::F1680, p),
        ) {
            pass &= tr_cp == 3 * bp + (2 + s) * cp + (1 + 2 * s) * dp;
        }
        if let Some(b) = fx.get(FormLabel::F24B, p) {
            let tr_c3 = 1 + p as i64 - c3 as i64;
            pass &= tr_c3 == (2 + s) * b;
        }
    }
    pass &= formula_hits >= 12;
    verdict(9, "Prym trace, H^1(C+) and H^1(C3) decompositions at all covered primes in 7..1000", pass);
}

#[test]
fn criterion_10_lines() {
    let ctx = build_ext(61, 1).unwrap();
    let enumerated = nslattice::enumerate_lines(&ctx).unwrap();
    let mut pass = enumerated.len() == 352;
    let (orb, n3, n5) = nslattice::lines_by_orbits(&ctx).unwrap();
    pass &= orb == enumerated;
    pass &= n3 == 160 && n5 == 192;
    let (_gram, rank) = nslattice::gram_and_rank(&ctx, &enumerated);
    pass &= rank.rank == 202;
    pass &= rank.modular.iter().all(|&(_, r)| r == 202);
    let gd = nslattice::galois_multiplicities().unwrap();
    // index abc in binary: 011 and 111 must vanish
    pass &= gd.multiplicities == [44, 28, 28, 0, 42, 33, 27, 0];
    pass &= gd.multiplicities.iter().sum::<i64>() == 202;
    // p = 1 mod 60: the Frobenius fixes every line, trace = rank
    pass &= gd.traces.contains(&(61, 202));
    verdict(10, "352 lines over F_61, orbits 160 + 192, Gram rank 202, multiplicities (44,28,28,42,33,27)", pass);
}

#[test]
fn criterion_11_symbolic_suite() {
    let mut pass = true;
    for check in tangent::run_all_checks().unwrap() {
        if !check.pass {
            eprintln!("symbolic check {} failed: {}", check.id, check.witness);
        }
        pass &= check.pass;
    }
    let genus = tangent::curve_invariants().unwrap();
    pass &= genus.g_cplus == 9
        && genus.g_ctilde == 33
        && genus.g_c3 == 3
        && genus.g_cbar == 3
        && genus.branch_points == 32;
    verdict(11, "all symbolic identities (ABC..QUOT) and the genus report (9, 33, 3, 3)", pass);
}

#[test]
fn criterion_12_kernel_equivalence() {
    let mut pass = true;
    for (p, k) in [(7u64, 1u32), (11, 1), (13, 1), (7, 2), (11, 2)] {
        let ctx = build_ext(p, k).unwrap();
        let naive = count_points(VarietyId::S, &ctx, Kernel::Naive).unwrap().count;
        let structured = count_points(VarietyId::S, &ctx, Kernel::Structured).unwrap().count;
        pass &= naive == structured;
    }
    for p in [7u64, 11] {
        let ctx = build_ext(p, 1).unwrap();
        let direct = oracle::count_x_weighted(&ctx);
        let weighted = count_points(VarietyId::X, &ctx, Kernel::Naive).unwrap().count;
        pass &= direct == weighted;
    }
    verdict(12, "structured = naive on S for q in {7,11,13,49,121}; double cover = direct enumeration", pass);
}
