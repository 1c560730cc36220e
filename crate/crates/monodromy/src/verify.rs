//! The bundled verification suite: every identity, script, and property
//! check the toolkit certifies, as named pass/fail items. The CLI's
//! `verify-paper` command runs this list; the acceptance test asserts it.

use crate::artin::{artin_action, braids_equal};
use crate::bmf::{build_bmf, counts, express_factor, CountsReport, FactorKind};
use crate::braid::{delta4, BraidWord};
use crate::homology::{
    basis_dim, class_of_arc, compare_surfaces, gamma_generator_classes, gram_matrix,
    homology_basis, orbits_separated, quad_form, rho, symmetry_orbit, transvection,
    CompareVerdict, GF2Vector,
};
use crate::hurwitz::{
    builtin_chains, centralizes, cusp_cluster_normal_form, is_admissible_pair,
    verify_script, vt_cluster_factorization, Move, StructuredTwist,
};
use crate::layout::{half_twist, liftability_class, ArcId, Layout, SurfaceParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

pub const DEFAULT_SEED: u64 = 0x5eed_cab1e;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

type CheckFn = fn(&mut ChaCha8Rng) -> Result<(), String>;

fn run_check(name: &'static str, rng: &mut ChaCha8Rng, f: CheckFn) -> CheckResult {
    let start = Instant::now();
    let outcome = f(rng);
    CheckResult {
        name,
        passed: outcome.is_ok(),
        detail: outcome.err().unwrap_or_default(),
        millis: start.elapsed().as_millis(),
    }
}

/// Run the whole suite. The seed only affects the randomized property
/// checks at the end of the list.
pub fn run_suite(seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let checks: [(&'static str, CheckFn); 14] = [
        ("cusp-cluster product identity", check_cusp_product),
        ("cusp-cluster equivalence chains", check_cusp_chains),
        ("vt-cluster product, chain and centralizer", check_vt_cluster),
        ("stabilization chain for full-twist conjugation", check_stabilization),
        ("vt-cluster linking numbers and exponent bookkeeping", check_linking),
        ("count formulas on the parameter grid", check_count_grid),
        ("triangle and quadrangle relations", check_triangle_quadrangle),
        ("GF(2) forms suite", check_gf2_suite),
        ("rho invariance and node-orbit separation", check_rho_suite),
        ("stable-invariant comparison on the abc family", check_comparison_grid),
        ("liftability table", check_liftability_table),
        ("random words: action is a homomorphism", check_random_homomorphism),
        ("random words: conjugation invariants", check_random_conjugation),
        ("factor expressibility in the monodromy generators", check_expressibility),
    ];
    checks
        .into_iter()
        .map(|(name, f)| run_check(name, &mut rng, f))
        .collect()
}

fn fail(msg: String) -> Result<(), String> {
    Err(msg)
}

fn w4(s: &str) -> BraidWord {
    BraidWord::parse(4, s).expect("static word")
}

fn check_cusp_product(_: &mut ChaCha8Rng) -> Result<(), String> {
    let product = cusp_cluster_normal_form().product();
    let claimed = w4("s2 s2 s2 s1 s3 s2 s1 s1 s3 s3");
    if braids_equal(&product, &claimed).map_err(|e| e.to_string())? {
        Ok(())
    } else {
        fail("four-factor product differs from s2^3 s1 s3 s2 s1^2 s3^2".into())
    }
}

fn check_cusp_chains(_: &mut ChaCha8Rng) -> Result<(), String> {
    for chain in builtin_chains().iter().take(2) {
        if !verify_script(&chain.start, &chain.script, &chain.end).map_err(|e| e.to_string())? {
            return fail(format!("chain does not replay: {}", chain.name));
        }
    }
    Ok(())
}

fn check_vt_cluster(_: &mut ChaCha8Rng) -> Result<(), String> {
    let f = vt_cluster_factorization();
    let target = delta4(4)
        .compose(&w4("s1^-1 s1^-1 s3^-1 s3^-1"))
        .map_err(|e| e.to_string())?
        .pow(2);
    if !braids_equal(&f.product(), &target).map_err(|e| e.to_string())? {
        return fail("product differs from (Delta_4 s1^-2 s3^-2)^2".into());
    }
    let chain = &builtin_chains()[2];
    if !verify_script(&chain.start, &chain.script, &chain.end).map_err(|e| e.to_string())? {
        return fail("conjugation chain does not replay".into());
    }
    for g in [delta4(4), w4("s1")] {
        if !centralizes(&g, &target).map_err(|e| e.to_string())? {
            return fail(format!("{g} is not in the centralizer of the product"));
        }
    }
    Ok(())
}

fn check_stabilization(_: &mut ChaCha8Rng) -> Result<(), String> {
    let chain = &builtin_chains()[3];
    // the created word is the inverse pair of an admissible p-type full
    // twist: in the local four-strand cluster sigma_1 is the in-cable arc
    let layout = Layout::new(3, 3);
    let twist = StructuredTwist {
        arc: ArcId::P(1),
        exponent: -2,
    };
    if !is_admissible_pair(&layout, &twist).map_err(|e| e.to_string())? {
        return fail("the created full twist is not admissible".into());
    }
    let has_create = chain
        .script
        .moves
        .iter()
        .any(|m| matches!(m, Move::Create(..)));
    let has_cancel = chain
        .script
        .moves
        .iter()
        .any(|m| matches!(m, Move::Cancel(..)));
    let has_conj = chain
        .script
        .moves
        .iter()
        .any(|m| matches!(m, Move::ConjAll(..)));
    if !has_create || !has_cancel || has_conj {
        return fail("script must use creation/cancellation and no global conjugation".into());
    }
    if !verify_script(&chain.start, &chain.script, &chain.end).map_err(|e| e.to_string())? {
        return fail("stabilization chain does not replay".into());
    }
    Ok(())
}

fn check_linking(_: &mut ChaCha8Rng) -> Result<(), String> {
    // closure of s1^-4 s3^-4: two in-cable pairs of linking -2, zero across
    let word = BraidWord::gen_pow(4, 1, -4)
        .compose(&BraidWord::gen_pow(4, 3, -4))
        .map_err(|e| e.to_string())?;
    let (comps, lk) = word.linking_matrix();
    if comps.len() != 4 {
        return fail(format!("expected 4 closure components, got {}", comps.len()));
    }
    let comp_of = |s: usize| comps.iter().position(|c| c.contains(&s)).unwrap();
    for i in 1..=4usize {
        for j in i + 1..=4 {
            let (ci, cj) = (comp_of(i), comp_of(j));
            let within_cable = (i, j) == (1, 2) || (i, j) == (3, 4);
            let expected = if within_cable { -2 } else { 0 };
            if lk[ci][cj] != expected {
                return fail(format!(
                    "lk(strand {i}, strand {j}) = {}, want {expected}",
                    lk[ci][cj]
                ));
            }
        }
    }
    // exponent bookkeeping: the cluster product is Delta_4^2 s1^k s3^k' with
    // k + k' = -8
    let product = vt_cluster_factorization().product();
    let correction = delta4(4).pow(-2).compose(&product).map_err(|e| e.to_string())?;
    if correction.exponent_sum() != -8 {
        return fail(format!(
            "exponent of Delta_4^-2 * product is {}, want -8",
            correction.exponent_sum()
        ));
    }
    let k_form = BraidWord::gen_pow(4, 1, -4)
        .compose(&BraidWord::gen_pow(4, 3, -4))
        .map_err(|e| e.to_string())?;
    if !braids_equal(&correction, &k_form).map_err(|e| e.to_string())? {
        return fail("product is not Delta_4^2 s1^-4 s3^-4".into());
    }
    Ok(())
}

fn check_count_grid(_: &mut ChaCha8Rng) -> Result<(), String> {
    for a in 3..=6 {
        for b in 3..=6 {
            for c in 3..=6 {
                for d in 3..=6 {
                    let p = SurfaceParams::new(a, b, c, d).map_err(|e| e.to_string())?;
                    let f = build_bmf(p).map_err(|e| e.to_string())?;
                    let r = counts(&f).map_err(|e| e.to_string())?;
                    let expected = 8 * (a + c) * (4 * (b + d) - 1);
                    if f.product_exponent_sum() != expected {
                        return fail(format!(
                            "exponent sum {} != {expected} at ({a},{b},{c},{d})",
                            f.product_exponent_sum()
                        ));
                    }
                    if f.product_exponent_sum() != r.t + 3 * r.k + 2 * r.nu {
                        return fail(format!("t+3k+2nu mismatch at ({a},{b},{c},{d})"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_triangle_quadrangle(_: &mut ChaCha8Rng) -> Result<(), String> {
    // exhaustive on a layout with 12 punctures per family
    let layout = Layout::new(6, 6);
    let eq = |u: &BraidWord, v: &BraidWord| braids_equal(u, v).map_err(|e| e.to_string());
    type MkArc = fn(usize, usize) -> ArcId;
    let families: [(&str, MkArc); 4] = [
        ("a", ArcId::A as MkArc),
        ("b", ArcId::B as MkArc),
        ("c", ArcId::C as MkArc),
        ("d", ArcId::D as MkArc),
    ];
    for (name, mk) in families {
        let tw = |i: usize, j: usize| -> Result<BraidWord, String> {
            Ok(half_twist(&layout, mk(i, j))
                .map_err(|e| e.to_string())?
                .word())
        };
        for i in 1..=12usize {
            for j in i + 1..=12 {
                for k in j + 1..=12 {
                    let lhs = tw(i, j)?.compose(&tw(j, k)?).map_err(|e| e.to_string())?;
                    let rhs = tw(j, k)?.compose(&tw(i, k)?).map_err(|e| e.to_string())?;
                    if !eq(&lhs, &rhs)? {
                        return fail(format!("triangle relation fails on {name}({i},{j},{k})"));
                    }
                }
            }
        }
        for i in 1..=12usize {
            for j in i + 1..=12 {
                for k in j + 1..=12 {
                    for l in k + 1..=12 {
                        let (ij, jl, ik, kl) = (tw(i, j)?, tw(j, l)?, tw(i, k)?, tw(k, l)?);
                        let lhs = ij
                            .compose(&jl)
                            .and_then(|w| w.compose(&ik))
                            .map_err(|e| e.to_string())?;
                        let rhs = jl
                            .compose(&ik)
                            .and_then(|w| w.compose(&kl))
                            .map_err(|e| e.to_string())?;
                        if !eq(&lhs, &rhs)? {
                            return fail(format!(
                                "quadrangle relation fails on {name}({i},{j},{k},{l})"
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_gf2_suite(_: &mut ChaCha8Rng) -> Result<(), String> {
    for b in 3..=8 {
        for d in 3..=8 {
            let p = SurfaceParams::new(3, b, 3, d).map_err(|e| e.to_string())?;
            let n = basis_dim(p);
            if n != (4 * b + 4 * d - 4) as usize {
                return fail(format!("dimension {n} at (b,d)=({b},{d})"));
            }
            let g = gram_matrix(p);
            for i in 0..n {
                for j in 0..n {
                    let expected = i.abs_diff(j) == 1;
                    if g.get(i, j) != expected {
                        return fail(format!("Gram not tridiagonal at ({i},{j})"));
                    }
                }
            }
            if !g.is_invertible() {
                return fail(format!("Gram singular at (b,d)=({b},{d})"));
            }
            let q = quad_form(p);
            for k in 0..n {
                if !q.eval(&GF2Vector::unit(n, k)) {
                    return fail(format!("q = 0 on basis vector {k}"));
                }
            }
            for i in 0..n {
                for j in 0..n {
                    let (ei, ej) = (GF2Vector::unit(n, i), GF2Vector::unit(n, j));
                    if q.polarize(&ei, &ej) != g.get(i, j) {
                        return fail(format!("polarization fails at ({i},{j})"));
                    }
                }
            }
            let q_of = |arc: ArcId| -> Result<bool, String> {
                Ok(q.eval(&class_of_arc(p, arc).map_err(|e| e.to_string())?))
            };
            if !q_of(ArcId::A(1, 2))? {
                return fail("q(a~1) != 1".into());
            }
            if q_of(ArcId::A(2, 3))? {
                return fail("q(a~2) != 0".into());
            }
            if !q_of(ArcId::D(1, 2))? {
                return fail("q(d~1) != 1".into());
            }
        }
    }
    Ok(())
}

fn check_rho_suite(_: &mut ChaCha8Rng) -> Result<(), String> {
    for b in 3..=8 {
        for d in 3..=8 {
            let p = SurfaceParams::new(3, b, 3, d).map_err(|e| e.to_string())?;
            let n = basis_dim(p);
            let p_class = class_of_arc(p, ArcId::P(2 * b as usize)).map_err(|e| e.to_string())?;
            let q_class = class_of_arc(p, ArcId::Q(2 * d as usize)).map_err(|e| e.to_string())?;
            if rho(p, &p_class) {
                return fail(format!("rho(p~) != 0 at (b,d)=({b},{d})"));
            }
            if !rho(p, &q_class) {
                return fail(format!("rho(q~) != 1 at (b,d)=({b},{d})"));
            }
            for w in gamma_generator_classes(p).map_err(|e| e.to_string())? {
                let t = transvection(p, &w);
                for k in 0..n {
                    let e = GF2Vector::unit(n, k);
                    if rho(p, &t.apply(&e)) != rho(p, &e) {
                        return fail(format!(
                            "rho not invariant under a generator transvection at (b,d)=({b},{d})"
                        ));
                    }
                }
            }
            if !orbits_separated(p).map_err(|e| e.to_string())? {
                return fail(format!("orbits not separated at (b,d)=({b},{d})"));
            }
        }
    }
    Ok(())
}

fn check_comparison_grid(_: &mut ChaCha8Rng) -> Result<(), String> {
    for b in 3..=6 {
        for a in 3..=8i64 {
            for c in 3..=8i64 {
                for a2 in 3..=8i64 {
                    let c2 = a + c - a2;
                    if !(3..=8).contains(&c2) {
                        continue;
                    }
                    let p1 = SurfaceParams::new(a, b, c, b).map_err(|e| e.to_string())?;
                    let p2 = SurfaceParams::new(a2, b, c2, b).map_err(|e| e.to_string())?;
                    let (verdict, i1, i2) = compare_surfaces(p1, p2).map_err(|e| e.to_string())?;
                    let equivalent = symmetry_orbit(p1).contains(&p2);
                    let expected = if equivalent {
                        CompareVerdict::NotDistinguished
                    } else {
                        CompareVerdict::Distinguished
                    };
                    if verdict != expected {
                        return fail(format!(
                            "({a},{b},{c},{b}) vs ({a2},{b},{c2},{b}): got {verdict}, want {expected}; invariants {i1:?} vs {i2:?}"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_liftability_table(_: &mut ChaCha8Rng) -> Result<(), String> {
    for b in 3..=6 {
        for d in 3..=6 {
            let layout = Layout::new(b, d);
            for arc in layout.catalog() {
                let expected = match arc {
                    ArcId::A(..) | ArcId::B(..) | ArcId::C(..) | ArcId::D(..) | ArcId::S(..) => 1,
                    ArcId::P(_) | ArcId::Q(_) => 2,
                    ArcId::U(..) | ArcId::UPrime(..) | ArcId::USecond(..) => 3,
                };
                let got = liftability_class(&layout, arc).map_err(|e| e.to_string())?;
                if got != expected {
                    return fail(format!(
                        "liftability of {arc} at (b,d)=({b},{d}): got {got}, want {expected}"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> BraidWord {
    let letters: Vec<i32> = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(n, letters).expect("letters in range")
}

fn check_random_homomorphism(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..100 {
        let n = rng.gen_range(4..=8);
        let (lu, lv) = (rng.gen_range(0..12), rng.gen_range(0..12));
        let u = random_word(rng, n, lu);
        let v = random_word(rng, n, lv);
        let uv = u.compose(&v).map_err(|e| e.to_string())?;
        let lhs = artin_action(&uv).map_err(|e| e.to_string())?;
        let rhs = artin_action(&u)
            .map_err(|e| e.to_string())?
            .compose(&artin_action(&v).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        if lhs != rhs {
            return fail(format!(
                "artin_action(uv) != artin_action(u) o artin_action(v) for u={u}, v={v}"
            ));
        }
    }
    Ok(())
}

fn check_random_conjugation(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for _ in 0..60 {
        let n = rng.gen_range(4..=8);
        let (lw, lg) = (rng.gen_range(0..10), rng.gen_range(0..10));
        let w = random_word(rng, n, lw);
        let g = random_word(rng, n, lg);
        let conj = w.conjugate_by(&g).map_err(|e| e.to_string())?;
        if conj.exponent_sum() != w.exponent_sum() {
            return fail("exponent sum not conjugation invariant".into());
        }
        // linking matrix agrees up to the permutation of components by g:
        // strands of g w g^-1 start where g^-1 sends them
        let (comps_w, lk_w) = w.linking_matrix();
        let (comps_c, lk_c) = conj.linking_matrix();
        let perm = g.permutation().inverse();
        let relabel = |comp: &Vec<usize>| {
            let mut v: Vec<usize> = comp.iter().map(|&s| perm.apply(s)).collect();
            v.sort_unstable();
            v
        };
        let sorted = |comp: &Vec<usize>| {
            let mut v = comp.clone();
            v.sort_unstable();
            v
        };
        for (i1, c1) in comps_w.iter().enumerate() {
            for (i2, c2) in comps_w.iter().enumerate() {
                let d1 = comps_c.iter().position(|c| sorted(c) == relabel(c1)).unwrap();
                let d2 = comps_c.iter().position(|c| sorted(c) == relabel(c2)).unwrap();
                if lk_w[i1][i2] != lk_c[d1][d2] {
                    return fail(format!("linking not conjugation invariant for w={w}, g={g}"));
                }
            }
        }
        // permutation of any full twist is trivial
        let arc = rng.gen_range(1..n);
        let full = BraidWord::gen_pow(n, arc, 2)
            .conjugate_by(&g)
            .map_err(|e| e.to_string())?;
        if !full.permutation().is_identity() {
            return fail("full twist with nontrivial permutation".into());
        }
    }
    Ok(())
}

fn check_expressibility(_: &mut ChaCha8Rng) -> Result<(), String> {
    for p in [
        SurfaceParams::new(3, 3, 3, 3).unwrap(),
        SurfaceParams::new(3, 3, 4, 3).unwrap(),
    ] {
        let f = build_bmf(p).map_err(|e| e.to_string())?;
        let mut checked = std::collections::HashSet::new();
        for factor in &f.factors {
            let sig = (factor.kind, factor.arc.family_name());
            if !checked.insert(sig) {
                continue;
            }
            match express_factor(p, factor) {
                Some(witness) => {
                    if !braids_equal(&factor.word, &witness).map_err(|e| e.to_string())? {
                        return fail(format!(
                            "witness mismatch for {} on {}",
                            factor.kind.name(),
                            factor.arc
                        ));
                    }
                }
                None => {
                    // only the unprimed u cubes have no constructive chain;
                    // for those the block product relation stands in
                    if !(matches!(factor.arc, ArcId::U(..)) && factor.kind == FactorKind::Cusp) {
                        return fail(format!(
                            "missing witness for {} on {}",
                            factor.kind.name(),
                            factor.arc
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Key=value lines of the counts report for the CLI.
pub fn report_text(params: SurfaceParams) -> Result<String, String> {
    let f = build_bmf(params).map_err(|e| e.to_string())?;
    let r = counts(&f).map_err(|e| e.to_string())?;
    Ok(r.to_text())
}

/// Report computed from the closed formulas alone.
pub fn report_from_formulas(params: SurfaceParams) -> CountsReport {
    CountsReport::from_formulas(params)
}

/// Basis labels, for diagnostics.
pub fn basis_labels(params: SurfaceParams) -> Vec<String> {
    homology_basis(params).iter().map(|a| a.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_is_deterministic() {
        // the full suite runs in the acceptance tests; here only determinism
        // of the randomized tail is checked
        let mut r1 = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
        let mut r2 = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
        assert_eq!(
            check_random_homomorphism(&mut r1),
            check_random_homomorphism(&mut r2)
        );
        assert_eq!(
            check_random_conjugation(&mut r1),
            check_random_conjugation(&mut r2)
        );
    }
}
