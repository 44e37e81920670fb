//! Acceptance criteria, one line per criterion.
//!
//! Runs as a plain binary so the PASS/FAIL lines are always visible under
//! `cargo test`. A criterion may be marked as a known red only when the
//! computed failure matches the documented mathematical obstruction; any
//! other failure exits nonzero.

use std::time::{Duration, Instant};

use vertexkernel::coalgebra::{
    check_coassociativity, check_cocommutativity, delta_morphism_tally, group_like_scan, primitive_subspace,
};
use vertexkernel::constructions::bl::{check_bl_bialgebra, check_bl_equals_tensor_phi};
use vertexkernel::constructions::grouplike::check_group_like_semigroup;
use vertexkernel::constructions::morphism::{extend_universal_morphism, induced_vertex_morphism};
use vertexkernel::constructions::tensor_phi::check_eminus_conjugation;
use vertexkernel::constructions::{Alpha, PhiMap, SemigroupL, TensorPhi, BL};
use vertexkernel::divided::{check_dp_bialgebra, check_psi_coalgebra_morphism, LieAlgebra};
use vertexkernel::report::Tally;
use vertexkernel::text::parse_state;
use vertexkernel::vertex::{commutator_tally, jacobi_tally, skew_tally};
use vertexkernel::vla::{builtin_abelian, builtin_heisenberg, builtin_virasoro};
use vertexkernel::{Enveloping, Presentation, Rational, State, Window};

struct Outcome {
    pass: bool,
    /// Failure explained by a documented obstruction.
    known_red: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, known_red: false, detail: detail.into() }
    }
}

/// Number of partitions of `n` into parts `≥ min_part`, by the standard
/// recurrence over the largest allowed part.
fn partitions_min_part(n: usize, min_part: usize) -> usize {
    let mut ways = vec![0usize; n + 1];
    ways[0] = 1;
    for part in min_part..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

/// `dim C_d` read off the presentation: `𝒟^k g` has weight `wt(g) + k`,
/// torsion generators only at `k = 0`.
fn vla_dim(p: &Presentation, d: i64) -> usize {
    p.gen_ids()
        .filter(|&g| {
            let w = p.weight(g);
            if p.is_torsion(g) {
                w == d
            } else {
                d >= w
            }
        })
        .count()
}

fn states(e: &Enveloping, max_weight: i64, k: usize) -> Vec<State> {
    e.basis_states(max_weight, k)
}

fn criterion_1() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    let mut algebras = vec![("virasoro".to_string(), builtin_virasoro())];
    for r in 1..=2 {
        algebras.push((format!("heisenberg({r})"), builtin_heisenberg(r).unwrap()));
    }
    for d in 1..=3 {
        algebras.push((format!("abelian({d})"), builtin_abelian(d).unwrap()));
    }
    for (name, p) in &algebras {
        let rep = p.validate();
        if !rep.passed() {
            ok = false;
            notes.push(format!("{name} rejected: {}", rep.first_failure().unwrap().id));
        }
    }

    let vir = builtin_virasoro();
    let mut uncaught = Vec::new();
    let mut caught = 0;
    for (&(l, r, n), entry) in vir.products() {
        for (key, c) in entry {
            for new in [c + &Rational::one(), c.clone() * Rational::from_int(2), Rational::zero()] {
                let mut changed = entry.clone();
                changed.add_term(*key, new.clone() - c.clone());
                let bad = vir.with_product(l, r, n, changed);
                let rep = bad.validate();
                match rep.first_failure() {
                    Some(f) if f.witness.is_some() => caught += 1,
                    _ => uncaught.push(format!("{}_{n}{}: {} → {new}", vir.name(l), vir.name(r), c)),
                }
            }
        }
    }
    let only_central = !uncaught.is_empty() && uncaught.iter().all(|u| u.starts_with("L_3L"));
    if !uncaught.is_empty() {
        notes.push(format!(
            "{caught} perturbations caught; not caught: {} (each still satisfies every axiom: a rescaled or zero central term)",
            uncaught.join(", ")
        ));
    }
    let pass = ok && uncaught.is_empty();
    let mut out = Outcome::new(pass, if notes.is_empty() { format!("{caught} perturbations caught") } else { notes.join("; ") });
    out.known_red = ok && only_central;
    out
}

fn criterion_2() -> Outcome {
    let e = Enveloping::new(builtin_virasoro());
    let got: Vec<usize> = (0..=8).map(|d| e.graded_dimension(d, 0)).collect();
    let oracle: Vec<usize> = (0..=8).map(|d| partitions_min_part(d, 2)).collect();
    let literal = vec![1, 0, 1, 1, 2, 2, 4, 4, 7];
    Outcome::new(got == oracle && got == literal, format!("dims {got:?}"))
}

fn criterion_3() -> Outcome {
    let mut bad = Vec::new();
    let vir = Enveloping::new(builtin_virasoro());
    for d in 1..=6 {
        let got = primitive_subspace(&vir, d, 0).len();
        if got != vla_dim(vir.presentation(), d) {
            bad.push(format!("virasoro wt {d}: {got}"));
        }
    }
    for k in 0..=1 {
        let got = primitive_subspace(&vir, 0, k).len();
        if got != k {
            bad.push(format!("virasoro wt 0, k={k}: {got}"));
        }
    }
    let ab = Enveloping::new(builtin_abelian(1).unwrap());
    for d in 1..=6 {
        let got = primitive_subspace(&ab, d, 0).len();
        if got != vla_dim(ab.presentation(), d) || got != 1 {
            bad.push(format!("abelian(1) wt {d}: {got}"));
        }
    }
    Outcome::new(bad.is_empty(), if bad.is_empty() { "matches dim C".into() } else { bad.join(", ") })
}

fn sweep_triples(e: &Enveloping, max_weight: i64, k: usize, f: impl Fn(&State, &State, &State) -> Tally + Sync) -> Tally {
    use rayon::prelude::*;
    let b = states(e, max_weight, k);
    let mut triples = Vec::new();
    for u in &b {
        for v in &b {
            triples.push((u.clone(), v.clone()));
        }
    }
    let parts: Vec<Tally> = triples
        .par_iter()
        .map(|(u, v)| {
            let mut t = Tally::new("sweep");
            for w in &b {
                t.absorb(f(u, v, w));
            }
            t
        })
        .collect();
    parts.into_iter().fold(Tally::new("sweep"), |mut acc, t| {
        acc.absorb(t);
        acc
    })
}

fn criterion_4() -> Outcome {
    let w = Window::symmetric(3);
    let mut details = Vec::new();
    let mut pass = true;
    for (name, p) in [("virasoro", builtin_virasoro()), ("heisenberg(1)", builtin_heisenberg(1).unwrap())] {
        let e = Enveloping::new(p);
        let r = sweep_triples(&e, 4, 1, |u, v, x| commutator_tally(&e, u, v, x, w, w)).finish();
        pass &= r.passed;
        details.push(format!("{name}: {} cases{}", r.cases, r.witness.map(|w| format!(" witness {w}")).unwrap_or_default()));
    }
    Outcome::new(pass, details.join("; "))
}

fn criterion_5() -> Outcome {
    let w = Window::symmetric(3);
    let mut details = Vec::new();
    let mut pass = true;
    for (name, p) in [("virasoro", builtin_virasoro()), ("heisenberg(1)", builtin_heisenberg(1).unwrap())] {
        let e = Enveloping::new(p);
        let b = states(&e, 3, 1);
        let mut skew = Tally::new("skew-symmetry");
        for u in &b {
            for v in &b {
                skew.absorb(skew_tally(&e, u, v, w));
            }
        }
        let skew = skew.finish();
        let jac = sweep_triples(&e, 3, 1, |u, v, x| jacobi_tally(&e, u, v, x, w)).finish();
        pass &= skew.passed && jac.passed;
        details.push(format!("{name}: skew {} cases, jacobi {} cases", skew.cases, jac.cases));
    }
    Outcome::new(pass, details.join("; "))
}

fn criterion_6() -> Outcome {
    let mut details = Vec::new();
    let mut pass = true;
    for (name, p) in [("virasoro", builtin_virasoro()), ("heisenberg(1)", builtin_heisenberg(1).unwrap())] {
        let e = Enveloping::new(p);
        let b = states(&e, 3, 1);
        let mut t = Tally::new("delta-vertex-morphism");
        for u in &b {
            for v in &b {
                for n in -3..=3 {
                    delta_morphism_tally(&e, u, n, v, &mut t);
                }
            }
        }
        let morph = t.finish();
        let keys: Vec<_> = states(&e, 5, 1).iter().map(|s| s.as_basis().unwrap().clone()).collect();
        let ca = check_coassociativity(&e, &keys);
        let cc = check_cocommutativity(&e, &keys);
        pass &= morph.passed && ca.passed && cc.passed;
        details.push(format!("{name}: {} morphism cases, {} basis keys", morph.cases, keys.len()));
    }
    Outcome::new(pass, details.join("; "))
}

fn criterion_7() -> Outcome {
    let bl = BL::new(SemigroupL::new(1, true)).unwrap();
    let eq = check_bl_equals_tensor_phi(&bl, 3, 2, Window::new(-4, 4));
    let bi = check_bl_bialgebra(&bl, 3, 2);
    let pass = eq.passed() && bi.passed();
    let failure = eq.first_failure().or(bi.first_failure()).map(|f| format!(" first failure {}", f.id));
    let cases: u64 = eq.checks.iter().chain(&bi.checks).map(|c| c.cases).sum();
    Outcome::new(pass, format!("{cases} cases{}", failure.unwrap_or_default()))
}

fn criterion_8() -> Outcome {
    let e = Enveloping::new(builtin_abelian(1).unwrap());
    let a = parse_state(&e, "h(-1)|0⟩").unwrap();
    let ws = states(&e, 2, 0);
    let mut t = Tally::new("eminus-conjugation");
    for w in &ws {
        t.absorb_check(check_eminus_conjugation(&e, &a, w, &ws, 3, Window::symmetric(3)));
    }
    let r = t.finish();
    Outcome::new(r.passed, format!("{} cases", r.cases))
}

fn criterion_9() -> Outcome {
    let p = builtin_abelian(1).unwrap();
    let h = p.gen_element(p.gen_id("h").unwrap());
    let tp = TensorPhi::new(Enveloping::new(p), SemigroupL::new(1, true), PhiMap::new(vec![h])).unwrap();
    let alphas = tp.semigroup().elements(3);
    let gs: Vec<_> = alphas.iter().map(|a| tp.group_like(a)).collect();
    let sample = tp.lift(&parse_state(tp.envelope(), "h(-2)|0⟩").unwrap(), &Alpha(vec![1]));
    let rep = check_group_like_semigroup(&tp, &gs, 4, &[sample], Window::new(-2, 1));
    let mut scan_ok = true;
    let mut scans = 0;
    for lo in -3..=-1 {
        let keys: Vec<_> = (lo..lo + 6).map(|x| (vertexkernel::PbwWord::vacuum(), Alpha(vec![x]))).collect();
        let found = group_like_scan(&tp, &keys).unwrap();
        let want: Vec<_> = keys.iter().map(|(_, a)| tp.group_like(a)).collect();
        scan_ok &= found.len() == want.len() && want.iter().all(|g| found.contains(g));
        scans += 1;
    }
    let pass = rep.passed() && scan_ok;
    Outcome::new(pass, format!("{} semigroup checks, {scans} scans of dimension 6", rep.checks.len()))
}

fn criterion_10() -> Outcome {
    let dp = check_dp_bialgebra(2, 4);
    let ab = check_psi_coalgebra_morphism(&LieAlgebra::abelian(2), 4);
    let aff = check_psi_coalgebra_morphism(&LieAlgebra::affine_line(), 4);
    Outcome::new(dp.passed() && ab.passed() && aff.passed(), format!("{} bialgebra checks", dp.checks.len()))
}

fn criterion_11() -> Outcome {
    let bz = BL::new(SemigroupL::new(1, true)).unwrap();
    let env = Enveloping::new(builtin_abelian(1).unwrap());
    let m = induced_vertex_morphism(&env, &bz, vec![bz.h(0, 1)]).unwrap();
    let induced = m.verify(3, 0, Window::symmetric(3));

    let two = bz.h(0, 1).scale(&Rational::from_int(2));
    let rescaled = extend_universal_morphism(&bz, &bz, |a| bz.e(&a.scale(2)), vec![two.clone()], 2);
    let rescaled_ok = rescaled.map(|f| f.verify(3, 1).passed()).unwrap_or(false);
    let rejected = matches!(
        extend_universal_morphism(&bz, &bz, |a| bz.e(a), vec![two], 2),
        Err(vertexkernel::Error::Incompatible(_))
    );
    let pass = induced.passed() && rescaled_ok && rejected;
    Outcome::new(pass, format!("induced {}, rescaled {rescaled_ok}, incompatible rejected {rejected}", induced.passed()))
}

fn main() {
    let criteria: Vec<(u32, u64, fn() -> Outcome)> = vec![
        (1, 5, criterion_1),
        (2, 5, criterion_2),
        (3, 10, criterion_3),
        (4, 60, criterion_4),
        (5, 120, criterion_5),
        (6, 60, criterion_6),
        (7, 30, criterion_7),
        (8, 10, criterion_8),
        (9, 30, criterion_9),
        (10, 10, criterion_10),
        (11, 10, criterion_11),
    ];
    let filter: Option<u32> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut unexpected = 0;
    for (n, budget, f) in criteria {
        if filter.is_some_and(|k| k != n) {
            continue;
        }
        let start = Instant::now();
        let mut out = f();
        let took = start.elapsed();
        if took > Duration::from_secs(budget) {
            out.pass = false;
            out.known_red = false;
            out.detail.push_str(&format!("; over the {budget}s budget"));
        }
        let status = if out.pass { "PASS" } else { "FAIL" };
        let tag = if !out.pass && out.known_red { " (known, see notes)" } else { "" };
        println!("criterion {n:>2}: {status}{tag} [{:.2}s] {}", took.as_secs_f64(), out.detail);
        if !out.pass && !out.known_red {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed");
        std::process::exit(1);
    }
}
