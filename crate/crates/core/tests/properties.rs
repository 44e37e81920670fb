//! Randomized invariants and counting oracles.

use proptest::prelude::*;

use vertexkernel::coalgebra::{counit_state, delta_state};
use vertexkernel::constructions::{Alpha, SemigroupL, BL};
use vertexkernel::current::{bracket, bracket_combo, Mode};
use vertexkernel::divided::{dp_delta, dp_product, DividedPowerBasis};
use vertexkernel::json;
use vertexkernel::vertex::{check_commutator_formula, check_skew_symmetry, Coalgebra, VertexAlgebra};
use vertexkernel::vla::{builtin_heisenberg, builtin_virasoro};
use vertexkernel::{Enveloping, LinComb, Presentation, Rational, State, Window};

fn vir_mode() -> impl Strategy<Value = Mode> {
    let p = builtin_virasoro();
    let l = p.gen_id("L").unwrap();
    let c = p.gen_id("c").unwrap();
    prop_oneof![
        6 => (-4i64..=3).prop_map(move |n| Mode::new(l, n)),
        1 => Just(Mode::new(c, -1)),
    ]
}

fn heis_mode() -> impl Strategy<Value = Mode> {
    let p = builtin_heisenberg(2).unwrap();
    let ids: Vec<_> = p.gen_ids().collect();
    (0..ids.len(), -3i64..=2).prop_map(move |(i, n)| {
        let g = ids[i];
        if p.is_torsion(g) {
            Mode::new(g, -1)
        } else {
            Mode::new(g, n)
        }
    })
}

/// In `U(𝓛)`: `⋯ x y ⋯ 𝟙 = ⋯ y x ⋯ 𝟙 + ⋯ [x,y] ⋯ 𝟙`, computed with
/// the independent straightening of every side.
fn transposition_holds(e: &Enveloping, modes: &[Mode], i: usize) -> bool {
    let i = i % (modes.len() - 1);
    let lhs = e.straighten(modes);
    let mut swapped = modes.to_vec();
    swapped.swap(i, i + 1);
    let mut rhs = e.straighten(&swapped);
    for (m, c) in &bracket(e.presentation(), &modes[i], &modes[i + 1]) {
        let mut w = modes[..i].to_vec();
        w.push(*m);
        w.extend_from_slice(&modes[i + 2..]);
        rhs.add_scaled(&e.straighten(&w), c);
    }
    lhs == rhs
}

fn random_state(e: &Enveloping, picks: &[(usize, i64)], max_weight: i64) -> State {
    let basis = e.basis_states(max_weight, 1);
    let mut out = State::zero();
    for &(i, c) in picks {
        out.add_scaled(&basis[i % basis.len()], &Rational::from_int(c));
    }
    out
}

fn partitions_colored(n: usize, colors: usize, min_part: usize) -> usize {
    let mut ways = vec![0usize; n + 1];
    ways[0] = 1;
    for part in min_part..=n {
        for _ in 0..colors {
            for total in part..=n {
                ways[total] += ways[total - part];
            }
        }
    }
    ways[n]
}

#[test]
fn heisenberg_dims_match_colored_partitions() {
    for r in 1..=2 {
        let e = Enveloping::new(builtin_heisenberg(r).unwrap());
        for d in 0..=7 {
            assert_eq!(e.graded_dimension(d, 0), partitions_colored(d as usize, r, 1), "rank {r} weight {d}");
        }
    }
}

#[test]
fn torsion_degree_adds_central_powers() {
    // With k copies of c(-1) allowed the weight-d piece is a sum over j ≤ k
    // of the torsion-free piece.
    let e = Enveloping::new(builtin_virasoro());
    for d in 0..=6 {
        let base = e.graded_dimension(d, 0);
        for k in 0..=3 {
            assert_eq!(e.graded_dimension(d, k), base * (k + 1));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pbw_straightening_is_confluent(modes in prop::collection::vec(vir_mode(), 2..5), i in 0usize..8) {
        let e = Enveloping::new(builtin_virasoro());
        prop_assert!(transposition_holds(&e, &modes, i));
    }

    #[test]
    fn pbw_straightening_is_confluent_heisenberg(modes in prop::collection::vec(heis_mode(), 2..5), i in 0usize..8) {
        let e = Enveloping::new(builtin_heisenberg(2).unwrap());
        prop_assert!(transposition_holds(&e, &modes, i));
    }

    #[test]
    fn bracket_is_antisymmetric_and_graded(a in vir_mode(), b in vir_mode()) {
        let p = builtin_virasoro();
        let ab = bracket(&p, &a, &b);
        let ba = bracket(&p, &b, &a);
        prop_assert!((ab.clone() + ba).is_zero());
        let w = p.mode_weight(&a) + p.mode_weight(&b);
        prop_assert!(ab.keys().all(|m| p.mode_weight(m) == w));
    }

    #[test]
    fn bracket_jacobi(a in vir_mode(), b in vir_mode(), c in vir_mode()) {
        let p = builtin_virasoro();
        let x = |m: Mode| LinComb::basis(m);
        let t1 = bracket_combo(&p, &x(a), &bracket(&p, &b, &c));
        let t2 = bracket_combo(&p, &x(b), &bracket(&p, &c, &a));
        let t3 = bracket_combo(&p, &x(c), &bracket(&p, &a, &b));
        prop_assert!((t1 + t2 + t3).is_zero());
    }

    #[test]
    fn skew_and_commutator_on_random_states(
        u in prop::collection::vec((0usize..40, -3i64..=3), 1..3),
        v in prop::collection::vec((0usize..40, -3i64..=3), 1..3),
        w in prop::collection::vec((0usize..40, -3i64..=3), 1..3),
    ) {
        let e = Enveloping::new(builtin_virasoro());
        let (u, v, w) = (random_state(&e, &u, 4), random_state(&e, &v, 4), random_state(&e, &w, 3));
        let win = Window::symmetric(2);
        prop_assert!(check_skew_symmetry(&e, &u, &v, win).passed);
        prop_assert!(check_commutator_formula(&e, &u, &v, &w, win, win).passed);
    }

    #[test]
    fn delta_is_coassociative_and_counital(picks in prop::collection::vec((0usize..60, -4i64..=4), 1..4)) {
        let e = Enveloping::new(builtin_heisenberg(1).unwrap());
        let v = random_state(&e, &picks, 5);
        let d = delta_state(&e, &v);
        let left = d.flat_map(|(a, b)| {
            e.delta_basis(a).map_keys(|(x, y)| (x.clone(), y.clone(), b.clone()))
        });
        let right = d.flat_map(|(a, b)| {
            e.delta_basis(b).map_keys(|(x, y)| (a.clone(), x.clone(), y.clone()))
        });
        prop_assert_eq!(left, right);
        let mut back = State::zero();
        for ((a, b), c) in &d {
            back.add_scaled(&State::basis(b.clone()), &(e.counit_basis(a) * c));
        }
        prop_assert_eq!(back, v.clone());
        let eps = counit_state(&e, &v);
        prop_assert_eq!(eps, v.coeff(&vertexkernel::PbwWord::vacuum()));
    }

    #[test]
    fn divided_powers_associative_and_multiplicative(
        f in prop::collection::vec(0u32..3, 2),
        g in prop::collection::vec(0u32..3, 2),
        h in prop::collection::vec(0u32..3, 2),
    ) {
        let mk = |v: &[u32]| DividedPowerBasis::from_exponents(v.iter().enumerate().map(|(i, &k)| (i, k)));
        let (f, g, h) = (mk(&f), mk(&g), mk(&h));
        let (c1, fg) = dp_product(&f, &g);
        let (c2, fgh) = dp_product(&fg, &h);
        let (c3, gh) = dp_product(&g, &h);
        let (c4, fgh2) = dp_product(&f, &gh);
        prop_assert_eq!(&fgh, &fgh2);
        prop_assert_eq!(c1 * c2, c3 * c4);
        // Δ(fg) = Δ(f)Δ(g)
        let lhs = dp_delta(&fg).scale(&dp_product(&f, &g).0);
        let mut rhs = LinComb::zero();
        for ((a, b), x) in &dp_delta(&f) {
            for ((c, d), y) in &dp_delta(&g) {
                let (p, ac) = dp_product(a, c);
                let (q, bd) = dp_product(b, d);
                rhs.add_term((ac, bd), x.clone() * y.clone() * p * q);
            }
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bl_partial_is_a_derivation(
        a in prop::collection::vec((0usize..2, 1u32..4), 0..3),
        b in prop::collection::vec((0usize..2, 1u32..4), 0..3),
        x in -2i64..=2,
        y in -2i64..=2,
    ) {
        let bl = BL::new(SemigroupL::new(2, true)).unwrap();
        let mono = |fs: &[(usize, u32)], s: i64| {
            fs.iter().fold(bl.e(&Alpha(vec![s, -s])), |acc, &(i, n)| bl.multiply(&acc, &bl.h(i, n)))
        };
        let (u, v) = (mono(&a, x), mono(&b, y));
        let lhs = bl.partial(&bl.multiply(&u, &v));
        let rhs = bl.multiply(&bl.partial(&u), &v) + bl.multiply(&u, &bl.partial(&v));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(bl.multiply(&u, &v), bl.multiply(&v, &u));
        prop_assert_eq!(bl.mode(&u, -1, &v), bl.multiply(&u, &v));
    }

    #[test]
    fn rationals_round_trip_through_json(p in -1000i64..1000, q in 1i64..1000) {
        let r = Rational::new(p, q);
        let s = serde_json::to_string(&r).unwrap();
        let back: Rational = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn random_presentations_round_trip(w1 in 1u32..4, w2 in 1u32..4, coeff in -5i64..=5, d in 0u32..2) {
        // a table that need not satisfy the axioms still serializes losslessly
        let n = (w1 + w2 - 1) as i64 - (w1 as i64 + d as i64);
        let mut b = Presentation::builder().generator("a", w1, false).generator("b", w2, false).generator("k", 0, true);
        if n >= 0 && coeff != 0 {
            b = b.product("b", "a", n, &[(Rational::from_int(coeff), d, "a")]);
        }
        let p = b.build().unwrap();
        let text = json::presentation_to_string(&p);
        prop_assert_eq!(json::parse_presentation(&text).unwrap(), p);
    }
}
