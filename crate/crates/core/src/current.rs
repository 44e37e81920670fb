//! The current Lie algebra `𝓛_C = (C ⊗ ℂ[t, t⁻¹]) / im 𝒟̂` of a vertex Lie algebra.

use crate::lincomb::LinComb;
use crate::report::{Tally, ValidationReport};
use crate::scalar::{binom_general, falling_factorial, Rational};
use crate::vla::{GenId, Presentation, VlaElement};

/// The class of `g ⊗ t^n` in `𝓛_C`, written `g(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mode {
    pub gen: GenId,
    pub n: i64,
}

impl Mode {
    pub fn new(gen: GenId, n: i64) -> Self {
        Mode { gen, n }
    }
}

pub type ModeCombo = LinComb<Mode>;

impl Presentation {
    /// `g(n)` as a canonical basis element, or `None` when it vanishes
    /// (torsion generators only survive at `n = -1`).
    pub fn canonical_mode(&self, gen: GenId, n: i64) -> Option<Mode> {
        if self.is_torsion(gen) && n != -1 {
            None
        } else {
            Some(Mode { gen, n })
        }
    }

    /// Weight of `g(n)`: `wt(g) - n - 1`.
    pub fn mode_weight(&self, m: &Mode) -> i64 {
        self.weight(m.gen) - m.n - 1
    }

    pub fn fmt_modes(&self, x: &ModeCombo) -> String {
        crate::text::format_modes(self, x)
    }
}

/// Rewrites `u(n)` for `u ∈ C` in terms of generator modes, using
/// `(𝒟u)(n) = -n·u(n-1)`.
pub fn mode_normalize(p: &Presentation, u: &VlaElement, n: i64) -> ModeCombo {
    let mut out = ModeCombo::zero();
    for (k, c) in u {
        let coeff = Rational::sign(k.d as i64) * falling_factorial(n, k.d as u64);
        if coeff.is_zero() {
            continue;
        }
        if let Some(m) = p.canonical_mode(k.gen, n - k.d as i64) {
            out.add_term(m, coeff * c);
        }
    }
    out
}

/// `[a(m), b(n)] = Σ_j binom(m, j) (a_j b)(m + n - j)`.
pub fn bracket(p: &Presentation, a: &Mode, b: &Mode) -> ModeCombo {
    let mut out = ModeCombo::zero();
    let Some(max) = p.max_table_n() else { return out };
    let (ua, ub) = (p.gen_element(a.gen), p.gen_element(b.gen));
    for j in 0..=max as i64 {
        let c = binom_general(a.n, j as u64);
        if c.is_zero() {
            continue;
        }
        let prod = p.nth_product(&ua, j, &ub);
        if prod.is_zero() {
            continue;
        }
        out.add_scaled(&mode_normalize(p, &prod, a.n + b.n - j), &c);
    }
    out
}

/// Bilinear extension of [`bracket`].
pub fn bracket_combo(p: &Presentation, x: &ModeCombo, y: &ModeCombo) -> ModeCombo {
    let mut out = ModeCombo::zero();
    for (a, ca) in x {
        for (b, cb) in y {
            out.add_scaled(&bracket(p, a, b), &(ca * cb));
        }
    }
    out
}

/// All canonical generator modes with `|n| ≤ window`.
pub fn mode_window(p: &Presentation, window: i64) -> Vec<Mode> {
    let mut out = Vec::new();
    for g in p.gen_ids() {
        for n in -window..=window {
            if let Some(m) = p.canonical_mode(g, n) {
                out.push(m);
            }
        }
    }
    out
}

/// Antisymmetry and Jacobi for all generator modes with `|n| ≤ window`.
pub fn check_lie_axioms(p: &Presentation, window: i64) -> ValidationReport {
    let modes = mode_window(p, window);
    let basis = |m: &Mode| ModeCombo::basis(*m);
    let mut anti = Tally::new("lie-antisymmetry");
    for a in &modes {
        for b in &modes {
            let sum = &bracket(p, a, b) + &bracket(p, b, a);
            anti.record(sum.is_zero(), || {
                format!("[{0},{1}] + [{1},{0}] = {2}", p.fmt_modes(&basis(a)), p.fmt_modes(&basis(b)), p.fmt_modes(&sum))
            });
        }
    }
    let mut jac = Tally::new("lie-jacobi");
    for a in &modes {
        for b in &modes {
            let ab = bracket(p, a, b);
            for c in &modes {
                let bc = bracket(p, b, c);
                let ca = bracket(p, c, a);
                let total = bracket_combo(p, &ab, &basis(c))
                    + bracket_combo(p, &bc, &basis(a))
                    + bracket_combo(p, &ca, &basis(b));
                jac.record(total.is_zero(), || {
                    format!(
                        "x={} y={} z={}: cyclic sum = {}",
                        p.fmt_modes(&basis(a)),
                        p.fmt_modes(&basis(b)),
                        p.fmt_modes(&basis(c)),
                        p.fmt_modes(&total)
                    )
                });
            }
        }
    }
    let mut rep = ValidationReport::new();
    rep.push(anti.finish());
    rep.push(jac.finish());
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vla::{builtin_heisenberg, builtin_virasoro, DGen};

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn normalize_examples() {
        let p = builtin_virasoro();
        let l = p.gen_id("L").unwrap();
        let c = p.gen_id("c").unwrap();
        let dl = VlaElement::basis(DGen { gen: l, d: 1 });
        assert!(mode_normalize(&p, &dl, 0).is_zero());
        assert_eq!(mode_normalize(&p, &dl, -3), ModeCombo::term(Mode::new(l, -4), r(3)));
        assert!(mode_normalize(&p, &p.gen_element(c), 2).is_zero());
        // a(-n-1) = (1/n!)(𝒟^n a)(-1)
        let d3 = VlaElement::basis(DGen { gen: l, d: 3 });
        assert_eq!(mode_normalize(&p, &d3, -1), ModeCombo::term(Mode::new(l, -4), r(6)));
    }

    /// Classical Virasoro relation with `L(n) ↔ L_{n-1}` and `c(-1) ↔ c`.
    fn classical_virasoro(p: &Presentation, m: i64, n: i64) -> ModeCombo {
        let l = p.gen_id("L").unwrap();
        let c = p.gen_id("c").unwrap();
        let (lm, ln) = (m - 1, n - 1);
        let mut out = ModeCombo::term(Mode::new(l, lm + ln + 1), r(lm - ln));
        if lm + ln == 0 {
            // (m³ - m)/12 · c, with c(-1) standing for c
            out.add_term(Mode::new(c, -1), Rational::new(lm * lm * lm - lm, 12));
        }
        out
    }

    #[test]
    fn virasoro_brackets() {
        let p = builtin_virasoro();
        let l = p.gen_id("L").unwrap();
        let c = p.gen_id("c").unwrap();
        let got = bracket(&p, &Mode::new(l, 3), &Mode::new(l, -1));
        let want = ModeCombo::term(Mode::new(l, 1), r(4)) + ModeCombo::term(Mode::new(c, -1), Rational::new(1, 2));
        assert_eq!(got, want);
        assert_eq!(bracket(&p, &Mode::new(l, 2), &Mode::new(l, -2)), ModeCombo::term(Mode::new(l, -1), r(4)));
        for m in -5..=5 {
            for n in -5..=5 {
                assert_eq!(bracket(&p, &Mode::new(l, m), &Mode::new(l, n)), classical_virasoro(&p, m, n), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn heisenberg_bracket() {
        let p = builtin_heisenberg(1).unwrap();
        let h = p.gen_id("h").unwrap();
        let c = p.gen_id("c").unwrap();
        assert_eq!(bracket(&p, &Mode::new(h, 2), &Mode::new(h, -2)), ModeCombo::term(Mode::new(c, -1), r(2)));
        for m in -4..=4 {
            for n in -4..=4 {
                let want = if m + n == 0 && m != 0 {
                    ModeCombo::term(Mode::new(c, -1), r(m))
                } else {
                    ModeCombo::zero()
                };
                assert_eq!(bracket(&p, &Mode::new(h, m), &Mode::new(h, n)), want);
            }
        }
    }

    #[test]
    fn lie_axioms_hold() {
        let p = builtin_virasoro();
        assert!(check_lie_axioms(&p, 4).passed());
        assert!(check_lie_axioms(&builtin_heisenberg(1).unwrap(), 4).passed());
        let l = p.gen_id("L").unwrap();
        assert!(bracket(&p, &Mode::new(l, 0), &Mode::new(l, 0)).is_zero());
    }

    #[test]
    fn torsion_modes_are_central_and_weights_add() {
        let p = builtin_virasoro();
        let c = Mode::new(p.gen_id("c").unwrap(), -1);
        for m in mode_window(&p, 5) {
            assert!(bracket(&p, &c, &m).is_zero());
            for m2 in mode_window(&p, 5) {
                let w = p.mode_weight(&m) + p.mode_weight(&m2);
                for k in bracket(&p, &m, &m2).keys() {
                    assert_eq!(p.mode_weight(k), w);
                }
            }
        }
    }
}
