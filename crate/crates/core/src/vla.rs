//! Vertex Lie algebras given by finite graded presentations.
//!
//! A presentation lists generators `g` (each with a weight, and a flag
//! saying whether `𝒟g = 0`) and the nonnegative products `g_n h` as
//! combinations of `𝒟^d g'`. Everything else follows from the
//! `𝒟`-rules `(𝒟u)_n v = -n u_{n-1} v` and `u_n 𝒟v = 𝒟(u_n v) + n u_{n-1} v`.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::report::{Tally, ValidationReport};
use crate::scalar::{binom_general, factorial, falling_factorial, Rational};

/// Index of a generator within its presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenId(pub u32);

impl GenId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub name: String,
    pub weight: u32,
    /// `𝒟` acts as zero on this generator.
    pub torsion: bool,
}

/// The basis element `𝒟^d g` of `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DGen {
    pub gen: GenId,
    pub d: u32,
}

/// An element of the vertex Lie algebra `C`, as a combination of `𝒟^d g`.
pub type VlaElement = LinComb<DGen>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<GeneratorSpec>,
    products: BTreeMap<(GenId, GenId, u32), VlaElement>,
}

/// Builds a presentation from generator names.
#[derive(Default)]
pub struct PresentationBuilder {
    generators: Vec<GeneratorSpec>,
    products: Vec<(String, String, i64, Vec<(Rational, u32, String)>)>,
}

impl PresentationBuilder {
    pub fn generator(mut self, name: &str, weight: u32, torsion: bool) -> Self {
        self.generators.push(GeneratorSpec { name: name.to_string(), weight, torsion });
        self
    }

    /// Adds `left_n right = Σ coeff · 𝒟^d gen`.
    pub fn product(mut self, left: &str, right: &str, n: i64, result: &[(Rational, u32, &str)]) -> Self {
        let result = result.iter().map(|(c, d, g)| (c.clone(), *d, g.to_string())).collect();
        self.products.push((left.to_string(), right.to_string(), n, result));
        self
    }

    pub fn build(self) -> Result<Presentation> {
        let mut seen = HashSet::new();
        for (i, g) in self.generators.iter().enumerate() {
            if g.name.is_empty() || !seen.insert(g.name.clone()) {
                return Err(Error::malformed(
                    format!("generators[{i}]"),
                    format!("duplicate or empty generator name `{}`", g.name),
                ));
            }
            if !g.torsion && g.weight == 0 {
                return Err(Error::malformed(
                    format!("generators[{i}]"),
                    format!("free generator `{}` must have positive weight", g.name),
                ));
            }
        }
        let lookup = |name: &str, loc: &str| -> Result<GenId> {
            self.generators
                .iter()
                .position(|g| g.name == name)
                .map(|i| GenId(i as u32))
                .ok_or_else(|| Error::malformed(loc, format!("unknown generator `{name}`")))
        };
        let mut products = BTreeMap::new();
        for (i, (l, r, n, result)) in self.products.iter().enumerate() {
            let loc = format!("products[{i}]");
            let left = lookup(l, &loc)?;
            let right = lookup(r, &loc)?;
            if *n < 0 {
                return Err(Error::malformed(&loc, format!("negative product index n={n}")));
            }
            let mut elem = VlaElement::zero();
            for (c, d, g) in result {
                let gid = lookup(g, &loc)?;
                if self.generators[gid.index()].torsion && *d > 0 {
                    // 𝒟 kills torsion generators
                    continue;
                }
                elem.add_term(DGen { gen: gid, d: *d }, c.clone());
            }
            let key = (left, right, *n as u32);
            if products.contains_key(&key) {
                return Err(Error::malformed(&loc, "duplicate product entry"));
            }
            if !elem.is_zero() {
                products.insert(key, elem);
            }
        }
        Ok(Presentation { generators: self.generators, products })
    }
}

impl Presentation {
    pub fn builder() -> PresentationBuilder {
        PresentationBuilder::default()
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.generators
    }

    pub fn gen_ids(&self) -> impl Iterator<Item = GenId> + '_ {
        (0..self.generators.len() as u32).map(GenId)
    }

    pub fn generator(&self, id: GenId) -> &GeneratorSpec {
        &self.generators[id.index()]
    }

    pub fn gen_id(&self, name: &str) -> Option<GenId> {
        self.generators.iter().position(|g| g.name == name).map(|i| GenId(i as u32))
    }

    pub fn name(&self, id: GenId) -> &str {
        &self.generators[id.index()].name
    }

    pub fn is_torsion(&self, id: GenId) -> bool {
        self.generators[id.index()].torsion
    }

    pub fn weight(&self, id: GenId) -> i64 {
        self.generators[id.index()].weight as i64
    }

    /// Stored table entries `(left, right, n) -> result`.
    pub fn products(&self) -> &BTreeMap<(GenId, GenId, u32), VlaElement> {
        &self.products
    }

    /// Largest `n` with a stored product, or `None` for an empty table.
    pub fn max_table_n(&self) -> Option<u32> {
        self.products.keys().map(|k| k.2).max()
    }

    /// Returns a copy with one table entry replaced (zero removes it).
    pub fn with_product(&self, left: GenId, right: GenId, n: u32, result: VlaElement) -> Presentation {
        let mut out = self.clone();
        if result.is_zero() {
            out.products.remove(&(left, right, n));
        } else {
            out.products.insert((left, right, n), result);
        }
        out
    }

    pub fn gen_element(&self, id: GenId) -> VlaElement {
        VlaElement::basis(DGen { gen: id, d: 0 })
    }

    pub fn dgen_weight(&self, k: &DGen) -> i64 {
        self.weight(k.gen) + k.d as i64
    }

    /// Weight of a homogeneous element; `None` for zero or mixed weight.
    pub fn element_weight(&self, u: &VlaElement) -> Option<i64> {
        let mut ws = u.keys().map(|k| self.dgen_weight(k));
        let w = ws.next()?;
        ws.all(|x| x == w).then_some(w)
    }

    pub fn apply_d(&self, u: &VlaElement) -> VlaElement {
        u.iter()
            .filter(|(k, _)| !self.is_torsion(k.gen))
            .map(|(k, c)| (DGen { gen: k.gen, d: k.d + 1 }, c.clone()))
            .collect()
    }

    pub fn apply_d_times(&self, u: &VlaElement, times: u32) -> VlaElement {
        (0..times).fold(u.clone(), |acc, _| self.apply_d(&acc))
    }

    /// `(𝒟^{dl} g)_n (𝒟^{dr} h)` for `n ≥ 0`.
    fn basis_product(&self, g: GenId, dl: u32, n: i64, h: GenId, dr: u32) -> VlaElement {
        if n < 0 {
            return VlaElement::zero();
        }
        if dl > 0 {
            // (𝒟^d g)_n = (-1)^d n(n-1)...(n-d+1) g_{n-d}
            let coeff = Rational::sign(dl as i64) * falling_factorial(n, dl as u64);
            if coeff.is_zero() {
                return VlaElement::zero();
            }
            return self.basis_product(g, 0, n - dl as i64, h, dr).scale(&coeff);
        }
        if dr > 0 {
            // g_n 𝒟v = 𝒟(g_n v) + n g_{n-1} v
            let mut out = self.apply_d(&self.basis_product(g, 0, n, h, dr - 1));
            if n >= 1 {
                out.add_scaled(&self.basis_product(g, 0, n - 1, h, dr - 1), &Rational::from_int(n));
            }
            return out;
        }
        self.products.get(&(g, h, n as u32)).cloned().unwrap_or_default()
    }

    /// The `n`-th product `u_n v` (`n ≥ 0`), extended bilinearly.
    pub fn nth_product(&self, u: &VlaElement, n: i64, v: &VlaElement) -> VlaElement {
        let mut out = VlaElement::zero();
        for (a, ca) in u {
            for (b, cb) in v {
                out.add_scaled(&self.basis_product(a.gen, a.d, n, b.gen, b.d), &(ca * cb));
            }
        }
        out
    }

    /// Upper bound on `n` for which `u_n v` can be nonzero.
    pub fn product_bound(&self, u: &VlaElement, v: &VlaElement) -> i64 {
        let Some(max) = self.max_table_n() else { return -1 };
        let du = u.keys().map(|k| k.d).max().unwrap_or(0);
        let dv = v.keys().map(|k| k.d).max().unwrap_or(0);
        (max + du + dv) as i64
    }

    /// Right side of skew-symmetry: `Σ_j (-1)^{n+j+1} (1/j!) 𝒟^j (v_{n+j} u)`.
    pub fn skew_rhs(&self, u: &VlaElement, n: i64, v: &VlaElement) -> VlaElement {
        let mut out = VlaElement::zero();
        let top = self.product_bound(v, u);
        for j in 0..=(top - n).max(-1) {
            let term = self.apply_d_times(&self.nth_product(v, n + j, u), j as u32);
            let c = Rational::sign(n + j + 1) / factorial(j as u64);
            out.add_scaled(&term, &c);
        }
        out
    }

    /// Checks the vertex Lie algebra axioms on generator pairs and triples
    /// for all products up to the table support plus two.
    pub fn validate(&self) -> ValidationReport {
        let gens: Vec<GenId> = self.gen_ids().collect();
        let top = self.max_table_n().map(|m| m as i64 + 2).unwrap_or(2);
        let elem = |g: GenId| self.gen_element(g);
        let mut report = ValidationReport::new();

        let mut trunc = Tally::new("truncation");
        for (&(l, r, n), res) in &self.products {
            trunc.record(!res.is_zero(), || format!("empty entry {}_{n}{}", self.name(l), self.name(r)));
        }
        for &g in &gens {
            for &h in &gens {
                for n in top + 1..=top + 3 {
                    let ok = self.nth_product(&elem(g), n, &elem(h)).is_zero();
                    trunc.record(ok, || format!("{}_{n}{} nonzero beyond table support", self.name(g), self.name(h)));
                }
            }
        }
        report.push(trunc.finish());

        let mut weights = Tally::new("weight-homogeneity");
        for (&(l, r, n), res) in &self.products {
            let expect = self.weight(l) + self.weight(r) - n as i64 - 1;
            for (k, c) in res {
                let w = self.dgen_weight(k);
                weights.record(w == expect, || {
                    format!(
                        "{}_{n}{}: term {c}·{} has weight {w}, expected {expect}",
                        self.name(l),
                        self.name(r),
                        self.fmt_element(&VlaElement::basis(*k))
                    )
                });
            }
        }
        report.push(weights.finish());

        let mut skew = Tally::new("skew-symmetry");
        for &g in &gens {
            for &h in &gens {
                for n in 0..=top {
                    let lhs = self.nth_product(&elem(g), n, &elem(h));
                    let rhs = self.skew_rhs(&elem(g), n, &elem(h));
                    skew.record(lhs == rhs, || {
                        format!(
                            "u={} v={} n={n}: u_n v = {} but skew side = {}",
                            self.name(g),
                            self.name(h),
                            self.fmt_element(&lhs),
                            self.fmt_element(&rhs)
                        )
                    });
                }
            }
        }
        report.push(skew.finish());

        let mut jacobi = Tally::new("half-jacobi");
        for &a in &gens {
            for &b in &gens {
                for &c in &gens {
                    for m in 0..=top {
                        for n in 0..=top {
                            let (u, v, w) = (elem(a), elem(b), elem(c));
                            let lhs = self.nth_product(&u, m, &self.nth_product(&v, n, &w))
                                - self.nth_product(&v, n, &self.nth_product(&u, m, &w));
                            let mut rhs = VlaElement::zero();
                            for j in 0..=m {
                                let uv = self.nth_product(&u, j, &v);
                                rhs.add_scaled(&self.nth_product(&uv, m + n - j, &w), &binom_general(m, j as u64));
                            }
                            jacobi.record(lhs == rhs, || {
                                format!(
                                    "u={} v={} w={} m={m} n={n}: lhs = {} rhs = {}",
                                    self.name(a),
                                    self.name(b),
                                    self.name(c),
                                    self.fmt_element(&lhs),
                                    self.fmt_element(&rhs)
                                )
                            });
                        }
                    }
                }
            }
        }
        report.push(jacobi.finish());

        let mut torsion = Tally::new("torsion-central");
        for (&(l, r, n), _) in &self.products {
            torsion.record(!self.is_torsion(l), || {
                format!("torsion generator {} has nonzero row entry {}_{n}{}", self.name(l), self.name(l), self.name(r))
            });
        }
        report.push(torsion.finish());

        report.push(self.check_d_rule_sign(top));
        report
    }

    /// Compares the two candidate right `𝒟`-rules against the value of
    /// `u_n 𝒟v` forced by skew-symmetry and the left rule.
    fn check_d_rule_sign(&self, top: i64) -> crate::report::CheckResult {
        let mut plus = Tally::new("d-rule-sign");
        let mut minus_holds = true;
        for g in self.gen_ids() {
            for h in self.gen_ids() {
                let (u, v) = (self.gen_element(g), self.gen_element(h));
                let dv = self.apply_d(&v);
                for n in 0..=top {
                    let forced = self.skew_rhs(&u, n, &dv);
                    let base = self.apply_d(&self.nth_product(&u, n, &v));
                    let lower = self.nth_product(&u, n - 1, &v).scale(&Rational::from_int(n));
                    let plus_rule = &base + &lower;
                    let minus_rule = &base - &lower;
                    minus_holds &= minus_rule == forced;
                    plus.record(plus_rule == forced, || {
                        format!(
                            "u={} v={} n={n}: skew-forced u_n 𝒟v = {} but plus rule gives {}",
                            self.name(g),
                            self.name(h),
                            self.fmt_element(&forced),
                            self.fmt_element(&plus_rule)
                        )
                    });
                }
            }
        }
        let sign_note = if minus_holds {
            "plus-sign rule checked; minus-sign rule also consistent on this table"
        } else {
            "plus-sign rule checked; minus-sign rule u_n 𝒟v = 𝒟(u_n v) - n u_{n-1}v is inconsistent"
        };
        plus.note(sign_note);
        plus.finish()
    }

    pub fn fmt_element(&self, u: &VlaElement) -> String {
        crate::text::format_vla(self, u)
    }
}

/// Virasoro: `L` (weight 2) and central `c`, with `L_0L = 𝒟L`, `L_1L = 2L`, `L_3L = c/2`.
pub fn builtin_virasoro() -> Presentation {
    Presentation::builder()
        .generator("L", 2, false)
        .generator("c", 0, true)
        .product("L", "L", 0, &[(Rational::one(), 1, "L")])
        .product("L", "L", 1, &[(Rational::from_int(2), 0, "L")])
        .product("L", "L", 3, &[(Rational::new(1, 2), 0, "c")])
        .build()
        .expect("virasoro fixture")
}

pub(crate) fn rank_names(prefix: &str, r: usize) -> Vec<String> {
    if r == 1 {
        vec![prefix.to_string()]
    } else {
        (1..=r).map(|i| format!("{prefix}{i}")).collect()
    }
}

/// Heisenberg of rank `r`: `h_1..h_r` of weight 1 and central `c`, `(h_i)_1 h_j = δ_ij c`.
pub fn builtin_heisenberg(r: usize) -> Result<Presentation> {
    if r == 0 {
        return Err(Error::InvalidArgument("heisenberg rank must be at least 1".into()));
    }
    let names = rank_names("h", r);
    let mut b = Presentation::builder();
    for n in &names {
        b = b.generator(n, 1, false);
    }
    b = b.generator("c", 0, true);
    for n in &names {
        b = b.product(n, n, 1, &[(Rational::one(), 0, "c")]);
    }
    b.build()
}

/// Abelian of dimension `d` over `ℂ[𝒟]`: `h_1..h_d` of weight 1, all products zero.
pub fn builtin_abelian(d: usize) -> Result<Presentation> {
    if d == 0 {
        return Err(Error::InvalidArgument("abelian dimension must be at least 1".into()));
    }
    let mut b = Presentation::builder();
    for n in rank_names("h", d) {
        b = b.generator(&n, 1, false);
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn vir() -> (Presentation, GenId, GenId) {
        let p = builtin_virasoro();
        let l = p.gen_id("L").unwrap();
        let c = p.gen_id("c").unwrap();
        (p, l, c)
    }

    #[test]
    fn fixture_shapes() {
        let a = builtin_abelian(2).unwrap();
        assert_eq!(a.generators().len(), 2);
        assert!(a.products().is_empty());
        let (v, _, _) = vir();
        assert_eq!(v.generators().len(), 2);
        assert_eq!(v.products().len(), 3);
        let h = builtin_heisenberg(2).unwrap();
        assert_eq!(h.generators().len(), 3);
        assert_eq!(h.products().len(), 2);
        assert!(builtin_heisenberg(0).is_err());
    }

    #[test]
    fn virasoro_products() {
        let (p, l, _) = vir();
        let big_l = p.gen_element(l);
        assert_eq!(p.nth_product(&big_l, 1, &big_l), big_l.scale(&r(2)));
        let dl = p.apply_d(&big_l);
        assert_eq!(p.nth_product(&dl, 2, &big_l), big_l.scale(&r(-4)));
        assert!(p.nth_product(&big_l, 5, &big_l).is_zero());
    }

    #[test]
    fn apply_d_examples() {
        let (p, l, c) = vir();
        assert_eq!(p.apply_d(&p.gen_element(l)), VlaElement::basis(DGen { gen: l, d: 1 }));
        assert!(p.apply_d(&p.gen_element(c)).is_zero());
        let mix = p.gen_element(l).scale(&r(2)) + p.gen_element(c);
        assert_eq!(p.apply_d(&mix), VlaElement::term(DGen { gen: l, d: 1 }, r(2)));
    }

    #[test]
    fn fixtures_validate() {
        assert!(builtin_virasoro().validate().passed(), "{}", builtin_virasoro().validate());
        for r in 1..=2 {
            let h = builtin_heisenberg(r).unwrap();
            assert!(h.validate().passed(), "{}", h.validate());
        }
        for d in 1..=3 {
            assert!(builtin_abelian(d).unwrap().validate().passed());
        }
    }

    #[test]
    fn perturbed_virasoro_is_caught() {
        let (p, l, _) = vir();
        let bad = p.with_product(l, l, 1, p.gen_element(l).scale(&r(3)));
        let rep = bad.validate();
        assert!(!rep.passed());
        let fail = rep.first_failure().unwrap();
        assert!(fail.witness.is_some());
    }

    #[test]
    fn rescaled_central_term_is_still_a_vertex_lie_algebra() {
        // L_3 L = c gives the Virasoro conformal algebra at a different central
        // charge; every axiom still holds.
        let (p, l, c) = vir();
        let rescaled = p.with_product(l, l, 3, p.gen_element(c));
        assert!(rescaled.validate().passed());
    }

    #[test]
    fn d_rule_sign_reports_minus_as_inconsistent() {
        let rep = builtin_virasoro().validate();
        let check = rep.check("d-rule-sign").unwrap();
        assert!(check.passed);
        assert!(check.note.as_ref().unwrap().contains("inconsistent"));
    }

    #[test]
    fn weight_bookkeeping() {
        for p in [builtin_virasoro(), builtin_heisenberg(2).unwrap()] {
            for (&(a, b, n), res) in p.products() {
                let w = p.weight(a) + p.weight(b) - n as i64 - 1;
                assert_eq!(p.element_weight(res), Some(w));
            }
        }
    }

    #[test]
    fn products_vanish_beyond_bound() {
        let (p, l, _) = vir();
        let u = p.apply_d_times(&p.gen_element(l), 2);
        let v = p.apply_d(&p.gen_element(l));
        let bound = p.product_bound(&u, &v);
        for n in bound + 1..bound + 4 {
            assert!(p.nth_product(&u, n, &v).is_zero());
        }
    }

    #[test]
    fn malformed_tables_rejected() {
        let err = Presentation::builder()
            .generator("L", 2, false)
            .product("L", "X", 0, &[])
            .build()
            .unwrap_err();
        assert!(matches!(err, Error::Malformed { .. }));
        let err = Presentation::builder()
            .generator("L", 2, false)
            .product("L", "L", -1, &[])
            .build()
            .unwrap_err();
        assert!(err.to_string().contains("negative"));
        let err = Presentation::builder().generator("L", 2, false).generator("L", 1, false).build();
        assert!(err.is_err());
    }

    #[test]
    fn torsion_row_flagged() {
        let p = Presentation::builder()
            .generator("h", 1, false)
            .generator("c", 1, true)
            .product("c", "h", 0, &[(Rational::one(), 0, "c")])
            .build()
            .unwrap();
        let rep = p.validate();
        assert!(!rep.check("torsion-central").unwrap().passed);
    }
}
