//! The enveloping vertex algebra `𝒱_C`, realized on PBW words in the
//! negative modes of `𝓛_C` applied to the vacuum.

use std::cmp::Ordering;
use std::fmt;

use dashmap::DashMap;

use crate::current::{bracket, Mode, ModeCombo};
use crate::lincomb::LinComb;
use crate::scalar::{binom_general, Rational};
use crate::vertex::{Coalgebra, VertexAlgebra};
use crate::vla::{GenId, Presentation, VlaElement};

/// A PBW-ordered word of negative modes; the empty word is the vacuum.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwWord(Vec<Mode>);

impl PbwWord {
    pub fn vacuum() -> Self {
        PbwWord(Vec::new())
    }

    pub fn modes(&self) -> &[Mode] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Wraps modes that are already in PBW order.
    pub(crate) fn from_sorted(modes: Vec<Mode>) -> Self {
        PbwWord(modes)
    }

    fn tail(&self) -> PbwWord {
        PbwWord(self.0[1..].to_vec())
    }
}

/// An element of `𝒱_C`.
pub type State = LinComb<PbwWord>;

/// `𝒱_C` for a fixed presentation, with transparent memo tables.
pub struct Enveloping {
    pres: Presentation,
    brackets: DashMap<(Mode, Mode), ModeCombo>,
    actions: DashMap<(Mode, PbwWord), State>,
    products: DashMap<(PbwWord, i64, PbwWord), State>,
}

impl fmt::Debug for Enveloping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Enveloping").field("presentation", &self.pres).finish_non_exhaustive()
    }
}

impl Enveloping {
    /// Builds the engine. Results are only meaningful for presentations
    /// whose [`Presentation::validate`] report passes.
    pub fn new(pres: Presentation) -> Self {
        Enveloping {
            pres,
            brackets: DashMap::new(),
            actions: DashMap::new(),
            products: DashMap::new(),
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    /// Sort key: modes with larger `|n|` first, then generator index,
    /// torsion modes last.
    fn pbw_key(&self, m: &Mode) -> (bool, i64, GenId) {
        (self.pres.is_torsion(m.gen), m.n, m.gen)
    }

    pub fn pbw_cmp(&self, a: &Mode, b: &Mode) -> Ordering {
        self.pbw_key(a).cmp(&self.pbw_key(b))
    }

    pub fn mode_weight(&self, m: &Mode) -> i64 {
        self.pres.mode_weight(m)
    }

    pub fn word_weight(&self, w: &PbwWord) -> i64 {
        w.0.iter().map(|m| self.mode_weight(m)).sum()
    }

    /// Weight of a homogeneous state; `None` for zero or mixed weight.
    pub fn state_weight(&self, v: &State) -> Option<i64> {
        let mut ws = v.keys().map(|w| self.word_weight(w));
        let first = ws.next()?;
        ws.all(|x| x == first).then_some(first)
    }

    pub fn torsion_degree(&self, w: &PbwWord) -> usize {
        w.0.iter().filter(|m| self.pres.is_torsion(m.gen)).count()
    }

    pub fn vacuum_state(&self) -> State {
        State::basis(PbwWord::vacuum())
    }

    /// The state `g(n)𝟙`.
    pub fn gen_state(&self, gen: GenId) -> State {
        self.mode_apply(gen, -1, &self.vacuum_state())
    }

    /// Embeds `C` into `𝒱_C` via `u ↦ u(-1)𝟙`.
    pub fn embed(&self, u: &VlaElement) -> State {
        let modes = crate::current::mode_normalize(&self.pres, u, -1);
        let mut out = State::zero();
        for (m, c) in &modes {
            out.add_scaled(&self.apply_word(*m, &PbwWord::vacuum()), c);
        }
        out
    }

    fn cached_bracket(&self, a: &Mode, b: &Mode) -> ModeCombo {
        if let Some(v) = self.brackets.get(&(*a, *b)) {
            return v.clone();
        }
        let v = bracket(&self.pres, a, b);
        self.brackets.insert((*a, *b), v.clone());
        v
    }

    /// Left action of a single mode on a PBW word.
    fn apply_word(&self, x: Mode, w: &PbwWord) -> State {
        let Some(x) = self.pres.canonical_mode(x.gen, x.n) else {
            return State::zero();
        };
        if self.pres.is_torsion(x.gen) {
            // central: insert in place
            let pos = w.0.partition_point(|m| self.pbw_cmp(m, &x) != Ordering::Greater);
            let mut modes = w.0.clone();
            modes.insert(pos, x);
            return State::basis(PbwWord(modes));
        }
        let Some(first) = w.0.first() else {
            return if x.n < 0 { State::basis(PbwWord(vec![x])) } else { State::zero() };
        };
        if x.n < 0 && self.pbw_cmp(&x, first) != Ordering::Greater {
            let mut modes = Vec::with_capacity(w.len() + 1);
            modes.push(x);
            modes.extend_from_slice(&w.0);
            return State::basis(PbwWord(modes));
        }
        let key = (x, w.clone());
        if let Some(v) = self.actions.get(&key) {
            return v.clone();
        }
        // x·first·rest = first·(x·rest) + [x, first]·rest
        let first = *first;
        let rest = w.tail();
        let mut out = State::zero();
        for (word, c) in &self.apply_word(x, &rest) {
            out.add_scaled(&self.apply_word(first, word), c);
        }
        for (y, c) in &self.cached_bracket(&x, &first) {
            out.add_scaled(&self.apply_word(*y, &rest), c);
        }
        self.actions.insert(key, out.clone());
        out
    }

    /// Action of the mode `g(n)` on a state.
    pub fn mode_apply(&self, gen: GenId, n: i64, v: &State) -> State {
        v.flat_map(|w| self.apply_word(Mode::new(gen, n), w))
    }

    /// Action of a combination of modes on a state.
    pub fn combo_apply(&self, x: &ModeCombo, v: &State) -> State {
        let mut out = State::zero();
        for (m, c) in x {
            out.add_scaled(&self.mode_apply(m.gen, m.n, v), c);
        }
        out
    }

    /// PBW normal form of `m_1 m_2 ⋯ m_k 𝟙` for an arbitrary sequence of modes.
    pub fn straighten(&self, modes: &[Mode]) -> State {
        modes
            .iter()
            .rev()
            .fold(self.vacuum_state(), |acc, m| self.mode_apply(m.gen, m.n, &acc))
    }

    fn word_bound(&self, u: &PbwWord, v: &PbwWord) -> i64 {
        if u.is_empty() || v.is_empty() {
            -1
        } else {
            self.word_weight(u) + self.word_weight(v) - 1
        }
    }

    /// `u_n v` on PBW words via the iterate formula, recursing on the
    /// length of `u`.
    fn mode_words(&self, u: &PbwWord, n: i64, v: &PbwWord) -> State {
        if u.is_empty() {
            return if n == -1 { State::basis(v.clone()) } else { State::zero() };
        }
        if n > self.word_bound(u, v) {
            return State::zero();
        }
        let a = u.0[0];
        let k = -a.n - 1;
        if u.len() == 1 {
            // (a(-k-1)𝟙)_n = (-1)^k binom(n, k) a(n-k)
            let c = Rational::sign(k) * binom_general(n, k as u64);
            if c.is_zero() {
                return State::zero();
            }
            return self.apply_word(Mode::new(a.gen, n - k), v).scale(&c);
        }
        let key = (u.clone(), n, v.clone());
        if let Some(s) = self.products.get(&key) {
            return s.clone();
        }
        let rest = u.tail();
        let mut out = State::zero();
        let i_max = (self.word_bound(&rest, v) - n).max(self.pres.weight(a.gen) + self.word_weight(v) - 1);
        let inner_sign = Rational::sign(k + 1);
        for i in 0..=i_max.max(-1) {
            let c = Rational::sign(i) * binom_general(-k - 1, i as u64);
            // a(-k-1-i) (rest_{n+i} v)
            let rv = self.mode_words(&rest, n + i, v);
            for (word, cw) in &rv {
                out.add_scaled(&self.apply_word(Mode::new(a.gen, -k - 1 - i), word), &(cw * &c));
            }
            // -(-1)^{k+1} rest_{n-k-1-i} (a(i) v)
            let av = self.apply_word(Mode::new(a.gen, i), v);
            let c2 = -(&c * &inner_sign);
            for (word, cw) in &av {
                out.add_scaled(&self.mode_words(&rest, n - k - 1 - i, word), &(cw * &c2));
            }
        }
        self.products.insert(key, out.clone());
        out
    }

    /// `u_n v`, the coefficient of `x^{-n-1}` in `Y(u, x) v`.
    pub fn state_mode(&self, u: &State, n: i64, v: &State) -> State {
        self.mode(u, n, v)
    }

    /// `𝒟` acting as a derivation through `[𝒟, g(n)] = -n g(n-1)`, `𝒟𝟙 = 0`.
    pub fn d_state(&self, v: &State) -> State {
        v.flat_map(|w| self.d_word(w))
    }

    fn d_word(&self, w: &PbwWord) -> State {
        let mut out = State::zero();
        for (i, m) in w.0.iter().enumerate() {
            if m.n == 0 {
                continue;
            }
            let mut modes = w.0.clone();
            modes[i] = Mode::new(m.gen, m.n - 1);
            out.add_scaled(&self.straighten(&modes), &Rational::from_int(-m.n));
        }
        out
    }

    /// Creation modes of weight at most `max_weight`, in PBW order.
    fn alphabet(&self, max_weight: i64) -> Vec<Mode> {
        let mut out = Vec::new();
        for g in self.pres.gen_ids() {
            if self.pres.is_torsion(g) {
                if self.pres.weight(g) <= max_weight {
                    out.push(Mode::new(g, -1));
                }
            } else {
                let mut n = -1;
                while self.pres.weight(g) - n - 1 <= max_weight {
                    out.push(Mode::new(g, n));
                    n -= 1;
                }
            }
        }
        out.sort_by(|a, b| self.pbw_cmp(a, b));
        out
    }

    /// PBW words of weight exactly `d` with at most `k` torsion factors.
    pub fn basis_words(&self, d: i64, k: usize) -> Vec<PbwWord> {
        let alphabet = self.alphabet(d);
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.enumerate(&alphabet, 0, d, k, &mut cur, &mut out);
        out.sort();
        out
    }

    fn enumerate(
        &self,
        alphabet: &[Mode],
        start: usize,
        remaining: i64,
        torsion_left: usize,
        cur: &mut Vec<Mode>,
        out: &mut Vec<PbwWord>,
    ) {
        if remaining == 0 {
            out.push(PbwWord(cur.clone()));
        }
        for (i, m) in alphabet.iter().enumerate().skip(start) {
            let w = self.mode_weight(m);
            let tors = self.pres.is_torsion(m.gen);
            if w > remaining || (tors && torsion_left == 0) {
                continue;
            }
            if w == 0 && !tors {
                continue;
            }
            cur.push(*m);
            self.enumerate(alphabet, i, remaining - w, torsion_left - tors as usize, cur, out);
            cur.pop();
        }
    }

    /// Basis states of weight `0..=max_weight` with at most `k` torsion factors.
    pub fn basis_states(&self, max_weight: i64, k: usize) -> Vec<State> {
        (0..=max_weight)
            .flat_map(|d| self.basis_words(d, k))
            .map(State::basis)
            .collect()
    }

    /// Dimension of the weight-`d` piece with at most `k` torsion factors.
    pub fn graded_dimension(&self, d: i64, k: usize) -> usize {
        if d < 0 {
            return 0;
        }
        self.basis_words(d, k).len()
    }

    pub fn fmt_word(&self, w: &PbwWord) -> String {
        crate::text::format_word(&self.pres, w)
    }

    pub fn fmt_state(&self, v: &State) -> String {
        crate::text::format_state(&self.pres, v)
    }

    /// Drops all memoized data.
    pub fn clear_caches(&self) {
        self.brackets.clear();
        self.actions.clear();
        self.products.clear();
    }
}

impl VertexAlgebra for Enveloping {
    type Key = PbwWord;

    fn vacuum_key(&self) -> PbwWord {
        PbwWord::vacuum()
    }

    fn mode_basis(&self, u: &PbwWord, n: i64, v: &PbwWord) -> State {
        self.mode_words(u, n, v)
    }

    fn truncation_bound(&self, u: &PbwWord, v: &PbwWord) -> i64 {
        self.word_bound(u, v)
    }

    fn derivation_basis(&self, v: &PbwWord) -> State {
        self.d_word(v)
    }

    fn format_key(&self, k: &PbwWord) -> String {
        self.fmt_word(k)
    }
}

impl Coalgebra for Enveloping {
    /// Every negative mode is primitive, so `Δ` splits the word over all
    /// subsets; subsequences of a PBW word are again PBW-ordered.
    fn delta_basis(&self, w: &PbwWord) -> LinComb<(PbwWord, PbwWord)> {
        let k = w.len();
        let mut out = LinComb::zero();
        let mut left = Vec::with_capacity(k);
        let mut right = Vec::with_capacity(k);
        for mask in 0u64..(1u64 << k) {
            left.clear();
            right.clear();
            for (i, m) in w.0.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    left.push(*m);
                } else {
                    right.push(*m);
                }
            }
            out.add_term((PbwWord(left.clone()), PbwWord(right.clone())), Rational::one());
        }
        out
    }

    fn counit_basis(&self, w: &PbwWord) -> Rational {
        if w.is_empty() {
            Rational::one()
        } else {
            Rational::zero()
        }
    }
}
