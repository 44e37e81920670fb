//! Text syntax for elements: `D^2(L)`, `L(-3)`, `2·L(-2)L(-1)|0⟩`.

use crate::current::{Mode, ModeCombo};
use crate::enveloping::{Enveloping, PbwWord, State};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::Rational;
use crate::vla::{DGen, GenId, Presentation, VlaElement};

pub const VACUUM: &str = "|0⟩";

fn join_terms<K: Ord + Clone>(lc: &LinComb<K>, mut key: impl FnMut(&K) -> String) -> String {
    if lc.is_zero() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (i, (k, c)) in lc.iter().enumerate() {
        let (neg, mag) = (c.is_negative(), c.abs());
        match (i, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        if !mag.is_one() {
            s.push_str(&format!("{mag}·"));
        }
        s.push_str(&key(k));
    }
    s
}

pub fn format_dgen(p: &Presentation, k: &DGen) -> String {
    match k.d {
        0 => p.name(k.gen).to_string(),
        1 => format!("D({})", p.name(k.gen)),
        d => format!("D^{d}({})", p.name(k.gen)),
    }
}

pub fn format_vla(p: &Presentation, u: &VlaElement) -> String {
    join_terms(u, |k| format_dgen(p, k))
}

pub fn format_mode(p: &Presentation, m: &Mode) -> String {
    format!("{}({})", p.name(m.gen), m.n)
}

pub fn format_modes(p: &Presentation, x: &ModeCombo) -> String {
    join_terms(x, |m| format_mode(p, m))
}

pub fn format_word(p: &Presentation, w: &PbwWord) -> String {
    let mut s: String = w.modes().iter().map(|m| format_mode(p, m)).collect();
    s.push_str(VACUUM);
    s
}

pub fn format_state(p: &Presentation, v: &State) -> String {
    join_terms(v, |w| format_word(p, w))
}

pub fn format_tensor(p: &Presentation, t: &LinComb<(PbwWord, PbwWord)>) -> String {
    join_terms(t, |(a, b)| format!("{} ⊗ {}", format_word(p, a), format_word(p, b)))
}

/// Splits a sum into signed terms, ignoring signs nested in brackets.
pub(crate) fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut neg = false;
    for ch in s.chars() {
        match ch {
            '(' | '{' => {
                depth += 1;
                cur.push(ch);
            }
            ')' | '}' => {
                depth -= 1;
                cur.push(ch);
            }
            '+' | '-' if depth == 0 && !cur.trim().ends_with('^') => {
                if !cur.trim().is_empty() {
                    out.push((neg, cur.trim().to_string()));
                    cur.clear();
                    neg = ch == '-';
                } else {
                    neg ^= ch == '-';
                }
            }
            _ => cur.push(ch),
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in `{s}`")));
    }
    if !cur.trim().is_empty() {
        out.push((neg, cur.trim().to_string()));
    } else if !out.is_empty() || neg {
        return Err(Error::Parse(format!("dangling sign in `{s}`")));
    }
    Ok(out)
}

/// Splits an optional `coeff·` or `coeff*` prefix.
fn split_coeff(term: &str) -> Result<(Rational, &str)> {
    let cut = term.find('·').map(|i| (i, '·'.len_utf8())).or_else(|| term.find('*').map(|i| (i, 1)));
    match cut {
        Some((i, w)) => {
            let c: Rational = term[..i].trim().parse()?;
            Ok((c, term[i + w..].trim()))
        }
        None => {
            // a bare number is a multiple of the empty key
            if term.chars().next().is_some_and(|c| c.is_ascii_digit()) && term.parse::<Rational>().is_ok() {
                Ok((term.parse()?, ""))
            } else {
                Ok((Rational::one(), term))
            }
        }
    }
}

fn parse_sum<K: Ord + Clone>(s: &str, mut key: impl FnMut(&str) -> Result<K>) -> Result<LinComb<K>> {
    let s = s.trim();
    if s == "0" {
        return Ok(LinComb::zero());
    }
    let mut out = LinComb::zero();
    for (neg, term) in split_terms(s)? {
        let (c, body) = split_coeff(&term)?;
        let c = if neg { -c } else { c };
        out.add_term(key(body)?, c);
    }
    Ok(out)
}

fn gen_by_name(p: &Presentation, name: &str) -> Result<GenId> {
    p.gen_id(name.trim()).ok_or_else(|| Error::UnknownGenerator(name.trim().to_string()))
}

/// Parses `L(-3)`.
pub fn parse_mode(p: &Presentation, s: &str) -> Result<Mode> {
    let s = s.trim();
    let open = s.find('(').ok_or_else(|| Error::Parse(format!("expected `gen(n)`, got `{s}`")))?;
    if !s.ends_with(')') {
        return Err(Error::Parse(format!("expected `gen(n)`, got `{s}`")));
    }
    let gen = gen_by_name(p, &s[..open])?;
    let n: i64 = s[open + 1..s.len() - 1]
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad mode index in `{s}`")))?;
    Ok(Mode::new(gen, n))
}

/// Parses a sequence of modes written without separators: `L(-2)L(-1)`.
pub fn parse_mode_sequence(p: &Presentation, s: &str) -> Result<Vec<Mode>> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let close = rest.find(')').ok_or_else(|| Error::Parse(format!("unterminated mode in `{s}`")))?;
        out.push(parse_mode(p, &rest[..=close])?);
        rest = rest[close + 1..].trim_start();
    }
    Ok(out)
}

pub fn parse_modes(p: &Presentation, s: &str) -> Result<ModeCombo> {
    parse_sum(s, |body| parse_mode(p, body))
}

/// Parses `D^2(L)`, `D(L)` or `L`.
pub fn parse_dgen(p: &Presentation, s: &str) -> Result<DGen> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix('D') {
        let (d, inner) = if let Some(r) = rest.strip_prefix('^') {
            let open = r.find('(').ok_or_else(|| Error::Parse(format!("bad derivative `{s}`")))?;
            let d: u32 = r[..open].parse().map_err(|_| Error::Parse(format!("bad derivative order in `{s}`")))?;
            (d, &r[open..])
        } else if rest.starts_with('(') {
            (1, rest)
        } else {
            return Ok(DGen { gen: gen_by_name(p, s)?, d: 0 });
        };
        let inner = inner
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bad derivative `{s}`")))?;
        return Ok(DGen { gen: gen_by_name(p, inner)?, d });
    }
    Ok(DGen { gen: gen_by_name(p, s)?, d: 0 })
}

pub fn parse_vla(p: &Presentation, s: &str) -> Result<VlaElement> {
    let raw = parse_sum(s, |body| parse_dgen(p, body))?;
    // torsion generators are killed by 𝒟
    Ok(raw.iter().filter(|(k, _)| k.d == 0 || !p.is_torsion(k.gen)).map(|(k, c)| (*k, c.clone())).collect())
}

/// Parses a state such as `2·L(-2)L(-1)|0⟩ + c(-1)|0⟩`; words are
/// straightened, so any mode order is accepted.
pub fn parse_state(e: &Enveloping, s: &str) -> Result<State> {
    let p = e.presentation();
    let words = parse_sum(s, |body| {
        let body = body.trim();
        let modes = body
            .strip_suffix(VACUUM)
            .or_else(|| body.strip_suffix("|0>"))
            .ok_or_else(|| Error::Parse(format!("state term `{body}` must end with |0⟩")))?;
        parse_mode_sequence(p, modes)
    })?;
    let mut out = State::zero();
    for (modes, c) in &words {
        out.add_scaled(&e.straighten(modes), c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vla::builtin_virasoro;

    #[test]
    fn round_trip_state_text() {
        let e = Enveloping::new(builtin_virasoro());
        let s = parse_state(&e, "2·L(-2)L(-1)|0⟩ - 1/2·c(-1)|0⟩ + |0>").unwrap();
        let printed = e.fmt_state(&s);
        assert_eq!(parse_state(&e, &printed).unwrap(), s);
        assert!(printed.contains("2·L(-2)L(-1)|0⟩"));
        // unordered input is straightened
        let t = parse_state(&e, "L(-1)L(-2)|0⟩").unwrap();
        assert_eq!(e.fmt_state(&t), "L(-4)|0⟩ + L(-2)L(-1)|0⟩");
    }

    #[test]
    fn parse_vla_and_modes() {
        let p = builtin_virasoro();
        let u = parse_vla(&p, "2·L - D^2(L) + D(c) + 1/2*c").unwrap();
        assert_eq!(format_vla(&p, &u), "2·L - D^2(L) + 1/2·c");
        let x = parse_modes(&p, "4·L(1) + 1/2·c(-1)").unwrap();
        assert_eq!(format_modes(&p, &x), "4·L(1) + 1/2·c(-1)");
        assert!(matches!(parse_mode(&p, "X(1)"), Err(Error::UnknownGenerator(_))));
        assert!(parse_mode(&p, "L(x)").is_err());
    }
}
