//! JSON forms of presentations, states, tensors and construction specs.
//!
//! Rationals are written as strings `"p/q"` (or `"p"`), modes as
//! `{"gen":"L","n":-3}`.

use serde::{Deserialize, Serialize};

use crate::constructions::{PhiMap, SemigroupL};
use crate::current::Mode;
use crate::enveloping::{Enveloping, PbwWord, State};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::Rational;
use crate::vla::{builtin_abelian, DGen, Presentation, VlaElement};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorJson {
    pub name: String,
    pub weight: u32,
    #[serde(default)]
    pub torsion: bool,
}

/// One term `coeff · 𝒟^d gen`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: Rational,
    #[serde(default)]
    pub d: u32,
    pub gen: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductJson {
    pub left: String,
    pub right: String,
    pub n: i64,
    pub result: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationJson {
    pub generators: Vec<GeneratorJson>,
    #[serde(default)]
    pub products: Vec<ProductJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModeJson {
    pub gen: String,
    pub n: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateTermJson {
    pub coeff: Rational,
    pub word: Vec<ModeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorTermJson {
    pub coeff: Rational,
    pub left: Vec<ModeJson>,
    pub right: Vec<ModeJson>,
}

/// A construction `V ⊗_φ ℂ[L]`. Without a presentation, `V` is the
/// abelian one whose rank matches the semigroup, and a missing `phi`
/// then sends `e_i` to `h_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstructionJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentation: Option<PresentationJson>,
    pub semigroup: SemigroupL,
    #[serde(default)]
    pub phi: Vec<Vec<TermJson>>,
}

/// A parsed construction spec.
#[derive(Clone, Debug)]
pub struct Construction {
    pub presentation: Presentation,
    pub semigroup: SemigroupL,
    pub phi: PhiMap,
}

fn element_json(p: &Presentation, u: &VlaElement) -> Vec<TermJson> {
    u.iter()
        .map(|(k, c)| TermJson { coeff: c.clone(), d: k.d, gen: p.name(k.gen).to_string() })
        .collect()
}

fn element_from_json(p: &Presentation, terms: &[TermJson]) -> Result<VlaElement> {
    let mut out = VlaElement::zero();
    for t in terms {
        let gen = p.gen_id(&t.gen).ok_or_else(|| Error::UnknownGenerator(t.gen.clone()))?;
        if p.is_torsion(gen) && t.d > 0 {
            continue;
        }
        out.add_term(DGen { gen, d: t.d }, t.coeff.clone());
    }
    Ok(out)
}

pub fn presentation_to_json(p: &Presentation) -> PresentationJson {
    let generators = p
        .generators()
        .iter()
        .map(|g| GeneratorJson { name: g.name.clone(), weight: g.weight, torsion: g.torsion })
        .collect();
    let products = p
        .products()
        .iter()
        .map(|(&(l, r, n), u)| ProductJson {
            left: p.name(l).to_string(),
            right: p.name(r).to_string(),
            n: n as i64,
            result: element_json(p, u),
        })
        .collect();
    PresentationJson { generators, products }
}

pub fn presentation_from_json(j: &PresentationJson) -> Result<Presentation> {
    let mut b = Presentation::builder();
    for g in &j.generators {
        b = b.generator(&g.name, g.weight, g.torsion);
    }
    for pr in &j.products {
        let result: Vec<(Rational, u32, &str)> =
            pr.result.iter().map(|t| (t.coeff.clone(), t.d, t.gen.as_str())).collect();
        b = b.product(&pr.left, &pr.right, pr.n, &result);
    }
    b.build()
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let j: PresentationJson = serde_json::from_str(text)?;
    presentation_from_json(&j)
}

pub fn presentation_to_string(p: &Presentation) -> String {
    serde_json::to_string_pretty(&presentation_to_json(p)).expect("presentation serializes")
}

pub fn mode_json(p: &Presentation, m: &Mode) -> ModeJson {
    ModeJson { gen: p.name(m.gen).to_string(), n: m.n }
}

pub fn mode_from_json(p: &Presentation, m: &ModeJson) -> Result<Mode> {
    let gen = p.gen_id(&m.gen).ok_or_else(|| Error::UnknownGenerator(m.gen.clone()))?;
    Ok(Mode::new(gen, m.n))
}

fn word_json(p: &Presentation, w: &PbwWord) -> Vec<ModeJson> {
    w.modes().iter().map(|m| mode_json(p, m)).collect()
}

pub fn state_to_json(e: &Enveloping, v: &State) -> Vec<StateTermJson> {
    let p = e.presentation();
    v.iter().map(|(w, c)| StateTermJson { coeff: c.clone(), word: word_json(p, w) }).collect()
}

/// Reads a state; words need not be in PBW order and are straightened.
pub fn state_from_json(e: &Enveloping, terms: &[StateTermJson]) -> Result<State> {
    let p = e.presentation();
    let mut out = State::zero();
    for t in terms {
        let modes = t.word.iter().map(|m| mode_from_json(p, m)).collect::<Result<Vec<_>>>()?;
        out.add_scaled(&e.straighten(&modes), &t.coeff);
    }
    Ok(out)
}

pub fn tensor_to_json(e: &Enveloping, t: &LinComb<(PbwWord, PbwWord)>) -> Vec<TensorTermJson> {
    let p = e.presentation();
    t.iter()
        .map(|((l, r), c)| TensorTermJson { coeff: c.clone(), left: word_json(p, l), right: word_json(p, r) })
        .collect()
}

pub fn construction_from_json(j: &ConstructionJson) -> Result<Construction> {
    let presentation = match &j.presentation {
        Some(p) => presentation_from_json(p)?,
        None => builtin_abelian(j.semigroup.rank)?,
    };
    let targets = if j.phi.is_empty() && j.presentation.is_none() {
        presentation.gen_ids().map(|g| presentation.gen_element(g)).collect()
    } else {
        j.phi.iter().map(|terms| element_from_json(&presentation, terms)).collect::<Result<Vec<_>>>()?
    };
    Ok(Construction { presentation, semigroup: j.semigroup, phi: PhiMap::new(targets) })
}

pub fn parse_construction(text: &str) -> Result<Construction> {
    let j: ConstructionJson = serde_json::from_str(text)?;
    construction_from_json(&j)
}

pub fn construction_to_json(c: &Construction) -> ConstructionJson {
    ConstructionJson {
        presentation: Some(presentation_to_json(&c.presentation)),
        semigroup: c.semigroup,
        phi: c.phi.targets().iter().map(|u| element_json(&c.presentation, u)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_state;
    use crate::vla::{builtin_heisenberg, builtin_virasoro};

    #[test]
    fn presentation_round_trip() {
        for p in [builtin_virasoro(), builtin_heisenberg(2).unwrap(), builtin_abelian(3).unwrap()] {
            let text = presentation_to_string(&p);
            let back = parse_presentation(&text).unwrap();
            assert_eq!(back, p);
            assert_eq!(presentation_to_string(&back), text);
        }
    }

    #[test]
    fn virasoro_format() {
        let j = presentation_to_json(&builtin_virasoro());
        let v = serde_json::to_value(&j).unwrap();
        assert_eq!(v["generators"][0], serde_json::json!({"name": "L", "weight": 2, "torsion": false}));
        let l3l = j.products.iter().find(|p| p.n == 3).unwrap();
        assert_eq!(serde_json::to_value(&l3l.result).unwrap(), serde_json::json!([{"coeff": "1/2", "d": 0, "gen": "c"}]));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_presentation("{\"generators\":[{\"name\":\"L\""), Err(Error::Json(_))));
        let bad = r#"{"generators":[{"name":"L","weight":2}],"products":[{"left":"L","right":"X","n":0,"result":[]}]}"#;
        assert!(matches!(parse_presentation(bad), Err(Error::Malformed { .. })));
        let bad = r#"{"generators":[{"name":"L","weight":2}],"products":[{"left":"L","right":"L","n":0,"result":[{"coeff":"1/0","gen":"L"}]}]}"#;
        assert!(parse_presentation(bad).is_err());
    }

    #[test]
    fn states_and_tensors() {
        let e = Enveloping::new(builtin_virasoro());
        let v = parse_state(&e, "2·L(-3)L(-2)|0⟩ - 1/3·c(-1)|0⟩").unwrap();
        let j = state_to_json(&e, &v);
        assert_eq!(state_from_json(&e, &j).unwrap(), v);
        let unordered: Vec<StateTermJson> = serde_json::from_str(
            r#"[{"coeff":"1","word":[{"gen":"L","n":-2},{"gen":"L","n":-3}]}]"#,
        )
        .unwrap();
        // L(-2)L(-3) = L(-3)L(-2) + [L(-2), L(-3)], and [L(-2), L(-3)] = L(-6)
        let want = parse_state(&e, "L(-3)L(-2)|0⟩ + L(-6)|0⟩").unwrap();
        assert_eq!(state_from_json(&e, &unordered).unwrap(), want);
        let d = crate::coalgebra::delta_state(&e, &parse_state(&e, "L(-2)|0⟩").unwrap());
        assert_eq!(tensor_to_json(&e, &d).len(), 2);
    }

    #[test]
    fn construction_defaults_to_abelian() {
        let c = parse_construction(r#"{"semigroup":{"rank":1,"group":true},"phi":[[{"coeff":"1","d":0,"gen":"h"}]]}"#).unwrap();
        assert_eq!(c.presentation, builtin_abelian(1).unwrap());
        assert_eq!(c.phi.rank(), 1);
        let again = construction_from_json(&construction_to_json(&c)).unwrap();
        assert_eq!(again.phi.targets(), c.phi.targets());
        let bare = parse_construction(r#"{"semigroup":{"rank":2,"group":false}}"#).unwrap();
        assert_eq!(bare.phi.rank(), 2);
    }
}
