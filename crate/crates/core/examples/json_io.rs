//! Reading and writing presentations, states and construction specs.

use vertexkernel::coalgebra::delta_state;
use vertexkernel::json::{self, parse_construction, parse_presentation, presentation_to_string};
use vertexkernel::text::parse_state;
use vertexkernel::vla::builtin_virasoro;
use vertexkernel::Enveloping;

fn main() -> vertexkernel::Result<()> {
    let text = presentation_to_string(&builtin_virasoro());
    println!("{text}");
    let p = parse_presentation(&text)?;
    assert_eq!(p, builtin_virasoro());

    let e = Enveloping::new(p);
    let v = parse_state(&e, "2·L(-3)L(-2)|0⟩ - 1/3·c(-1)|0⟩")?;
    println!("{}", serde_json::to_string(&json::state_to_json(&e, &v))?);
    let d = delta_state(&e, &parse_state(&e, "L(-2)|0⟩")?);
    println!("{}", serde_json::to_string(&json::tensor_to_json(&e, &d))?);

    let c = parse_construction(r#"{"semigroup":{"rank":1,"group":true},"phi":[[{"coeff":"1","d":0,"gen":"h"}]]}"#)?;
    println!("construction over {} with φ of rank {}", c.semigroup, c.phi.rank());
    Ok(())
}
