//! Builds the six-element arrangement from exact coordinates and reorients it on {1,2}.

use tope_committee::format;
use tope_committee::{ElementSet, Limits};

fn main() -> anyhow::Result<()> {
    let n0 = format::parse_matroid_file(include_str!("../fixtures/n0.realization.om"))?.to_matroid(&Limits::default())?;
    let n2 = n0.reorient(ElementSet::from_elements([1, 2]))?;
    println!("N0: {} topes, acyclic={}", n0.topes().len(), n0.is_acyclic());
    println!("N2: {} topes, acyclic={}", n2.topes().len(), n2.is_acyclic());
    print!("{}", format::write_topes(n2.m(), n2.topes()));
    Ok(())
}
