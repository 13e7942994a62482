//! Structure of the graph on topes with maximal positive parts, with a DOT export.

use tope_committee::{format, graphs, ElementSet, Limits};

fn main() -> anyhow::Result<()> {
    let n0 = format::parse_matroid_file(include_str!("../fixtures/n0.topes.om"))?.to_matroid(&Limits::default())?;
    let n2 = n0.reorient(ElementSet::from_elements([1, 2]))?;
    let g = graphs::gamma_maxplus(&n2)?;
    print!("{}", graphs::structure_report(&g));
    println!("neighbourhoods are antichains: {}", graphs::neighborhoods_match_antichains(&n2)?);
    print!("{}", g.graph.to_dot("gamma_max"));
    Ok(())
}
