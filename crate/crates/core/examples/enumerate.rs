//! Lists the committees of each small size and finds a minimum committee.

use tope_committee::{committees, format, ElementSet, Limits};

fn main() -> anyhow::Result<()> {
    let limits = Limits::default();
    let n0 = format::parse_matroid_file(include_str!("../fixtures/n0.topes.om"))?.to_matroid(&limits)?;
    let n2 = n0.reorient(ElementSet::from_elements([1, 2]))?;
    for k in 1..=5 {
        let layer = committees::enumerate_committees(&n2, k, &limits)?;
        println!("{k} members: {} committees", layer.len());
    }
    let min = committees::minimum_committee(&n2, &limits)?;
    println!("minimum committee ({} members):", min.committee.len());
    print!("{}", min.committee.to_text());
    Ok(())
}
