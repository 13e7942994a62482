//! Takes the topes with maximal positive parts on a symmetric cycle and checks that
//! they form a critical committee.

use tope_committee::{committees, format, graphs, topes, ElementSet, Limits};

fn main() -> anyhow::Result<()> {
    let n0 = format::parse_matroid_file(include_str!("../fixtures/n0.topes.om"))?.to_matroid(&Limits::default())?;
    let n2 = n0.reorient(ElementSet::from_elements([1, 2]))?;
    let cycle = topes::SymmetricCycle::validate(&n2, format::parse_sign_list(include_str!("../fixtures/n2-cycle"))?)?;
    let k = committees::cycle_committee(&n2, &cycle)?;
    let c = committees::classify_committee(&n2, k.members())?;
    println!("committee {}", k.to_text().trim_end().replace('\n', " "));
    println!("{c}");
    let odd = graphs::odd_cycle_on_maxplus(&cycle);
    let order: Vec<String> = odd.cycle.iter().map(|t| t.to_string()).collect();
    println!("odd cycle {} (edges match: {})", order.join(" -> "), odd.edges_match);
    Ok(())
}
