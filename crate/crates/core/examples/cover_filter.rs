//! The filter of topes whose positive parts complete a base tope to the ground set.

use tope_committee::{format, sv, topes, ElementSet, Limits};

fn main() -> anyhow::Result<()> {
    let n0 = format::parse_matroid_file(include_str!("../fixtures/n0.topes.om"))?.to_matroid(&Limits::default())?;
    let n2 = n0.reorient(ElementSet::from_elements([1, 2]))?;
    let base = sv("+--+++");
    let o = topes::filter_o(&n2, &base)?;
    let g = topes::antichain_g(&n2, &base)?;
    println!("O({base}) has {} topes, minimal members:", o.len());
    for t in &g {
        println!("  {t}");
    }
    let poset = topes::tope_poset(&n2, &base)?;
    println!("filter: {}", poset.is_filter(&o));
    Ok(())
}
