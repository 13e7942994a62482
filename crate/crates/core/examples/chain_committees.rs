//! Runs the chain construction for every prefix reorientation `[1, s]` of an acyclic matroid.

use tope_committee::{committees, format, Limits};

fn main() -> anyhow::Result<()> {
    let n0 = format::parse_matroid_file(include_str!("../fixtures/n0.topes.om"))?.to_matroid(&Limits::default())?;
    let chain = format::parse_chain(include_str!("../fixtures/n0-chain"))?;
    println!("chain labels {:?}", chain.labels());
    for s in 1..=n0.m() {
        let k = committees::alg3(&n0, &chain, s)?;
        let bounds = committees::bound_check(&n0, &chain, s)?;
        let members: Vec<String> = k.members().iter().map(|t| t.to_string()).collect();
        println!("s={s} size={} bounds_hold={} {}", k.len(), bounds.holds, members.join(" "));
    }
    Ok(())
}
