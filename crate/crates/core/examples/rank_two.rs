//! The step-by-step rank-2 construction for a sequence of single-element reorientations.

use tope_committee::{committees, ElementSet, OrientedMatroid, Realization};

fn main() -> anyhow::Result<()> {
    let r = Realization::from_integers(&[&[1, 0], &[1, 1], &[0, 1], &[-1, 1]])?;
    let om = OrientedMatroid::from_realization(&r)?;
    for seq in [vec![4], vec![1, 3], vec![2, 3, 4]] {
        let k = committees::alg1_rank2(&om, &seq)?;
        let target = om.reorient(ElementSet::from_elements(seq.iter().copied()))?;
        let check = committees::is_committee(&target, k.members())?;
        let members: Vec<String> = k.members().iter().map(|t| t.to_string()).collect();
        println!("seq {seq:?}: {} (committee: {check})", members.join(" "));
    }
    Ok(())
}
