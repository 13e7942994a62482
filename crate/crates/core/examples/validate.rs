//! Checks the covector axioms, then removes one covector and prints the witness.

use tope_committee::matroid::validate_covector_axioms;
use tope_committee::{sv, OrientedMatroid, Realization};

fn main() -> anyhow::Result<()> {
    let r = Realization::from_integers(&[&[1, 0], &[1, 1], &[0, 1], &[-1, 1]])?;
    let om = OrientedMatroid::from_realization(&r)?;
    let covectors = om.covectors().expect("realizations carry covectors").clone();
    print!("{}", validate_covector_axioms(&covectors));
    let mut broken = covectors;
    broken.remove(&sv("0+++"));
    print!("{}", validate_covector_axioms(&broken));
    Ok(())
}
