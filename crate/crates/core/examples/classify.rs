//! Decides a new pattern by lifting a committee of the reoriented training matroid.

use tope_committee::classify::{self, Lift, TrainingSet};
use tope_committee::committees::Committee;
use tope_committee::format::{self, ExtensionSpec};
use tope_committee::Limits;

fn main() -> anyhow::Result<()> {
    let committee = Committee::new(4, format::parse_committee(include_str!("../fixtures/training.committee"))?)?;
    for text in [include_str!("../fixtures/training-c.om"), include_str!("../fixtures/training-d.om")] {
        let file = format::parse_matroid_file(text)?;
        let om = file.to_matroid(&Limits::default())?;
        let labels = file.labels.clone().ok_or_else(|| anyhow::anyhow!("missing labels"))?;
        let Some(ExtensionSpec::Rational(g)) = file.extension.clone() else {
            anyhow::bail!("missing rational extension");
        };
        let s = TrainingSet::new(om, labels)?;
        let m = classify::reorient_training(&s)?;
        let ext = classify::extend_by_row(&m, &g)?;
        match classify::lift_committee(&s, &committee, &ext)? {
            Lift::Conformal(lifted) => {
                let names: Vec<String> = lifted.iter().map(|t| t.to_string()).collect();
                println!("lifted committee {}", names.join(" "));
            }
            Lift::NonConformal { offending } => println!("lift is not conformal at {offending}"),
        }
        print!("{}", classify::format_verdicts(&classify::verdicts(&s, &committee, &ext)?));
    }
    Ok(())
}
