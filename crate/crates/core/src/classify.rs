//! Two-class pattern recognition with tope committees.
//!
//! A training set is a simple oriented matroid whose elements carry class labels.
//! Reorienting the negatively labelled elements gives the matroid the committee is
//! built for. A new pattern is a single-element extension, described by a
//! localization `σ` on the cocircuits, and is decided by majority over the lifted
//! committee.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use crate::committees::{is_committee, Committee};
use crate::error::{Error, Result};
use crate::linalg::{self, Rational};
use crate::matroid::{validate_circuit_axioms, Axiom, OrientedMatroid, SignSet, ValidationReport};
use crate::signvec::{ElementSet, Sign, SignVector};

/// A labelled simple oriented matroid with both classes nonempty.
#[derive(Clone, Debug)]
pub struct TrainingSet {
    matroid: OrientedMatroid,
    labels: Vec<Sign>,
}

impl TrainingSet {
    pub fn new(matroid: OrientedMatroid, labels: Vec<Sign>) -> Result<Self> {
        if labels.len() != matroid.m() {
            return Err(Error::domain(format!(
                "{} labels given for {} elements",
                labels.len(),
                matroid.m()
            )));
        }
        if let Some(e) = labels.iter().position(|s| s.is_zero()) {
            return Err(Error::domain(format!("element {} has label 0", e + 1)));
        }
        if !labels.contains(&Sign::Minus) || !labels.contains(&Sign::Plus) {
            return Err(Error::domain("both classes must contain at least one pattern"));
        }
        matroid.require_simple()?;
        Ok(TrainingSet { matroid, labels })
    }

    pub fn matroid(&self) -> &OrientedMatroid {
        &self.matroid
    }

    pub fn m(&self) -> usize {
        self.matroid.m()
    }

    pub fn labels(&self) -> &[Sign] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> Sign {
        self.labels[e - 1]
    }

    /// `λ^{-1}(-)`.
    pub fn negative_class(&self) -> ElementSet {
        ElementSet::from_elements(
            self.labels
                .iter()
                .enumerate()
                .filter(|(_, s)| **s == Sign::Minus)
                .map(|(i, _)| i + 1),
        )
    }

    /// The same matroid with every label negated.
    pub fn swap_classes(&self) -> Self {
        TrainingSet {
            matroid: self.matroid.clone(),
            labels: self.labels.iter().map(|s| -*s).collect(),
        }
    }
}

/// `₋λ^{-1}(-) S`.
pub fn reorient_training(s: &TrainingSet) -> Result<OrientedMatroid> {
    s.matroid.reorient(s.negative_class())
}

/// Where an extension came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionSource {
    Sigma,
    Row(Vec<Rational>),
}

/// A single-element extension: the localization and the cocircuits on `m + 1` elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub sigma: BTreeMap<SignVector, Sign>,
    pub extended_cocircuits: SignSet,
    pub source: ExtensionSource,
}

impl Extension {
    /// True when `σ` vanishes everywhere, making the new element a loop.
    pub fn is_loop(&self) -> bool {
        self.sigma.values().all(|s| s.is_zero())
    }
}

/// `σ(Y) = sign <x_Y, g>` where `x_Y` is a point realizing the cocircuit `Y`.
pub fn localization_from_realization(om: &OrientedMatroid, g: &[Rational]) -> Result<BTreeMap<SignVector, Sign>> {
    let r = om.require_realization()?;
    let cocircuits = om.require_cocircuits()?;
    if g.len() != r.dim() {
        return Err(Error::domain(format!(
            "extension row has dimension {} instead of {}",
            g.len(),
            r.dim()
        )));
    }
    if g.iter().all(|x| x.is_zero()) {
        return Err(Error::precondition("the extension row is zero, so the new element is a loop"));
    }
    let mut with_g = r.rows().to_vec();
    with_g.push(g.to_vec());
    if linalg::rank(&with_g, r.dim()) > r.rank() {
        return Err(Error::precondition(
            "the extension row leaves the row space, so the new element is a coloop",
        ));
    }
    for e in 1..=r.m() {
        if linalg::is_scalar_multiple(g, r.row(e), true) {
            return Err(Error::precondition(format!(
                "the extension is not simple: the new element is parallel to element {e}"
            )));
        }
        if linalg::is_scalar_multiple(g, r.row(e), false) {
            return Err(Error::precondition(format!(
                "the extension is not simple: the new element is antiparallel to element {e}"
            )));
        }
    }
    let mut sigma = BTreeMap::new();
    for y in cocircuits {
        let zero_rows: Vec<Vec<Rational>> = y.zero_set().iter().map(|e| r.row(e).to_vec()).collect();
        let basis = linalg::nullspace(&zero_rows, r.dim());
        let (x, pattern) = basis
            .into_iter()
            .map(|x| {
                let p = r.evaluate(&x);
                (x, p)
            })
            .find(|(_, p)| !p.is_zero())
            .expect("every cocircuit is realized by a point off the common kernel");
        let x: Vec<Rational> = if pattern == *y {
            x
        } else if pattern == y.negate() {
            x.iter().map(|v| -v).collect()
        } else {
            unreachable!("the zero set of a cocircuit determines it up to sign");
        };
        sigma.insert(*y, linalg::sign_of(&linalg::dot(&x, g)));
    }
    Ok(sigma)
}

/// Cocircuits of the extension by `σ`: every `(Y, σ(Y))`, plus `(Y' ∘ Y'', 0)` for
/// conformal cocircuits with opposite nonzero values whose composition has face rank 2.
pub fn extend(om: &OrientedMatroid, sigma: &BTreeMap<SignVector, Sign>) -> Result<Extension> {
    extend_with_source(om, sigma, ExtensionSource::Sigma)
}

fn extend_with_source(
    om: &OrientedMatroid,
    sigma: &BTreeMap<SignVector, Sign>,
    source: ExtensionSource,
) -> Result<Extension> {
    let cocircuits = om.require_cocircuits()?;
    let mut report = ValidationReport::default();
    for y in cocircuits {
        match (sigma.get(y), sigma.get(&y.negate())) {
            (Some(a), Some(b)) if *a == -*b => {}
            (Some(_), Some(_)) => report.push(Axiom::Localization, vec![*y.min(&y.negate()), *y.max(&y.negate())], None),
            _ => report.push(Axiom::Localization, vec![*y], None),
        }
    }
    for y in sigma.keys() {
        if !cocircuits.contains(y) {
            report.push(Axiom::Localization, vec![*y], None);
        }
    }
    report.violations.dedup();
    report.into_result()?;

    let ranks = om.face_ranks()?;
    let mut extended = SignSet::new();
    for (y, s) in sigma {
        extended.insert(y.append(*s)?);
    }
    let signed: Vec<(&SignVector, &Sign)> = sigma.iter().filter(|(_, s)| !s.is_zero()).collect();
    for (i, (y1, s1)) in signed.iter().enumerate() {
        for (y2, s2) in &signed[i + 1..] {
            if **s1 != -**s2 || !y1.is_conformal(y2) {
                continue;
            }
            let z = y1.comp(y2);
            if ranks.get(&z) == Some(&2) {
                extended.insert(z.append(Sign::Zero)?);
            }
        }
    }
    validate_circuit_axioms(&extended).into_result()?;
    Ok(Extension {
        sigma: sigma.clone(),
        extended_cocircuits: extended,
        source,
    })
}

/// Extension of a realizable matroid by the row `g`.
pub fn extend_by_row(om: &OrientedMatroid, g: &[Rational]) -> Result<Extension> {
    let sigma = localization_from_realization(om, g)?;
    extend_with_source(om, &sigma, ExtensionSource::Row(g.to_vec()))
}

/// Cocircuits conformal to the tope `k`.
pub fn conforming_cocircuits(om: &OrientedMatroid, k: &SignVector) -> Result<SignSet> {
    om.require_tope(k)?;
    let cocircuits = om.require_cocircuits()?;
    Ok(cocircuits.iter().filter(|d| d.is_conformal(k)).copied().collect())
}

/// The lifted committee, or the first member whose lifted cocircuits disagree at the new element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lift {
    /// One lifted vector per committee member, in the committee's canonical order.
    Conformal(Vec<SignVector>),
    NonConformal { offending: SignVector },
}

/// Lifts each member `K` to `₋λ^{-1}(-)(∘_{D ∈ C_K} (D, σ(D)))`.
pub fn lift_committee(s: &TrainingSet, kstar: &Committee, ext: &Extension) -> Result<Lift> {
    let m_om = reorient_training(s)?;
    if !is_committee(&m_om, kstar.members())? {
        return Err(Error::precondition(
            "the given set is not a committee for the reoriented training matroid",
        ));
    }
    let negatives = s.negative_class();
    let mut lifted = Vec::with_capacity(kstar.len());
    for k in kstar.members() {
        let conforming = conforming_cocircuits(&m_om, k)?;
        let mut g_sign = Sign::Zero;
        let mut composed = SignVector::zero(s.m());
        for d in &conforming {
            let sd = *ext.sigma.get(d).ok_or_else(|| {
                Error::precondition(format!("the localization is undefined at cocircuit {d}"))
            })?;
            if !sd.is_zero() {
                if !g_sign.is_zero() && g_sign != sd {
                    return Ok(Lift::NonConformal { offending: *k });
                }
                g_sign = sd;
            }
            composed = composed.comp(d);
        }
        debug_assert_eq!(composed, *k);
        lifted.push(composed.flip(negatives).append(g_sign)?);
    }
    Ok(Lift::Conformal(lifted))
}

fn majority(signs: impl Iterator<Item = Sign>) -> Sign {
    let (mut plus, mut minus) = (0usize, 0usize);
    for s in signs {
        match s {
            Sign::Plus => plus += 1,
            Sign::Minus => minus += 1,
            Sign::Zero => {}
        }
    }
    match plus.cmp(&minus) {
        std::cmp::Ordering::Greater => Sign::Plus,
        std::cmp::Ordering::Less => Sign::Minus,
        std::cmp::Ordering::Equal => Sign::Zero,
    }
}

/// Decision for pattern `f`, where `1..=m` are the training patterns and `m + 1` the new one.
pub fn decide(s: &TrainingSet, kstar: &Committee, ext: &Extension, f: usize) -> Result<Sign> {
    Ok(verdicts(s, kstar, ext)?[f.checked_sub(1).filter(|&i| i <= s.m()).ok_or_else(|| {
        Error::domain(format!("pattern {f} outside [1,{}]", s.m() + 1))
    })?])
}

/// Decisions for all `m + 1` patterns.
pub fn verdicts(s: &TrainingSet, kstar: &Committee, ext: &Extension) -> Result<Vec<Sign>> {
    let m = s.m();
    match lift_committee(s, kstar, ext)? {
        Lift::Conformal(lifted) => Ok((1..=m + 1).map(|f| majority(lifted.iter().map(|k| k.get(f)))).collect()),
        Lift::NonConformal { .. } => {
            let negatives = s.negative_class();
            let mut out: Vec<Sign> = (1..=m)
                .map(|e| majority(kstar.members().iter().map(|k| k.flip(negatives).get(e))))
                .collect();
            out.push(Sign::Zero);
            Ok(out)
        }
    }
}

/// Class name for a decision: `A` for `-`, `B` for `+`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict(pub Sign);

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            Sign::Minus => "A",
            Sign::Plus => "B",
            Sign::Zero => "unclassified",
        })
    }
}

/// `pattern <id>: A|B|unclassified`, one line per pattern.
pub fn format_verdicts(v: &[Sign]) -> String {
    v.iter()
        .enumerate()
        .map(|(i, s)| format!("pattern {}: {}\n", i + 1, Verdict(*s)))
        .collect()
}
