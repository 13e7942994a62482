//! Text formats: matroid files, committee files, chain files, training and sigma files.
//!
//! All formats are line based, UTF-8, with `#` starting a comment.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::path::PathBuf;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::linalg::{self, Rational};
use crate::matroid::{OrientedMatroid, Realization, SignSet};
use crate::signvec::{ElementSet, Sign, SignVector};
use crate::topes::MaximalChain;

/// Payload of a matroid file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidData {
    Topes(SignSet),
    Covectors(SignSet),
    Realization(Realization),
}

/// How a single-element extension is specified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionSpec {
    /// A new row in the ambient space of the realization.
    Rational(Vec<Rational>),
    /// A file of `<cocircuit> <sign>` lines.
    SigmaFile(PathBuf),
}

/// A parsed matroid file, with the optional training-set lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatroidFile {
    pub m: usize,
    pub data: MatroidData,
    pub labels: Option<Vec<Sign>>,
    pub extension: Option<ExtensionSpec>,
}

impl MatroidFile {
    /// Builds the oriented matroid. Tope files are taken as trusted input.
    pub fn to_matroid(&self, limits: &Limits) -> Result<OrientedMatroid> {
        match &self.data {
            MatroidData::Topes(t) => OrientedMatroid::from_topes(t, true),
            MatroidData::Covectors(l) => OrientedMatroid::from_covectors(l),
            MatroidData::Realization(r) => OrientedMatroid::from_realization_with(r, limits),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
    .trim()
}

fn header_field(fields: &[&str], key: &str, line: usize) -> Result<usize> {
    let prefix = format!("{key}=");
    fields
        .iter()
        .find_map(|f| f.strip_prefix(prefix.as_str()))
        .ok_or_else(|| Error::parse(line, format!("header lacks {key}=<int>")))?
        .parse()
        .map_err(|_| Error::parse(line, format!("header field {key} is not an integer")))
}

fn parse_sign_line(text: &str, m: usize, line: usize) -> Result<SignVector> {
    let v: SignVector = text
        .parse()
        .map_err(|e: Error| Error::parse(line, e.to_string()))?;
    if v.len() != m {
        return Err(Error::parse(
            line,
            format!("sign vector has length {} instead of {m}", v.len()),
        ));
    }
    Ok(v)
}

/// Parses `-=1,4 +=2,3` into a label per element.
pub fn parse_labels(text: &str, m: usize) -> Result<Vec<Sign>> {
    let mut labels: Vec<Option<Sign>> = vec![None; m];
    for part in text.split_whitespace() {
        let (sign, list) = part
            .split_once('=')
            .ok_or_else(|| Error::domain(format!("bad label group '{part}'")))?;
        let sign = match sign {
            "-" | "\u{2212}" => Sign::Minus,
            "+" => Sign::Plus,
            _ => return Err(Error::domain(format!("label sign must be + or -, got '{sign}'"))),
        };
        let set: ElementSet = list.parse()?;
        set.check_within(m)?;
        for e in set.iter() {
            if labels[e - 1].is_some() {
                return Err(Error::domain(format!("element {e} labelled twice")));
            }
            labels[e - 1] = Some(sign);
        }
    }
    labels
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.ok_or_else(|| Error::domain(format!("element {} has no label", i + 1))))
        .collect()
}

/// Text form of labels, e.g. `-=4 +=1,2,3`.
pub fn format_labels(labels: &[Sign]) -> String {
    let group = |s: Sign| {
        labels
            .iter()
            .enumerate()
            .filter(|(_, l)| **l == s)
            .map(|(i, _)| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    format!("-={} +={}", group(Sign::Minus), group(Sign::Plus))
}

/// Parses `rational <r rationals>` or `sigma <path>`.
pub fn parse_extension_spec(text: &str) -> Result<ExtensionSpec> {
    let mut words = text.split_whitespace();
    match words.next() {
        Some("rational") => {
            let coords = words.map(linalg::parse_rational).collect::<Result<Vec<_>>>()?;
            if coords.is_empty() {
                return Err(Error::domain("extension row has no coordinates"));
            }
            Ok(ExtensionSpec::Rational(coords))
        }
        Some("sigma") => {
            let path = words
                .next()
                .ok_or_else(|| Error::domain("extend sigma needs a file path"))?;
            Ok(ExtensionSpec::SigmaFile(PathBuf::from(path)))
        }
        _ => Err(Error::domain(format!(
            "extension must be 'rational <coords>' or 'sigma <file>', got '{text}'"
        ))),
    }
}

/// Parses a matroid or training file.
pub fn parse_matroid_file(text: &str) -> Result<MatroidFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty matroid file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.first() != Some(&"om") || fields.len() < 3 {
        return Err(Error::parse(
            hline,
            "expected header 'om topes|covectors|realization m=<int> ...'",
        ));
    }
    let kind = fields[1];
    let m = header_field(&fields, "m", hline)?;
    let r = if kind == "realization" {
        Some(header_field(&fields, "r", hline)?)
    } else {
        None
    };
    if !matches!(kind, "topes" | "covectors" | "realization") {
        return Err(Error::parse(hline, format!("unknown matroid kind '{kind}'")));
    }

    let mut labels = None;
    let mut extension = None;
    let mut signs: Vec<(usize, SignVector)> = Vec::new();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut seen_rows: HashSet<Vec<Rational>> = HashSet::new();
    let mut seen_signs: HashSet<SignVector> = HashSet::new();
    for (line, text) in lines {
        if let Some(rest) = text.strip_prefix("labels") {
            let parsed = parse_labels(rest, m).map_err(|e| Error::parse(line, e.to_string()))?;
            labels = Some(parsed);
            continue;
        }
        if let Some(rest) = text.strip_prefix("extend") {
            extension =
                Some(parse_extension_spec(rest).map_err(|e| Error::parse(line, e.to_string()))?);
            continue;
        }
        match r {
            Some(r) => {
                let row = text
                    .split_whitespace()
                    .map(linalg::parse_rational)
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| Error::parse(line, e.to_string()))?;
                if row.len() != r {
                    return Err(Error::parse(
                        line,
                        format!("row has {} coordinates instead of {r}", row.len()),
                    ));
                }
                if !seen_rows.insert(row.clone()) {
                    return Err(Error::parse(line, "duplicate record"));
                }
                rows.push(row);
            }
            None => {
                let v = parse_sign_line(text, m, line)?;
                if !seen_signs.insert(v) {
                    return Err(Error::parse(line, "duplicate record"));
                }
                signs.push((line, v));
            }
        }
    }
    let data = match kind {
        "realization" => {
            if rows.len() != m {
                return Err(Error::parse(
                    hline,
                    format!("header announces {m} rows but {} were given", rows.len()),
                ));
            }
            MatroidData::Realization(Realization::new(rows)?)
        }
        "topes" => MatroidData::Topes(signs.into_iter().map(|(_, v)| v).collect()),
        _ => MatroidData::Covectors(signs.into_iter().map(|(_, v)| v).collect()),
    };
    Ok(MatroidFile {
        m,
        data,
        labels,
        extension,
    })
}

pub fn read_matroid_file(path: &std::path::Path) -> Result<MatroidFile> {
    parse_matroid_file(&std::fs::read_to_string(path).map_err(|e| Error::file(path, e))?)
}

fn write_family(kind: &str, m: usize, family: &SignSet) -> String {
    let mut out = format!("om {kind} m={m}\n");
    for x in family {
        let _ = writeln!(out, "{x}");
    }
    out
}

pub fn write_topes(m: usize, topes: &SignSet) -> String {
    write_family("topes", m, topes)
}

pub fn write_covectors(m: usize, covectors: &SignSet) -> String {
    write_family("covectors", m, covectors)
}

pub fn write_realization(r: &Realization) -> String {
    let mut out = format!("om realization m={} r={}\n", r.m(), r.dim());
    for row in r.rows() {
        let words: Vec<String> = row.iter().map(linalg::format_rational).collect();
        let _ = writeln!(out, "{}", words.join(" "));
    }
    out
}

/// Writes the richest data the matroid carries: realization, else covectors, else topes.
pub fn write_matroid(om: &OrientedMatroid) -> String {
    if let Some(r) = om.realization() {
        write_realization(r)
    } else if let Some(l) = om.covectors() {
        write_covectors(om.m(), l)
    } else {
        write_topes(om.m(), om.topes())
    }
}

/// Parses a list of sign vectors, one per line; only the first word of a line is read.
pub fn parse_sign_list(text: &str) -> Result<Vec<SignVector>> {
    let mut out = Vec::new();
    let mut len = None;
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        let Some(word) = line.split_whitespace().next() else {
            continue;
        };
        let v: SignVector = word
            .parse()
            .map_err(|e: Error| Error::parse(i + 1, e.to_string()))?;
        match len {
            None => len = Some(v.len()),
            Some(l) if l != v.len() => {
                return Err(Error::parse(
                    i + 1,
                    format!("sign vector has length {} instead of {l}", v.len()),
                ))
            }
            _ => {}
        }
        out.push(v);
    }
    Ok(out)
}

/// Parses a chain file: one tope per line, every line after the first optionally
/// followed by the label of the step that reached it.
pub fn parse_chain(text: &str) -> Result<MaximalChain> {
    let mut topes = Vec::new();
    let mut given: Vec<(usize, usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        let mut words = line.split_whitespace();
        let Some(word) = words.next() else {
            continue;
        };
        let v: SignVector = word
            .parse()
            .map_err(|e: Error| Error::parse(i + 1, e.to_string()))?;
        if let Some(label) = words.next() {
            let label: usize = label
                .parse()
                .map_err(|_| Error::parse(i + 1, format!("label '{label}' is not an integer")))?;
            given.push((i + 1, topes.len(), label));
        }
        if words.next().is_some() {
            return Err(Error::parse(i + 1, "expected '<tope> [label]'"));
        }
        topes.push(v);
    }
    let chain = MaximalChain::new(topes)?;
    for (line, pos, label) in given {
        if pos == 0 || chain.labels()[pos - 1] != label {
            return Err(Error::parse(
                line,
                format!("label {label} does not match the element flipped at this step"),
            ));
        }
    }
    Ok(chain)
}

/// Parses a committee file, rejecting duplicates.
pub fn parse_committee(text: &str) -> Result<SignSet> {
    let list = parse_sign_list(text)?;
    let mut set = SignSet::new();
    for (i, v) in list.iter().enumerate() {
        if !set.insert(*v) {
            return Err(Error::parse(i + 1, format!("duplicate committee member {v}")));
        }
    }
    Ok(set)
}

pub fn write_committee(members: &SignSet) -> String {
    let mut out = String::new();
    for x in members {
        let _ = writeln!(out, "{x}");
    }
    out
}

/// Parses a sigma file of `<cocircuit> <sign>` lines.
pub fn parse_sigma(text: &str) -> Result<BTreeMap<SignVector, Sign>> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let (Some(y), Some(s), None) = (words.next(), words.next(), words.next()) else {
            return Err(Error::parse(i + 1, "expected '<cocircuit> <sign>'"));
        };
        let y: SignVector = y
            .parse()
            .map_err(|e: Error| Error::parse(i + 1, e.to_string()))?;
        let s = match s {
            "+" => Sign::Plus,
            "-" | "\u{2212}" => Sign::Minus,
            "0" => Sign::Zero,
            _ => return Err(Error::parse(i + 1, format!("bad sign '{s}'"))),
        };
        if out.insert(y, s).is_some() {
            return Err(Error::parse(i + 1, format!("duplicate cocircuit {y}")));
        }
    }
    Ok(out)
}

pub fn write_sigma(sigma: &BTreeMap<SignVector, Sign>) -> String {
    let mut out = String::new();
    for (y, s) in sigma {
        let _ = writeln!(out, "{y} {s}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signvec::sv;

    #[test]
    fn realization_file_round_trip() {
        let text = "# four lines\nom realization m=4 r=2\n1 0\n1 1\n0 1/2\n-1 1\n";
        let f = parse_matroid_file(text).unwrap();
        let MatroidData::Realization(r) = &f.data else {
            panic!("expected realization")
        };
        let again = parse_matroid_file(&write_realization(r)).unwrap();
        assert_eq!(again.data, f.data);
    }

    #[test]
    fn tope_file_round_trip() {
        let topes: SignSet = [sv("++"), sv("--"), sv("+-"), sv("-+")].into_iter().collect();
        let text = write_topes(2, &topes);
        assert_eq!(text, "om topes m=2\n--\n-+\n+-\n++\n");
        let f = parse_matroid_file(&text).unwrap();
        assert_eq!(f.data, MatroidData::Topes(topes));
    }

    #[test]
    fn reader_rejects_duplicates_and_bad_lengths() {
        let dup = "om topes m=2\n++\n--\n++\n";
        match parse_matroid_file(dup) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("unexpected {other:?}"),
        }
        let short = "om topes m=3\n+++\n--\n";
        match parse_matroid_file(short) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        let row = "om realization m=2 r=2\n1 0\n1\n";
        assert!(matches!(parse_matroid_file(row), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn training_lines() {
        let text = "om realization m=3 r=2\n1 0\n0 1\n1 1\nlabels -=2 +=1,3\nextend rational 1 -1\n";
        let f = parse_matroid_file(text).unwrap();
        assert_eq!(f.labels, Some(vec![Sign::Plus, Sign::Minus, Sign::Plus]));
        assert_eq!(
            f.extension,
            Some(ExtensionSpec::Rational(linalg::int_vec(&[1, -1])))
        );
        assert_eq!(format_labels(f.labels.as_ref().unwrap()), "-=2 +=1,3");
        assert!(parse_labels("-=1 +=1,2", 2).is_err());
        assert!(parse_labels("-=1", 2).is_err());
    }

    #[test]
    fn sigma_round_trip() {
        let mut s = BTreeMap::new();
        s.insert(sv("0-"), Sign::Plus);
        s.insert(sv("0+"), Sign::Minus);
        assert_eq!(parse_sigma(&write_sigma(&s)).unwrap(), s);
    }

    #[test]
    fn chain_reader_checks_labels() {
        let text = "++\n-+ 1\n-- 2\n";
        let c = parse_chain(text).unwrap();
        assert_eq!(c.labels(), &[1, 2]);
        assert_eq!(c.to_text(), text);
        assert!(parse_chain("++\n-+ 2\n--\n").is_err());
    }

    #[test]
    fn committee_reader() {
        let c = parse_committee("+-\n# note\n-+ extra\n").unwrap();
        assert_eq!(c.len(), 2);
        assert!(parse_committee("+-\n+-\n").is_err());
    }
}
