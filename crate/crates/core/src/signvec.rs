//! Sign vectors over a ground set `E = {1, ..., m}` with `m <= 64`.
//!
//! A sign vector is stored as two disjoint bit masks, one for the positive
//! part and one for the negative part. Element `e` lives in bit `e - 1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_ELEMENTS: usize = 64;

/// One of the three signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn to_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '-' => Some(Sign::Minus),
            '0' => Some(Sign::Zero),
            '+' => Some(Sign::Plus),
            _ => None,
        }
    }

    /// Sign of an ordered quantity compared against zero.
    pub fn of<T: PartialOrd + Default>(x: &T) -> Sign {
        let zero = T::default();
        match x.partial_cmp(&zero) {
            Some(Ordering::Greater) => Sign::Plus,
            Some(Ordering::Less) => Sign::Minus,
            _ => Sign::Zero,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A subset of `{1, ..., 64}` stored as a bit mask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const fn empty() -> Self {
        ElementSet(0)
    }

    /// The whole ground set `[1, m]`.
    pub fn full(m: usize) -> Self {
        ElementSet(low_mask(m))
    }

    /// The interval `[a, b]` (empty when `a > b`).
    pub fn interval(a: usize, b: usize) -> Self {
        if a > b || a == 0 {
            return ElementSet::empty();
        }
        ElementSet(low_mask(b) & !low_mask(a - 1))
    }

    pub fn singleton(e: usize) -> Self {
        assert!((1..=MAX_ELEMENTS).contains(&e), "element {e} out of range");
        ElementSet(1 << (e - 1))
    }

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Builds a set from 1-based element indices, rejecting anything outside `[1, 64]`.
    pub fn try_from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Result<Self> {
        let mut bits = 0u64;
        for e in elements {
            if !(1..=MAX_ELEMENTS).contains(&e) {
                return Err(Error::domain(format!("element {e} out of range")));
            }
            bits |= 1 << (e - 1);
        }
        Ok(ElementSet(bits))
    }

    /// Builds a set from 1-based element indices. Panics on indices outside `[1, 64]`.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        Self::try_from_elements(elements).expect("element index out of range")
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_ELEMENTS).contains(&e) && self.0 & (1 << (e - 1)) != 0
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= ElementSet::singleton(e).0;
    }

    pub fn remove(&mut self, e: usize) {
        self.0 &= !ElementSet::singleton(e).0;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Largest element, if any.
    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Checks that every element lies in `[1, m]`.
    pub fn check_within(self, m: usize) -> Result<()> {
        match self.max_element() {
            Some(e) if e > m => Err(Error::domain(format!(
                "element {e} outside ground set [1,{m}]"
            ))),
            _ => Ok(()),
        }
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// Comma-separated list, e.g. `1,2,5`.
    pub fn to_list(self) -> String {
        self.iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet::from_elements(iter)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_list())
    }
}

impl FromStr for ElementSet {
    type Err = Error;

    /// Parses a comma-separated list of 1-based indices. The empty string is the empty set.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        if s.trim().is_empty() {
            return Ok(ElementSet::empty());
        }
        let mut out = Vec::new();
        for part in s.split(',') {
            let e: usize = part
                .trim()
                .parse()
                .map_err(|_| Error::domain(format!("bad element index '{}'", part.trim())))?;
            out.push(e);
        }
        ElementSet::try_from_elements(out)
    }
}

fn low_mask(m: usize) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// A word over `{-, 0, +}` indexed by `1..=len`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignVector {
    len: u8,
    plus: u64,
    minus: u64,
}

impl SignVector {
    /// The zero vector of length `len`.
    pub fn zero(len: usize) -> Self {
        assert!(len <= MAX_ELEMENTS, "length {len} exceeds {MAX_ELEMENTS}");
        SignVector {
            len: len as u8,
            plus: 0,
            minus: 0,
        }
    }

    /// The all-plus vector `T^(+)`.
    pub fn all_plus(len: usize) -> Self {
        SignVector {
            plus: low_mask(len),
            ..SignVector::zero(len)
        }
    }

    /// The all-minus vector `T^(-)`.
    pub fn all_minus(len: usize) -> Self {
        SignVector {
            minus: low_mask(len),
            ..SignVector::zero(len)
        }
    }

    /// Builds a vector from its positive and negative parts.
    pub fn from_parts(len: usize, plus: ElementSet, minus: ElementSet) -> Result<Self> {
        if len > MAX_ELEMENTS {
            return Err(Error::domain(format!(
                "length {len} exceeds supported maximum {MAX_ELEMENTS}"
            )));
        }
        plus.union(minus).check_within(len)?;
        if !plus.is_disjoint(minus) {
            return Err(Error::domain("positive and negative parts overlap"));
        }
        Ok(SignVector {
            len: len as u8,
            plus: plus.bits(),
            minus: minus.bits(),
        })
    }

    pub fn from_signs(signs: &[Sign]) -> Result<Self> {
        if signs.len() > MAX_ELEMENTS {
            return Err(Error::domain(format!(
                "length {} exceeds supported maximum {MAX_ELEMENTS}",
                signs.len()
            )));
        }
        let mut v = SignVector::zero(signs.len());
        for (i, s) in signs.iter().enumerate() {
            match s {
                Sign::Plus => v.plus |= 1 << i,
                Sign::Minus => v.minus |= 1 << i,
                Sign::Zero => {}
            }
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Sign at element `e` (1-based). Panics when `e` is out of range.
    pub fn get(&self, e: usize) -> Sign {
        assert!(
            e >= 1 && e <= self.len(),
            "element {e} outside [1,{}]",
            self.len
        );
        let bit = 1u64 << (e - 1);
        if self.plus & bit != 0 {
            Sign::Plus
        } else if self.minus & bit != 0 {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    /// Copy with element `e` set to `s`.
    pub fn with(&self, e: usize, s: Sign) -> Self {
        assert!(e >= 1 && e <= self.len(), "element {e} out of range");
        let bit = 1u64 << (e - 1);
        let mut v = *self;
        v.plus &= !bit;
        v.minus &= !bit;
        match s {
            Sign::Plus => v.plus |= bit,
            Sign::Minus => v.minus |= bit,
            Sign::Zero => {}
        }
        v
    }

    pub fn signs(&self) -> impl Iterator<Item = Sign> + '_ {
        (1..=self.len()).map(move |e| self.get(e))
    }

    /// `X^+`.
    pub fn plus_set(&self) -> ElementSet {
        ElementSet(self.plus)
    }

    /// `X^-`.
    pub fn minus_set(&self) -> ElementSet {
        ElementSet(self.minus)
    }

    /// Support `X^+ ∪ X^-`.
    pub fn support(&self) -> ElementSet {
        ElementSet(self.plus | self.minus)
    }

    /// Zero set `z(X)`.
    pub fn zero_set(&self) -> ElementSet {
        ElementSet(low_mask(self.len()) & !(self.plus | self.minus))
    }

    pub fn is_zero(&self) -> bool {
        self.plus | self.minus == 0
    }

    /// True when every entry is `0` or `+`.
    pub fn is_nonnegative(&self) -> bool {
        self.minus == 0
    }

    /// The opposite vector `-X`.
    pub fn negate(&self) -> Self {
        SignVector {
            len: self.len,
            plus: self.minus,
            minus: self.plus,
        }
    }

    /// `₋A X`: flips signs on `A`; zero entries stay zero.
    pub fn reorient(&self, a: ElementSet) -> Result<Self> {
        a.check_within(self.len())?;
        Ok(self.flip(a))
    }

    pub(crate) fn flip(&self, a: ElementSet) -> Self {
        let a = a.bits();
        SignVector {
            len: self.len,
            plus: (self.plus & !a) | (self.minus & a),
            minus: (self.minus & !a) | (self.plus & a),
        }
    }

    /// Composition `X ∘ Y`.
    pub fn compose(&self, other: &SignVector) -> Result<Self> {
        self.check_len(other)?;
        Ok(self.comp(other))
    }

    pub(crate) fn comp(&self, other: &SignVector) -> Self {
        debug_assert_eq!(self.len, other.len);
        let free = !(self.plus | self.minus);
        SignVector {
            len: self.len,
            plus: self.plus | (other.plus & free),
            minus: self.minus | (other.minus & free),
        }
    }

    /// Separation set `S(X, Y) = {e : X(e) = -Y(e) != 0}`.
    pub fn separation_set(&self, other: &SignVector) -> Result<ElementSet> {
        self.check_len(other)?;
        Ok(self.sep(other))
    }

    pub(crate) fn sep(&self, other: &SignVector) -> ElementSet {
        debug_assert_eq!(self.len, other.len);
        ElementSet((self.plus & other.minus) | (self.minus & other.plus))
    }

    /// True when the separation set is empty.
    pub fn is_conformal(&self, other: &SignVector) -> bool {
        self.len == other.len && self.sep(other).is_empty()
    }

    /// Product order: `X <= Y` iff `X(e) ∈ {0, Y(e)}` for every `e`.
    pub fn leq(&self, other: &SignVector) -> bool {
        self.len == other.len && self.plus & !other.plus == 0 && self.minus & !other.minus == 0
    }

    /// Restriction to `A`, re-indexed in increasing order of the original indices.
    pub fn restrict(&self, a: ElementSet) -> Result<Self> {
        a.check_within(self.len())?;
        let mut out = SignVector::zero(a.len());
        for (i, e) in a.iter().enumerate() {
            let bit = 1u64 << (e - 1);
            if self.plus & bit != 0 {
                out.plus |= 1 << i;
            } else if self.minus & bit != 0 {
                out.minus |= 1 << i;
            }
        }
        Ok(out)
    }

    /// Appends one more element with the given sign.
    pub fn append(&self, s: Sign) -> Result<Self> {
        if self.len() >= MAX_ELEMENTS {
            return Err(Error::domain("cannot extend a vector of maximal length"));
        }
        let v = SignVector {
            len: self.len + 1,
            ..*self
        };
        Ok(v.with(v.len(), s))
    }

    /// Moves the entry at element `e` to element `perm[e - 1]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.len(), "permutation length mismatch");
        let mut out = SignVector::zero(self.len());
        for (i, &target) in perm.iter().enumerate() {
            let bit = 1u64 << i;
            let tbit = 1u64 << (target - 1);
            if self.plus & bit != 0 {
                out.plus |= tbit;
            } else if self.minus & bit != 0 {
                out.minus |= tbit;
            }
        }
        out
    }

    fn check_len(&self, other: &SignVector) -> Result<()> {
        if self.len != other.len {
            Err(Error::domain(format!(
                "length mismatch: {} vs {}",
                self.len, other.len
            )))
        } else {
            Ok(())
        }
    }
}

impl Neg for SignVector {
    type Output = SignVector;

    fn neg(self) -> SignVector {
        self.negate()
    }
}

impl Ord for SignVector {
    /// Lexicographic order on the text form with `-` < `0` < `+`, shorter first on ties.
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = (self.plus ^ other.plus) | (self.minus ^ other.minus);
        let common = low_mask(self.len().min(other.len()));
        let diff = diff & common;
        if diff == 0 {
            return self.len.cmp(&other.len);
        }
        let bit = diff & diff.wrapping_neg();
        let rank = |v: &SignVector| {
            if v.minus & bit != 0 {
                0
            } else if v.plus & bit != 0 {
                2
            } else {
                1
            }
        };
        rank(self).cmp(&rank(other))
    }
}

impl PartialOrd for SignVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.signs() {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for SignVector {
    type Err = Error;

    /// Parses the ASCII text form. The Unicode minus sign is accepted as `-`.
    fn from_str(s: &str) -> Result<Self> {
        let mut signs = Vec::with_capacity(s.len());
        for c in s.trim().chars() {
            let c = if c == '\u{2212}' { '-' } else { c };
            match Sign::from_char(c) {
                Some(sign) => signs.push(sign),
                None => return Err(Error::domain(format!("invalid sign character '{c}'"))),
            }
        }
        SignVector::from_signs(&signs)
    }
}

/// Parses a literal, panicking on malformed input. Intended for tests and examples.
pub fn sv(s: &str) -> SignVector {
    s.parse().unwrap_or_else(|e| panic!("bad sign vector {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negate_examples() {
        assert_eq!(sv("++0-").negate(), sv("--0+"));
        assert_eq!(sv("000").negate(), sv("000"));
        assert_eq!(sv("++++++").negate(), sv("------"));
    }

    #[test]
    fn reorient_examples() {
        let a = ElementSet::from_elements([1, 2]);
        assert_eq!(sv("++++++").reorient(a).unwrap(), sv("--++++"));
        let x = sv("+-0+-");
        assert_eq!(x.reorient(ElementSet::empty()).unwrap(), x);
        assert_eq!(x.reorient(ElementSet::full(5)).unwrap(), x.negate());
        assert!(x.reorient(ElementSet::singleton(6)).is_err());
    }

    #[test]
    fn compose_examples() {
        assert_eq!(sv("+0-").compose(&sv("0++")).unwrap(), sv("++-"));
        assert_eq!(sv("000").compose(&sv("-+0")).unwrap(), sv("-+0"));
        let x = sv("+00-");
        let y = sv("0+0-");
        assert_eq!(x.compose(&y).unwrap(), y.compose(&x).unwrap());
        assert!(sv("+").compose(&sv("++")).is_err());
    }

    #[test]
    fn separation_examples() {
        assert_eq!(
            sv("++++++").separation_set(&sv("--++++")).unwrap(),
            ElementSet::from_elements([1, 2])
        );
        let t = sv("+-+-");
        assert!(t.separation_set(&t).unwrap().is_empty());
        assert_eq!(t.separation_set(&-t).unwrap(), ElementSet::full(4));
    }

    #[test]
    fn leq_examples() {
        assert!(sv("0+0").leq(&sv("++-")));
        assert!(!sv("+").leq(&sv("-")));
        assert!(sv("000").leq(&sv("+-0")));
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(
            sv("+-0+").restrict(ElementSet::from_elements([2, 4])).unwrap(),
            sv("-+")
        );
        let x = sv("+-0+");
        assert_eq!(x.restrict(ElementSet::full(4)).unwrap(), x);
        assert_eq!(sv("+++").restrict(ElementSet::empty()).unwrap().len(), 0);
    }

    #[test]
    fn canonical_order_matches_string_order() {
        let rank = |c: char| match c {
            '-' => 0,
            '0' => 1,
            _ => 2,
        };
        let words = ["+-0", "-++", "0--", "+++", "---", "00+", "-0+"];
        for a in words {
            for b in words {
                let expect = a
                    .chars()
                    .map(rank)
                    .collect::<Vec<_>>()
                    .cmp(&b.chars().map(rank).collect::<Vec<_>>());
                assert_eq!(sv(a).cmp(&sv(b)), expect, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn parse_rejects_other_characters() {
        assert!("+x-".parse::<SignVector>().is_err());
        assert_eq!("\u{2212}+".parse::<SignVector>().unwrap(), sv("-+"));
    }

    #[test]
    fn element_set_interval_and_parse() {
        assert_eq!(ElementSet::interval(2, 4), ElementSet::from_elements([2, 3, 4]));
        assert!(ElementSet::interval(3, 2).is_empty());
        assert_eq!("1,3".parse::<ElementSet>().unwrap().to_list(), "1,3");
        assert_eq!(ElementSet::full(64).len(), 64);
    }

    #[test]
    fn permute_moves_entries() {
        assert_eq!(sv("+-0").permute(&[2, 3, 1]), sv("0+-"));
    }
}
