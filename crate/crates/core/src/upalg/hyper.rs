//! Hypernaturals: equivalence classes of ultimately periodic natural-valued
//! sequences modulo a.e. equality under the active anchored ultrafilter.
//!
//! A value carries one representative sequence. Arithmetic is pointwise on
//! representatives, so it is independent of the representative up to a.e.
//! equality; the decided operations (comparison, parity, limitedness) take
//! the ultrafilter as an explicit parameter.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use super::seq::{Rel, UppSeq};
use super::set::AnchoredUltrafilter;
use super::UpAlgError;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
}

/// A hypernatural given by one natural-valued representative sequence.
///
/// Structural (`==`) equality compares canonical representatives; semantic
/// equality is a.e. equality, see [`Hypernatural::eq_under`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Hypernatural {
    rep: UppSeq,
}

impl Hypernatural {
    pub fn new(rep: UppSeq) -> Result<Self, UpAlgError> {
        rep.check_natural()?;
        Ok(Hypernatural { rep })
    }

    pub fn from_u64(value: u64) -> Self {
        Hypernatural {
            rep: UppSeq::constant(BigInt::from(value)),
        }
    }

    pub fn zero() -> Self {
        Hypernatural::from_u64(0)
    }

    pub fn one() -> Self {
        Hypernatural::from_u64(1)
    }

    /// The hypernatural `[<n>]`.
    pub fn ident() -> Self {
        Hypernatural {
            rep: UppSeq::ident(),
        }
    }

    pub fn parse_poly_text(text: &str) -> Result<Self, UpAlgError> {
        Hypernatural::new(UppSeq::parse_poly_text(text)?)
    }

    pub fn representative(&self) -> &UppSeq {
        &self.rep
    }

    pub fn into_representative(self) -> UppSeq {
        self.rep
    }

    pub fn term(&self, n: u64) -> BigInt {
        self.rep.term(n)
    }

    pub fn add(&self, other: &Self) -> Self {
        Hypernatural {
            rep: self.rep.add(&other.rep),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Hypernatural {
            rep: self.rep.mul(&other.rep),
        }
    }

    /// Subtraction under the precondition `other <= self` a.e.; clamps to 0
    /// on the decision-irrelevant exceptional set.
    pub fn checked_sub(
        &self,
        other: &Self,
        filter: &AnchoredUltrafilter,
    ) -> Result<Self, UpAlgError> {
        let dominated = other.rep.relate(&self.rep, Rel::Le)?;
        if !filter.decide(&dominated) {
            return Err(UpAlgError::NegativeAlmostEverywhere);
        }
        Ok(Hypernatural {
            rep: self.rep.sub(&other.rep).clamp_nonneg()?,
        })
    }

    /// Decided trichotomy: exactly one of the three pointwise comparison
    /// sets is large.
    pub fn cmp_under(&self, other: &Self, filter: &AnchoredUltrafilter) -> Ordering {
        let less = self
            .rep
            .relate(&other.rep, Rel::Lt)
            .expect("comparison sets of valid sequences are computable");
        if filter.decide(&less) {
            return Ordering::Less;
        }
        let equal = self
            .rep
            .relate(&other.rep, Rel::Eq)
            .expect("comparison sets of valid sequences are computable");
        if filter.decide(&equal) {
            Ordering::Equal
        } else {
            Ordering::Greater
        }
    }

    pub fn eq_under(&self, other: &Self, filter: &AnchoredUltrafilter) -> bool {
        self.cmp_under(other, filter) == Ordering::Equal
    }

    pub fn le_under(&self, other: &Self, filter: &AnchoredUltrafilter) -> bool {
        self.cmp_under(other, filter) != Ordering::Greater
    }

    /// Limited iff the polynomial governing the anchor's residue class is
    /// constant: a nonconstant natural-valued polynomial is unbounded there,
    /// a constant one bounds the value a.e.
    pub fn is_limited(&self, filter: &AnchoredUltrafilter) -> bool {
        self.anchor_class_poly(filter).is_constant()
    }

    /// The standard natural this value is a.e. equal to, when limited.
    pub fn identify_standard(&self, filter: &AnchoredUltrafilter) -> Option<BigInt> {
        let poly = self.anchor_class_poly(filter);
        poly.is_constant().then(|| poly.constant_term().to_integer())
    }

    fn anchor_class_poly(&self, filter: &AnchoredUltrafilter) -> &super::poly::Poly {
        let len = self.rep.cycle_len();
        let a = filter.anchor() % len;
        let t = self.rep.threshold() % len;
        let position = ((a + len - t) % len) as usize;
        &self.rep.cycle()[position]
    }

    /// Decided parity of the value.
    pub fn parity_under(&self, filter: &AnchoredUltrafilter) -> Parity {
        let evens = self
            .rep
            .even_set()
            .expect("parity sets of valid sequences are computable");
        if filter.decide(&evens) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Pointwise minimum of a nonempty list.
    pub fn min_of(items: &[Hypernatural]) -> Result<Hypernatural, UpAlgError> {
        Hypernatural::fold_pointwise(items, UppSeq::min_pointwise)
    }

    /// Pointwise maximum of a nonempty list.
    pub fn max_of(items: &[Hypernatural]) -> Result<Hypernatural, UpAlgError> {
        Hypernatural::fold_pointwise(items, UppSeq::max_pointwise)
    }

    fn fold_pointwise(
        items: &[Hypernatural],
        op: impl Fn(&UppSeq, &UppSeq) -> Result<UppSeq, UpAlgError>,
    ) -> Result<Hypernatural, UpAlgError> {
        let (first, rest) = items.split_first().ok_or(UpAlgError::EmptySet)?;
        let mut acc = first.rep.clone();
        for item in rest {
            acc = op(&acc, &item.rep)?;
        }
        Ok(Hypernatural { rep: acc })
    }

    /// First `count` values along the anchor progression of this value's
    /// representative (for illustration; decisions never sample).
    pub fn sample_terms(&self, filter: &AnchoredUltrafilter, count: usize) -> Vec<(u64, BigInt)> {
        filter
            .progression(self.rep.cycle_len(), self.rep.threshold(), count)
            .into_iter()
            .map(|n| (n, self.term(n)))
            .collect()
    }
}

impl fmt::Display for Hypernatural {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(out)
    }
}

impl FromStr for Hypernatural {
    type Err = UpAlgError;

    fn from_str(text: &str) -> Result<Self, UpAlgError> {
        Hypernatural::new(text.parse::<UppSeq>()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::upalg::Poly;
    use alloc::vec;

    fn hn(text: &str) -> Hypernatural {
        Hypernatural::parse_poly_text(text).unwrap()
    }

    fn hn_cycle(polys: &[&str]) -> Hypernatural {
        Hypernatural::new(
            UppSeq::new(0, polys.iter().map(|t| Poly::parse(t).unwrap()).collect(), vec![]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn arithmetic_identities() {
        assert_eq!(hn("n").add(&hn("n+1")), hn("2*n+1"));
        assert_eq!(hn("n").mul(&hn("n")), hn("n^2"));
        // n*(n-1) then exact halving stays integer-valued
        let product = hn("n").mul(&hn("n").checked_sub(&hn("1"), &AnchoredUltrafilter::new(0)).unwrap());
        let triangle = Hypernatural::new(product.rep.floor_half().unwrap()).unwrap();
        for n in 0..4u64 {
            assert_eq!(triangle.term(n), BigInt::from(n * n.saturating_sub(1) / 2));
        }
    }

    #[test]
    fn checked_sub_clamps_and_rejects() {
        let f = AnchoredUltrafilter::new(0);
        // n - 5 clamps below 5 and errors in the reversed direction
        let d = hn("n").checked_sub(&hn("5"), &f).unwrap();
        assert_eq!(d.term(2), BigInt::from(0));
        assert_eq!(d.term(9), BigInt::from(4));
        assert!(matches!(
            hn("5").checked_sub(&hn("n"), &f),
            Err(UpAlgError::NegativeAlmostEverywhere)
        ));
    }

    #[test]
    fn decided_comparisons() {
        let f = AnchoredUltrafilter::new(0);
        assert_eq!(hn("n").cmp_under(&hn("n+1"), &f), Ordering::Less);
        // leading coefficient dominance for any anchor
        for anchor in [0, 1, 7] {
            let f = AnchoredUltrafilter::new(anchor);
            assert_eq!(hn("n^2").cmp_under(&hn("1000*n"), &f), Ordering::Greater);
        }
        // anchor rule on an alternating representative
        let alternating = hn_cycle(&["0", "1"]);
        let zero = Hypernatural::zero();
        assert_eq!(
            alternating.cmp_under(&zero, &AnchoredUltrafilter::new(0)),
            Ordering::Equal
        );
        assert_eq!(
            alternating.cmp_under(&zero, &AnchoredUltrafilter::new(1)),
            Ordering::Greater
        );
    }

    #[test]
    fn limitedness_and_standard_identification() {
        let f0 = AnchoredUltrafilter::new(0);
        let f1 = AnchoredUltrafilter::new(1);
        assert_eq!(hn("7").identify_standard(&f0), Some(BigInt::from(7)));
        assert!(!hn("n").is_limited(&f0));
        assert_eq!(hn("n").identify_standard(&f0), None);
        let mixed = hn_cycle(&["5", "n"]);
        assert_eq!(mixed.identify_standard(&f0), Some(BigInt::from(5)));
        assert!(!mixed.is_limited(&f1));
    }

    #[test]
    fn decided_parity() {
        let f0 = AnchoredUltrafilter::new(0);
        let f1 = AnchoredUltrafilter::new(1);
        assert_eq!(hn("2*n").parity_under(&f0), Parity::Even);
        assert_eq!(hn("2*n").parity_under(&f1), Parity::Even);
        assert_eq!(hn("n").parity_under(&f0), Parity::Even);
        assert_eq!(hn("n").parity_under(&f1), Parity::Odd);
        // triangle numbers are even exactly on residues 0, 1 mod 4
        let tri = hn("n*(n-1)/2");
        assert_eq!(tri.parity_under(&f0), Parity::Even);
        assert_eq!(tri.parity_under(&AnchoredUltrafilter::new(2)), Parity::Odd);
    }

    #[test]
    fn pointwise_min_max() {
        let f = AnchoredUltrafilter::new(3);
        let items = vec![hn("n"), hn("n+1")];
        assert_eq!(Hypernatural::min_of(&items).unwrap(), hn("n"));
        assert_eq!(Hypernatural::max_of(&items).unwrap(), hn("n+1"));
        // max of n^2 and 1000n is piecewise but a.e. equal to n^2
        let hi = Hypernatural::max_of(&[hn("n^2"), hn("1000*n")]).unwrap();
        assert!(hi.eq_under(&hn("n^2"), &f));
        for n in [0u64, 17, 1000, 1001, 2000] {
            let expect = BigInt::from(n) * BigInt::from(n);
            let alt = BigInt::from(1000u64) * BigInt::from(n);
            assert_eq!(hi.term(n), expect.max(alt));
        }
        assert_eq!(Hypernatural::min_of(&[hn("n^3")]).unwrap(), hn("n^3"));
        assert!(matches!(
            Hypernatural::min_of(&[]),
            Err(UpAlgError::EmptySet)
        ));
    }

    #[test]
    fn rejects_eventually_negative_representatives() {
        assert!(Hypernatural::parse_poly_text("n-3").is_err());
        assert!(Hypernatural::parse_poly_text("-n").is_err());
        // but an explicitly clamped prefix makes it valid
        let clamped = UppSeq::new(
            3,
            vec![Poly::parse("n-3").unwrap()],
            vec![BigInt::from(0); 3],
        )
        .unwrap();
        assert!(Hypernatural::new(clamped).is_ok());
    }
}
