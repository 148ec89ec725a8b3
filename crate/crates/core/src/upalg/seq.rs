//! Ultimately periodic polynomial sequences of integers.
//!
//! A sequence is given by explicit prefix values below a threshold and, at or
//! beyond it, by a nonempty cycle of polynomials: the term at index `n` is
//! `cycle[(n - threshold) mod cycle_len]` evaluated at `n`. All derived
//! operations (comparison sets, pointwise min/max, parity, halving) resolve
//! each aligned residue class by the eventual sign of a difference
//! polynomial, folding the finitely many exceptional indices into the
//! prefix. Everything is exact; there is no floating point.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::{EventualSign, Poly, MAX_FOLD_BOUND};
use super::set::UpSet;
use super::UpAlgError;

/// Comparison relations decidable between two sequences.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rel {
    Eq,
    Lt,
    Le,
}

impl Rel {
    fn matches(self, sign: EventualSign) -> bool {
        matches!(
            (self, sign),
            (Rel::Eq, EventualSign::Zero)
                | (Rel::Lt, EventualSign::Negative)
                | (Rel::Le, EventualSign::Negative | EventualSign::Zero)
        )
    }

    fn holds(self, value: &BigInt) -> bool {
        match self {
            Rel::Eq => value.is_zero(),
            Rel::Lt => value.is_negative(),
            Rel::Le => !value.is_positive(),
        }
    }
}

/// Ultimately periodic polynomial sequence in canonical form (minimal cycle,
/// then minimal threshold).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UppSeq {
    threshold: u64,
    cycle: Vec<Poly>,
    prefix: Vec<BigInt>,
}

impl UppSeq {
    /// Validates that every cycle polynomial is integer-valued on its residue
    /// class and canonicalizes the representation.
    pub fn new(threshold: u64, cycle: Vec<Poly>, prefix: Vec<BigInt>) -> Result<Self, UpAlgError> {
        if cycle.is_empty() {
            return Err(UpAlgError::EmptyCycle);
        }
        if prefix.len() as u64 != threshold {
            return Err(UpAlgError::PrefixLengthMismatch {
                len: prefix.len(),
                threshold,
            });
        }
        let step = cycle.len() as u64;
        for (j, poly) in cycle.iter().enumerate() {
            if !poly.is_integer_on_progression(threshold + j as u64, step) {
                return Err(UpAlgError::NotIntegerValued {
                    index: threshold + j as u64,
                });
            }
        }
        let mut seq = UppSeq {
            threshold,
            cycle,
            prefix,
        };
        seq.canonicalize();
        Ok(seq)
    }

    fn rebuild(threshold: u64, cycle: Vec<Poly>, prefix: Vec<BigInt>) -> Self {
        UppSeq::new(threshold, cycle, prefix).expect("pointwise operations preserve validity")
    }

    pub fn from_poly(poly: Poly) -> Result<Self, UpAlgError> {
        UppSeq::new(0, vec![poly], Vec::new())
    }

    pub fn constant(value: BigInt) -> Self {
        UppSeq::rebuild(0, vec![Poly::constant(BigRational::from_integer(value))], Vec::new())
    }

    pub fn constant_int(value: i64) -> Self {
        UppSeq::constant(BigInt::from(value))
    }

    /// The identity sequence `<n>`.
    pub fn ident() -> Self {
        UppSeq::rebuild(0, vec![Poly::var()], Vec::new())
    }

    pub fn parse_poly_text(text: &str) -> Result<Self, UpAlgError> {
        UppSeq::from_poly(Poly::parse(text)?)
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    pub fn cycle(&self) -> &[Poly] {
        &self.cycle
    }

    pub fn cycle_len(&self) -> u64 {
        self.cycle.len() as u64
    }

    pub fn prefix(&self) -> &[BigInt] {
        &self.prefix
    }

    pub fn term(&self, n: u64) -> BigInt {
        if n < self.threshold {
            self.prefix[n as usize].clone()
        } else {
            let j = ((n - self.threshold) % self.cycle_len()) as usize;
            self.cycle[j]
                .eval_int(n)
                .expect("cycle polynomials are integer-valued on their classes")
        }
    }

    pub fn is_constant_value(&self) -> Option<BigInt> {
        if self.threshold == 0 && self.cycle.len() == 1 && self.cycle[0].is_constant() {
            Some(self.cycle[0].constant_term().to_integer())
        } else {
            None
        }
    }

    /// Same sequence re-expressed with a larger threshold: the skipped terms
    /// move into the prefix and the cycle rotates to keep its phase.
    pub(crate) fn with_threshold(&self, threshold: u64) -> Self {
        assert!(threshold >= self.threshold);
        if threshold == self.threshold {
            return self.clone();
        }
        let mut prefix = self.prefix.clone();
        prefix.extend((self.threshold..threshold).map(|n| self.term(n)));
        let len = self.cycle.len();
        let shift = ((threshold - self.threshold) % len as u64) as usize;
        let mut cycle = self.cycle.clone();
        cycle.rotate_left(shift);
        UppSeq {
            threshold,
            cycle,
            prefix,
        }
    }

    /// Same sequence with the cycle replicated to a multiple of its length.
    pub(crate) fn with_cycle_len(&self, len: u64) -> Self {
        let old = self.cycle_len();
        assert!(len.is_multiple_of(old) && len > 0);
        let cycle = (0..len).map(|j| self.cycle[(j % old) as usize].clone()).collect();
        UppSeq {
            threshold: self.threshold,
            cycle,
            prefix: self.prefix.clone(),
        }
    }

    /// Re-expresses both sequences over a common threshold and cycle length.
    pub(crate) fn aligned(&self, other: &Self) -> (Self, Self) {
        let threshold = self.threshold.max(other.threshold);
        let len = self.cycle_len().lcm(&other.cycle_len());
        (
            self.with_threshold(threshold).with_cycle_len(len),
            other.with_threshold(threshold).with_cycle_len(len),
        )
    }

    fn zip(
        &self,
        other: &Self,
        poly_op: impl Fn(&Poly, &Poly) -> Poly,
        value_op: impl Fn(&BigInt, &BigInt) -> BigInt,
    ) -> Self {
        let (a, b) = self.aligned(other);
        let cycle = a
            .cycle
            .iter()
            .zip(&b.cycle)
            .map(|(p, q)| poly_op(p, q))
            .collect();
        let prefix = a
            .prefix
            .iter()
            .zip(&b.prefix)
            .map(|(v, w)| value_op(v, w))
            .collect();
        UppSeq::rebuild(a.threshold, cycle, prefix)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |p, q| p + q, |v, w| v + w)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |p, q| p - q, |v, w| v - w)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.zip(other, |p, q| p * q, |v, w| v * w)
    }

    /// Threshold at or beyond which every cycle polynomial keeps its eventual
    /// sign strictly.
    fn sign_stable_threshold(&self) -> Result<u64, UpAlgError> {
        let mut t = self.threshold;
        for poly in &self.cycle {
            t = t.max(poly.sign_stable_bound()?);
        }
        if t - self.threshold > MAX_FOLD_BOUND {
            return Err(UpAlgError::BoundTooLarge);
        }
        Ok(t)
    }

    /// The exact truth set `{n : self(n) REL other(n)}`, resolved per aligned
    /// residue class: the difference polynomial either matches the relation
    /// eventually or fails it eventually; exceptional indices fold into the
    /// threshold.
    pub fn relate(&self, other: &Self, rel: Rel) -> Result<UpSet, UpAlgError> {
        let diff = self.sub(other);
        let stable = diff.with_threshold(diff.sign_stable_threshold()?);
        let len = stable.cycle_len();
        let pattern = (0..len)
            .filter(|&j| rel.matches(stable.cycle[j as usize].eventual_sign()))
            .map(|j| (stable.threshold + j) % len)
            .collect();
        let prefix = (0..stable.threshold)
            .map(|n| rel.holds(&diff.term(n)))
            .collect();
        UpSet::new(stable.threshold, len, pattern, prefix)
    }

    fn choose_pointwise(&self, other: &Self, take_self_on: impl Fn(EventualSign) -> bool) -> Result<Self, UpAlgError> {
        let (a, b) = self.aligned(other);
        // the difference canonicalizes, so its threshold may sit below the
        // aligned one; its sign-stable bound still covers every per-class
        // difference polynomial of the aligned pair
        let t = a.sub(&b).sign_stable_threshold()?.max(a.threshold);
        let a = a.with_threshold(t);
        let b = b.with_threshold(t);
        let cycle = a
            .cycle
            .iter()
            .zip(&b.cycle)
            .map(|(p, q)| {
                if take_self_on((p - q).eventual_sign()) {
                    p.clone()
                } else {
                    q.clone()
                }
            })
            .collect();
        let prefix = a
            .prefix
            .iter()
            .zip(&b.prefix)
            .map(|(v, w)| {
                if take_self_on(if v < w {
                    EventualSign::Negative
                } else if v == w {
                    EventualSign::Zero
                } else {
                    EventualSign::Positive
                }) {
                    v.clone()
                } else {
                    w.clone()
                }
            })
            .collect();
        Ok(UppSeq::rebuild(t, cycle, prefix))
    }

    /// Pointwise minimum (exact at every index, not merely a.e.).
    pub fn min_pointwise(&self, other: &Self) -> Result<Self, UpAlgError> {
        self.choose_pointwise(other, |s| s != EventualSign::Positive)
    }

    /// Pointwise maximum (exact at every index).
    pub fn max_pointwise(&self, other: &Self) -> Result<Self, UpAlgError> {
        self.choose_pointwise(other, |s| s == EventualSign::Positive)
    }

    /// Pointwise `max(term, 0)`.
    pub fn clamp_nonneg(&self) -> Result<Self, UpAlgError> {
        self.max_pointwise(&UppSeq::constant_int(0))
    }

    /// Pointwise absolute value.
    pub fn abs(&self) -> Result<Self, UpAlgError> {
        let stable = self.with_threshold(self.sign_stable_threshold()?);
        let cycle = stable
            .cycle
            .iter()
            .map(|p| {
                if p.eventual_sign() == EventualSign::Negative {
                    -p
                } else {
                    p.clone()
                }
            })
            .collect();
        let prefix = stable.prefix.iter().map(|v| v.abs()).collect();
        Ok(UppSeq::rebuild(stable.threshold, cycle, prefix))
    }

    /// The exact set `{n : term(n) is even}`. Along one residue class the
    /// parity of an integer-valued polynomial repeats with a power-of-two
    /// period bounded by its degree, so a single scanned window determines
    /// the whole set.
    pub fn even_set(&self) -> Result<UpSet, UpAlgError> {
        let period = self
            .cycle
            .iter()
            .map(Poly::parity_period)
            .max()
            .expect("cycle is nonempty");
        let modulus = self.cycle_len() * period;
        if modulus > MAX_FOLD_BOUND {
            return Err(UpAlgError::BoundTooLarge);
        }
        let pattern = (self.threshold..self.threshold + modulus)
            .filter(|&n| self.term(n).is_even())
            .map(|n| n % modulus)
            .collect();
        let prefix = (0..self.threshold).map(|n| self.term(n).is_even()).collect();
        UpSet::new(self.threshold, modulus, pattern, prefix)
    }

    /// Pointwise `floor(term / 2)`, refining the cycle so that every class
    /// has constant parity.
    pub fn floor_half(&self) -> Result<Self, UpAlgError> {
        let period = self
            .cycle
            .iter()
            .map(Poly::parity_period)
            .max()
            .expect("cycle is nonempty");
        let len = self.cycle_len() * period;
        if len > MAX_FOLD_BOUND {
            return Err(UpAlgError::BoundTooLarge);
        }
        let wide = self.with_cycle_len(len);
        let two = BigInt::from(2);
        let cycle = wide
            .cycle
            .iter()
            .enumerate()
            .map(|(j, poly)| {
                let parity = self.term(self.threshold + j as u64).mod_floor(&two);
                let shifted = poly - &Poly::constant(BigRational::from_integer(parity));
                shifted.half()
            })
            .collect();
        let prefix = wide.prefix.iter().map(|v| v.div_floor(&two)).collect();
        Ok(UppSeq::rebuild(self.threshold, cycle, prefix))
    }

    /// 0/1 sequence of membership in an ultimately periodic set.
    pub fn indicator(set: &UpSet) -> Self {
        let t = set.threshold();
        let cycle = (0..set.modulus())
            .map(|j| Poly::constant_int(set.contains(t + j) as i64))
            .collect();
        let prefix = (0..t).map(|n| BigInt::from(set.contains(n) as u8)).collect();
        UppSeq::rebuild(t, cycle, prefix)
    }

    /// Errors with the first offending index if any term is negative.
    pub fn check_natural(&self) -> Result<(), UpAlgError> {
        let stable = self.sign_stable_threshold()?;
        for n in 0..stable {
            if self.term(n).is_negative() {
                return Err(UpAlgError::NegativeTerm { index: n });
            }
        }
        for (j, poly) in self
            .with_threshold(stable)
            .cycle
            .iter()
            .enumerate()
        {
            if poly.eventual_sign() == EventualSign::Negative {
                return Err(UpAlgError::NegativeTerm {
                    index: stable + j as u64,
                });
            }
        }
        Ok(())
    }

    fn canonicalize(&mut self) {
        loop {
            let len = self.cycle.len();
            for d in 1..=len {
                if !len.is_multiple_of(d) {
                    continue;
                }
                if (0..len).all(|j| self.cycle[j] == self.cycle[(j + d) % len]) {
                    self.cycle.truncate(d);
                    break;
                }
            }
            let mut changed = false;
            while self.threshold > 0 {
                let last = self.threshold - 1;
                let closing = self.cycle.last().expect("cycle is nonempty");
                if closing.eval_int(last).ok().as_ref() == Some(&self.prefix[last as usize]) {
                    self.prefix.pop();
                    self.threshold = last;
                    self.cycle.rotate_right(1);
                    changed = true;
                } else {
                    break;
                }
            }
            if !changed {
                break;
            }
        }
    }
}

impl fmt::Display for UppSeq {
    /// `HN{t=..; c=..; [poly, ...]}` with `; prefix=[..]` appended when the
    /// threshold is positive.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "HN{{t={}; c={}; [", self.threshold, self.cycle.len())?;
        for (i, poly) in self.cycle.iter().enumerate() {
            if i > 0 {
                write!(out, ", ")?;
            }
            write!(out, "{poly}")?;
        }
        write!(out, "]")?;
        if self.threshold > 0 {
            write!(out, "; prefix=[")?;
            for (i, v) in self.prefix.iter().enumerate() {
                if i > 0 {
                    write!(out, ", ")?;
                }
                write!(out, "{v}")?;
            }
            write!(out, "]")?;
        }
        write!(out, "}}")
    }
}

impl FromStr for UppSeq {
    type Err = UpAlgError;

    fn from_str(text: &str) -> Result<Self, UpAlgError> {
        let mut p = super::text::Scanner::new(text);
        p.expect_tag("HN")?;
        p.expect_tag("{")?;
        p.expect_tag("t")?;
        p.expect_tag("=")?;
        let threshold = p.nat()?;
        p.expect_tag(";")?;
        p.expect_tag("c")?;
        p.expect_tag("=")?;
        let count = p.nat()?;
        p.expect_tag(";")?;
        p.expect_tag("[")?;
        let mut cycle = Vec::new();
        loop {
            let body = p.until_any(b",]")?;
            cycle.push(Poly::parse(body)?);
            if p.try_tag(",") {
                continue;
            }
            p.expect_tag("]")?;
            break;
        }
        if cycle.len() as u64 != count {
            return Err(UpAlgError::Parse {
                pos: p.pos(),
                msg: "cycle length does not match c=".to_string(),
            });
        }
        let mut prefix = Vec::new();
        if p.try_tag(";") {
            p.expect_tag("prefix")?;
            p.expect_tag("=")?;
            p.expect_tag("[")?;
            if !p.try_tag("]") {
                loop {
                    prefix.push(p.int()?);
                    if p.try_tag(",") {
                        continue;
                    }
                    p.expect_tag("]")?;
                    break;
                }
            }
        }
        p.expect_tag("}")?;
        p.expect_end()?;
        UppSeq::new(threshold, cycle, prefix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn seq(text: &str) -> UppSeq {
        UppSeq::parse_poly_text(text).unwrap()
    }

    fn cyc(polys: &[&str]) -> UppSeq {
        UppSeq::new(0, polys.iter().map(|t| Poly::parse(t).unwrap()).collect(), vec![]).unwrap()
    }

    #[test]
    fn terms_follow_prefix_then_cycle() {
        let s = UppSeq::new(
            2,
            vec![Poly::parse("n").unwrap(), Poly::parse("n+1").unwrap()],
            vec![BigInt::from(9), BigInt::from(9)],
        )
        .unwrap();
        // n=2 -> position 0 -> n = 2; n=3 -> position 1 -> n+1 = 4
        let got: Vec<BigInt> = (0..6).map(|n| s.term(n)).collect();
        let want: Vec<BigInt> = [9, 9, 2, 4, 4, 6].map(BigInt::from).to_vec();
        assert_eq!(got, want);
    }

    #[test]
    fn arithmetic_is_pointwise() {
        let a = seq("n");
        let b = seq("n+1");
        assert_eq!(a.add(&b), seq("2*n+1"));
        assert_eq!(a.mul(&a), seq("n^2"));
        let alternating = cyc(&["n", "n+1"]);
        let sum = a.add(&alternating);
        for n in 0..20 {
            assert_eq!(sum.term(n), a.term(n) + alternating.term(n));
        }
    }

    #[test]
    fn relate_full_and_boundary() {
        // n < n+1 everywhere
        let all = seq("n").relate(&seq("n+1"), Rel::Lt).unwrap();
        assert!(all.is_full());
        // n^2 <= 1000n exactly up to the crossing; brute force is the oracle
        let set = seq("n^2").relate(&seq("1000*n"), Rel::Le).unwrap();
        for n in 0..2200u64 {
            let big = BigInt::from(n);
            assert_eq!(set.contains(n), &big * &big <= 1000 * &big, "n={n}");
        }
        assert!(set.is_finite());
        assert!(set.contains(1000));
        assert!(!set.contains(1001));
    }

    #[test]
    fn relate_equality_picks_out_residue_class() {
        let x = seq("n");
        let alternating = cyc(&["n", "n+1"]);
        let eq = x.relate(&alternating, Rel::Eq).unwrap();
        assert_eq!(eq, UpSet::residue_class(0, 2).unwrap());
    }

    #[test]
    fn pointwise_min_max_and_abs() {
        let a = seq("n^2");
        let b = seq("1000*n");
        let hi = a.max_pointwise(&b).unwrap();
        let lo = a.min_pointwise(&b).unwrap();
        for n in (0..1100).chain(990..1010) {
            let (x, y) = (a.term(n), b.term(n));
            assert_eq!(hi.term(n), x.clone().max(y.clone()));
            assert_eq!(lo.term(n), x.min(y));
        }
        let diff = seq("n").sub(&seq("5")).abs().unwrap();
        for n in 0..20i64 {
            assert_eq!(diff.term(n as u64), BigInt::from((n - 5).abs()));
        }
        let clamped = seq("n").sub(&seq("5")).clamp_nonneg().unwrap();
        for n in 0..20i64 {
            assert_eq!(clamped.term(n as u64), BigInt::from((n - 5).max(0)));
        }
    }

    #[test]
    fn even_set_of_triangle_numbers_has_period_four() {
        // values 0 0 1 3 6 10 15 21 ... repeat even,even,odd,odd
        let tri = seq("n*(n-1)/2");
        let evens = tri.even_set().unwrap();
        for n in 0..40 {
            let expect = matches!(n % 4, 0 | 1);
            assert_eq!(evens.contains(n), expect, "n={n}");
        }
        assert_eq!(evens.modulus(), 4);
    }

    #[test]
    fn floor_half_matches_integer_division() {
        for s in [seq("n"), seq("2*n+5"), cyc(&["n", "3*n+1"]), seq("n^2+n+1")] {
            let half = s.floor_half().unwrap();
            for n in 0..30 {
                assert_eq!(half.term(n), s.term(n).div_floor(&BigInt::from(2)), "n={n}");
            }
        }
    }

    #[test]
    fn min_max_handle_canonicalizing_differences() {
        // equal prefixes make the difference canonicalize to a threshold
        // below the aligned one
        let shared = vec![BigInt::from(9), BigInt::from(9), BigInt::from(9)];
        let a = UppSeq::new(3, vec![Poly::parse("n").unwrap()], shared.clone()).unwrap();
        let b = UppSeq::new(3, vec![Poly::parse("n").unwrap()], shared).unwrap();
        let lo = a.min_pointwise(&b).unwrap();
        let hi = a.max_pointwise(&b).unwrap();
        for n in 0..12 {
            assert_eq!(lo.term(n), a.term(n));
            assert_eq!(hi.term(n), a.term(n));
        }
        // and a pair whose difference is identically zero
        let same = UppSeq::parse_poly_text("n+1").unwrap();
        assert_eq!(same.min_pointwise(&same.clone()).unwrap(), same);
    }

    #[test]
    fn indicator_matches_membership() {
        let set = UpSet::new(
            3,
            4,
            [1u64, 2].into_iter().collect(),
            vec![true, false, false],
        )
        .unwrap();
        let ind = UppSeq::indicator(&set);
        for n in 0..30 {
            assert_eq!(ind.term(n), BigInt::from(set.contains(n) as u8));
        }
    }

    #[test]
    fn natural_check_reports_first_negative() {
        assert!(seq("n").check_natural().is_ok());
        assert!(seq("0").check_natural().is_ok());
        match seq("n-3").check_natural() {
            Err(UpAlgError::NegativeTerm { index }) => assert_eq!(index, 0),
            other => panic!("unexpected {other:?}"),
        }
        assert!(seq("-n").check_natural().is_err());
    }

    #[test]
    fn canonical_form_is_minimal() {
        // a cycle written twice collapses
        let doubled = cyc(&["n+1", "n+1"]);
        assert_eq!(doubled, seq("n+1"));
        // a prefix that already matches the cycle folds away
        let padded = UppSeq::new(
            2,
            vec![Poly::parse("n").unwrap()],
            vec![BigInt::from(0), BigInt::from(1)],
        )
        .unwrap();
        assert_eq!(padded, seq("n"));
        assert_eq!(padded.threshold(), 0);
        // rotation is respected when folding
        let rotated = UppSeq::new(
            1,
            vec![Poly::parse("n+1").unwrap(), Poly::parse("n").unwrap()],
            vec![BigInt::from(0)],
        )
        .unwrap();
        assert_eq!(rotated.threshold(), 0);
        for n in 0..10 {
            assert_eq!(rotated.term(n), cyc(&["n", "n+1"]).term(n));
        }
    }

    #[test]
    fn display_roundtrip() {
        let samples = [
            seq("n"),
            seq("1/2*n^2-1/2*n"),
            cyc(&["n+2", "n+3"]),
            UppSeq::new(
                3,
                vec![Poly::parse("n").unwrap()],
                vec![BigInt::from(7), BigInt::from(-1), BigInt::from(4)],
            )
            .unwrap(),
        ];
        for s in &samples {
            let text = s.to_string();
            assert_eq!(&text.parse::<UppSeq>().unwrap(), s, "{text}");
        }
        assert_eq!(cyc(&["n+2", "n+3"]).to_string(), "HN{t=0; c=2; [n+2, n+3]}");
        let spaced = "HN{t=0;c=2;[n+2,n+3]}".parse::<UppSeq>().unwrap();
        assert_eq!(spaced, cyc(&["n+2", "n+3"]));
    }

    #[test]
    fn rejects_malformed_sequences() {
        assert!(matches!(
            UppSeq::new(0, vec![], vec![]),
            Err(UpAlgError::EmptyCycle)
        ));
        assert!(matches!(
            UppSeq::new(0, vec![Poly::parse("n/2").unwrap()], vec![]),
            Err(UpAlgError::NotIntegerValued { .. })
        ));
        // n/2 on the even class alone is fine
        assert!(UppSeq::new(0, vec![Poly::parse("n/2").unwrap(), Poly::parse("n+1").unwrap()], vec![]).is_ok());
    }
}
