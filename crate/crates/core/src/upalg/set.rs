//! Ultimately periodic subsets of the naturals and the anchored ultrafilter
//! that decides them.
//!
//! Every "almost everywhere" truth set produced by this crate lives in the
//! Boolean algebra of ultimately periodic sets: membership below a threshold
//! is stored bit by bit, membership beyond it depends only on the residue
//! modulo a fixed modulus. A full nonprincipal ultrafilter on all of N is
//! non-constructive, but its trace on this algebra is computable: a set is
//! large for anchor `a` exactly when it eventually contains the whole
//! residue class of `a` modulo the set's canonical modulus.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_integer::Integer;

use super::UpAlgError;

/// Ultimately periodic subset of N in canonical form (minimal modulus, then
/// minimal threshold).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UpSet {
    threshold: u64,
    modulus: u64,
    pattern: BTreeSet<u64>,
    prefix: Vec<bool>,
}

impl UpSet {
    /// Membership below `threshold` is `prefix[n]`; at or beyond it,
    /// `n mod modulus ∈ pattern`. The representation is canonicalized.
    pub fn new(
        threshold: u64,
        modulus: u64,
        pattern: BTreeSet<u64>,
        prefix: Vec<bool>,
    ) -> Result<Self, UpAlgError> {
        if modulus == 0 {
            return Err(UpAlgError::ZeroModulus);
        }
        if let Some(&r) = pattern.iter().find(|&&r| r >= modulus) {
            return Err(UpAlgError::ResidueOutOfRange { residue: r, modulus });
        }
        if prefix.len() as u64 != threshold {
            return Err(UpAlgError::PrefixLengthMismatch {
                len: prefix.len(),
                threshold,
            });
        }
        let mut set = UpSet {
            threshold,
            modulus,
            pattern,
            prefix,
        };
        set.canonicalize();
        Ok(set)
    }

    pub fn empty() -> Self {
        UpSet {
            threshold: 0,
            modulus: 1,
            pattern: BTreeSet::new(),
            prefix: Vec::new(),
        }
    }

    pub fn full() -> Self {
        UpSet {
            threshold: 0,
            modulus: 1,
            pattern: BTreeSet::from([0]),
            prefix: Vec::new(),
        }
    }

    /// The tail `{n : n >= start}`.
    pub fn tail_from(start: u64) -> Self {
        UpSet::new(
            start,
            1,
            BTreeSet::from([0]),
            vec![false; start as usize],
        )
        .expect("tail set is well formed")
    }

    /// The residue class `{n : n ≡ residue (mod modulus)}`.
    pub fn residue_class(residue: u64, modulus: u64) -> Result<Self, UpAlgError> {
        UpSet::new(0, modulus, BTreeSet::from([residue % modulus.max(1)]), Vec::new())
    }

    /// A finite set given by an explicit list of members.
    pub fn finite(members: &[u64]) -> Self {
        let threshold = members.iter().max().map_or(0, |m| m + 1);
        let mut prefix = vec![false; threshold as usize];
        for &m in members {
            prefix[m as usize] = true;
        }
        UpSet::new(threshold, 1, BTreeSet::new(), prefix).expect("finite set is well formed")
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn pattern(&self) -> &BTreeSet<u64> {
        &self.pattern
    }

    pub fn contains(&self, n: u64) -> bool {
        if n < self.threshold {
            self.prefix[n as usize]
        } else {
            self.pattern.contains(&(n % self.modulus))
        }
    }

    /// No members at or beyond the threshold.
    pub fn is_finite(&self) -> bool {
        self.pattern.is_empty()
    }

    /// All residues present beyond the threshold.
    pub fn is_cofinite(&self) -> bool {
        self.pattern.len() as u64 == self.modulus
    }

    pub fn is_empty_set(&self) -> bool {
        self.is_finite() && self.prefix.iter().all(|&b| !b)
    }

    pub fn is_full(&self) -> bool {
        self.is_cofinite() && self.prefix.iter().all(|&b| b)
    }

    pub fn complement(&self) -> UpSet {
        let pattern = (0..self.modulus)
            .filter(|r| !self.pattern.contains(r))
            .collect();
        let prefix = self.prefix.iter().map(|&b| !b).collect();
        UpSet::new(self.threshold, self.modulus, pattern, prefix)
            .expect("complement preserves well-formedness")
    }

    fn combine(&self, other: &UpSet, op: impl Fn(bool, bool) -> bool) -> UpSet {
        let threshold = self.threshold.max(other.threshold);
        let modulus = self.modulus.lcm(&other.modulus);
        let pattern = (0..modulus)
            .filter(|&r| {
                // beyond both thresholds membership is purely residue-based;
                // pick any index in the class past the threshold
                let n = threshold + (r + modulus - threshold % modulus) % modulus;
                op(self.contains(n), other.contains(n))
            })
            .collect();
        let prefix = (0..threshold).map(|n| op(self.contains(n), other.contains(n))).collect();
        UpSet::new(threshold, modulus, pattern, prefix).expect("combine preserves well-formedness")
    }

    pub fn intersect(&self, other: &UpSet) -> UpSet {
        self.combine(other, |a, b| a && b)
    }

    pub fn union(&self, other: &UpSet) -> UpSet {
        self.combine(other, |a, b| a || b)
    }

    fn canonicalize(&mut self) {
        // minimal period: smallest divisor d of the modulus with a
        // shift-invariant pattern
        for d in 1..=self.modulus {
            if !self.modulus.is_multiple_of(d) {
                continue;
            }
            let invariant = (0..self.modulus).all(|r| {
                self.pattern.contains(&r) == self.pattern.contains(&((r + d) % self.modulus))
            });
            if invariant {
                self.pattern.retain(|&r| r < d);
                self.modulus = d;
                break;
            }
        }
        while self.threshold > 0 {
            let last = self.threshold - 1;
            if self.prefix[last as usize] == self.pattern.contains(&(last % self.modulus)) {
                self.prefix.pop();
                self.threshold = last;
            } else {
                break;
            }
        }
    }
}

impl fmt::Display for UpSet {
    /// `SET{t=..; m=..; P={..}}` with `; prefix=[..]` appended when the
    /// threshold is positive (prefix bits printed as 0/1).
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "SET{{t={}; m={}; P={{", self.threshold, self.modulus)?;
        for (i, r) in self.pattern.iter().enumerate() {
            if i > 0 {
                write!(out, ", ")?;
            }
            write!(out, "{r}")?;
        }
        write!(out, "}}")?;
        if self.threshold > 0 {
            write!(out, "; prefix=[")?;
            for (i, b) in self.prefix.iter().enumerate() {
                if i > 0 {
                    write!(out, ", ")?;
                }
                write!(out, "{}", if *b { 1 } else { 0 })?;
            }
            write!(out, "]")?;
        }
        write!(out, "}}")
    }
}

impl FromStr for UpSet {
    type Err = UpAlgError;

    fn from_str(text: &str) -> Result<Self, UpAlgError> {
        let mut p = super::text::Scanner::new(text);
        p.expect_tag("SET")?;
        p.expect_tag("{")?;
        p.expect_tag("t")?;
        p.expect_tag("=")?;
        let threshold = p.nat()?;
        p.expect_tag(";")?;
        p.expect_tag("m")?;
        p.expect_tag("=")?;
        let modulus = p.nat()?;
        p.expect_tag(";")?;
        p.expect_tag("P")?;
        p.expect_tag("=")?;
        p.expect_tag("{")?;
        let mut pattern = BTreeSet::new();
        if !p.try_tag("}") {
            loop {
                pattern.insert(p.nat()?);
                if p.try_tag(",") {
                    continue;
                }
                p.expect_tag("}")?;
                break;
            }
        }
        let mut prefix = Vec::new();
        if p.try_tag(";") {
            p.expect_tag("prefix")?;
            p.expect_tag("=")?;
            p.expect_tag("[")?;
            if !p.try_tag("]") {
                loop {
                    let bit = p.nat()?;
                    if bit > 1 {
                        return Err(UpAlgError::Parse {
                            pos: p.pos(),
                            msg: "prefix bits must be 0 or 1".to_string(),
                        });
                    }
                    prefix.push(bit == 1);
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
        UpSet::new(threshold, modulus, pattern, prefix)
    }
}

/// Computable stand-in for a chosen nonprincipal ultrafilter: decides every
/// ultimately periodic set by whether it eventually contains the anchor's
/// residue class. Coincides with the trace of any nonprincipal ultrafilter
/// containing all tails of the progressions `{n ≡ anchor (mod m)}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct AnchoredUltrafilter {
    anchor: u64,
}

impl AnchoredUltrafilter {
    pub fn new(anchor: u64) -> Self {
        AnchoredUltrafilter { anchor }
    }

    pub fn anchor(&self) -> u64 {
        self.anchor
    }

    /// True iff the set is large (a member of the ultrafilter trace).
    pub fn decide(&self, set: &UpSet) -> bool {
        set.pattern.contains(&(self.anchor % set.modulus))
    }

    /// First `count` indices of the anchor progression modulo `modulus`
    /// starting at or beyond `from`.
    pub fn progression(&self, modulus: u64, from: u64, count: usize) -> Vec<u64> {
        let m = modulus.max(1);
        let r = self.anchor % m;
        let first = if from % m <= r {
            from - from % m + r
        } else {
            from - from % m + m + r
        };
        (0..count as u64).map(|k| first + k * m).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn evens() -> UpSet {
        UpSet::residue_class(0, 2).unwrap()
    }

    #[test]
    fn decide_cofinite_finite_and_periodic() {
        let f0 = AnchoredUltrafilter::new(0);
        let f1 = AnchoredUltrafilter::new(1);
        // cofinite sets are in every trace
        assert!(f0.decide(&UpSet::tail_from(5)));
        assert!(f1.decide(&UpSet::tail_from(5)));
        // anchor residue rule on the evens
        assert!(f0.decide(&evens()));
        assert!(!f1.decide(&evens()));
        // finite sets are never members
        let finite = UpSet::finite(&[0, 1, 2]);
        assert!(!f0.decide(&finite));
        assert!(!f1.decide(&finite));
    }

    #[test]
    fn boolean_algebra_matches_pointwise_semantics() {
        let evens = evens();
        let odds = evens.complement();
        for n in 0..50 {
            assert_eq!(odds.contains(n), n % 2 == 1);
        }
        let by2 = evens;
        let by3 = UpSet::residue_class(0, 3).unwrap();
        let by6 = by2.intersect(&by3);
        for n in 0..60 {
            assert_eq!(by6.contains(n), n % 6 == 0);
        }
        assert_eq!(by6.modulus(), 6);
        let union = by2.union(&by3);
        for n in 0..60 {
            assert_eq!(union.contains(n), n % 2 == 0 || n % 3 == 0);
        }
    }

    #[test]
    fn exactly_one_of_set_and_complement() {
        let f = AnchoredUltrafilter::new(7);
        let samples = [
            UpSet::empty(),
            UpSet::full(),
            UpSet::tail_from(3),
            UpSet::finite(&[2, 9]),
            UpSet::residue_class(1, 4).unwrap(),
            UpSet::new(5, 6, BTreeSet::from([0, 4]), vec![true, false, true, true, false]).unwrap(),
        ];
        for s in &samples {
            assert_ne!(f.decide(s), f.decide(&s.complement()), "set {s}");
        }
    }

    #[test]
    fn decided_intersection_of_decided_sets() {
        let f = AnchoredUltrafilter::new(0);
        let a = UpSet::residue_class(0, 2).unwrap();
        let b = UpSet::residue_class(0, 3).unwrap();
        assert!(f.decide(&a) && f.decide(&b));
        assert!(f.decide(&a.intersect(&b)));
    }

    #[test]
    fn canonicalization_is_membership_preserving_and_minimal() {
        // evens written redundantly mod 8 with a pointless prefix
        let redundant = UpSet::new(
            4,
            8,
            BTreeSet::from([0, 2, 4, 6]),
            vec![true, false, true, false],
        )
        .unwrap();
        assert_eq!(redundant, evens());
        assert_eq!(redundant.modulus(), 2);
        assert_eq!(redundant.threshold(), 0);
        // refining the modulus and raising the threshold preserves membership
        let lifted = UpSet::new(
            6,
            6,
            BTreeSet::from([0, 2, 4]),
            vec![true, false, true, false, true, false],
        )
        .unwrap();
        for n in 0..18 * 3 {
            assert_eq!(lifted.contains(n), n % 2 == 0);
        }
        assert_eq!(lifted, evens());
    }

    #[test]
    fn display_roundtrip() {
        let set = UpSet::new(3, 4, BTreeSet::from([1, 2]), vec![true, true, false]).unwrap();
        let text = set.to_string();
        assert_eq!(text, "SET{t=3; m=4; P={1, 2}; prefix=[1, 1, 0]}");
        assert_eq!(text.parse::<UpSet>().unwrap(), set);
        assert_eq!(evens().to_string(), "SET{t=0; m=2; P={0}}");
        assert_eq!("SET{t=0;m=2;P={0}}".parse::<UpSet>().unwrap(), evens());
    }

    #[test]
    fn progression_sampling() {
        let f = AnchoredUltrafilter::new(1);
        assert_eq!(f.progression(3, 5, 4), vec![7, 10, 13, 16]);
        assert_eq!(f.progression(1, 2, 3), vec![2, 3, 4]);
        let f0 = AnchoredUltrafilter::new(0);
        assert_eq!(f0.progression(4, 3, 3), vec![4, 8, 12]);
    }
}
