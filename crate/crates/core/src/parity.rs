//! Parity conditions on binomial coefficients that any self-complementary
//! t-subset-regular k-hypergraph of order n must satisfy.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Parity of `C(a, b)` by Lucas' theorem: odd iff the bits of `b` are a subset of the bits of `a`.
///
/// `C(a, b) = 0` (even) for `b > a`; that case is covered by the bit test as well.
pub fn binom_parity(a: u64, b: u64) -> Parity {
    if b & !a == 0 {
        Parity::Odd
    } else {
        Parity::Even
    }
}

/// Parity of `C(n - i, k - i)` for each `i = 0..=t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub n: u64,
    pub k: u64,
    pub t: u64,
    pub parities: Vec<Parity>,
}

impl AdmissibilityReport {
    /// True iff every listed coefficient is even.
    pub fn admissible(&self) -> bool {
        self.parities.iter().all(|&p| p == Parity::Even)
    }
}

impl fmt::Display for AdmissibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parities.iter().enumerate() {
            let i = i as u64;
            writeln!(f, "i={i} C({},{}) {p}", self.n - i, self.k - i)?;
        }
        writeln!(f, "admissible {}", self.admissible())
    }
}

pub fn admissible(n: u64, k: u64, t: u64) -> Result<AdmissibilityReport> {
    if !(t < k && k < n) {
        return Err(Error::InvalidParameters(format!(
            "need t < k < n, got n = {n}, k = {k}, t = {t}"
        )));
    }
    Ok(AdmissibilityReport {
        n,
        k,
        t,
        parities: (0..=t).map(|i| binom_parity(n - i, k - i)).collect(),
    })
}

/// Default scan bound for [`residue_classes`]: sixteen full periods past `k`.
pub fn default_scan_bound(k: u64, modulus: u64) -> u64 {
    k + 1 + 16 * modulus
}

/// Residues `n mod modulus` of admissible orders `n < scan_bound`.
///
/// Every complete period `[j * modulus, (j + 1) * modulus)` lying in `(k, scan_bound)`
/// must produce the same residue set, and at least two such periods are required;
/// otherwise the answer is reported as not periodic.
pub fn residue_classes(k: u64, t: u64, modulus: u64, scan_bound: u64) -> Result<BTreeSet<u64>> {
    if !modulus.is_power_of_two() {
        return Err(Error::InvalidParameters(format!(
            "modulus {modulus} is not a power of two"
        )));
    }
    if t >= k {
        return Err(Error::InvalidParameters(format!(
            "need t < k, got k = {k}, t = {t}"
        )));
    }
    if scan_bound < modulus + k {
        return Err(Error::InvalidParameters(format!(
            "scan bound {scan_bound} below modulus + k = {}",
            modulus + k
        )));
    }
    let first_period = (k + 1).div_ceil(modulus);
    let mut reference: Option<BTreeSet<u64>> = None;
    let mut periods = 0;
    let mut j = first_period;
    while (j + 1) * modulus <= scan_bound {
        let set: BTreeSet<u64> = (j * modulus..(j + 1) * modulus)
            .filter(|&n| admissible(n, k, t).is_ok_and(|r| r.admissible()))
            .map(|n| n % modulus)
            .collect();
        match &reference {
            None => reference = Some(set),
            Some(r) if *r != set => {
                return Err(Error::NotPeriodic {
                    modulus,
                    bound: scan_bound,
                })
            }
            Some(_) => {}
        }
        periods += 1;
        j += 1;
    }
    if periods < 2 {
        return Err(Error::InvalidParameters(format!(
            "scan bound {scan_bound} covers fewer than two full periods above k"
        )));
    }
    Ok(reference.unwrap_or_default())
}

/// Formats a residue set as `{a, b}`.
pub fn format_residues(set: &BTreeSet<u64>) -> String {
    let items: Vec<String> = set.iter().map(u64::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::binomial;

    #[test]
    fn parity_examples() {
        assert_eq!(binom_parity(4, 2), Parity::Even);
        assert_eq!(binom_parity(3, 1), Parity::Odd);
        assert_eq!(binom_parity(5, 0), Parity::Odd);
        assert_eq!(binom_parity(2, 5), Parity::Even);
        assert_eq!(binom_parity(0, 0), Parity::Odd);
    }

    #[test]
    fn parity_matches_exact_values() {
        for a in 0..=30u64 {
            for b in 0..=a {
                let exact = binomial(a, b).unwrap();
                let expected = if exact.is_multiple_of(2) {
                    Parity::Even
                } else {
                    Parity::Odd
                };
                assert_eq!(binom_parity(a, b), expected, "C({a},{b}) = {exact}");
            }
        }
    }

    #[test]
    fn admissibility_examples() {
        let r = admissible(6, 3, 2).unwrap();
        assert_eq!(r.parities, vec![Parity::Even; 3]);
        assert!(r.admissible());
        assert_eq!(
            r.to_string(),
            "i=0 C(6,3) even\ni=1 C(5,2) even\ni=2 C(4,1) even\nadmissible true\n"
        );
        let r = admissible(7, 3, 2).unwrap();
        assert_eq!(r.parities[0], Parity::Odd);
        assert!(!r.admissible());
        assert!(admissible(5, 2, 1).unwrap().admissible());
        assert!(admissible(3, 3, 2).is_err());
        assert!(admissible(6, 3, 3).is_err());
    }

    #[test]
    fn residue_instances() {
        let rc = |k, t, m| residue_classes(k, t, m, default_scan_bound(k, m)).unwrap();
        assert_eq!(rc(2, 1, 4), BTreeSet::from([1]));
        assert_eq!(rc(3, 1, 4), BTreeSet::from([1, 2]));
        assert_eq!(rc(3, 2, 4), BTreeSet::from([2]));
        assert_eq!(rc(3, 2, 8), BTreeSet::from([2, 6]));
        assert_eq!(format_residues(&rc(3, 1, 4)), "{1, 2}");
    }

    #[test]
    fn residue_errors() {
        assert!(residue_classes(3, 2, 6, 200).is_err());
        assert!(matches!(
            residue_classes(3, 2, 2, 200),
            Err(Error::NotPeriodic { .. })
        ));
        assert!(residue_classes(3, 2, 4, 5).is_err());
        assert!(residue_classes(3, 2, 4, 8).is_err());
    }
}
