use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sizes `(m_1, ..., m_t)` of the target stars `K_{1,m_i}`, one per color.
///
/// Every size must be at least 2 and at least two colors are required; the
/// derived quantities `t`, `k` (number of even sizes) and `sum` are always
/// recomputed from the list rather than stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StarParams {
    sizes: Vec<usize>,
}

impl StarParams {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.len() < 2 {
            return Err(Error::TooFewStars(sizes.len()));
        }
        if let Some(&bad) = sizes.iter().find(|&&m| m < 2) {
            return Err(Error::StarSizeTooSmall(bad));
        }
        Ok(StarParams { sizes })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of colors `t`.
    pub fn t(&self) -> usize {
        self.sizes.len()
    }

    /// Number of even sizes, written `k` throughout the crate.
    pub fn even_count(&self) -> usize {
        self.sizes.iter().filter(|&&m| m % 2 == 0).count()
    }

    /// `m_1 + ... + m_t`.
    pub fn size_sum(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Reorders the sizes so the even ones come first, each group ascending.
    ///
    /// All formulas are permutation invariant, but the witness constructions
    /// index colors positionally (the first `k` colors are the even ones and
    /// color `k` carries the construction's special edges), so builders call
    /// this before doing anything else. Sorting each group ascending makes
    /// `m_k` the largest even size, which keeps the regular witness
    /// constructible whenever any even size exceeds 2.
    pub fn canonical(&self) -> StarParams {
        let mut evens: Vec<usize> = self.sizes.iter().copied().filter(|m| m % 2 == 0).collect();
        let mut odds: Vec<usize> = self.sizes.iter().copied().filter(|m| m % 2 == 1).collect();
        evens.sort_unstable();
        odds.sort_unstable();
        evens.extend(odds);
        StarParams { sizes: evens }
    }

    pub fn is_canonical(&self) -> bool {
        self.sizes == self.canonical().sizes
    }
}

impl fmt::Display for StarParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, m) in self.sizes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for StarParams {
    type Err = Error;

    /// Parses a comma separated list such as `2,2,3`.
    fn from_str(s: &str) -> Result<Self> {
        let sizes = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidCertificate(format!("bad star size {part:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        StarParams::new(sizes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_quantities() {
        let p = StarParams::new(vec![2, 3]).unwrap();
        assert_eq!(p.t(), 2);
        assert_eq!(p.even_count(), 1);
        assert_eq!(p.size_sum(), 5);

        let p = StarParams::new(vec![2, 2, 4, 5]).unwrap();
        assert_eq!(p.even_count(), 3);
        assert_eq!(p.size_sum(), 13);
    }

    #[test]
    fn rejects_small_sizes_and_single_color() {
        assert!(matches!(
            StarParams::new(vec![1, 3]),
            Err(Error::StarSizeTooSmall(1))
        ));
        assert!(matches!(
            StarParams::new(vec![4]),
            Err(Error::TooFewStars(1))
        ));
        assert!(matches!(
            StarParams::new(vec![]),
            Err(Error::TooFewStars(0))
        ));
    }

    #[test]
    fn canonical_puts_evens_first_ascending() {
        let p = StarParams::new(vec![3, 2, 4, 2]).unwrap();
        assert_eq!(p.canonical().sizes(), &[2, 2, 4, 3]);
        assert!(!p.is_canonical());
        assert!(p.canonical().is_canonical());

        let q = StarParams::new(vec![5, 3]).unwrap();
        assert_eq!(q.canonical().sizes(), &[3, 5]);
        assert_eq!(q.canonical().even_count(), 0);
    }

    #[test]
    fn parses_comma_lists() {
        let p: StarParams = "2,2,3".parse().unwrap();
        assert_eq!(p.sizes(), &[2, 2, 3]);
        assert!(" 2, 4 ".parse::<StarParams>().is_ok());
        assert!("2".parse::<StarParams>().is_err());
        assert!("2,x".parse::<StarParams>().is_err());
        assert!("".parse::<StarParams>().is_err());
    }
}
