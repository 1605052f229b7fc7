//! Closed forms for every threshold the crate knows about.
//!
//! Throughout, `sum = m_1 + ... + m_t` and `k` counts the even sizes. The
//! split that drives everything: when at least two sizes are even (`k >= 2`
//! and `k` itself even matters separately below), complete hosts can be
//! covered by near-regular color classes that dodge the last star, which
//! lowers each threshold by one or more.
//!
//! * Ramsey number `r`: least `N` with `K_N -> (K_{1,m_1}, ..., K_{1,m_t})`.
//!   Equals `sum - t + 1` when `k` is even and positive, else `sum - t + 2`.
//! * Star-critical number `r*`: least `s` such that `K_{r-1}` plus one extra
//!   vertex joined to `s` old vertices still arrows. Equals
//!   `sum - t + 1 - k/2` when `k` is even and positive, else `1`.
//! * Regular Ramsey number `rr`: least `d` (over degrees for which a
//!   `d`-regular graph on `r` vertices exists) from which every regular graph
//!   of that degree or higher arrows. Equals `sum - t` when `k` is even and
//!   positive, else `sum - t + 1`.
//! * Regular threshold `g(n)`: same reading on `n >= r` vertices. Equals
//!   `sum - t` when `n` is odd and `k` is even and positive, else
//!   `sum - t + 1`.
//! * Minimum-degree threshold `f(n)`: least `d` such that every graph on `n`
//!   vertices with minimum degree at least `d` arrows. Equals `sum - t + 1`
//!   when `k = 0` or `n` is even, else `sum - t`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::StarParams;

/// Which side of a threshold formula applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `k >= 2` even sizes (the lowered value).
    EvenK2,
    /// Everything else.
    Otherwise,
    /// Odd host order combined with `k >= 2` even sizes (for `g`).
    OddNEvenK2,
    /// No even sizes at all, or an even host order (for `f`).
    K0OrEvenN,
}

/// A threshold value together with the inputs and the branch that produced it.
#[derive(Debug, Clone, Serialize)]
pub struct ThresholdReport {
    pub params: StarParams,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub value: usize,
    pub branch: Branch,
}

fn even_k2(p: &StarParams) -> bool {
    let k = p.even_count();
    k >= 2 && k.is_multiple_of(2)
}

/// `r(K_{1,m_1}, ..., K_{1,m_t})`.
pub fn ramsey_stars(p: &StarParams) -> usize {
    let base = p.size_sum() - p.t();
    if even_k2(p) {
        base + 1
    } else {
        base + 2
    }
}

/// Star-critical Ramsey number `r*`.
pub fn star_critical_stars(p: &StarParams) -> usize {
    if even_k2(p) {
        p.size_sum() - p.t() + 1 - p.even_count() / 2
    } else {
        1
    }
}

/// Regular Ramsey number `rr`.
pub fn regular_ramsey_stars(p: &StarParams) -> usize {
    let base = p.size_sum() - p.t();
    if even_k2(p) {
        base
    } else {
        base + 1
    }
}

fn check_host_order(p: &StarParams, n: usize) -> Result<()> {
    let r = ramsey_stars(p);
    if n < r {
        return Err(Error::BelowRamsey { n, r });
    }
    Ok(())
}

/// Regular threshold `g(n)` for hosts on `n >= r` vertices.
pub fn regular_threshold_g(p: &StarParams, n: usize) -> Result<ThresholdReport> {
    check_host_order(p, n)?;
    let base = p.size_sum() - p.t();
    let (value, branch) = if n % 2 == 1 && even_k2(p) {
        (base, Branch::OddNEvenK2)
    } else {
        (base + 1, Branch::Otherwise)
    };
    Ok(ThresholdReport {
        params: p.clone(),
        n: Some(n),
        value,
        branch,
    })
}

/// Minimum-degree threshold `f(n)` for hosts on `n >= r` vertices.
pub fn min_degree_threshold_f(p: &StarParams, n: usize) -> Result<ThresholdReport> {
    check_host_order(p, n)?;
    let base = p.size_sum() - p.t();
    let (value, branch) = if p.even_count() == 0 || n.is_multiple_of(2) {
        (base + 1, Branch::K0OrEvenN)
    } else {
        (base, Branch::Otherwise)
    };
    Ok(ThresholdReport {
        params: p.clone(),
        n: Some(n),
        value,
        branch,
    })
}

/// `(r*, rr, r)` with the chain `1 <= r* <= rr <= r - 1` verified.
///
/// A violation can only come from a bug in the formulas themselves, so it is
/// reported as an error rather than silently returned.
pub fn threshold_chain(p: &StarParams) -> Result<(usize, usize, usize)> {
    let r = ramsey_stars(p);
    let rs = star_critical_stars(p);
    let rr = regular_ramsey_stars(p);
    if !(1 <= rs && rs <= rr && rr < r) {
        return Err(Error::ChainViolation(format!(
            "expected 1 <= r*={rs} <= rr={rr} <= r-1={} for {p}",
            r - 1
        )));
    }
    Ok((rs, rr, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(sizes: &[usize]) -> StarParams {
        StarParams::new(sizes.to_vec()).unwrap()
    }

    #[test]
    fn ramsey_values() {
        assert_eq!(ramsey_stars(&p(&[2, 2])), 3);
        assert_eq!(ramsey_stars(&p(&[3, 3])), 6);
        assert_eq!(ramsey_stars(&p(&[2, 3])), 5);
        assert_eq!(ramsey_stars(&p(&[2, 2, 2])), 5);
        assert_eq!(ramsey_stars(&p(&[2, 2, 3])), 5);
        assert_eq!(ramsey_stars(&p(&[4, 6])), 9);
    }

    #[test]
    fn star_critical_values() {
        assert_eq!(star_critical_stars(&p(&[2, 2])), 2);
        assert_eq!(star_critical_stars(&p(&[3, 3])), 1);
        assert_eq!(star_critical_stars(&p(&[2, 3])), 1);
        assert_eq!(star_critical_stars(&p(&[2, 2, 2])), 1);
        assert_eq!(star_critical_stars(&p(&[2, 2, 2, 2])), 3);
        assert_eq!(star_critical_stars(&p(&[2, 2, 3])), 4);
    }

    #[test]
    fn regular_ramsey_values() {
        assert_eq!(regular_ramsey_stars(&p(&[2, 2])), 2);
        assert_eq!(regular_ramsey_stars(&p(&[3, 3])), 5);
        assert_eq!(regular_ramsey_stars(&p(&[2, 3])), 4);
        assert_eq!(regular_ramsey_stars(&p(&[2, 2, 2])), 4);
    }

    #[test]
    fn regular_threshold_values_and_branches() {
        let g = regular_threshold_g(&p(&[2, 2]), 5).unwrap();
        assert_eq!((g.value, g.branch), (2, Branch::OddNEvenK2));
        let g = regular_threshold_g(&p(&[2, 2]), 4).unwrap();
        assert_eq!((g.value, g.branch), (3, Branch::Otherwise));
        let g = regular_threshold_g(&p(&[3, 3]), 7).unwrap();
        assert_eq!((g.value, g.branch), (5, Branch::Otherwise));
        assert!(matches!(
            regular_threshold_g(&p(&[2, 2]), 2),
            Err(Error::BelowRamsey { n: 2, r: 3 })
        ));
    }

    #[test]
    fn min_degree_values_and_branches() {
        let f = min_degree_threshold_f(&p(&[2, 2]), 4).unwrap();
        assert_eq!((f.value, f.branch), (3, Branch::K0OrEvenN));
        let f = min_degree_threshold_f(&p(&[2, 2]), 5).unwrap();
        assert_eq!((f.value, f.branch), (2, Branch::Otherwise));
        let f = min_degree_threshold_f(&p(&[3, 3]), 7).unwrap();
        assert_eq!((f.value, f.branch), (5, Branch::K0OrEvenN));
        assert!(min_degree_threshold_f(&p(&[3, 3]), 5).is_err());
    }

    #[test]
    fn chain_examples() {
        assert_eq!(threshold_chain(&p(&[2, 2])).unwrap(), (2, 2, 3));
        assert_eq!(threshold_chain(&p(&[3, 3])).unwrap(), (1, 5, 6));
        assert_eq!(threshold_chain(&p(&[2, 2, 2])).unwrap(), (1, 4, 5));
    }

    #[test]
    fn chain_holds_on_a_dense_grid() {
        fn rec(sizes: &mut Vec<usize>, t: usize) {
            if sizes.len() == t {
                let params = StarParams::new(sizes.clone()).unwrap();
                threshold_chain(&params).unwrap();
                return;
            }
            for m in 2..=8 {
                sizes.push(m);
                rec(sizes, t);
                sizes.pop();
            }
        }
        for t in 2..=5 {
            rec(&mut Vec::new(), t);
        }
    }

    #[test]
    fn regular_threshold_at_ramsey_order_is_regular_ramsey() {
        fn rec(sizes: &mut Vec<usize>, t: usize) {
            if sizes.len() == t {
                let params = StarParams::new(sizes.clone()).unwrap();
                let n = ramsey_stars(&params);
                let g = regular_threshold_g(&params, n).unwrap();
                assert_eq!(g.value, regular_ramsey_stars(&params), "at {params}");
                return;
            }
            for m in 2..=7 {
                sizes.push(m);
                rec(sizes, t);
                sizes.pop();
            }
        }
        for t in 2..=4 {
            rec(&mut Vec::new(), t);
        }
    }

    proptest! {
        /// All five formulas ignore the order of the star sizes.
        #[test]
        fn permutation_invariance(sizes in proptest::collection::vec(2usize..9, 2..6), rot in 0usize..5) {
            let a = StarParams::new(sizes.clone()).unwrap();
            let mut rotated = sizes.clone();
            rotated.rotate_left(rot % sizes.len());
            rotated.reverse();
            let b = StarParams::new(rotated).unwrap();

            prop_assert_eq!(ramsey_stars(&a), ramsey_stars(&b));
            prop_assert_eq!(star_critical_stars(&a), star_critical_stars(&b));
            prop_assert_eq!(regular_ramsey_stars(&a), regular_ramsey_stars(&b));
            let n = ramsey_stars(&a) + 1;
            prop_assert_eq!(
                regular_threshold_g(&a, n).unwrap().value,
                regular_threshold_g(&b, n).unwrap().value
            );
            prop_assert_eq!(
                min_degree_threshold_f(&a, n).unwrap().value,
                min_degree_threshold_f(&b, n).unwrap().value
            );
        }
    }
}
