//! Partition counts used to cross-check twisted elliptic class numbers.

use crate::error::{Error, Result};
use crate::rootsys::Family;

/// Partitions of `n` into distinct parts.
pub fn distinct_part_partitions(n: usize) -> u64 {
    // dp[s] over parts 1..=m, each used at most once
    let mut dp = vec![0u64; n + 1];
    dp[0] = 1;
    for part in 1..=n {
        for s in (part..=n).rev() {
            dp[s] += dp[s - part];
        }
    }
    dp[n]
}

/// Partitions of `n` with an odd number of parts.
pub fn odd_length_partitions(n: usize) -> u64 {
    // dp[s][parity] over parts 1..=m, unbounded use
    let mut dp = vec![[0u64; 2]; n + 1];
    dp[0][0] = 1;
    for part in 1..=n {
        for s in part..=n {
            let prev = dp[s - part];
            dp[s][0] += prev[1];
            dp[s][1] += prev[0];
        }
    }
    dp[n][1]
}

/// The partition count quoted for the twisted elliptic class number of the
/// family at argument `n`: distinct parts for `A`, odd number of parts for
/// `D` (`n` odd).
pub fn partition_oracle(family: Family, n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::Unsupported("partition oracle needs n >= 1".into()));
    }
    match family {
        Family::A => Ok(distinct_part_partitions(n)),
        Family::D if n % 2 == 1 => Ok(odd_length_partitions(n)),
        Family::D => Err(Error::Unsupported("D_n partition count is stated for odd n".into())),
        f => Err(Error::Unsupported(format!("no partition oracle for type {f}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force: all non-increasing sequences summing to n.
    fn all_partitions(n: usize) -> Vec<Vec<usize>> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest == 0 {
                out.push(cur.clone());
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = vec![];
        go(n, n, &mut vec![], &mut out);
        out
    }

    #[test]
    fn against_enumeration() {
        for n in 1..=14 {
            let parts = all_partitions(n);
            let distinct = parts.iter().filter(|p| p.windows(2).all(|w| w[0] > w[1])).count() as u64;
            let odd = parts.iter().filter(|p| p.len() % 2 == 1).count() as u64;
            assert_eq!(distinct_part_partitions(n), distinct, "n={n}");
            assert_eq!(odd_length_partitions(n), odd, "n={n}");
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(partition_oracle(Family::A, 3).unwrap(), 2);
        assert_eq!(partition_oracle(Family::A, 1).unwrap(), 1);
        assert_eq!(partition_oracle(Family::D, 3).unwrap(), 2);
        assert!(partition_oracle(Family::E, 6).is_err());
        assert!(partition_oracle(Family::D, 4).is_err());
    }
}
