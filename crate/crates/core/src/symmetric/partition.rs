use std::fmt;

use crate::error::{Error, Result};

/// An integer partition `λ_1 ≥ λ_2 ≥ ... ≥ λ_s > 0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "{parts:?} is not a weakly decreasing list of positive integers"
            )));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_k` with one-based `k`, zero past the last row.
    pub fn part(&self, k: usize) -> usize {
        self.parts.get(k.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Cells below row `d`: `Σ_{k > d} λ_k`.
    pub fn tail_below(&self, d: usize) -> usize {
        self.parts.iter().skip(d).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Hook length of the cell in row `i`, column `j` (zero-based).
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.parts[i] - j - 1;
        let leg = self.parts[i + 1..].iter().filter(|&&p| p > j).count();
        arm + leg + 1
    }

    /// `f^λ` by the hook length formula.
    pub fn dim_irreducible(&self) -> u128 {
        let hooks: u128 = self
            .parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
            .map(|(i, j)| self.hook(i, j) as u128)
            .product();
        factorial(self.n()) / hooks
    }

    /// Size of the conjugacy class of `S_n` with this cycle type:
    /// `n! / Π_k k^{m_k} m_k!`.
    pub fn class_size(&self) -> u128 {
        factorial(self.n()) / self.centralizer_order()
    }

    pub fn centralizer_order(&self) -> u128 {
        let mut z: u128 = 1;
        let mut i = 0;
        while i < self.parts.len() {
            let k = self.parts[i];
            let mult = self.parts[i..].iter().take_while(|&&p| p == k).count();
            z *= (k as u128).pow(mult as u32) * factorial(mult);
            i += mult;
        }
        z
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first and
/// `(1^n)` last.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `(3,2,1)`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn counts_and_order() {
        assert_eq!(partitions(1), vec![p(&[1])]);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(6).len(), 11);
        assert_eq!(partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn hook_dimensions() {
        assert_eq!(p(&[5]).dim_irreducible(), 1);
        assert_eq!(p(&[1, 1, 1, 1]).dim_irreducible(), 1);
        assert_eq!(p(&[2, 1]).dim_irreducible(), 2);
        assert_eq!(p(&[3, 2]).dim_irreducible(), 5);
        assert_eq!(p(&[3, 2]).conjugate(), p(&[2, 2, 1]));
    }

    #[test]
    fn classes() {
        assert_eq!(p(&[2, 1, 1]).class_size(), 6);
        assert_eq!(p(&[2, 2]).class_size(), 3);
        let total: u128 = partitions(6).iter().map(Partition::class_size).sum();
        assert_eq!(total, 720);
        assert!(Partition::new(vec![1, 2]).is_err());
    }
}
