use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::partition::{partitions, Partition};

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule on beta-sets: removing a rim
/// hook of length `k` moves a bead from `b` to an empty position `b - k`,
/// with sign `(-1)^{beads strictly between}`.
pub fn irreducible_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.n(), mu.n(), "partitions of different integers");
    let s = lambda.len();
    let width = lambda.parts().first().copied().unwrap_or(0) + s;
    let mut beads = vec![false; width];
    for (i, &p) in lambda.parts().iter().enumerate() {
        beads[p + s - 1 - i] = true;
    }
    let mut memo = HashMap::new();
    mn(&mut beads, mu.parts(), &mut memo)
}

fn mn(beads: &mut Vec<bool>, mu: &[usize], memo: &mut HashMap<(Vec<bool>, usize), i64>) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (beads.clone(), mu.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for b in k..beads.len() {
        if !beads[b] || beads[b - k] {
            continue;
        }
        let between = beads[b - k + 1..b].iter().filter(|&&x| x).count();
        beads[b] = false;
        beads[b - k] = true;
        let v = mn(beads, rest, memo);
        beads[b - k] = false;
        beads[b] = true;
        total += if between % 2 == 0 { v } else { -v };
    }
    memo.insert(key, total);
    total
}

/// Character table of `S_n`: rows and columns indexed by `partitions(n)`.
#[derive(Debug)]
pub struct CharacterTable {
    pub partitions: Vec<Partition>,
    /// `values[λ][μ] = χ^λ(μ)`.
    pub values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.partitions.iter().position(|q| q == p)
    }
}

fn cache() -> &'static RwLock<HashMap<usize, Arc<CharacterTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The character table of `S_n`, computed once per `n`.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    if let Some(t) = cache().read().expect("cache lock").get(&n) {
        return Arc::clone(t);
    }
    let parts = partitions(n);
    let values = parts
        .iter()
        .map(|l| parts.iter().map(|m| irreducible_character(l, m)).collect())
        .collect();
    let table = Arc::new(CharacterTable {
        partitions: parts,
        values,
    });
    cache()
        .write()
        .expect("cache lock")
        .entry(n)
        .or_insert(table)
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_values() {
        for mu in partitions(4) {
            assert_eq!(irreducible_character(&p(&[4]), &mu), 1);
            let sign = if (4 - mu.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(irreducible_character(&p(&[1, 1, 1, 1]), &mu), sign);
        }
        assert_eq!(irreducible_character(&p(&[2, 1]), &p(&[3])), -1);
        assert_eq!(irreducible_character(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(irreducible_character(&p(&[3, 2]), &p(&[1, 1, 1, 1, 1])), 5);
        assert_eq!(irreducible_character(&p(&[2, 2]), &p(&[2, 2])), 2);
    }

    #[test]
    fn table_is_cached() {
        let a = character_table(5);
        let b = character_table(5);
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(a.partitions.len(), 7);
    }
}
