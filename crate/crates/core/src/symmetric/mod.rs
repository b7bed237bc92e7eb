//! Symmetric groups: permutations, partitions, irreducible characters,
//! Young tableaux and symmetrizers.

mod character;
mod partition;
mod perm;
mod tableau;

pub use character::{character_table, irreducible_character, CharacterTable};
pub use partition::{factorial, partitions, Partition};
pub use perm::Permutation;
pub use tableau::{standard_tableaux, young_symmetrizer, GroupAlgebraElement, SymmetrizerKind, Tableau};

use crate::error::{check_dim, Result};
use crate::poly::HPolynomial;

/// `g · f = Σ_σ g_σ (σ · f)`.
pub fn apply_group_element(g: &GroupAlgebraElement, f: &HPolynomial) -> Result<HPolynomial> {
    check_dim(f.n(), g.n())?;
    let mut out = HPolynomial::zero(f.n(), f.m());
    for (sigma, c) in g.terms() {
        out = out.add(&f.sn_act(sigma)?.scale(c))?;
    }
    Ok(out)
}
