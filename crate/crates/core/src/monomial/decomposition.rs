//! Irreducible and primary decompositions of monomial ideals.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::ring::Monomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryComponent {
    /// Variable indices of the associated prime.
    pub prime: Vec<usize>,
    pub ideal: MonomialIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryDecomposition {
    /// Sorted by prime.
    pub components: Vec<PrimaryComponent>,
    /// Irreducible components, each generated by pure powers.
    pub irreducible: Vec<MonomialIdeal>,
}

fn split(ideal: &MonomialIdeal, out: &mut Vec<MonomialIdeal>) {
    let gens = ideal.generators();
    let Some(pos) = gens.iter().position(|g| g.support().len() > 1) else {
        out.push(ideal.clone());
        return;
    };
    let g = &gens[pos];
    let i = g.support()[0];
    let mut pure = Monomial::one(g.nvars());
    pure.exponents_mut()[i] = g.exponents()[i];
    let mut rest = g.clone();
    rest.exponents_mut()[i] = 0;
    for replacement in [pure, rest] {
        let mut next = gens.to_vec();
        next[pos] = replacement;
        split(&MonomialIdeal::from_minimal(ideal.ring(), next), out);
    }
}

fn intersect_all(
    ideal: &MonomialIdeal,
    parts: impl Iterator<Item = MonomialIdeal>,
) -> MonomialIdeal {
    parts.fold(MonomialIdeal::unit(ideal.ring()), |a, b| a.intersect(&b))
}

/// `I = ∩ Q_j` with each `Q_j` generated by pure powers, made irredundant, then grouped
/// by radical into primary components. The intersection is re-verified.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<PrimaryDecomposition> {
    ideal.require_proper()?;
    let mut leaves = Vec::new();
    split(ideal, &mut leaves);
    leaves.sort_by(|a, b| a.generators().cmp(b.generators()));
    leaves.dedup();
    // Drop Q when another component is contained in it.
    let irreducible: Vec<MonomialIdeal> = leaves
        .iter()
        .filter(|q| !leaves.iter().any(|p| p != *q && q.contains(p)))
        .cloned()
        .collect();
    let mut groups: BTreeMap<Vec<usize>, Vec<MonomialIdeal>> = BTreeMap::new();
    for q in &irreducible {
        let mut prime: Vec<usize> = q.generators().iter().map(|g| g.support()[0]).collect();
        prime.sort();
        groups.entry(prime).or_default().push(q.clone());
    }
    let components: Vec<PrimaryComponent> = groups
        .into_iter()
        .map(|(prime, qs)| PrimaryComponent {
            prime,
            ideal: intersect_all(ideal, qs.into_iter()),
        })
        .collect();
    if intersect_all(ideal, components.iter().map(|c| c.ideal.clone())) != *ideal {
        return Err(Error::InvariantViolation(alloc::format!(
            "primary components of {ideal} do not intersect to it"
        )));
    }
    Ok(PrimaryDecomposition {
        components,
        irreducible,
    })
}

/// For each minimal prime `P`, the `P`-primary component `I : (∏_{i∉P} x_i)^∞`.
pub fn minimal_primary_components(ideal: &MonomialIdeal) -> Result<Vec<PrimaryComponent>> {
    ideal.require_proper()?;
    let n = ideal.ring().nvars();
    let mut out = Vec::new();
    for prime in ideal.minimal_primes() {
        let outside: Vec<usize> = (0..n).filter(|i| !prime.contains(i)).collect();
        out.push(PrimaryComponent {
            ideal: ideal.saturate_variables(&outside)?,
            prime,
        });
    }
    out.sort_by(|a, b| a.prime.cmp(&b.prime));
    Ok(out)
}
