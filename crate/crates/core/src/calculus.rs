//! Derivative ideals, the strongly Golod predicate `∂(I)² ⊆ I`, and the ideal operations
//! under which the predicate is preserved: products, intersections, sums, colons, powers,
//! symbolic and saturated powers.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::FreeModule;
use crate::ideal::Ideal;
use crate::monomial::MonomialIdeal;
use crate::ring::{same_ring, Polynomial, Ring};

/// A partial derivative `∂g/∂x_var` of the generator with index `generator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partial {
    pub generator: usize,
    pub var: usize,
    pub value: Polynomial,
}

/// A product of two partials that falls outside the ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GolodWitness {
    pub left: Partial,
    pub right: Partial,
    pub product: Polynomial,
    /// Nonzero, fully reduced remainder of `product` modulo the ideal.
    pub normal_form: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StronglyGolodReport {
    pub verdict: bool,
    /// Present exactly when `verdict` is false.
    pub witness: Option<GolodWitness>,
}

fn require_graded_proper(ideal: &Ideal) -> Result<()> {
    ideal.require_homogeneous()?;
    ideal.require_proper()
}

/// Nonzero partials of the generators, thinned to a minimal generating set of `∂(I)`.
/// Order: by degree, then generator index, then variable.
fn derivative_generators(ideal: &Ideal) -> Result<Vec<Partial>> {
    let ring = ideal.ring();
    let mut partials = Vec::new();
    for (g, f) in ideal.generators().iter().enumerate() {
        for i in 0..ring.nvars() {
            let d = f.derivative(i)?;
            if !d.is_zero() {
                partials.push(Partial {
                    generator: g,
                    var: i,
                    value: d,
                });
            }
        }
    }
    let module = FreeModule {
        ring: ring.clone(),
        shifts: alloc::vec![0],
    };
    let cols: Vec<Vec<Polynomial>> = partials
        .iter()
        .map(|p| alloc::vec![p.value.clone()])
        .collect();
    let keep = module.minimal_generator_indices(&cols)?;
    Ok(keep.into_iter().map(|k| partials[k].clone()).collect())
}

/// `∂(I)`: the ideal generated by all partial derivatives of the generators.
pub fn derivative_ideal(ideal: &Ideal) -> Result<Ideal> {
    require_graded_proper(ideal)?;
    let gens = derivative_generators(ideal)?
        .into_iter()
        .map(|p| p.value)
        .collect();
    Ideal::new(ideal.ring(), gens)
}

/// Decides `∂(I)² ⊆ I` by reducing every pairwise product of generators of `∂(I)`.
/// The witness is the first failing pair in generator order.
pub fn strongly_golod(ideal: &Ideal) -> Result<StronglyGolodReport> {
    require_graded_proper(ideal)?;
    if ideal.is_zero() {
        return Ok(StronglyGolodReport {
            verdict: true,
            witness: None,
        });
    }
    let partials = derivative_generators(ideal)?;
    for a in 0..partials.len() {
        for b in a..partials.len() {
            let product = &partials[a].value * &partials[b].value;
            let nf = ideal.normal_form(&product)?;
            if !nf.is_member {
                let witness = GolodWitness {
                    left: partials[a].clone(),
                    right: partials[b].clone(),
                    product,
                    normal_form: nf.remainder,
                };
                return Ok(StronglyGolodReport {
                    verdict: false,
                    witness: Some(witness),
                });
            }
        }
    }
    Ok(StronglyGolodReport {
        verdict: true,
        witness: None,
    })
}

/// `I^k`: all `k`-fold products of generators, deduplicated up to scalars.
pub fn power(ideal: &Ideal, k: usize) -> Result<Ideal> {
    if k < 1 {
        return Err(Error::InvalidExponent { k, min: 1 });
    }
    let base: Vec<Polynomial> = dedup_monic(ideal.generators().iter().map(|g| g.monic()));
    // Multisets of generator indices, built as non-decreasing index sequences.
    let mut layer: Vec<(usize, Polynomial)> = base
        .iter()
        .enumerate()
        .map(|(i, g)| (i, g.clone()))
        .collect();
    for _ in 1..k {
        let mut next = Vec::new();
        for (last, p) in &layer {
            for (i, g) in base.iter().enumerate().skip(*last) {
                next.push((i, p * g));
            }
        }
        layer = next;
    }
    Ideal::new(ideal.ring(), dedup_monic(layer.into_iter().map(|(_, p)| p)))
}

fn dedup_monic(polys: impl Iterator<Item = Polynomial>) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    for p in polys {
        let p = p.monic();
        if !p.is_zero() && !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

#[derive(Clone, Debug)]
pub enum SymbolicMode {
    /// `L = m`: the saturated power `I^k : m^∞`.
    Saturated,
    /// `I^k : L^∞` for a caller-supplied `L`.
    Auxiliary(Ideal),
    /// Squarefree monomial ideals: intersection of `P^k` over the minimal primes.
    MonomialSquarefree,
}

#[derive(Clone, Debug)]
pub struct SymbolicPowerSpec {
    pub k: usize,
    pub mode: SymbolicMode,
}

#[derive(Clone, Debug)]
pub struct SymbolicPower {
    pub ideal: Ideal,
    /// Number of strictly enlarging colon steps, for the saturation modes.
    pub stabilization: Option<usize>,
}

pub fn symbolic_power(ideal: &Ideal, spec: &SymbolicPowerSpec) -> Result<SymbolicPower> {
    if spec.k < 1 {
        return Err(Error::InvalidExponent { k: spec.k, min: 1 });
    }
    match &spec.mode {
        SymbolicMode::Saturated => {
            let sat = power(ideal, spec.k)?.saturate(&Ideal::maximal(ideal.ring()))?;
            Ok(SymbolicPower {
                ideal: sat.ideal,
                stabilization: Some(sat.stabilization),
            })
        }
        SymbolicMode::Auxiliary(l) => {
            if !same_ring(ideal.ring(), l.ring()) {
                return Err(Error::RingMismatch);
            }
            if l.is_zero() {
                return Err(Error::ZeroColon);
            }
            let sat = power(ideal, spec.k)?.saturate(l)?;
            Ok(SymbolicPower {
                ideal: sat.ideal,
                stabilization: Some(sat.stabilization),
            })
        }
        SymbolicMode::MonomialSquarefree => {
            let m = MonomialIdeal::from_ideal(ideal)?;
            let s = m.squarefree_symbolic_power(spec.k)?;
            Ok(SymbolicPower {
                ideal: s.to_ideal(),
                stabilization: None,
            })
        }
    }
}

/// Saturated power `I^k : m^∞`.
pub fn saturated_power(ideal: &Ideal, k: usize) -> Result<SymbolicPower> {
    symbolic_power(
        ideal,
        &SymbolicPowerSpec {
            k,
            mode: SymbolicMode::Saturated,
        },
    )
}

/// Whether `I : J = I : J²`.
pub fn check_colon_condition(ideal: &Ideal, j: &Ideal) -> Result<bool> {
    if j.is_zero() {
        return Err(Error::ZeroColon);
    }
    Ok(ideal.colon(j)? == ideal.colon(&power(j, 2)?)?)
}

#[derive(Clone, Debug)]
pub struct PrimePowerSum {
    pub ideal: Ideal,
    /// `∂(I) ⊆ P`, checked when `I` is homogeneous and strongly Golod.
    pub derivative_in_prime: Option<bool>,
}

/// `I + P^k` for an ideal `P ⊇ I` that the caller asserts is prime.
pub fn add_prime_power(ideal: &Ideal, prime: &Ideal, k: usize) -> Result<PrimePowerSum> {
    if k < 2 {
        return Err(Error::InvalidExponent { k, min: 2 });
    }
    if !prime.contains(ideal)? {
        return Err(Error::NotContained(alloc::format!(
            "{prime} does not contain {ideal}"
        )));
    }
    let sum = ideal.sum(&power(prime, k)?)?;
    let derivative_in_prime =
        if ideal.is_homogeneous() && !ideal.is_unit() && strongly_golod(ideal)?.verdict {
            Some(ideal.is_zero() || prime.contains(&derivative_ideal(ideal)?)?)
        } else {
            None
        };
    Ok(PrimePowerSum {
        ideal: sum,
        derivative_in_prime,
    })
}

/// Whether every iterated partial derivative of `f` of order `< k` lies in `P`. For a
/// prime `P` this decides `f ∈ P^(k)`.
pub fn zariski_nagata_membership(f: &Polynomial, prime: &Ideal, k: usize) -> Result<bool> {
    if k < 1 {
        return Err(Error::InvalidExponent { k, min: 1 });
    }
    if !same_ring(f.ring(), prime.ring()) {
        return Err(Error::RingMismatch);
    }
    let n = f.ring().nvars();
    let mut frontier = alloc::vec![f.clone()];
    for order in 0..k {
        for g in &frontier {
            if !prime.contains_polynomial(g)? {
                return Ok(false);
            }
        }
        if order + 1 == k {
            break;
        }
        let mut next: Vec<Polynomial> = Vec::new();
        for g in &frontier {
            for i in 0..n {
                let d = g.derivative(i)?.monic();
                if !d.is_zero() && !next.contains(&d) {
                    next.push(d);
                }
            }
        }
        frontier = next;
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InbetweenReport {
    /// `(I^(k-1))² ⊆ I^k`.
    pub hypothesis_holds: bool,
    /// `I^k ⊆ J ⊆ I^(k)`.
    pub sandwich_holds: bool,
    pub strongly_golod: bool,
    /// Sandwich and predicate both hold.
    pub verdict: bool,
}

/// Checks an ideal `J` squeezed between `I^k` and the supplied `I^(k)`.
pub fn check_inbetween(
    ideal: &Ideal,
    j: &Ideal,
    k: usize,
    symbolic_k: &Ideal,
    symbolic_km1: &Ideal,
) -> Result<InbetweenReport> {
    if k < 2 {
        return Err(Error::InvalidExponent { k, min: 2 });
    }
    let ordinary = power(ideal, k)?;
    let hypothesis_holds = ordinary.contains(&power(symbolic_km1, 2)?)?;
    let sandwich_holds = j.contains(&ordinary)? && symbolic_k.contains(j)?;
    let sg = strongly_golod(j)?.verdict;
    if hypothesis_holds && sandwich_holds && !sg {
        return Err(Error::InvariantViolation(alloc::format!(
            "{j} lies between I^{k} and I^({k}) under the hypothesis but is not strongly Golod"
        )));
    }
    Ok(InbetweenReport {
        hypothesis_holds,
        sandwich_holds,
        strongly_golod: sg,
        verdict: sandwich_holds && sg,
    })
}

/// Ideal generated by distinct variables (a radical ideal), used as a negative control.
pub fn variable_ideal(ring: &Ring, vars: &[usize]) -> Ideal {
    Ideal::new(
        ring,
        vars.iter().map(|&i| Polynomial::var(ring, i)).collect(),
    )
    .unwrap()
}

/// Short description of a witness, e.g. `(∂(x*z)/∂x)·(∂(y*z)/∂y) = z^2`.
pub fn describe_witness(ideal: &Ideal, w: &GolodWitness) -> String {
    let names = ideal.ring().names();
    let gens = ideal.generators();
    alloc::format!(
        "(∂({})/∂{})·(∂({})/∂{}) = {} ∉ I, normal form {}",
        gens[w.left.generator],
        names[w.left.var],
        gens[w.right.generator],
        names[w.right.var],
        w.product,
        w.normal_form
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::GradingSpec;

    fn ideal(r: &Ring, g: &[&str]) -> Ideal {
        Ideal::parse(r, g).unwrap()
    }

    #[test]
    fn derivative_ideals() {
        let r = GradingSpec::standard(&["x", "y", "z"]);
        assert_eq!(
            derivative_ideal(&ideal(&r, &["x^2", "x*y", "y^2"])).unwrap(),
            ideal(&r, &["x", "y"])
        );
        for k in 1..5 {
            let xk = alloc::format!("x^{k}");
            let xk1 = alloc::format!("x^{}", k - 1);
            assert_eq!(
                derivative_ideal(&ideal(&r, &[&xk])).unwrap(),
                ideal(&r, &[&xk1])
            );
        }
        assert_eq!(
            derivative_ideal(&ideal(&r, &["x*z", "y*z"])).unwrap(),
            ideal(&r, &["x", "y", "z"])
        );
        assert_eq!(
            derivative_ideal(&ideal(&r, &["x", "1"])).unwrap_err(),
            Error::ImproperIdeal
        );
    }

    #[test]
    fn predicate_examples() {
        let r = GradingSpec::standard(&["x", "y", "z"]);
        assert!(
            strongly_golod(&ideal(&r, &["x^2", "x*y", "y^2"]))
                .unwrap()
                .verdict
        );
        let rep = strongly_golod(&ideal(&r, &["x*z", "y*z"])).unwrap();
        assert!(!rep.verdict);
        let w = rep.witness.unwrap();
        assert_eq!(w.product, Polynomial::parse(&r, "z^2").unwrap());
        assert_eq!(w.normal_form, w.product);
        assert!(strongly_golod(&Ideal::zero(&r)).unwrap().verdict);
        assert_eq!(
            strongly_golod(&Ideal::unit(&r)).unwrap_err(),
            Error::ImproperIdeal
        );
    }

    #[test]
    fn powers() {
        let r = GradingSpec::standard(&["x", "y"]);
        let m = ideal(&r, &["x", "y"]);
        assert_eq!(power(&m, 2).unwrap(), ideal(&r, &["x^2", "x*y", "y^2"]));
        assert_eq!(power(&m, 1).unwrap(), m);
        let p = power(&ideal(&r, &["x^2", "y^2"]), 2).unwrap();
        assert_eq!(p.generators().len(), 3);
        assert_eq!(p, ideal(&r, &["x^4", "x^2*y^2", "y^4"]));
        assert_eq!(
            power(&m, 0).unwrap_err(),
            Error::InvalidExponent { k: 0, min: 1 }
        );
    }

    #[test]
    fn saturated_square() {
        let r = GradingSpec::standard(&["x", "y"]);
        let s = saturated_power(&ideal(&r, &["x^2", "x*y"]), 2).unwrap();
        assert_eq!(s.ideal, ideal(&r, &["x^2"]));
        let unit_l = SymbolicPowerSpec {
            k: 3,
            mode: SymbolicMode::Auxiliary(Ideal::unit(&r)),
        };
        let i = ideal(&r, &["x^2 + y^2", "x*y"]);
        assert_eq!(
            symbolic_power(&i, &unit_l).unwrap().ideal,
            power(&i, 3).unwrap()
        );
        let zero_l = SymbolicPowerSpec {
            k: 2,
            mode: SymbolicMode::Auxiliary(Ideal::zero(&r)),
        };
        assert_eq!(symbolic_power(&i, &zero_l).unwrap_err(), Error::ZeroColon);
    }

    #[test]
    fn triangle_symbolic_square() {
        let r = GradingSpec::indexed(3);
        let cover = ideal(&r, &["x1*x2", "x1*x3", "x2*x3"]);
        let spec = SymbolicPowerSpec {
            k: 2,
            mode: SymbolicMode::MonomialSquarefree,
        };
        let s = symbolic_power(&cover, &spec).unwrap().ideal;
        let expected = power(&cover, 2)
            .unwrap()
            .sum(&ideal(&r, &["x1*x2*x3"]))
            .unwrap();
        assert_eq!(s, expected);
        let not_monomial = ideal(&r, &["x1*x2 + x3^2"]);
        assert_eq!(
            symbolic_power(&not_monomial, &spec).unwrap_err(),
            Error::NotMonomial
        );
    }

    #[test]
    fn colon_conditions() {
        let r = GradingSpec::standard(&["x", "y"]);
        assert!(
            check_colon_condition(&ideal(&r, &["x^2", "x*y"]), &ideal(&r, &["x", "y"])).unwrap()
        );
        assert!(!check_colon_condition(&ideal(&r, &["x^2"]), &ideal(&r, &["x"])).unwrap());
        assert!(check_colon_condition(&ideal(&r, &["x^3 - y^3"]), &Ideal::unit(&r)).unwrap());
        assert_eq!(
            check_colon_condition(&ideal(&r, &["x"]), &Ideal::zero(&r)).unwrap_err(),
            Error::ZeroColon
        );
    }

    #[test]
    fn prime_power_sums() {
        let r = GradingSpec::standard(&["x", "y", "z"]);
        let i = ideal(&r, &["x^2", "x*y", "y^2"]);
        let s = add_prime_power(&i, &ideal(&r, &["x", "y"]), 2).unwrap();
        assert_eq!(s.ideal, i);
        assert_eq!(s.derivative_in_prime, Some(true));
        let s = add_prime_power(&ideal(&r, &["x^4"]), &ideal(&r, &["x"]), 2).unwrap();
        assert_eq!(s.ideal, ideal(&r, &["x^2"]));
        let s = add_prime_power(&i, &Ideal::maximal(&r), 3).unwrap();
        let mut expected = alloc::vec!["x^2", "x*y", "y^2"];
        let cubes = [
            "z^3", "x*z^2", "y*z^2", "x^2*z", "x*y*z", "y^2*z", "x^3", "y^3", "x^2*y", "x*y^2",
        ];
        expected.extend(cubes);
        assert_eq!(s.ideal, ideal(&r, &expected));
        assert!(strongly_golod(&s.ideal).unwrap().verdict);
        assert!(matches!(
            add_prime_power(&ideal(&r, &["z^2"]), &ideal(&r, &["x"]), 2),
            Err(Error::NotContained(_))
        ));
    }

    #[test]
    fn zariski_nagata() {
        let r = GradingSpec::standard(&["x", "y"]);
        let p = ideal(&r, &["x"]);
        let f = Polynomial::parse(&r, "x^2*y").unwrap();
        assert!(zariski_nagata_membership(&f, &p, 2).unwrap());
        assert!(!zariski_nagata_membership(&Polynomial::parse(&r, "x").unwrap(), &p, 2).unwrap());
        assert!(!zariski_nagata_membership(&f, &p, 3).unwrap());
    }
}
