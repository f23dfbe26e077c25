//! The built-in example suite: every worked example and closure property, each under a
//! short anchor name.

use golod_core::calculus::{
    add_prime_power, check_colon_condition, check_inbetween, derivative_ideal, power,
    saturated_power, strongly_golod, zariski_nagata_membership,
};
use golod_core::corpus::{corpus, random_between, CorpusEntry};
use golod_core::koszul::{koszul_homology, trivial_multiplication_check};
use golod_core::monomial::graph::degree_gap_check;
use golod_core::monomial::{
    integral_closure, minimal_primary_components, odd_cycle_suite, Graph, MonomialIdeal,
};
use golod_core::poincare::{
    actual_poincare, golod_verdict, serre_bound_series, GolodStatus, SeriesBounds,
};
use golod_core::resolution::minimal_free_resolution;
use golod_core::{GradingSpec, Ideal, Polynomial, Result};
use serde::Serialize;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub anchor: String,
    pub passed: bool,
    pub detail: String,
}

fn check(anchor: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        anchor: anchor.to_string(),
        passed,
        detail: detail.into(),
    }
}

/// Runs every check. Failures are reported, not raised; errors abort.
pub fn run_suite(seed: u64) -> Result<Vec<Check>> {
    let corpus = corpus();
    let sg: Vec<&CorpusEntry> = {
        let mut v = Vec::new();
        for e in &corpus {
            if strongly_golod(&e.ideal)?.verdict {
                v.push(e);
            }
        }
        v
    };
    let mut out = vec![counterexample()?];
    out.extend(powers(&corpus)?);
    out.extend(closure_operations(&sg)?);
    out.extend(prime_sums(&sg)?);
    out.extend(odd_cycles()?);
    out.push(degree_gap()?);
    out.push(inbetween(seed)?);
    out.extend(integral(&sg)?);
    out.push(components(&sg)?);
    out.extend(series(&corpus, &sg)?);
    Ok(out)
}

fn counterexample() -> Result<Check> {
    let r = GradingSpec::standard(&["x", "y", "z"]);
    let i = Ideal::parse(&r, &["x*z", "y*z"])?;
    let rep = strongly_golod(&i)?;
    let z2 = Polynomial::parse(&r, "z^2")?;
    let ok = !rep.verdict && rep.witness.as_ref().is_some_and(|w| w.normal_form == z2);
    Ok(check(
        "product-counterexample",
        ok,
        "(x*z, y*z) fails with witness z^2",
    ))
}

fn powers(corpus: &[CorpusEntry]) -> Result<Vec<Check>> {
    let (mut plain, mut sat, mut vacuous) = (true, true, 0);
    for e in corpus {
        for k in [2, 3] {
            plain &= strongly_golod(&power(&e.ideal, k)?)?.verdict;
            let s = saturated_power(&e.ideal, k)?.ideal;
            if s.is_unit() {
                vacuous += 1;
            } else {
                sat &= strongly_golod(&s)?.verdict;
            }
        }
    }
    Ok(vec![
        check(
            "Thm2d-power",
            plain,
            format!("I^k, k = 2, 3, over {} corpus ideals", corpus.len()),
        ),
        check(
            "Thm2d-saturated",
            sat,
            format!("saturated powers, {vacuous} equal to S skipped"),
        ),
    ])
}

fn closure_operations(sg: &[&CorpusEntry]) -> Result<Vec<Check>> {
    let (mut meet, mut prod, mut pairs) = (true, true, 0);
    for (a, x) in sg.iter().enumerate() {
        for y in &sg[a..] {
            if x.ideal.ring() != y.ideal.ring() {
                continue;
            }
            pairs += 1;
            meet &= strongly_golod(&x.ideal.intersect(&y.ideal)?)?.verdict;
            prod &= strongly_golod(&x.ideal.product(&y.ideal)?)?.verdict;
        }
    }
    let (mut sums, mut sum_ok) = (0, true);
    for (a, x) in sg.iter().enumerate() {
        for y in &sg[a..] {
            if x.ideal.ring() != y.ideal.ring() {
                continue;
            }
            let s = x.ideal.sum(&y.ideal)?;
            if s.is_unit() {
                continue;
            }
            let dd = derivative_ideal(&x.ideal)?.product(&derivative_ideal(&y.ideal)?)?;
            if s.contains(&dd)? {
                sums += 1;
                sum_ok &= strongly_golod(&s)?.verdict;
            }
        }
    }
    let (mut colons, mut colon_ok) = (0, true);
    for x in sg {
        let ring = x.ideal.ring();
        let mut js = vec![Ideal::maximal(ring)];
        js.extend(
            (0..ring.nvars()).map(|v| Ideal::new(ring, vec![Polynomial::var(ring, v)]).unwrap()),
        );
        for j in &js {
            if check_colon_condition(&x.ideal, j)? {
                let c = x.ideal.colon(j)?;
                if !c.is_unit() {
                    colons += 1;
                    colon_ok &= strongly_golod(&c)?.verdict;
                }
            }
        }
    }
    Ok(vec![
        check("Thm2a-intersection", meet, format!("{pairs} pairs")),
        check("Thm2a-product", prod, format!("{pairs} pairs")),
        check(
            "Thm2b-sum",
            sum_ok,
            format!("{sums} pairs with ∂(I)∂(J) ⊆ I + J"),
        ),
        check(
            "Thm2c-colon",
            colon_ok,
            format!("{colons} colons by m or a variable"),
        ),
    ])
}

fn variable_primes(m: &MonomialIdeal) -> Vec<Vec<usize>> {
    let n = m.ring().nvars();
    (1u64..1 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|p| MonomialIdeal::prime(m.ring(), p).is_ok_and(|q| q.contains(m)))
        .collect()
}

fn prime_sums(sg: &[&CorpusEntry]) -> Result<Vec<Check>> {
    let (mut mm, mut zn, mut sums, mut cases) = (true, true, true, 0);
    for e in sg {
        let Ok(m) = MonomialIdeal::from_ideal(&e.ideal) else {
            continue;
        };
        let d = derivative_ideal(&e.ideal)?;
        for p in variable_primes(&m) {
            cases += 1;
            let prime = MonomialIdeal::prime(m.ring(), &p)?.to_ideal();
            mm &= prime.contains(&d)?;
            for f in e.ideal.generators() {
                zn &= zariski_nagata_membership(f, &prime, 2)?;
            }
            for k in [2, 3] {
                sums &= strongly_golod(&add_prime_power(&e.ideal, &prime, k)?.ideal)?.verdict;
            }
        }
    }
    Ok(vec![
        check("Cor-mm", mm, format!("∂(I) ⊆ P in {cases} cases")),
        check("Zariski-Nagata", zn, "generators lie in P^(2)"),
        check("Prime-power-sum", sums, "I + P^k strongly Golod, k = 2, 3"),
    ])
}

fn odd_cycles() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in [3, 5, 7] {
        let rep = odd_cycle_suite(n)?;
        out.push(check(
            &format!("C{n}-symbolic-square"),
            rep.symbolic_square_formula,
            format!("I^(2) = I^2 + (x1⋯x{n})"),
        ));
        out.push(check(
            &format!("C{n}-square-in-cube"),
            rep.square_containment,
            "(I^(2))^2 ⊆ I^3",
        ));
    }
    Ok(out)
}

fn degree_gap() -> Result<Check> {
    let rep = degree_gap_check(4, 3)?;
    Ok(check(
        "I43-degree-gap",
        rep.u_in_symbolic_square && !rep.u_squared_in_cube,
        "x1x2x3x4 ∈ I^(2), its square ∉ I^3",
    ))
}

fn inbetween(seed: u64) -> Result<Check> {
    let g = Graph::cycle(5)?;
    let ring = GradingSpec::indexed(5);
    let i = g.vertex_cover_ideal(&ring)?.to_ideal();
    let sym2 = g.cover_symbolic_power(&ring, 2)?.to_ideal();
    let i2 = power(&i, 2)?;
    let mut ok = true;
    for t in 0..10 {
        let j = random_between(&i2, &sym2, seed.wrapping_add(t))?;
        ok &= check_inbetween(&i, &j, 2, &sym2, &i)?.verdict;
    }
    Ok(check(
        "Thm-inbetween",
        ok,
        "ten seeded J with I^2 ⊆ J ⊆ I^(2) for the C5 cover ideal",
    ))
}

fn integral(sg: &[&CorpusEntry]) -> Result<Vec<Check>> {
    let r = GradingSpec::standard(&["x", "y"]);
    let cubes = MonomialIdeal::parse(&r, &["x^3", "y^3"])?;
    let expected = MonomialIdeal::parse(&r, &["x^3", "x^2*y", "x*y^2", "y^3"])?;
    let closure = integral_closure(&cubes)?;
    let mut ok = true;
    let mut count = 0;
    for e in sg {
        let Ok(m) = MonomialIdeal::from_ideal(&e.ideal) else {
            continue;
        };
        count += 1;
        ok &= integral_closure(&m)?.ideal.strongly_golod()?.verdict;
    }
    Ok(vec![
        check(
            "Prop-integral-example",
            closure.ideal == expected,
            "closure of (x^3, y^3)",
        ),
        check("Prop-integral", ok, format!("{count} monomial ideals")),
    ])
}

fn components(sg: &[&CorpusEntry]) -> Result<Check> {
    let (mut ok, mut count) = (true, 0);
    for e in sg {
        let Ok(m) = MonomialIdeal::from_ideal(&e.ideal) else {
            continue;
        };
        let comps = minimal_primary_components(&m)?;
        count += comps.len();
        for c in comps {
            ok &= c.ideal.strongly_golod()?.verdict;
        }
    }
    Ok(check("Cor-components", ok, format!("{count} components")))
}

fn series(corpus: &[CorpusEntry], sg: &[&CorpusEntry]) -> Result<Vec<Check>> {
    let r = GradingSpec::standard(&["x", "y"]);
    let m2 = power(&Ideal::maximal(&r), 2)?;
    let v = golod_verdict(&m2, Some(SeriesBounds { i_max: 4, d_max: 8 }))?;
    let golod = v.status == GolodStatus::Golod
        && v.bound.totals() == [1, 2, 4, 8, 16]
        && v.bound == v.actual;
    let ci = Ideal::parse(&r, &["x^2", "y^2"])?;
    let w = golod_verdict(&ci, Some(SeriesBounds { i_max: 3, d_max: 8 }))?;
    let control = w.status == GolodStatus::NotGolod && w.first_total_discrepancy == Some((3, 5, 4));

    let (mut betti, mut serre) = (true, true);
    for e in corpus {
        let res = minimal_free_resolution(&e.ideal)?;
        betti &= res.betti_table().entries() == &koszul_homology(&e.ideal, None)?.dims();
        let bounds = SeriesBounds { i_max: 3, d_max: 8 };
        let bound = serre_bound_series(&e.ideal, bounds.clone())?.series;
        let actual = actual_poincare(&e.ideal, bounds)?.series;
        serre &= actual
            .coefficients()
            .iter()
            .all(|(&(i, d), &c)| c <= bound.get(i, d));
    }
    let mut trivial = !trivial_multiplication_check(&ci, None)?.verdict;
    for e in sg {
        trivial &= trivial_multiplication_check(&e.ideal, None)?.verdict;
    }
    Ok(vec![
        check(
            "Golod-series",
            golod,
            "(x, y)^2: 1 + 2t + 4t^2 + 8t^3 + 16t^4, both series",
        ),
        check("CI-not-Golod", control, "(x^2, y^2): t^3 bound 5, actual 4"),
        check(
            "Betti-Koszul",
            betti,
            format!("{} corpus ideals", corpus.len()),
        ),
        check("Serre-inequality", serre, "actual ≤ bound on i ≤ 3, d ≤ 8"),
        check(
            "Trivial-multiplication",
            trivial,
            "strongly Golod corpus yes, (x^2, y^2) no",
        ),
    ])
}
