//! Acceptance suite: twelve criteria, each printed as one PASS/FAIL line.
//! Exits nonzero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use schurweyl::brauer::{double_factorial_odd, enumerate, relations_report, Diagram};
use schurweyl::cellular::coset::{d_j, df, dnu, factor_d1_dj, factor_psi_d, psi_group};
use schurweyl::cellular::{cell_labels, enyang_basis, expansion_matrix, Partition};
use schurweyl::crystal::{components, inclusion_check, j_zero, DEFAULT_MAX_WORDS};
use schurweyl::exactla::{rank, Field, FieldSpec, SpanBasis};
use schurweyl::hyperalgebra::{
    alpha, bimodule_check, brauer_commutant, hyperalgebra_image, phi_kernel, phi_span, sp_commutant, DEFAULT_MAX_DIM,
};
use schurweyl::perm::Perm;
use schurweyl::schur::symplectic_schur_basis;
use schurweyl::tensor::{phi, restriction_check, weight_component_check};
use schurweyl::with_field;

type Outcome = Result<String, String>;

fn fields(specs: &[&str]) -> Vec<FieldSpec> {
    specs.iter().map(|s| s.parse().expect("valid field")).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn span_equal<F: Field>(a: &SpanBasis<F>, b: &SpanBasis<F>) -> Result<bool, String> {
    let ab = a.contains_span(b).map_err(|e| e.to_string())?;
    let ba = b.contains_span(a).map_err(|e| e.to_string())?;
    Ok(a.len() == b.len() && ab && ba)
}

fn c1_relations() -> Outcome {
    let f = schurweyl::exactla::Rationals;
    let mut instances = 0;
    for n in 2..=4 {
        for x in [-2, -4, -6, 3] {
            let rep = relations_report(f, n, f.from_i64(x)).map_err(|e| e.to_string())?;
            ensure(rep.len() == 11, || format!("{} families at n={n}", rep.len()))?;
            for r in rep {
                ensure(r.pass(), || format!("{} fails {} times at n={n}, x={x}", r.family, r.failures))?;
                instances += r.instances;
            }
        }
    }
    Ok(format!("11 families, {instances} instances over n=2..4, x in {{-2,-4,-6,3}}"))
}

fn c2_counts() -> Outcome {
    let expected = [1usize, 3, 15, 105, 945, 10395];
    for (k, &e) in expected.iter().enumerate() {
        let n = k + 1;
        let all = enumerate(n).map_err(|e| e.to_string())?;
        ensure(all.len() == e, || format!("n={n}: {} diagrams, expected {e}", all.len()))?;
        let distinct: BTreeSet<&Diagram> = all.iter().collect();
        ensure(distinct.len() == e, || format!("n={n}: duplicates"))?;
    }
    Ok("1, 3, 15, 105, 945, 10395".into())
}

fn c3_cellular() -> Outcome {
    let f = schurweyl::exactla::Rationals;
    for n in 1..=4 {
        let total = double_factorial_odd(n) as usize;
        // stratum sizes from explicit coset and tableau counts
        let mut strata: BTreeMap<(usize, Partition), usize> = BTreeMap::new();
        let mut sum = 0usize;
        for fa in 0..=n / 2 {
            let side = dnu(n, fa).map_err(|e| e.to_string())?.len();
            for lambda in Partition::all(n - 2 * fa) {
                let block = lambda.num_standard() as usize * side;
                sum += block * block;
                strata.insert((fa, lambda), block * block);
            }
        }
        ensure(sum == total, || format!("n={n}: stratified count {sum} != {total}"))?;
        let labels: usize = cell_labels(n).iter().map(|(_, _, d)| (d * d) as usize).sum();
        ensure(labels == total, || format!("n={n}: cell dims give {labels}"))?;
        let diagrams = enumerate(n).map_err(|e| e.to_string())?;
        for x in [3, -2, -4, -6] {
            let basis = enyang_basis(f, n, f.from_i64(x)).map_err(|e| e.to_string())?;
            let mut counts: BTreeMap<(usize, Partition), usize> = BTreeMap::new();
            for b in &basis {
                *counts.entry((b.f, b.lambda.clone())).or_default() += 1;
            }
            ensure(counts == strata, || format!("n={n}, x={x}: stratum counts differ"))?;
            let els: Vec<_> = basis.into_iter().map(|b| b.element).collect();
            let r = rank(&expansion_matrix(f, &els, &diagrams).map_err(|e| e.to_string())?);
            ensure(els.len() == total && r == total, || format!("n={n}, x={x}: {} elements, rank {r}", els.len()))?;
        }
    }
    Ok("full rank for n<=4 at x in {3,-2,-4,-6}; strata sum to (2n-1)!!".into())
}

fn c4_bimodule() -> Outcome {
    let mut pairs = 0;
    for spec in fields(&["q", "fp:2", "fp:3"]) {
        for m in 1..=3 {
            for n in 1..=3 {
                let r = with_field!(spec, f => bimodule_check(f, m, n)).map_err(|e| e.to_string())?;
                ensure(r.nonzero == 0, || format!("{} nonzero commutators at m={m}, n={n}, {spec}", r.nonzero))?;
                pairs += r.pairs;
            }
        }
    }
    Ok(format!("{pairs} commutators, all zero"))
}

fn c5_faithful() -> Outcome {
    for spec in fields(&["q", "fp:2"]) {
        for (m, n, e) in [(2, 2, 3), (3, 3, 15)] {
            let r = with_field!(spec, f => phi_span(f, m, n).map(|s| s.len())).map_err(|e| e.to_string())?;
            ensure(r == e && r as u128 == double_factorial_odd(n), || format!("rank {r} at ({m},{n}) {spec}"))?;
        }
    }
    Ok("rank 3 at (2,2), 15 at (3,3) over q and F2".into())
}

fn c6_kernel() -> Outcome {
    for spec in fields(&["q", "fp:2", "fp:3", "fp:5"]) {
        with_field!(spec, f => {
            let a = alpha(f, f.from_i64(-4)).map_err(|e| e.to_string())?;
            ensure(!a.is_zero(), || format!("alpha vanishes over {spec}"))?;
            ensure(phi(&a, 2).map_err(|e| e.to_string())?.is_zero(), || format!("phi(alpha) != 0 over {spec}"))?;
            let r = phi_span(f, 2, 3).map_err(|e| e.to_string())?.len();
            ensure(r == 14, || format!("rank {r} over {spec}"))?;
            let ker = phi_kernel(f, 2, 3).map_err(|e| e.to_string())?;
            ensure(ker.len() == 1, || format!("kernel dim {} over {spec}", ker.len()))?;
            let (d, c) = a.terms().iter().next().expect("alpha is nonzero");
            let k = ker[0].coeff(d);
            let same = !f.is_zero(&k) && ker[0].scale(&f.mul(c, &f.inv(&k).expect("nonzero"))) == a;
            ensure(same, || format!("kernel is not span(alpha) over {spec}"))?;
        });
    }
    Ok("rank 14, kernel = span(alpha) over q, F2, F3, F5".into())
}

fn c7_double_centralizer() -> Outcome {
    // Σ (multiplicity)² over Sp-irreducibles in V^{⊗n}
    let frozen = [((1, 2), 2), ((1, 3), 5), ((2, 2), 3), ((2, 3), 14)];
    for ((m, n), e) in frozen {
        for spec in fields(&["q", "fp:2", "fp:3"]) {
            with_field!(spec, f => {
                let comm = sp_commutant(f, m, n, DEFAULT_MAX_DIM).map_err(|e| e.to_string())?;
                let img = phi_span(f, m, n).map_err(|e| e.to_string())?;
                ensure(comm.len() == e && img.len() == e, || format!("({m},{n}) {spec}: rank {} commutant {}", img.len(), comm.len()))?;
                ensure(span_equal(&comm, &img)?, || format!("({m},{n}) {spec}: spans differ"))?;
            });
        }
    }
    Ok("rank = commutant = 2, 5, 3, 14 at (1,2), (1,3), (2,2), (2,3) over q, F2, F3".into())
}

fn c8_hyperalgebra() -> Outcome {
    let mut dims = Vec::new();
    for (m, n) in [(1, 2), (2, 2), (2, 3)] {
        let mut seen = BTreeSet::new();
        for spec in fields(&["q", "fp:2", "fp:3"]) {
            with_field!(spec, f => {
                let h = hyperalgebra_image(f, m, n, DEFAULT_MAX_DIM).map_err(|e| e.to_string())?;
                let c = brauer_commutant(f, m, n, DEFAULT_MAX_DIM).map_err(|e| e.to_string())?;
                ensure(span_equal(&h, &c)?, || format!("({m},{n}) {spec}: closure {} vs commutant {}", h.len(), c.len()))?;
                seen.insert(h.len());
            });
        }
        ensure(seen.len() == 1, || format!("({m},{n}): dims {seen:?} vary with the field"))?;
        dims.push(format!("({m},{n}):{}", seen.into_iter().next().unwrap()));
    }
    Ok(format!("closure = Brauer commutant, dims {}", dims.join(" ")))
}

/// Σ over irreducible components of (dimension)², read off the crystal.
fn crystal_end_dim(m: usize, n: usize) -> Result<usize, String> {
    let comps = components(m, n, DEFAULT_MAX_WORDS).map_err(|e| e.to_string())?;
    let mut by_weight: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for (hw, size) in comps {
        by_weight.insert(hw.weight(), size);
    }
    Ok(by_weight.values().map(|s| s * s).sum())
}

fn c9_schur() -> Outcome {
    let frozen = [((1, 1), 4), ((1, 2), 10), ((2, 2), 126), ((2, 3), 672)];
    for ((m, n), e) in frozen {
        let oracle = crystal_end_dim(m, n)?;
        ensure(oracle == e, || format!("({m},{n}): crystal oracle {oracle}"))?;
        for spec in fields(&["q", "fp:2", "fp:3"]) {
            with_field!(spec, f => {
                let b = symplectic_schur_basis(f, m, n, DEFAULT_MAX_DIM).map_err(|e| e.to_string())?;
                let img = b.image_span().map_err(|e| e.to_string())?;
                let comm = brauer_commutant(f, m, n, DEFAULT_MAX_DIM).map_err(|e| e.to_string())?;
                ensure(b.coefficients.len() == e, || format!("({m},{n}) {spec}: nullspace dim {}", b.coefficients.len()))?;
                ensure(img.len() == e, || format!("({m},{n}) {spec}: evaluation rank {}", img.len()))?;
                ensure(comm.len() == e && span_equal(&img, &comm)?, || format!("({m},{n}) {spec}: image differs from commutant ({})", comm.len()))?;
            });
        }
    }
    Ok("dims 4, 10, 126, 672 at (1,1), (1,2), (2,2), (2,3) over q, F2, F3".into())
}

fn c10_combinatorics() -> Outcome {
    let f = schurweyl::exactla::Rationals;
    for (m, n, fa) in [(3, 3, 1), (4, 4, 2)] {
        let r = weight_component_check(f, m, n, fa).map_err(|e| e.to_string())?;
        ensure(r.holds && r.orbit_terms == (1 << fa) * (1..=fa).product::<usize>(), || format!("{r:?}"))?;
    }
    let mut checked = 0;
    for n in 0..=5 {
        for fa in 0..=(n / 2).min(2) {
            let err = |e: schurweyl::Error| e.to_string();
            let psi = psi_group(n, fa).map_err(err)?;
            let dfs = df(n, fa).map_err(err)?;
            let mut products = BTreeSet::new();
            for p in &psi {
                for d in &dfs {
                    products.insert(p.perm().then(d.perm()));
                }
            }
            let s2f: BTreeSet<Perm> = Perm::all(n).into_iter().filter(|w| w.fixes_beyond(2 * fa)).collect();
            ensure(products == s2f && psi.len() * dfs.len() == s2f.len(), || format!("Psi x D_f != S_2f at n={n}, f={fa}"))?;
            for w in &s2f {
                let (p, d) = factor_psi_d(w, fa).map_err(err)?;
                ensure(p.perm().then(d.perm()) == *w, || format!("psi d != w for {w:?}"))?;
                checked += 1;
            }
            let reps = dnu(n, fa).map_err(err)?;
            let mut pairs = BTreeSet::new();
            for d in &reps {
                let (d1, j) = factor_d1_dj(d.perm(), fa).map_err(err)?;
                ensure(d1.perm().then(d_j(n, &j).map_err(err)?.perm()) == *d.perm(), || format!("d1 d_J != d for {d:?}"))?;
                pairs.insert((d1.perm().clone(), j));
                checked += 1;
            }
            ensure(pairs.len() == reps.len(), || format!("D_nu factorization not injective at n={n}, f={fa}"))?;
        }
    }
    Ok(format!("weight components at (3,3,1), (4,4,2); {checked} factorizations"))
}

fn c11_restriction() -> Outcome {
    let f = schurweyl::exactla::Rationals;
    let mut total = 0;
    for (m, m0, n) in [(1, 3, 2), (1, 3, 3), (2, 4, 2)] {
        let (count, bad) = restriction_check(f, m, m0, n).map_err(|e| e.to_string())?;
        ensure(bad == 0 && count as u128 == double_factorial_odd(n), || format!("({m},{m0},{n}): {bad} of {count} differ"))?;
        total += count;
    }
    Ok(format!("{total} diagrams agree after projection"))
}

fn c12_crystal() -> Outcome {
    let mut sizes = Vec::new();
    for (m, m0, len) in [(1, 3, 4), (2, 4, 4), (2, 4, 6)] {
        let r = inclusion_check(m, m0, len, DEFAULT_MAX_WORDS).map_err(|e| e.to_string())?;
        ensure(r.holds(), || format!("({m},{m0},{len}): missing {:?}", r.missing))?;
        sizes.push(format!("{}<={}", r.size_small, r.size_big));
    }
    for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let dim = sp_commutant(schurweyl::exactla::Rationals, m, n, DEFAULT_MAX_DIM).map_err(|e| e.to_string())?.len();
        let j0 = j_zero(m, 2 * n, DEFAULT_MAX_WORDS).map_err(|e| e.to_string())?.len();
        ensure(dim == j0, || format!("({m},{n}): |J0| = {j0}, commutant {dim}"))?;
    }
    Ok(format!("inclusions {}; |J0| matches commutant dims", sizes.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("Brauer relations", c1_relations),
        ("diagram counts", c2_counts),
        ("cellular basis", c3_cellular),
        ("bimodule commutation", c4_bimodule),
        ("faithfulness for m >= n", c5_faithful),
        ("kernel at (2,3)", c6_kernel),
        ("double centralizer", c7_double_centralizer),
        ("divided-power closure", c8_hyperalgebra),
        ("symplectic Schur algebra", c9_schur),
        ("coset and weight combinatorics", c10_combinatorics),
        ("restriction compatibility", c11_restriction),
        ("crystal inclusion and dimensions", c12_crystal),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} ({secs:.2}s)", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
