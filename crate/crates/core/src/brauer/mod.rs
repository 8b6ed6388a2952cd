//! Brauer diagrams and the algebra B_n(x).

mod diagram;
mod element;

pub use diagram::{
    double_factorial_odd, enumerate, ideal_basis, Diagram, GenKind, ENUMERATE_MAX, MAX_STRANDS,
};
pub use element::{BrauerElement, Gen};

use serde::Serialize;

use crate::exactla::Field;
use crate::perm::Perm;
use crate::Result;

/// Factorization `d = d1⁻¹ · E_f · σ · d2` with `E_f = e_1 e_3 ⋯ e_{2f-1}`.
///
/// `d1` sends `2i-1, 2i` to the endpoints of the i-th top arc (arcs ordered
/// by their left end) and `2f+1, ..` to the through-strand tops in order;
/// `d2` does the same for the bottom row. `σ` fixes `1..2f` and records how
/// the through strands connect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub f: usize,
    pub d1: Perm,
    pub sigma: Perm,
    pub d2: Perm,
}

impl NormalForm {
    /// Generator letters of `d1⁻¹ E_f σ d2`.
    pub fn word(&self) -> Vec<Gen> {
        let mut w = Gen::word_of_perm(&self.d1.inverse());
        w.extend(Gen::e_f(self.f));
        w.extend(Gen::word_of_perm(&self.sigma));
        w.extend(Gen::word_of_perm(&self.d2));
        w
    }

    /// Multiplies the factors back together as diagrams.
    pub fn recompose(&self) -> Result<(Diagram, usize)> {
        let n = self.d1.n();
        let mut d = Diagram::from_perm(&self.d1.inverse());
        let mut loops = 0;
        let mut step = |next: &Diagram| -> Result<()> {
            let (p, l) = d.compose(next)?;
            d = p;
            loops += l;
            Ok(())
        };
        for k in 0..self.f {
            step(&Diagram::generator(GenKind::E, 2 * k + 1, n)?)?;
        }
        step(&Diagram::from_perm(&self.sigma))?;
        step(&Diagram::from_perm(&self.d2))?;
        Ok((d, loops))
    }
}

fn row_perm(n: usize, arcs: &[(usize, usize)], free: &[usize]) -> Perm {
    let mut images = Vec::with_capacity(n);
    for &(a, b) in arcs {
        images.push(a);
        images.push(b);
    }
    images.extend_from_slice(free);
    Perm::from_images(images).expect("arcs and free vertices partition the row")
}

pub fn normal_form(d: &Diagram) -> NormalForm {
    let n = d.n();
    let top = d.top_arcs();
    let bottom = d.bottom_arcs();
    let f = top.len();
    let through = d.through_strands();
    let top_free: Vec<usize> = through.iter().map(|t| t.0).collect();
    let mut bottom_free: Vec<usize> = through.iter().map(|t| t.1).collect();
    bottom_free.sort_unstable();
    let d1 = row_perm(n, &top, &top_free);
    let d2 = row_perm(n, &bottom, &bottom_free);
    let mut sigma: Vec<usize> = (0..n).collect();
    for (k, &(_, b)) in through.iter().enumerate() {
        let l = bottom_free.binary_search(&b).expect("through strand ends at a free vertex");
        sigma[2 * f + k] = 2 * f + l;
    }
    NormalForm {
        f,
        d1,
        sigma: Perm::from_images(sigma).expect("through strands form a bijection"),
        d2,
    }
}

/// Outcome of one family of defining relations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub family: &'static str,
    pub instances: usize,
    pub failures: usize,
}

impl RelationCheck {
    pub fn pass(&self) -> bool {
        self.failures == 0
    }
}

type Word = Vec<Gen>;

/// Each family maps `(i, j)` to the two sides of an identity, or `None`
/// when the pair is not admissible.
#[allow(clippy::type_complexity)]
fn families(n: usize) -> Vec<(&'static str, Box<dyn Fn(usize, usize) -> Option<Vec<(Word, Word, i64)>>>)> {
    use Gen as G;
    let single = move |i: usize, j: usize| i == j && i < n;
    let adjacent = move |i: usize, j: usize| i == j && i + 1 < n;
    let far = move |i: usize, j: usize| i + 1 < j && j < n;
    vec![
        ("s_i^2 = 1", Box::new(move |i, j| single(i, j).then(|| vec![(vec![G::s(i), G::s(i)], vec![], 0)]))),
        ("e_i^2 = x e_i", Box::new(move |i, j| single(i, j).then(|| vec![(vec![G::e(i), G::e(i)], vec![G::e(i)], 1)]))),
        (
            "e_i s_i = e_i = s_i e_i",
            Box::new(move |i, j| {
                single(i, j).then(|| {
                    vec![(vec![G::e(i), G::s(i)], vec![G::e(i)], 0), (vec![G::s(i), G::e(i)], vec![G::e(i)], 0)]
                })
            }),
        ),
        ("s_i s_j = s_j s_i", Box::new(move |i, j| far(i, j).then(|| vec![(vec![G::s(i), G::s(j)], vec![G::s(j), G::s(i)], 0)]))),
        ("s_i e_j = e_j s_i", Box::new(move |i, j| far(i, j).then(|| vec![(vec![G::s(i), G::e(j)], vec![G::e(j), G::s(i)], 0)]))),
        ("e_i e_j = e_j e_i", Box::new(move |i, j| far(i, j).then(|| vec![(vec![G::e(i), G::e(j)], vec![G::e(j), G::e(i)], 0)]))),
        (
            "s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}",
            Box::new(move |i, j| {
                adjacent(i, j).then(|| vec![(vec![G::s(i), G::s(i + 1), G::s(i)], vec![G::s(i + 1), G::s(i), G::s(i + 1)], 0)])
            }),
        ),
        (
            "e_i e_{i+1} e_i = e_i",
            Box::new(move |i, j| adjacent(i, j).then(|| vec![(vec![G::e(i), G::e(i + 1), G::e(i)], vec![G::e(i)], 0)])),
        ),
        (
            "e_{i+1} e_i e_{i+1} = e_{i+1}",
            Box::new(move |i, j| adjacent(i, j).then(|| vec![(vec![G::e(i + 1), G::e(i), G::e(i + 1)], vec![G::e(i + 1)], 0)])),
        ),
        (
            "s_i e_{i+1} e_i = s_{i+1} e_i",
            Box::new(move |i, j| adjacent(i, j).then(|| vec![(vec![G::s(i), G::e(i + 1), G::e(i)], vec![G::s(i + 1), G::e(i)], 0)])),
        ),
        (
            "e_{i+1} e_i s_{i+1} = e_{i+1} s_i",
            Box::new(move |i, j| adjacent(i, j).then(|| vec![(vec![G::e(i + 1), G::e(i), G::s(i + 1)], vec![G::e(i + 1), G::s(i)], 0)])),
        ),
    ]
}

/// Identities as word pairs `(lhs, rhs, k)` meaning `lhs = x^k · rhs`,
/// grouped by family, for every admissible index choice.
pub fn relation_instances(n: usize) -> Vec<(&'static str, Vec<(Word, Word, u32)>)> {
    families(n)
        .into_iter()
        .map(|(name, fam)| {
            let mut inst = Vec::new();
            for i in 1..n {
                for j in 1..n {
                    if let Some(v) = fam(i, j) {
                        inst.extend(v.into_iter().map(|(l, r, k)| (l, r, k as u32)));
                    }
                }
            }
            (name, inst)
        })
        .collect()
}

/// Evaluates every defining relation of B_n(x) on the diagram basis.
pub fn relations_report<F: Field>(field: F, n: usize, x: F::Elem) -> Result<Vec<RelationCheck>> {
    let mut out = Vec::new();
    for (family, inst) in relation_instances(n) {
        let mut failures = 0;
        for (lhs, rhs, k) in &inst {
            let l = BrauerElement::word(field, n, x.clone(), lhs)?;
            let r = BrauerElement::word(field, n, x.clone(), rhs)?
                .scale(&field.pow(&x, *k as u64));
            if l != r {
                failures += 1;
            }
        }
        out.push(RelationCheck {
            family,
            instances: inst.len(),
            failures,
        });
    }
    Ok(out)
}
