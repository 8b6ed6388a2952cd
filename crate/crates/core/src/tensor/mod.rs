//! Symplectic tensor space V^{⊗n} with the signed right action of B_n(−2m).
//!
//! Vectors are rows and operators act on the right: the matrix of `a` has
//! entry `[p][q]` equal to the coefficient of `v_q` in `v_p · a`. With this
//! convention `φ(ab) = φ(a)·φ(b)`.

mod space;

pub use space::{epsilon, prime, symplectic_length, weight, TensorSpace, TensorVec};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::brauer::{normal_form, BrauerElement, Diagram, Gen, GenKind};
use crate::cellular::psi_group;
use crate::exactla::{ExactMatrix, Field, SparseVec};
use crate::perm::Perm;
use crate::{Error, Result};

fn apply_letter(space: &TensorSpace, row: &BTreeMap<usize, i64>, g: Gen) -> BTreeMap<usize, i64> {
    let mut out = BTreeMap::new();
    for (&idx, &c) in row {
        let images = match g.kind {
            GenKind::S => vec![space.s_image(idx, g.i)],
            GenKind::E => space.e_image(idx, g.i),
        };
        for (k, e) in images {
            let slot = out.entry(k).or_insert(0);
            *slot += c * e;
            if *slot == 0 {
                out.remove(&k);
            }
        }
    }
    out
}

/// Integer rows of the action of a generator word.
pub fn word_rows(space: TensorSpace, word: &[Gen]) -> Result<Vec<SparseVec<i64>>> {
    for g in word {
        space.check_position(g.i)?;
    }
    Ok((0..space.dim())
        .map(|p| {
            let mut row = BTreeMap::from([(p, 1i64)]);
            for g in word {
                row = apply_letter(&space, &row, *g);
            }
            row.into_iter().collect()
        })
        .collect())
}

fn to_field<F: Field>(field: F, cols: usize, rows: Vec<SparseVec<i64>>) -> ExactMatrix<F> {
    let rows = rows
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|(c, v)| (c, field.from_i64(v)))
                .filter(|(_, v)| !field.is_zero(v))
                .collect()
        })
        .collect();
    ExactMatrix::from_sparse_rows(field, cols, rows)
}

/// Matrix of a single generator on V^{⊗n}.
pub fn phi_generator<F: Field>(field: F, m: usize, n: usize, g: Gen) -> Result<ExactMatrix<F>> {
    let space = TensorSpace::new(m, n)?;
    Ok(to_field(field, space.dim(), word_rows(space, &[g])?))
}

/// All generator matrices `s_1..s_{n-1}, e_1..e_{n-1}` in that order.
pub fn phi_generators<F: Field>(field: F, m: usize, n: usize) -> Result<Vec<(Gen, ExactMatrix<F>)>> {
    let gens = (1..n).map(Gen::s).chain((1..n).map(Gen::e));
    gens.map(|g| Ok((g, phi_generator(field, m, n, g)?))).collect()
}

/// Matrix of a diagram, evaluated through its normal-form word.
pub fn phi_diagram<F: Field>(field: F, m: usize, d: &Diagram) -> Result<ExactMatrix<F>> {
    let space = TensorSpace::new(m, d.n())?;
    let word = normal_form(d).word();
    Ok(to_field(field, space.dim(), word_rows(space, &word)?))
}

/// Matrix of an element of B_n(−2m). Fails unless the element's parameter is −2m.
pub fn phi<F: Field>(a: &BrauerElement<F>, m: usize) -> Result<ExactMatrix<F>> {
    let field = a.field();
    if *a.x() != field.from_i64(-2 * m as i64) {
        return Err(Error::Parameter(format!(
            "element has parameter {}, the action needs -2m = {}",
            field.render(a.x()),
            -2 * m as i64
        )));
    }
    let dim = TensorSpace::new(m, a.n())?.dim();
    let mut acc = ExactMatrix::zeros(field, dim, dim);
    for (d, c) in a.terms() {
        acc = acc.add(&phi_diagram(field, m, d)?.scale(c))?;
    }
    Ok(acc)
}

/// `v_i π = (−1)^{ℓ(π)} v_{iπ}` where the letter at position p moves to (p)π.
pub fn permutation_image(space: TensorSpace, idx: usize, p: &Perm) -> (usize, i64) {
    let letters = space.decode(idx);
    let mut out = vec![0; letters.len()];
    for (pos, &l) in letters.iter().enumerate() {
        out[p.apply(pos)] = l;
    }
    (space.encode(&out), p.sign())
}

/// Embeds a letter of alphabet(m) into alphabet(m0): `i ↦ i`, `i' ↦ i'`.
pub fn embed_letter(l: usize, m: usize, m0: usize) -> usize {
    if l <= m {
        l
    } else {
        l + 2 * (m0 - m)
    }
}

/// Inverse of [`embed_letter`]; `None` for the middle letters of alphabet(m0).
pub fn project_letter(l: usize, m0: usize, m: usize) -> Option<usize> {
    if l <= m {
        Some(l)
    } else if l > 2 * m0 - m {
        Some(l - 2 * (m0 - m))
    } else {
        None
    }
}

fn check_ranks(m: usize, m0: usize) -> Result<()> {
    if m == 0 || m > m0 {
        return Err(Error::Precondition(format!("need 1 <= m <= m0, got m = {m}, m0 = {m0}")));
    }
    Ok(())
}

/// Compares `π′(φ̃(d))` with `φ(d)` for every n-diagram; the big side acts
/// with parameter −2m0 and the small side with −2m. Needs `m0 − m` even.
/// Returns the number of diagrams compared and the number that differ.
pub fn restriction_check<F: Field>(field: F, m: usize, m0: usize, n: usize) -> Result<(usize, usize)> {
    check_ranks(m, m0)?;
    if (m0 - m) % 2 != 0 {
        return Err(Error::Precondition(format!("m0 - m = {} is odd", m0 - m)));
    }
    let mut bad = 0;
    let ds = crate::brauer::enumerate(n)?;
    for d in &ds {
        let big = phi_diagram(field, m0, d)?;
        if pi_prime(&big, m0, m, n)? != phi_diagram(field, m, d)? {
            bad += 1;
        }
    }
    Ok((ds.len(), bad))
}

/// Kills tensors containing a letter outside the embedded alphabet and
/// re-indexes the rest into alphabet(m).
pub fn project_pi<F: Field>(v: &TensorVec<F>, m: usize) -> Result<TensorVec<F>> {
    let big = v.space();
    check_ranks(m, big.m)?;
    let small = TensorSpace::new(m, big.n)?;
    let mut out = TensorVec::zero(v.field(), small);
    for (letters, c) in v.terms() {
        let proj: Option<Vec<usize>> = letters.iter().map(|&l| project_letter(l, big.m, m)).collect();
        if let Some(p) = proj {
            out.add_term(small.encode(&p), &c);
        }
    }
    Ok(out)
}

/// Restriction of an operator on the big tensor space to the embedded
/// small one, followed by the projection.
pub fn pi_prime<F: Field>(a: &ExactMatrix<F>, m0: usize, m: usize, n: usize) -> Result<ExactMatrix<F>> {
    check_ranks(m, m0)?;
    let big = TensorSpace::new(m0, n)?;
    let small = TensorSpace::new(m, n)?;
    if a.rows() != big.dim() || a.cols() != big.dim() {
        return Err(Error::Dimension(format!("operator is not on V^(x){n} for m0 = {m0}")));
    }
    let embed = |idx: usize| {
        let l: Vec<usize> = small.decode(idx).into_iter().map(|l| embed_letter(l, m, m0)).collect();
        big.encode(&l)
    };
    let rows = (0..small.dim())
        .map(|p| {
            let mut r: SparseVec<F::Elem> = a
                .row(embed(p))
                .into_iter()
                .filter_map(|(c, v)| {
                    let l: Option<Vec<usize>> =
                        big.decode(c).into_iter().map(|l| project_letter(l, m0, m)).collect();
                    l.map(|l| (small.encode(&l), v))
                })
                .collect();
            r.sort_by_key(|e| e.0);
            r
        })
        .collect();
    Ok(ExactMatrix::from_sparse_rows(a.field(), small.dim(), rows))
}

/// Outcome of comparing the weight component of `v_c E_f` with the signed Ψ-orbit sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightComponentCheck {
    pub m: usize,
    pub n: usize,
    pub f: usize,
    pub component_terms: usize,
    pub orbit_terms: usize,
    pub holds: bool,
}

/// For `c = (1,1',..,f,f')` followed by the tail `(2f+1, .., n)`, compares the
/// component of `v_c E_f` of weight `ĉ = (f+1,(f+1)',..,2f,(2f)')` with
/// `(−1)^f Σ_{ψ∈Ψ} (−1)^{ℓ(ψ)} v_{ĉψ}`. Needs `m ≥ n`.
pub fn weight_component_check<F: Field>(field: F, m: usize, n: usize, f: usize) -> Result<WeightComponentCheck> {
    if 2 * f > n || m < n {
        return Err(Error::Precondition(format!("need 2f <= n <= m, got m={m}, n={n}, f={f}")));
    }
    let space = TensorSpace::new(m, n)?;
    let tail: Vec<usize> = (2 * f + 1..=n).collect();
    let mut c = Vec::new();
    let mut c_hat = Vec::new();
    for i in 1..=f {
        c.extend([i, prime(i, m)]);
        c_hat.extend([f + i, prime(f + i, m)]);
    }
    let mut v = TensorVec::basis(field, m, &[c.clone(), tail.clone()].concat())?;
    for k in 0..f {
        v = v.act_e(2 * k + 1)?;
    }
    let target = weight(&c_hat, m);
    let component = v.filter(|l| weight(&l[..2 * f], m) == target);

    let sign_f = if f % 2 == 0 { 1 } else { -1 };
    let mut expected = TensorVec::zero(field, space);
    for psi in psi_group(2 * f, f)? {
        let p = psi.perm();
        let mut moved = vec![0; 2 * f];
        for (pos, &l) in c_hat.iter().enumerate() {
            moved[p.apply(pos)] = l;
        }
        moved.extend_from_slice(&tail);
        expected.add_term(space.encode(&moved), &field.from_i64(sign_f * p.sign()));
    }
    Ok(WeightComponentCheck {
        m,
        n,
        f,
        component_terms: component.coeffs().len(),
        orbit_terms: expected.coeffs().len(),
        holds: component == expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::{enumerate, ideal_basis};
    use crate::exactla::{PrimeField, Rationals};

    #[test]
    fn phi_is_multiplicative_on_diagrams() {
        let q = Rationals;
        for (m, n) in [(1, 2), (1, 3), (2, 2), (2, 3)] {
            let ds = enumerate(n).unwrap();
            let mats: Vec<_> = ds.iter().map(|d| phi_diagram(q, m, d).unwrap()).collect();
            let x = q.from_i64(-2 * m as i64);
            for (a, ma) in ds.iter().zip(&mats) {
                for (b, mb) in ds.iter().zip(&mats) {
                    let (ab, loops) = a.compose(b).unwrap();
                    let lhs = ma.mul(mb).unwrap();
                    let rhs = phi_diagram(q, m, &ab).unwrap().scale(&q.pow(&x, loops as u64));
                    assert_eq!(lhs, rhs, "m={m} {a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn permutations_act_by_signed_place_permutation() {
        let q = Rationals;
        let space = TensorSpace::new(2, 3).unwrap();
        for p in Perm::all(3) {
            let mat = phi_diagram(q, 2, &Diagram::from_perm(&p)).unwrap();
            for idx in 0..space.dim() {
                let (k, s) = permutation_image(space, idx, &p);
                assert_eq!(mat.row(idx), vec![(k, q.from_i64(s))]);
            }
        }
    }

    #[test]
    fn phi_identity_and_parameter_guard() {
        let q = Rationals;
        let id = BrauerElement::identity(q, 2, q.from_i64(-4));
        assert_eq!(phi(&id, 2).unwrap(), ExactMatrix::identity(q, 16));
        assert!(phi(&id, 1).is_err());
        let f2 = PrimeField::new(2).unwrap();
        let id2 = BrauerElement::identity(f2, 2, f2.from_i64(0));
        assert!(phi(&id2, 1).is_ok());
    }

    #[test]
    fn contraction_keeps_symplectic_length() {
        let q = Rationals;
        let (m, n) = (2, 3);
        let space = TensorSpace::new(m, n).unwrap();
        for d in enumerate(n).unwrap() {
            let mat = phi_diagram(q, m, &d).unwrap();
            let ls: Vec<usize> = (0..space.dim()).map(|i| symplectic_length(&space.decode(i), m)).collect();
            if d.num_top_arcs() == 0 {
                continue;
            }
            for (i, j, _) in mat.triplets() {
                assert_eq!(ls[i], ls[j]);
            }
        }
    }

    #[test]
    fn ideals_annihilate_short_tensors() {
        let q = Rationals;
        for (m, n) in [(1, 3), (2, 3), (2, 4)] {
            let space = TensorSpace::new(m, n).unwrap();
            for f in 1..=n / 2 {
                for d in ideal_basis(n, f).unwrap() {
                    let mat = phi_diagram(q, m, &d).unwrap();
                    for i in 0..space.dim() {
                        if symplectic_length(&space.decode(i), m) < f {
                            assert!(mat.row(i).is_empty());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn permutations_preserve_weight() {
        let q = Rationals;
        let space = TensorSpace::new(2, 3).unwrap();
        for p in Perm::all(3) {
            let mat = phi_diagram(q, 2, &Diagram::from_perm(&p)).unwrap();
            for (i, j, _) in mat.triplets() {
                assert_eq!(weight(&space.decode(i), 2), weight(&space.decode(j), 2));
            }
        }
    }

    #[test]
    fn projection() {
        let q = Rationals;
        let v = TensorVec::basis(q, 2, &[1, 4]).unwrap();
        assert_eq!(project_pi(&v, 1).unwrap(), TensorVec::basis(q, 1, &[1, 2]).unwrap());
        let w = TensorVec::basis(q, 2, &[1, 2]).unwrap();
        assert!(project_pi(&w, 1).unwrap().is_zero());
        assert!(project_pi(&w, 2).is_ok());
        let u = TensorVec::basis(q, 1, &[1, 2]).unwrap();
        assert!(project_pi(&u, 2).is_err());
    }

    #[test]
    fn restriction_commutes_with_rank_change() {
        let q = Rationals;
        for (m, m0, n) in [(1, 3, 2), (1, 1, 2), (2, 4, 2), (1, 3, 3)] {
            assert_eq!(restriction_check(q, m, m0, n).unwrap().1, 0);
        }
        assert!(restriction_check(q, 1, 2, 2).is_err());
    }

    #[test]
    fn weight_component_identity() {
        let q = Rationals;
        let r = weight_component_check(q, 3, 3, 1).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.orbit_terms, 2);
        assert!(weight_component_check(q, 2, 3, 1).is_err());
    }
}
