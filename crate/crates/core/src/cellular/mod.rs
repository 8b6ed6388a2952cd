//! Tableaux, the Murphy basis of the symmetric group algebra, coset
//! representatives and the Enyang cellular basis of B_n(x).

pub mod coset;
mod tableau;

pub use coset::{
    d_j, df, dnu, factor_d1_dj, factor_psi_d, in_df, in_dnu, in_psi, is_dj, psi_group, CosetRep,
    CosetTag,
};
pub use tableau::{std_tableaux, Partition, Tableau};

use std::collections::BTreeMap;

use crate::brauer::{BrauerElement, Diagram, GenKind};
use crate::exactla::{ExactMatrix, Field};
use crate::perm::Perm;
use crate::{Error, Result};

/// Row stabilizer of the initial tableau of `shape` on `entries`, inside S_n.
pub fn young_subgroup(shape: &Partition, entries: &[usize], n: usize) -> Result<Vec<Perm>> {
    let init = Tableau::initial(shape, entries)?;
    let mut group = vec![Perm::identity(n)];
    for row in init.rows() {
        let mut next = Vec::new();
        for g in &group {
            for p in Perm::all(row.len()) {
                let mut images = g.images().to_vec();
                for (k, &a) in row.iter().enumerate() {
                    images[a - 1] = row[p.apply(k)] - 1;
                }
                next.push(Perm::from_images(images)?);
            }
        }
        group = next;
    }
    group.sort();
    Ok(group)
}

/// `m_st = d(s)⁻¹ x_λ d(t)` as its (coefficient one) permutations, sorted.
pub fn murphy_element(s: &Tableau, t: &Tableau, n: usize) -> Result<Vec<Perm>> {
    if s.shape() != t.shape() || s.entries() != t.entries() {
        return Err(Error::Parameter("tableaux differ in shape or entries".into()));
    }
    if !s.is_standard() || !t.is_standard() {
        return Err(Error::Precondition("Murphy elements need standard tableaux".into()));
    }
    let ds_inv = s.perm_from_initial(n)?.inverse();
    let dt = t.perm_from_initial(n)?;
    let mut out: Vec<Perm> = young_subgroup(&s.shape(), &s.entries(), n)?
        .iter()
        .map(|w| ds_inv.then(w).then(&dt))
        .collect();
    out.sort();
    Ok(out)
}

/// Dimension of the cell module of B_n(x) labelled by `(f, λ)`, λ ⊢ n − 2f.
pub fn cell_module_dim(n: usize, f: usize, lambda: &Partition) -> Result<u128> {
    if 2 * f > n || lambda.size() != n - 2 * f {
        return Err(Error::Dimension(format!(
            "partition of {} does not fit n = {n}, f = {f}",
            lambda.size()
        )));
    }
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let dnu = fact(n) / ((1u128 << f) * fact(f) * fact(n - 2 * f));
    Ok(dnu * lambda.num_standard())
}

/// All `(f, λ)` labels of cells for B_n with their module dimensions.
pub fn cell_labels(n: usize) -> Vec<(usize, Partition, u128)> {
    let mut out = Vec::new();
    for f in 0..=n / 2 {
        for lambda in Partition::all(n - 2 * f) {
            let dim = cell_module_dim(n, f, &lambda).expect("label fits by construction");
            out.push((f, lambda, dim));
        }
    }
    out
}

/// Largest n for which [`enyang_basis`] runs.
pub const ENYANG_MAX: usize = 5;

/// Basis element `d1⁻¹ E_f m_st d2` together with its indexing data.
#[derive(Debug, Clone)]
pub struct EnyangElement<F: Field> {
    pub f: usize,
    pub lambda: Partition,
    pub s: Tableau,
    pub t: Tableau,
    pub d1: Perm,
    pub d2: Perm,
    pub element: BrauerElement<F>,
}

fn e_f_diagram(n: usize, f: usize) -> Result<Diagram> {
    let mut d = Diagram::identity(n);
    for k in 0..f {
        d = d.compose(&Diagram::generator(GenKind::E, 2 * k + 1, n)?)?.0;
    }
    Ok(d)
}

/// The cellular basis of B_n(x) built from D_ν and Murphy elements.
pub fn enyang_basis<F: Field>(field: F, n: usize, x: F::Elem) -> Result<Vec<EnyangElement<F>>> {
    if n > ENYANG_MAX {
        return Err(Error::Guard(format!("Enyang basis limited to n <= {ENYANG_MAX}")));
    }
    let mut out = Vec::new();
    for f in 0..=n / 2 {
        let ef = e_f_diagram(n, f)?;
        let reps = dnu(n, f)?;
        let entries: Vec<usize> = (2 * f + 1..=n).collect();
        for lambda in Partition::all(n - 2 * f) {
            let tabs = std_tableaux(&lambda, &entries)?;
            for s in &tabs {
                for t in &tabs {
                    let m = murphy_element(s, t, n)?;
                    for d1 in &reps {
                        let left = Diagram::from_perm(&d1.perm().inverse()).compose(&ef)?.0;
                        for d2 in &reps {
                            let mut terms = BTreeMap::new();
                            for w in &m {
                                let w_d2 = Diagram::from_perm(&w.then(d2.perm()));
                                let (d, loops) = left.compose(&w_d2)?;
                                debug_assert_eq!(loops, 0);
                                terms.insert(d, ());
                            }
                            let mut el = BrauerElement::zero(field, n, x.clone());
                            for d in terms.into_keys() {
                                el = el.add(&BrauerElement::from_diagram(field, x.clone(), d))?;
                            }
                            out.push(EnyangElement {
                                f,
                                lambda: lambda.clone(),
                                s: s.clone(),
                                t: t.clone(),
                                d1: d1.perm().clone(),
                                d2: d2.perm().clone(),
                                element: el,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Coefficient matrix of `elements` against the diagram list `basis`.
pub fn expansion_matrix<F: Field>(
    field: F,
    elements: &[BrauerElement<F>],
    basis: &[Diagram],
) -> Result<ExactMatrix<F>> {
    let index: BTreeMap<&Diagram, usize> = basis.iter().enumerate().map(|(k, d)| (d, k)).collect();
    let mut trips = Vec::new();
    for (r, el) in elements.iter().enumerate() {
        for (d, c) in el.terms() {
            let col = *index
                .get(d)
                .ok_or_else(|| Error::Dimension(format!("{d:?} not in the basis")))?;
            trips.push((r, col, c.clone()));
        }
    }
    ExactMatrix::from_triplets(field, elements.len(), basis.len(), trips)
}
