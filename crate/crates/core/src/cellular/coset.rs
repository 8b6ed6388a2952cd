use serde::Serialize;

use crate::perm::Perm;
use crate::{Error, Result};

/// Which coset set a representative belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CosetTag {
    /// D_ν for ν = ((2^f), (n-2f)).
    Dnu { f: usize },
    /// D_f = D_ν ∩ S_{2f}.
    Df { f: usize },
    /// The order-preserving representative d_J of a 2f-subset J.
    DJ { f: usize },
    /// Ψ = S_{(2^f)} ⋊ Π inside S_{2f}.
    Psi { f: usize },
}

/// A permutation certified to satisfy the membership predicate of its tag.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CosetRep {
    perm: Perm,
    tag: CosetTag,
}

impl CosetRep {
    pub fn new(perm: Perm, tag: CosetTag) -> Result<Self> {
        let ok = match tag {
            CosetTag::Dnu { f } => in_dnu(&perm, f),
            CosetTag::Df { f } => in_df(&perm, f),
            CosetTag::DJ { f } => is_dj(&perm, f),
            CosetTag::Psi { f } => in_psi(&perm, f),
        };
        if !ok {
            return Err(Error::Precondition(format!("{perm:?} is not in {tag:?}")));
        }
        Ok(CosetRep { perm, tag })
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }
    pub fn tag(&self) -> CosetTag {
        self.tag
    }
}

/// `t^ν d` is row standard with increasing first column in its first component.
pub fn in_dnu(d: &Perm, f: usize) -> bool {
    let n = d.n();
    if 2 * f > n {
        return false;
    }
    let pairs_ok = (0..f).all(|i| d.apply(2 * i) < d.apply(2 * i + 1));
    let column_ok = (1..f).all(|i| d.apply(2 * i - 2) < d.apply(2 * i));
    let tail_ok = (2 * f..n.saturating_sub(1)).all(|a| d.apply(a) < d.apply(a + 1));
    pairs_ok && column_ok && tail_ok
}

pub fn in_df(d: &Perm, f: usize) -> bool {
    in_dnu(d, f) && d.fixes_beyond(2 * f)
}

/// Maps every pair `{2i-1, 2i}` onto a pair and fixes `2f+1..n`.
pub fn in_psi(p: &Perm, f: usize) -> bool {
    p.fixes_beyond(2 * f) && (0..f).all(|i| p.apply(2 * i) / 2 == p.apply(2 * i + 1) / 2)
}

/// `d` sends `1..2f` increasingly onto some set and the rest increasingly onto the complement.
pub fn is_dj(d: &Perm, f: usize) -> bool {
    let n = d.n();
    2 * f <= n
        && (1..2 * f).all(|a| d.apply(a - 1) < d.apply(a))
        && (2 * f + 1..n).all(|a| d.apply(a - 1) < d.apply(a))
}

fn check_f(n: usize, f: usize) -> Result<()> {
    if 2 * f > n {
        return Err(Error::Precondition(format!("2f = {} exceeds n = {n}", 2 * f)));
    }
    Ok(())
}

/// Perfect matchings of `items` as pair lists, each pair increasing and the
/// pairs ordered by first element.
fn pairings(items: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let a = items[0];
    let mut out = Vec::new();
    for k in 1..items.len() {
        let rest: Vec<usize> = items[1..].iter().copied().filter(|&x| x != items[k]).collect();
        for mut tail in pairings(&rest) {
            tail.insert(0, (a, items[k]));
            out.push(tail);
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for a in start..n {
            if n - a < k - cur.len() {
                break;
            }
            cur.push(a);
            go(a + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All of D_ν for ν = ((2^f), (n-2f)), sorted.
pub fn dnu(n: usize, f: usize) -> Result<Vec<CosetRep>> {
    check_f(n, f)?;
    let mut out = Vec::new();
    for j in subsets(n, 2 * f) {
        let rest: Vec<usize> = (0..n).filter(|a| !j.contains(a)).collect();
        for pairs in pairings(&j) {
            let mut images = Vec::with_capacity(n);
            for (a, b) in pairs {
                images.push(a);
                images.push(b);
            }
            images.extend_from_slice(&rest);
            out.push(Perm::from_images(images)?);
        }
    }
    out.sort();
    out.into_iter().map(|p| CosetRep::new(p, CosetTag::Dnu { f })).collect()
}

/// D_f, as permutations of `{1..n}` fixing `2f+1..n`.
pub fn df(n: usize, f: usize) -> Result<Vec<CosetRep>> {
    check_f(n, f)?;
    dnu(n, f)?
        .into_iter()
        .filter(|d| d.perm.fixes_beyond(2 * f))
        .map(|d| CosetRep::new(d.perm, CosetTag::Df { f }))
        .collect()
}

/// All elements of Ψ inside S_n, sorted.
pub fn psi_group(n: usize, f: usize) -> Result<Vec<CosetRep>> {
    check_f(n, f)?;
    let mut out = Vec::new();
    for rows in Perm::all(f) {
        for flips in 0..(1u32 << f) {
            let mut images: Vec<usize> = (0..n).collect();
            for i in 0..f {
                let target = rows.apply(i);
                let (a, b) = if flips >> i & 1 == 1 { (1, 0) } else { (0, 1) };
                images[2 * i] = 2 * target + a;
                images[2 * i + 1] = 2 * target + b;
            }
            out.push(Perm::from_images(images)?);
        }
    }
    out.sort();
    out.into_iter().map(|p| CosetRep::new(p, CosetTag::Psi { f })).collect()
}

/// Splits `w ∈ S_{2f}` (as a permutation of `{1..n}`) as `w = ψ·d` with
/// `ψ ∈ Ψ` and `d ∈ D_f`.
pub fn factor_psi_d(w: &Perm, f: usize) -> Result<(CosetRep, CosetRep)> {
    let n = w.n();
    check_f(n, f)?;
    if !w.fixes_beyond(2 * f) {
        return Err(Error::Precondition(format!("{w:?} moves points beyond 2f = {}", 2 * f)));
    }
    // rows of t^{ν(1)} w, each sorted, then ordered by first entry
    let mut rows: Vec<(usize, usize)> = (0..f)
        .map(|i| {
            let (a, b) = (w.apply(2 * i), w.apply(2 * i + 1));
            (a.min(b), a.max(b))
        })
        .collect();
    rows.sort_unstable();
    let mut images: Vec<usize> = (0..n).collect();
    for (i, (a, b)) in rows.into_iter().enumerate() {
        images[2 * i] = a;
        images[2 * i + 1] = b;
    }
    let d = Perm::from_images(images)?;
    let psi = w.then(&d.inverse());
    Ok((CosetRep::new(psi, CosetTag::Psi { f })?, CosetRep::new(d, CosetTag::Df { f })?))
}

/// `d_J` for a 2f-subset `J` of zero-based points.
pub fn d_j(n: usize, j: &[usize]) -> Result<CosetRep> {
    let mut sorted = j.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != j.len() || j.len() % 2 != 0 || sorted.last().is_some_and(|&a| a >= n) {
        return Err(Error::Precondition(format!("{j:?} is not an even subset of 0..{n}")));
    }
    let f = j.len() / 2;
    let mut images = sorted.clone();
    images.extend((0..n).filter(|a| sorted.binary_search(a).is_err()));
    CosetRep::new(Perm::from_images(images)?, CosetTag::DJ { f })
}

/// Splits `d ∈ D_ν` as `d = d1·d_J`; returns `d1 ∈ D_f` and the sorted set `J`.
pub fn factor_d1_dj(d: &Perm, f: usize) -> Result<(CosetRep, Vec<usize>)> {
    if !in_dnu(d, f) {
        return Err(Error::Precondition(format!("{d:?} is not in D_nu for f = {f}")));
    }
    let n = d.n();
    let mut j: Vec<usize> = (0..2 * f).map(|a| d.apply(a)).collect();
    j.sort_unstable();
    let dj = d_j(n, &j)?;
    let d1 = d.then(&dj.perm.inverse());
    Ok((CosetRep::new(d1, CosetTag::Df { f })?, j))
}
