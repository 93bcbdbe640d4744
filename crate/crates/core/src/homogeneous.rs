//! The alternative complex `(C^n, ∂̃)`, the change of variables `j_n` and
//! the alternative transposition action.
//!
//! With `j_n` given by `(j σ)(g_1, …, g_n) = σ(g_1, g_1 g_2, …, g_1⋯g_n)`,
//! the identity that holds is `∂_n j_n = j_{n+1} ∂̃_n`: `j` carries the
//! `∂̃` complex onto the standard one. The other composition order fails in
//! general, and [`verify_remark`] reports both.

use crate::abelian::{homology_at, AbGroup, AbHom};
use crate::cochain::{act_term, differential, pullback, rank_of, transposition_action, CochainSpace, Term};
use crate::cohomology::cohomology;
use crate::error::{Error, Result};

/// `(∂̃σ)(g_0, …, g_n) = g_0 σ(g_0⁻¹g_1, …, g_0⁻¹g_n) + Σ_{j=1}^{n+1} (-1)^j σ(g_0, …, ĝ_{j-1}, …, g_n)`.
pub fn alt_differential(space: &CochainSpace) -> Result<AbHom> {
    let n = space.degree();
    let target = space.next()?;
    let grp = space.group().clone();
    let module = space.module().clone();
    let mut h = Vec::with_capacity(n);
    pullback("alternative differential", space, &target, n + 2, |t, out| {
        let g0 = t[0];
        let inv = grp.inv(g0);
        h.clear();
        h.extend(t[1..].iter().map(|&g| grp.mul(inv, g)));
        out.push(Term { coef: 1, act: act_term(&module, g0), src: rank_of(&grp, &h) });
        for j in 1..=n + 1 {
            h.clear();
            h.extend(t.iter().enumerate().filter(|&(k, _)| k != j - 1).map(|(_, &g)| g));
            let coef = if j % 2 == 0 { 1 } else { -1 };
            out.push(Term { coef, act: None, src: rank_of(&grp, &h) });
        }
    })
}

/// `(j σ)(g_1, …, g_n) = σ(g_1, g_1 g_2, …, g_1⋯g_n)`.
pub fn j_map(space: &CochainSpace) -> Result<AbHom> {
    let grp = space.group().clone();
    let mut h = Vec::with_capacity(space.degree());
    pullback("change of variables", space, space, 1, |t, out| {
        h.clear();
        let mut acc = grp.identity();
        for &g in t {
            acc = grp.mul(acc, g);
            h.push(acc);
        }
        out.push(Term { coef: 1, act: None, src: rank_of(&grp, &h) });
    })
}

/// `(j⁻¹ σ)(h_1, …, h_n) = σ(h_1, h_1⁻¹h_2, …, h_{n-1}⁻¹h_n)`.
pub fn j_inverse(space: &CochainSpace) -> Result<AbHom> {
    let grp = space.group().clone();
    let mut g = Vec::with_capacity(space.degree());
    pullback("change of variables", space, space, 1, |t, out| {
        g.clear();
        let mut prev = grp.identity();
        for &h in t {
            g.push(grp.mul(grp.inv(prev), h));
            prev = h;
        }
        out.push(Term { coef: 1, act: None, src: rank_of(&grp, &g) });
    })
}

/// `τ̃_i` on `C^n`:
///
/// * `(τ̃_1 σ)(g) = -g_1 σ(g_1⁻¹, g_1⁻¹g_2, …, g_1⁻¹g_n)`
/// * `(τ̃_i σ)(g) = -σ(…, g_i, g_{i-1}, …)` for `i ≥ 2`.
pub fn alt_transposition_action(space: &CochainSpace, i: usize) -> Result<AbHom> {
    let n = space.degree();
    if i == 0 || i > n {
        return Err(Error::InvalidArgument(format!("transposition index {i} out of range 1..={n}")));
    }
    let grp = space.group().clone();
    let module = space.module().clone();
    let mut h = vec![0; n];
    pullback("alternative transposition", space, space, 1, |t, out| {
        if i == 1 {
            let inv = grp.inv(t[0]);
            h[0] = inv;
            for k in 1..n {
                h[k] = grp.mul(inv, t[k]);
            }
            out.push(Term { coef: -1, act: act_term(&module, t[0]), src: rank_of(&grp, &h) });
        } else {
            h.copy_from_slice(t);
            h.swap(i - 2, i - 1);
            out.push(Term { coef: -1, act: None, src: rank_of(&grp, &h) });
        }
    })
}

/// `τ_i j = j τ̃_i` and its reverse `j τ_i = τ̃_i j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyCheck {
    pub i: usize,
    pub intertwines: bool,
    pub reversed: bool,
}

#[derive(Clone, Debug)]
pub struct RemarkReport {
    pub degree: usize,
    /// `∂_n j_n = j_{n+1} ∂̃_n`.
    pub intertwines: bool,
    /// `j_{n+1} ∂_n = ∂̃_n j_n`, the reverse composition order.
    pub reversed: bool,
    pub invertible: bool,
    /// `∂̃_{n+1} ∂̃_n = 0`.
    pub squares_to_zero: bool,
    pub conjugacy: Vec<ConjugacyCheck>,
    /// Homology of `C^{n-1} → C^n → C^{n+1}` under `∂̃`.
    pub alt_homology: AbGroup,
    pub cohomology: AbGroup,
}

impl RemarkReport {
    pub fn homology_matches(&self) -> bool {
        self.alt_homology == self.cohomology
    }

    /// The asserted checks; conjugacy and the reversed order are informational.
    pub fn holds(&self) -> bool {
        self.intertwines && self.invertible && self.squares_to_zero && self.homology_matches()
    }
}

pub fn verify_remark(space: &CochainSpace) -> Result<RemarkReport> {
    let n = space.degree();
    let upper = space.next()?;
    let d = differential(space)?;
    let dt = alt_differential(space)?;
    let j = j_map(space)?;
    let j_up = j_map(&upper)?;
    let ji = j_inverse(space)?;
    let intertwines = d.compose(&j)? == j_up.compose(&dt)?;
    let reversed = j_up.compose(&d)? == dt.compose(&j)?;
    let id = AbHom::identity(space.space());
    let invertible = j.compose(&ji)? == id && ji.compose(&j)? == id;
    let squares_to_zero = alt_differential(&upper)?.compose(&dt)?.is_zero();
    let mut conjugacy = Vec::new();
    for i in 1..=n {
        let t = transposition_action(space, i)?;
        let tt = alt_transposition_action(space, i)?;
        conjugacy.push(ConjugacyCheck {
            i,
            intertwines: t.compose(&j)? == j.compose(&tt)?,
            reversed: j.compose(&t)? == tt.compose(&j)?,
        });
    }
    let incoming = match n {
        0 => AbHom::zero(&AbGroup::trivial(), space.space()),
        _ => alt_differential(&space.prev()?)?,
    };
    let alt_homology = homology_at(&incoming, &dt)?;
    let cohomology = cohomology(space.module(), n)?.group_value;
    Ok(RemarkReport { degree: n, intertwines, reversed, invertible, squares_to_zero, conjugacy, alt_homology, cohomology })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::Cochain;
    use crate::fingroup::make_group;
    use crate::gmodule::{parse_module, trivial_module};

    fn space(g: &str, m: &str, n: usize) -> CochainSpace {
        let g = make_group(g).unwrap();
        CochainSpace::new(&parse_module(&g, m).unwrap(), n).unwrap()
    }

    #[test]
    fn j_examples() {
        let s1 = space("C3", "trivial:Z", 1);
        assert_eq!(j_map(&s1).unwrap(), AbHom::identity(s1.space()));
        let s2 = space("C2", "trivial:Z", 2);
        let one = s2.module().base().element_i64(&[1]).unwrap();
        let at_x_e = Cochain::indicator(&s2, &[1, 0], &one).unwrap();
        let pulled = at_x_e.map(&j_map(&s2).unwrap(), &s2).unwrap();
        assert_eq!(pulled.value(&[1, 1]), one);
        assert!(pulled.value(&[1, 0]).is_zero());
    }

    #[test]
    fn alternative_operators() {
        let s0 = space("C3", "trivial:Z", 0);
        assert!(alt_differential(&s0).unwrap().is_zero());
        let s = space("S3", "trivial:Z/4", 2);
        for i in 1..=2 {
            let t = alt_transposition_action(&s, i).unwrap();
            assert_eq!(t.compose(&t).unwrap(), AbHom::identity(s.space()));
        }
        let z = trivial_module(&make_group("C3").unwrap(), &AbGroup::free(1));
        let s1 = CochainSpace::new(&z, 1).unwrap();
        let one = z.base().element_i64(&[1]).unwrap();
        let psi = Cochain::indicator(&s1, &[1], &one).unwrap();
        let moved = psi.map(&alt_transposition_action(&s1, 1).unwrap(), &s1).unwrap();
        assert_eq!(moved.value(&[2]), one.neg());
        assert!(moved.value(&[1]).is_zero());
    }

    #[test]
    fn remark() {
        for (g, m) in [("C2", "trivial:Z"), ("S3", "trivial:Z/4"), ("C2", "sign:Z"), ("S3", "sign:Z/5")] {
            for n in 0..=2 {
                let r = verify_remark(&space(g, m, n)).unwrap();
                assert!(r.holds(), "{g} {m} {n}: {r:?}");
            }
        }
        let r = verify_remark(&space("C3", "trivial:Z", 2)).unwrap();
        assert!(!r.reversed);
    }
}
