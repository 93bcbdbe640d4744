//! The symmetric-group operators on cochains: permutation actions, norm
//! elements, the exchange relations between `τ_i` and the face maps, and
//! the norm identity `(n+2) ∂_n S_{n+1} = S_{n+2} ∂_n`.

use crate::abelian::AbHom;
use crate::cochain::{differential, face_map, invariant_subspace, transposition_action, transpositions, CochainSpace};
use crate::error::{Error, Result};
use crate::fingroup::permutations;
use crate::gmodule::GModule;
use crate::guard;
use crate::Int;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Which `τ_i` to use. `SignFlipped` replaces every `τ_i` by `-τ_i` and
/// exists as a negative control.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TauVariant {
    #[default]
    Standard,
    SignFlipped,
}

impl TauVariant {
    pub fn tau(self, space: &CochainSpace, i: usize) -> Result<AbHom> {
        let t = transposition_action(space, i)?;
        Ok(match self {
            TauVariant::Standard => t,
            TauVariant::SignFlipped => t.neg(),
        })
    }
}

/// Writes a permutation (0-based one-line notation) as a product of adjacent
/// transpositions: `p = s_{w[k-1]} ⋯ s_{w[0]}` with `s_i = (i, i+1)`, 1-based.
pub fn reduced_word(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut word = Vec::new();
    while let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
        p.swap(i, i + 1);
        word.push(i + 1);
    }
    word
}

fn check_perm(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; perm.len()];
    if perm.len() != n + 1 || perm.iter().any(|&x| x > n || std::mem::replace(&mut seen[x], true)) {
        return Err(Error::InvalidArgument(format!("not a permutation of {} symbols: {perm:?}", n + 1)));
    }
    Ok(())
}

/// The action of a permutation of the `n+1` symbols on `C^n`.
pub fn permutation_action(space: &CochainSpace, perm: &[usize]) -> Result<AbHom> {
    check_perm(perm, space.degree())?;
    let mut acc = AbHom::identity(space.space());
    for i in reduced_word(perm) {
        acc = transposition_action(space, i)?.compose(&acc)?;
    }
    Ok(acc)
}

/// `S(lo:hi)` on `C^n`: the sum of the actions of all permutations of the
/// symbols `lo..=hi` (1-based, `hi ≤ n+1`).
#[derive(Clone, Debug)]
pub struct NormOperator {
    pub degree: usize,
    pub range: (usize, usize),
    pub matrix: AbHom,
}

fn check_window(space: &CochainSpace, (lo, hi): (usize, usize)) -> Result<()> {
    if lo == 0 || lo > hi || hi > space.degree() + 1 {
        return Err(Error::InvalidArgument(format!(
            "window ({lo}, {hi}) outside the symbols 1..={}",
            space.degree() + 1
        )));
    }
    let perms = (1..=(hi - lo + 1) as u128).product::<u128>();
    guard::check_entries("norm operator", (space.ntuples() * space.slots()) as u128, perms * space.slots() as u128)
}

/// Built by the coset factorization
/// `S(lo:hi) = (1 + τ_lo + τ_{lo+1}τ_lo + ⋯ + τ_{hi-1}⋯τ_lo) S(lo+1:hi)`.
pub fn norm_operator(space: &CochainSpace, window: (usize, usize)) -> Result<NormOperator> {
    check_window(space, window)?;
    let (lo, hi) = window;
    let taus = (lo..hi).map(|i| transposition_action(space, i)).collect::<Result<Vec<_>>>()?;
    let id = AbHom::identity(space.space());
    let mut s = id.clone();
    for a in (lo..hi).rev() {
        // coset sum for the symbol a over S(a+1:hi)
        let mut chain = id.clone();
        let mut coset = id.clone();
        for m in a..hi {
            chain = taus[m - lo].compose(&chain)?;
            coset = coset.add(&chain)?;
        }
        s = coset.compose(&s)?;
    }
    Ok(NormOperator { degree: space.degree(), range: window, matrix: s })
}

/// The same operator as a sum over every permutation of the window.
pub fn norm_operator_brute_force(space: &CochainSpace, window: (usize, usize)) -> Result<NormOperator> {
    check_window(space, window)?;
    let (lo, hi) = window;
    let n = space.degree();
    let mut s = AbHom::zero(space.space(), space.space());
    for p in permutations(hi - lo + 1) {
        let mut full: Vec<usize> = (0..=n).collect();
        for (k, &x) in p.iter().enumerate() {
            full[lo - 1 + k] = lo - 1 + x;
        }
        s = s.add(&permutation_action(space, &full)?)?;
    }
    Ok(NormOperator { degree: n, range: window, matrix: s })
}

/// `S_{n+1} = S(1:n+1)` on `C^n`.
pub fn full_norm(space: &CochainSpace) -> Result<NormOperator> {
    norm_operator(space, (1, space.degree() + 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RelationFamily {
    /// `τ_i d^j = d^j τ_i` for `i < j`.
    Commute,
    /// `τ_i d^j = d^j τ_{i-1}` for `j + 2 ≤ i`.
    Shift,
    /// `τ_i d^{i-1} = -d^i`.
    Lower,
    /// `τ_i d^i = -d^{i-1}`.
    Upper,
}

impl RelationFamily {
    pub fn describe(self) -> &'static str {
        match self {
            RelationFamily::Commute => "tau_i d^j = d^j tau_i (i<j)",
            RelationFamily::Shift => "tau_i d^j = d^j tau_(i-1) (j+2<=i)",
            RelationFamily::Lower => "tau_i d^(i-1) = -d^i",
            RelationFamily::Upper => "tau_i d^i = -d^(i-1)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub family: RelationFamily,
    pub i: usize,
    pub j: usize,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct ExchangeReport {
    pub degree: usize,
    pub checks: Vec<RelationCheck>,
}

impl ExchangeReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn violations(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

/// Checks the exchange relations as identities `C^n → C^{n+1}`, with the
/// left `τ_i` acting on `C^{n+1}` and the right one on `C^n`.
pub fn verify_exchange_relations(space: &CochainSpace, variant: TauVariant) -> Result<ExchangeReport> {
    let n = space.degree();
    let upper = space.next()?;
    let faces = (0..=n + 1).map(|j| face_map(space, j)).collect::<Result<Vec<_>>>()?;
    let tau_up = (1..=n + 1).map(|i| variant.tau(&upper, i)).collect::<Result<Vec<_>>>()?;
    let tau_down = (1..=n).map(|i| variant.tau(space, i)).collect::<Result<Vec<_>>>()?;
    let mut checks = Vec::new();
    for i in 1..=n + 1 {
        for j in 0..=n + 1 {
            let lhs = tau_up[i - 1].compose(&faces[j])?;
            let (family, rhs) = if i < j {
                (RelationFamily::Commute, faces[j].compose(&tau_down[i - 1])?)
            } else if j + 2 <= i {
                (RelationFamily::Shift, faces[j].compose(&tau_down[i - 2])?)
            } else if j + 1 == i {
                (RelationFamily::Lower, faces[i].neg())
            } else {
                (RelationFamily::Upper, faces[i - 1].neg())
            };
            checks.push(RelationCheck { family, i, j, holds: lhs == rhs });
        }
    }
    Ok(ExchangeReport { degree: n, checks })
}

/// One instance of a named operator identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: &'static str,
    pub indices: Vec<usize>,
    pub holds: bool,
}

/// Involution, braid and commutation relations of the `τ_i` on `C^n`,
/// `∂_{n+1} ∂_n = 0`, and closure `∂(CS^n) ⊆ CS^{n+1}`.
pub fn verify_actions(space: &CochainSpace) -> Result<Vec<IdentityCheck>> {
    let n = space.degree();
    let taus = transpositions(space)?;
    let id = AbHom::identity(space.space());
    let mut out = Vec::new();
    for i in 1..=n {
        let t = &taus[i - 1];
        out.push(IdentityCheck { identity: "tau_i tau_i = id", indices: vec![i], holds: t.compose(t)? == id });
        if i < n {
            let u = &taus[i];
            let lhs = t.compose(u)?.compose(t)?;
            let rhs = u.compose(t)?.compose(u)?;
            out.push(IdentityCheck { identity: "tau_i tau_(i+1) tau_i = tau_(i+1) tau_i tau_(i+1)", indices: vec![i, i + 1], holds: lhs == rhs });
        }
        for j in i + 2..=n {
            let u = &taus[j - 1];
            out.push(IdentityCheck { identity: "tau_i tau_j = tau_j tau_i", indices: vec![i, j], holds: t.compose(u)? == u.compose(t)? });
        }
    }
    let upper = space.next()?;
    let d = differential(space)?;
    out.push(IdentityCheck { identity: "d_(n+1) d_n = 0", indices: vec![], holds: differential(&upper)?.compose(&d)?.is_zero() });
    let (_, incl) = invariant_subspace(space)?;
    let image = d.compose(&incl)?;
    let id_up = AbHom::identity(upper.space());
    let mut closed = true;
    for t in transpositions(&upper)? {
        closed &= t.sub(&id_up)?.compose(&image)?.is_zero();
    }
    out.push(IdentityCheck { identity: "d(CS^n) in CS^(n+1)", indices: vec![], holds: closed });
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct NormReport {
    pub degree: usize,
    /// `(n+2) ∂_n S_{n+1} = S_{n+2} ∂_n`.
    pub identity: bool,
    /// `∂_n S_{n+1} = S_{n+2} d^0`.
    pub boundary_link: bool,
    /// `S_{n+2} d^j = (-1)^j S_{n+2} d^0` for `j = 0..=n+1`.
    pub face_links: Vec<bool>,
}

impl NormReport {
    pub fn holds(&self) -> bool {
        self.identity && self.boundary_link && self.face_links.iter().all(|&b| b)
    }
}

pub fn verify_norm_identity(space: &CochainSpace) -> Result<NormReport> {
    let n = space.degree();
    let upper = space.next()?;
    let s_low = full_norm(space)?.matrix;
    let s_up = full_norm(&upper)?.matrix;
    let d = differential(space)?;
    let ds = d.compose(&s_low)?;
    let identity = ds.scale(&Int::from(n + 2)) == s_up.compose(&d)?;
    let sd = (0..=n + 1).map(|j| s_up.compose(&face_map(space, j)?)).collect::<Result<Vec<_>>>()?;
    let boundary_link = ds == sd[0];
    let face_links = sd.iter().enumerate().map(|(j, m)| if j % 2 == 0 { *m == sd[0] } else { *m == sd[0].neg() }).collect();
    Ok(NormReport { degree: n, identity, boundary_link, face_links })
}

fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::one(), |acc, k| acc * Int::from(k))
}

/// Whether multiplication by `n+1` is injective and multiplication by `n!`
/// is bijective on the base group of `module`.
pub fn injectivity_predicate(module: &GModule, n: usize) -> bool {
    let a = Int::from(n + 1);
    let b = factorial(n);
    module.base().factors().iter().all(|d| {
        if d.is_zero() {
            b.is_one()
        } else {
            a.gcd(d).is_one() && b.gcd(d).is_one()
        }
    })
}
