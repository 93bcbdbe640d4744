//! Inhomogeneous cochains `C^n(G, A) = {σ : G^n → A}` and their operators.
//!
//! Tuples `(g_1, ..., g_n)` are ranked lexicographically with `g_1` most
//! significant; the value of `σ` at the tuple of rank `t` in factor slot
//! `s` of `A` is coordinate `t*k + s` of the space, `k` being the number
//! of factors of `A`. Degree zero has one (empty) tuple, so `C^0 = A`.

use std::fmt;
use std::sync::Arc;

use crate::abelian::{int_to_json, AbElement, AbGroup, AbHom};
use crate::error::{Error, Result};
use crate::fingroup::FinGroup;
use crate::gmodule::GModule;
use crate::guard;
use crate::linalg::{Scalar, SparseMatrix, SparseVec};
use crate::Int;

#[derive(Clone)]
pub struct CochainSpace {
    inner: Arc<SpaceInner>,
}

struct SpaceInner {
    module: GModule,
    degree: usize,
    ntuples: usize,
    space: AbGroup,
}

impl CochainSpace {
    pub fn new(module: &GModule, degree: usize) -> Result<Self> {
        let order = module.group().order() as u128;
        let ntuples = guard::saturating_pow(order, degree);
        let k = module.base().ngens() as u128;
        guard::check_entries("cochain space", ntuples, k.max(1))?;
        let ntuples = ntuples as usize;
        let space = module.base().power(ntuples);
        Ok(Self { inner: Arc::new(SpaceInner { module: module.clone(), degree, ntuples, space }) })
    }

    pub fn module(&self) -> &GModule {
        &self.inner.module
    }

    pub fn group(&self) -> &FinGroup {
        self.inner.module.group()
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    /// `|G|^n`
    pub fn ntuples(&self) -> usize {
        self.inner.ntuples
    }

    /// Factor slots per tuple.
    pub fn slots(&self) -> usize {
        self.inner.module.base().ngens()
    }

    /// The direct sum of `|G|^n` copies of `A`.
    pub fn space(&self) -> &AbGroup {
        &self.inner.space
    }

    pub fn next(&self) -> Result<Self> {
        Self::new(self.module(), self.degree() + 1)
    }

    pub fn prev(&self) -> Result<Self> {
        match self.degree() {
            0 => Err(Error::InvalidArgument("no cochains in negative degree".into())),
            n => Self::new(self.module(), n - 1),
        }
    }

    pub fn tuple_rank(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.degree());
        let order = self.group().order();
        tuple.iter().fold(0, |acc, &g| acc * order + g)
    }

    pub fn tuple_at(&self, mut rank: usize) -> Vec<usize> {
        let order = self.group().order();
        let mut t = vec![0; self.degree()];
        for g in t.iter_mut().rev() {
            *g = rank % order;
            rank /= order;
        }
        t
    }

    /// All tuples in rank order.
    pub fn tuples(&self) -> Tuples {
        Tuples { order: self.group().order(), current: vec![0; self.degree()], remaining: self.ntuples() }
    }

    pub fn same_as(&self, other: &CochainSpace) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || (self.degree() == other.degree() && self.module() == other.module())
    }
}

impl fmt::Debug for CochainSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C^{}({}, {})", self.degree(), self.group(), self.module().label())
    }
}

/// Iterator over `G^n` in lexicographic order.
pub struct Tuples {
    order: usize,
    current: Vec<usize>,
    remaining: usize,
}

impl Iterator for Tuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = self.current.clone();
        for g in self.current.iter_mut().rev() {
            *g += 1;
            if *g < self.order {
                break;
            }
            *g = 0;
        }
        Some(out)
    }
}

/// One summand `coef · act(g) σ(src)` of a pulled-back value.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Term {
    pub coef: i64,
    pub act: Option<usize>,
    pub src: usize,
}

/// Builds the operator `σ ↦ (t ↦ Σ coef·g·σ(src))` from `source` to
/// `target`, with at most `width` terms per target tuple supplied by `terms`.
pub(crate) fn pullback(
    what: &str,
    source: &CochainSpace,
    target: &CochainSpace,
    width: usize,
    mut terms: impl FnMut(&[usize], &mut Vec<Term>),
) -> Result<AbHom> {
    let k = source.slots();
    guard::check_entries(what, (target.ntuples() * k) as u128, (width * k) as u128)?;
    let module = source.module();
    let mut rows = Vec::with_capacity(target.ntuples() * k);
    let mut buf = Vec::new();
    for tuple in target.tuples() {
        buf.clear();
        terms(&tuple, &mut buf);
        for s in 0..k {
            let mut pairs = Vec::with_capacity(buf.len());
            for t in &buf {
                let c = Int::from(t.coef);
                match t.act {
                    None => pairs.push((t.src * k + s, c)),
                    Some(g) => {
                        for (s2, v) in module.action(g).matrix().row(s).iter() {
                            pairs.push((t.src * k + s2, v * &c));
                        }
                    }
                }
            }
            rows.push(SparseVec::from_pairs(pairs));
        }
    }
    let matrix = SparseMatrix::from_rows(source.ntuples() * k, rows);
    Ok(AbHom::from_parts(source.space().clone(), target.space().clone(), matrix))
}

pub(crate) fn act_term(module: &GModule, g: usize) -> Option<usize> {
    (!module.is_trivial() && g != 0).then_some(g)
}

/// The face map `d^j : C^n → C^{n+1}`, `0 ≤ j ≤ n+1`.
pub fn face_map(space: &CochainSpace, j: usize) -> Result<AbHom> {
    let n = space.degree();
    if j > n + 1 {
        return Err(Error::InvalidArgument(format!("face index {j} out of range 0..={}", n + 1)));
    }
    let target = space.next()?;
    let grp = space.group().clone();
    let module = space.module().clone();
    let mut scratch = Vec::with_capacity(n);
    pullback("face map", space, &target, 1, |t, out| {
        let (src, act) = face_source(&grp, &module, t, j, &mut scratch);
        out.push(Term { coef: 1, act, src: rank_of(&grp, src) });
    })
}

/// Arguments of `σ` (and the acting element) for `d^j σ` at `t`.
fn face_source<'a>(grp: &FinGroup, module: &GModule, t: &[usize], j: usize, scratch: &'a mut Vec<usize>) -> (&'a [usize], Option<usize>) {
    let n1 = t.len();
    scratch.clear();
    if j == 0 {
        scratch.extend_from_slice(&t[1..]);
        return (scratch, act_term(module, t[0]));
    }
    if j == n1 {
        scratch.extend_from_slice(&t[..n1 - 1]);
        return (scratch, None);
    }
    scratch.extend_from_slice(&t[..j - 1]);
    scratch.push(grp.mul(t[j - 1], t[j]));
    scratch.extend_from_slice(&t[j + 1..]);
    (scratch, None)
}

pub(crate) fn rank_of(grp: &FinGroup, tuple: &[usize]) -> usize {
    let order = grp.order();
    tuple.iter().fold(0, |acc, &g| acc * order + g)
}

/// `∂_n = Σ_j (-1)^j d^j`.
pub fn differential(space: &CochainSpace) -> Result<AbHom> {
    let n = space.degree();
    let target = space.next()?;
    let grp = space.group().clone();
    let module = space.module().clone();
    let mut scratch = Vec::with_capacity(n);
    pullback("differential", space, &target, n + 2, |t, out| {
        for j in 0..=n + 1 {
            let (src, act) = face_source(&grp, &module, t, j, &mut scratch);
            let coef = if j % 2 == 0 { 1 } else { -1 };
            out.push(Term { coef, act, src: rank_of(&grp, src) });
        }
    })
}

/// `τ_i` on `C^n`, `1 ≤ i ≤ n`:
///
/// * `(τ_1 σ)(g) = -g_1 σ(g_1^{-1}, g_1 g_2, g_3, ...)`
/// * `(τ_i σ)(g) = -σ(..., g_{i-1} g_i, g_i^{-1}, g_i g_{i+1}, ...)` for `i ≥ 2`,
///
/// where the last product is absent when `i = n`.
pub fn transposition_action(space: &CochainSpace, i: usize) -> Result<AbHom> {
    let n = space.degree();
    if i == 0 || i > n {
        return Err(Error::InvalidArgument(format!("transposition index {i} out of range 1..={n}")));
    }
    let grp = space.group().clone();
    let module = space.module().clone();
    let mut h = vec![0; n];
    pullback("transposition", space, space, 1, |t, out| {
        h.copy_from_slice(t);
        let gi = t[i - 1];
        h[i - 1] = grp.inv(gi);
        if i >= 2 {
            h[i - 2] = grp.mul(t[i - 2], gi);
        }
        if i < n {
            h[i] = grp.mul(gi, t[i]);
        }
        let act = if i == 1 { act_term(&module, gi) } else { None };
        out.push(Term { coef: -1, act, src: rank_of(&grp, &h) });
    })
}

/// `τ_1, ..., τ_n` on `C^n`.
pub fn transpositions(space: &CochainSpace) -> Result<Vec<AbHom>> {
    (1..=space.degree()).map(|i| transposition_action(space, i)).collect()
}

/// `CS^n`: the cochains fixed by every `τ_i`, with its inclusion.
pub fn invariant_subspace(space: &CochainSpace) -> Result<(AbGroup, AbHom)> {
    if space.degree() == 0 {
        let c0 = space.space().clone();
        return Ok((c0.clone(), AbHom::identity(&c0)));
    }
    let id = AbHom::identity(space.space());
    let conditions = transpositions(space)?.iter().map(|t| t.sub(&id)).collect::<Result<Vec<_>>>()?;
    AbHom::stack(&conditions)?.kernel()
}

/// An element of `C^n(G, A)`.
#[derive(Clone)]
pub struct Cochain {
    space: CochainSpace,
    values: AbElement,
}

impl Cochain {
    pub fn zero(space: &CochainSpace) -> Self {
        Self { space: space.clone(), values: space.space().zero() }
    }

    pub fn from_element(space: &CochainSpace, values: AbElement) -> Result<Self> {
        if values.group() != space.space() {
            return Err(Error::InvalidArgument("element is not in the cochain space".into()));
        }
        Ok(Self { space: space.clone(), values })
    }

    pub(crate) fn from_sparse(space: &CochainSpace, v: &SparseVec<Int>) -> Self {
        Self { space: space.clone(), values: space.space().element_from_sparse(v) }
    }

    /// The cochain `t ↦ f(t)`.
    pub fn from_fn(space: &CochainSpace, mut f: impl FnMut(&[usize]) -> AbElement) -> Result<Self> {
        let mut coords = Vec::with_capacity(space.space().ngens());
        for t in space.tuples() {
            let a = f(&t);
            if a.group() != space.module().base() {
                return Err(Error::InvalidArgument("value outside the coefficient group".into()));
            }
            coords.extend_from_slice(a.coords());
        }
        Ok(Self { space: space.clone(), values: space.space().element(coords)? })
    }

    /// `a` at `tuple`, zero elsewhere.
    pub fn indicator(space: &CochainSpace, tuple: &[usize], a: &AbElement) -> Result<Self> {
        let r = space.tuple_rank(tuple);
        Self::from_fn(space, |t| if space.tuple_rank(t) == r { a.clone() } else { space.module().base().zero() })
    }

    pub fn space(&self) -> &CochainSpace {
        &self.space
    }

    pub fn degree(&self) -> usize {
        self.space.degree()
    }

    pub fn values(&self) -> &AbElement {
        &self.values
    }

    pub fn to_sparse(&self) -> SparseVec<Int> {
        self.values.to_sparse()
    }

    pub fn value(&self, tuple: &[usize]) -> AbElement {
        self.value_at_rank(self.space.tuple_rank(tuple))
    }

    pub fn value_at_rank(&self, rank: usize) -> AbElement {
        let k = self.space.slots();
        let coords = self.values.coords()[rank * k..(rank + 1) * k].to_vec();
        self.space.module().base().element(coords).expect("slot count matches")
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }

    fn check_same(&self, other: &Cochain) {
        assert!(self.space.same_as(&other.space), "cochains live in different spaces");
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        self.check_same(other);
        Self { space: self.space.clone(), values: self.values.add(&other.values) }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.check_same(other);
        Self { space: self.space.clone(), values: self.values.sub(&other.values) }
    }

    pub fn neg(&self) -> Cochain {
        Self { space: self.space.clone(), values: self.values.neg() }
    }

    pub fn scale(&self, k: &Int) -> Cochain {
        Self { space: self.space.clone(), values: self.values.scale(k) }
    }

    /// Applies an operator whose target is `target`.
    pub fn map(&self, op: &AbHom, target: &CochainSpace) -> Result<Cochain> {
        if op.source() != self.space.space() || op.target() != target.space() {
            return Err(Error::InvalidArgument("operator does not match the cochain spaces".into()));
        }
        Ok(Self { space: target.clone(), values: op.apply(&self.values) })
    }

    /// `{degree, values}` with one coordinate list per tuple, in rank order.
    pub fn to_json(&self) -> serde_json::Value {
        let k = self.space.slots();
        let values: Vec<serde_json::Value> =
            self.values.coords().chunks(k.max(1)).take(self.space.ntuples()).map(|c| c.iter().map(int_to_json).collect()).collect();
        serde_json::json!({ "degree": self.degree(), "values": if k == 0 { vec![serde_json::json!([]); self.space.ntuples()] } else { values } })
    }
}

impl PartialEq for Cochain {
    fn eq(&self, other: &Self) -> bool {
        self.space.same_as(&other.space) && self.values == other.values
    }
}

impl Eq for Cochain {}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cochain(deg {}, ", self.degree())?;
        let k = self.space.slots();
        let mut first = true;
        for (r, t) in self.space.tuples().enumerate() {
            let c = &self.values.coords()[r * k..(r + 1) * k];
            if c.iter().all(Scalar::is_zero) {
                continue;
            }
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            let c: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "{t:?}: ({})", c.join(","))?;
        }
        write!(f, ")")
    }
}
