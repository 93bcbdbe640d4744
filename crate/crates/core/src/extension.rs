//! Extensions `0 → A → X → G → 0` built from 2-cocycles, their sections,
//! and the symmetric-section condition `t(g⁻¹) = t(g)⁻¹`.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::abelian::AbElement;
use crate::cochain::{Cochain, CochainSpace};
use crate::cohomology::is_cocycle;
use crate::error::{Error, Result};
use crate::fingroup::FinGroup;
use crate::gmodule::GModule;
use crate::guard;

static SECTION_CAP: AtomicU64 = AtomicU64::new(guard::DEFAULT_SECTION_CAP);

/// Cap on `|A|^|G|`, the number of set-theoretic sections.
pub fn section_cap() -> u64 {
    SECTION_CAP.load(Ordering::Relaxed)
}

pub fn set_section_cap(cap: u64) {
    SECTION_CAP.store(cap, Ordering::Relaxed);
}

/// The group `X = A × G` with `(a,g)(b,h) = (a + g·b + σ(g,h), gh)`.
///
/// Before relabelling, `(a, g)` has index `idx(a)·|G| + g` with `idx` the
/// mixed-radix index of `A`; the identity, found from the table, is then
/// swapped to 0.
#[derive(Clone, Debug)]
pub struct Extension {
    inner: Arc<ExtInner>,
}

#[derive(Debug)]
struct ExtInner {
    x: FinGroup,
    module: GModule,
    cocycle: Cochain,
    i: Vec<usize>,
    pi: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    elements: Vec<AbElement>,
}

impl Extension {
    pub fn group(&self) -> &FinGroup {
        &self.inner.x
    }

    pub fn module(&self) -> &GModule {
        &self.inner.module
    }

    pub fn cocycle(&self) -> &Cochain {
        &self.inner.cocycle
    }

    /// `i : A → X` on mixed-radix element indices of `A`.
    pub fn inclusion(&self) -> &[usize] {
        &self.inner.i
    }

    /// `π : X → G`.
    pub fn projection(&self) -> &[usize] {
        &self.inner.pi
    }

    /// `(a, g)` coordinates of an element of `X`, `a` as an `A`-index.
    pub fn pair(&self, x: usize) -> (usize, usize) {
        self.inner.pairs[x]
    }

    pub fn element_of_pair(&self, a: usize, g: usize) -> usize {
        self.inner.pairs.iter().position(|&p| p == (a, g)).expect("pair is in X")
    }

    /// `i⁻¹(x)` for `x` in the kernel of `π`.
    pub fn preimage(&self, x: usize) -> Option<AbElement> {
        self.inner.i.iter().position(|&y| y == x).map(|a| self.inner.elements[a].clone())
    }

    /// `t(g) = i(0)·(0, g)`, the section through the zero-coordinate elements.
    pub fn standard_section(&self) -> Section {
        let g = self.inner.module.group();
        let t = g.elements().map(|h| self.element_of_pair(0, h)).collect();
        Section { ext: self.clone(), t }
    }

    /// The section through `(a, g)` with `a = -σ(e, e)`, which maps `e` to the identity.
    pub fn normalized_section(&self) -> Section {
        let id_a = self.inner.pairs[0].0;
        let g = self.inner.module.group();
        let t = g.elements().map(|h| self.element_of_pair(id_a, h)).collect();
        Section { ext: self.clone(), t }
    }

    pub fn section(&self, t: Vec<usize>) -> Result<Section> {
        let g = self.inner.module.group();
        if t.len() != g.order() || t.iter().enumerate().any(|(h, &x)| x >= self.inner.x.order() || self.inner.pi[x] != h) {
            return Err(Error::InvalidArgument("π∘t is not the identity".into()));
        }
        Ok(Section { ext: self.clone(), t })
    }
}

/// A set map `t : G → X` with `π∘t = id`.
#[derive(Clone, Debug)]
pub struct Section {
    ext: Extension,
    t: Vec<usize>,
}

impl Section {
    pub fn extension(&self) -> &Extension {
        &self.ext
    }

    pub fn map(&self) -> &[usize] {
        &self.t
    }

    pub fn to_json(&self) -> serde_json::Value {
        let pairs: Vec<serde_json::Value> = self
            .t
            .iter()
            .map(|&x| {
                let (a, g) = self.ext.pair(x);
                let coords: Vec<serde_json::Value> =
                    self.ext.inner.elements[a].coords().iter().map(crate::abelian::int_to_json).collect();
                serde_json::json!({ "a": coords, "g": g })
            })
            .collect();
        serde_json::Value::Array(pairs)
    }
}

/// Builds `X` from a 2-cocycle with finite coefficients.
pub fn extension_from_cocycle(sigma: &Cochain) -> Result<Extension> {
    if sigma.degree() != 2 {
        return Err(Error::InvalidArgument(format!("a degree-2 cochain is required, got degree {}", sigma.degree())));
    }
    let module = sigma.space().module().clone();
    let base = module.base().clone();
    let order_a = base.order().ok_or(Error::InfiniteBase)?;
    let grp = module.group().clone();
    let na = order_a.to_string().parse::<u128>().unwrap_or(u128::MAX);
    let total = na.saturating_mul(grp.order() as u128);
    if total > crate::fingroup::MAX_ORDER as u128 {
        return Err(Error::ResourceGuard { what: "extension order".into(), requested: total, cap: crate::fingroup::MAX_ORDER as u128 });
    }
    if !is_cocycle(sigma)? {
        return Err(Error::NotACocycle);
    }
    let na = na as usize;
    let ng = grp.order();
    let elements = base.elements()?;
    let add: Vec<Vec<usize>> = elements.iter().map(|a| elements.iter().map(|b| base.element_index(&a.add(b))).collect()).collect();
    let act: Vec<Vec<usize>> =
        grp.elements().map(|g| elements.iter().map(|b| base.element_index(&module.act(g, b))).collect()).collect();
    let sig: Vec<usize> = sigma.space().tuples().map(|t| base.element_index(&sigma.value(&t))).collect();

    let raw_mul = |x: usize, y: usize| {
        let (a, g) = (x / ng, x % ng);
        let (b, h) = (y / ng, y % ng);
        let c = add[add[a][act[g][b]]][sig[g * ng + h]];
        c * ng + grp.mul(g, h)
    };
    // the unique idempotent; it works out to (-σ(e,e), e)
    let id_raw = (0..na * ng).find(|&x| raw_mul(x, x) == x).ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
    let id_a = id_raw / ng;
    let relabel = |x: usize| match x {
        0 => id_raw,
        x if x == id_raw => 0,
        x => x,
    };
    let n = na * ng;
    let table = (0..n).map(|x| (0..n).map(|y| relabel(raw_mul(relabel(x), relabel(y)))).collect()).collect();
    let x = FinGroup::from_table(table, format!("X({}, {})", grp.label(), module.label()))?;
    let pairs: Vec<(usize, usize)> = (0..n).map(|x| (relabel(x) / ng, relabel(x) % ng)).collect();
    let pi = pairs.iter().map(|p| p.1).collect();
    // i(a) = (a - σ(e,e), e)
    let i = (0..na).map(|a| relabel(add[a][id_a] * ng)).collect();
    Ok(Extension { inner: Arc::new(ExtInner { x, module, cocycle: sigma.clone(), i, pi, pairs, elements }) })
}

/// `σ(g,h) = i⁻¹(t(g) t(h) t(gh)⁻¹)`.
pub fn cocycle_from_section(t: &Section) -> Result<Cochain> {
    let ext = &t.ext;
    let x = ext.group();
    let module = ext.module();
    let grp = module.group();
    let space = CochainSpace::new(module, 2)?;
    Cochain::from_fn(&space, |gh| {
        let (g, h) = (gh[0], gh[1]);
        let k = x.mul(x.mul(t.t[g], t.t[h]), x.inv(t.t[grp.mul(g, h)]));
        ext.preimage(k).expect("t(g)t(h)t(gh)⁻¹ lies in the kernel of π")
    })
}

/// `t(g⁻¹) = t(g)⁻¹` for every `g`.
pub fn is_symmetric_section(t: &Section) -> bool {
    let x = t.ext.group();
    let grp = t.ext.module().group();
    grp.elements().all(|g| t.t[grp.inv(g)] == x.inv(t.t[g]))
}

/// Searches all sections for a symmetric one.
///
/// The condition pairs `g` with `g⁻¹`, so the search runs over one element
/// of each pair: a free choice in the fibre over `g` when `g ≠ g⁻¹`, and a
/// choice with `x² = e` when `g` is an involution or the identity. This
/// covers every section; the guard still applies to the full count
/// `|A|^|G|`.
pub fn has_symmetric_section(ext: &Extension) -> Result<(bool, Option<Section>)> {
    let grp = ext.module().group();
    let na = ext.inclusion().len() as u128;
    let requested = guard::saturating_pow(na, grp.order());
    if requested > section_cap() as u128 {
        return Err(Error::EnumerationGuard { requested, cap: section_cap() as u128 });
    }
    let x = ext.group();
    let mut fibres = vec![Vec::new(); grp.order()];
    for y in x.elements() {
        fibres[ext.projection()[y]].push(y);
    }
    let mut t = vec![usize::MAX; grp.order()];
    for g in grp.elements() {
        if t[g] != usize::MAX {
            continue;
        }
        let gi = grp.inv(g);
        if gi == g {
            match fibres[g].iter().find(|&&y| x.mul(y, y) == 0) {
                Some(&y) => t[g] = y,
                None => return Ok((false, None)),
            }
        } else {
            t[g] = fibres[g][0];
            t[gi] = x.inv(t[g]);
        }
    }
    let s = Section { ext: ext.clone(), t };
    debug_assert!(is_symmetric_section(&s));
    Ok((true, Some(s)))
}

/// `σ(g,h) = -g·σ(g⁻¹, gh)` and `σ(g,h) = -σ(gh, h⁻¹)` for all `g, h`.
pub fn is_symmetric_cocycle(sigma: &Cochain) -> Result<bool> {
    if sigma.degree() != 2 {
        return Err(Error::InvalidArgument("a degree-2 cochain is required".into()));
    }
    let m = sigma.space().module();
    let grp = m.group();
    for g in grp.elements() {
        for h in grp.elements() {
            let v = sigma.value(&[g, h]);
            let gh = grp.mul(g, h);
            let first = m.act(g, &sigma.value(&[grp.inv(g), gh])).neg();
            let second = sigma.value(&[gh, grp.inv(h)]).neg();
            if v != first || v != second {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
