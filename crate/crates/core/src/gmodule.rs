//! G-modules: an abelian group with a G-action by automorphisms.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::abelian::{int_to_json, AbElement, AbGroup, AbHom};
use crate::error::{Error, Result};
use crate::fingroup::FinGroup;
use crate::linalg::Scalar;
use crate::Int;

#[derive(Clone)]
pub struct GModule {
    inner: Arc<Inner>,
}

struct Inner {
    group: FinGroup,
    base: AbGroup,
    action: Vec<AbHom>,
    trivial: bool,
    label: String,
}

impl GModule {
    pub fn group(&self) -> &FinGroup {
        &self.inner.group
    }

    pub fn base(&self) -> &AbGroup {
        &self.inner.base
    }

    /// The automorphism by which `g` acts.
    pub fn action(&self, g: usize) -> &AbHom {
        &self.inner.action[g]
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.trivial
    }

    pub fn label(&self) -> &str {
        &self.inner.label
    }

    pub fn act(&self, g: usize, a: &AbElement) -> AbElement {
        act(self, g, a)
    }

    pub fn with_label(&self, label: impl Into<String>) -> Self {
        Self {
            inner: Arc::new(Inner {
                group: self.inner.group.clone(),
                base: self.inner.base.clone(),
                action: self.inner.action.clone(),
                trivial: self.inner.trivial,
                label: label.into(),
            }),
        }
    }

    /// `{base, matrices}` with one row-major matrix per group element.
    pub fn to_json(&self) -> serde_json::Value {
        let matrices: Vec<serde_json::Value> = self
            .inner
            .action
            .iter()
            .map(|h| h.to_dense().to_rows().iter().map(|r| r.iter().map(int_to_json).collect::<Vec<_>>()).collect())
            .collect();
        serde_json::json!({ "base": self.base(), "matrices": matrices })
    }

    /// Inverse of [`Self::to_json`].
    pub fn from_json(group: &FinGroup, value: &serde_json::Value) -> Result<Self> {
        let file: ModuleFile = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(format!("module JSON: {e}")))?;
        file.build(group)
    }
}

impl fmt::Debug for GModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GModule({} over {}, base {})", self.label(), self.group(), self.base())
    }
}

impl PartialEq for GModule {
    fn eq(&self, other: &Self) -> bool {
        self.group() == other.group() && self.base() == other.base() && self.inner.action == other.inner.action
    }
}

impl Eq for GModule {}

/// `A` with every element acting as the identity.
pub fn trivial_module(group: &FinGroup, base: &AbGroup) -> GModule {
    let id = AbHom::identity(base);
    GModule {
        inner: Arc::new(Inner {
            group: group.clone(),
            base: base.clone(),
            action: vec![id; group.order()],
            trivial: true,
            label: format!("trivial:{}", base_label(base)),
        }),
    }
}

/// A module from one action matrix per group element (rows index the
/// target generators), validated exhaustively.
pub fn module_from_matrices(group: &FinGroup, base: &AbGroup, mats: &[Vec<Vec<Int>>]) -> Result<GModule> {
    if mats.len() != group.order() {
        return Err(Error::InvalidArgument(format!("{} matrices for a group of order {}", mats.len(), group.order())));
    }
    let action = mats.iter().map(|m| AbHom::from_dense(base.clone(), base.clone(), m)).collect::<Result<Vec<_>>>()?;
    from_homs(group, base, action, "custom".into())
}

fn from_homs(group: &FinGroup, base: &AbGroup, action: Vec<AbHom>, label: String) -> Result<GModule> {
    let id = AbHom::identity(base);
    if action[0] != id {
        return Err(Error::NotAHomomorphism("the identity does not act trivially".into()));
    }
    for (g, h) in action.iter().enumerate() {
        if !(h.is_injective()? && h.is_surjective()?) {
            return Err(Error::NotInvertible(format!("element {g} does not act by an automorphism")));
        }
    }
    for g in group.elements() {
        for h in group.elements() {
            if action[g].compose(&action[h])? != action[group.mul(g, h)] {
                return Err(Error::NotAHomomorphism(format!("action({g})∘action({h}) ≠ action({g}·{h})")));
            }
        }
    }
    let trivial = action.iter().all(|h| *h == id);
    Ok(GModule { inner: Arc::new(Inner { group: group.clone(), base: base.clone(), action, trivial, label }) })
}

pub fn act(m: &GModule, g: usize, a: &AbElement) -> AbElement {
    m.action(g).apply(a)
}

/// A homomorphism `G → {±1}`, if one is nontrivial.
///
/// With `Q` the subgroup generated by squares, `G/Q` is an elementary
/// abelian 2-group. The smallest-index element `b` outside `Q` is sent to
/// `-1`, and the kernel is `Q` extended by a complement of `b`.
pub fn sign_character(group: &FinGroup) -> Option<Vec<i64>> {
    let squares: Vec<usize> = group.elements().map(|g| group.mul(g, g)).collect();
    let q = closure(group, &squares);
    let b = group.elements().find(|&g| !q[g])?;
    let mut with_b = closure(group, &[squares.clone(), vec![b]].concat());
    let mut kernel_gens = squares;
    while let Some(c) = group.elements().find(|&g| !with_b[g]) {
        kernel_gens.push(c);
        with_b = closure(group, &[kernel_gens.clone(), vec![b]].concat());
    }
    let kernel = closure(group, &kernel_gens);
    Some(group.elements().map(|g| if kernel[g] { 1 } else { -1 }).collect())
}

fn closure(group: &FinGroup, gens: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; group.order()];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        for &s in gens {
            let y = group.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// `Z^rank` with `g` acting by `χ(g)` for the character of [`sign_character`].
pub fn sign_module(group: &FinGroup, rank: usize) -> Result<GModule> {
    let label = if rank == 1 { "sign:Z".to_string() } else { format!("sign:Z^{rank}") };
    Ok(signed_module(group, &AbGroup::free(rank))?.with_label(label))
}

/// `base` with `g` acting as multiplication by `χ(g) = ±1`.
pub fn signed_module(group: &FinGroup, base: &AbGroup) -> Result<GModule> {
    let chi = sign_character(group).ok_or_else(|| Error::InvalidArgument(format!("{group} has no nontrivial sign character")))?;
    let action = chi.iter().map(|&s| AbHom::multiplication(base, &Int::from(s))).collect();
    from_homs(group, base, action, format!("sign:{base}"))
}

#[derive(Serialize, Deserialize)]
struct ModuleFile {
    base: Vec<i64>,
    matrices: Vec<Vec<Vec<i64>>>,
}

impl ModuleFile {
    fn build(&self, group: &FinGroup) -> Result<GModule> {
        if self.base.iter().any(|&d| d < 0 || d == 1) {
            return Err(Error::Parse("module base factors must be 0 or at least 2".into()));
        }
        let base = AbGroup::diagonal(self.base.iter().map(|&d| Int::from(d)).collect());
        let mats: Vec<Vec<Vec<Int>>> =
            self.matrices.iter().map(|m| m.iter().map(|r| r.iter().map(|&v| Int::from(v)).collect()).collect()).collect();
        if mats.iter().any(|m| m.len() != base.ngens()) {
            return Err(Error::InvalidArgument("action matrix has the wrong number of rows".into()));
        }
        module_from_matrices(group, &base, &mats).map(|m| m.with_label("json"))
    }
}

/// Parses a module spec:
///
/// * `trivial:<summand>(+<summand>)*` with summands `Z`, `Z/<m>`, `Z^<r>`
///   (the `trivial:` prefix may be repeated on each summand);
/// * `sign:<summand>(+<summand>)*`, the same base with `g` acting by `±1`;
/// * `json:<path>` or a path ending in `.json`, holding `{base, matrices}`.
pub fn parse_module(group: &FinGroup, spec: &str) -> Result<GModule> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix("json:") {
        return load_module_file(group, Path::new(path));
    }
    if spec.ends_with(".json") {
        return load_module_file(group, Path::new(spec));
    }
    if let Some(rest) = spec.strip_prefix("sign:") {
        return match rest.trim() {
            "Z" => sign_module(group, 1),
            _ => signed_module(group, &parse_base(rest)?),
        };
    }
    let Some(rest) = spec.strip_prefix("trivial:") else {
        return Err(Error::Parse(format!("unknown module spec {spec:?}")));
    };
    Ok(trivial_module(group, &parse_base(rest)?))
}

fn parse_base(rest: &str) -> Result<AbGroup> {
    let mut orders = Vec::new();
    for part in rest.split('+') {
        let part = part.trim();
        let part = part.strip_prefix("trivial:").unwrap_or(part);
        orders.extend(parse_summand(part)?);
    }
    AbGroup::from_orders(&orders)
}

fn parse_summand(s: &str) -> Result<Vec<Int>> {
    let bad = || Error::Parse(format!("bad module summand {s:?}"));
    if s == "Z" {
        return Ok(vec![Int::zero()]);
    }
    if let Some(r) = s.strip_prefix("Z^") {
        let r: usize = r.parse().map_err(|_| bad())?;
        return Ok(vec![Int::zero(); r]);
    }
    if let Some(m) = s.strip_prefix("Z/") {
        let m: Int = m.parse().map_err(|_| bad())?;
        if m.is_negative() || m.is_zero() {
            return Err(bad());
        }
        return Ok(vec![m]);
    }
    Err(bad())
}

fn load_module_file(group: &FinGroup, path: &Path) -> Result<GModule> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    GModule::from_json(group, &value)
}

fn base_label(base: &AbGroup) -> String {
    if base.is_trivial() {
        return "0".into();
    }
    base.factors().iter().map(|d| if d.is_zero() { "Z".to_string() } else { format!("Z/{d}") }).collect::<Vec<_>>().join("+")
}
