//! Ordinary and symmetric cohomology with explicit representatives.

use crate::abelian::{homology_subquotient, int_to_json, AbElement, AbGroup, AbHom, Subquotient};
use crate::cochain::{differential, invariant_subspace, Cochain, CochainSpace};
use crate::error::{Error, Result};
use crate::gmodule::GModule;
use crate::linalg::SparseMatrix;

/// `H^n` or `HS^n` with one representative cocycle per invariant factor.
#[derive(Clone, Debug)]
pub struct CohomologyResult {
    pub group_value: AbGroup,
    pub degree: usize,
    pub symmetric: bool,
    pub representatives: Vec<Cochain>,
    space: CochainSpace,
    classes: Subquotient,
    /// Inclusion `CS^n → C^n` for symmetric results.
    incl: Option<AbHom>,
}

impl CohomologyResult {
    pub fn space(&self) -> &CochainSpace {
        &self.space
    }

    /// The class of a cocycle in the invariant-factor coordinates of
    /// `group_value`; `None` if `c` is not a cocycle (or, for `HS^n`, not
    /// a symmetric cocycle).
    pub fn class_of(&self, c: &Cochain) -> Result<Option<AbElement>> {
        if !c.space().same_as(&self.space) {
            return Err(Error::InvalidArgument("cochain has the wrong degree or module".into()));
        }
        let v = c.to_sparse();
        match &self.incl {
            None => Ok(self.classes.coordinates_sparse(&v)),
            Some(incl) => {
                let Some(x) = incl.solver()?.preimage_sparse(&v) else { return Ok(None) };
                Ok(self.classes.coordinates_sparse(&x))
            }
        }
    }

    /// `{degree, symmetric, invariant_factors, representatives?}`.
    pub fn to_json(&self, with_representatives: bool) -> serde_json::Value {
        let mut v = serde_json::json!({
            "degree": self.degree,
            "symmetric": self.symmetric,
            "invariant_factors": self.group_value.factors().iter().map(int_to_json).collect::<Vec<_>>(),
        });
        if with_representatives {
            v["representatives"] = self.representatives.iter().map(|r| r.to_json()["values"].clone()).collect();
        }
        v
    }
}

/// `∂_{n-1}`, or the zero map `0 → C^0` in degree 0.
fn incoming(space: &CochainSpace) -> Result<AbHom> {
    match space.degree() {
        0 => Ok(AbHom::zero(&AbGroup::trivial(), space.space())),
        _ => differential(&space.prev()?),
    }
}

/// `H^n(G, A) = ker ∂_n / im ∂_{n-1}`; degree 0 gives `A^G`.
pub fn cohomology(module: &GModule, n: usize) -> Result<CohomologyResult> {
    let space = CochainSpace::new(module, n)?;
    let classes = homology_subquotient(&incoming(&space)?, &differential(&space)?)?;
    let representatives = classes.lift_vectors().iter().map(|v| Cochain::from_sparse(&space, v)).collect();
    Ok(CohomologyResult {
        group_value: classes.group().clone(),
        degree: n,
        symmetric: false,
        representatives,
        space,
        classes,
        incl: None,
    })
}

/// `HS^n(G, A)`: homology of `CS^{n-1} → CS^n → CS^{n+1}`, computed in the
/// coordinates of the invariant subspaces.
pub fn symmetric_cohomology(module: &GModule, n: usize) -> Result<CohomologyResult> {
    let space = CochainSpace::new(module, n)?;
    let (cs, incl) = invariant_subspace(&space)?;
    let outgoing = differential(&space)?.compose(&incl)?;
    let incoming = match n {
        0 => AbHom::zero(&AbGroup::trivial(), &cs),
        _ => {
            let prev = space.prev()?;
            let (cs_prev, incl_prev) = invariant_subspace(&prev)?;
            let boundary = differential(&prev)?.compose(&incl_prev)?;
            let solver = incl.solver()?;
            let cols = boundary
                .matrix()
                .columns()
                .iter()
                .map(|c| solver.preimage_sparse(c))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::NotWellDefined("the differential leaves the symmetric cochains".into()))?;
            AbHom::from_parts(cs_prev, cs.clone(), SparseMatrix::from_columns(cs.ngens(), &cols))
        }
    };
    let classes = homology_subquotient(&incoming, &outgoing)?;
    let representatives = classes.lift_vectors().iter().map(|v| Cochain::from_sparse(&space, &incl.apply_sparse(v))).collect();
    Ok(CohomologyResult {
        group_value: classes.group().clone(),
        degree: n,
        symmetric: true,
        representatives,
        space,
        classes,
        incl: Some(incl),
    })
}

/// The natural map `HS^n → H^n` with its kernel and image.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub map: AbHom,
    pub kernel: AbGroup,
    pub image: AbGroup,
    pub symmetric: CohomologyResult,
    pub ordinary: CohomologyResult,
}

impl Comparison {
    pub fn is_injective(&self) -> bool {
        self.kernel.is_trivial()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.kernel.is_trivial() && self.image == self.ordinary.group_value
    }
}

/// Sends each `HS^n` representative to its class in `H^n`.
pub fn comparison_map(module: &GModule, n: usize) -> Result<Comparison> {
    let symmetric = symmetric_cohomology(module, n)?;
    let ordinary = cohomology(module, n)?;
    let cols = symmetric
        .representatives
        .iter()
        .map(|r| ordinary.classes.coordinates_sparse(&r.to_sparse()).map(|c| c.to_sparse()))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::NotWellDefined("a symmetric cocycle is not a cocycle".into()))?;
    let matrix = SparseMatrix::from_columns(ordinary.group_value.ngens(), &cols);
    let map = AbHom::new(symmetric.group_value.clone(), ordinary.group_value.clone(), matrix)?;
    let kernel = map.kernel()?.0;
    let image = map.image()?.group().clone();
    Ok(Comparison { map, kernel, image, symmetric, ordinary })
}

pub fn is_cocycle(c: &Cochain) -> Result<bool> {
    let d = differential(c.space())?;
    Ok(d.apply_sparse(&c.to_sparse()).is_zero())
}

/// Whether `c = ∂ψ`, with such a `ψ` when it exists. In degree 0 only the
/// zero cochain is a coboundary and no witness is returned.
pub fn is_coboundary(c: &Cochain) -> Result<(bool, Option<Cochain>)> {
    if c.degree() == 0 {
        return Ok((c.is_zero(), None));
    }
    let prev = c.space().prev()?;
    let solver = differential(&prev)?.solver()?;
    Ok(match solver.preimage_sparse(&c.to_sparse()) {
        Some(psi) => (true, Some(Cochain::from_sparse(&prev, &psi))),
        None => (false, None),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::make_group;
    use crate::gmodule::{sign_module, trivial_module};
    use crate::linalg::Scalar;
    use crate::Int;

    fn trivial(g: &str, a: &[i64]) -> GModule {
        let base = AbGroup::from_orders(&a.iter().map(|&d| Int::from(d)).collect::<Vec<_>>()).unwrap();
        trivial_module(&make_group(g).unwrap(), &base)
    }

    fn grp(f: &[i64]) -> AbGroup {
        AbGroup::from_i64(f).unwrap()
    }

    #[test]
    fn cyclic_values() {
        assert_eq!(cohomology(&trivial("C2", &[0]), 2).unwrap().group_value, grp(&[2]));
        assert_eq!(cohomology(&trivial("C4", &[0]), 2).unwrap().group_value, grp(&[4]));
        assert_eq!(symmetric_cohomology(&trivial("C2", &[0]), 2).unwrap().group_value, grp(&[]));
        assert_eq!(symmetric_cohomology(&trivial("C4", &[0]), 2).unwrap().group_value, grp(&[2]));
        assert_eq!(cohomology(&trivial("C3", &[0]), 1).unwrap().group_value, grp(&[]));
        assert_eq!(cohomology(&trivial("C3", &[0]), 0).unwrap().group_value, grp(&[0]));
    }

    #[test]
    fn trivial_group() {
        for n in 1..=3 {
            assert!(cohomology(&trivial("C1", &[0]), n).unwrap().group_value.is_trivial());
            assert!(symmetric_cohomology(&trivial("C1", &[6]), n).unwrap().group_value.is_trivial());
        }
    }

    #[test]
    fn sign_module_degree_zero_and_two() {
        let m = sign_module(&make_group("C2").unwrap(), 1).unwrap();
        assert!(cohomology(&m, 0).unwrap().group_value.is_trivial());
        assert_eq!(cohomology(&m, 1).unwrap().group_value, grp(&[2]));
        assert!(cohomology(&m, 2).unwrap().group_value.is_trivial());
    }

    #[test]
    fn comparison_examples() {
        let c = comparison_map(&trivial("C2", &[0]), 2).unwrap();
        assert!(c.kernel.is_trivial() && c.image.is_trivial());
        let c = comparison_map(&trivial("C4", &[0]), 2).unwrap();
        assert!(c.kernel.is_trivial());
        assert_eq!(c.image, grp(&[2]));
    }

    #[test]
    fn cocycle_and_coboundary() {
        let m = trivial("C2", &[0]);
        let c2 = CochainSpace::new(&m, 2).unwrap();
        let zero = Cochain::zero(&c2);
        assert!(is_cocycle(&zero).unwrap());
        let (b, w) = is_coboundary(&zero).unwrap();
        assert!(b && w.unwrap().is_zero());
        let one = m.base().element_i64(&[1]).unwrap();
        let sigma = Cochain::indicator(&c2, &[1, 1], &one).unwrap();
        assert!(is_cocycle(&sigma).unwrap());
        assert!(!is_coboundary(&sigma).unwrap().0);
        let twice = sigma.scale(&Int::from(2));
        let (b, w) = is_coboundary(&twice).unwrap();
        assert!(b);
        let c1 = c2.prev().unwrap();
        assert_eq!(w.unwrap().map(&differential(&c1).unwrap(), &c2).unwrap(), twice);
    }

    #[test]
    fn classes_and_json() {
        let h = cohomology(&trivial("C4", &[0]), 2).unwrap();
        let rep = &h.representatives[0];
        let cls = h.class_of(rep).unwrap().unwrap();
        assert_eq!(cls.coords(), &[Int::one()]);
        let v = h.to_json(false);
        assert_eq!(v, serde_json::json!({"degree": 2, "symmetric": false, "invariant_factors": [4]}));
        assert_eq!(h.to_json(true)["representatives"].as_array().unwrap().len(), 1);
    }
}
