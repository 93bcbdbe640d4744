//! Finitely generated abelian groups, their elements and homomorphisms.
//!
//! A group is presented as `⊕ Z/d_i` with `d_i = 0` for a free summand.
//! Results of kernel, image and homology computations are always in
//! invariant-factor form (`d_1 | d_2 | ...`, zeros last, no ones); direct
//! sums such as cochain spaces keep their diagonal presentation so that
//! coordinates stay meaningful.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::guard;
use crate::linalg::{self, Echelon, Matrix, Scalar, SparseMatrix, SparseVec};
use crate::{Int, IntMatrix};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AbGroup {
    factors: Arc<[Int]>,
}

impl AbGroup {
    /// A group from invariant factors; rejects lists not in canonical form.
    pub fn new(factors: Vec<Int>) -> Result<Self> {
        let g = Self { factors: factors.into() };
        if !g.is_canonical() {
            return Err(Error::InvalidArgument(format!("{:?} is not an invariant factor list", g.factor_strings())));
        }
        Ok(g)
    }

    pub fn from_i64(factors: &[i64]) -> Result<Self> {
        Self::new(factors.iter().map(|&d| Int::from(d)).collect())
    }

    /// The invariant-factor form of `⊕ Z/orders[i]` for arbitrary orders.
    pub fn from_orders(orders: &[Int]) -> Result<Self> {
        if orders.iter().any(Scalar::is_negative) {
            return Err(Error::InvalidArgument("negative cyclic order".into()));
        }
        let n = orders.len();
        let mut m = Matrix::zeros(n, n);
        for (i, d) in orders.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        let factors: Vec<Int> = linalg::smith_normal_form(&m).diagonal().into_iter().filter(|d| !d.is_one()).collect();
        Ok(Self { factors: Arc::from(factors) })
    }

    /// Diagonal presentation `⊕ Z/d_i` kept as given (no reordering).
    pub(crate) fn diagonal(factors: Vec<Int>) -> Self {
        debug_assert!(factors.iter().all(|d| !d.is_one() && !d.is_negative()));
        Self { factors: factors.into() }
    }

    pub fn trivial() -> Self {
        Self::diagonal(Vec::new())
    }

    pub fn free(rank: usize) -> Self {
        Self::diagonal(vec![Int::zero(); rank])
    }

    pub fn cyclic(order: u64) -> Self {
        match order {
            1 => Self::trivial(),
            m => Self::diagonal(vec![Int::from(m)]),
        }
    }

    /// `copies` copies of `self`, in order.
    pub fn power(&self, copies: usize) -> Self {
        let mut f = Vec::with_capacity(self.factors.len() * copies);
        for _ in 0..copies {
            f.extend(self.factors.iter().cloned());
        }
        Self::diagonal(f)
    }

    pub fn factors(&self) -> &[Int] {
        &self.factors
    }

    /// Number of cyclic summands in the presentation.
    pub fn ngens(&self) -> usize {
        self.factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        let f = &self.factors;
        if f.iter().any(|d| d.is_one() || d.is_negative()) {
            return false;
        }
        let first_free = f.iter().position(Scalar::is_zero).unwrap_or(f.len());
        f[first_free..].iter().all(Scalar::is_zero) && f[..first_free].windows(2).all(|w| w[0].divides(&w[1]))
    }

    pub fn canonical(&self) -> Self {
        if self.is_canonical() {
            self.clone()
        } else {
            Self::from_orders(&self.factors).expect("factors are non-negative")
        }
    }

    /// Isomorphism test via invariant factors.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn free_rank(&self) -> usize {
        self.factors.iter().filter(|d| d.is_zero()).count()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank() == 0
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<Int> {
        self.is_finite().then(|| self.factors.iter().fold(Int::one(), |acc, d| acc * d))
    }

    pub fn zero(&self) -> AbElement {
        AbElement { group: self.clone(), coords: vec![Int::zero(); self.ngens()] }
    }

    /// Element with the given coordinates, reduced into canonical range.
    pub fn element(&self, coords: Vec<Int>) -> Result<AbElement> {
        if coords.len() != self.ngens() {
            return Err(Error::InvalidArgument(format!("{} coordinates for a group with {} generators", coords.len(), self.ngens())));
        }
        Ok(AbElement::reduced(self.clone(), coords))
    }

    pub fn element_i64(&self, coords: &[i64]) -> Result<AbElement> {
        self.element(coords.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn generator(&self, i: usize) -> AbElement {
        let mut coords = vec![Int::zero(); self.ngens()];
        coords[i] = Int::one();
        AbElement::reduced(self.clone(), coords)
    }

    pub(crate) fn element_from_sparse(&self, v: &SparseVec<Int>) -> AbElement {
        AbElement::reduced(self.clone(), v.to_dense(self.ngens()))
    }

    /// All elements in mixed-radix order (first coordinate slowest).
    pub fn elements(&self) -> Result<Vec<AbElement>> {
        let order = self.order().ok_or(Error::InfiniteBase)?;
        let n = order.to_i64().filter(|&n| n <= guard::entry_cap() as i64).ok_or_else(|| Error::EnumerationGuard {
            requested: order.to_i64().map_or(u128::MAX, |v| v as u128),
            cap: guard::entry_cap() as u128,
        })? as usize;
        Ok((0..n).map(|idx| self.element_at(idx)).collect())
    }

    /// Inverse of [`Self::element_index`] for finite groups.
    pub fn element_at(&self, mut idx: usize) -> AbElement {
        let mut coords = vec![Int::zero(); self.ngens()];
        for (c, d) in coords.iter_mut().zip(self.factors.iter()).rev() {
            let d = d.to_i64().expect("finite factor fits in i64") as usize;
            *c = Int::from(idx % d);
            idx /= d;
        }
        AbElement { group: self.clone(), coords }
    }

    /// Mixed-radix index of an element of a finite group.
    pub fn element_index(&self, x: &AbElement) -> usize {
        x.coords.iter().zip(self.factors.iter()).fold(0usize, |acc, (c, d)| {
            let d = d.to_i64().expect("finite factor fits in i64") as usize;
            acc * d + c.to_i64().expect("reduced coordinate") as usize
        })
    }

    fn factor_strings(&self) -> Vec<String> {
        self.factors.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|d| if d.is_zero() { "Z".to_string() } else { format!("Z/{d}") })
            .collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

impl fmt::Debug for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbGroup({self})")
    }
}

impl Serialize for AbGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.factors.iter().map(int_to_json))
    }
}

impl<'de> Deserialize<'de> for AbGroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<i64> = Vec::deserialize(d)?;
        AbGroup::from_i64(&raw).map_err(serde::de::Error::custom)
    }
}

/// JSON number when it fits in `i64`, decimal string otherwise.
pub fn int_to_json(x: &Int) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(x.to_string()),
    }
}

/// An element of an [`AbGroup`], torsion coordinates in `[0, d)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AbElement {
    group: AbGroup,
    coords: Vec<Int>,
}

impl AbElement {
    fn reduced(group: AbGroup, mut coords: Vec<Int>) -> Self {
        for (c, d) in coords.iter_mut().zip(group.factors.iter()) {
            *c = c.reduce(d);
        }
        Self { group, coords }
    }

    pub fn group(&self) -> &AbGroup {
        &self.group
    }

    pub fn coords(&self) -> &[Int] {
        &self.coords
    }

    pub fn to_sparse(&self) -> SparseVec<Int> {
        SparseVec::from_dense(&self.coords)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.group, other.group, "adding elements of different groups");
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Self::reduced(self.group.clone(), coords)
    }

    pub fn neg(&self) -> Self {
        Self::reduced(self.group.clone(), self.coords.iter().map(|a| -a).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &Int) -> Self {
        Self::reduced(self.group.clone(), self.coords.iter().map(|a| a * k).collect())
    }

    /// Order of the element, `0` when it has infinite order.
    pub fn order(&self) -> Int {
        element_order(self)
    }
}

impl fmt::Debug for AbElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({}) in {}", c.join(", "), self.group)
    }
}

/// Order of `x`; `0` encodes infinite order.
pub fn element_order(x: &AbElement) -> Int {
    let mut acc = Int::one();
    for (c, d) in x.coords.iter().zip(x.group.factors.iter()) {
        if c.is_zero() {
            continue;
        }
        if d.is_zero() {
            return Int::zero();
        }
        let o = d.div_exact(&Scalar::gcd(c, d));
        acc = num_integer::Integer::lcm(&acc, &o);
    }
    acc
}

/// A homomorphism `source → target` as an integer matrix whose columns
/// are the images of the source generators. Row `i` is kept reduced
/// modulo the `i`-th target factor, so equal maps have equal matrices.
#[derive(Clone, PartialEq, Eq)]
pub struct AbHom {
    source: AbGroup,
    target: AbGroup,
    matrix: SparseMatrix<Int>,
}

impl AbHom {
    /// Validates dimensions and well-definedness.
    pub fn new(source: AbGroup, target: AbGroup, matrix: SparseMatrix<Int>) -> Result<Self> {
        if matrix.nrows() != target.ngens() || matrix.ncols() != source.ngens() {
            return Err(Error::InvalidArgument(format!(
                "{}x{} matrix for a map with {} source and {} target generators",
                matrix.nrows(),
                matrix.ncols(),
                source.ngens(),
                target.ngens()
            )));
        }
        let hom = Self::from_parts(source, target, matrix);
        hom.check_well_defined()?;
        Ok(hom)
    }

    pub fn from_dense(source: AbGroup, target: AbGroup, rows: &[Vec<Int>]) -> Result<Self> {
        let ncols = source.ngens();
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::InvalidArgument("ragged or mis-sized matrix".into()));
        }
        Self::new(source, target, SparseMatrix::from_dense(rows, ncols))
    }

    pub fn from_i64(source: AbGroup, target: AbGroup, rows: &[&[i64]]) -> Result<Self> {
        let rows: Vec<Vec<Int>> = rows.iter().map(|r| r.iter().map(|&v| Int::from(v)).collect()).collect();
        Self::from_dense(source, target, &rows)
    }

    /// Trusted constructor: reduces rows, skips validation.
    pub(crate) fn from_parts(source: AbGroup, target: AbGroup, mut matrix: SparseMatrix<Int>) -> Self {
        debug_assert_eq!(matrix.nrows(), target.ngens());
        debug_assert_eq!(matrix.ncols(), source.ngens());
        matrix.reduce_rows(target.factors());
        Self { source, target, matrix }
    }

    /// Every source relation `d_j e_j` must map to zero.
    pub fn check_well_defined(&self) -> Result<()> {
        for (i, row) in self.matrix.rows().iter().enumerate() {
            let t = &self.target.factors[i];
            for (j, v) in row.iter() {
                let s = &self.source.factors[j];
                if !t.divides(&(v * s)) {
                    return Err(Error::NotWellDefined(format!(
                        "generator {j} of order {} maps to an element with coordinate {v} mod {t}",
                        if s.is_zero() { "∞".to_string() } else { s.to_string() }
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn identity(group: &AbGroup) -> Self {
        Self::from_parts(group.clone(), group.clone(), SparseMatrix::identity(group.ngens()))
    }

    pub fn zero(source: &AbGroup, target: &AbGroup) -> Self {
        Self::from_parts(source.clone(), target.clone(), SparseMatrix::zeros(target.ngens(), source.ngens()))
    }

    /// Multiplication by `k` on `group`.
    pub fn multiplication(group: &AbGroup, k: &Int) -> Self {
        Self::from_parts(group.clone(), group.clone(), SparseMatrix::identity(group.ngens()).scale(k))
    }

    pub fn source(&self) -> &AbGroup {
        &self.source
    }

    pub fn target(&self) -> &AbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &SparseMatrix<Int> {
        &self.matrix
    }

    pub fn to_dense(&self) -> IntMatrix {
        Matrix::from_rows(self.matrix.to_dense())
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn apply(&self, x: &AbElement) -> AbElement {
        assert_eq!(x.group(), &self.source, "element is not in the source group");
        self.target.element_from_sparse(&self.apply_sparse(&x.to_sparse()))
    }

    pub(crate) fn apply_sparse(&self, x: &SparseVec<Int>) -> SparseVec<Int> {
        let mut y = self.matrix.mul_vec(x);
        y.reduce_mod(self.target.factors());
        y
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &AbHom) -> Result<AbHom> {
        if other.target != self.source {
            return Err(Error::InvalidArgument("composition of non-composable maps".into()));
        }
        Ok(Self::from_parts(other.source.clone(), self.target.clone(), self.matrix.mul(&other.matrix)))
    }

    fn check_parallel(&self, other: &AbHom) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::InvalidArgument("maps have different source or target".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &AbHom) -> Result<AbHom> {
        self.check_parallel(other)?;
        Ok(Self::from_parts(self.source.clone(), self.target.clone(), self.matrix.add(&other.matrix)))
    }

    pub fn sub(&self, other: &AbHom) -> Result<AbHom> {
        self.check_parallel(other)?;
        Ok(Self::from_parts(self.source.clone(), self.target.clone(), self.matrix.sub(&other.matrix)))
    }

    pub fn scale(&self, k: &Int) -> AbHom {
        Self::from_parts(self.source.clone(), self.target.clone(), self.matrix.scale(k))
    }

    pub fn neg(&self) -> AbHom {
        self.scale(&Int::from(-1))
    }

    /// Stacks maps with a common source into one map to the direct sum of targets.
    pub fn stack(maps: &[AbHom]) -> Result<AbHom> {
        let first = maps.first().ok_or_else(|| Error::InvalidArgument("stacking no maps".into()))?;
        if maps.iter().any(|m| m.source != first.source) {
            return Err(Error::InvalidArgument("stacked maps need a common source".into()));
        }
        let target = AbGroup::diagonal(maps.iter().flat_map(|m| m.target.factors().iter().cloned()).collect());
        let matrix = SparseMatrix::vstack(&maps.iter().map(|m| m.matrix.clone()).collect::<Vec<_>>());
        Ok(Self::from_parts(first.source.clone(), target, matrix))
    }

    /// Echelon of the image with preimage tags; reusable for many solves.
    pub fn solver(&self) -> Result<HomSolver> {
        guard::check_entries("homomorphism matrix", self.target.ngens() as u128, self.source.ngens() as u128)?;
        let items = self.matrix.columns().into_iter().enumerate().map(|(j, col)| (col, SparseVec::unit(j, Int::one()))).collect();
        let ech = Echelon::from_tagged(self.target.factors().to_vec(), self.source.factors().to_vec(), items);
        Ok(HomSolver { hom: self.clone(), echelon: ech })
    }

    /// Kernel with its inclusion into the source.
    pub fn kernel(&self) -> Result<(AbGroup, AbHom)> {
        let solver = self.solver()?;
        let sq = Subquotient::new(self.source.clone(), solver.echelon.kernel_tags().to_vec(), &[])?;
        let incl = sq.inclusion();
        Ok((sq.group().clone(), incl))
    }

    /// The image as a subgroup of the target.
    pub fn image(&self) -> Result<Subquotient> {
        guard::check_entries("homomorphism matrix", self.target.ngens() as u128, self.source.ngens() as u128)?;
        Subquotient::new(self.target.clone(), self.matrix.columns(), &[])
    }

    pub fn cokernel(&self) -> Result<Subquotient> {
        guard::check_entries("homomorphism matrix", self.target.ngens() as u128, self.source.ngens() as u128)?;
        let all = (0..self.target.ngens()).map(|i| SparseVec::unit(i, Int::one()));
        Subquotient::new(self.target.clone(), all, &self.matrix.columns())
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.kernel()?.0.is_trivial())
    }

    pub fn is_surjective(&self) -> Result<bool> {
        Ok(self.cokernel()?.group().is_trivial())
    }
}

impl fmt::Debug for AbHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbHom({} -> {}, {:?})", self.source, self.target, self.to_dense())
    }
}

/// Reusable preimage solver for a fixed homomorphism.
#[derive(Clone, Debug)]
pub struct HomSolver {
    hom: AbHom,
    echelon: Echelon<Int>,
}

impl HomSolver {
    pub fn hom(&self) -> &AbHom {
        &self.hom
    }

    /// Some `x` with `f(x) = y`, if one exists.
    pub fn preimage(&self, y: &AbElement) -> Option<AbElement> {
        assert_eq!(y.group(), self.hom.target(), "element is not in the target group");
        self.preimage_sparse(&y.to_sparse()).map(|x| self.hom.source.element_from_sparse(&x))
    }

    pub(crate) fn preimage_sparse(&self, y: &SparseVec<Int>) -> Option<SparseVec<Int>> {
        self.echelon.solve(y)
    }

    pub(crate) fn kernel_tags(&self) -> &[SparseVec<Int>] {
        self.echelon.kernel_tags()
    }
}

/// `L / N` for subgroups `N ⊆ L` of an ambient group, with generator
/// lifts and a coordinate map.
#[derive(Clone, Debug)]
pub struct Subquotient {
    ambient: AbGroup,
    group: AbGroup,
    inner: linalg::Subquotient<Int>,
}

impl Subquotient {
    pub fn new(ambient: AbGroup, sub: impl IntoIterator<Item = SparseVec<Int>>, quot: &[SparseVec<Int>]) -> Result<Self> {
        let inner = linalg::Subquotient::new(ambient.factors().to_vec(), sub, quot)
            .map_err(|i| Error::InvalidArgument(format!("quotient generator {i} is not in the subgroup")))?;
        let group = AbGroup::diagonal(inner.factors().to_vec());
        debug_assert!(group.is_canonical());
        Ok(Self { ambient, group, inner })
    }

    pub fn ambient(&self) -> &AbGroup {
        &self.ambient
    }

    /// The subquotient in invariant-factor form.
    pub fn group(&self) -> &AbGroup {
        &self.group
    }

    /// Lifts of the generators to the ambient group.
    pub fn lifts(&self) -> Vec<AbElement> {
        self.inner.generators().iter().map(|v| self.ambient.element_from_sparse(v)).collect()
    }

    pub(crate) fn lift_vectors(&self) -> &[SparseVec<Int>] {
        self.inner.generators()
    }

    /// Generators ↦ lifts. A homomorphism when the quotient part is trivial.
    pub fn inclusion(&self) -> AbHom {
        let m = SparseMatrix::from_columns(self.ambient.ngens(), self.inner.generators());
        AbHom::from_parts(self.group.clone(), self.ambient.clone(), m)
    }

    pub fn contains(&self, x: &AbElement) -> bool {
        self.inner.contains(&x.to_sparse())
    }

    /// Class of `x` in the subquotient; `None` if `x` is not in `L`.
    pub fn coordinates(&self, x: &AbElement) -> Option<AbElement> {
        assert_eq!(x.group(), &self.ambient, "element is not in the ambient group");
        self.coordinates_sparse(&x.to_sparse())
    }

    pub(crate) fn coordinates_sparse(&self, x: &SparseVec<Int>) -> Option<AbElement> {
        self.inner.coordinates(x).map(|c| AbElement::reduced(self.group.clone(), c))
    }
}

/// Smith normal form `(U, D, V)` with `U·M·V = D`.
pub fn smith_normal_form(m: &IntMatrix) -> Result<(IntMatrix, IntMatrix, IntMatrix)> {
    guard::check_entries("matrix", m.nrows() as u128, m.ncols() as u128)?;
    let s = linalg::smith_normal_form(m);
    Ok((s.u, s.d, s.v))
}

/// Kernel of `f` with its inclusion.
pub fn hom_kernel(f: &AbHom) -> Result<(AbGroup, AbHom)> {
    f.kernel()
}

/// `ker g / im f`, as a subquotient of the middle group.
pub fn homology_subquotient(f: &AbHom, g: &AbHom) -> Result<Subquotient> {
    if f.target != g.source {
        return Err(Error::InvalidArgument("maps do not form a complex A → B → C".into()));
    }
    if !g.compose(f)?.is_zero() {
        return Err(Error::CompositionNotZero);
    }
    let solver = g.solver()?;
    Subquotient::new(g.source.clone(), solver.kernel_tags().to_vec(), &f.matrix.columns())
}

/// `ker g / im f` in invariant-factor form.
pub fn homology_at(f: &AbHom, g: &AbHom) -> Result<AbGroup> {
    Ok(homology_subquotient(f, g)?.group().clone())
}
