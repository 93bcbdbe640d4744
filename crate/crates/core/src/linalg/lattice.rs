//! Sparse echelon forms over `⊕ Z/d_i` and subquotients of such groups.
//!
//! Coordinates carry a modulus each (`0` for a free coordinate). The
//! relation vectors `d_i e_i` are kept implicitly and never modified, so
//! every step of the elimination is a unimodular operation on the list of
//! inserted vectors. Whenever a pivot lands on a torsion coordinate its
//! annihilating multiple is fed back in; this keeps the basis in Howell
//! shape, which makes membership tests and kernel extraction exact.
//!
//! Batches of vectors are first eliminated with unit pivots chosen by a
//! Markowitz-style cost, which keeps entries small on the sparse `0, ±1`
//! matrices that cochain operators produce. Only what is left over goes
//! through the gcd-based elimination in leading-index order.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{smith_normal_form, Matrix, Scalar, SparseVec};

#[derive(Clone, Debug)]
pub struct Pivot<T> {
    pub position: usize,
    pub vec: SparseVec<T>,
    pub tag: SparseVec<T>,
}

impl<T: Scalar> Pivot<T> {
    pub fn lead(&self) -> &T {
        self.vec.get(self.position).expect("pivot entry is nonzero")
    }
}

/// Echelon basis of a submodule of `⊕ Z/d_i`.
///
/// Unit pivots (lead `1`, zero at every earlier unit position) come first,
/// followed by a leading-index echelon of vectors vanishing at all unit
/// positions. With tags enabled each vector carries a preimage tag; tags
/// of vectors that reduce to zero span the kernel of the map
/// `tag ↦ vector`.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    moduli: Vec<T>,
    tag_moduli: Option<Vec<T>>,
    units: Vec<Pivot<T>>,
    unit_index: HashMap<usize, usize>,
    core: BTreeMap<usize, Pivot<T>>,
    kernel: Vec<SparseVec<T>>,
}

/// Result of reducing a vector against an [`Echelon`].
#[derive(Clone, Debug)]
pub struct Reduction<T> {
    /// `(pivot position, coefficient)` in the order they were applied.
    pub coefficients: Vec<(usize, T)>,
    /// What is left; zero iff the vector lies in the span.
    pub residual: SparseVec<T>,
}

impl<T: Scalar> Echelon<T> {
    pub fn new(moduli: Vec<T>) -> Self {
        Self { moduli, tag_moduli: None, units: Vec::new(), unit_index: HashMap::new(), core: BTreeMap::new(), kernel: Vec::new() }
    }

    pub fn with_tags(moduli: Vec<T>, tag_moduli: Vec<T>) -> Self {
        Self { tag_moduli: Some(tag_moduli), ..Self::new(moduli) }
    }

    /// Echelon of a whole batch, using unit elimination first.
    pub fn from_vectors(moduli: Vec<T>, vecs: impl IntoIterator<Item = SparseVec<T>>) -> Self {
        let mut e = Self::new(moduli);
        e.insert_batch(vecs.into_iter().map(|v| (v, SparseVec::new())).collect());
        e
    }

    /// Tagged batch version of [`Self::from_vectors`].
    pub fn from_tagged(moduli: Vec<T>, tag_moduli: Vec<T>, items: Vec<(SparseVec<T>, SparseVec<T>)>) -> Self {
        let mut e = Self::with_tags(moduli, tag_moduli);
        e.insert_batch(items);
        e
    }

    pub fn dim(&self) -> usize {
        self.moduli.len()
    }

    pub fn moduli(&self) -> &[T] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.units.len() + self.core.len()
    }

    /// All pivots in reduction order.
    pub fn pivots(&self) -> impl Iterator<Item = &Pivot<T>> {
        self.units.iter().chain(self.core.values())
    }

    pub fn pivot(&self, position: usize) -> Option<&Pivot<T>> {
        match self.unit_index.get(&position) {
            Some(&i) => Some(&self.units[i]),
            None => self.core.get(&position),
        }
    }

    /// Tags of inserted vectors that reduced to zero.
    pub fn kernel_tags(&self) -> &[SparseVec<T>] {
        &self.kernel
    }

    fn normalize(&self, v: &mut SparseVec<T>, t: &mut SparseVec<T>) {
        v.reduce_mod(&self.moduli);
        if let Some(tm) = &self.tag_moduli {
            t.reduce_mod(tm);
        }
    }

    fn record_zero(&mut self, t: SparseVec<T>) {
        if self.tag_moduli.is_some() && !t.is_zero() {
            self.kernel.push(t);
        }
    }

    /// `(d/g) * v` with the entry at `position` cleared: the annihilating multiple.
    fn annihilator(&self, v: &SparseVec<T>, t: &SparseVec<T>, position: usize) -> Option<(SparseVec<T>, SparseVec<T>)> {
        let d = &self.moduli[position];
        if d.is_zero() {
            return None;
        }
        let lead = v.get(position).expect("annihilator of a vector without that entry");
        let f = d.div_exact(&lead.gcd(d));
        let mut av = v.scale(&f);
        av.set(position, T::zero());
        let mut at = t.scale(&f);
        self.normalize(&mut av, &mut at);
        Some((av, at))
    }

    /// Inverse of `a` modulo `d` (`d = 0` meaning the integers), if any.
    fn unit_inverse(a: &T, d: &T) -> Option<T> {
        if d.is_zero() {
            return a.is_unit().then(|| a.clone());
        }
        let (g, s, _) = a.extended_gcd(d);
        g.is_one().then(|| s.reduce(d))
    }

    fn insert_batch(&mut self, items: Vec<(SparseVec<T>, SparseVec<T>)>) {
        let dim = self.dim();
        let mut active: Vec<Option<(SparseVec<T>, SparseVec<T>)>> = Vec::with_capacity(items.len());
        let mut occ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); dim];
        let mut live: BTreeSet<usize> = BTreeSet::new();
        for (mut v, mut t) in items {
            self.normalize(&mut v, &mut t);
            if v.is_zero() {
                self.record_zero(t);
                continue;
            }
            let i = active.len();
            for (p, _) in v.iter() {
                occ[p].insert(i);
            }
            active.push(Some((v, t)));
            live.insert(i);
        }

        loop {
            // Cheapest unit entry by (nnz(row) - 1) * (occurrences(column) - 1).
            let mut best: Option<(usize, usize, usize)> = None;
            'scan: for &i in &live {
                let v = &active[i].as_ref().expect("live entries are present").0;
                let r = v.nnz() - 1;
                if best.is_some_and(|b| b.0 == 0) {
                    break;
                }
                for (p, a) in v.iter() {
                    let c = r * (occ[p].len() - 1);
                    if best.is_some_and(|b| c >= b.0) {
                        continue;
                    }
                    if Self::unit_inverse(a, &self.moduli[p]).is_some() {
                        best = Some((c, i, p));
                        if c == 0 {
                            break 'scan;
                        }
                    }
                }
            }
            let Some((_, i, p)) = best else { break };

            let (v, t) = active[i].take().expect("chosen entry is live");
            live.remove(&i);
            for (q, _) in v.iter() {
                occ[q].remove(&i);
            }
            let d = self.moduli[p].clone();
            let inv = Self::unit_inverse(v.get(p).expect("pivot entry"), &d).expect("chosen entry is a unit");
            let (mut v, mut t) = (v.scale(&inv), t.scale(&inv));
            self.normalize(&mut v, &mut t);

            let others: Vec<usize> = occ[p].iter().copied().collect();
            for j in others {
                let (w, wt) = active[j].as_mut().expect("occurrence lists track live entries");
                let c = w.get(p).expect("occurrence lists are exact").neg();
                w.axpy(&c, &v);
                wt.axpy(&c, &t);
                w.reduce_mod(&self.moduli);
                if let Some(tm) = &self.tag_moduli {
                    wt.reduce_mod(tm);
                }
                for (q, _) in v.iter() {
                    if w.get(q).is_some() {
                        occ[q].insert(j);
                    } else {
                        occ[q].remove(&j);
                    }
                }
                if w.is_zero() {
                    let (_, wt) = active[j].take().expect("present");
                    live.remove(&j);
                    self.record_zero(wt);
                }
            }

            let ann = self.annihilator(&v, &t, p);
            self.unit_index.insert(p, self.units.len());
            self.units.push(Pivot { position: p, vec: v, tag: t });
            if let Some((av, at)) = ann {
                // Already zero at every earlier unit position.
                if av.is_zero() {
                    self.record_zero(at);
                } else {
                    let k = active.len();
                    for (q, _) in av.iter() {
                        occ[q].insert(k);
                    }
                    active.push(Some((av, at)));
                    live.insert(k);
                }
            }
        }

        for i in live {
            let (v, t) = active[i].take().expect("live entries are present");
            self.insert_core(v, t);
        }
    }

    fn reduce_by_units(&self, v: &mut SparseVec<T>, t: &mut SparseVec<T>) {
        if self.units.is_empty() {
            return;
        }
        for piv in &self.units {
            let Some(c) = v.get(piv.position).map(Scalar::neg) else { continue };
            v.axpy(&c, &piv.vec);
            t.axpy(&c, &piv.tag);
            self.normalize(v, t);
        }
    }

    pub fn insert(&mut self, v: SparseVec<T>) {
        self.insert_tagged(v, SparseVec::new());
    }

    pub fn insert_tagged(&mut self, mut v: SparseVec<T>, mut tag: SparseVec<T>) {
        self.normalize(&mut v, &mut tag);
        self.reduce_by_units(&mut v, &mut tag);
        self.insert_core(v, tag);
    }

    /// gcd-based insertion; `v` must vanish at every unit position.
    fn insert_core(&mut self, v: SparseVec<T>, tag: SparseVec<T>) {
        let mut stack = vec![(v, tag)];
        while let Some((mut v, mut t)) = stack.pop() {
            self.normalize(&mut v, &mut t);
            loop {
                let Some((p, a)) = v.leading().map(|(p, a)| (p, a.clone())) else {
                    self.record_zero(t);
                    break;
                };
                let d = self.moduli[p].clone();
                let Some(piv) = self.core.get(&p) else {
                    let (pv, pt) = if d.is_zero() {
                        if a.is_negative() {
                            (v.neg(), t.neg())
                        } else {
                            (v, t)
                        }
                    } else {
                        // s*v + (t-coefficient)*d*e_p has leading entry gcd(a, d).
                        let (g, s, _) = a.extended_gcd(&d);
                        let mut pv = v.scale(&s);
                        pv.set(p, g);
                        let mut pt = t.scale(&s);
                        self.normalize(&mut pv, &mut pt);
                        if let Some(ann) = self.annihilator(&v, &t, p) {
                            stack.push(ann);
                        }
                        (pv, pt)
                    };
                    self.core.insert(p, Pivot { position: p, vec: pv, tag: pt });
                    break;
                };
                let c = piv.lead().clone();
                if c.divides(&a) {
                    let q = a.div_exact(&c).neg();
                    v.axpy(&q, &piv.vec);
                    t.axpy(&q, &piv.tag);
                    self.normalize(&mut v, &mut t);
                    continue;
                }
                let (g, s, u) = a.extended_gcd(&c);
                let (cg, ag) = (c.div_exact(&g), a.div_exact(&g).neg());
                let mut nv = SparseVec::combine(&s, &v, &u, &piv.vec);
                let mut nt = SparseVec::combine(&s, &t, &u, &piv.tag);
                let mut rv = SparseVec::combine(&cg, &v, &ag, &piv.vec);
                let mut rt = SparseVec::combine(&cg, &t, &ag, &piv.tag);
                self.normalize(&mut nv, &mut nt);
                self.normalize(&mut rv, &mut rt);
                if let Some(ann) = self.annihilator(&nv, &nt, p) {
                    stack.push(ann);
                }
                self.core.insert(p, Pivot { position: p, vec: nv, tag: nt });
                v = rv;
                t = rt;
            }
        }
    }

    /// Reduces `y` as far as the basis allows.
    pub fn reduce(&self, y: &SparseVec<T>) -> Reduction<T> {
        let mut y = y.clone();
        y.reduce_mod(&self.moduli);
        let mut coefficients = Vec::new();
        for piv in &self.units {
            let Some(q) = y.get(piv.position).cloned() else { continue };
            y.axpy(&q.neg(), &piv.vec);
            y.reduce_mod(&self.moduli);
            coefficients.push((piv.position, q));
        }
        while let Some((p, a)) = y.leading().map(|(p, a)| (p, a.clone())) {
            let Some(piv) = self.core.get(&p) else { break };
            let c = piv.lead();
            if !c.divides(&a) {
                break;
            }
            let q = a.div_exact(c);
            y.axpy(&q.neg(), &piv.vec);
            y.reduce_mod(&self.moduli);
            coefficients.push((p, q));
        }
        Reduction { coefficients, residual: y }
    }

    pub fn contains(&self, y: &SparseVec<T>) -> bool {
        self.reduce(y).residual.is_zero()
    }

    /// A tag whose image is `y`, if `y` lies in the span.
    pub fn solve(&self, y: &SparseVec<T>) -> Option<SparseVec<T>> {
        let red = self.reduce(y);
        if !red.residual.is_zero() {
            return None;
        }
        let mut tag = SparseVec::new();
        for (p, q) in &red.coefficients {
            tag.axpy(q, &self.pivot(*p).expect("reduction uses pivots").tag);
        }
        if let Some(tm) = &self.tag_moduli {
            tag.reduce_mod(tm);
        }
        Some(tag)
    }
}

#[derive(Clone, Debug)]
struct Elimination<T> {
    generator: usize,
    unit: T,
    rest: SparseVec<T>,
}

/// The group `L / N` for submodules `N ⊆ L` of an ambient `⊕ Z/d_i`.
///
/// The result is in invariant-factor form, with a lift of each generator
/// in ambient coordinates and a coordinate map for elements of `L`.
#[derive(Clone, Debug)]
pub struct Subquotient<T> {
    factors: Vec<T>,
    generators: Vec<SparseVec<T>>,
    echelon: Echelon<T>,
    gen_of_pivot: BTreeMap<usize, usize>,
    eliminations: Vec<Elimination<T>>,
    survivors: Vec<usize>,
    u: Matrix<T>,
    kept: Vec<usize>,
}

impl<T: Scalar> Subquotient<T> {
    /// `span(sub) / span(quot)` inside `⊕ Z/moduli`. Fails with the
    /// offending index when a quotient generator is not in `span(sub)`.
    pub fn new(moduli: Vec<T>, sub: impl IntoIterator<Item = SparseVec<T>>, quot: &[SparseVec<T>]) -> Result<Self, usize> {
        let echelon = Echelon::from_vectors(moduli, sub);
        let keys: Vec<usize> = echelon.pivots().map(|p| p.position).collect();
        let gen_of_pivot: BTreeMap<usize, usize> = keys.iter().enumerate().map(|(g, &k)| (k, g)).collect();
        let to_gens = |red: &Reduction<T>, extra: Option<(usize, T)>| {
            let mut pairs: Vec<(usize, T)> = red.coefficients.iter().map(|(p, q)| (gen_of_pivot[p], q.neg())).collect();
            pairs.extend(extra);
            SparseVec::from_pairs(pairs)
        };

        let mut relations: Vec<SparseVec<T>> = Vec::new();
        for (g, piv) in echelon.pivots().enumerate() {
            let k = piv.position;
            let Some((ann, _)) = echelon.annihilator(&piv.vec, &piv.tag, k) else { continue };
            let red = echelon.reduce(&ann);
            debug_assert!(red.residual.is_zero(), "basis is not in Howell shape");
            let f = echelon.moduli[k].div_exact(&piv.lead().gcd(&echelon.moduli[k]));
            relations.push(to_gens(&red, Some((g, f))));
        }
        for (idx, q) in quot.iter().enumerate() {
            let red = echelon.reduce(q);
            if !red.residual.is_zero() {
                return Err(idx);
            }
            relations.push(to_gens(&red, None).neg());
        }

        let ngens = keys.len();
        let (eliminations, survivors, remaining) = eliminate_units(ngens, relations);
        let pos: BTreeMap<usize, usize> = survivors.iter().enumerate().map(|(a, &g)| (g, a)).collect();
        let mut dense = Matrix::zeros(survivors.len(), remaining.len());
        for (j, col) in remaining.iter().enumerate() {
            for (g, v) in col.iter() {
                dense[(pos[&g], j)] = v.clone();
            }
        }
        let snf = smith_normal_form(&dense);
        let diag = snf.diagonal();
        let mut factors = Vec::new();
        let mut kept = Vec::new();
        for a in 0..survivors.len() {
            let d = diag.get(a).cloned().unwrap_or_else(T::zero);
            if !d.is_one() {
                factors.push(d);
                kept.push(a);
            }
        }
        let generators = kept
            .iter()
            .map(|&a| {
                let mut lift = SparseVec::new();
                for (b, &g) in survivors.iter().enumerate() {
                    let c = &snf.u_inv[(b, a)];
                    if !c.is_zero() {
                        lift.axpy(c, &echelon.pivot(keys[g]).expect("pivot").vec);
                    }
                }
                lift.reduce_mod(&echelon.moduli);
                lift
            })
            .collect();
        Ok(Self { factors, generators, echelon, gen_of_pivot, eliminations, survivors, u: snf.u, kept })
    }

    /// Invariant factors of the subquotient (`0` for a free summand).
    pub fn factors(&self) -> &[T] {
        &self.factors
    }

    /// Lifts of the generators, one per invariant factor.
    pub fn generators(&self) -> &[SparseVec<T>] {
        &self.generators
    }

    pub fn moduli(&self) -> &[T] {
        self.echelon.moduli()
    }

    pub fn contains(&self, x: &SparseVec<T>) -> bool {
        self.echelon.contains(x)
    }

    /// Coordinates of the class of `x` in terms of [`Self::generators`],
    /// torsion coordinates reduced to `[0, d)`. `None` when `x ∉ L`.
    pub fn coordinates(&self, x: &SparseVec<T>) -> Option<Vec<T>> {
        let red = self.echelon.reduce(x);
        if !red.residual.is_zero() {
            return None;
        }
        let mut c: Vec<T> = vec![T::zero(); self.gen_of_pivot.len()];
        for (p, q) in &red.coefficients {
            let g = self.gen_of_pivot[p];
            c[g] = c[g].add(q);
        }
        for e in &self.eliminations {
            let cg = std::mem::replace(&mut c[e.generator], T::zero());
            if cg.is_zero() {
                continue;
            }
            let f = cg.mul(&e.unit).neg();
            for (g, r) in e.rest.iter() {
                c[g].add_mul_assign(&f, r);
            }
        }
        let reduced: Vec<T> = self.survivors.iter().map(|&g| c[g].clone()).collect();
        Some(
            self.kept
                .iter()
                .zip(&self.factors)
                .map(|(&a, d)| {
                    let mut acc = T::zero();
                    for (b, x) in reduced.iter().enumerate() {
                        if !x.is_zero() {
                            acc.add_mul_assign(&self.u[(a, b)], x);
                        }
                    }
                    acc.reduce(d)
                })
                .collect(),
        )
    }
}

/// Tietze moves: removes generators that some relation expresses with a
/// unit coefficient. Returns the eliminations in order, surviving
/// generators, and the remaining nonzero relations.
fn eliminate_units<T: Scalar>(
    ngens: usize,
    relations: Vec<SparseVec<T>>,
) -> (Vec<Elimination<T>>, Vec<usize>, Vec<SparseVec<T>>) {
    let mut cols: Vec<Option<SparseVec<T>>> = relations.into_iter().map(|c| (!c.is_zero()).then_some(c)).collect();
    let mut occ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ngens];
    for (j, c) in cols.iter().enumerate() {
        if let Some(c) = c {
            for (g, _) in c.iter() {
                occ[g].insert(j);
            }
        }
    }
    let mut alive = vec![true; ngens];
    let mut eliminations = Vec::new();
    loop {
        let mut order: Vec<usize> = (0..cols.len()).filter(|&j| cols[j].is_some()).collect();
        order.sort_by_key(|&j| cols[j].as_ref().map_or(0, SparseVec::nnz));
        let mut progress = false;
        for j in order {
            let Some(col) = cols[j].as_ref() else { continue };
            let Some((i, unit)) = col
                .iter()
                .filter(|(_, v)| v.is_unit())
                .min_by_key(|(g, _)| occ[*g].len())
                .map(|(g, v)| (g, v.clone()))
            else {
                continue;
            };
            let col = cols[j].take().expect("checked above");
            for (g, _) in col.iter() {
                occ[g].remove(&j);
            }
            let others: Vec<usize> = occ[i].iter().copied().collect();
            for jj in others {
                let target = cols[jj].as_mut().expect("occurrence lists track live relations");
                let r = target.get(i).cloned().expect("occurrence lists are exact");
                let f = r.mul(&unit).neg();
                let before: Vec<usize> = target.iter().map(|(g, _)| g).collect();
                target.axpy(&f, &col);
                let after: BTreeSet<usize> = target.iter().map(|(g, _)| g).collect();
                for g in before {
                    if !after.contains(&g) {
                        occ[g].remove(&jj);
                    }
                }
                for &g in &after {
                    occ[g].insert(jj);
                }
                if after.is_empty() {
                    cols[jj] = None;
                }
            }
            let mut rest = col;
            rest.set(i, T::zero());
            alive[i] = false;
            eliminations.push(Elimination { generator: i, unit, rest });
            progress = true;
        }
        if !progress {
            break;
        }
    }
    let survivors = (0..ngens).filter(|&g| alive[g]).collect();
    let remaining = cols.into_iter().flatten().collect();
    (eliminations, survivors, remaining)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(d: &[i64]) -> SparseVec<i64> {
        SparseVec::from_dense(d)
    }

    #[test]
    fn kernel_of_free_map() {
        // columns (1,2) and (2,4): kernel spanned by (2,-1).
        let mut e = Echelon::with_tags(vec![0, 0], vec![0, 0]);
        e.insert_tagged(sv(&[1, 2]), sv(&[1, 0]));
        e.insert_tagged(sv(&[2, 4]), sv(&[0, 1]));
        assert_eq!(e.rank(), 1);
        assert_eq!(e.kernel_tags().len(), 1);
        let k = &e.kernel_tags()[0];
        assert_eq!(k.to_dense(2)[0], -2 * k.to_dense(2)[1]);
    }

    #[test]
    fn torsion_membership() {
        // In Z/4, span(2) = {0, 2}.
        let mut e = Echelon::new(vec![4]);
        e.insert(sv(&[2]));
        assert!(e.contains(&sv(&[2])));
        assert!(e.contains(&sv(&[6])));
        assert!(!e.contains(&sv(&[1])));
        // In Z/4, span(3) is everything.
        let mut e = Echelon::new(vec![4]);
        e.insert(sv(&[3]));
        assert!(e.contains(&sv(&[1])));
    }

    #[test]
    fn kernel_mod_torsion() {
        // x -> 2x : Z/4 -> Z/4 has kernel {0, 2}.
        let mut e = Echelon::with_tags(vec![4], vec![4]);
        e.insert_tagged(sv(&[2]), sv(&[1]));
        let sq = Subquotient::new(vec![4], e.kernel_tags().to_vec(), &[]).unwrap();
        assert_eq!(sq.factors(), &[2]);
    }

    #[test]
    fn howell_shape_needed() {
        // Z/4 ⊕ Z/4, span of (2, 1): it contains (0, 2) = 2*(2,1).
        let mut e = Echelon::new(vec![4, 4]);
        e.insert(sv(&[2, 1]));
        assert!(e.contains(&sv(&[0, 2])));
        assert!(!e.contains(&sv(&[0, 1])));
        let sq = Subquotient::new(vec![4, 4], vec![sv(&[2, 1])], &[]).unwrap();
        assert_eq!(sq.factors(), &[4]);
    }

    #[test]
    fn cokernel_of_doubling() {
        let sq = Subquotient::new(vec![0], vec![sv(&[1])], &[sv(&[2])]).unwrap();
        assert_eq!(sq.factors(), &[2]);
        assert_eq!(sq.coordinates(&sv(&[3])), Some(vec![1]));
        assert_eq!(sq.coordinates(&sv(&[4])), Some(vec![0]));
    }

    #[test]
    fn mixed_subquotient() {
        // Z^2 / span((2,0),(0,3)) = Z/6
        let sq = Subquotient::new(vec![0, 0], vec![sv(&[1, 0]), sv(&[0, 1])], &[sv(&[2, 0]), sv(&[0, 3])]).unwrap();
        assert_eq!(sq.factors(), &[6]);
        let g = &sq.generators()[0];
        assert_eq!(sq.coordinates(g), Some(vec![1]));
        // Z^3 / span((1,1,0)) = Z^2
        let sq = Subquotient::new(vec![0, 0, 0], (0..3).map(|i| SparseVec::unit(i, 1)), &[sv(&[1, 1, 0])]).unwrap();
        assert_eq!(sq.factors(), &[0, 0]);
    }

    #[test]
    fn quotient_outside_sub_is_rejected() {
        let r = Subquotient::new(vec![0, 0], vec![sv(&[1, 0])], &[sv(&[0, 1])]);
        assert_eq!(r.err(), Some(0));
    }
}
