use super::Scalar;

/// A sparse integer vector: sorted `(index, value)` pairs with no zero values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec<T> {
    entries: Vec<(usize, T)>,
}

impl<T: Scalar> Default for SparseVec<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> SparseVec<T> {
    pub fn new() -> Self {
        Self { entries: Vec::new() }
    }

    pub fn unit(index: usize, value: T) -> Self {
        let mut v = Self::new();
        if !value.is_zero() {
            v.entries.push((index, value));
        }
        v
    }

    /// Builds from unsorted pairs, summing duplicates and dropping zeros.
    pub fn from_pairs(mut pairs: Vec<(usize, T)>) -> Self {
        pairs.sort_by_key(|p| p.0);
        let mut entries: Vec<(usize, T)> = Vec::with_capacity(pairs.len());
        for (i, v) in pairs {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc = acc.add(&v),
                _ => entries.push((i, v)),
            }
        }
        entries.retain(|(_, v)| !v.is_zero());
        Self { entries }
    }

    pub fn from_dense(values: &[T]) -> Self {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        Self { entries }
    }

    pub fn to_dense(&self, len: usize) -> Vec<T> {
        let mut out = vec![T::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, T)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &T)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn leading(&self) -> Option<(usize, &T)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn get(&self, index: usize) -> Option<&T> {
        self.entries
            .binary_search_by_key(&index, |p| p.0)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|p| p.0)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        Self {
            entries: self.entries.iter().map(|(i, v)| (*i, v.mul(c))).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            entries: self.entries.iter().map(|(i, v)| (*i, v.neg())).collect(),
        }
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: &T, other: &Self) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => out.push(a.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, v) = b.next().unwrap();
                    out.push((*j, v.mul(c)));
                }
                (Some(_), Some(_)) => {
                    let (i, mut v) = a.next().unwrap();
                    let (_, w) = b.next().unwrap();
                    v.add_mul_assign(c, w);
                    if !v.is_zero() {
                        out.push((i, v));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, v) = b.next().unwrap();
                    out.push((*j, v.mul(c)));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    /// `a*x + b*y`
    pub fn combine(a: &T, x: &Self, b: &T, y: &Self) -> Self {
        let mut out = x.scale(a);
        out.axpy(b, y);
        out
    }

    /// Reduces every entry at a position with nonzero modulus into `[0, m)`.
    pub fn reduce_mod(&mut self, moduli: &[T]) {
        for (i, v) in self.entries.iter_mut() {
            let m = &moduli[*i];
            if !m.is_zero() {
                *v = v.mod_floor(m);
            }
        }
        self.entries.retain(|(_, v)| !v.is_zero());
    }

    /// Sets the entry at `index` (removing it when zero).
    pub fn set(&mut self, index: usize, value: T) {
        match self.entries.binary_search_by_key(&index, |p| p.0) {
            Ok(k) => {
                if value.is_zero() {
                    self.entries.remove(k);
                } else {
                    self.entries[k].1 = value;
                }
            }
            Err(k) => {
                if !value.is_zero() {
                    self.entries.insert(k, (index, value));
                }
            }
        }
    }

    /// Applies `f` to every index; the map must be injective.
    pub fn reindex(&self, f: impl Fn(usize) -> usize) -> Self {
        let mut entries: Vec<(usize, T)> = self.entries.iter().map(|(i, v)| (f(*i), v.clone())).collect();
        entries.sort_by_key(|p| p.0);
        Self { entries }
    }
}

/// Row-major sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<T> {
    ncols: usize,
    rows: Vec<SparseVec<T>>,
}

impl<T: Scalar> SparseMatrix<T> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self { ncols, rows: vec![SparseVec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            ncols: n,
            rows: (0..n).map(|i| SparseVec::unit(i, T::one())).collect(),
        }
    }

    pub fn from_rows(ncols: usize, rows: Vec<SparseVec<T>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.max_index().map_or(true, |m| m < ncols)));
        Self { ncols, rows }
    }

    pub fn from_dense(rows: &[Vec<T>], ncols: usize) -> Self {
        Self {
            ncols,
            rows: rows.iter().map(|r| SparseVec::from_dense(r)).collect(),
        }
    }

    /// Builds a matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(nrows: usize, cols: &[SparseVec<T>]) -> Self {
        let mut rows: Vec<Vec<(usize, T)>> = vec![Vec::new(); nrows];
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter() {
                rows[i].push((j, v.clone()));
            }
        }
        Self {
            ncols: cols.len(),
            rows: rows.into_iter().map(|r| SparseVec { entries: r }).collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(SparseVec::nnz).sum()
    }

    pub fn row(&self, i: usize) -> &SparseVec<T> {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SparseVec<T>] {
        &self.rows
    }

    pub fn rows_mut(&mut self) -> &mut [SparseVec<T>] {
        &mut self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.rows[i].get(j).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(SparseVec::is_zero)
    }

    pub fn columns(&self) -> Vec<SparseVec<T>> {
        let mut cols: Vec<Vec<(usize, T)>> = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r.iter() {
                cols[j].push((i, v.clone()));
            }
        }
        cols.into_iter().map(|c| SparseVec { entries: c }).collect()
    }

    pub fn transpose(&self) -> Self {
        Self { ncols: self.rows.len(), rows: self.columns() }
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        self.rows.iter().map(|r| r.to_dense(self.ncols)).collect()
    }

    pub fn mul_vec(&self, x: &SparseVec<T>) -> SparseVec<T> {
        let dense = x.to_dense(self.ncols);
        let pairs = self
            .rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| {
                let mut acc = T::zero();
                for (j, v) in r.iter() {
                    if !dense[j].is_zero() {
                        acc.add_mul_assign(v, &dense[j]);
                    }
                }
                (!acc.is_zero()).then_some((i, acc))
            })
            .collect();
        SparseVec { entries: pairs }
    }

    /// `self * other`
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows(), "dimension mismatch in product");
        let n = other.ncols;
        let mut acc: Vec<T> = vec![T::zero(); n];
        let mut touched: Vec<usize> = Vec::new();
        let mut mark = vec![false; n];
        let rows = self
            .rows
            .iter()
            .map(|r| {
                for (k, a) in r.iter() {
                    for (j, b) in other.rows[k].iter() {
                        if !mark[j] {
                            mark[j] = true;
                            touched.push(j);
                        }
                        acc[j].add_mul_assign(a, b);
                    }
                }
                touched.sort_unstable();
                let mut entries = Vec::with_capacity(touched.len());
                for &j in &touched {
                    mark[j] = false;
                    let v = std::mem::replace(&mut acc[j], T::zero());
                    if !v.is_zero() {
                        entries.push((j, v));
                    }
                }
                touched.clear();
                SparseVec { entries }
            })
            .collect();
        Self { ncols: n, rows }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(&T::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(&T::one().neg(), other)
    }

    /// `self + c * other`
    pub fn add_scaled(&self, c: &T, other: &Self) -> Self {
        assert_eq!(self.nrows(), other.nrows(), "dimension mismatch in sum");
        assert_eq!(self.ncols, other.ncols, "dimension mismatch in sum");
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut r = a.clone();
                r.axpy(c, b);
                r
            })
            .collect();
        Self { ncols: self.ncols, rows }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            ncols: self.ncols,
            rows: self.rows.iter().map(|r| r.scale(c)).collect(),
        }
    }

    /// Reduces row `i` modulo `moduli[i]` (no-op for zero moduli).
    pub fn reduce_rows(&mut self, moduli: &[T]) {
        for (r, m) in self.rows.iter_mut().zip(moduli) {
            if !m.is_zero() {
                for (_, v) in r.entries.iter_mut() {
                    *v = v.mod_floor(m);
                }
                r.entries.retain(|(_, v)| !v.is_zero());
            }
        }
    }

    /// Stacks `blocks` vertically.
    pub fn vstack(blocks: &[Self]) -> Self {
        let ncols = blocks.first().map_or(0, |b| b.ncols);
        assert!(blocks.iter().all(|b| b.ncols == ncols), "dimension mismatch in vstack");
        Self {
            ncols,
            rows: blocks.iter().flat_map(|b| b.rows.iter().cloned()).collect(),
        }
    }
}
