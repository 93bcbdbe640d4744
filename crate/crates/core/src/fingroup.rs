//! Finite groups given by multiplication tables.
//!
//! Element `0` is always the identity. Constructors index elements
//! deterministically:
//!
//! * `C<n>`: `a^i` at index `i`;
//! * `D<n>` (order `2n`): `r^i s^j` at index `i + n*j`;
//! * `S<n>`: permutations of `0..n` in lexicographic order of their images;
//! * `Q8`: `1, -1, i, -i, j, -j, k, -k`;
//! * `GxH`: `(g, h)` at index `g*|H| + h`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest order accepted; axioms are checked in `O(order^3)`.
pub const MAX_ORDER: usize = 512;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    label: String,
}

impl FinGroup {
    /// Builds a group from a row-major table, checking all axioms.
    pub fn from_table(rows: Vec<Vec<usize>>, label: impl Into<String>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        check_order(n as u128)?;
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidGroup("table is not square".into()));
        }
        let table: Vec<usize> = rows.into_iter().flatten().collect();
        if let Some(&bad) = table.iter().find(|&&x| x >= n) {
            return Err(Error::InvalidGroup(format!("entry {bad} out of range")));
        }
        for g in 0..n {
            if table[g] != g || table[g * n] != g {
                return Err(Error::InvalidGroup(format!("index 0 is not a two-sided identity at {g}")));
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for g in 0..n {
            let Some(h) = (0..n).find(|&h| table[g * n + h] == 0 && table[h * n + g] == 0) else {
                return Err(Error::InvalidGroup(format!("element {g} has no inverse")));
            };
            inverse[g] = h;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    if table[ab * n + c] != table[a * n + table[b * n + c]] {
                        return Err(Error::InvalidGroup(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(Self { order: n, table, inverse, label: label.into() })
    }

    fn from_fn(n: usize, label: String, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        check_order(n as u128)?;
        let rows = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
        Self::from_table(rows, label)
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("C0 is not a finite group".into()));
        }
        Self::from_fn(n, format!("C{n}"), |a, b| (a + b) % n)
    }

    /// Dihedral group of order `2n`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("D0 is not a finite group".into()));
        }
        check_order(2 * n as u128)?;
        Self::from_fn(2 * n, format!("D{n}"), |x, y| {
            let (a, b) = (x % n, x / n);
            let (c, d) = (y % n, y / n);
            // r^a s^b r^c s^d = r^(a ± c) s^(b+d)
            let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
            rot + n * ((b + d) % 2)
        })
    }

    /// Symmetric group on `n ≤ 5` symbols.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("S0 is not supported".into()));
        }
        if n > 5 {
            return Err(Error::ResourceGuard { what: "symmetric group order".into(), requested: factorial(n), cap: MAX_ORDER as u128 });
        }
        let perms = permutations(n);
        let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).expect("permutation is listed");
        let table = (0..perms.len())
            .map(|a| {
                (0..perms.len())
                    .map(|b| {
                        let c: Vec<usize> = (0..n).map(|x| perms[a][perms[b][x]]).collect();
                        index(&c)
                    })
                    .collect()
            })
            .collect();
        Self::from_table(table, format!("S{n}"))
    }

    pub fn quaternion() -> Result<Self> {
        // Units 1, i, j, k as 0..4; unit products as (sign, unit).
        const UNIT: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        Self::from_fn(8, "Q8".into(), |x, y| {
            let (u, s) = (x / 2, x % 2 == 1);
            let (v, t) = (y / 2, y % 2 == 1);
            let (neg, w) = UNIT[u][v];
            2 * w + usize::from(neg ^ s ^ t)
        })
    }

    /// Direct product; `(g, h)` sits at index `g*|H| + h`.
    pub fn product(&self, other: &FinGroup) -> Result<Self> {
        let m = other.order;
        check_order(self.order as u128 * m as u128)?;
        Self::from_fn(self.order * m, format!("{}x{}", self.label, other.label), |x, y| {
            self.mul(x / m, y / m) * m + other.mul(x % m, y % m)
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn has_element_of_order_two(&self) -> bool {
        has_element_of_order_two(self)
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Export<'a> {
            order: usize,
            table: Vec<Vec<usize>>,
            label: &'a str,
        }
        serde_json::to_value(Export { order: self.order, table: self.table(), label: &self.label }).expect("serializable")
    }
}

impl fmt::Debug for FinGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinGroup({}, order {})", self.label, self.order)
    }
}

impl fmt::Display for FinGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// True iff some `g ≠ e` has `g·g = e`.
pub fn has_element_of_order_two(g: &FinGroup) -> bool {
    g.elements().skip(1).any(|x| g.mul(x, x) == 0)
}

/// Parses `atom ("x" atom)*` with `atom := C<n> | D<n> | S<n> | Q8`.
pub fn make_group(spec: &str) -> Result<FinGroup> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(Error::Parse("empty group spec".into()));
    }
    let atoms = spec.split('x').map(parse_atom).collect::<Result<Vec<_>>>()?;
    let total = atoms.iter().try_fold(1u128, |acc, (_, n)| acc.checked_mul(*n as u128)).unwrap_or(u128::MAX);
    check_order(total)?;
    let mut it = atoms.into_iter();
    let (kind, n) = it.next().expect("split yields at least one atom");
    let mut g = build_atom(kind, n)?;
    for (kind, n) in it {
        g = g.product(&build_atom(kind, n)?)?;
    }
    Ok(g)
}

fn parse_atom(atom: &str) -> Result<(char, usize)> {
    if atom == "Q8" {
        return Ok(('Q', 8));
    }
    let mut chars = atom.chars();
    let kind = chars.next().ok_or_else(|| Error::Parse("empty factor in group spec".into()))?;
    if !matches!(kind, 'C' | 'D' | 'S') {
        return Err(Error::Parse(format!("unknown group family in {atom:?}")));
    }
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("expected a positive integer after {kind} in {atom:?}")));
    }
    let n: usize = digits.parse().map_err(|_| Error::Parse(format!("index too large in {atom:?}")))?;
    if n == 0 {
        return Err(Error::Parse(format!("{atom:?} must have a positive index")));
    }
    let order = match kind {
        'C' => n as u128,
        'D' => 2 * n as u128,
        _ if n > 5 => return Err(Error::ResourceGuard { what: "symmetric group order".into(), requested: factorial(n.min(34)), cap: MAX_ORDER as u128 }),
        _ => factorial(n),
    };
    check_order(order)?;
    Ok((kind, n))
}

fn build_atom(kind: char, n: usize) -> Result<FinGroup> {
    match kind {
        'C' => FinGroup::cyclic(n),
        'D' => FinGroup::dihedral(n),
        'S' => FinGroup::symmetric(n),
        _ => FinGroup::quaternion(),
    }
}

fn check_order(n: u128) -> Result<()> {
    if n > MAX_ORDER as u128 {
        return Err(Error::ResourceGuard { what: "group order".into(), requested: n, cap: MAX_ORDER as u128 });
    }
    Ok(())
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let c1 = make_group("C1").unwrap();
        assert_eq!(c1.table(), vec![vec![0]]);
        let c2 = make_group("C2").unwrap();
        assert_eq!(c2.table(), vec![vec![0, 1], vec![1, 0]]);
        let v4 = make_group("C2xC2").unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.elements().all(|g| v4.inv(g) == g));
    }

    #[test]
    fn orders() {
        for (spec, n) in [("C7", 7), ("D4", 8), ("D3", 6), ("S3", 6), ("S4", 24), ("S5", 120), ("Q8", 8), ("C2xS3", 12), ("C3xC3", 9)] {
            assert_eq!(make_group(spec).unwrap().order(), n, "{spec}");
        }
    }

    #[test]
    fn order_two_elements() {
        assert!(make_group("C2").unwrap().has_element_of_order_two());
        assert!(!make_group("C3").unwrap().has_element_of_order_two());
        assert!(make_group("D4").unwrap().has_element_of_order_two());
        assert!(!make_group("C1").unwrap().has_element_of_order_two());
        assert!(!make_group("C3xC5").unwrap().has_element_of_order_two());
        // -1 is the only involution of Q8
        let q8 = make_group("Q8").unwrap();
        assert_eq!(q8.elements().filter(|&g| g != 0 && q8.mul(g, g) == 0).collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn non_abelian_families() {
        assert!(!make_group("S3").unwrap().is_abelian());
        assert!(!make_group("D4").unwrap().is_abelian());
        assert!(!make_group("Q8").unwrap().is_abelian());
        assert!(make_group("D2").unwrap().is_abelian());
        assert!(make_group("C4xC2").unwrap().is_abelian());
    }

    #[test]
    fn dihedral_relations() {
        let d = make_group("D5").unwrap();
        let (r, s) = (1, 5);
        assert_eq!(d.element_order(r), 5);
        assert_eq!(d.element_order(s), 2);
        // s r s^-1 = r^-1
        assert_eq!(d.mul(d.mul(s, r), d.inv(s)), d.inv(r));
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "C", "C0", "X3", "C2x", "c2", "C-1", "Q4", "Cx2"] {
            assert!(matches!(make_group(bad), Err(Error::Parse(_))), "{bad}");
        }
        assert!(make_group("S6").unwrap_err().is_guard());
        assert!(make_group("C600").unwrap_err().is_guard());
        assert!(make_group("C20xC30").unwrap_err().is_guard());
    }

    #[test]
    fn bad_tables_rejected() {
        assert!(FinGroup::from_table(vec![vec![0, 1], vec![1, 1]], "bad").is_err());
        assert!(FinGroup::from_table(vec![vec![1, 0], vec![0, 1]], "bad").is_err());
        // a non-associative loop of order 5
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(FinGroup::from_table(loop5, "loop").is_err());
    }

    #[test]
    fn json_export() {
        let v = make_group("C2").unwrap().to_json();
        assert_eq!(v["order"], 2);
        assert_eq!(v["label"], "C2");
        assert_eq!(v["table"], serde_json::json!([[0, 1], [1, 0]]));
    }

    #[test]
    fn lexicographic_permutations() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p[0], vec![0, 1, 2]);
        assert_eq!(p[5], vec![2, 1, 0]);
    }
}
