//! Finite monoids given by a Cayley table.
//!
//! `table[i * order + j]` is the index of `x_i * x_j`. Every document read or
//! written by this module uses the same row-major convention.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` accepted by [`FiniteMonoid::transformation`] unless the caller
/// passes a larger bound explicitly.
pub const DEFAULT_TRANSFORMATION_BOUND: usize = 5;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    names: Option<Vec<String>>,
}

impl std::fmt::Debug for FiniteMonoid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteMonoid")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

/// On-disk form of a finite monoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidDocument {
    pub order: usize,
    /// Row-major, length `order * order`; entry `k` at `(i, j)` means `x_i * x_j = x_k`.
    pub table: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl FiniteMonoid {
    /// Validates a Cayley table and builds the monoid.
    ///
    /// The identity is detected from the table; if `identity` is given it must
    /// agree with the detected one.
    pub fn from_table(
        order: usize,
        table: &[usize],
        identity: Option<usize>,
        names: Option<Vec<String>>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::MalformedTable("order must be positive".into()));
        }
        if order > u32::MAX as usize {
            return Err(Error::MalformedTable("order too large".into()));
        }
        if table.len() != order * order {
            return Err(Error::MalformedTable(format!(
                "expected {} entries for order {}, found {}",
                order * order,
                order,
                table.len()
            )));
        }
        if let Some((pos, &v)) = table.iter().enumerate().find(|(_, &v)| v >= order) {
            return Err(Error::MalformedTable(format!(
                "entry ({}, {}) = {} is out of range 0..{}",
                pos / order,
                pos % order,
                v,
                order
            )));
        }
        if let Some(names) = &names {
            if names.len() != order {
                return Err(Error::MalformedTable(format!(
                    "{} names given for order {}",
                    names.len(),
                    order
                )));
            }
        }
        let table: Vec<u32> = table.iter().map(|&v| v as u32).collect();
        let detected = detect_identity(order, &table);
        let identity = match (identity, detected) {
            (_, None) => return Err(Error::NoIdentity),
            (Some(d), Some(e)) if d != e => {
                return Err(Error::WrongIdentity {
                    declared: d,
                    detected: Some(e),
                })
            }
            (_, Some(e)) => e,
        };
        let m = FiniteMonoid {
            order,
            table,
            identity,
            names,
        };
        if let Some((a, b, c)) = m.associativity_witness() {
            return Err(Error::NotAssociative(a, b, c));
        }
        Ok(m)
    }

    /// Builds a monoid from a table already known to be valid.
    pub(crate) fn from_parts(
        order: usize,
        table: Vec<u32>,
        identity: usize,
        names: Option<Vec<String>>,
    ) -> Self {
        debug_assert_eq!(table.len(), order * order);
        FiniteMonoid {
            order,
            table,
            identity,
            names,
        }
    }

    pub fn from_document(doc: &MonoidDocument) -> Result<Self> {
        Self::from_table(doc.order, &doc.table, doc.identity, doc.names.clone())
    }

    /// Parses a JSON monoid document. Syntax errors carry line and column.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: MonoidDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_document(&doc)
    }

    pub fn to_document(&self) -> MonoidDocument {
        MonoidDocument {
            order: self.order,
            table: self.table.iter().map(|&v| v as usize).collect(),
            identity: Some(self.identity),
            names: self.names.clone(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j] as usize
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, i: usize) -> String {
        match &self.names {
            Some(n) => n[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.order);
        self.names = Some(names);
        self
    }

    /// First triple `(a, b, c)` with `(ab)c != a(bc)`, if any.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<u32> {
        (0..self.order)
            .filter(|&x| self.is_idempotent(x))
            .map(|x| x as u32)
            .collect()
    }

    /// Elements `x` with `a x = 1` for some `a`.
    pub fn left_units(&self) -> Vec<u32> {
        let one = self.identity;
        (0..self.order)
            .filter(|&x| (0..self.order).any(|a| self.mul(a, x) == one))
            .map(|x| x as u32)
            .collect()
    }

    /// Elements `x` with `x a = 1` for some `a`.
    pub fn right_units(&self) -> Vec<u32> {
        let one = self.identity;
        (0..self.order)
            .filter(|&x| (0..self.order).any(|a| self.mul(x, a) == one))
            .map(|x| x as u32)
            .collect()
    }

    /// Smallest submonoid containing `candidates`.
    ///
    /// Generators are picked greedily: a candidate already produced by the
    /// earlier ones is skipped, which keeps the generator list short when the
    /// candidate set is a large submonoid. Returns a sorted index list.
    pub fn closure<I>(&self, candidates: I) -> Vec<u32>
    where
        I: IntoIterator<Item = usize>,
    {
        self.closure_with_generators(candidates).0
    }

    /// A generating set of the whole monoid, chosen greedily in index order.
    pub fn generating_set(&self) -> Vec<usize> {
        self.closure_with_generators(0..self.order).1
    }

    /// [`FiniteMonoid::closure`] together with the generators it kept.
    pub fn closure_with_generators<I>(&self, candidates: I) -> (Vec<u32>, Vec<usize>)
    where
        I: IntoIterator<Item = usize>,
    {
        let n = self.order;
        let mut member = vec![false; n];
        let mut elems: Vec<usize> = vec![self.identity];
        member[self.identity] = true;
        let mut gens: Vec<usize> = Vec::new();
        for c in candidates {
            if member[c] {
                continue;
            }
            gens.push(c);
            // Every element of the old closure may combine with the new generator.
            let mut queue: Vec<usize> = elems.clone();
            member[c] = true;
            elems.push(c);
            queue.push(c);
            while let Some(x) = queue.pop() {
                for &g in &gens {
                    let y = self.mul(x, g);
                    if !member[y] {
                        member[y] = true;
                        elems.push(y);
                        queue.push(y);
                    }
                }
            }
        }
        let mut out: Vec<u32> = elems.into_iter().map(|x| x as u32).collect();
        out.sort_unstable();
        (out, gens)
    }

    /// True if `set` contains the identity and is closed under the product.
    pub fn is_submonoid(&self, set: &[u32]) -> bool {
        let mut member = vec![false; self.order];
        for &x in set {
            member[x as usize] = true;
        }
        member[self.identity]
            && set.iter().all(|&x| {
                set.iter()
                    .all(|&y| member[self.mul(x as usize, y as usize)])
            })
    }

    /// The submonoid on `elems` (sorted) with the induced product, re-indexed
    /// in the order of `elems`.
    pub fn sub_monoid(&self, elems: &[u32]) -> Result<FiniteMonoid> {
        let mut index = vec![u32::MAX; self.order];
        for (k, &x) in elems.iter().enumerate() {
            index[x as usize] = k as u32;
        }
        if index[self.identity] == u32::MAX {
            return Err(Error::NotClosed);
        }
        let k = elems.len();
        let mut table = Vec::with_capacity(k * k);
        for &x in elems {
            for &y in elems {
                let z = index[self.mul(x as usize, y as usize)];
                if z == u32::MAX {
                    return Err(Error::NotClosed);
                }
                table.push(z);
            }
        }
        let names = self
            .names
            .as_ref()
            .map(|n| elems.iter().map(|&x| n[x as usize].clone()).collect());
        Ok(FiniteMonoid::from_parts(
            k,
            table,
            index[self.identity] as usize,
            names,
        ))
    }

    /// Componentwise product; the pair `(i, j)` gets index `i * other.order + j`.
    pub fn direct_product(&self, other: &FiniteMonoid) -> FiniteMonoid {
        let (m, n) = (self.order, other.order);
        let order = m * n;
        let mut table = Vec::with_capacity(order * order);
        for i1 in 0..m {
            for j1 in 0..n {
                for i2 in 0..m {
                    let r = self.mul(i1, i2) * n;
                    for j2 in 0..n {
                        table.push((r + other.mul(j1, j2)) as u32);
                    }
                }
            }
        }
        let identity = self.identity * n + other.identity;
        let names = match (&self.names, &other.names) {
            (None, None) => None,
            _ => {
                let mut v = Vec::with_capacity(order);
                for i in 0..m {
                    for j in 0..n {
                        v.push(format!("({},{})", self.name(i), other.name(j)));
                    }
                }
                Some(v)
            }
        };
        FiniteMonoid::from_parts(order, table, identity, names)
    }

    /// Adjoins a new zero, which receives index `order`.
    pub fn adjoin_zero(&self) -> FiniteMonoid {
        let n = self.order;
        let z = n as u32;
        let mut table = Vec::with_capacity((n + 1) * (n + 1));
        for i in 0..n {
            table.extend_from_slice(&self.table[i * n..(i + 1) * n]);
            table.push(z);
        }
        table.extend(std::iter::repeat_n(z, n + 1));
        let names = self.names.clone().map(|mut v| {
            v.push("0".into());
            v
        });
        FiniteMonoid::from_parts(n + 1, table, self.identity, names)
    }

    pub fn trivial() -> FiniteMonoid {
        FiniteMonoid::from_parts(1, vec![0], 0, Some(vec!["1".into()]))
    }

    /// The cyclic group of order `k`.
    pub fn cyclic_group(k: usize) -> Result<FiniteMonoid> {
        if k == 0 {
            return Err(Error::BadParams {
                family: "cyclic".into(),
                reason: "order must be positive".into(),
            });
        }
        let table = (0..k * k).map(|p| ((p / k + p % k) % k) as u32).collect();
        let names = (0..k)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        Ok(FiniteMonoid::from_parts(k, table, 0, Some(names)))
    }

    /// The chain `1 > e1 > ... > e(k-1)` of `k` idempotents under meet.
    pub fn semilattice_chain(k: usize) -> Result<FiniteMonoid> {
        if k == 0 {
            return Err(Error::BadParams {
                family: "chain".into(),
                reason: "length must be positive".into(),
            });
        }
        let table = (0..k * k).map(|p| (p / k).max(p % k) as u32).collect();
        let names = (0..k)
            .map(|i| if i == 0 { "1".to_string() } else { format!("e{i}") })
            .collect();
        Ok(FiniteMonoid::from_parts(k, table, 0, Some(names)))
    }

    /// The full transformation monoid on `{0, .., n-1}` with the default bound.
    pub fn transformation(n: usize) -> Result<FiniteMonoid> {
        Self::transformation_bounded(n, DEFAULT_TRANSFORMATION_BOUND)
    }

    /// All self-maps of `{0, .., n-1}`, composed right to left: `(f g)(x) = f(g(x))`.
    ///
    /// The map `f` has index `sum f(i) * n^i`.
    pub fn transformation_bounded(n: usize, bound: usize) -> Result<FiniteMonoid> {
        if n == 0 {
            return Err(Error::BadParams {
                family: "Tn".into(),
                reason: "degree must be positive".into(),
            });
        }
        if n > bound {
            return Err(Error::BoundExceeded {
                what: "transformation degree",
                value: n,
                bound,
            });
        }
        let order = n.pow(n as u32);
        let maps: Vec<Vec<usize>> = (0..order).map(|idx| decode_map(idx, n)).collect();
        let encode = |img: &[usize]| img.iter().rev().fold(0, |acc, &v| acc * n + v);
        let mut table = Vec::with_capacity(order * order);
        let mut img = vec![0usize; n];
        for f in &maps {
            for g in &maps {
                for x in 0..n {
                    img[x] = f[g[x]];
                }
                table.push(encode(&img) as u32);
            }
        }
        let id: Vec<usize> = (0..n).collect();
        let identity = encode(&id);
        let names = maps
            .iter()
            .map(|f| {
                let parts: Vec<String> = f.iter().map(|v| v.to_string()).collect();
                format!("[{}]", parts.join(","))
            })
            .collect();
        Ok(FiniteMonoid::from_parts(order, table, identity, Some(names)))
    }

    /// The singular maps of degree `n` together with the identity.
    pub fn singular_plus_identity(n: usize, bound: usize) -> Result<FiniteMonoid> {
        let t = Self::transformation_bounded(n, bound)?;
        let elems: Vec<u32> = (0..t.order())
            .filter(|&idx| idx == t.identity() || !is_bijection(&decode_map(idx, n)))
            .map(|idx| idx as u32)
            .collect();
        t.sub_monoid(&elems)
    }
}

pub(crate) fn decode_map(mut idx: usize, n: usize) -> Vec<usize> {
    let mut f = Vec::with_capacity(n);
    for _ in 0..n {
        f.push(idx % n);
        idx /= n;
    }
    f
}

fn is_bijection(f: &[usize]) -> bool {
    let mut seen = vec![false; f.len()];
    f.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
}

fn detect_identity(order: usize, table: &[u32]) -> Option<usize> {
    (0..order).find(|&e| {
        (0..order).all(|i| table[e * order + i] as usize == i && table[i * order + e] as usize == i)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_z2_load() {
        let t = FiniteMonoid::from_table(1, &[0], None, None).unwrap();
        assert_eq!(t.identity(), 0);
        let z2 = FiniteMonoid::from_table(2, &[0, 1, 1, 0], None, None).unwrap();
        assert_eq!(z2.identity(), 0);
        assert_eq!(z2.mul(1, 1), 0);
    }

    #[test]
    fn corrupted_z2_has_no_identity() {
        let err = FiniteMonoid::from_table(2, &[0, 1, 0, 0], None, None).unwrap_err();
        assert_eq!(err, Error::NoIdentity);
    }

    #[test]
    fn malformed_tables() {
        assert!(matches!(
            FiniteMonoid::from_table(2, &[0, 1, 1], None, None),
            Err(Error::MalformedTable(_))
        ));
        assert!(matches!(
            FiniteMonoid::from_table(2, &[0, 1, 1, 2], None, None),
            Err(Error::MalformedTable(_))
        ));
        assert!(matches!(
            FiniteMonoid::from_table(0, &[], None, None),
            Err(Error::MalformedTable(_))
        ));
    }

    #[test]
    fn non_associative_table_reports_witness() {
        // identity 0; 1*1 = 2, 1*2 = 1, 2*1 = 2, 2*2 = 2
        let table = [0, 1, 2, 1, 2, 1, 2, 2, 2];
        match FiniteMonoid::from_table(3, &table, None, None) {
            Err(Error::NotAssociative(a, b, c)) => {
                let m = FiniteMonoid::from_parts(3, table.iter().map(|&v| v as u32).collect(), 0, None);
                assert_ne!(m.mul(m.mul(a, b), c), m.mul(a, m.mul(b, c)));
            }
            other => panic!("expected NotAssociative, got {other:?}"),
        }
    }

    #[test]
    fn declared_identity_is_cross_checked() {
        let err = FiniteMonoid::from_table(2, &[0, 1, 1, 0], Some(1), None).unwrap_err();
        assert!(matches!(err, Error::WrongIdentity { declared: 1, .. }));
    }

    #[test]
    fn json_errors_carry_position() {
        let err = FiniteMonoid::from_json("{\"order\": 2,\n \"table\": [0, 1,, 1]}").unwrap_err();
        match err {
            Error::Parse(msg) => assert!(msg.contains("line 2"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn document_round_trip() {
        let t3 = FiniteMonoid::transformation(2).unwrap();
        let doc = t3.to_document();
        let text = serde_json::to_string(&doc).unwrap();
        let back = FiniteMonoid::from_json(&text).unwrap();
        assert_eq!(back, t3);
    }

    #[test]
    fn transformation_bound() {
        assert!(matches!(
            FiniteMonoid::transformation(6),
            Err(Error::BoundExceeded { .. })
        ));
        assert!(matches!(
            FiniteMonoid::transformation_bounded(4, 3),
            Err(Error::BoundExceeded { .. })
        ));
        assert_eq!(FiniteMonoid::transformation_bounded(4, 4).unwrap().order(), 256);
    }

    #[test]
    fn transformation_small_cases() {
        let t1 = FiniteMonoid::transformation(1).unwrap();
        assert_eq!(t1.order(), 1);
        let t2 = FiniteMonoid::transformation(2).unwrap();
        assert_eq!(t2.order(), 4);
        assert_eq!(t2.idempotents().len(), 3);
        let t3 = FiniteMonoid::transformation(3).unwrap();
        assert_eq!(t3.order(), 27);
        assert_eq!(t3.idempotents().len(), 10);
        assert_eq!(t3.left_units().len(), 6);
        assert_eq!(t3.right_units().len(), 6);
    }

    #[test]
    fn transformation_composes_right_to_left() {
        let t2 = FiniteMonoid::transformation(2).unwrap();
        // f = [1,1] (constant 1, index 1 + 2 = 3), g = [1,0] (swap, index 1)
        let f = 3;
        let g = 1;
        // f(g(x)) is constant 1, g(f(x)) is constant 0
        assert_eq!(decode_map(t2.mul(f, g), 2), vec![1, 1]);
        assert_eq!(decode_map(t2.mul(g, f), 2), vec![0, 0]);
    }

    #[test]
    fn adjoin_zero_preserves_original_table() {
        let z3 = FiniteMonoid::cyclic_group(3).unwrap();
        let z = z3.adjoin_zero();
        assert_eq!(z.order(), 4);
        for i in 0..3 {
            assert_eq!(z.mul(i, 3), 3);
            assert_eq!(z.mul(3, i), 3);
            for j in 0..3 {
                assert_eq!(z.mul(i, j), z3.mul(i, j));
            }
        }
        let restricted = z.sub_monoid(&[0, 1, 2]).unwrap();
        assert_eq!(restricted.table, z3.table);
    }

    #[test]
    fn closure_of_nothing_is_identity() {
        let z2 = FiniteMonoid::cyclic_group(2).unwrap();
        assert_eq!(z2.closure([]), vec![0]);
        assert_eq!(z2.closure([1]), vec![0, 1]);
    }

    #[test]
    fn singular_plus_identity_order() {
        let s3 = FiniteMonoid::singular_plus_identity(3, 5).unwrap();
        assert_eq!(s3.order(), 22);
        assert!(s3.associativity_witness().is_none());
    }

    #[test]
    fn sub_monoid_rejects_open_sets() {
        let z3 = FiniteMonoid::cyclic_group(3).unwrap();
        assert_eq!(z3.sub_monoid(&[0, 1]).unwrap_err(), Error::NotClosed);
        assert_eq!(z3.sub_monoid(&[1, 2]).unwrap_err(), Error::NotClosed);
    }
}
