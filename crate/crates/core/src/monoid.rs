//! The uniform monoid abstraction: finite tables, symbolic catalog entries of
//! `B^0`, and direct products of those.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finite::FiniteMonoid;
use crate::symbolic::{generated_entry, BicyclicElement, CatalogSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoidRef {
    Finite(Arc<FiniteMonoid>),
    /// A catalog entry of `B^0` with the induced product.
    Symbolic(CatalogSet),
    /// At least two factors, none of them a product.
    Product(Vec<MonoidRef>),
}

/// An element of a [`MonoidRef`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Finite(usize),
    Bicyclic(BicyclicElement),
    Tuple(Vec<Element>),
}

/// A subset of a monoid in the representation its backend understands.
///
/// Finite sets are sorted index lists, symbolic sets are catalog entries and
/// product sets are tuples of component sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubSet {
    Finite(Vec<u32>),
    Catalog(CatalogSet),
    Product(Vec<SubSet>),
}

/// A submonoid together with the monoid it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmonoidHandle {
    pub parent: MonoidRef,
    pub set: SubSet,
}

impl SubmonoidHandle {
    pub fn is_subset_of(&self, other: &SubmonoidHandle) -> bool {
        self.parent.is_subset(&self.set, &other.set)
    }

    pub fn describe(&self) -> String {
        self.parent.describe_set(&self.set)
    }

    /// Number of elements, `None` when infinite. Never zero: the identity is
    /// always a member.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> Option<usize> {
        self.parent.set_len(&self.set)
    }
}

impl fmt::Display for SubmonoidHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

impl MonoidRef {
    pub fn finite(m: FiniteMonoid) -> Self {
        MonoidRef::Finite(Arc::new(m))
    }

    pub fn trivial() -> Self {
        MonoidRef::finite(FiniteMonoid::trivial())
    }

    /// The free monogenic monoid, realised as `<a>` inside `B`.
    pub fn monogenic() -> Self {
        MonoidRef::Symbolic(CatalogSet::NAT)
    }

    pub fn bicyclic() -> Self {
        MonoidRef::Symbolic(CatalogSet::BICYCLIC)
    }

    pub fn bicyclic_zero() -> Self {
        MonoidRef::Symbolic(CatalogSet::BICYCLIC_ZERO)
    }

    /// Direct product. Nested products are flattened, the empty product is
    /// the trivial monoid and a single factor is returned unchanged.
    pub fn product(factors: Vec<MonoidRef>) -> Self {
        let mut flat = Vec::with_capacity(factors.len());
        for f in factors {
            match f {
                MonoidRef::Product(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => MonoidRef::trivial(),
            1 => flat.pop().unwrap(),
            _ => MonoidRef::Product(flat),
        }
    }

    pub fn factors(&self) -> &[MonoidRef] {
        match self {
            MonoidRef::Product(f) => f,
            _ => std::slice::from_ref(self),
        }
    }

    pub fn as_finite(&self) -> Option<&FiniteMonoid> {
        match self {
            MonoidRef::Finite(m) => Some(m),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            MonoidRef::Finite(_) => true,
            MonoidRef::Symbolic(s) => s.is_finite(),
            MonoidRef::Product(f) => f.iter().all(|m| m.is_finite()),
        }
    }

    /// Number of elements, `None` if infinite.
    pub fn order(&self) -> Option<usize> {
        self.set_len(&self.whole())
    }

    /// A finite table for this monoid, when every factor is a finite table.
    ///
    /// Product elements are indexed lexicographically with the last factor
    /// varying fastest.
    pub fn materialize(&self) -> Option<FiniteMonoid> {
        match self {
            MonoidRef::Finite(m) => Some((**m).clone()),
            MonoidRef::Symbolic(_) => None,
            MonoidRef::Product(f) => {
                let mut acc = f[0].as_finite()?.clone();
                for m in &f[1..] {
                    acc = acc.direct_product(m.as_finite()?);
                }
                Some(acc)
            }
        }
    }

    /// Index set in [`MonoidRef::materialize`] of a set of this monoid.
    pub fn materialize_set(&self, s: &SubSet) -> Option<Vec<u32>> {
        match (self, s) {
            (MonoidRef::Finite(_), SubSet::Finite(v)) => Some(v.clone()),
            (MonoidRef::Product(f), SubSet::Product(parts)) => {
                let mut acc: Vec<u32> = vec![0];
                for (m, p) in f.iter().zip(parts) {
                    let n = m.as_finite()?.order() as u32;
                    let SubSet::Finite(v) = p else { return None };
                    acc = acc
                        .iter()
                        .flat_map(|&a| v.iter().map(move |&b| a * n + b))
                        .collect();
                }
                acc.sort_unstable();
                Some(acc)
            }
            _ => None,
        }
    }

    pub fn adjoin_zero(&self) -> Result<MonoidRef> {
        match self {
            MonoidRef::Finite(m) => Ok(MonoidRef::finite(m.adjoin_zero())),
            MonoidRef::Symbolic(s) if !s.zero => {
                Ok(MonoidRef::Symbolic(CatalogSet::new(s.region, true)))
            }
            MonoidRef::Symbolic(_) => Err(Error::BackendUnsupported(
                "adjoining a second zero to a symbolic monoid".into(),
            )),
            MonoidRef::Product(_) => match self.materialize() {
                Some(m) => Ok(MonoidRef::finite(m.adjoin_zero())),
                None => Err(Error::BackendUnsupported(
                    "adjoining a zero to a product with a symbolic factor".into(),
                )),
            },
        }
    }

    pub fn identity_set(&self) -> SubSet {
        match self {
            MonoidRef::Finite(m) => SubSet::Finite(vec![m.identity() as u32]),
            MonoidRef::Symbolic(_) => SubSet::Catalog(CatalogSet::ONE),
            MonoidRef::Product(f) => SubSet::Product(f.iter().map(|m| m.identity_set()).collect()),
        }
    }

    pub fn whole(&self) -> SubSet {
        match self {
            MonoidRef::Finite(m) => SubSet::Finite((0..m.order() as u32).collect()),
            MonoidRef::Symbolic(s) => SubSet::Catalog(*s),
            MonoidRef::Product(f) => SubSet::Product(f.iter().map(|m| m.whole()).collect()),
        }
    }

    pub fn handle(&self, set: SubSet) -> SubmonoidHandle {
        SubmonoidHandle {
            parent: self.clone(),
            set,
        }
    }

    /// `a ⊆ b`.
    pub fn is_subset(&self, a: &SubSet, b: &SubSet) -> bool {
        match (self, a, b) {
            (MonoidRef::Finite(_), SubSet::Finite(x), SubSet::Finite(y)) => is_sorted_subset(x, y),
            (MonoidRef::Symbolic(_), SubSet::Catalog(x), SubSet::Catalog(y)) => x.is_within(*y),
            (MonoidRef::Product(f), SubSet::Product(x), SubSet::Product(y)) => f
                .iter()
                .zip(x.iter().zip(y))
                .all(|(m, (p, q))| m.is_subset(p, q)),
            _ => panic!("subset representation does not match its monoid"),
        }
    }

    pub fn intersect(&self, a: &SubSet, b: &SubSet) -> SubSet {
        match (self, a, b) {
            (MonoidRef::Finite(_), SubSet::Finite(x), SubSet::Finite(y)) => {
                SubSet::Finite(x.iter().copied().filter(|v| y.binary_search(v).is_ok()).collect())
            }
            (MonoidRef::Symbolic(_), SubSet::Catalog(x), SubSet::Catalog(y)) => {
                SubSet::Catalog(x.meet(*y))
            }
            (MonoidRef::Product(f), SubSet::Product(x), SubSet::Product(y)) => SubSet::Product(
                f.iter()
                    .zip(x.iter().zip(y))
                    .map(|(m, (p, q))| m.intersect(p, q))
                    .collect(),
            ),
            _ => panic!("subset representation does not match its monoid"),
        }
    }

    /// The submonoid generated by `a ∪ b`.
    ///
    /// Product sets are boxes `S1 × S2 × ...` containing the identity, so
    /// their join is the componentwise join.
    pub fn join(&self, a: &SubSet, b: &SubSet) -> SubSet {
        match (self, a, b) {
            (MonoidRef::Finite(m), SubSet::Finite(x), SubSet::Finite(y)) => SubSet::Finite(
                m.closure(x.iter().chain(y).map(|&v| v as usize)),
            ),
            (MonoidRef::Symbolic(_), SubSet::Catalog(x), SubSet::Catalog(y)) => {
                SubSet::Catalog(x.join(*y))
            }
            (MonoidRef::Product(f), SubSet::Product(x), SubSet::Product(y)) => SubSet::Product(
                f.iter()
                    .zip(x.iter().zip(y))
                    .map(|(m, (p, q))| m.join(p, q))
                    .collect(),
            ),
            _ => panic!("subset representation does not match its monoid"),
        }
    }

    /// The submonoid generated by a set.
    pub fn close(&self, a: &SubSet) -> SubSet {
        self.join(a, &self.identity_set())
    }

    pub fn set_len(&self, s: &SubSet) -> Option<usize> {
        match s {
            SubSet::Finite(v) => Some(v.len()),
            SubSet::Catalog(c) => match (c.is_finite(), c.zero) {
                (true, z) => Some(1 + z as usize),
                (false, _) => None,
            },
            SubSet::Product(parts) => {
                let f = self.factors();
                parts
                    .iter()
                    .zip(f)
                    .try_fold(1usize, |acc, (p, m)| Some(acc * m.set_len(p)?))
            }
        }
    }

    pub fn describe_set(&self, s: &SubSet) -> String {
        match (self, s) {
            (MonoidRef::Finite(m), SubSet::Finite(v)) => {
                let names: Vec<String> = v.iter().map(|&x| m.name(x as usize)).collect();
                format!("{{{}}}", names.join(", "))
            }
            (MonoidRef::Symbolic(_), SubSet::Catalog(c)) => c.to_string(),
            (MonoidRef::Product(f), SubSet::Product(parts)) => f
                .iter()
                .zip(parts)
                .map(|(m, p)| m.describe_set(p))
                .collect::<Vec<_>>()
                .join(" × "),
            _ => panic!("subset representation does not match its monoid"),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            MonoidRef::Finite(m) => format!("finite monoid of order {}", m.order()),
            MonoidRef::Symbolic(s) => match *s {
                CatalogSet::NAT => "free monogenic monoid ⟨a⟩".to_string(),
                CatalogSet::BICYCLIC => "bicyclic monoid B".to_string(),
                CatalogSet::BICYCLIC_ZERO => "bicyclic monoid with zero B^0".to_string(),
                other => format!("submonoid {other} of B^0"),
            },
            MonoidRef::Product(f) => f
                .iter()
                .map(|m| format!("({})", m.describe()))
                .collect::<Vec<_>>()
                .join(" × "),
        }
    }

    /// Checks that a set is a submonoid and wraps it.
    pub fn submonoid(&self, set: SubSet) -> Result<SubmonoidHandle> {
        let ok = match (self, &set) {
            (MonoidRef::Finite(m), SubSet::Finite(v)) => {
                v.windows(2).all(|w| w[0] < w[1])
                    && v.last().is_none_or(|&x| (x as usize) < m.order())
                    && m.is_submonoid(v)
            }
            (MonoidRef::Symbolic(p), SubSet::Catalog(c)) => c.is_within(*p),
            (MonoidRef::Product(f), SubSet::Product(parts)) => {
                parts.len() == f.len()
                    && f.iter()
                        .zip(parts)
                        .all(|(m, p)| m.submonoid(p.clone()).is_ok())
            }
            _ => false,
        };
        if ok {
            Ok(self.handle(set))
        } else {
            Err(Error::NotClosed)
        }
    }

    /// The submonoid generated by explicit elements.
    pub fn generated_submonoid(&self, gens: &[Element]) -> Result<SubmonoidHandle> {
        match self {
            MonoidRef::Finite(m) => {
                let mut idx = Vec::with_capacity(gens.len());
                for g in gens {
                    match g {
                        Element::Finite(i) if *i < m.order() => idx.push(*i),
                        _ => {
                            return Err(Error::BadParams {
                                family: "generators".into(),
                                reason: format!("{g:?} is not an element of this monoid"),
                            })
                        }
                    }
                }
                Ok(self.handle(SubSet::Finite(m.closure(idx))))
            }
            MonoidRef::Symbolic(p) => {
                let mut elems = Vec::with_capacity(gens.len());
                for g in gens {
                    match g {
                        Element::Bicyclic(x) => elems.push(*x),
                        _ => {
                            return Err(Error::BadParams {
                                family: "generators".into(),
                                reason: format!("{g:?} is not an element of this monoid"),
                            })
                        }
                    }
                }
                generated_entry(*p, &elems)
                    .map(|c| self.handle(SubSet::Catalog(c)))
                    .ok_or(Error::NotInCatalog)
            }
            MonoidRef::Product(_) => Err(Error::BackendUnsupported(
                "generated submonoids of product monoids".into(),
            )),
        }
    }

    /// The monoid on a submonoid with the induced product.
    pub fn restrict(&self, s: &SubSet) -> Result<Restriction> {
        match (self, s) {
            (MonoidRef::Finite(m), SubSet::Finite(v)) => {
                if v.len() == m.order() {
                    return Ok(Restriction {
                        monoid: self.clone(),
                        embed: Embedding::Identity,
                    });
                }
                let sub = m.sub_monoid(v)?;
                Ok(Restriction {
                    monoid: MonoidRef::finite(sub),
                    embed: Embedding::Finite(v.clone()),
                })
            }
            (MonoidRef::Symbolic(p), SubSet::Catalog(c)) => {
                if !c.is_within(*p) {
                    return Err(Error::NotClosed);
                }
                Ok(Restriction {
                    monoid: MonoidRef::Symbolic(*c),
                    embed: Embedding::Identity,
                })
            }
            (MonoidRef::Product(f), SubSet::Product(parts)) if parts.len() == f.len() => {
                let rs = f
                    .iter()
                    .zip(parts)
                    .map(|(m, p)| m.restrict(p))
                    .collect::<Result<Vec<_>>>()?;
                let (monoids, embeds): (Vec<_>, Vec<_>) =
                    rs.into_iter().map(|r| (r.monoid, r.embed)).unzip();
                Ok(Restriction {
                    monoid: MonoidRef::Product(monoids),
                    embed: Embedding::Product(embeds),
                })
            }
            _ => Err(Error::NotClosed),
        }
    }
}

/// A monoid obtained by restricting to a submonoid, with the map that sends
/// its subsets back into the parent.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub monoid: MonoidRef,
    embed: Embedding,
}

#[derive(Clone, Debug)]
enum Embedding {
    Identity,
    Finite(Vec<u32>),
    Product(Vec<Embedding>),
}

impl Restriction {
    pub fn lift(&self, s: &SubSet) -> SubSet {
        lift(&self.embed, s)
    }
}

fn lift(embed: &Embedding, s: &SubSet) -> SubSet {
    match (embed, s) {
        (Embedding::Identity, s) => s.clone(),
        (Embedding::Finite(map), SubSet::Finite(v)) => {
            // `map` is sorted, so the image stays sorted.
            SubSet::Finite(v.iter().map(|&i| map[i as usize]).collect())
        }
        (Embedding::Product(es), SubSet::Product(parts)) => {
            SubSet::Product(es.iter().zip(parts).map(|(e, p)| lift(e, p)).collect())
        }
        _ => panic!("subset representation does not match its monoid"),
    }
}

fn is_sorted_subset(x: &[u32], y: &[u32]) -> bool {
    let mut it = y.iter();
    x.iter().all(|v| it.any(|w| w == v))
}
