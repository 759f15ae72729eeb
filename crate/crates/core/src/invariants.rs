//! The fifteen functors evaluated on a monoid, the type quadruple and
//! identity stability.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::functor::FunctorId;
use crate::greens::greens;
use crate::monoid::{MonoidRef, SubSet, SubmonoidHandle};
use crate::symbolic::CatalogSet;

/// The set of idempotents. For finite backends this is usually not a
/// submonoid; for catalog entries it always is.
pub fn idempotents(m: &MonoidRef) -> SubSet {
    match m {
        MonoidRef::Finite(f) => SubSet::Finite(f.idempotents()),
        MonoidRef::Symbolic(c) => SubSet::Catalog(c.idempotents()),
        MonoidRef::Product(fs) => SubSet::Product(fs.iter().map(idempotents).collect()),
    }
}

pub fn left_units(m: &MonoidRef) -> SubSet {
    match m {
        MonoidRef::Finite(f) => SubSet::Finite(f.left_units()),
        MonoidRef::Symbolic(c) => SubSet::Catalog(c.left_units()),
        MonoidRef::Product(fs) => SubSet::Product(fs.iter().map(left_units).collect()),
    }
}

pub fn right_units(m: &MonoidRef) -> SubSet {
    match m {
        MonoidRef::Finite(f) => SubSet::Finite(f.right_units()),
        MonoidRef::Symbolic(c) => SubSet::Catalog(c.right_units()),
        MonoidRef::Product(fs) => SubSet::Product(fs.iter().map(right_units).collect()),
    }
}

pub fn units(m: &MonoidRef) -> SubSet {
    m.intersect(&left_units(m), &right_units(m))
}

/// `X(M)` as a handle.
pub fn apply_functor(x: FunctorId, m: &MonoidRef) -> Result<SubmonoidHandle> {
    Ok(m.handle(functor_set(x, m)?))
}

/// `X(M)` as a bare set of `M`.
pub fn functor_set(x: FunctorId, m: &MonoidRef) -> Result<SubSet> {
    if let Some(base) = x.after_glr() {
        let glr = Primitives::new(m).base(FunctorId::GLR);
        let r = m.restrict(&glr)?;
        let inner = Primitives::new(&r.monoid).base(base);
        return Ok(r.lift(&inner));
    }
    Ok(Primitives::new(m).base(x))
}

/// All fifteen values, indexed by [`FunctorId::index`].
pub fn all_functor_sets(m: &MonoidRef) -> Result<Vec<SubSet>> {
    let p = Primitives::new(m);
    let mut out: Vec<SubSet> = FunctorId::ALL
        .iter()
        .map(|&x| if x.is_base() { p.base(x) } else { SubSet::Finite(Vec::new()) })
        .collect();
    let r = m.restrict(&out[FunctorId::GLR.index()])?;
    let q = Primitives::new(&r.monoid);
    for x in FunctorId::ALL.into_iter().filter(|x| !x.is_base()) {
        out[x.index()] = r.lift(&q.base(x.after_glr().unwrap()));
    }
    Ok(out)
}

/// The raw sets every base functor is built from.
struct Primitives<'a> {
    m: &'a MonoidRef,
    idem: SubSet,
    left: SubSet,
    right: SubSet,
    units: SubSet,
}

impl<'a> Primitives<'a> {
    fn new(m: &'a MonoidRef) -> Self {
        let left = left_units(m);
        let right = right_units(m);
        let units = m.intersect(&left, &right);
        Primitives {
            m,
            idem: idempotents(m),
            left,
            right,
            units,
        }
    }

    fn base(&self, x: FunctorId) -> SubSet {
        use FunctorId::*;
        let m = self.m;
        let gen = |sets: &[&SubSet]| {
            sets.iter()
                .fold(m.identity_set(), |acc, s| m.join(&acc, s))
        };
        match x {
            O => m.identity_set(),
            I => m.whole(),
            E => gen(&[&self.idem]),
            G => self.units.clone(),
            GL => self.left.clone(),
            GR => self.right.clone(),
            GLR => gen(&[&self.left, &self.right]),
            F => gen(&[&self.idem, &self.units]),
            FL => gen(&[&self.idem, &self.left]),
            FR => gen(&[&self.idem, &self.right]),
            FLR => gen(&[&self.idem, &self.left, &self.right]),
            Q | P | PL | PR => unreachable!("not a base functor"),
        }
    }
}

/// The type quadruple `(t1, t2, t3, t4)`:
/// `[G = G_L]`, `[F_LR = M]`, `[F_LR = G_LR]`, `[G = {1}]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonoidType {
    pub t1: bool,
    pub t2: bool,
    pub t3: bool,
    pub t4: bool,
}

impl MonoidType {
    pub const fn new(t1: bool, t2: bool, t3: bool, t4: bool) -> Self {
        MonoidType { t1, t2, t3, t4 }
    }

    pub fn from_bits(bits: [u8; 4]) -> Self {
        MonoidType::new(bits[0] != 0, bits[1] != 0, bits[2] != 0, bits[3] != 0)
    }

    pub fn bits(self) -> [u8; 4] {
        [self.t1 as u8, self.t2 as u8, self.t3 as u8, self.t4 as u8]
    }

    /// All sixteen types, `(0,0,0,0)` first.
    pub fn all() -> impl Iterator<Item = MonoidType> {
        (0u8..16).map(|k| MonoidType::from_bits([k >> 3 & 1, k >> 2 & 1, k >> 1 & 1, k & 1]))
    }

    /// Type of a direct product.
    pub fn product(self, other: MonoidType) -> MonoidType {
        MonoidType::new(
            self.t1 && other.t1,
            self.t2 && other.t2,
            self.t3 && other.t3,
            self.t4 && other.t4,
        )
    }

    /// The type of the identity-free trivial product.
    pub const TRIVIAL: MonoidType = MonoidType::new(true, true, true, true);

    pub fn is_stable(self) -> bool {
        self.t1
    }
}

impl fmt::Display for MonoidType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = self.bits();
        write!(f, "({},{},{},{})", b[0], b[1], b[2], b[3])
    }
}

pub fn type_product(a: MonoidType, b: MonoidType) -> MonoidType {
    a.product(b)
}

/// The type, computed from functor values by set equality.
pub fn monoid_type(m: &MonoidRef) -> Result<MonoidType> {
    let v = all_functor_sets(m)?;
    Ok(type_from_sets(&v))
}

pub(crate) fn type_from_sets(v: &[SubSet]) -> MonoidType {
    use FunctorId::*;
    let s = |x: FunctorId| &v[x.index()];
    MonoidType::new(s(G) == s(GL), s(FLR) == s(I), s(FLR) == s(GLR), s(G) == s(O))
}

/// `G = G_L`. On finite tables this is cross-checked against `J_1 = H_1`
/// and a disagreement panics, since it means the engine is broken.
pub fn is_identity_stable(m: &MonoidRef) -> bool {
    match m {
        MonoidRef::Finite(f) => {
            let stable = units(m) == left_units(m);
            let g = greens(f);
            let one = f.identity();
            let j_equals_h = g.j.class(one) == g.h.class(one);
            assert_eq!(stable, j_equals_h, "stability disagrees with Green's relations");
            stable
        }
        MonoidRef::Symbolic(c) => c.left_units() == CatalogSet::ONE,
        MonoidRef::Product(fs) => fs.iter().all(is_identity_stable),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::FiniteMonoid;
    use crate::symbolic::Region;

    fn cat(r: Region, z: bool) -> SubSet {
        SubSet::Catalog(CatalogSet::new(r, z))
    }

    #[test]
    fn bicyclic_table_columns() {
        use FunctorId::*;
        let b = MonoidRef::bicyclic();
        let expect = [
            (O, cat(Region::One, false)),
            (E, cat(Region::Diagonal, false)),
            (G, cat(Region::One, false)),
            (GL, cat(Region::PowA, false)),
            (GR, cat(Region::PowB, false)),
            (GLR, cat(Region::All, false)),
            (F, cat(Region::Diagonal, false)),
            (FL, cat(Region::Upper, false)),
            (FR, cat(Region::Lower, false)),
            (FLR, cat(Region::All, false)),
            (I, cat(Region::All, false)),
            (Q, cat(Region::Diagonal, false)),
            (P, cat(Region::Diagonal, false)),
            (PL, cat(Region::Upper, false)),
            (PR, cat(Region::Lower, false)),
        ];
        for (x, s) in expect {
            assert_eq!(functor_set(x, &b).unwrap(), s, "{x}(B)");
        }
    }

    #[test]
    fn bicyclic_zero_column() {
        use FunctorId::*;
        let b0 = MonoidRef::bicyclic_zero();
        let expect = [
            (E, cat(Region::Diagonal, true)),
            (G, cat(Region::One, false)),
            (GLR, cat(Region::All, false)),
            (F, cat(Region::Diagonal, true)),
            (FL, cat(Region::Upper, true)),
            (FLR, cat(Region::All, true)),
            (I, cat(Region::All, true)),
            (Q, cat(Region::Diagonal, false)),
            (P, cat(Region::Diagonal, false)),
            (PL, cat(Region::Upper, false)),
            (PR, cat(Region::Lower, false)),
        ];
        for (x, s) in expect {
            assert_eq!(functor_set(x, &b0).unwrap(), s, "{x}(B0)");
        }
    }

    #[test]
    fn monogenic_is_almost_trivial() {
        let n = MonoidRef::monogenic();
        for x in FunctorId::ALL {
            let expect = if x == FunctorId::I {
                CatalogSet::NAT
            } else {
                CatalogSet::ONE
            };
            assert_eq!(functor_set(x, &n).unwrap(), SubSet::Catalog(expect));
        }
    }

    #[test]
    fn witness_types() {
        let z2 = MonoidRef::finite(FiniteMonoid::cyclic_group(2).unwrap());
        let chain = MonoidRef::finite(FiniteMonoid::semilattice_chain(2).unwrap());
        assert_eq!(monoid_type(&z2).unwrap().to_string(), "(1,1,1,0)");
        assert_eq!(monoid_type(&chain).unwrap().to_string(), "(1,1,0,1)");
        assert_eq!(monoid_type(&MonoidRef::monogenic()).unwrap().to_string(), "(1,0,1,1)");
        assert_eq!(monoid_type(&MonoidRef::bicyclic()).unwrap().to_string(), "(0,1,1,1)");
        assert_eq!(monoid_type(&MonoidRef::trivial()).unwrap(), MonoidType::TRIVIAL);
    }

    #[test]
    fn type_product_is_bitwise_and() {
        let a = MonoidType::from_bits([1, 1, 1, 0]);
        let b = MonoidType::from_bits([1, 1, 0, 1]);
        assert_eq!(type_product(a, b).to_string(), "(1,1,0,0)");
        let a = MonoidType::from_bits([0, 1, 1, 1]);
        let b = MonoidType::from_bits([1, 0, 1, 1]);
        assert_eq!(type_product(a, b).to_string(), "(0,0,1,1)");
        assert_eq!(MonoidType::all().count(), 16);
    }

    #[test]
    fn t3_functors() {
        let t3 = MonoidRef::finite(FiniteMonoid::transformation(3).unwrap());
        let len = |x| t3.set_len(&functor_set(x, &t3).unwrap()).unwrap();
        assert_eq!(len(FunctorId::E), 22);
        assert_eq!(len(FunctorId::G), 6);
        assert_eq!(len(FunctorId::GL), 6);
        assert_eq!(len(FunctorId::FLR), 27);
        assert!(is_identity_stable(&t3));
    }

    #[test]
    fn q_on_finite_product() {
        let z2 = MonoidRef::finite(FiniteMonoid::cyclic_group(2).unwrap());
        let chain = MonoidRef::finite(FiniteMonoid::semilattice_chain(2).unwrap());
        let p = MonoidRef::product(vec![z2, chain]);
        assert_eq!(functor_set(FunctorId::Q, &p).unwrap(), p.identity_set());
    }

    #[test]
    fn stability() {
        assert!(!is_identity_stable(&MonoidRef::bicyclic()));
        assert!(!is_identity_stable(&MonoidRef::bicyclic_zero()));
        assert!(is_identity_stable(&MonoidRef::monogenic()));
    }
}
