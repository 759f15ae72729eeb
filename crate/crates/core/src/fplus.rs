//! The monoid of functors under composition: deriving its table from a
//! separating monoid, comparing with the published table and analysing the
//! resulting 15-element monoid.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite::FiniteMonoid;
use crate::functor::FunctorId;
use crate::greens::greens;
use crate::invariants::{all_functor_sets, MonoidType};
use crate::lattice::{build_lattice, witness, InvariantLattice};
use crate::monoid::{MonoidRef, SubSet};

use FunctorId::*;

/// Row `X`, column `Y` holds `X ∘ Y`, i.e. `M ↦ X(Y(M))`.
/// Rows and columns follow [`FunctorId::ALL`].
pub const REFERENCE_TABLE: [[FunctorId; 15]; 15] = [
    [O, O, O, O, O, O, O, O, O, O, O, O, O, O, O],
    [O, E, O, O, O, Q, E, E, E, E, Q, Q, Q, Q, E],
    [O, O, G, G, G, G, G, G, G, G, O, G, G, G, G],
    [O, O, G, G, G, GL, G, G, G, GL, O, G, G, G, GL],
    [O, O, G, G, G, GR, G, G, G, GR, O, G, G, G, GR],
    [O, O, G, G, G, GLR, G, G, G, GLR, O, G, G, G, GLR],
    [O, E, G, G, G, P, F, F, F, F, Q, P, P, P, F],
    [O, E, G, G, G, PL, F, F, F, FL, Q, P, P, P, FL],
    [O, E, G, G, G, PR, F, F, F, FR, Q, P, P, P, FR],
    [O, E, G, G, G, GLR, F, F, F, FLR, Q, P, P, P, FLR],
    [O, O, O, O, O, Q, O, O, O, Q, O, O, O, O, Q],
    [O, O, G, G, G, P, G, G, G, P, O, G, G, G, P],
    [O, O, G, G, G, PL, G, G, G, PL, O, G, G, G, PL],
    [O, O, G, G, G, PR, G, G, G, PR, O, G, G, G, PR],
    [O, E, G, GL, GR, GLR, F, FL, FR, FLR, Q, P, PL, PR, I],
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionTable {
    pub cells: [[FunctorId; 15]; 15],
}

impl CompositionTable {
    pub fn reference() -> Self {
        CompositionTable { cells: REFERENCE_TABLE }
    }

    /// `x ∘ y`.
    pub fn compose(&self, x: FunctorId, y: FunctorId) -> FunctorId {
        self.cells[x.index()][y.index()]
    }

    /// First failing triple `(x, y, z)` of `(x∘y)∘z = x∘(y∘z)`.
    pub fn associativity_witness(&self) -> Option<(FunctorId, FunctorId, FunctorId)> {
        for x in FunctorId::ALL {
            for y in FunctorId::ALL {
                for z in FunctorId::ALL {
                    if self.compose(self.compose(x, y), z) != self.compose(x, self.compose(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// The table as a finite monoid with identity `I`, elements named by
    /// functor symbol.
    pub fn to_monoid(&self) -> Result<FiniteMonoid> {
        let table: Vec<usize> = self.cells.iter().flatten().map(|f| f.index()).collect();
        let names = FunctorId::ALL.iter().map(|f| f.symbol().to_string()).collect();
        FiniteMonoid::from_table(15, &table, Some(I.index()), Some(names))
    }
}

/// The monoid all fifteen functors are pairwise distinct on:
/// Z₂ × chain(2) × free monogenic × `B`.
pub fn default_corpus() -> Vec<MonoidRef> {
    vec![witness(MonoidType::new(false, false, false, false))]
}

/// Computes `X ∘ Y` for all pairs by evaluating `X` on the monoid `Y(M)` and
/// matching the result against the fifteen values on `M`, for every `M`.
pub fn derive_composition_table(corpus: &[MonoidRef]) -> Result<CompositionTable> {
    // outer[k][z] = Z(M_k); inner[k][y][x] = X(Y(M_k)) as a set of M_k.
    let mut outer: Vec<Vec<SubSet>> = Vec::with_capacity(corpus.len());
    let mut inner: Vec<Vec<Vec<SubSet>>> = Vec::with_capacity(corpus.len());
    for m in corpus {
        let values = all_functor_sets(m)?;
        let mut per_y = Vec::with_capacity(15);
        for y in FunctorId::ALL {
            let r = m.restrict(&values[y.index()])?;
            let xs = all_functor_sets(&r.monoid)?;
            per_y.push(xs.iter().map(|s| r.lift(s)).collect());
        }
        outer.push(values);
        inner.push(per_y);
    }

    let mut cells = [[O; 15]; 15];
    for x in FunctorId::ALL {
        for y in FunctorId::ALL {
            let matches: Vec<FunctorId> = FunctorId::ALL
                .into_iter()
                .filter(|z| {
                    (0..corpus.len())
                        .all(|k| outer[k][z.index()] == inner[k][y.index()][x.index()])
                })
                .collect();
            match matches.as_slice() {
                [z] => cells[x.index()][y.index()] = *z,
                [] => return Err(Error::NoMatch(x.to_string(), y.to_string())),
                many => {
                    let names: Vec<&str> = many.iter().map(|f| f.symbol()).collect();
                    return Err(Error::Ambiguous(x.to_string(), y.to_string(), names.join(",")));
                }
            }
        }
    }
    Ok(CompositionTable { cells })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellMismatch {
    pub row: FunctorId,
    pub column: FunctorId,
    pub derived: FunctorId,
    pub expected: FunctorId,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableComparison {
    pub matching: usize,
    pub total: usize,
    pub mismatches: Vec<CellMismatch>,
}

pub fn verify_against_reference_table(derived: &CompositionTable) -> TableComparison {
    let mut mismatches = Vec::new();
    for x in FunctorId::ALL {
        for y in FunctorId::ALL {
            let (d, e) = (derived.compose(x, y), REFERENCE_TABLE[x.index()][y.index()]);
            if d != e {
                mismatches.push(CellMismatch {
                    row: x,
                    column: y,
                    derived: d,
                    expected: e,
                });
            }
        }
    }
    TableComparison {
        matching: 225 - mismatches.len(),
        total: 225,
        mismatches,
    }
}

/// The monoid of functors, from the embedded table.
pub fn build_fplus() -> FiniteMonoid {
    CompositionTable::reference()
        .to_monoid()
        .expect("embedded table is a monoid")
}

#[derive(Clone, Debug, Serialize)]
pub struct FplusReport {
    pub order: usize,
    pub j_trivial: bool,
    /// L, R, H, D and J all have singleton classes.
    pub all_discrete: bool,
    pub idempotents: Vec<String>,
    /// The submonoid generated by the idempotents.
    pub idempotent_generated: Vec<String>,
    /// Covering pairs `(lower, upper)` of the J-order.
    pub j_order: Vec<(String, String)>,
    /// Covering pairs of the J-order of the idempotent-generated submonoid.
    pub idempotent_generated_order: Vec<(String, String)>,
    /// `G_L ≤_J P_L` fails.
    pub gl_not_below_pl: bool,
    /// `X ∘ P_L ∘ Y ∈ {O, G, Q, P, P_L}` for all `X`, `Y`.
    pub pl_sandwich: bool,
    /// `F_LR` is a right identity for every element other than `I`.
    pub flr_right_identity: bool,
    /// `F_LR` is a left identity for every element other than `I`.
    pub flr_left_identity: bool,
}

pub fn analyze_fplus(f: &FiniteMonoid) -> Result<FplusReport> {
    let name = |x: u32| f.name(x as usize);
    let g = greens(f);
    let all_discrete = [&g.l, &g.r, &g.h, &g.d, &g.j].iter().all(|p| p.is_discrete());
    let idem = f.idempotents();
    let egen = f.closure(idem.iter().map(|&x| x as usize));

    let j_order = g
        .j_hasse()
        .into_iter()
        .map(|(a, b)| (name(g.j.classes[a as usize][0]), name(g.j.classes[b as usize][0])))
        .collect();

    let sub = f.sub_monoid(&egen)?;
    let gs = greens(&sub);
    let idempotent_generated_order = gs
        .j_hasse()
        .into_iter()
        .map(|(a, b)| {
            let x = gs.j.classes[a as usize][0] as usize;
            let y = gs.j.classes[b as usize][0] as usize;
            (sub.name(x), sub.name(y))
        })
        .collect();

    let by = |s: FunctorId| {
        (0..f.order())
            .find(|&k| f.name(k) == s.symbol())
            .ok_or_else(|| Error::UnknownFunctor(s.symbol().to_string()))
    };
    let (gl, pl, flr, i) = (by(GL)?, by(PL)?, by(FLR)?, by(I)?);
    let allowed: Vec<usize> = [O, G, Q, P, PL]
        .into_iter()
        .map(by)
        .collect::<Result<_>>()?;
    let n = f.order();
    let pl_sandwich = (0..n).all(|x| (0..n).all(|y| allowed.contains(&f.mul(f.mul(x, pl), y))));
    let others = || (0..n).filter(move |&x| x != i);

    Ok(FplusReport {
        order: n,
        j_trivial: g.is_j_trivial(),
        all_discrete,
        idempotents: idem.iter().map(|&x| name(x)).collect(),
        idempotent_generated: egen.iter().map(|&x| name(x)).collect(),
        j_order,
        idempotent_generated_order,
        gl_not_below_pl: !g.j_le(gl, pl),
        pl_sandwich,
        flr_right_identity: others().all(|x| f.mul(x, flr) == x),
        flr_left_identity: others().all(|x| f.mul(flr, x) == x),
    })
}

/// `L(F♯)`, obtained by running the lattice engine on the functor monoid.
pub fn fplus_self_lattice() -> Result<InvariantLattice> {
    build_lattice(&MonoidRef::finite(build_fplus()), false)
}
