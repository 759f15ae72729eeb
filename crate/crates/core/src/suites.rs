//! Verification suites: the structural lemmas over a corpus of monoids, the
//! lattice shape catalog, and the analysis of the functor monoid.

use std::collections::BTreeSet;

use crate::builtin::parse_builtin;
use crate::congruence::{count_congruences, count_subsemigroups, DEFAULT_ENUMERATION_BOUND};
use crate::error::Result;
use crate::fplus::{
    analyze_fplus, build_fplus, default_corpus as derivation_corpus, derive_composition_table,
    fplus_self_lattice, verify_against_reference_table, CompositionTable,
};
use crate::functor::FunctorId::{self, *};
use crate::greens::greens;
use crate::invariants::{all_functor_sets, monoid_type, type_from_sets, MonoidType};
use crate::lattice::{build_lattice, classify_shape, expected_node_count, witness};
use crate::monoid::{MonoidRef, SubSet};
use crate::report::Check;
use crate::symbolic::CatalogSet;

/// A monoid with a display name.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub monoid: MonoidRef,
}

const BUILTINS: [&str; 8] = [
    "trivial", "cyclic:2", "cyclic:3", "chain:2", "chain:3", "nat", "bicyclic", "bicyclic0",
];

/// The builtins, their zero adjunctions, all pairwise products of builtins,
/// and `Tn:2`, `Tn:3`, `singular:3`.
pub fn default_corpus() -> Vec<CorpusEntry> {
    let base: Vec<CorpusEntry> = BUILTINS
        .iter()
        .map(|&s| CorpusEntry {
            name: s.to_string(),
            monoid: parse_builtin(s).expect("builtin names are valid"),
        })
        .collect();
    let mut out = base.clone();
    for e in &base {
        if let Ok(m) = e.monoid.adjoin_zero() {
            out.push(CorpusEntry {
                name: format!("{}+zero", e.name),
                monoid: m,
            });
        }
    }
    for (i, a) in base.iter().enumerate() {
        for b in &base[i..] {
            out.push(CorpusEntry {
                name: format!("{} x {}", a.name, b.name),
                monoid: MonoidRef::product(vec![a.monoid.clone(), b.monoid.clone()]),
            });
        }
    }
    for s in ["Tn:2", "Tn:3", "singular:3"] {
        out.push(CorpusEntry {
            name: s.to_string(),
            monoid: parse_builtin(s).expect("builtin names are valid"),
        });
    }
    out
}

/// Functor values of one monoid.
struct Eval<'a> {
    m: &'a MonoidRef,
    v: Vec<SubSet>,
}

impl Eval<'_> {
    fn s(&self, x: FunctorId) -> &SubSet {
        &self.v[x.index()]
    }

    fn eq(&self, x: FunctorId, y: FunctorId) -> bool {
        self.s(x) == self.s(y)
    }

    fn cap(&self, x: FunctorId, y: FunctorId) -> SubSet {
        self.m.intersect(self.s(x), self.s(y))
    }

    fn is_one(&self, s: &SubSet) -> bool {
        *s == self.m.identity_set()
    }

    fn all_equal(&self, xs: &[FunctorId]) -> bool {
        xs.iter().all(|&x| self.eq(x, xs[0]))
    }

    fn pairwise_distinct(&self, xs: &[FunctorId]) -> bool {
        (0..xs.len()).all(|i| (i + 1..xs.len()).all(|j| !self.eq(xs[i], xs[j])))
    }
}

fn iff(bs: &[bool]) -> bool {
    bs.iter().all(|&b| b == bs[0])
}

type Lemma = (&'static str, fn(&Eval) -> Option<bool>);

const LEMMAS: [Lemma; 12] = [
    ("E ∩ G = E ∩ GL = E ∩ GR = {1}", |e| {
        Some([G, GL, GR].iter().all(|&x| e.is_one(&e.cap(E, x))))
    }),
    ("E ∩ F = E ∩ FL = E ∩ FR = E ∩ FLR = E", |e| {
        Some([F, FL, FR, FLR].iter().all(|&x| e.cap(E, x) == *e.s(E)))
    }),
    ("GL ∩ GLR = GL ∩ FL = GL ∩ FLR = GL and dually", |e| {
        Some(
            [GLR, FL, FLR].iter().all(|&x| e.cap(GL, x) == *e.s(GL))
                && [GLR, FR, FLR].iter().all(|&x| e.cap(GR, x) == *e.s(GR)),
        )
    }),
    ("GL ∩ G = GL ∩ GR = GL ∩ F = GL ∩ FR = G and dually", |e| {
        Some(
            [G, GR, F, FR].iter().all(|&x| e.cap(GL, x) == *e.s(G))
                && [G, GL, F, FL].iter().all(|&x| e.cap(GR, x) == *e.s(G)),
        )
    }),
    ("G = GL iff G = GR iff the G- and F-diamonds and {P, PL, PR, GLR} collapse iff E ∩ GLR = {1}", |e| {
        let g_diamond = [G, GL, GR, GLR];
        let f_diamond = [F, FL, FR, FLR];
        let p_diamond = [P, PL, PR, GLR];
        let diamonds_ok = [g_diamond, f_diamond, p_diamond]
            .iter()
            .all(|d| e.all_equal(d) || e.pairwise_distinct(d));
        Some(
            diamonds_ok
                && iff(&[
                    e.eq(G, GL),
                    e.eq(G, GR),
                    e.all_equal(&g_diamond),
                    e.all_equal(&f_diamond),
                    e.all_equal(&p_diamond),
                    e.is_one(&e.cap(E, GLR)),
                ]),
        )
    }),
    ("G = {1} iff F = E", |e| Some(iff(&[e.eq(G, O), e.eq(F, E)]))),
    ("E = {1} iff FLR = G iff {G, GL, GR} meets {F, FL, FR, FLR}", |e| {
        let meets = [G, GL, GR]
            .iter()
            .any(|&x| [F, FL, FR, FLR].iter().any(|&y| e.eq(x, y)));
        Some(iff(&[e.eq(E, O), e.eq(FLR, G), meets]))
    }),
    ("G = {1} iff P = Q iff F = E", |e| Some(iff(&[e.eq(G, O), e.eq(P, Q), e.eq(F, E)]))),
    ("E = Q iff F = P iff FL = PL iff FR = PR iff FLR = GLR", |e| {
        Some(iff(&[
            e.eq(E, Q),
            e.eq(F, P),
            e.eq(FL, PL),
            e.eq(FR, PR),
            e.eq(FLR, GLR),
        ]))
    }),
    ("GL = L_1, GR = R_1, G = H_1", |e| {
        let f = e.m.materialize()?;
        let g = greens(&f);
        let one = f.identity();
        let set = |x: FunctorId| e.m.materialize_set(e.s(x));
        Some(
            set(GL)?.as_slice() == g.l.class(one)
                && set(GR)?.as_slice() == g.r.class(one)
                && set(G)?.as_slice() == g.h.class(one),
        )
    }),
    ("G = GL iff J_1 = G, and finite monoids are stable", |e| {
        let f = e.m.materialize()?;
        let g = greens(&f);
        let one = f.identity();
        let units = e.m.materialize_set(e.s(G))?;
        let stable = e.eq(G, GL);
        Some(stable && stable == (g.j.class(one) == units.as_slice()))
    }),
    ("adjoining a zero adds it to I, E, F, FL, FR, FLR only", |e| zero_law(e)),
];

fn zero_law(e: &Eval) -> Option<bool> {
    let m0 = e.m.adjoin_zero().ok()?;
    let v0 = all_functor_sets(&m0).ok()?;
    let gains_zero = |x: FunctorId| matches!(x, I | E | F | FL | FR | FLR);
    Some(FunctorId::ALL.iter().all(|&x| {
        let got = &v0[x.index()];
        match (e.m, &m0) {
            (MonoidRef::Symbolic(_), MonoidRef::Symbolic(_)) => {
                let SubSet::Catalog(c) = e.s(x) else { return false };
                *got == SubSet::Catalog(CatalogSet::new(c.region, gains_zero(x)))
            }
            (_, MonoidRef::Finite(f0)) => {
                let Some(mut want) = e.m.materialize_set(e.s(x)) else { return false };
                if gains_zero(x) {
                    want.push(f0.order() as u32 - 1);
                }
                *got == SubSet::Finite(want)
            }
            _ => false,
        }
    }))
}

/// One check per lemma, listing every corpus monoid that violates it.
pub fn lemma_suite(corpus: &[CorpusEntry]) -> Result<Vec<Check>> {
    let evals: Vec<(&str, Eval)> = corpus
        .iter()
        .map(|c| {
            Ok((
                c.name.as_str(),
                Eval {
                    m: &c.monoid,
                    v: all_functor_sets(&c.monoid)?,
                },
            ))
        })
        .collect::<Result<_>>()?;

    let mut checks = Vec::new();
    for (name, lemma) in LEMMAS {
        let mut tested = 0;
        let mut bad = Vec::new();
        for (n, e) in &evals {
            match lemma(e) {
                Some(true) => tested += 1,
                Some(false) => {
                    tested += 1;
                    bad.push(*n);
                }
                None => {}
            }
        }
        checks.push(counterexample_check(name, tested, &bad));
    }

    // Lattice construction re-checks join closure on every monoid.
    let mut bad = Vec::new();
    let mut size_bad = Vec::new();
    for c in corpus {
        match (build_lattice(&c.monoid, false), build_lattice(&c.monoid, true)) {
            (Ok(l), Ok(lp)) => {
                let t = l.monoid_type;
                let sizes_ok = lp.len() >= l.len() && (!(t.t1 || t.t3) || lp.len() == l.len());
                let catalog_ok = l.len() == expected_node_count(t, false)
                    && lp.len() == expected_node_count(t, true);
                if !(sizes_ok && catalog_ok) {
                    size_bad.push(c.name.as_str());
                }
            }
            _ => bad.push(c.name.as_str()),
        }
    }
    checks.push(counterexample_check("L(M) and L⁺(M) are join-closed", corpus.len(), &bad));
    checks.push(counterexample_check(
        "|L⁺| ≥ |L| with equality when t1 or t3, and both match the type catalog",
        corpus.len(),
        &size_bad,
    ));

    // The four ways E ∩ GLR can sit between {1} and E.
    let patterns: BTreeSet<(bool, bool)> = evals
        .iter()
        .map(|(_, e)| {
            let c = e.cap(E, GLR);
            (e.is_one(&c), c == *e.s(E))
        })
        .collect();
    checks.push(Check::compare("E ∩ GLR strictness patterns realised", 4, patterns.len()));

    checks.push(product_law(corpus)?);
    checks.push(type_multiplicativity(corpus)?);
    Ok(checks)
}

fn counterexample_check(name: &str, tested: usize, bad: &[&str]) -> Check {
    let actual = if bad.is_empty() {
        format!("0 counterexamples in {tested} monoids")
    } else {
        format!("counterexamples: {}", bad.join("; "))
    };
    Check::outcome(name, format!("0 counterexamples in {tested} monoids"), actual, bad.is_empty())
}

/// `X(M × N)` on the materialised product table against the componentwise
/// value, for finite corpus members of order at most 12.
fn product_law(corpus: &[CorpusEntry]) -> Result<Check> {
    let small: Vec<&CorpusEntry> = corpus
        .iter()
        .filter(|c| matches!(c.monoid, MonoidRef::Finite(_)) && c.monoid.order().is_some_and(|n| n <= 12))
        .collect();
    let mut bad = Vec::new();
    let mut pairs = 0;
    for (i, a) in small.iter().enumerate() {
        for b in &small[i..] {
            pairs += 1;
            let p = MonoidRef::product(vec![a.monoid.clone(), b.monoid.clone()]);
            let table = MonoidRef::finite(p.materialize().expect("finite factors"));
            let componentwise = all_functor_sets(&p)?;
            let direct = all_functor_sets(&table)?;
            for x in FunctorId::ALL {
                let want = p.materialize_set(&componentwise[x.index()]).expect("finite factors");
                if direct[x.index()] != SubSet::Finite(want) {
                    bad.push(format!("{x} on {} x {}", a.name, b.name));
                }
            }
        }
    }
    let bad: Vec<&str> = bad.iter().map(String::as_str).collect();
    Ok(counterexample_check("X(M × N) = X(M) × X(N) for all fifteen X", pairs, &bad))
}

fn type_multiplicativity(corpus: &[CorpusEntry]) -> Result<Check> {
    let singles: Vec<&CorpusEntry> = corpus
        .iter()
        .filter(|c| !matches!(c.monoid, MonoidRef::Product(_)) && c.monoid.order().is_none_or(|n| n <= 12))
        .collect();
    let types: Vec<MonoidType> = singles
        .iter()
        .map(|c| monoid_type(&c.monoid))
        .collect::<Result<_>>()?;
    let mut bad = Vec::new();
    let mut pairs = 0;
    for i in 0..singles.len() {
        for j in i..singles.len() {
            pairs += 1;
            let p = MonoidRef::product(vec![singles[i].monoid.clone(), singles[j].monoid.clone()]);
            if monoid_type(&p)? != types[i].product(types[j]) {
                bad.push(format!("{} x {}", singles[i].name, singles[j].name));
            }
        }
    }
    let bad: Vec<&str> = bad.iter().map(String::as_str).collect();
    Ok(counterexample_check("T(M × N) = T(M) × T(N)", pairs, &bad))
}

/// Node counts of `L` and `L⁺` for the sixteen type witnesses and for `B`,
/// `B^0`.
pub fn shape_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for t in MonoidType::all() {
        let m = witness(t);
        let r = classify_shape(&m)?;
        checks.push(Check::compare(format!("witness for {t} has type"), t, &r.monoid_type));
        checks.push(Check::compare(format!("|L| for type {t}"), r.expected_nodes, r.actual_nodes));
        checks.push(Check::compare(
            format!("|L⁺| for type {t}"),
            r.expected_enhanced_nodes,
            r.actual_enhanced_nodes,
        ));
    }
    checks.push(Check::compare("|L(B)|", 7, build_lattice(&MonoidRef::bicyclic(), false)?.len()));
    checks.push(Check::compare("|L(B^0)|", 8, build_lattice(&MonoidRef::bicyclic_zero(), false)?.len()));
    checks.push(Check::compare(
        "|L⁺(B^0)|",
        11,
        build_lattice(&MonoidRef::bicyclic_zero(), true)?.len(),
    ));
    Ok(checks)
}

/// Covering pairs of the J-order of the functor monoid.
pub const FPLUS_J_ORDER: [(FunctorId, FunctorId); 23] = [
    (O, G), (G, P), (P, PL), (PL, GLR), (PR, GLR), (P, PR), (G, GR), (GR, GLR),
    (GL, GLR), (G, GL), (Q, P), (P, F), (O, Q), (Q, E), (E, F), (PL, FL),
    (FL, FLR), (FR, FLR), (PR, FR), (GLR, FLR), (FLR, I), (F, FL), (F, FR),
];

/// Covering pairs of the J-order of the idempotent-generated submonoid.
pub const IDEMPOTENT_GENERATED_ORDER: [(FunctorId, FunctorId); 11] = [
    (O, G), (G, P), (P, GLR), (GLR, FLR), (FLR, I), (O, Q), (Q, E), (E, F),
    (Q, P), (P, F), (F, FLR),
];

fn pair_set(pairs: &[(FunctorId, FunctorId)]) -> BTreeSet<(String, String)> {
    pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

fn fmt_pairs(pairs: &BTreeSet<(String, String)>) -> String {
    let v: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}<{b}")).collect();
    v.join(" ")
}

fn fmt_names(names: &[String]) -> String {
    format!("{{{}}}", names.join(", "))
}

/// Everything computed about the functor monoid, each as a check.
pub fn fplus_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let derived = derive_composition_table(&derivation_corpus())?;
    let cmp = verify_against_reference_table(&derived);
    checks.push(Check::compare("composition table cells matching", "225/225", format!("{}/{}", cmp.matching, cmp.total)));
    checks.push(Check::compare(
        "derived table is associative",
        "none",
        derived
            .associativity_witness()
            .map_or("none".to_string(), |(x, y, z)| format!("({x},{y},{z})")),
    ));
    checks.push(Check::compare("derived table is the embedded table", true, derived == CompositionTable::reference()));

    let f = build_fplus();
    let a = analyze_fplus(&f)?;
    checks.push(Check::compare("order", 15, a.order));
    checks.push(Check::compare(
        "idempotent-generated submonoid",
        fmt_names(&["O", "E", "G", "GLR", "F", "FLR", "Q", "P", "I"].map(String::from)),
        fmt_names(&a.idempotent_generated),
    ));
    checks.push(Check::compare(
        "idempotents",
        fmt_names(&["O", "E", "G", "GLR", "F", "FLR", "I"].map(String::from)),
        fmt_names(&a.idempotents),
    ));
    checks.push(Check::compare("J-trivial", true, a.j_trivial));
    checks.push(Check::compare("L, R, H, D, J all discrete", true, a.all_discrete));
    let got: BTreeSet<(String, String)> = a.j_order.iter().cloned().collect();
    checks.push(Check::compare("J-order covering pairs", fmt_pairs(&pair_set(&FPLUS_J_ORDER)), fmt_pairs(&got)));
    let got: BTreeSet<(String, String)> = a.idempotent_generated_order.iter().cloned().collect();
    checks.push(Check::compare(
        "J-order of the idempotent-generated submonoid",
        fmt_pairs(&pair_set(&IDEMPOTENT_GENERATED_ORDER)),
        fmt_pairs(&got),
    ));
    checks.push(Check::compare("GL ≤_J PL fails", true, a.gl_not_below_pl));
    let w = witness(MonoidType::new(false, false, false, false));
    let v = all_functor_sets(&w)?;
    checks.push(Check::compare(
        "GL ⊆ PL on the (0,0,0,0) witness",
        true,
        w.is_subset(&v[GL.index()], &v[PL.index()]),
    ));
    checks.push(Check::compare("X ∘ PL ∘ Y ∈ {O, G, Q, P, PL}", true, a.pl_sandwich));
    checks.push(Check::compare("FLR is a right identity away from I", true, a.flr_right_identity));
    checks.push(Check::compare("FLR is a left identity away from I", false, a.flr_left_identity));

    let s = count_subsemigroups(&f, DEFAULT_ENUMERATION_BOUND)?;
    checks.push(Check::compare("closed subsets (empty set included)", 2904, s.closed_subsets));
    checks.push(Check::compare("submonoids", 1452, s.submonoids));
    let c = count_congruences(&f, DEFAULT_ENUMERATION_BOUND)?;
    checks.push(Check::compare("congruences", 1613, c.congruences));
    checks.push(Check::compare("principal congruences", 76, c.principal));

    let lat = fplus_self_lattice()?;
    checks.push(Check::compare("type of the functor monoid", "(1,0,0,1)", lat.monoid_type));
    checks.push(Check::compare("|L| of the functor monoid", 3, lat.len()));
    let chain = lat.hasse.len() == 2 && lat.le(lat.bottom(), lat.top());
    checks.push(Check::compare("L of the functor monoid is a chain", true, chain));
    let vals = all_functor_sets(&lat.monoid)?;
    let t = type_from_sets(&vals);
    checks.push(Check::compare("E = F on the functor monoid", true, vals[E.index()] == vals[F.index()] && t.t4));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_shape() {
        let c = default_corpus();
        assert_eq!(c.len(), 8 + 7 + 36 + 3);
    }

    #[test]
    fn shapes_pass() {
        for c in shape_suite().unwrap() {
            assert!(c.pass, "{c}");
        }
    }
}
