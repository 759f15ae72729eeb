//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use idunit::congruence::{all_congruences, count_congruences, count_subsemigroups, principal_congruences};
use idunit::fplus::{
    analyze_fplus, build_fplus, default_corpus, derive_composition_table, fplus_self_lattice,
    verify_against_reference_table,
};
use idunit::lattice::{build_lattice, expected_node_count, is_sublattice_of_sub, witness};
use idunit::suites::{default_corpus as lemma_corpus, lemma_suite};
use idunit::{greens, monoid_type, FiniteMonoid, FunctorId, MonoidRef, MonoidType};

use common::{congruences_by_scan, greens_by_ideals, min_labels, t3_by_maps};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(limit: Duration, start: Instant) -> Result<String, String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(format!("{t:.2?}"))
}

fn c1_composition_table() -> Outcome {
    let start = Instant::now();
    let derived = derive_composition_table(&default_corpus()).map_err(|e| e.to_string())?;
    let cmp = verify_against_reference_table(&derived);
    ensure(
        cmp.matching == 225,
        format!("{}/225 cells match, first mismatch {:?}", cmp.matching, cmp.mismatches.first()),
    )?;
    let t = within(Duration::from_secs(10), start)?;
    Ok(format!("225/225 cells in {t}"))
}

fn c2_size_and_idempotents() -> Outcome {
    let f = build_fplus();
    ensure(f.order() == 15, format!("order {}", f.order()))?;
    let a = analyze_fplus(&f).map_err(|e| e.to_string())?;
    let expected = ["O", "E", "G", "GLR", "F", "FLR", "Q", "P", "I"];
    ensure(
        a.idempotent_generated == expected,
        format!("idempotent-generated submonoid {:?}", a.idempotent_generated),
    )?;
    // Q∘Q = O and P∘P = G in the table, so Q and P are not idempotent.
    ensure(
        a.idempotents == ["O", "E", "G", "GLR", "F", "FLR", "I"],
        format!("idempotents {:?}", a.idempotents),
    )?;
    Ok(format!(
        "|F♯| = 15, ⟨idempotents⟩ = {{{}}} (9 elements; {} idempotents)",
        a.idempotent_generated.join(", "),
        a.idempotents.len()
    ))
}

fn c3_j_trivial() -> Outcome {
    let f = build_fplus();
    let g = greens(&f);
    for (name, p) in [("L", &g.l), ("R", &g.r), ("H", &g.h), ("D", &g.d), ("J", &g.j)] {
        ensure(p.is_discrete(), format!("{name} is not discrete"))?;
    }
    let o = greens_by_ideals(&f);
    ensure(o.j == (0..15).collect::<Vec<u32>>(), "ideal oracle finds a nontrivial J-class")?;
    Ok("L, R, H, D, J all discrete (SCC and ideal oracle agree)".into())
}

fn c4_counts() -> Outcome {
    let start = Instant::now();
    let f = build_fplus();
    let s = count_subsemigroups(&f, 20).map_err(|e| e.to_string())?;
    let c = count_congruences(&f, 20).map_err(|e| e.to_string())?;
    ensure(
        s.closed_subsets == 2904 && s.submonoids == 1452,
        format!("closed subsets {}, submonoids {}", s.closed_subsets, s.submonoids),
    )?;
    ensure(
        c.congruences == 1613 && c.principal == 76,
        format!("congruences {}, principal {}", c.congruences, c.principal),
    )?;
    let t = within(Duration::from_secs(60), start)?;
    Ok(format!(
        "2904 closed subsets (incl. empty; {} nonempty), 1452 submonoids, 1613 congruences, 76 principal in {t}",
        s.subsemigroups
    ))
}

fn c5_self_lattice() -> Outcome {
    let lat = fplus_self_lattice().map_err(|e| e.to_string())?;
    ensure(lat.monoid_type.to_string() == "(1,0,0,1)", format!("type {}", lat.monoid_type))?;
    ensure(lat.len() == 3, format!("{} nodes", lat.len()))?;
    let (b, t) = (lat.bottom(), lat.top());
    let mid = (0..3).find(|&k| k != b && k != t).ok_or("no middle node")?;
    ensure(
        lat.le(b, mid) && lat.le(mid, t) && lat.hasse.len() == 2,
        "nodes are not a chain",
    )?;
    ensure(
        lat.nodes[mid].has(FunctorId::E) && lat.nodes[mid].has(FunctorId::F),
        "middle node is not E = F",
    )?;
    Ok(format!(
        "type (1,0,0,1), chain {} < {} < {}",
        lat.nodes[b].label(),
        lat.nodes[mid].label(),
        lat.nodes[t].label()
    ))
}

fn c6_types() -> Outcome {
    let mut seen = BTreeSet::new();
    for t in MonoidType::all() {
        let got = monoid_type(&witness(t)).map_err(|e| e.to_string())?;
        ensure(got == t, format!("witness for {t} has type {got}"))?;
        seen.insert(got);
    }
    ensure(seen.len() == 16, format!("{} types", seen.len()))?;
    Ok("16/16 types realised".into())
}

fn c7_shapes() -> Outcome {
    let mut plain = Vec::new();
    for t in MonoidType::all() {
        let m = witness(t);
        let l = build_lattice(&m, false).map_err(|e| e.to_string())?;
        let lp = build_lattice(&m, true).map_err(|e| e.to_string())?;
        ensure(
            l.len() == expected_node_count(t, false),
            format!("|L| = {} for {t}", l.len()),
        )?;
        ensure(
            lp.len() == expected_node_count(t, true),
            format!("|L⁺| = {} for {t}", lp.len()),
        )?;
        plain.push(l.len());
    }
    let unstable: Vec<usize> = plain[..8].to_vec();
    ensure(unstable == [11, 9, 10, 8, 10, 8, 9, 7], format!("unstable counts {unstable:?}"))?;
    ensure(plain[8..] == [5, 3, 3, 2, 4, 2, 2, 1], format!("stable counts {:?}", &plain[8..]))?;
    let b = build_lattice(&MonoidRef::bicyclic(), false).map_err(|e| e.to_string())?;
    let b0 = build_lattice(&MonoidRef::bicyclic_zero(), false).map_err(|e| e.to_string())?;
    ensure(b.len() == 7 && b0.len() == 8, format!("|L(B)| = {}, |L(B0)| = {}", b.len(), b0.len()))?;
    let enhanced: Vec<usize> = [[0, 0, 0, 0], [0, 0, 0, 1], [0, 1, 0, 0], [0, 1, 0, 1]]
        .into_iter()
        .map(|bits| {
            build_lattice(&witness(MonoidType::from_bits(bits)), true)
                .map(|l| l.len())
                .unwrap_or(0)
        })
        .collect();
    ensure(enhanced == [15, 12, 14, 11], format!("enhanced counts {enhanced:?}"))?;
    Ok("stable {5,3,3,2,4,2,2,1}, unstable {11,9,10,8,10,8,9,7}, |L(B)|=7, |L(B⁰)|=8, enhanced {15,12,14,11}".into())
}

fn c8_lemmas() -> Outcome {
    let start = Instant::now();
    let corpus = lemma_corpus();
    let checks = lemma_suite(&corpus).map_err(|e| e.to_string())?;
    let failed: Vec<String> = checks.iter().filter(|c| !c.pass).map(|c| c.to_string()).collect();
    ensure(failed.is_empty(), failed.join(" | "))?;
    let t = within(Duration::from_secs(60), start)?;
    Ok(format!("{} suites over {} monoids, 0 counterexamples, {t}", checks.len(), corpus.len()))
}

fn c9_sublattices() -> Outcome {
    let r = is_sublattice_of_sub(&MonoidRef::bicyclic_zero(), false).map_err(|e| e.to_string())?;
    ensure(!r.holds, "L(B0) reported closed under intersection")?;
    let w = r
        .witnesses
        .iter()
        .find(|w| {
            let pair = [w.left.as_str(), w.right.as_str()];
            pair == ["FL", "GLR"] || pair == ["GLR", "FL"]
        })
        .ok_or_else(|| format!("no (FL, GLR) witness among {:?}", r.witnesses))?;
    ensure(
        w.intersection == "{a^m b^n : m ≥ n}",
        format!("intersection {}", w.intersection),
    )?;
    let b = is_sublattice_of_sub(&MonoidRef::bicyclic(), false).map_err(|e| e.to_string())?;
    ensure(b.holds, "L(B) not a sublattice")?;
    let b0p = is_sublattice_of_sub(&MonoidRef::bicyclic_zero(), true).map_err(|e| e.to_string())?;
    ensure(b0p.holds, "L⁺(B0) not a sublattice")?;
    Ok(format!("L(B⁰) fails at (FL, GLR) ∩ = {}; L(B), L⁺(B⁰) closed", w.intersection))
}

fn c10_oracles() -> Outcome {
    let mut finite: Vec<(String, FiniteMonoid)> = lemma_corpus()
        .into_iter()
        .filter_map(|c| c.monoid.materialize().map(|m| (c.name, m)))
        .filter(|(_, m)| m.order() <= 30)
        .collect();
    finite.push(("F♯".into(), build_fplus()));
    for (name, m) in &finite {
        let g = greens(m);
        let o = greens_by_ideals(m);
        for (rel, p, q) in [
            ("L", &g.l, &o.l),
            ("R", &g.r, &o.r),
            ("H", &g.h, &o.h),
            ("D", &g.d, &o.d),
            ("J", &g.j, &o.j),
        ] {
            ensure(&min_labels(p) == q, format!("{rel} differs on {name}"))?;
        }
        for x in 0..m.order() {
            for y in 0..m.order() {
                ensure(g.j_le(x, y) == o.j_le[x][y], format!("J-order differs on {name}"))?;
            }
        }
    }
    let small: Vec<&(String, FiniteMonoid)> = finite.iter().filter(|(_, m)| m.order() <= 4).collect();
    for (name, m) in &small {
        let (all, principal) = congruences_by_scan(m);
        let got: BTreeSet<Vec<u32>> = all_congruences(m).into_iter().collect();
        let got_p: BTreeSet<Vec<u32>> = principal_congruences(m).into_iter().collect();
        ensure(got == all, format!("congruences differ on {name}"))?;
        ensure(got_p == principal, format!("principal congruences differ on {name}"))?;
    }
    let t3 = FiniteMonoid::transformation(3).map_err(|e| e.to_string())?;
    let facts = t3_by_maps();
    let e = t3.closure(t3.idempotents().iter().map(|&x| x as usize));
    let lib = (t3.idempotents().len(), e.len(), greens(&t3).d.sizes());
    ensure(
        lib == (10, 22, vec![18, 6, 3]),
        format!("library T3 facts {lib:?}"),
    )?;
    ensure(
        (facts.idempotents, facts.idempotent_generated, facts.rank_class_sizes.clone()) == lib,
        "map-level T3 facts disagree",
    )?;
    Ok(format!(
        "Green's ≡ ideal oracle on {} monoids, congruences ≡ partition scan on {}, T3 (10, 22, 6/18/3) on both paths",
        finite.len(),
        small.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("composition table", c1_composition_table),
        ("size and idempotents", c2_size_and_idempotents),
        ("J-triviality", c3_j_trivial),
        ("subsemigroup and congruence counts", c4_counts),
        ("self lattice and type", c5_self_lattice),
        ("type realisation", c6_types),
        ("shape counts", c7_shapes),
        ("lemma suites", c8_lemmas),
        ("sublattice witnesses", c9_sublattices),
        ("oracle equivalences", c10_oracles),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", k + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL {name}: {why}", k + 1);
            }
        }
    }
    println!("{}/10 criteria passed", 10 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
