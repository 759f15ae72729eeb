//! The lattices `L(M)` and `L⁺(M)` of functor values, their shape catalog and
//! Hasse diagram output.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite::FiniteMonoid;
use crate::functor::FunctorId;
use crate::invariants::{all_functor_sets, type_from_sets, MonoidType};
use crate::monoid::{MonoidRef, SubSet};

#[derive(Clone, Debug)]
pub struct LatticeNode {
    pub set: SubSet,
    /// Functors with this value, in label order.
    pub functors: Vec<FunctorId>,
}

impl LatticeNode {
    /// Functor names from largest to smallest label rank, e.g. `F=E`.
    pub fn label(&self) -> String {
        let names: Vec<&str> = self.functors.iter().rev().map(|f| f.symbol()).collect();
        names.join("=")
    }

    pub fn has(&self, x: FunctorId) -> bool {
        self.functors.contains(&x)
    }
}

#[derive(Clone, Debug)]
pub struct InvariantLattice {
    pub monoid: MonoidRef,
    pub enhanced: bool,
    pub monoid_type: MonoidType,
    /// Ordered by the smallest label rank among each node's functors.
    pub nodes: Vec<LatticeNode>,
    le: Vec<Vec<bool>>,
    /// Covering pairs `(lower, upper)`.
    pub hasse: Vec<(usize, usize)>,
}

impl InvariantLattice {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a][b]
    }

    pub fn node_of(&self, x: FunctorId) -> Option<usize> {
        self.nodes.iter().position(|n| n.has(x))
    }

    pub fn bottom(&self) -> usize {
        self.node_of(FunctorId::O).expect("O is always evaluated")
    }

    pub fn top(&self) -> usize {
        self.node_of(FunctorId::I).expect("I is always evaluated")
    }

    /// Shape identifier, e.g. `L(1,0,1,1)` or `L+(0,0,0,0)`.
    pub fn shape_id(&self) -> String {
        shape_id(self.monoid_type, self.enhanced)
    }

    pub fn describe_node(&self, k: usize) -> String {
        self.monoid.describe_set(&self.nodes[k].set)
    }
}

pub fn shape_id(t: MonoidType, enhanced: bool) -> String {
    format!("{}{}", if enhanced { "L+" } else { "L" }, t)
}

/// Evaluates the eleven (or fifteen) functors and assembles the lattice.
///
/// Fails with [`Error::JoinClosureViolation`] if the join of two nodes is not
/// a node.
pub fn build_lattice(m: &MonoidRef, enhanced: bool) -> Result<InvariantLattice> {
    let values = all_functor_sets(m)?;
    let monoid_type = type_from_sets(&values);
    let functors: &[FunctorId] = if enhanced {
        &FunctorId::ALL
    } else {
        &FunctorId::BASE
    };
    let mut order: Vec<FunctorId> = functors.to_vec();
    order.sort_by_key(|f| f.label_rank());

    let mut nodes: Vec<LatticeNode> = Vec::new();
    for x in order {
        let set = &values[x.index()];
        match nodes.iter_mut().find(|n| &n.set == set) {
            Some(n) => n.functors.push(x),
            None => nodes.push(LatticeNode {
                set: set.clone(),
                functors: vec![x],
            }),
        }
    }

    let k = nodes.len();
    let le: Vec<Vec<bool>> = (0..k)
        .map(|a| (0..k).map(|b| m.is_subset(&nodes[a].set, &nodes[b].set)).collect())
        .collect();
    let hasse = covering_pairs(&le);

    for a in 0..k {
        for b in a + 1..k {
            let j = m.join(&nodes[a].set, &nodes[b].set);
            if !nodes.iter().any(|n| n.set == j) {
                return Err(Error::JoinClosureViolation(nodes[a].label(), nodes[b].label()));
            }
        }
    }

    Ok(InvariantLattice {
        monoid: m.clone(),
        enhanced,
        monoid_type,
        nodes,
        le,
        hasse,
    })
}

fn covering_pairs(le: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let k = le.len();
    let mut out = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if a != b
                && le[a][b]
                && !(0..k).any(|c| c != a && c != b && le[a][c] && le[c][b])
            {
                out.push((a, b));
            }
        }
    }
    out
}

/// The largest node below both `s` and `t`, found as the join of all common
/// lower bounds. This can be smaller than the set intersection.
pub fn meet_in_lattice(lat: &InvariantLattice, s: usize, t: usize) -> usize {
    let m = &lat.monoid;
    let join = (0..lat.len())
        .filter(|&c| lat.le(c, s) && lat.le(c, t))
        .fold(m.identity_set(), |acc, c| m.join(&acc, &lat.nodes[c].set));
    lat.nodes
        .iter()
        .position(|n| n.set == join)
        .expect("lattice is join-closed")
}

#[derive(Clone, Debug, Serialize)]
pub struct IntersectionWitness {
    pub left: String,
    pub right: String,
    pub intersection: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SublatticeReport {
    pub holds: bool,
    /// Every pair of nodes whose intersection is not a node.
    pub witnesses: Vec<IntersectionWitness>,
}

/// Is the lattice closed under intersection, i.e. a sublattice of `Sub(M)`?
pub fn is_sublattice_of_sub(m: &MonoidRef, enhanced: bool) -> Result<SublatticeReport> {
    let lat = build_lattice(m, enhanced)?;
    let mut witnesses = Vec::new();
    for a in 0..lat.len() {
        for b in a + 1..lat.len() {
            let i = m.intersect(&lat.nodes[a].set, &lat.nodes[b].set);
            if !lat.nodes.iter().any(|n| n.set == i) {
                witnesses.push(IntersectionWitness {
                    left: lat.nodes[a].label(),
                    right: lat.nodes[b].label(),
                    intersection: m.describe_set(&i),
                });
            }
        }
    }
    Ok(SublatticeReport {
        holds: witnesses.is_empty(),
        witnesses,
    })
}

/// Catalog node count of `L(M)` or `L⁺(M)` for a monoid of type `t`.
pub fn expected_node_count(t: MonoidType, enhanced: bool) -> usize {
    let b = t.bits();
    let idx = (b[1] << 2 | b[2] << 1 | b[3]) as usize;
    const STABLE: [usize; 8] = [5, 3, 3, 2, 4, 2, 2, 1];
    const UNSTABLE: [usize; 8] = [11, 9, 10, 8, 10, 8, 9, 7];
    let plain = if t.t1 { STABLE[idx] } else { UNSTABLE[idx] };
    if !enhanced || t.t1 || t.t3 {
        return plain;
    }
    // Types (0,i,0,j).
    match (t.t2, t.t4) {
        (false, false) => 15,
        (false, true) => 12,
        (true, false) => 14,
        (true, true) => 11,
    }
}

/// The product of Z₂, the two-element chain, the free monogenic monoid and
/// `B` with exactly the factors needed to switch off the zero bits of `t`.
///
/// Each factor has a single zero bit: `B` at `t1`, the free monogenic monoid
/// at `t2`, the chain at `t3` and Z₂ at `t4`. Types multiply bitwise, so the
/// product has type `t`.
pub fn witness(t: MonoidType) -> MonoidRef {
    let mut factors = Vec::new();
    if !t.t4 {
        factors.push(MonoidRef::finite(
            FiniteMonoid::cyclic_group(2).expect("valid order"),
        ));
    }
    if !t.t3 {
        factors.push(MonoidRef::finite(
            FiniteMonoid::semilattice_chain(2).expect("valid order"),
        ));
    }
    if !t.t2 {
        factors.push(MonoidRef::monogenic());
    }
    if !t.t1 {
        factors.push(MonoidRef::bicyclic());
    }
    MonoidRef::product(factors)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    #[serde(rename = "type")]
    pub monoid_type: String,
    pub stable: bool,
    pub shape_id: String,
    pub expected_nodes: usize,
    pub actual_nodes: usize,
    pub expected_enhanced_nodes: usize,
    pub actual_enhanced_nodes: usize,
    pub pass: bool,
}

pub fn classify_shape(m: &MonoidRef) -> Result<ShapeReport> {
    let plain = build_lattice(m, false)?;
    let enhanced = build_lattice(m, true)?;
    let t = plain.monoid_type;
    let expected_nodes = expected_node_count(t, false);
    let expected_enhanced_nodes = expected_node_count(t, true);
    Ok(ShapeReport {
        monoid_type: t.to_string(),
        stable: t.is_stable(),
        shape_id: plain.shape_id(),
        expected_nodes,
        actual_nodes: plain.len(),
        expected_enhanced_nodes,
        actual_enhanced_nodes: enhanced.len(),
        pass: expected_nodes == plain.len() && expected_enhanced_nodes == enhanced.len(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HasseFormat {
    Dot,
    Text,
}

impl FromStr for HasseFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(HasseFormat::Dot),
            "text" => Ok(HasseFormat::Text),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

pub fn emit_hasse(lat: &InvariantLattice, format: HasseFormat) -> String {
    let mut out = String::new();
    match format {
        HasseFormat::Dot => {
            out.push_str("digraph lattice {\n  rankdir=BT;\n  node [shape=box, style=rounded];\n");
            for (k, n) in lat.nodes.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  n{k} [label=\"{}\", tooltip=\"{}\"];",
                    n.label(),
                    lat.describe_node(k).replace('"', "\\\"")
                );
            }
            for &(a, b) in &lat.hasse {
                let _ = writeln!(out, "  n{a} -> n{b};");
            }
            out.push_str("}\n");
        }
        HasseFormat::Text => {
            for (k, n) in lat.nodes.iter().enumerate() {
                let _ = writeln!(out, "node {}: {}", n.label(), lat.describe_node(k));
            }
            for &(a, b) in &lat.hasse {
                let _ = writeln!(out, "{} < {}", lat.nodes[a].label(), lat.nodes[b].label());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use FunctorId::*;

    #[test]
    fn z2_is_a_two_chain() {
        let z2 = MonoidRef::finite(FiniteMonoid::cyclic_group(2).unwrap());
        let lat = build_lattice(&z2, false).unwrap();
        assert_eq!(lat.len(), 2);
        assert_eq!(lat.hasse.len(), 1);
        assert_eq!(lat.nodes[lat.bottom()].label(), "E=O");
    }

    #[test]
    fn trivial_has_one_node() {
        let lat = build_lattice(&MonoidRef::trivial(), false).unwrap();
        assert_eq!(lat.len(), 1);
        assert_eq!(lat.nodes[0].label(), "I=FLR=FR=FL=F=GLR=GR=GL=G=E=O");
        assert_eq!(emit_hasse(&lat, HasseFormat::Text).lines().count(), 1);
    }

    #[test]
    fn bicyclic_lattice() {
        let lat = build_lattice(&MonoidRef::bicyclic(), false).unwrap();
        assert_eq!(lat.len(), 7);
        assert_eq!(lat.hasse.len(), 9);
        let fl = lat.node_of(FL).unwrap();
        let fr = lat.node_of(FR).unwrap();
        assert_eq!(meet_in_lattice(&lat, fl, fr), lat.node_of(E).unwrap());
        assert_eq!(meet_in_lattice(&lat, lat.top(), fl), fl);
    }

    #[test]
    fn bicyclic_zero_meet_is_not_intersection() {
        let lat = build_lattice(&MonoidRef::bicyclic_zero(), false).unwrap();
        assert_eq!(lat.len(), 8);
        let fl = lat.node_of(FL).unwrap();
        let glr = lat.node_of(GLR).unwrap();
        assert_eq!(meet_in_lattice(&lat, fl, glr), lat.node_of(GL).unwrap());
        let enhanced = build_lattice(&MonoidRef::bicyclic_zero(), true).unwrap();
        assert_eq!(enhanced.len(), 11);
    }

    #[test]
    fn witnesses_realise_their_types() {
        for t in MonoidType::all() {
            let lat = build_lattice(&witness(t), false).unwrap();
            assert_eq!(lat.monoid_type, t);
        }
    }

    #[test]
    fn format_parsing() {
        assert_eq!("DOT".parse::<HasseFormat>().unwrap(), HasseFormat::Dot);
        assert!(matches!("svg".parse::<HasseFormat>(), Err(Error::UnknownFormat(_))));
    }
}
