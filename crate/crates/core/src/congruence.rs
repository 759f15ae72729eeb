//! Congruences of a finite monoid: principal congruences by pair propagation
//! and the full set as the join-closure of the principal ones.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::finite::FiniteMonoid;
use crate::greens::UnionFind;

/// Default largest order accepted by the exhaustive counters.
pub const DEFAULT_ENUMERATION_BOUND: usize = 20;

/// A congruence as a labelling: each element maps to the smallest element of
/// its class.
pub type Labels = Vec<u32>;

/// The equality congruence.
pub fn equality(m: &FiniteMonoid) -> Labels {
    (0..m.order() as u32).collect()
}

/// Merges `seeds` and closes under left and right multiplication by the
/// monoid's generators.
fn propagate(m: &FiniteMonoid, gens: &[usize], uf: &mut UnionFind, seeds: Vec<(usize, usize)>) {
    let mut queue = seeds;
    while let Some((u, v)) = queue.pop() {
        if !uf.union(u, v) {
            continue;
        }
        for &g in gens {
            queue.push((m.mul(g, u), m.mul(g, v)));
            queue.push((m.mul(u, g), m.mul(v, g)));
        }
    }
}

fn labels(uf: &mut UnionFind, n: usize) -> Labels {
    (0..n).map(|x| uf.find(x) as u32).collect()
}

/// The smallest congruence relating `x` and `y`.
pub fn principal_congruence(m: &FiniteMonoid, x: usize, y: usize) -> Labels {
    let gens = m.generating_set();
    principal_with(m, &gens, x, y)
}

fn principal_with(m: &FiniteMonoid, gens: &[usize], x: usize, y: usize) -> Labels {
    let mut uf = UnionFind::new(m.order());
    propagate(m, gens, &mut uf, vec![(x, y)]);
    labels(&mut uf, m.order())
}

/// The smallest congruence containing both.
pub fn join(m: &FiniteMonoid, gens: &[usize], a: &Labels, b: &Labels) -> Labels {
    let n = m.order();
    let mut uf = UnionFind::new(n);
    let seeds = (0..n)
        .flat_map(|x| [(x, a[x] as usize), (x, b[x] as usize)])
        .filter(|&(x, r)| x != r)
        .collect();
    propagate(m, gens, &mut uf, seeds);
    labels(&mut uf, n)
}

/// Distinct principal congruences generated by pairs `x != y`.
pub fn principal_congruences(m: &FiniteMonoid) -> Vec<Labels> {
    let gens = m.generating_set();
    let n = m.order();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let c = principal_with(m, &gens, x, y);
            if seen.insert(c.clone()) {
                out.push(c);
            }
        }
    }
    out
}

/// Every congruence, as the closure of the equality congruence under joins
/// with principal congruences.
pub fn all_congruences(m: &FiniteMonoid) -> Vec<Labels> {
    let gens = m.generating_set();
    let principal = principal_congruences(m);
    let start = equality(m);
    let mut seen: HashSet<Labels> = HashSet::from([start.clone()]);
    let mut out = vec![start];
    let mut k = 0;
    while k < out.len() {
        let c = out[k].clone();
        k += 1;
        for p in &principal {
            let j = join(m, &gens, &c, p);
            if seen.insert(j.clone()) {
                out.push(j);
            }
        }
    }
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CongruenceCounts {
    pub congruences: usize,
    /// Distinct congruences generated by one pair of distinct elements; the
    /// equality congruence is not among them.
    pub principal: usize,
}

pub fn count_congruences(m: &FiniteMonoid, bound: usize) -> Result<CongruenceCounts> {
    check_bound(m, bound)?;
    Ok(CongruenceCounts {
        congruences: all_congruences(m).len(),
        principal: principal_congruences(m).len(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsemigroupCounts {
    /// Product-closed subsets, the empty set included.
    pub closed_subsets: usize,
    /// Product-closed nonempty subsets.
    pub subsemigroups: usize,
    /// Product-closed subsets containing the identity.
    pub submonoids: usize,
}

/// Exhaustive scan of all `2^n` subsets.
pub fn count_subsemigroups(m: &FiniteMonoid, bound: usize) -> Result<SubsemigroupCounts> {
    check_bound(m, bound)?;
    let n = m.order();
    let one = m.identity();
    let mut closed = 0usize;
    let mut submonoids = 0usize;
    for mask in 0u64..1 << n {
        let is_closed = bits(mask).all(|x| bits(mask).all(|y| mask >> m.mul(x, y) & 1 == 1));
        if is_closed {
            closed += 1;
            if mask >> one & 1 == 1 {
                submonoids += 1;
            }
        }
    }
    Ok(SubsemigroupCounts {
        closed_subsets: closed,
        subsemigroups: closed - 1,
        submonoids,
    })
}

fn bits(mask: u64) -> impl Iterator<Item = usize> + Clone {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

fn check_bound(m: &FiniteMonoid, bound: usize) -> Result<()> {
    if m.order() > bound || m.order() > 63 {
        return Err(Error::BoundExceeded {
            what: "order for exhaustive enumeration",
            value: m.order(),
            bound,
        });
    }
    Ok(())
}
