//! Brute-force oracles shared by the integration tests. They use only the
//! multiplication table, never the library's algorithms.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use idunit::FiniteMonoid;

/// Green's relations and the J-order computed by comparing principal ideals.
pub struct IdealGreens {
    pub l: Vec<u32>,
    pub r: Vec<u32>,
    pub j: Vec<u32>,
    pub h: Vec<u32>,
    pub d: Vec<u32>,
    /// `j_le[x][y]` iff `MxM ⊆ MyM`.
    pub j_le: Vec<Vec<bool>>,
}

fn ideal(m: &FiniteMonoid, f: impl Fn(usize) -> Vec<usize>) -> Vec<BTreeSet<usize>> {
    (0..m.order()).map(|x| f(x).into_iter().collect()).collect()
}

/// Labels each element by the smallest element equivalent to it.
fn classes(n: usize, same: impl Fn(usize, usize) -> bool) -> Vec<u32> {
    (0..n)
        .map(|x| (0..n).find(|&y| same(x, y)).unwrap() as u32)
        .collect()
}

pub fn greens_by_ideals(m: &FiniteMonoid) -> IdealGreens {
    let n = m.order();
    let left = ideal(m, |x| (0..n).map(|a| m.mul(a, x)).collect());
    let right = ideal(m, |x| (0..n).map(|a| m.mul(x, a)).collect());
    let two = ideal(m, |x| {
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| m.mul(m.mul(a, x), b))
            .collect()
    });
    let l = classes(n, |x, y| left[x] == left[y]);
    let r = classes(n, |x, y| right[x] == right[y]);
    let j = classes(n, |x, y| two[x] == two[y]);
    let h = classes(n, |x, y| l[x] == l[y] && r[x] == r[y]);
    let d = classes(n, |x, y| (0..n).any(|z| l[x] == l[z] && r[z] == r[y]));
    let j_le = (0..n)
        .map(|x| (0..n).map(|y| two[x].is_subset(&two[y])).collect())
        .collect();
    IdealGreens { l, r, j, h, d, j_le }
}

/// Labels of a library partition in the same smallest-element form.
pub fn min_labels(p: &idunit::Partition) -> Vec<u32> {
    p.class_of
        .iter()
        .map(|&c| p.classes[c as usize][0])
        .collect()
}

/// Every set partition of `0..n` as restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, n: usize, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let max = prefix.iter().copied().max().map_or(0, |m| m + 1);
        for b in 0..=max {
            prefix.push(b);
            go(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

fn is_congruence(m: &FiniteMonoid, p: &[u32]) -> bool {
    let n = m.order();
    (0..n).all(|x| {
        (0..n).filter(|&y| p[x] == p[y]).all(|y| {
            (0..n).all(|s| p[m.mul(s, x)] == p[m.mul(s, y)] && p[m.mul(x, s)] == p[m.mul(y, s)])
        })
    })
}

fn canonical(p: &[u32]) -> Vec<u32> {
    classes(p.len(), |x, y| p[x] == p[y])
}

/// All congruences by scanning every partition, and the distinct principal
/// ones as meets of all congruences relating a pair.
pub fn congruences_by_scan(m: &FiniteMonoid) -> (BTreeSet<Vec<u32>>, BTreeSet<Vec<u32>>) {
    let n = m.order();
    let all: Vec<Vec<u32>> = set_partitions(n)
        .into_iter()
        .filter(|p| is_congruence(m, p))
        .map(|p| canonical(&p))
        .collect();
    let mut principal = BTreeSet::new();
    for x in 0..n {
        for y in x + 1..n {
            let containing: Vec<&Vec<u32>> = all.iter().filter(|p| p[x] == p[y]).collect();
            let meet = classes(n, |a, b| containing.iter().all(|p| p[a] == p[b]));
            principal.insert(meet);
        }
    }
    (all.into_iter().collect(), principal)
}

/// Facts about the full transformation monoid on three points, computed on
/// explicit maps.
pub struct T3Facts {
    pub idempotents: usize,
    pub idempotent_generated: usize,
    pub rank_class_sizes: Vec<usize>,
}

pub fn t3_by_maps() -> T3Facts {
    let mut maps = Vec::new();
    for a in 0..3u8 {
        for b in 0..3u8 {
            for c in 0..3u8 {
                maps.push([a, b, c]);
            }
        }
    }
    let compose = |f: [u8; 3], g: [u8; 3]| [f[g[0] as usize], f[g[1] as usize], f[g[2] as usize]];
    let idem: Vec<[u8; 3]> = maps.iter().copied().filter(|&f| compose(f, f) == f).collect();
    // Fixpoint of pairwise products starting from the idempotents and the identity.
    let mut set: HashSet<[u8; 3]> = idem.iter().copied().collect();
    set.insert([0, 1, 2]);
    loop {
        let cur: Vec<[u8; 3]> = set.iter().copied().collect();
        let before = set.len();
        for &f in &cur {
            for &g in &cur {
                set.insert(compose(f, g));
            }
        }
        if set.len() == before {
            break;
        }
    }
    let rank = |f: &[u8; 3]| f.iter().collect::<BTreeSet<_>>().len();
    let mut sizes: Vec<usize> = (1..=3).map(|r| maps.iter().filter(|f| rank(f) == r).count()).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    T3Facts {
        idempotents: idem.len(),
        idempotent_generated: set.len(),
        rank_class_sizes: sizes,
    }
}
