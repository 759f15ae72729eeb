//! Green's relations of a finite monoid via strongly connected components of
//! its Cayley graphs.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::finite::FiniteMonoid;

/// A partition of `0..n`, with classes numbered by their smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub class_of: Vec<u32>,
    pub classes: Vec<Vec<u32>>,
}

impl Partition {
    /// Renumbers arbitrary labels so that equal partitions compare equal.
    pub fn from_labels<T: Copy + Eq + std::hash::Hash>(labels: &[T]) -> Partition {
        let mut ids: HashMap<T, u32> = HashMap::new();
        let mut class_of = Vec::with_capacity(labels.len());
        let mut classes: Vec<Vec<u32>> = Vec::new();
        for (x, l) in labels.iter().enumerate() {
            let next = ids.len() as u32;
            let c = *ids.entry(*l).or_insert(next);
            if c as usize == classes.len() {
                classes.push(Vec::new());
            }
            classes[c as usize].push(x as u32);
            class_of.push(c);
        }
        Partition { class_of, classes }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn is_discrete(&self) -> bool {
        self.classes.len() == self.class_of.len()
    }

    pub fn class(&self, x: usize) -> &[u32] {
        &self.classes[self.class_of[x] as usize]
    }

    pub fn same(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    /// Class sizes, sorted descending.
    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.classes.iter().map(Vec::len).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    /// True if every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.classes
            .iter()
            .all(|c| c.iter().all(|&x| other.same(c[0] as usize, x as usize)))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GreensData {
    pub l: Partition,
    pub r: Partition,
    pub h: Partition,
    pub d: Partition,
    pub j: Partition,
    /// `below[c]` is a bitset of the J-classes `≤_J` class `c`.
    #[serde(skip)]
    below: Vec<Vec<u64>>,
}

impl GreensData {
    /// `x ≤_J y`, i.e. `MxM ⊆ MyM`.
    pub fn j_le(&self, x: usize, y: usize) -> bool {
        let (cx, cy) = (self.j.class_of[x] as usize, self.j.class_of[y] as usize);
        self.class_le(cx, cy)
    }

    fn class_le(&self, a: usize, b: usize) -> bool {
        self.below[b][a / 64] >> (a % 64) & 1 == 1
    }

    pub fn is_j_trivial(&self) -> bool {
        self.j.is_discrete()
    }

    /// Covering pairs `(lower, upper)` of the J-order, as J-class indices.
    pub fn j_hasse(&self) -> Vec<(u32, u32)> {
        let k = self.j.len();
        let mut out = Vec::new();
        for b in 0..k {
            for a in 0..k {
                if a == b || !self.class_le(a, b) {
                    continue;
                }
                let covered = (0..k)
                    .any(|c| c != a && c != b && self.class_le(a, c) && self.class_le(c, b));
                if !covered {
                    out.push((a as u32, b as u32));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Computes all five relations and the J-order.
pub fn greens(m: &FiniteMonoid) -> GreensData {
    let n = m.order();
    let gens = m.generating_set();
    let (left, _) = scc(n, |x, out| out.extend(gens.iter().map(|&g| m.mul(g, x))));
    let (right, _) = scc(n, |x, out| out.extend(gens.iter().map(|&g| m.mul(x, g))));
    let (two, k) = scc(n, |x, out| {
        for &g in &gens {
            out.push(m.mul(g, x));
            out.push(m.mul(x, g));
        }
    });

    // Tarjan numbers components in completion order, so every edge of the
    // condensation goes from a higher number to a lower one.
    let words = k.div_ceil(64);
    let mut reach = vec![vec![0u64; words]; k];
    let mut by_comp: Vec<Vec<usize>> = vec![Vec::new(); k];
    for x in 0..n {
        by_comp[two[x] as usize].push(x);
    }
    for c in 0..k {
        let mut row = vec![0u64; words];
        row[c / 64] |= 1 << (c % 64);
        for &x in &by_comp[c] {
            for &g in &gens {
                for y in [m.mul(g, x), m.mul(x, g)] {
                    let d = two[y] as usize;
                    if d != c {
                        for (w, r) in row.iter_mut().zip(&reach[d]) {
                            *w |= r;
                        }
                    }
                }
            }
        }
        reach[c] = row;
    }

    let l = Partition::from_labels(&left);
    let r = Partition::from_labels(&right);
    let j = Partition::from_labels(&two);
    let pairs: Vec<(u32, u32)> = (0..n).map(|x| (l.class_of[x], r.class_of[x])).collect();
    let h = Partition::from_labels(&pairs);

    let mut uf = UnionFind::new(n);
    for c in l.classes.iter().chain(&r.classes) {
        for &x in &c[1..] {
            uf.union(c[0] as usize, x as usize);
        }
    }
    let roots: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    let d = Partition::from_labels(&roots);

    // Re-index the reachability sets by normalised J-class number.
    let comp_of_class: Vec<usize> = j.classes.iter().map(|c| two[c[0] as usize] as usize).collect();
    let kj = j.len();
    let below = comp_of_class
        .iter()
        .map(|&cb| {
            let mut row = vec![0u64; kj.div_ceil(64)];
            for (a, &ca) in comp_of_class.iter().enumerate() {
                if reach[cb][ca / 64] >> (ca % 64) & 1 == 1 {
                    row[a / 64] |= 1 << (a % 64);
                }
            }
            row
        })
        .collect();

    GreensData { l, r, h, d, j, below }
}

/// Iterative Tarjan. Returns component labels in completion order and the
/// number of components.
fn scc<F>(n: usize, mut succ: F) -> (Vec<u32>, usize)
where
    F: FnMut(usize, &mut Vec<usize>),
{
    const UNSEEN: u32 = u32::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0u32;
    let mut count = 0usize;
    // Call frames: node and its successor list with a cursor.
    let mut frames: Vec<(usize, Vec<usize>, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        macro_rules! visit {
            ($v:expr) => {{
                let v = $v;
                index[v] = next;
                low[v] = next;
                next += 1;
                stack.push(v);
                on_stack[v] = true;
                let mut s = Vec::new();
                succ(v, &mut s);
                frames.push((v, s, 0));
            }};
        }
        visit!(root);
        while let Some(top) = frames.last_mut() {
            let v = top.0;
            if top.2 < top.1.len() {
                let w = top.1[top.2];
                top.2 += 1;
                if index[w] == UNSEEN {
                    visit!(w);
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(parent) = frames.last() {
                let p = parent.0;
                low[p] = low[p].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w] = false;
                    comp[w] = count as u32;
                    if w == v {
                        break;
                    }
                }
                count += 1;
            }
        }
    }
    (comp, count)
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if the classes were distinct.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // Keep the smaller index as root so labels are canonical.
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Eggbox diagram as plain text: one block per D-class, R-classes as rows,
/// L-classes as columns, idempotents marked with `*`.
pub fn eggbox_text(m: &FiniteMonoid, g: &GreensData) -> String {
    let mut out = String::new();
    for (k, cells) in eggbox_cells(m, g).iter().enumerate() {
        let size: usize = cells.iter().flatten().map(Vec::len).sum();
        let _ = writeln!(out, "D-class {k} (size {size})");
        for row in cells {
            let line: Vec<String> = row.iter().map(|cell| format!("[{}]", cell.join(" "))).collect();
            let _ = writeln!(out, "  {}", line.join(" "));
        }
    }
    let hasse = g.j_hasse();
    if !hasse.is_empty() {
        let _ = writeln!(out, "J-order");
        for (a, b) in hasse {
            let _ = writeln!(
                out,
                "  {} < {}",
                j_label(m, g, a as usize),
                j_label(m, g, b as usize)
            );
        }
    }
    out
}

/// Eggbox diagram in DOT: one HTML-table node per D-class, edges for the
/// covering relation of the J-order pointing upwards.
pub fn eggbox_dot(m: &FiniteMonoid, g: &GreensData) -> String {
    let mut out = String::from("digraph eggbox {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for (k, cells) in eggbox_cells(m, g).iter().enumerate() {
        let mut label = String::from("<table border=\"0\" cellborder=\"1\" cellspacing=\"0\">");
        for row in cells {
            label.push_str("<tr>");
            for cell in row {
                let _ = write!(label, "<td>{}</td>", html_escape(&cell.join(" ")));
            }
            label.push_str("</tr>");
        }
        label.push_str("</table>");
        let _ = writeln!(out, "  d{k} [label=<{label}>];");
    }
    // For finite monoids D = J, so D-class k is J-class k.
    for (a, b) in g.j_hasse() {
        let _ = writeln!(out, "  d{a} -> d{b};");
    }
    out.push_str("}\n");
    out
}

type Cells = Vec<Vec<Vec<String>>>;

fn eggbox_cells(m: &FiniteMonoid, g: &GreensData) -> Vec<Cells> {
    g.d.classes
        .iter()
        .map(|dc| {
            let mut rows: Vec<u32> = dc.iter().map(|&x| g.r.class_of[x as usize]).collect();
            let mut cols: Vec<u32> = dc.iter().map(|&x| g.l.class_of[x as usize]).collect();
            rows.sort_unstable();
            rows.dedup();
            cols.sort_unstable();
            cols.dedup();
            let mut cells = vec![vec![Vec::new(); cols.len()]; rows.len()];
            for &x in dc {
                let x = x as usize;
                let i = rows.binary_search(&g.r.class_of[x]).unwrap();
                let j = cols.binary_search(&g.l.class_of[x]).unwrap();
                let mark = if m.is_idempotent(x) { "*" } else { "" };
                cells[i][j].push(format!("{}{}", m.name(x), mark));
            }
            cells
        })
        .collect()
}

fn j_label(m: &FiniteMonoid, g: &GreensData, c: usize) -> String {
    let names: Vec<String> = g.j.classes[c].iter().map(|&x| m.name(x as usize)).collect();
    names.join("=")
}

fn html_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_has_one_class() {
        let g = greens(&FiniteMonoid::cyclic_group(4).unwrap());
        for p in [&g.l, &g.r, &g.h, &g.d, &g.j] {
            assert_eq!(p.len(), 1);
        }
    }

    #[test]
    fn chain_is_j_trivial() {
        let m = FiniteMonoid::semilattice_chain(2).unwrap();
        let g = greens(&m);
        assert!(g.is_j_trivial());
        // e = 1 * e, so e lies below the identity.
        assert!(g.j_le(1, 0));
        assert!(!g.j_le(0, 1));
        assert_eq!(g.j_hasse(), vec![(1, 0)]);
    }

    #[test]
    fn t3_classes() {
        let g = greens(&FiniteMonoid::transformation(3).unwrap());
        assert_eq!(g.j.sizes(), vec![18, 6, 3]);
        assert_eq!(g.d, g.j);
        assert!(g.h.refines(&g.l) && g.h.refines(&g.r));
        assert!(g.l.refines(&g.d) && g.r.refines(&g.d));
    }

    #[test]
    fn scc_on_a_cycle_and_a_tail() {
        // 0 -> 1 -> 2 -> 0, 3 -> 0
        let succ = [vec![1], vec![2], vec![0], vec![0]];
        let (c, k) = scc(4, |x, out| out.extend(&succ[x]));
        assert_eq!(k, 2);
        assert_eq!(c[0], c[1]);
        assert_eq!(c[1], c[2]);
        assert!(c[3] > c[0]);
    }

    #[test]
    fn eggbox_marks_idempotents() {
        let m = FiniteMonoid::cyclic_group(2).unwrap().adjoin_zero();
        let text = eggbox_text(&m, &greens(&m));
        assert!(text.contains("[1* g]"));
        assert!(text.contains("[0*]"));
        let dot = eggbox_dot(&m, &greens(&m));
        assert!(dot.contains("->"));
    }
}
