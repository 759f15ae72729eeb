//! Exact arithmetic in the bicyclic monoid `B = <a, b | ba = 1>`, the monoid
//! `B^0` obtained by adjoining a zero, and a catalog of the submonoids of
//! `B^0` that the functors can produce.
//!
//! The free monogenic monoid `{1, a, a^2, ...}` is modelled as the catalog
//! entry `<a>`, so every symbolic monoid lives inside the single universe
//! `B^0` and handle equality is catalog-name equality.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

/// Coordinate bound used when membership is checked by sampling.
pub const SAMPLE_BOUND: u64 = 12;

/// An element of `B^0`: either the word `a^m b^n` or the adjoined zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BicyclicElement {
    Word { m: u64, n: u64 },
    Zero,
}

impl BicyclicElement {
    pub const ONE: BicyclicElement = BicyclicElement::Word { m: 0, n: 0 };
    pub const A: BicyclicElement = BicyclicElement::Word { m: 1, n: 0 };
    pub const B: BicyclicElement = BicyclicElement::Word { m: 0, n: 1 };

    pub fn word(m: u64, n: u64) -> Self {
        BicyclicElement::Word { m, n }
    }

    pub fn is_idempotent(self) -> bool {
        self * self == self
    }
}

impl Mul for BicyclicElement {
    type Output = Self;

    /// `a^m b^n * a^k b^l = a^(m + mu - n) b^(l + mu - k)` with `mu = max(n, k)`.
    fn mul(self, other: Self) -> Self {
        match (self, other) {
            (BicyclicElement::Word { m, n }, BicyclicElement::Word { m: k, n: l }) => {
                let mu = n.max(k);
                BicyclicElement::Word {
                    m: m + mu - n,
                    n: l + mu - k,
                }
            }
            _ => BicyclicElement::Zero,
        }
    }
}

impl fmt::Display for BicyclicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BicyclicElement::Zero => write!(f, "0"),
            BicyclicElement::Word { m: 0, n: 0 } => write!(f, "1"),
            BicyclicElement::Word { m, n } => {
                let mut first = true;
                for (sym, e) in [("a", m), ("b", n)] {
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, " ")?;
                    }
                    first = false;
                    if e == 1 {
                        write!(f, "{sym}")?;
                    } else {
                        write!(f, "{sym}^{e}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// The zero-free part of a catalog entry, as a region of the `(m, n)` quadrant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Region {
    /// `{1}`
    One,
    /// `{a^m b^m}`, all idempotents of `B`
    Diagonal,
    /// `<a>`
    PowA,
    /// `<b>`
    PowB,
    /// `{a^m b^n : m >= n}`
    Upper,
    /// `{a^m b^n : m <= n}`
    Lower,
    /// `B`
    All,
}

impl Region {
    pub const ALL: [Region; 7] = [
        Region::One,
        Region::Diagonal,
        Region::PowA,
        Region::PowB,
        Region::Upper,
        Region::Lower,
        Region::All,
    ];

    pub fn contains(self, m: u64, n: u64) -> bool {
        match self {
            Region::One => m == 0 && n == 0,
            Region::Diagonal => m == n,
            Region::PowA => n == 0,
            Region::PowB => m == 0,
            Region::Upper => m >= n,
            Region::Lower => m <= n,
            Region::All => true,
        }
    }

    /// Hardcoded inclusion order.
    pub fn is_within(self, other: Region) -> bool {
        use Region::*;
        self == other
            || self == One
            || other == All
            || matches!(
                (self, other),
                (Diagonal, Upper) | (Diagonal, Lower) | (PowA, Upper) | (PowB, Lower)
            )
    }

    /// Set intersection. The catalog is closed under it.
    pub fn meet(self, other: Region) -> Region {
        if self.is_within(other) {
            self
        } else if other.is_within(self) {
            other
        } else {
            match (self, other) {
                (Region::Upper, Region::Lower) | (Region::Lower, Region::Upper) => {
                    Region::Diagonal
                }
                _ => Region::One,
            }
        }
    }

    /// The submonoid generated by the union.
    pub fn join(self, other: Region) -> Region {
        use Region::*;
        if self.is_within(other) {
            other
        } else if other.is_within(self) {
            self
        } else {
            match (self, other) {
                (Diagonal, PowA) | (PowA, Diagonal) => Upper,
                (Diagonal, PowB) | (PowB, Diagonal) => Lower,
                _ => All,
            }
        }
    }

    fn describe(self) -> &'static str {
        match self {
            Region::One => "{1}",
            Region::Diagonal => "{a^m b^m : m ≥ 0}",
            Region::PowA => "⟨a⟩ = {a^m : m ≥ 0}",
            Region::PowB => "⟨b⟩ = {b^n : n ≥ 0}",
            Region::Upper => "{a^m b^n : m ≥ n}",
            Region::Lower => "{a^m b^n : m ≤ n}",
            Region::All => "B",
        }
    }

    fn id(self) -> &'static str {
        match self {
            Region::One => "one",
            Region::Diagonal => "diag",
            Region::PowA => "pow-a",
            Region::PowB => "pow-b",
            Region::Upper => "upper",
            Region::Lower => "lower",
            Region::All => "bicyclic",
        }
    }
}

/// A named submonoid of `B^0`: a region, optionally with the zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CatalogSet {
    pub region: Region,
    pub zero: bool,
}

impl CatalogSet {
    pub const fn new(region: Region, zero: bool) -> Self {
        CatalogSet { region, zero }
    }

    pub const ONE: CatalogSet = CatalogSet::new(Region::One, false);
    /// The free monogenic monoid.
    pub const NAT: CatalogSet = CatalogSet::new(Region::PowA, false);
    pub const BICYCLIC: CatalogSet = CatalogSet::new(Region::All, false);
    pub const BICYCLIC_ZERO: CatalogSet = CatalogSet::new(Region::All, true);

    /// Every catalog entry, in a fixed order.
    pub fn all() -> impl Iterator<Item = CatalogSet> {
        [false, true]
            .into_iter()
            .flat_map(|z| Region::ALL.into_iter().map(move |r| CatalogSet::new(r, z)))
    }

    pub fn contains(self, x: BicyclicElement) -> bool {
        match x {
            BicyclicElement::Zero => self.zero,
            BicyclicElement::Word { m, n } => self.region.contains(m, n),
        }
    }

    pub fn is_within(self, other: CatalogSet) -> bool {
        self.region.is_within(other.region) && (!self.zero || other.zero)
    }

    pub fn meet(self, other: CatalogSet) -> CatalogSet {
        CatalogSet::new(self.region.meet(other.region), self.zero && other.zero)
    }

    pub fn join(self, other: CatalogSet) -> CatalogSet {
        CatalogSet::new(self.region.join(other.region), self.zero || other.zero)
    }

    /// The idempotents of this entry; they already form a submonoid.
    pub fn idempotents(self) -> CatalogSet {
        CatalogSet::new(self.region.meet(Region::Diagonal), self.zero)
    }

    /// Left units of the entry viewed as a monoid. `a^k` has a left inverse
    /// only in `b^k`, so nontrivial left units need both `<a>` and `<b>`.
    pub fn left_units(self) -> CatalogSet {
        if self.region == Region::All {
            CatalogSet::new(Region::PowA, false)
        } else {
            CatalogSet::ONE
        }
    }

    pub fn right_units(self) -> CatalogSet {
        if self.region == Region::All {
            CatalogSet::new(Region::PowB, false)
        } else {
            CatalogSet::ONE
        }
    }

    pub fn has_infinitely_many_idempotents(self) -> bool {
        self.idempotents().region == Region::Diagonal
    }

    pub fn is_finite(self) -> bool {
        self.region == Region::One
    }

    /// Elements with both exponents at most `bound`, plus the zero if present.
    pub fn sample(self, bound: u64) -> Vec<BicyclicElement> {
        let mut out = Vec::new();
        for m in 0..=bound {
            for n in 0..=bound {
                if self.region.contains(m, n) {
                    out.push(BicyclicElement::word(m, n));
                }
            }
        }
        if self.zero {
            out.push(BicyclicElement::Zero);
        }
        out
    }

    /// Stable machine identifier, e.g. `upper+0`.
    pub fn id(self) -> String {
        if self.zero {
            format!("{}+0", self.region.id())
        } else {
            self.region.id().to_string()
        }
    }

    pub fn from_id(s: &str) -> Option<CatalogSet> {
        let (base, zero) = match s.strip_suffix("+0") {
            Some(b) => (b, true),
            None => (s, false),
        };
        Region::ALL
            .into_iter()
            .find(|r| r.id() == base)
            .map(|r| CatalogSet::new(r, zero))
    }
}

impl fmt::Display for CatalogSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.region, self.zero) {
            (Region::All, true) => write!(f, "B^0"),
            (Region::One, true) => write!(f, "{{1, 0}}"),
            (r, false) => write!(f, "{}", r.describe()),
            (r, true) => write!(f, "{} ∪ {{0}}", r.describe()),
        }
    }
}

/// Closure of `gens` inside the window of exponents `<= bound`; products
/// leaving the window are dropped.
pub fn window_closure(gens: &[BicyclicElement], bound: u64) -> Vec<BicyclicElement> {
    let in_window = |x: BicyclicElement| match x {
        BicyclicElement::Zero => true,
        BicyclicElement::Word { m, n } => m <= bound && n <= bound,
    };
    let mut set = std::collections::BTreeSet::new();
    set.insert(BicyclicElement::ONE);
    let gens: Vec<_> = gens.iter().copied().filter(|&g| in_window(g)).collect();
    let mut queue: Vec<BicyclicElement> = vec![BicyclicElement::ONE];
    while let Some(x) = queue.pop() {
        for &g in &gens {
            for y in [x * g, g * x] {
                if in_window(y) && set.insert(y) {
                    queue.push(y);
                }
            }
        }
    }
    set.into_iter().collect()
}

/// Identifies the submonoid of `parent` generated by `gens`, if it is a
/// catalog entry: the smallest entry containing the generators must agree
/// with the windowed closure on a smaller window.
pub fn generated_entry(parent: CatalogSet, gens: &[BicyclicElement]) -> Option<CatalogSet> {
    if gens.iter().any(|&g| !parent.contains(g)) {
        return None;
    }
    let candidate = CatalogSet::all()
        .filter(|c| c.is_within(parent) && gens.iter().all(|&g| c.contains(g)))
        .find(|c| {
            CatalogSet::all()
                .filter(|d| d.is_within(parent) && gens.iter().all(|&g| d.contains(g)))
                .all(|d| c.is_within(d))
        })?;
    let closure = window_closure(gens, 2 * SAMPLE_BOUND);
    let inner = |x: &BicyclicElement| match *x {
        BicyclicElement::Zero => true,
        BicyclicElement::Word { m, n } => m <= SAMPLE_BOUND && n <= SAMPLE_BOUND,
    };
    let got: Vec<_> = closure.into_iter().filter(inner).collect();
    let want = candidate.sample(SAMPLE_BOUND);
    (got == want).then_some(candidate)
}
