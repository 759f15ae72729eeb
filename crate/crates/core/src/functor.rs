use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// One of the fifteen functors on the category of monoids.
///
/// Variant order is the row/column order of the composition table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FunctorId {
    O,
    E,
    G,
    GL,
    GR,
    GLR,
    F,
    FL,
    FR,
    FLR,
    Q,
    P,
    PL,
    PR,
    I,
}

impl FunctorId {
    /// All fifteen, in table order.
    pub const ALL: [FunctorId; 15] = [
        FunctorId::O,
        FunctorId::E,
        FunctorId::G,
        FunctorId::GL,
        FunctorId::GR,
        FunctorId::GLR,
        FunctorId::F,
        FunctorId::FL,
        FunctorId::FR,
        FunctorId::FLR,
        FunctorId::Q,
        FunctorId::P,
        FunctorId::PL,
        FunctorId::PR,
        FunctorId::I,
    ];

    /// The eleven functors built directly from idempotents and units.
    pub const BASE: [FunctorId; 11] = [
        FunctorId::O,
        FunctorId::E,
        FunctorId::G,
        FunctorId::GL,
        FunctorId::GR,
        FunctorId::GLR,
        FunctorId::F,
        FunctorId::FL,
        FunctorId::FR,
        FunctorId::FLR,
        FunctorId::I,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> FunctorId {
        Self::ALL[i]
    }

    pub fn is_base(self) -> bool {
        !matches!(self, FunctorId::Q | FunctorId::P | FunctorId::PL | FunctorId::PR)
    }

    /// For `Q`, `P`, `PL`, `PR`: the base functor applied after `GLR`.
    pub fn after_glr(self) -> Option<FunctorId> {
        match self {
            FunctorId::Q => Some(FunctorId::E),
            FunctorId::P => Some(FunctorId::F),
            FunctorId::PL => Some(FunctorId::FL),
            FunctorId::PR => Some(FunctorId::FR),
            _ => None,
        }
    }

    /// Position in the label order `O<E<G<GL<GR<GLR<Q<P<PL<PR<F<FL<FR<FLR<I`.
    pub fn label_rank(self) -> usize {
        use FunctorId::*;
        match self {
            O => 0,
            E => 1,
            G => 2,
            GL => 3,
            GR => 4,
            GLR => 5,
            Q => 6,
            P => 7,
            PL => 8,
            PR => 9,
            F => 10,
            FL => 11,
            FR => 12,
            FLR => 13,
            I => 14,
        }
    }

    pub fn symbol(self) -> &'static str {
        use FunctorId::*;
        match self {
            O => "O",
            E => "E",
            G => "G",
            GL => "GL",
            GR => "GR",
            GLR => "GLR",
            F => "F",
            FL => "FL",
            FR => "FR",
            FLR => "FLR",
            Q => "Q",
            P => "P",
            PL => "PL",
            PR => "PR",
            I => "I",
        }
    }
}

impl fmt::Display for FunctorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for FunctorId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let up = s.trim().to_ascii_uppercase();
        FunctorId::ALL
            .into_iter()
            .find(|f| f.symbol() == up)
            .ok_or_else(|| Error::UnknownFunctor(s.to_string()))
    }
}
