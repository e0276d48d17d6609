//! Designs: finite and eventually periodic binary words addressing the
//! diatomic table, and their binary decimals `θ`.

mod euclid;
mod finite;
mod parse;
mod periodic;
mod runs;
mod theta;

pub use euclid::{design_quotients, euclidean_design, partial_quotients, realizing_pair};
pub use finite::FiniteDesign;
pub use parse::parse_design;
pub use periodic::PeriodicDesign;
pub use runs::RunLengths;
pub use theta::{design_of_theta, ThetaValue};

use std::fmt;

use crate::error::Result;

/// Either kind of design the text grammar can denote.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Design {
    Finite(FiniteDesign),
    Periodic(PeriodicDesign),
}

impl Design {
    pub fn theta(&self) -> ThetaValue {
        match self {
            Design::Finite(d) => d.theta(),
            Design::Periodic(p) => p.theta(),
        }
    }

    /// Finite designs use `2^n - m`; infinite designs flip every bit.
    pub fn conjugate(&self) -> Design {
        match self {
            Design::Finite(d) => Design::Finite(d.conjugate()),
            Design::Periodic(p) => Design::Periodic(p.conjugate()),
        }
    }

    pub fn as_finite(&self) -> Option<&FiniteDesign> {
        match self {
            Design::Finite(d) => Some(d),
            Design::Periodic(_) => None,
        }
    }

    pub fn as_periodic(&self) -> Option<&PeriodicDesign> {
        match self {
            Design::Periodic(p) => Some(p),
            Design::Finite(_) => None,
        }
    }
}

impl fmt::Display for Design {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Design::Finite(d) => d.fmt(f),
            Design::Periodic(p) => p.fmt(f),
        }
    }
}

impl From<FiniteDesign> for Design {
    fn from(d: FiniteDesign) -> Self {
        Design::Finite(d)
    }
}

impl From<PeriodicDesign> for Design {
    fn from(p: PeriodicDesign) -> Self {
        Design::Periodic(p)
    }
}

/// `theta_of` for either kind.
pub fn theta_of(d: &Design) -> ThetaValue {
    d.theta()
}

/// Composes a finite design with a finite or periodic one.
pub fn compose(d: &FiniteDesign, d2: &Design) -> Result<Design> {
    match d2 {
        Design::Finite(f) => d.compose(f).map(Design::Finite),
        Design::Periodic(p) => d.compose_periodic(p).map(Design::Periodic),
    }
}

pub(crate) fn bits_to_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}
