//! The groups `Z`, `R` and `U(1) = R/Z` with tolerance-based equality.
//!
//! Circle elements are stored in turns (multiples of a full rotation),
//! reduced into `[0, 1)`, so `exp(2πi x)` is simply `x mod 1`.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AnalyticKind {
    Integers,
    Reals,
    Circle,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnalyticGroup {
    pub kind: AnalyticKind,
    pub epsilon: f64,
}

/// Reduces a real number of turns into `[0, 1)`.
pub fn wrap_turns(x: f64) -> f64 {
    let r = x - x.floor();
    // x.floor() can round such that r == 1.0 for tiny negative x.
    if r >= 1.0 {
        0.0
    } else {
        r
    }
}

/// Distance on the circle between two turn values, in `[0, 1/2]`.
pub fn circular_distance(a: f64, b: f64) -> f64 {
    let d = wrap_turns(a - b);
    d.min(1.0 - d)
}

/// Principal logarithm in turns: the representative in `(-1/2, 1/2]`.
pub fn principal_turns(x: f64) -> f64 {
    let r = wrap_turns(x);
    if r > 0.5 {
        r - 1.0
    } else {
        r
    }
}

impl AnalyticGroup {
    pub fn integers() -> Self {
        Self {
            kind: AnalyticKind::Integers,
            epsilon: 0.0,
        }
    }

    pub fn reals(epsilon: f64) -> Self {
        Self {
            kind: AnalyticKind::Reals,
            epsilon,
        }
    }

    pub fn circle(epsilon: f64) -> Self {
        Self {
            kind: AnalyticKind::Circle,
            epsilon,
        }
    }

    /// Canonical representative of a value.
    pub fn normalize(&self, x: f64) -> f64 {
        match self.kind {
            AnalyticKind::Integers => x.round(),
            AnalyticKind::Reals => x,
            AnalyticKind::Circle => wrap_turns(x),
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        x.is_finite()
            && match self.kind {
                AnalyticKind::Integers => x.fract() == 0.0,
                _ => true,
            }
    }

    pub fn eq(&self, a: f64, b: f64) -> bool {
        match self.kind {
            AnalyticKind::Integers => a == b,
            AnalyticKind::Reals => (a - b).abs() <= self.epsilon,
            AnalyticKind::Circle => circular_distance(a, b) <= self.epsilon,
        }
    }

    pub fn add(&self, a: f64, b: f64) -> f64 {
        self.normalize(a + b)
    }

    pub fn neg(&self, a: f64) -> f64 {
        self.normalize(-a)
    }

    pub fn zero(&self) -> f64 {
        0.0
    }

    pub fn is_zero(&self, a: f64) -> bool {
        self.eq(a, 0.0)
    }
}

/// Homomorphisms between the analytic groups.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum AnalyticMorphism {
    Identity(AnalyticKind),
    Zero(AnalyticKind, AnalyticKind),
    /// `x ↦ (num/den) x` on the reals.
    Scale { num: i64, den: i64 },
    /// `exp(2πi −) : R → U(1)`
    Exp,
    /// `Z ↪ R`
    Inclusion,
    /// `second ∘ first`
    Compose(Box<AnalyticMorphism>, Box<AnalyticMorphism>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot compose {first} with {second}: {first} lands in {mid:?}")]
pub struct AnalyticCompositionError {
    first: String,
    second: String,
    mid: AnalyticKind,
}

impl AnalyticMorphism {
    pub fn source(&self) -> AnalyticKind {
        match self {
            AnalyticMorphism::Identity(k) => *k,
            AnalyticMorphism::Zero(s, _) => *s,
            AnalyticMorphism::Scale { .. } | AnalyticMorphism::Exp => AnalyticKind::Reals,
            AnalyticMorphism::Inclusion => AnalyticKind::Integers,
            AnalyticMorphism::Compose(first, _) => first.source(),
        }
    }

    pub fn target(&self) -> AnalyticKind {
        match self {
            AnalyticMorphism::Identity(k) => *k,
            AnalyticMorphism::Zero(_, t) => *t,
            AnalyticMorphism::Scale { .. } | AnalyticMorphism::Inclusion => AnalyticKind::Reals,
            AnalyticMorphism::Exp => AnalyticKind::Circle,
            AnalyticMorphism::Compose(_, second) => second.target(),
        }
    }

    /// `second ∘ first`, checking that the kinds line up.
    pub fn then(self, second: AnalyticMorphism) -> Result<AnalyticMorphism, AnalyticCompositionError> {
        if self.target() != second.source() {
            return Err(AnalyticCompositionError {
                first: format!("{self:?}"),
                second: format!("{second:?}"),
                mid: self.target(),
            });
        }
        Ok(AnalyticMorphism::Compose(Box::new(self), Box::new(second)))
    }

    pub fn apply(&self, x: f64) -> f64 {
        match self {
            AnalyticMorphism::Identity(_) | AnalyticMorphism::Inclusion => x,
            AnalyticMorphism::Zero(..) => 0.0,
            AnalyticMorphism::Scale { num, den } => x * (*num as f64) / (*den as f64),
            AnalyticMorphism::Exp => wrap_turns(x),
            AnalyticMorphism::Compose(first, second) => second.apply(first.apply(x)),
        }
    }

    /// A real lift of a circle value through `exp`: the representative in `[0, 1)`.
    pub fn exp_lift(turns: f64) -> f64 {
        wrap_turns(turns)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn circle_equality_wraps() {
        let u = AnalyticGroup::circle(1e-12);
        assert!(u.eq(0.0, 1.0));
        assert!(u.eq(0.9999999999999, 1e-14));
        assert!(!u.eq(0.25, 0.5));
        assert_eq!(u.neg(0.25), 0.75);
    }

    #[test]
    fn principal_branch_takes_plus_half() {
        assert_eq!(principal_turns(0.5), 0.5);
        assert_eq!(principal_turns(-0.5), 0.5);
        assert_eq!(principal_turns(0.75), -0.25);
        assert_eq!(principal_turns(2.0), 0.0);
    }

    #[test]
    fn composition_checks_kinds() {
        let ok = AnalyticMorphism::Inclusion.then(AnalyticMorphism::Exp).unwrap();
        assert_eq!(ok.source(), AnalyticKind::Integers);
        assert_eq!(ok.target(), AnalyticKind::Circle);
        // Z -> R -> U(1) kills everything.
        assert!(AnalyticGroup::circle(0.0).is_zero(ok.apply(17.0)));
        assert!(AnalyticMorphism::Exp.then(AnalyticMorphism::Exp).is_err());
    }

    proptest! {
        #[test]
        fn exp_then_lift_recovers_input_mod_integers(x in -1.0e6f64..1.0e6) {
            let lifted = AnalyticMorphism::exp_lift(AnalyticMorphism::Exp.apply(x));
            let k = x - lifted;
            prop_assert!((k - k.round()).abs() < 1e-9);
            prop_assert!((0.0..1.0).contains(&lifted));
        }
    }
}
