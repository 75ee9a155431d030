//! The square `(id_R, exp(2πi −))` from `id_R : R → R` to `exp : R → U(1)`,
//! with `λ = id_R` as its diagonal.
//!
//! The homotopy fiber has objects `R ×_{U(1)} R = {(g, h) : g − h ∈ Z}` and
//! `Ξ_id(g, h) = g − h` lands in `ker exp = Z`.

use crate::fgab::analytic::{circular_distance, wrap_turns};

use super::MoncatError;

/// Homotopy fiber of the exponential square, with a tolerance for the
/// fiber-product condition.
#[derive(Clone, Copy, Debug)]
pub struct ExpHofiber {
    pub epsilon: f64,
}

/// Real-valued object `(g, h)`: `g` a morphism of `exp⊗` out of the unit,
/// `h` an object of `id_R⊗`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExpObject {
    pub g: f64,
    pub h: f64,
}

impl ExpHofiber {
    pub fn new(epsilon: f64) -> Self {
        Self { epsilon }
    }

    /// `exp(2πi g) = exp(2πi h)` up to the tolerance.
    pub fn is_object(&self, o: ExpObject) -> bool {
        circular_distance(wrap_turns(o.g), wrap_turns(o.h)) <= self.epsilon
    }

    pub fn unit(&self) -> ExpObject {
        ExpObject { g: 0.0, h: 0.0 }
    }

    pub fn tensor(&self, a: ExpObject, b: ExpObject) -> ExpObject {
        ExpObject {
            g: a.g + b.g,
            h: a.h + b.h,
        }
    }

    /// `x : (g, h) → (g', h')` needs `x = g' − g` and `x = h' − h`; returns
    /// that `x` when both agree.
    pub fn hom(&self, a: ExpObject, b: ExpObject) -> Option<f64> {
        let x = b.g - a.g;
        ((b.h - a.h) - x).abs().le(&self.epsilon).then_some(x)
    }

    /// `Ξ_id(g, h) = g − h` as a real number, without rounding.
    pub fn xi_raw(&self, o: ExpObject) -> Result<f64, MoncatError> {
        if !self.is_object(o) {
            return Err(MoncatError::NotAnObject);
        }
        Ok(o.g - o.h)
    }

    /// `Ξ_id(g, h)` as an integer; fails when `g − h` is farther than the
    /// tolerance from `Z`.
    pub fn xi(&self, o: ExpObject) -> Result<i64, MoncatError> {
        let raw = self.xi_raw(o)?;
        let n = raw.round();
        if (raw - n).abs() > self.epsilon {
            return Err(MoncatError::OutsideKernel);
        }
        Ok(n as i64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xi_is_difference() {
        let f = ExpHofiber::new(1e-9);
        let o = ExpObject { g: 2.25, h: -0.75 };
        assert!(f.is_object(o));
        assert_eq!(f.xi(o).unwrap(), 3);
        assert!(f.xi(ExpObject { g: 0.5, h: 0.0 }).is_err());
        assert_eq!(f.xi(f.unit()).unwrap(), 0);
    }

    #[test]
    fn connected_objects_share_xi() {
        let f = ExpHofiber::new(1e-9);
        let a = ExpObject { g: 1.25, h: 0.25 };
        let b = ExpObject { g: 3.5, h: 2.5 };
        let x = f.hom(a, b).unwrap();
        assert_eq!(x, 2.25);
        assert_eq!(f.xi(a).unwrap(), f.xi(b).unwrap());
        let c = ExpObject { g: 3.5, h: 1.5 };
        assert!(f.hom(a, c).is_none());
    }
}
