//! `ψ(M₃, η, W₄, ∇) = ½∫_{W₄} p₁^CW(∇) − ∫_{M₃} ω₃` and its reading as
//! `Ξ_id` on the homotopy fiber of `(id_R, exp)`.

use std::fmt;

use serde::Serialize;

use crate::moncat::{ExpHofiber, ExpObject};

use super::scene::{BnrScene, Descriptor, Providers, SceneComponent};
use super::{fmt_float, InvariantError, INTEGRALITY_TOLERANCE};

pub const PSI_CONVENTION: &str = "s3-right-handed,psi(S3,lie-framing,D4,flat-extension)=+1";

/// One alternative bounding datum tried by the certificate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Alternative {
    pub component: usize,
    pub w4: String,
    pub integer_value: i64,
    pub difference: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Certificate {
    pub alternatives: Vec<Alternative>,
    pub pairs_checked: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantResult {
    pub raw: f64,
    pub integer_value: i64,
    pub modulus: i64,
    pub residue: i64,
    pub convention: String,
    pub certificate: Option<Certificate>,
}

impl InvariantResult {
    pub(crate) fn from_raw(raw: f64, modulus: i64, tol: f64, convention: &str) -> Result<Self, InvariantError> {
        if !raw.is_finite() {
            return Err(InvariantError::NonIntegral { raw });
        }
        let n = raw.round();
        if (raw - n).abs() > tol {
            return Err(InvariantError::NonIntegral { raw });
        }
        let integer_value = n as i64;
        Ok(InvariantResult {
            raw,
            integer_value,
            modulus,
            residue: integer_value.rem_euclid(modulus),
            convention: convention.into(),
            certificate: None,
        })
    }

    /// `raw=… int=… mod24=… convention=…`.
    pub fn record(&self) -> String {
        format!(
            "raw={} int={} mod{}={} convention={}",
            fmt_float(self.raw),
            self.integer_value,
            self.modulus,
            self.residue,
            self.convention
        )
    }
}

impl fmt::Display for InvariantResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.record())?;
        if let Some(c) = &self.certificate {
            for a in &c.alternatives {
                write!(
                    f,
                    "\nalt component={} w4={} int={} diff={}",
                    a.component, a.w4, a.integer_value, a.difference
                )?;
            }
            write!(f, "\ncertified pairs={}", c.pairs_checked)?;
        }
        Ok(())
    }
}

fn sums(providers: &Providers, scene: &BnrScene) -> Result<(f64, f64), InvariantError> {
    let mut half_p1 = 0.0;
    let mut omega3 = 0.0;
    for c in &scene.components {
        let (g, h) = providers.evaluate(c)?;
        half_p1 += g;
        omega3 += h;
    }
    Ok((half_p1, omega3))
}

/// `ψ` with modulus 24, without the certificate.
pub fn psi(providers: &Providers, scene: &BnrScene) -> Result<InvariantResult, InvariantError> {
    let (half_p1, omega3) = sums(providers, scene)?;
    InvariantResult::from_raw(half_p1 - omega3, 24, INTEGRALITY_TOLERANCE, PSI_CONVENTION)
}

/// Every way the table offers of changing the bounding datum of component `i`:
/// summing in one closed spin entry over a disk, or replacing a closed base.
fn alternatives(providers: &Providers, c: &SceneComponent) -> Vec<SceneComponent> {
    let Some(table) = providers.table() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let bare = |c: &SceneComponent, key: &str| {
        let mut alt = c.clone();
        alt.w4 = Descriptor::new(alt.w4.provider, key);
        alt
    };
    if c.w4.key == "D4" {
        out.push(bare(c, "D4"));
        for e in table.spin_entries() {
            out.push(bare(c, "D4").glued(&[&e.name]));
        }
    } else {
        for e in table.spin_entries() {
            out.push(bare(c, &e.name));
        }
    }
    out
}

fn w4_label(c: &SceneComponent) -> String {
    let glue: Vec<&str> = c
        .w4
        .params
        .get("glue")
        .and_then(|g| g.as_array())
        .map(|a| a.iter().filter_map(|v| v.as_str()).collect())
        .unwrap_or_default();
    std::iter::once(c.w4.key.as_str()).chain(glue).collect::<Vec<_>>().join("#")
}

/// `ψ` together with a check that every alternative bounding datum in the
/// table changes the value by a multiple of 24.
pub fn psi_certified(providers: &Providers, scene: &BnrScene) -> Result<InvariantResult, InvariantError> {
    let mut result = psi(providers, scene)?;
    let mut values = vec![result.integer_value];
    let mut cert = Certificate::default();
    for (i, c) in scene.components.iter().enumerate() {
        for alt in alternatives(providers, c) {
            let mut changed = scene.clone();
            changed.components[i] = alt.clone();
            let r = psi(providers, &changed)?;
            cert.alternatives.push(Alternative {
                component: i,
                w4: w4_label(&alt),
                integer_value: r.integer_value,
                difference: r.integer_value - result.integer_value,
            });
            values.push(r.integer_value);
        }
    }
    for (a, &x) in values.iter().enumerate() {
        for &y in &values[a + 1..] {
            cert.pairs_checked += 1;
            if (x - y).rem_euclid(24) != 0 {
                return Err(InvariantError::NotCertified {
                    modulus: 24,
                    difference: x - y,
                });
            }
        }
    }
    result.certificate = Some(cert);
    Ok(result)
}

/// The scene read as an object of the homotopy fiber of `(id_R, exp)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HofiberSemantics {
    /// One object `(½∫p₁^CW, ∫ω₃)` per component: the first entry is the
    /// value of the connecting bordism `∅ → (M₃, η)` under the spin field
    /// theory, the second the value of `(M₃, η)` under the string one.
    pub components: Vec<ExpObject>,
    pub object: ExpObject,
    /// `Ξ_id(object)`.
    pub value: f64,
}

impl fmt::Display for HofiberSemantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "object=({}, {}) components={} xi={}",
            fmt_float(self.object.g),
            fmt_float(self.object.h),
            self.components.len(),
            fmt_float(self.value)
        )
    }
}

/// Evaluates the scene through the homotopy fiber and checks that the
/// result is `psi(scene).raw` exactly.
pub fn hofiber_bordism_semantics(providers: &Providers, scene: &BnrScene) -> Result<HofiberSemantics, InvariantError> {
    let fiber = ExpHofiber::new(INTEGRALITY_TOLERANCE);
    let mut components = Vec::with_capacity(scene.components.len());
    let mut object = fiber.unit();
    for c in &scene.components {
        let (g, h) = providers.evaluate(c)?;
        let o = ExpObject { g, h };
        if !fiber.is_object(o) {
            return Err(InvariantError::NonIntegral { raw: g - h });
        }
        components.push(o);
        object = fiber.tensor(object, o);
    }
    let value = fiber
        .xi_raw(object)
        .map_err(|_| InvariantError::NonIntegral { raw: object.g - object.h })?;
    let direct = psi(providers, scene)?;
    if value.to_bits() != direct.raw.to_bits() {
        return Err(InvariantError::Factorization {
            hofiber: value,
            psi: direct.raw,
        });
    }
    Ok(HofiberSemantics {
        components,
        object,
        value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::scene::ProviderKind;

    #[test]
    fn generator_is_one() {
        let p = Providers::builtin();
        for kind in [ProviderKind::Table, ProviderKind::Quadrature] {
            let r = psi(&p, &BnrScene::single(SceneComponent::s3_generator(kind))).unwrap();
            assert_eq!((r.integer_value, r.residue), (1, 1));
        }
    }

    #[test]
    fn k3_gluing_shifts_by_minus_24() {
        let p = Providers::builtin();
        let c = SceneComponent::s3_generator(ProviderKind::Quadrature);
        let base = psi(&p, &BnrScene::single(c.clone())).unwrap();
        let glued = psi(&p, &BnrScene::single(c.glued(&["K3"]))).unwrap();
        assert_eq!(glued.integer_value - base.integer_value, -24);
        assert_eq!(glued.residue, base.residue);
    }

    #[test]
    fn certificate_covers_table() {
        let p = Providers::builtin();
        let r = psi_certified(&p, &BnrScene::single(SceneComponent::s3_generator(ProviderKind::Table))).unwrap();
        let cert = r.certificate.unwrap();
        assert_eq!(cert.alternatives.len(), 1 + p.table().unwrap().spin_entries().count());
        assert!(cert.alternatives.iter().any(|a| a.w4 == "D4#K3#K3" || a.w4 == "D4#K3"));
        assert!(cert.alternatives.iter().all(|a| a.difference % 24 == 0));
    }

    #[test]
    fn empty_scene_is_zero() {
        let p = Providers::builtin();
        let r = psi(&p, &BnrScene::empty()).unwrap();
        assert_eq!(r.record(), format!("raw=0.00000000000e0 int=0 mod24=0 convention={PSI_CONVENTION}"));
        let h = hofiber_bordism_semantics(&p, &BnrScene::empty()).unwrap();
        assert_eq!(h.object, ExpObject { g: 0.0, h: 0.0 });
    }

    #[test]
    fn hofiber_matches_psi_bitwise() {
        let p = Providers::builtin();
        let a = BnrScene::single(SceneComponent::s3_generator(ProviderKind::Quadrature));
        let b = BnrScene::single(SceneComponent::closed("K3"));
        let s = a.disjoint_union(&b);
        let h = hofiber_bordism_semantics(&p, &s).unwrap();
        assert_eq!(h.value.to_bits(), psi(&p, &s).unwrap().raw.to_bits());
        assert_eq!(psi(&p, &s).unwrap().integer_value, -23);
    }
}
