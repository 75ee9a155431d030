//! Scene descriptors `(M₃, η, W₄, ∇)` and the providers that turn them into
//! the two integrals `∫ω₃` and `½∫p₁^CW`.
//!
//! Vocabulary:
//!
//! | block   | keys                                                     |
//! |---------|----------------------------------------------------------|
//! | `m3`    | `S3`, `S3-opp`, `empty`                                  |
//! | `eta`   | `lie-framing` (on `S3`, `S3-opp`), `none` (on `empty`)   |
//! | `w4`    | `D4`, or the name of a closed spin table entry; `params.glue` lists closed spin entries summed in |
//! | `nabla` | `flat-extension` (on `D4`), `chern-weil` (closed bases)  |
//!
//! The quadrature provider takes `params.refine` for `eta`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::cs::cs_su2_quadrature;
use super::table::Closed4Table;
use super::InvariantError;

pub const DEFAULT_REFINEMENT: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProviderKind {
    Table,
    Quadrature,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Descriptor {
    pub provider: ProviderKind,
    pub key: String,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub params: Value,
}

impl Descriptor {
    pub fn new(provider: ProviderKind, key: &str) -> Self {
        Descriptor {
            provider,
            key: key.into(),
            params: Value::Null,
        }
    }

    pub fn with_params(mut self, params: Value) -> Self {
        self.params = params;
        self
    }

    fn refine(&self) -> Result<Option<usize>, InvariantError> {
        match self.params.get("refine") {
            None => Ok(None),
            Some(v) => match v.as_u64() {
                Some(n) if n >= 1 => Ok(Some(n as usize)),
                _ => Err(InvariantError::Descriptor(format!(
                    "{}: params.refine must be a positive integer",
                    self.key
                ))),
            },
        }
    }

    fn glue(&self) -> Result<Vec<String>, InvariantError> {
        match self.params.get("glue") {
            None => Ok(Vec::new()),
            Some(Value::Array(items)) => items
                .iter()
                .map(|v| {
                    v.as_str().map(str::to_owned).ok_or_else(|| {
                        InvariantError::Descriptor(format!("{}: params.glue must list names", self.key))
                    })
                })
                .collect(),
            Some(_) => Err(InvariantError::Descriptor(format!(
                "{}: params.glue must be an array",
                self.key
            ))),
        }
    }
}

/// One connected piece `(M₃, η, W₄, ∇)` of a scene.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneComponent {
    pub m3: Descriptor,
    pub eta: Descriptor,
    pub w4: Descriptor,
    pub nabla: Descriptor,
}

impl SceneComponent {
    /// Lie-framed `S³` bounding the flat-extension disk.
    pub fn s3_generator(eta_provider: ProviderKind) -> Self {
        SceneComponent {
            m3: Descriptor::new(ProviderKind::Table, "S3"),
            eta: Descriptor::new(eta_provider, "lie-framing"),
            w4: Descriptor::new(ProviderKind::Table, "D4"),
            nabla: Descriptor::new(ProviderKind::Table, "flat-extension"),
        }
    }

    /// A closed spin 4-manifold from the table, seen as a bordism out of `∅`.
    pub fn closed(name: &str) -> Self {
        SceneComponent {
            m3: Descriptor::new(ProviderKind::Table, "empty"),
            eta: Descriptor::new(ProviderKind::Table, "none"),
            w4: Descriptor::new(ProviderKind::Table, name),
            nabla: Descriptor::new(ProviderKind::Table, "chern-weil"),
        }
    }

    pub fn glued(mut self, names: &[&str]) -> Self {
        let mut glue = self.w4.glue().unwrap_or_default();
        glue.extend(names.iter().map(|s| s.to_string()));
        let mut params = match self.w4.params.take() {
            Value::Object(m) => m,
            _ => serde_json::Map::new(),
        };
        params.insert("glue".into(), glue.into());
        self.w4.params = Value::Object(params);
        self
    }
}

/// Disjoint union of components; the empty scene has none.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BnrScene {
    pub components: Vec<SceneComponent>,
}

impl BnrScene {
    pub fn empty() -> Self {
        BnrScene::default()
    }

    pub fn single(c: SceneComponent) -> Self {
        BnrScene { components: vec![c] }
    }

    pub fn disjoint_union(&self, other: &BnrScene) -> BnrScene {
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned());
        BnrScene { components }
    }

    /// Accepts either `{"components": [...]}` or a single component object.
    pub fn from_value(v: Value) -> Result<Self, serde_json::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum File {
            Many(BnrScene),
            One(Box<SceneComponent>),
        }
        Ok(match serde_json::from_value(v)? {
            File::Many(s) => s,
            File::One(c) => BnrScene::single(*c),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Boundary {
    Empty,
    S3 { sign: i8 },
}

fn parse_m3(d: &Descriptor) -> Result<Boundary, InvariantError> {
    match d.key.as_str() {
        "empty" => Ok(Boundary::Empty),
        "S3" => Ok(Boundary::S3 { sign: 1 }),
        "S3-opp" => Ok(Boundary::S3 { sign: -1 }),
        k => Err(InvariantError::UnknownDescriptor(format!("m3 {k:?}"))),
    }
}

/// Source of the two integrals in `ψ`.
#[derive(Clone, Debug)]
pub enum SpinGeometryProvider {
    /// Exact values: the characteristic-number table for 4-manifolds, and
    /// `∫_{S³} ω₃ = ∓1` for the Lie framing.
    Table(Arc<Closed4Table>),
    /// `∫_{S³} ω₃` by quadrature of the Chern–Simons form. Knows only flat
    /// 4-dimensional data.
    Quadrature { refinement: usize },
}

impl SpinGeometryProvider {
    pub fn kind(&self) -> ProviderKind {
        match self {
            SpinGeometryProvider::Table(_) => ProviderKind::Table,
            SpinGeometryProvider::Quadrature { .. } => ProviderKind::Quadrature,
        }
    }

    /// `∫_{M₃} ω₃`. With the orientation and normalization used here the
    /// Lie-framed `S³` has `∫ω₃ = −1`, so that it has `ψ = +1`.
    pub fn omega3(&self, m3: &Descriptor, eta: &Descriptor) -> Result<f64, InvariantError> {
        let boundary = parse_m3(m3)?;
        match (boundary, eta.key.as_str()) {
            (Boundary::Empty, "none") => Ok(0.0),
            (Boundary::S3 { sign }, "lie-framing") => {
                let unit = match self {
                    SpinGeometryProvider::Table(_) => -1.0,
                    SpinGeometryProvider::Quadrature { refinement } => {
                        let n = eta.refine()?.unwrap_or(*refinement);
                        -cs_su2_quadrature(n)
                    }
                };
                Ok(f64::from(sign) * unit)
            }
            (_, k) => Err(InvariantError::Incompatible(format!(
                "string structure {k:?} on {:?}",
                m3.key
            ))),
        }
    }

    /// `½∫_{W₄} p₁^CW(∇)`.
    pub fn half_p1(&self, w4: &Descriptor, nabla: &Descriptor) -> Result<f64, InvariantError> {
        let glue = w4.glue()?;
        let base = match (w4.key.as_str(), nabla.key.as_str()) {
            ("D4", "flat-extension") => 0.0,
            ("D4", k) | (_, k @ "flat-extension") => {
                return Err(InvariantError::Incompatible(format!(
                    "connection {k:?} on {:?}",
                    w4.key
                )))
            }
            (name, "chern-weil") => self.closed_half_p1(name)?,
            (_, k) => return Err(InvariantError::UnknownDescriptor(format!("nabla {k:?}"))),
        };
        glue.iter().try_fold(base, |acc, name| Ok(acc + self.closed_half_p1(name)?))
    }

    fn closed_half_p1(&self, name: &str) -> Result<f64, InvariantError> {
        match self {
            SpinGeometryProvider::Table(t) => {
                let e = t
                    .get(name)
                    .ok_or_else(|| InvariantError::UnknownDescriptor(format!("w4 {name:?}")))?;
                if !e.spin {
                    return Err(InvariantError::NotSpin(name.into()));
                }
                Ok(e.integral_p1 as f64 / 2.0)
            }
            SpinGeometryProvider::Quadrature { .. } => Err(InvariantError::UnknownDescriptor(format!(
                "quadrature provider has no Chern–Weil data for {name:?}"
            ))),
        }
    }
}

/// One provider of each kind; descriptors pick theirs.
#[derive(Clone, Debug)]
pub struct Providers {
    pub table: SpinGeometryProvider,
    pub quadrature: SpinGeometryProvider,
}

impl Providers {
    pub fn new(table: Arc<Closed4Table>, refinement: usize) -> Self {
        Providers {
            table: SpinGeometryProvider::Table(table),
            quadrature: SpinGeometryProvider::Quadrature { refinement },
        }
    }

    pub fn builtin() -> Self {
        Self::new(Arc::new(Closed4Table::builtin()), DEFAULT_REFINEMENT)
    }

    pub fn get(&self, kind: ProviderKind) -> &SpinGeometryProvider {
        match kind {
            ProviderKind::Table => &self.table,
            ProviderKind::Quadrature => &self.quadrature,
        }
    }

    pub fn table(&self) -> Option<&Closed4Table> {
        match &self.table {
            SpinGeometryProvider::Table(t) => Some(t),
            SpinGeometryProvider::Quadrature { .. } => None,
        }
    }

    /// Whether `∇` restricts on `∂W₄` to the connection underlying `η`. Only
    /// two shapes are known to match: the flat extension over `D⁴` of the
    /// Lie-framed sphere, and a closed base over the empty boundary.
    pub fn boundary_compatible(&self, c: &SceneComponent) -> bool {
        let Ok(boundary) = parse_m3(&c.m3) else {
            return false;
        };
        match (boundary, c.eta.key.as_str(), c.w4.key.as_str(), c.nabla.key.as_str()) {
            (Boundary::S3 { .. }, "lie-framing", "D4", "flat-extension") => true,
            (Boundary::Empty, "none", w, "chern-weil") => w != "D4",
            _ => false,
        }
    }

    /// `(½∫p₁^CW, ∫ω₃)` for one component.
    pub fn evaluate(&self, c: &SceneComponent) -> Result<(f64, f64), InvariantError> {
        if !self.boundary_compatible(c) {
            return Err(InvariantError::Incompatible(format!(
                "{} with {} does not restrict to {} with {}",
                c.w4.key, c.nabla.key, c.m3.key, c.eta.key
            )));
        }
        let omega3 = self.get(c.eta.provider).omega3(&c.m3, &c.eta)?;
        let half_p1 = self.get(c.nabla.provider).half_p1(&c.w4, &c.nabla)?;
        Ok((half_p1, omega3))
    }
}
