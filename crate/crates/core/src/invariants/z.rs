//! Field theories valued in `R⊗` and `exp(2πi −)⊗`: integration of closed
//! forms, holonomy and curvature, and the spin Chern–Weil theory.

use crate::discrete::{check_stokes, Chain, Cochain, DiscreteError, LatticeConnection};
use crate::fgab::analytic::{circular_distance, wrap_turns};

use super::scene::{Descriptor, Providers};
use super::InvariantError;

/// Closure tolerance for [`z_stokes_closed`].
pub const CLOSED_TOLERANCE: f64 = 1e-12;

/// `∫_M ω` for a closed cochain over a cycle.
pub fn z_stokes_closed(omega: &Cochain, cycle: &Chain) -> Result<f64, InvariantError> {
    if !omega.is_closed(CLOSED_TOLERANCE)? {
        return Err(InvariantError::NotClosedForm);
    }
    if !omega.complex().is_cycle(cycle)? {
        return Err(DiscreteError::NotClosed.into());
    }
    Ok(omega.integrate(cycle)?)
}

/// `∫_M ω` over the fundamental cycle of a closed complex.
pub fn z_stokes_closed_manifold(omega: &Cochain) -> Result<f64, InvariantError> {
    let cycle = omega
        .complex()
        .fundamental()
        .ok_or(DiscreteError::BoundaryNotSet)?
        .clone();
    z_stokes_closed(omega, &cycle)
}

/// Relative variant on a bordism `W`: `(∫_{∂W} ω, ∫_W dω)`, equal by Stokes.
pub fn z_stokes_relative(omega_w: &Cochain) -> Result<(f64, f64), InvariantError> {
    Ok(check_stokes(omega_w)?)
}

/// Holonomy of a connection on a closed 1-complex around its fundamental
/// cycle, in turns. Disconnected complexes give the product over components.
pub fn z_hol(connection: &LatticeConnection) -> Result<f64, InvariantError> {
    let cx = connection.complex();
    if cx.dim() != 1 {
        return Err(DiscreteError::Degree {
            expected: 1,
            found: cx.dim(),
        }
        .into());
    }
    let cycle = cx.fundamental().ok_or(DiscreteError::BoundaryNotSet)?;
    Ok(connection.holonomy(cycle)?)
}

/// Total curvature over the fundamental chain of a surface.
pub fn z_hol_rel(connection: &LatticeConnection) -> Result<f64, InvariantError> {
    let cx = connection.complex();
    let w = cx.fundamental().ok_or(DiscreteError::BoundaryNotSet)?;
    Ok(connection.total_curvature(w)?)
}

/// `(exp(2πi ∫_W F), hol_{∂W})` in turns; the two agree.
pub fn z_hol_functoriality(connection: &LatticeConnection) -> Result<(f64, f64), InvariantError> {
    let total = z_hol_rel(connection)?;
    let cx = connection.complex();
    let dw = cx.boundary_of_fundamental()?;
    let hol = connection.holonomy(&dw)?;
    Ok((wrap_turns(total), hol))
}

/// Whether [`z_hol_functoriality`] holds within `tol`.
pub fn z_hol_is_functorial(connection: &LatticeConnection, tol: f64) -> Result<bool, InvariantError> {
    let (a, b) = z_hol_functoriality(connection)?;
    Ok(circular_distance(a, b) <= tol)
}

/// `exp(2πi ∫_{M₃} ω₃)` in turns.
pub fn z_spin_object(providers: &Providers, m3: &Descriptor, eta: &Descriptor) -> Result<f64, InvariantError> {
    Ok(wrap_turns(providers.get(eta.provider).omega3(m3, eta)?))
}

/// `½∫_{W₄} p₁^CW(∇)`.
pub fn z_spin_morphism(providers: &Providers, w4: &Descriptor, nabla: &Descriptor) -> Result<f64, InvariantError> {
    providers.get(nabla.provider).half_p1(w4, nabla)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::discrete::meshes;
    use crate::invariants::scene::ProviderKind;

    #[test]
    fn circle_with_unit_cochain() {
        let c = Arc::new(meshes::circle(3));
        let omega = Cochain::constant(&c, 1, 1.0).unwrap();
        assert_eq!(z_stokes_closed_manifold(&omega).unwrap(), 3.0);
    }

    #[test]
    fn exact_form_on_a_boundary_integrates_to_zero() {
        let disk = Arc::new(meshes::polygon_disk(6));
        let f = Cochain::new(&disk, 0, (0..7).map(|i| (i as f64 * 0.7).sin()).collect()).unwrap();
        let omega = f.coboundary().unwrap();
        let dw = disk.boundary_of_fundamental().unwrap();
        assert!(z_stokes_closed(&omega, &dw).unwrap().abs() < 1e-12);
        let (lhs, rhs) = z_stokes_relative(&omega).unwrap();
        assert!(lhs.abs() < 1e-12 && rhs.abs() < 1e-12);
    }

    #[test]
    fn non_closed_form_is_rejected() {
        let disk = Arc::new(meshes::polygon_disk(4));
        let omega = Cochain::constant(&disk, 1, 1.0).unwrap();
        let dw = disk.boundary_of_fundamental().unwrap();
        assert!(matches!(z_stokes_closed(&omega, &dw), Err(InvariantError::NotClosedForm)));
    }

    #[test]
    fn trivial_circle_has_unit_holonomy() {
        let c = Arc::new(meshes::circle(4));
        assert_eq!(z_hol(&LatticeConnection::trivial(&c)).unwrap(), 0.0);
    }

    #[test]
    fn spin_values() {
        let p = Providers::builtin();
        let s3 = Descriptor::new(ProviderKind::Table, "S3");
        let lie = Descriptor::new(ProviderKind::Quadrature, "lie-framing");
        assert!(circular_distance(z_spin_object(&p, &s3, &lie).unwrap(), 0.0) < 1e-6);
        let k3 = Descriptor::new(ProviderKind::Table, "K3");
        let cw = Descriptor::new(ProviderKind::Table, "chern-weil");
        assert_eq!(z_spin_morphism(&p, &k3, &cw).unwrap(), -24.0);
        let d4 = Descriptor::new(ProviderKind::Quadrature, "D4");
        let flat = Descriptor::new(ProviderKind::Quadrature, "flat-extension");
        assert_eq!(z_spin_morphism(&p, &d4, &flat).unwrap(), 0.0);
        let empty = Descriptor::new(ProviderKind::Table, "empty");
        let none = Descriptor::new(ProviderKind::Table, "none");
        assert_eq!(z_spin_object(&p, &empty, &none).unwrap(), 0.0);
    }
}
