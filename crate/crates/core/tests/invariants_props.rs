use std::sync::Arc;

use abtqft::discrete::{meshes, CellComplex, LatticeConnection};
use abtqft::invariants::{
    hofiber_bordism_semantics, psi, psi_certified, su_psi, su_psi_certified, BnrScene, ProviderKind, Providers,
    SceneComponent, SuBoundary, SuComponent, SuFilling, SuScene,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `½∫p₁` of the closed spin manifolds in the table, from their signatures.
fn half_p1(name: &str) -> i64 {
    match name {
        "S4" | "T4" | "S2xS2" => 0,
        "K3" => -48 / 2,
        "K3#K3" => -96 / 2,
        _ => unreachable!("{name}"),
    }
}

const SPIN: [&str; 5] = ["S4", "T4", "S2xS2", "K3", "K3#K3"];

/// A component together with its expected ψ.
#[derive(Clone, Debug)]
struct Piece {
    component: SceneComponent,
    value: i64,
}

fn piece() -> impl Strategy<Value = Piece> {
    let glue = prop::collection::vec(0..SPIN.len(), 0..3);
    prop_oneof![
        (any::<bool>(), any::<bool>(), glue.clone()).prop_map(|(quad, opp, glue)| {
            let kind = if quad { ProviderKind::Quadrature } else { ProviderKind::Table };
            let mut c = SceneComponent::s3_generator(kind);
            let mut value = 1;
            if opp {
                c.m3.key = "S3-opp".into();
                value = -1;
            }
            let names: Vec<&str> = glue.iter().map(|&i| SPIN[i]).collect();
            value += names.iter().map(|n| half_p1(n)).sum::<i64>();
            if !names.is_empty() {
                c = c.glued(&names);
            }
            Piece { component: c, value }
        }),
        (0..SPIN.len()).prop_map(|i| Piece {
            component: SceneComponent::closed(SPIN[i]),
            value: half_p1(SPIN[i]),
        }),
    ]
}

fn scene(max: usize) -> impl Strategy<Value = (BnrScene, i64)> {
    prop::collection::vec(piece(), 0..=max).prop_map(|ps| {
        let value = ps.iter().map(|p| p.value).sum();
        (
            BnrScene {
                components: ps.into_iter().map(|p| p.component).collect(),
            },
            value,
        )
    })
}

fn circle_boundary(rng: &mut ChaCha8Rng) -> (SuBoundary, f64) {
    let circle = Arc::new(meshes::circle(3));
    let lifts: Vec<f64> = (0..3).map(|_| f64::from(rng.gen_range(-3i8..=3))).collect();
    let sum = lifts.iter().sum();
    (SuBoundary::new(LatticeConnection::trivial(&circle), lifts).unwrap(), sum)
}

fn jittered(rng: &mut ChaCha8Rng, cx: CellComplex) -> CellComplex {
    let Some(coords) = cx.coords() else { return cx };
    let coords = coords
        .iter()
        .map(|p| {
            let s = 1.0 + rng.gen_range(-0.15..0.15);
            p.iter().map(|x| s * x + rng.gen_range(-0.04..0.04)).collect()
        })
        .collect();
    cx.with_coords(coords).unwrap()
}

/// A tangent filling of the triangle, and its Euler characteristic.
fn filling(rng: &mut ChaCha8Rng) -> (SuFilling, i64) {
    let cx = match rng.gen_range(0..3) {
        0 => jittered(rng, meshes::punctured_icosahedron()),
        1 => {
            let disk = meshes::polygon_disk(3);
            let mut coords = disk.coords().unwrap().to_vec();
            coords[3] = vec![rng.gen_range(-0.3..0.3), rng.gen_range(-0.3..0.3), rng.gen_range(-0.8..0.8)];
            disk.with_coords(coords).unwrap()
        }
        _ => meshes::punctured_torus(rng.gen_range(3..=5)),
    };
    let (v, e, f) = (cx.count(0) as i64, cx.count(1) as i64, cx.count(2) as i64);
    (SuFilling::tangent(&Arc::new(cx)).unwrap(), v - e + f)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn psi_is_an_integer_with_the_expected_value((s, want) in scene(4)) {
        let p = Providers::builtin();
        let r = psi(&p, &s).unwrap();
        prop_assert_eq!(r.integer_value, want);
        prop_assert_eq!(r.residue, want.rem_euclid(24));
        prop_assert!((r.raw - want as f64).abs() <= 1e-6);
    }

    #[test]
    fn certificate_differences_are_multiples_of_24((s, _) in scene(2)) {
        let p = Providers::builtin();
        let r = psi_certified(&p, &s).unwrap();
        let cert = r.certificate.as_ref().unwrap();
        for a in &cert.alternatives {
            prop_assert_eq!(a.difference.rem_euclid(24), 0, "{:?}", a);
        }
        if !s.components.is_empty() {
            prop_assert!(!cert.alternatives.is_empty());
        }
    }

    #[test]
    fn psi_is_additive((a, x) in scene(3), (b, y) in scene(3)) {
        let p = Providers::builtin();
        let ab = psi(&p, &a.disjoint_union(&b)).unwrap();
        let (ra, rb) = (psi(&p, &a).unwrap(), psi(&p, &b).unwrap());
        prop_assert_eq!(ab.integer_value, x + y);
        prop_assert_eq!(ab.integer_value, ra.integer_value + rb.integer_value);
        prop_assert!((ab.raw - ra.raw - rb.raw).abs() <= 1e-9);
    }

    #[test]
    fn providers_agree(opp in any::<bool>(), refine in 3usize..=5) {
        let p = Providers::new(Arc::new(abtqft::invariants::Closed4Table::builtin()), refine);
        let mut t = SceneComponent::s3_generator(ProviderKind::Table);
        let mut q = SceneComponent::s3_generator(ProviderKind::Quadrature);
        if opp {
            t.m3.key = "S3-opp".into();
            q.m3.key = "S3-opp".into();
        }
        let (a, b) = (p.evaluate(&t).unwrap(), p.evaluate(&q).unwrap());
        prop_assert_eq!(a.0, b.0);
        prop_assert!((a.1 - b.1).abs() <= 1e-3);
    }

    #[test]
    fn hofiber_route_is_bitwise_identical((s, _) in scene(4)) {
        let p = Providers::builtin();
        let h = hofiber_bordism_semantics(&p, &s).unwrap();
        prop_assert_eq!(h.value.to_bits(), psi(&p, &s).unwrap().raw.to_bits());
    }

    #[test]
    fn su_value_and_parity(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (boundary, lift_sum) = circle_boundary(&mut rng);
        let (f0, chi0) = filling(&mut rng);
        let (f1, chi1) = filling(&mut rng);
        let (r, alts) = su_psi_certified(Some(&boundary), &[f0, f1]).unwrap();
        prop_assert_eq!(alts[0].integer_value, chi0 - lift_sum as i64);
        prop_assert_eq!(alts[1].integer_value, chi1 - lift_sum as i64);
        prop_assert_eq!(alts[1].difference.rem_euclid(2), 0);
        prop_assert!((r.raw - r.integer_value as f64).abs() <= 1e-9);
    }

    #[test]
    fn su_lift_shift_moves_value_by_minus_k(seed in any::<u64>(), e in 0usize..3, k in -4i64..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (boundary, _) = circle_boundary(&mut rng);
        let (f, _) = filling(&mut rng);
        let run = |b: SuBoundary| {
            su_psi(&SuScene::single(SuComponent {
                boundary: Some(b),
                filling: f.clone(),
            }))
            .unwrap()
        };
        let before = run(boundary.clone());
        let after = run(boundary.shifted(e, k));
        prop_assert!((after.raw - (before.raw - k as f64)).abs() <= 1e-9);
        prop_assert_eq!(after.residue, (before.residue - k).rem_euclid(2));
        if k % 2 == 0 {
            prop_assert_eq!(after.residue, before.residue);
        }
    }

    #[test]
    fn su_is_additive(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let component = |rng: &mut ChaCha8Rng| {
            let (boundary, _) = circle_boundary(rng);
            let (filling, _) = filling(rng);
            SuScene::single(SuComponent {
                boundary: Some(boundary),
                filling,
            })
        };
        let a = component(&mut rng);
        let closed = SuScene::single(SuComponent {
            boundary: None,
            filling: SuFilling::tangent(&Arc::new(jittered(&mut rng, meshes::icosahedron()))).unwrap(),
        });
        let b = component(&mut rng).disjoint_union(&closed);
        let ab = su_psi(&a.disjoint_union(&b)).unwrap();
        let (ra, rb) = (su_psi(&a).unwrap(), su_psi(&b).unwrap());
        prop_assert_eq!(ab.integer_value, ra.integer_value + rb.integer_value);
        prop_assert_eq!(su_psi(&closed).unwrap().integer_value, 2);
    }
}

#[test]
fn table_constants() {
    let p = Providers::builtin();
    let one = |c: SceneComponent| psi(&p, &BnrScene::single(c)).unwrap().integer_value;
    assert_eq!(one(SceneComponent::s3_generator(ProviderKind::Table)), 1);
    assert_eq!(one(SceneComponent::closed("K3")), -24);
    assert_eq!(one(SceneComponent::s3_generator(ProviderKind::Table).glued(&["K3"])), -23);
    assert_eq!(psi(&p, &BnrScene::empty()).unwrap().integer_value, 0);
}
