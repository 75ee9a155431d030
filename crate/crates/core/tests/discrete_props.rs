use std::sync::Arc;

use abtqft::discrete::{meshes, tangent_connection, CellComplex, Chain, Cochain, LatticeConnection};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn mesh(kind: u8, a: usize, b: usize) -> CellComplex {
    match kind % 7 {
        0 => meshes::icosahedron(),
        1 => meshes::punctured_icosahedron(),
        2 => meshes::flat_torus(3 + a % 3),
        3 => meshes::punctured_torus(3 + a % 3),
        4 => meshes::polygon_disk(3 + a % 7),
        5 => meshes::genus_two_octagon(),
        _ => meshes::lat_long_sphere(3 + a % 5, 1 + b % 4),
    }
}

fn closed_mesh(kind: u8, a: usize, b: usize) -> CellComplex {
    match kind % 4 {
        0 => meshes::icosahedron(),
        1 => meshes::flat_torus(3 + a % 3),
        2 => meshes::genus_two_octagon(),
        _ => meshes::lat_long_sphere(3 + a % 5, 1 + b % 4),
    }
}

/// A solid tetrahedron: the one 3-dimensional complex in these tests.
fn tetrahedron() -> CellComplex {
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let edge = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).unwrap();
    let edges = pairs.iter().map(|&(i, j)| vec![(i, -1), (j, 1)]).collect();
    let tri = |a: usize, b: usize, c: usize| vec![(edge(a, b), 1), (edge(b, c), 1), (edge(a, c), -1)];
    let faces = vec![tri(1, 2, 3), tri(0, 2, 3), tri(0, 1, 3), tri(0, 1, 2)];
    let solid = vec![vec![(0, 1), (1, -1), (2, 1), (3, -1)]];
    CellComplex::new(vec![4, 6, 4, 1], vec![edges, faces, solid]).unwrap()
}

fn random_chain(rng: &mut ChaCha8Rng, degree: usize, n: usize) -> Chain {
    let mut terms = Vec::new();
    for c in 0..n {
        if rng.gen_bool(0.6) {
            terms.push((c, rng.gen_range(-3..=3)));
        }
    }
    Chain::new(degree, terms)
}

fn random_connection(rng: &mut ChaCha8Rng, cx: &Arc<CellComplex>) -> LatticeConnection {
    let phases = (0..cx.count(1)).map(|_| rng.gen_range(-2.0..2.0)).collect();
    let lifts = (0..cx.count(2)).map(|_| Some(rng.gen_range(-3..=3))).collect();
    LatticeConnection::new(cx, phases, lifts).unwrap()
}

fn jittered(rng: &mut ChaCha8Rng, cx: CellComplex) -> CellComplex {
    let Some(coords) = cx.coords() else { return cx };
    let coords = coords
        .iter()
        .map(|p| {
            let s = 1.0 + rng.gen_range(-0.2..0.2);
            p.iter().map(|x| s * x + rng.gen_range(-0.05..0.05)).collect()
        })
        .collect();
    cx.with_coords(coords).unwrap()
}

fn sum_of_boundary(cx: &CellComplex, c: &Chain) -> Chain {
    cx.boundary_chain(&cx.boundary_chain(c).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn boundary_of_boundary_vanishes(kind in any::<u8>(), a in 0usize..16, b in 0usize..16, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cx = mesh(kind, a, b);
        let w = random_chain(&mut rng, 2, cx.count(2));
        prop_assert!(sum_of_boundary(&cx, &w).is_empty());
        let t = tetrahedron();
        let s = Chain::new(3, vec![(0, rng.gen_range(-3..=3))]);
        prop_assert!(sum_of_boundary(&t, &s).is_empty());
        let f = random_chain(&mut rng, 2, 4);
        prop_assert!(sum_of_boundary(&t, &f).is_empty());
    }

    #[test]
    fn coboundary_squares_to_zero(kind in any::<u8>(), a in 0usize..16, b in 0usize..16, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cx = Arc::new(mesh(kind, a, b));
        let f = Cochain::new(&cx, 0, (0..cx.count(0)).map(|_| rng.gen_range(-5.0..5.0)).collect()).unwrap();
        let ddf = f.coboundary().unwrap().coboundary().unwrap();
        prop_assert!(ddf.values().iter().all(|v| v.abs() <= 1e-12));
        let t = Arc::new(tetrahedron());
        let g = Cochain::new(&t, 1, (0..6).map(|_| rng.gen_range(-5.0..5.0)).collect()).unwrap();
        prop_assert!(g.coboundary().unwrap().coboundary().unwrap().values()[0].abs() <= 1e-12);
    }

    #[test]
    fn stokes_holds_on_random_chains(kind in any::<u8>(), a in 0usize..16, b in 0usize..16, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cx = Arc::new(mesh(kind, a, b));
        let w = random_chain(&mut rng, 2, cx.count(2));
        let omega = Cochain::new(&cx, 1, (0..cx.count(1)).map(|_| rng.gen_range(-1.0..1.0)).collect()).unwrap();
        let lhs = omega.integrate(&cx.boundary_chain(&w).unwrap()).unwrap();
        let rhs = omega.coboundary().unwrap().integrate(&w).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12, "{} vs {}", lhs, rhs);
    }

    #[test]
    fn holonomy_matches_curvature(kind in any::<u8>(), a in 0usize..16, b in 0usize..16, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cx = Arc::new(mesh(kind, a, b));
        let conn = random_connection(&mut rng, &cx);
        let w = random_chain(&mut rng, 2, cx.count(2));
        prop_assert!(conn.holonomy_curvature_defect(&w).unwrap() <= 1e-12);
    }

    #[test]
    fn gauge_transformations_change_nothing_observable(
        kind in any::<u8>(), a in 0usize..16, b in 0usize..16, seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cx = Arc::new(closed_mesh(kind, a, b));
        let conn = random_connection(&mut rng, &cx);
        let chi: Vec<f64> = (0..cx.count(0)).map(|_| rng.gen_range(-3.0..3.0)).collect();
        let moved = conn.gauge_transform(&chi).unwrap();
        for _ in 0..5 {
            let w = random_chain(&mut rng, 2, cx.count(2));
            let lp = cx.boundary_chain(&w).unwrap();
            let d = (conn.holonomy(&lp).unwrap() - moved.holonomy(&lp).unwrap()).abs();
            prop_assert!(d.min(1.0 - d) <= 1e-9);
        }
        let fundamental = cx.fundamental().unwrap();
        let before = conn.total_curvature(fundamental).unwrap();
        let after = moved.total_curvature(fundamental).unwrap();
        prop_assert!((before - after).abs() <= 1e-9);
        if let Ok(n) = conn.chern_number(fundamental) {
            prop_assert_eq!(moved.chern_number(fundamental).unwrap(), n);
        }
    }

    #[test]
    fn chern_number_ignores_coboundary_relifts(
        kind in any::<u8>(), a in 0usize..16, b in 0usize..16, seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cx = Arc::new(closed_mesh(kind, a, b));
        let conn = tangent_connection(&cx).unwrap();
        let fundamental = cx.fundamental().unwrap();
        let n = conn.chern_number(fundamental).unwrap();
        let m = Cochain::new(&cx, 1, (0..cx.count(1)).map(|_| f64::from(rng.gen_range(-2i8..=2))).collect()).unwrap();
        let dm = m.coboundary().unwrap();
        let lifts = conn
            .lifts()
            .iter()
            .zip(dm.values())
            .map(|(l, d)| l.map(|l| l + *d as i64))
            .collect();
        prop_assert_eq!(conn.with_lifts(lifts).unwrap().chern_number(fundamental).unwrap(), n);
    }

    #[test]
    fn tangent_degree_is_euler_characteristic(
        kind in any::<u8>(), a in 0usize..16, b in 0usize..16, seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cx = Arc::new(jittered(&mut rng, closed_mesh(kind, a, b)));
        let (v, e, f) = (cx.count(0) as i64, cx.count(1) as i64, cx.count(2) as i64);
        let conn = tangent_connection(&cx).unwrap();
        prop_assert_eq!(conn.chern_number(cx.fundamental().unwrap()).unwrap(), v - e + f);
    }
}
