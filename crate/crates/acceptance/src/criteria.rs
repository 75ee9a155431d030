//! The individual acceptance checks. Each returns a one-line summary on
//! success and the first discrepancy on failure.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::sync::Arc;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use abtqft::discrete::{meshes, CellComplex, Chain, Cochain, LatticeConnection};
use abtqft::fgab::{smith_normal_form as snf, FgAbGroup, GroupElement, GroupMorphism, IntMatrix};
use abtqft::invariants::{
    cs_su2_quadrature, hofiber_bordism_semantics, psi, psi_certified, s3_volume, su_psi, su_psi_certified,
    validate_table, BnrScene, Closed4Table, ProviderKind, Providers, SceneComponent, SuBoundary, SuComponent,
    SuFilling, SuScene,
};
use abtqft::moncat::{xi_is_equivalence, CommSquare, DiagonalFill, HofibCat, MorTensorCat, XiFunctor};

use crate::oracle::{BruteGroup, BruteMorphism, BruteSquare, Key};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn lib_group(g: &BruteGroup) -> Arc<FgAbGroup> {
    FgAbGroup::from_relation_rows(g.n(), &g.relations).expect("square relation matrix")
}

fn lib_morphism(m: &BruteMorphism, a: &Arc<FgAbGroup>, b: &Arc<FgAbGroup>) -> Result<GroupMorphism, String> {
    let matrix = IntMatrix::from_rows(a.n_generators(), &m.matrix).ok_or("matrix shape")?;
    GroupMorphism::new(a, b, matrix).map_err(|e| format!("rejected a well-defined morphism: {e}"))
}

fn element(g: &Arc<FgAbGroup>, x: &[i64]) -> GroupElement {
    GroupElement::new(g, x.to_vec()).expect("coordinates match")
}

fn det3(m: &IntMatrix) -> i64 {
    let a = |i, j| m[(i, j)];
    a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
        + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0))
}

pub fn smith_normal_form(seed: u64) -> Outcome {
    let mut rng = rng(seed);
    let mut ranks = [0usize; 4];
    for trial in 0..500 {
        let rows: Vec<Vec<i64>> = (0..3).map(|_| (0..3).map(|_| rng.gen_range(-5..=5)).collect()).collect();
        let m = IntMatrix::from_rows(3, &rows).expect("3x3");
        let s = snf(&m);
        ensure!(s.u.mul(&m).mul(&s.v) == s.d, "trial {trial}: U M V != D for {rows:?}");
        for i in 0..3 {
            for j in 0..3 {
                ensure!(i == j || s.d[(i, j)] == 0, "trial {trial}: D not diagonal");
            }
        }
        let diag = s.diagonal();
        ensure!(diag.iter().all(|&x| x >= 0), "trial {trial}: negative diagonal {diag:?}");
        for w in diag.windows(2) {
            let ok = if w[0] == 0 { w[1] == 0 } else { w[1] % w[0] == 0 };
            ensure!(ok, "trial {trial}: divisibility fails in {diag:?}");
        }
        ensure!(
            det3(&s.u).abs() == 1 && det3(&s.v).abs() == 1,
            "trial {trial}: U or V not unimodular"
        );
        ensure!(
            s.u.mul(&s.u_inv) == IntMatrix::identity(3) && s.v.mul(&s.v_inv) == IntMatrix::identity(3),
            "trial {trial}: tracked inverses are wrong"
        );
        ensure!(
            (det3(&m).abs() as i128) == diag.iter().map(|&x| x as i128).product::<i128>(),
            "trial {trial}: |det M| differs from the product of invariant factors"
        );
        ranks[s.rank()] += 1;
    }
    Ok(format!("500 matrices exact; rank counts {ranks:?}"))
}

pub fn hom_sets(seed: u64) -> Outcome {
    let mut rng = rng(seed);
    let mut pairs = 0usize;
    let mut nonempty = 0usize;
    for trial in 0..50 {
        let a = BruteGroup::random(&mut rng, 3, 100);
        let b = if rng.gen_bool(0.3) {
            a.clone()
        } else {
            BruteGroup::random(&mut rng, 3, 100)
        };
        let same = a.relations == b.relations;
        let phi = BruteMorphism::random(&mut rng, &a, &b, same);
        let (la, lb) = (lib_group(&a), lib_group(&b));
        ensure!(
            la.order() == Some(a.order() as u64) && lb.order() == Some(b.order() as u64),
            "trial {trial}: group orders disagree"
        );
        let cat = MorTensorCat::new(lib_morphism(&phi, &la, &lb)?);
        for x in &b.elements {
            for y in &b.elements {
                let want = crate::oracle::solutions(&phi, &a, &b, &b.sub(y, x));
                let hom = cat
                    .hom(&element(&lb, x), &element(&lb, y))
                    .map_err(|e| format!("trial {trial}: {e}"))?;
                ensure!(
                    hom.cardinality() == Some(want.len() as u64),
                    "trial {trial}: |hom({x:?}, {y:?})| = {:?}, enumeration gives {}",
                    hom.cardinality(),
                    want.len()
                );
                let got: BTreeSet<Key> = hom
                    .members(1000)
                    .ok_or("finite hom-set not enumerable")?
                    .iter()
                    .map(|m| a.key(m.coords()))
                    .collect();
                ensure!(got == want, "trial {trial}: hom({x:?}, {y:?}) differs from enumeration");
                pairs += 1;
                nonempty += usize::from(!want.is_empty());
            }
        }
    }
    Ok(format!("50 morphisms, {pairs} object pairs ({nonempty} non-empty) match enumeration"))
}

struct LibSquare {
    square: CommSquare,
    fill: DiagonalFill,
    hofib: HofibCat,
    h_ob: Arc<FgAbGroup>,
    g_mor: Arc<FgAbGroup>,
}

fn lib_square(s: &BruteSquare) -> Result<LibSquare, String> {
    let (h_mor, h_ob, g_mor, g_ob) = (lib_group(&s.h_mor), lib_group(&s.h_ob), lib_group(&s.g_mor), lib_group(&s.g_ob));
    let phi_h = lib_morphism(&s.phi_h, &h_mor, &h_ob)?;
    let phi_g = lib_morphism(&s.phi_g, &g_mor, &g_ob)?;
    let lambda = lib_morphism(&s.lambda, &h_ob, &g_mor)?;
    let square = CommSquare::from_diagonal(&phi_h, &phi_g, &lambda).map_err(|e| e.to_string())?;
    let fill = DiagonalFill::new(&square, lambda).map_err(|e| e.to_string())?;
    let hofib = HofibCat::new(&square);
    Ok(LibSquare {
        square,
        fill,
        hofib,
        h_ob,
        g_mor,
    })
}

fn random_squares(seed: u64) -> Vec<BruteSquare> {
    let mut rng = rng(seed);
    (0..50).map(|_| BruteSquare::random(&mut rng, 16)).collect()
}

/// Criteria 3 and 4 run on the same squares. The runner offsets the seed by
/// the criterion id, so criterion 4 subtracts one.
const SQUARE_SEED: u64 = 0x5_9a4e;

pub fn homotopy_fiber(seed: u64) -> Outcome {
    let mut objects = 0usize;
    let mut homs = 0usize;
    for (trial, s) in random_squares(seed ^ SQUARE_SEED).iter().enumerate() {
        let lib = lib_square(s)?;
        let fiber = s.fiber();
        let p = lib.hofib.object_group();
        ensure!(
            p.order() == Some(fiber.objects.len() as u64),
            "trial {trial}: object group order {:?}, enumerated fiber product has {}",
            p.order(),
            fiber.objects.len()
        );
        let elems = p.elements(100_000).ok_or("object group not enumerable")?;
        let mut seen = BTreeSet::new();
        for q in &elems {
            let o = lib.hofib.object_at(q);
            let key = (s.g_mor.key(o.g.coords()), s.h_ob.key(o.h.coords()));
            ensure!(fiber.keys.contains_key(&key), "trial {trial}: object {q:?} is not in the fiber product");
            seen.insert(key);
        }
        ensure!(seen.len() == fiber.objects.len(), "trial {trial}: objects are not all distinct");
        for a in &fiber.objects {
            let la = lib
                .hofib
                .object(element(&lib.g_mor, &a.0), element(&lib.h_ob, &a.1))
                .map_err(|e| format!("trial {trial}: {e}"))?;
            for b in &fiber.objects {
                let lb = lib.hofib.object(element(&lib.g_mor, &b.0), element(&lib.h_ob, &b.1)).expect("object");
                let want = s.fiber_hom(a, b);
                let hom = lib.hofib.hom(&la, &lb).map_err(|e| format!("trial {trial}: {e}"))?;
                let got: BTreeSet<Key> = hom
                    .members(100_000)
                    .ok_or("finite hom-set not enumerable")?
                    .iter()
                    .map(|x| s.h_mor.key(x.coords()))
                    .collect();
                ensure!(
                    got == want && hom.cardinality() == Some(want.len() as u64),
                    "trial {trial}: hofiber hom differs from the solutions of both equations"
                );
                homs += 1;
            }
        }
        objects += fiber.objects.len();
    }
    Ok(format!("50 squares, {objects} objects and {homs} hom-sets match enumeration"))
}

pub fn xi_equivalence(seed: u64) -> Outcome {
    let mut equivalences = 0;
    for (trial, s) in random_squares(seed.wrapping_sub(1) ^ SQUARE_SEED).iter().enumerate() {
        let lib = lib_square(s)?;
        let fiber = s.fiber();
        let (es, ff) = s.xi_equivalence(&fiber);
        let predicted = xi_is_equivalence(&lib.square, &lib.fill).map_err(|e| e.to_string())?;
        let bijective = s.phi_h.is_bijective(&s.h_mor, &s.h_ob);
        ensure!(
            predicted == (es && ff),
            "trial {trial}: xi_is_equivalence = {predicted}, enumeration gives ES {es} FF {ff}"
        );
        ensure!(
            predicted == lib.square.phi_h().is_isomorphism() && predicted == bijective,
            "trial {trial}: criterion disagrees with φ_H being an isomorphism"
        );
        let xi = XiFunctor::new(&lib.hofib, &lib.fill).map_err(|e| e.to_string())?;
        let e = xi.enumerate_equivalence(100_000).ok_or("not enumerable")?;
        ensure!(
            (e.essentially_surjective, e.fully_faithful) == (es, ff),
            "trial {trial}: library enumeration disagrees with the oracle"
        );
        equivalences += usize::from(predicted);
    }
    Ok(format!("50 squares agree ({equivalences} equivalences, {} not)", 50 - equivalences))
}

pub fn mod24_factorization(_seed: u64) -> Outcome {
    let z = FgAbGroup::free(1);
    let z24 = FgAbGroup::cyclic(24);
    let id = GroupMorphism::identity(&z);
    let proj = GroupMorphism::new(&z, &z24, IntMatrix::from_rows(1, &[vec![1]]).expect("1x1")).map_err(|e| e.to_string())?;
    let square = CommSquare::from_diagonal(&id, &proj, &id).map_err(|e| e.to_string())?;
    let fill = DiagonalFill::new(&square, id.clone()).map_err(|e| e.to_string())?;
    let hofib = HofibCat::new(&square);
    let xi = XiFunctor::new(&hofib, &fill).map_err(|e| e.to_string())?;
    let mut gcd = 0i64;
    let mut checked = 0;
    for g in -60i64..=60 {
        for h in -60i64..=60 {
            let o = hofib.object(element(&z, &[g]), element(&z, &[h]));
            if (g - h).rem_euclid(24) != 0 {
                ensure!(o.is_err(), "({g}, {h}) accepted as an object");
                continue;
            }
            let o = o.map_err(|e| e.to_string())?;
            let v = xi.map_object(&o).map_err(|e| e.to_string())?;
            ensure!(v.coords() == [g - h], "Ξ({g}, {h}) = {:?}, expected {}", v.coords(), g - h);
            gcd = num_gcd(gcd, g - h);
            checked += 1;
        }
    }
    ensure!(gcd == 24, "enumerated values of g − h generate {gcd}Z");
    let (kernel, incl) = xi.kernel();
    ensure!(
        kernel.free_rank() == 1 && kernel.invariant_factors().is_empty(),
        "kernel is {}, expected Z",
        kernel.structure()
    );
    let into_g = incl.after(xi.on_objects()).map_err(|e| e.to_string())?;
    let (_, image_incl) = into_g.image();
    let generator = image_incl.matrix().row(0).iter().fold(0, |acc, &x| num_gcd(acc, x));
    ensure!(generator == 24, "image of Ξ in Z is {generator}Z");
    ensure!(
        xi_is_equivalence(&square, &fill).map_err(|e| e.to_string())?,
        "Ξ is not an equivalence"
    );
    Ok(format!("Ξ(g,h) = g − h on {checked} objects; image 24Z ≅ Z"))
}

fn num_gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn random_mesh<R: Rng>(rng: &mut R) -> CellComplex {
    match rng.gen_range(0..6) {
        0 => meshes::icosahedron(),
        1 => meshes::punctured_icosahedron(),
        2 => meshes::flat_torus(rng.gen_range(3..=5)),
        3 => meshes::punctured_torus(rng.gen_range(3..=5)),
        4 => meshes::polygon_disk(rng.gen_range(3..=9)),
        _ => meshes::lat_long_sphere(rng.gen_range(3..=7), rng.gen_range(1..=4)),
    }
}

pub fn stokes_and_holonomy(seed: u64) -> Outcome {
    let mut rng = rng(seed);
    let mut worst = (0.0f64, 0.0f64);
    for trial in 0..200 {
        let cx = Arc::new(random_mesh(&mut rng));
        let faces = cx.count(2);
        let mut terms: Vec<(usize, i64)> = Vec::new();
        for f in 0..faces {
            if rng.gen_bool(0.6) {
                terms.push((f, *[-2i64, -1, 1, 1, 2].choose(&mut rng).expect("non-empty")));
            }
        }
        let w = Chain::new(2, terms);
        let omega = Cochain::new(&cx, 1, (0..cx.count(1)).map(|_| rng.gen_range(-1.0..1.0)).collect())
            .map_err(|e| e.to_string())?;
        let dw = cx.boundary_chain(&w).map_err(|e| e.to_string())?;
        let lhs = omega.integrate(&dw).map_err(|e| e.to_string())?;
        let rhs = omega.coboundary().and_then(|d| d.integrate(&w)).map_err(|e| e.to_string())?;
        ensure!((lhs - rhs).abs() <= 1e-12, "trial {trial}: Stokes off by {}", (lhs - rhs).abs());
        let phases = (0..cx.count(1)).map(|_| rng.gen_range(0.0..1.0)).collect();
        let lifts = (0..faces).map(|_| Some(rng.gen_range(-2..=2))).collect();
        let conn = LatticeConnection::new(&cx, phases, lifts).map_err(|e| e.to_string())?;
        let defect = conn.holonomy_curvature_defect(&w).map_err(|e| e.to_string())?;
        ensure!(defect <= 1e-12, "trial {trial}: holonomy off curvature by {defect}");
        worst = (worst.0.max((lhs - rhs).abs()), worst.1.max(defect));
    }
    Ok(format!(
        "200 scenes; worst Stokes gap {:.1e}, worst holonomy gap {:.1e}",
        worst.0, worst.1
    ))
}

pub fn gauss_bonnet(_seed: u64) -> Outcome {
    let cases = [
        ("icosahedron", meshes::icosahedron(), 2),
        ("flat torus", meshes::flat_torus(4), 0),
        ("genus two", meshes::genus_two_octagon(), -2),
    ];
    let mut found = Vec::new();
    for (name, cx, want) in cases {
        let cx = Arc::new(cx);
        let conn = abtqft::discrete::tangent_connection(&cx).map_err(|e| format!("{name}: {e}"))?;
        let n = conn
            .chern_number(cx.fundamental().expect("closed"))
            .map_err(|e| format!("{name}: {e}"))?;
        ensure!(n == want && n == cx.euler_characteristic(), "{name}: degree {n}, expected {want}");
        found.push(format!("{name} {n}"));
    }
    Ok(found.join(", "))
}

pub fn spin_table(_seed: u64) -> Outcome {
    let table = Closed4Table::builtin();
    ensure!(validate_table(table.entries()).is_valid(), "shipped table fails validation");
    let mut spin = 0;
    for e in table.spin_entries() {
        // Exact integer arithmetic, independent of the rational type.
        let (num, den) = (*e.a_hat.numer(), *e.a_hat.denom());
        ensure!(num * 24 == -e.integral_p1 * den, "{}: Â ≠ −∫p₁/24", e.name);
        ensure!(den == 1 && num % 2 == 0, "{}: Â = {num}/{den} is not even", e.name);
        ensure!(e.integral_p1 % 48 == 0, "{}: ∫p₁ = {} not divisible by 48", e.name, e.integral_p1);
        spin += 1;
    }
    let k3 = table.get("K3").ok_or("no K3 entry")?;
    ensure!(k3.integral_p1 == -48 && k3.integral_p1 / 2 == -24, "K3: ½∫p₁ ≠ −24");
    ensure!((k3.integral_p1 / 2).rem_euclid(24) == 0, "K3: ½∫p₁ not divisible by 24");
    let mut corrupted = k3.clone();
    corrupted.name = "corrupted".into();
    corrupted.integral_p1 = -24;
    ensure!(!validate_table(&[corrupted]).is_valid(), "corrupted spin entry was not flagged");
    Ok(format!("{spin} spin entries valid; K3 ½∫p₁ = −24 ≡ 0 mod 24"))
}

pub fn chern_simons(_seed: u64) -> Outcome {
    let start = Instant::now();
    let values: Vec<f64> = (1..=4).map(cs_su2_quadrature).collect();
    let target = values[3].signum();
    let errs: Vec<f64> = values.iter().map(|v| (v - target).abs()).collect();
    ensure!(errs[3] <= 1e-3, "refinement 4 gives {}", values[3]);
    ensure!(errs[0] <= 0.1, "refinement 1 gives {}", values[0]);
    ensure!(
        errs.windows(2).all(|w| w[1] <= w[0]),
        "errors {errs:?} do not decrease"
    );
    let vol = s3_volume(4);
    ensure!((vol - 2.0 * PI * PI).abs() <= 1e-6, "vol(S³) = {vol}");
    let secs = start.elapsed().as_secs_f64();
    ensure!(secs < 60.0, "took {secs:.1} s");
    Ok(format!(
        "cs(4) = {:.12}, errors {:.1e} > {:.1e} > {:.1e} > {:.1e}, vol gap {:.1e}, {secs:.2} s",
        values[3],
        errs[0],
        errs[1],
        errs[2],
        errs[3],
        (vol - 2.0 * PI * PI).abs()
    ))
}

pub fn psi_pipeline(_seed: u64) -> Outcome {
    let providers = Providers::builtin();
    let mut lines = Vec::new();
    for kind in [ProviderKind::Quadrature, ProviderKind::Table] {
        let generator = BnrScene::single(SceneComponent::s3_generator(kind));
        let r = psi_certified(&providers, &generator).map_err(|e| e.to_string())?;
        ensure!(r.integer_value.abs() == 1, "{kind:?}: ψ = {}", r.integer_value);
        ensure!(num_gcd(r.residue, 24) == 1, "{kind:?}: residue {} does not generate Z/24", r.residue);
        let cert = r.certificate.as_ref().ok_or("no certificate")?;
        ensure!(
            cert.alternatives.iter().all(|a| a.difference.rem_euclid(24) == 0),
            "{kind:?}: certificate difference not divisible by 24"
        );
        let glued = BnrScene::single(SceneComponent::s3_generator(kind).glued(&["K3"]));
        let g = psi(&providers, &glued).map_err(|e| e.to_string())?;
        ensure!(g.integer_value - r.integer_value == -24, "{kind:?}: K3 gluing shifts by {}", g.integer_value - r.integer_value);
        ensure!(g.residue == r.residue, "{kind:?}: K3 gluing changed the residue");
        for scene in [&generator, &glued, &generator.disjoint_union(&glued), &BnrScene::empty()] {
            let h = hofiber_bordism_semantics(&providers, scene).map_err(|e| e.to_string())?;
            let p = psi(&providers, scene).map_err(|e| e.to_string())?;
            ensure!(h.value.to_bits() == p.raw.to_bits(), "{kind:?}: hofiber value differs from ψ");
        }
        lines.push(format!(
            "{kind:?} ψ = {} (raw {:.9}), mod 24 = {}, {} alternatives certified",
            r.integer_value,
            r.raw,
            r.residue,
            cert.alternatives.len()
        ));
    }
    Ok(lines.join("; "))
}

fn jittered<R: Rng>(rng: &mut R, cx: CellComplex, amount: f64) -> CellComplex {
    let coords: Vec<Vec<f64>> = cx
        .coords()
        .expect("embedded mesh")
        .iter()
        .map(|p| {
            let s = 1.0 + rng.gen_range(-amount..amount);
            p.iter().map(|x| s * x + rng.gen_range(-amount..amount) * 0.3).collect()
        })
        .collect();
    cx.with_coords(coords).expect("same vertex count")
}

fn random_filling<R: Rng>(rng: &mut R) -> Result<SuFilling, String> {
    let cx = match rng.gen_range(0..3) {
        0 => jittered(rng, meshes::punctured_icosahedron(), 0.15),
        1 => {
            let disk = meshes::polygon_disk(3);
            let coords: Vec<Vec<f64>> = disk
                .coords()
                .expect("embedded")
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    if i == 3 {
                        vec![rng.gen_range(-0.3..0.3), rng.gen_range(-0.3..0.3), rng.gen_range(-0.8..0.8)]
                    } else {
                        p.clone()
                    }
                })
                .collect();
            disk.with_coords(coords).expect("same vertex count")
        }
        _ => meshes::punctured_torus(rng.gen_range(3..=5)),
    };
    SuFilling::tangent(&Arc::new(cx)).map_err(|e| e.to_string())
}

pub fn su_mod_2(seed: u64) -> Outcome {
    let mut rng = rng(seed);
    let circle = Arc::new(meshes::circle(3));
    let mut residues = [0usize; 2];
    for trial in 0..100 {
        let lifts: Vec<f64> = (0..3).map(|_| rng.gen_range(-3..=3) as f64).collect();
        let boundary = SuBoundary::new(LatticeConnection::trivial(&circle), lifts.clone()).map_err(|e| e.to_string())?;
        let fillings = [random_filling(&mut rng)?, random_filling(&mut rng)?];
        let (r, alts) = su_psi_certified(Some(&boundary), &fillings).map_err(|e| format!("trial {trial}: {e}"))?;
        ensure!(
            (r.raw - r.integer_value as f64).abs() <= 1e-9,
            "trial {trial}: raw {} not integral",
            r.raw
        );
        for (f, a) in fillings.iter().zip(&alts) {
            let chi = f.connection().complex().euler_characteristic();
            let want = chi - lifts.iter().sum::<f64>() as i64;
            ensure!(a.integer_value == want, "trial {trial}: su_psi {} but χ − Σa = {want}", a.integer_value);
        }
        ensure!(alts[1].difference % 2 == 0, "trial {trial}: odd difference {}", alts[1].difference);
        let e = rng.gen_range(0..3);
        let k = rng.gen_range(-3..=3);
        let scene = |b: SuBoundary| {
            SuScene::single(SuComponent {
                boundary: Some(b),
                filling: fillings[0].clone(),
            })
        };
        let shifted = su_psi(&scene(boundary.shifted(e, k))).map_err(|e| e.to_string())?;
        ensure!(
            (shifted.raw - (r.raw - k as f64)).abs() <= 1e-9,
            "trial {trial}: shifting edge {e} by {k} moved raw from {} to {}",
            r.raw,
            shifted.raw
        );
        ensure!(
            shifted.residue == (r.residue - k).rem_euclid(2),
            "trial {trial}: residue did not move by −k mod 2"
        );
        residues[r.residue as usize] += 1;
    }
    Ok(format!(
        "100 scenes integral, pair differences even, lift shifts exact; residues 0/1: {}/{}",
        residues[0], residues[1]
    ))
}
