mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use abtqft::fgab::{FgAbGroup, GroupElement, GroupMorphism};
use abtqft::moncat::{xi_is_equivalence, CommSquare, DiagonalFill, HofibCat, MorTensorCat, XiFunctor};
use common::{apply, finite, hom_matrix, lib_morphism, multipliers, Finite};
use proptest::prelude::*;

fn mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    a.iter()
        .map(|row| (0..b[0].len()).map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum()).collect())
        .collect()
}

fn sub(x: &[i64], y: &[i64]) -> Vec<i64> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn elem(g: &Arc<FgAbGroup>, x: &[i64]) -> GroupElement {
    GroupElement::new(g, x.to_vec()).unwrap()
}

/// A morphism `phi : mor → ob` between brute groups, mirrored in the library.
#[derive(Debug)]
struct Phi {
    mor: Finite,
    ob: Finite,
    m: Vec<Vec<i64>>,
    lib: GroupMorphism,
}

impl Phi {
    fn new(mor: Finite, ob: Finite, t: &[Vec<i64>]) -> Self {
        let m = hom_matrix(&mor, &ob, t);
        let lib = lib_morphism(&mor.lib(), &ob.lib(), &m);
        Phi { mor, ob, m, lib }
    }
}

fn phi(max: i64) -> impl Strategy<Value = Phi> {
    (finite(max), finite(max), multipliers()).prop_map(|(a, b, t)| Phi::new(a, b, &t))
}

/// The square `(φ_H, φ_G, φ_G∘λ, λ∘φ_H)` with brute copies of every map.
#[derive(Debug)]
struct Square {
    h: Phi,
    g: Phi,
    lambda: Vec<Vec<i64>>,
    f_ob: Vec<Vec<i64>>,
    f_mor: Vec<Vec<i64>>,
    lib: CommSquare,
    fill: DiagonalFill,
}

fn square(max: i64) -> impl Strategy<Value = Square> {
    (phi(max), phi(max), multipliers()).prop_map(|(h, g, t)| {
        let lambda = hom_matrix(&h.ob, &g.mor, &t);
        let l = lib_morphism(h.lib.target(), g.lib.source(), &lambda);
        let lib = CommSquare::from_diagonal(&h.lib, &g.lib, &l).unwrap();
        let fill = DiagonalFill::new(&lib, l).unwrap();
        Square {
            f_ob: mul(&g.m, &lambda),
            f_mor: mul(&lambda, &h.m),
            h,
            g,
            lambda,
            lib,
            fill,
        }
    })
}

impl Square {
    fn objects(&self) -> Vec<(Vec<i64>, Vec<i64>)> {
        let mut out = Vec::new();
        for g in self.g.mor.elements() {
            for h in self.h.ob.elements() {
                if self.g.ob.eq(&apply(&self.g.m, &g), &apply(&self.f_ob, &h)) {
                    out.push((g.clone(), h));
                }
            }
        }
        out
    }

    fn hom_count(&self, a: &(Vec<i64>, Vec<i64>), b: &(Vec<i64>, Vec<i64>)) -> usize {
        let dg = sub(&b.0, &a.0);
        let dh = sub(&b.1, &a.1);
        self.h
            .mor
            .elements()
            .iter()
            .filter(|x| self.g.mor.eq(&apply(&self.f_mor, x), &dg) && self.h.ob.eq(&apply(&self.h.m, x), &dh))
            .count()
    }

    fn xi(&self, o: &(Vec<i64>, Vec<i64>)) -> Vec<i64> {
        self.g.mor.key(&sub(&o.0, &apply(&self.lambda, &o.1)))
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hom_sets_match_enumeration(p in phi(100), a in 0usize..10_000, b in 0usize..10_000) {
        let obs = p.ob.elements();
        let (a, b) = (&obs[a % obs.len()], &obs[b % obs.len()]);
        let brute: Vec<Vec<i64>> = p
            .mor
            .elements()
            .into_iter()
            .filter(|x| p.ob.eq(&apply(&p.m, x), &sub(b, a)))
            .collect();
        let cat = MorTensorCat::new(p.lib.clone());
        let hom = cat.hom(&elem(cat.object_group(), a), &elem(cat.object_group(), b)).unwrap();
        prop_assert_eq!(hom.cardinality(), Some(brute.len() as u64));
        prop_assert_eq!(hom.is_empty(), brute.is_empty());
        for x in p.mor.elements() {
            let inside = brute.iter().any(|y| p.mor.eq(y, &x));
            prop_assert_eq!(hom.contains(&elem(cat.morphism_group(), &x)).unwrap(), inside);
        }
    }

    #[test]
    fn composition_is_associative_and_unital(
        p in phi(60),
        a in prop::collection::vec(-10..=10i64, 2),
        xs in prop::collection::vec(prop::collection::vec(-10..=10i64, 2), 3),
    ) {
        let cat = MorTensorCat::new(p.lib.clone());
        let a = elem(cat.object_group(), &a[..p.ob.n()]);
        let mut arrows = Vec::new();
        let mut at = a.clone();
        for x in &xs {
            let x = elem(cat.morphism_group(), &x[..p.mor.n()]);
            let next = at.try_add(&p.lib.apply(&x).unwrap()).unwrap();
            arrows.push(cat.arrow(&at, &next, &x).unwrap());
            at = next;
        }
        let (f, g, h) = (&arrows[0], &arrows[1], &arrows[2]);
        let left = cat.compose(&cat.compose(f, g).unwrap(), h).unwrap();
        let right = cat.compose(f, &cat.compose(g, h).unwrap()).unwrap();
        prop_assert!(left.value.try_sub(&right.value).unwrap().is_zero());
        let id_a = cat.identity(&f.source);
        let id_b = cat.identity(&f.target);
        prop_assert!(cat.compose(&id_a, f).unwrap().value.try_sub(&f.value).unwrap().is_zero());
        prop_assert!(cat.compose(f, &id_b).unwrap().value.try_sub(&f.value).unwrap().is_zero());
        let t = cat.tensor(f, g).unwrap();
        prop_assert!(cat.is_morphism(&t.source, &t.target, &t.value).unwrap());
    }

    #[test]
    fn square_functor_is_monoidal(
        s in square(30),
        pts in prop::collection::vec(
            (prop::collection::vec(-6..=6i64, 2), prop::collection::vec(-6..=6i64, 2)),
            1..5,
        ),
    ) {
        let f = s.lib.functor();
        let src = f.source();
        let arrows: Vec<_> = pts
            .iter()
            .map(|(a, x)| {
                let a = elem(src.object_group(), &a[..s.h.ob.n()]);
                let x = elem(src.morphism_group(), &x[..s.h.mor.n()]);
                let b = a.try_add(&src.phi().apply(&x).unwrap()).unwrap();
                src.arrow(&a, &b, &x).unwrap()
            })
            .collect();
        let check = f.check_laws(&arrows).unwrap();
        prop_assert!(check.ok(), "{:?}", check.failures);
        for x in &arrows {
            let fx = f.map_arrow(x).unwrap();
            prop_assert!(s.g.ob.eq(fx.source.coords(), &apply(&s.f_ob, x.source.coords())));
            prop_assert!(s.g.mor.eq(fx.value.coords(), &apply(&s.f_mor, x.value.coords())));
        }
    }

    #[test]
    fn hofiber_morphisms_compose_by_addition(s in square(12), i in any::<usize>(), j in any::<usize>(), k in any::<usize>()) {
        let objs = s.objects();
        let hf = HofibCat::new(&s.lib);
        let pick = |n: usize| {
            let (g, h) = &objs[n % objs.len()];
            hf.object(elem(s.lib.g_mor(), g), elem(s.lib.h_ob(), h)).unwrap()
        };
        let (a, b, c) = (pick(i), pick(j), pick(k));
        let ab = hf.hom(&a, &b).unwrap();
        let bc = hf.hom(&b, &c).unwrap();
        if let (Some(x), Some(y)) = (ab.particular(), bc.particular()) {
            prop_assert!(hf.is_morphism(&a, &c, &x.try_add(y).unwrap()).unwrap());
        }
        let t = hf.tensor(&a, &b).unwrap();
        prop_assert!(hf.is_object(&t.g, &t.h).unwrap());
    }

    #[test]
    fn hofiber_matches_enumeration(s in square(12)) {
        let objs = s.objects();
        let hf = HofibCat::new(&s.lib);
        prop_assert_eq!(hf.object_group().order(), Some(objs.len() as u64));
        let lib_obj = |o: &(Vec<i64>, Vec<i64>)| hf.object(elem(s.lib.g_mor(), &o.0), elem(s.lib.h_ob(), &o.1)).unwrap();
        for a in objs.iter().take(12) {
            for b in objs.iter().take(12) {
                let got = hf.hom(&lib_obj(a), &lib_obj(b)).unwrap().cardinality();
                prop_assert_eq!(got, Some(s.hom_count(a, b) as u64));
            }
        }
    }

    #[test]
    fn xi_is_constant_on_hom_sets(s in square(12)) {
        let objs = s.objects();
        let hf = HofibCat::new(&s.lib);
        let xi = XiFunctor::new(&hf, &s.fill).unwrap();
        let lib_obj = |o: &(Vec<i64>, Vec<i64>)| hf.object(elem(s.lib.g_mor(), &o.0), elem(s.lib.h_ob(), &o.1)).unwrap();
        for a in objs.iter().take(10) {
            let la = lib_obj(a);
            let v = xi.map_object(&la).unwrap();
            prop_assert!(s.g.mor.eq(v.coords(), &sub(&a.0, &apply(&s.lambda, &a.1))));
            for b in objs.iter().take(10) {
                let lb = lib_obj(b);
                let hom = hf.hom(&la, &lb).unwrap();
                for x in hom.members(64).unwrap_or_default() {
                    prop_assert!(xi.map_morphism(&la, &lb, &x).is_ok());
                }
                if !hom.is_empty() {
                    prop_assert_eq!(s.xi(a), s.xi(b));
                }
            }
        }
    }

    #[test]
    fn xi_equivalence_matches_enumeration(s in square(12)) {
        let objs = s.objects();
        let images: Vec<Vec<i64>> = objs.iter().map(|o| s.xi(o)).collect();
        let kernel: BTreeSet<Vec<i64>> = s
            .g
            .mor
            .elements()
            .into_iter()
            .filter(|x| s.g.ob.is_zero(&apply(&s.g.m, x)))
            .map(|x| s.g.mor.key(&x))
            .collect();
        let hit: BTreeSet<Vec<i64>> = images.iter().cloned().collect();
        let essentially_surjective = hit == kernel;
        let fully_faithful = (0..objs.len()).all(|i| {
            (0..objs.len()).all(|j| s.hom_count(&objs[i], &objs[j]) == usize::from(images[i] == images[j]))
        });
        let want = essentially_surjective && fully_faithful;
        prop_assert_eq!(xi_is_equivalence(&s.lib, &s.fill).unwrap(), want);
        let hf = HofibCat::new(&s.lib);
        let e = XiFunctor::new(&hf, &s.fill).unwrap().enumerate_equivalence(10_000).unwrap();
        prop_assert_eq!(e.is_equivalence(), want);
    }

    #[test]
    fn xi_criterion_is_bijectivity_of_phi_h(s in square(60)) {
        let bijective = s.h.mor.order() == s.h.ob.order()
            && common::image_size(&s.h.mor, &s.h.ob, &s.h.m) == s.h.ob.order();
        prop_assert_eq!(xi_is_equivalence(&s.lib, &s.fill).unwrap(), bijective);
    }
}
