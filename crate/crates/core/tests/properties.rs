use std::collections::HashMap;

use logmod::blowup::{blowup_charts, is_locally_principal};
use logmod::fan::{ideal_from_pl, pl_from_ideal, Fan};
use logmod::lattice::{hilbert_basis, ivec};
use logmod::morphism::{Certificate, IntegralityVerdict, Strategy as Method};
use logmod::{AffineMonoid, Cone, Int, IntMatrix, IntVector, MonoidHom, MonoidIdeal};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

// pointed 2-dimensional cone spanned by (1,0) and (a,b), b > 0
fn plane_cone() -> impl Strategy<Value = (i64, i64)> {
    (-4i64..5, 1i64..6)
}

fn cone2(a: i64, b: i64) -> Cone {
    Cone::from_generators(2, &[ivec(&[1, 0]), ivec(&[a, b])]).unwrap()
}

fn small(v: &[Int]) -> Vec<i64> {
    v.iter().map(|x| i64::try_from(x).unwrap()).collect()
}

// brute force: is v a nonnegative integer combination of gens, searching
// only through differences that stay in the cone
fn in_span(c: &Cone, v: (i64, i64), gens: &[Vec<i64>], memo: &mut HashMap<(i64, i64), bool>) -> bool {
    if v == (0, 0) {
        return true;
    }
    if let Some(&b) = memo.get(&v) {
        return b;
    }
    let found = gens.iter().any(|g| {
        let rest = (v.0 - g[0], v.1 - g[1]);
        rest != v && c.contains(&ivec(&[rest.0, rest.1])) && in_span(c, rest, gens, memo)
    });
    memo.insert(v, found);
    found
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hilbert_basis_generates_lattice_points((a, b) in plane_cone()) {
        let c = cone2(a, b);
        let basis: Vec<Vec<i64>> = hilbert_basis(&c).unwrap().iter().map(|g| small(g)).collect();
        for g in &basis {
            prop_assert!(c.contains(&ivec(g)));
        }
        let mut memo = HashMap::new();
        for x in -6i64..=6 {
            for y in 0i64..=6 {
                if c.contains(&ivec(&[x, y])) {
                    prop_assert!(in_span(&c, (x, y), &basis, &mut memo), "{:?} not reached by {:?}", (x, y), basis);
                }
            }
        }
    }

    #[test]
    fn saturation_contains_and_is_saturated(gens in prop::collection::vec((0i64..4, 0i64..4), 1..4)) {
        let gens: Vec<IntVector> = gens.into_iter().filter(|g| *g != (0, 0)).map(|(x, y)| ivec(&[x, y])).collect();
        prop_assume!(!gens.is_empty());
        let m = AffineMonoid::new(2, &gens).unwrap();
        let s = m.saturate();
        prop_assert!(s.is_saturated());
        for g in &gens {
            prop_assert!(m.contains(g) && s.contains(g));
        }
        prop_assert!(s.saturate() == s);
    }

    #[test]
    fn resolution_is_smooth_refinement((a, b) in plane_cone()) {
        let f = Fan::from_cone(&cone2(a, b));
        let r = f.resolve_smooth().unwrap();
        prop_assert!(r.is_smooth());
        prop_assert!(r.same_support(&f).unwrap());
        prop_assert!(r.refines(&f).unwrap());
    }

    #[test]
    fn star_subdivision_keeps_support((a, b) in plane_cone(), x in -3i64..4, y in 0i64..4) {
        prop_assume!((x, y) != (0, 0));
        let f = Fan::from_cone(&cone2(a, b));
        let s = f.star_subdivide(&ivec(&[x, y])).unwrap();
        prop_assert!(s.same_support(&f).unwrap());
        prop_assert!(s.refines(&f).unwrap());
    }

    #[test]
    fn ideal_of_support_function_contains_ideal(gens in prop::collection::vec((0i64..4, 0i64..4), 1..4)) {
        let q = AffineMonoid::free(2);
        let gens: Vec<IntVector> = gens.into_iter().map(|(x, y)| ivec(&[x, y])).collect();
        let k = MonoidIdeal::new(&q, &gens).unwrap();
        let closure = ideal_from_pl(&q, &pl_from_ideal(&q, &k).unwrap()).unwrap();
        for g in k.gens() {
            prop_assert!(closure.contains(g));
        }
        let again = ideal_from_pl(&q, &pl_from_ideal(&q, &closure).unwrap()).unwrap();
        prop_assert_eq!(again, closure);
    }

    #[test]
    fn blowup_makes_ideal_principal(gens in prop::collection::vec((0i64..4, 0i64..4), 1..4)) {
        let q = AffineMonoid::free(2);
        let gens: Vec<IntVector> = gens.into_iter().map(|(x, y)| ivec(&[x, y])).collect();
        let k = MonoidIdeal::new(&q, &gens).unwrap();
        let cover = blowup_charts(&q, &k).unwrap();
        prop_assert!(is_locally_principal(&cover));
        prop_assert!(!cover.charts.is_empty());
    }
}

#[test]
fn identity_homs_are_exact_and_integral() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..20 {
        let gens: Vec<IntVector> = (0..rng.gen_range(1..4))
            .map(|_| ivec(&[rng.gen_range(0..4), rng.gen_range(1..4)]))
            .collect();
        let m = AffineMonoid::new(2, &gens).unwrap().saturate();
        let h = MonoidHom::new(&m, &m, &IntMatrix::identity(2)).unwrap();
        assert!(h.is_exact_hom().unwrap());
        assert_eq!(
            h.is_integral(Method::Auto).unwrap(),
            IntegralityVerdict::Integral(Certificate::Identity)
        );
    }
}

#[test]
fn small_homs() {
    let q = AffineMonoid::free(2);
    let p = AffineMonoid::free(3);
    let h = MonoidHom::new(&q, &p, &IntMatrix::from_i64(&[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
    assert!(h.is_exact_hom().unwrap());
    // localizing at <e1> lets (-1, 1) in, so exactness is not pointwise
    assert!(!h.is_exact_morphism().unwrap());
    let sum = MonoidHom::new(&q, &AffineMonoid::free(1), &IntMatrix::from_i64(&[&[1, 1]])).unwrap();
    assert!(sum.is_integral(Method::Auto).unwrap().is_not_integral());
    let diagonal = MonoidHom::new(&AffineMonoid::free(1), &q, &IntMatrix::from_i64(&[&[1], &[1]])).unwrap();
    assert!(diagonal.is_integral(Method::Auto).unwrap().is_integral());
    let plane = MonoidHom::new(&q, &p, &IntMatrix::from_i64(&[&[1, 0], &[0, 1], &[0, 0]])).unwrap();
    assert!(plane.is_integral(Method::Auto).unwrap().is_integral());
    let skew = MonoidHom::new(&q, &q, &IntMatrix::from_i64(&[&[1, 1], &[0, 1]])).unwrap();
    assert!(!skew.is_exact_hom().unwrap());
}
