use super::*;
use crate::lattice::{ivec, Int};
use crate::monoid::MonoidIdeal;

fn cone(gens: &[&[i64]]) -> Cone {
    let n = gens[0].len();
    let gens: Vec<IntVector> = gens.iter().map(|g| ivec(g)).collect();
    Cone::from_generators(n, &gens).unwrap()
}

fn quadrant() -> Cone {
    Cone::orthant(2)
}

fn n2() -> AffineMonoid {
    AffineMonoid::free(2)
}

fn ideal(q: &AffineMonoid, gens: &[&[i64]]) -> MonoidIdeal {
    let gens: Vec<IntVector> = gens.iter().map(|g| ivec(g)).collect();
    MonoidIdeal::new(q, &gens).unwrap()
}

#[test]
fn fan_condition() {
    let f = Fan::from_cone(&quadrant());
    assert_eq!(f.max_cones().len(), 1);
    let a = cone(&[&[1, 0], &[0, 1]]);
    let b = cone(&[&[0, 1], &[-1, 0]]);
    assert!(Fan::validate(2, &[a.clone(), b]));
    let c = cone(&[&[1, 1], &[-1, 1]]);
    assert!(!Fan::validate(2, &[a.clone(), c]));
    // a face of a listed cone is absorbed
    let f = Fan::new(2, vec![a.clone(), cone(&[&[1, 0]])]).unwrap();
    assert_eq!(f.max_cones(), &[a][..]);
}

#[test]
fn ord_function_domains() {
    let q = n2();
    let s = pl_from_ideal(&q, &ideal(&q, &[&[1, 0], &[0, 1]])).unwrap();
    assert_eq!(s.fan().max_cones().len(), 2);
    assert!(s.fan().rays().contains(&ivec(&[1, 1])));
    assert_eq!(s.eval(&ivec(&[3, 5])).unwrap(), Int::from(3));
    assert_eq!(s.eval(&ivec(&[4, 1])).unwrap(), Int::from(1));

    let s = pl_from_ideal(&q, &ideal(&q, &[&[1, 0], &[1, 1]])).unwrap();
    assert!(s.is_linear());
    assert_eq!(s.fan().max_cones(), &[quadrant()][..]);
    assert_eq!(s.eval(&ivec(&[2, 7])).unwrap(), Int::from(2));

    let s = pl_from_ideal(&q, &ideal(&q, &[&[2, 1]])).unwrap();
    assert!(s.is_linear());

    assert_eq!(
        pl_from_ideal(&q, &MonoidIdeal::empty(&q)),
        Err(Error::EmptyIdeal)
    );
}

/// Lattice points of the quadrant with `<q, r> >= s(r)` on the given rays,
/// minimalized by brute force.
fn brute_force_ideal(s: &PLFunction, rays: &[IntVector], bound: i64) -> Vec<IntVector> {
    let mut pts = Vec::new();
    for x in 0..=bound {
        for y in 0..=bound {
            let q = ivec(&[x, y]);
            if rays.iter().all(|r| dot(&q, r) >= s.eval(r).unwrap()) {
                pts.push(q);
            }
        }
    }
    let min: Vec<IntVector> = pts
        .iter()
        .filter(|p| {
            !pts
                .iter()
                .any(|o| o != *p && o[0] <= p[0] && o[1] <= p[1])
        })
        .cloned()
        .collect();
    crate::lattice::canonical_set(min)
}

#[test]
fn ideal_from_pl_examples() {
    let q = n2();
    let k = ideal(&q, &[&[1, 0], &[0, 1]]);
    let s = pl_from_ideal(&q, &k).unwrap();
    assert_eq!(ideal_from_pl(&q, &s).unwrap(), k);

    let zero = PLFunction::linear(&quadrant(), ivec(&[0, 0])).unwrap();
    assert_eq!(ideal_from_pl(&q, &zero).unwrap(), MonoidIdeal::unit(&q));

    // pieces x1 and x2 on the two halves of the quadrant
    let s = PLFunction::from_pieces(
        2,
        vec![
            (cone(&[&[1, 0], &[1, 1]]), ivec(&[0, 1])),
            (cone(&[&[0, 1], &[1, 1]]), ivec(&[1, 0])),
        ],
    )
    .unwrap();
    let rays = vec![ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[1, 1])];
    let expected = brute_force_ideal(&s, &rays, 6);
    assert_eq!(ideal_from_pl(&q, &s).unwrap().gens(), &expected[..]);

    // the maximum of the pieces is rejected
    let s = PLFunction::from_pieces(
        2,
        vec![
            (cone(&[&[1, 0], &[1, 1]]), ivec(&[1, 0])),
            (cone(&[&[0, 1], &[1, 1]]), ivec(&[0, 1])),
        ],
    )
    .unwrap();
    assert_eq!(ideal_from_pl(&q, &s), Err(Error::NonConvex));
}

#[test]
fn discontinuous_pieces_are_rejected() {
    let r = PLFunction::from_pieces(
        2,
        vec![
            (cone(&[&[1, 0], &[1, 1]]), ivec(&[1, 0])),
            (cone(&[&[0, 1], &[1, 1]]), ivec(&[0, 0])),
        ],
    );
    assert_eq!(r, Err(Error::Discontinuous));
}

#[test]
fn subdivision_by_ord_function() {
    let q = n2();
    let s = pl_from_ideal(&q, &ideal(&q, &[&[1, 0], &[0, 1]])).unwrap();
    let f = Fan::from_cone(&quadrant());
    let sub = subdivide_by_pl(&f, &s).unwrap();
    assert_eq!(sub, f.star_subdivide(&ivec(&[1, 1])).unwrap());
    assert!(sub.same_support(&f).unwrap());
    assert!(sub.refines(&f).unwrap());

    let lin = PLFunction::linear(&quadrant(), ivec(&[2, -1])).unwrap();
    assert_eq!(subdivide_by_pl(&f, &lin).unwrap(), f);
}

#[test]
fn pullback_along_octant_map() {
    let q = n2();
    let s = pl_from_ideal(&q, &ideal(&q, &[&[1, 0], &[0, 1]])).unwrap();
    let phi = IntMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 1]]);
    let octant = Fan::from_cone(&Cone::orthant(3));
    let t = pullback_pl(&phi, &s, &octant).unwrap();
    let sub = subdivide_by_pl(&octant, &t).unwrap();
    assert_eq!(sub.max_cones().len(), 2);
    for c in sub.max_cones() {
        // the wall is the plane n1 = n3
        let wall: Vec<IntVector> = c
            .rays()
            .into_iter()
            .filter(|r| r[0] == r[2])
            .collect();
        assert_eq!(wall.len(), 2);
    }
    assert!(sub.same_support(&octant).unwrap());
    assert_eq!(t.eval(&ivec(&[1, 0, 2])).unwrap(), Int::from(1));
    assert_eq!(t.eval(&ivec(&[3, 1, 0])).unwrap(), Int::from(1));
}

#[test]
fn projective_support_values() {
    let s = projective_support(&ivec(&[1])).unwrap();
    assert_eq!(s.eval(&ivec(&[1])).unwrap(), Int::from(0));
    assert_eq!(s.eval(&ivec(&[-1])).unwrap(), Int::from(1));
    assert_eq!(s.eval(&ivec(&[-4])).unwrap(), Int::from(4));

    let s = projective_support(&ivec(&[1, 0])).unwrap();
    assert_eq!(s.fan().max_cones().len(), 3);
    assert_eq!(s.eval(&ivec(&[0, -1])).unwrap(), Int::from(1));
    assert_eq!(s.eval(&ivec(&[2, 3])).unwrap(), Int::from(0));
    assert_eq!(s.negate().is_min_of_pieces(), true);

    // non-unit coordinates force the Hermite completion
    let s = projective_support(&ivec(&[2, 3])).unwrap();
    assert_eq!(s.eval(&ivec(&[2, 3])).unwrap(), Int::from(0));
    assert_eq!(s.eval(&ivec(&[-2, -3])).unwrap(), Int::from(1));
    assert!(s.fan().is_smooth());
    assert_eq!(projective_support(&ivec(&[0, 0])), Err(Error::ZeroVector));
}

/// Length of the Hirzebruch-Jung continued fraction of `k / (k - 1)`,
/// which counts the rays needed to resolve `cone((1,0),(1,k))`.
fn hirzebruch_jung_length(n: i64, q: i64) -> usize {
    let (mut a, mut b) = (n, q);
    let mut len = 0;
    while b > 0 {
        let c = (a + b - 1) / b;
        len += 1;
        let r = c * b - a;
        a = b;
        b = r;
    }
    len
}

#[test]
fn resolution_of_plane_cones() {
    for k in 2..=5 {
        let f = Fan::from_cone(&cone(&[&[1, 0], &[1, k]]));
        assert!(!f.is_smooth());
        let r = f.resolve_smooth().unwrap();
        assert!(r.is_smooth());
        assert!(r.refines(&f).unwrap());
        let added = r.rays().len() - 2;
        assert_eq!(added, hirzebruch_jung_length(k, k - 1));
        assert_eq!(added, (k - 1) as usize);
    }
    let smooth = Fan::from_cone(&quadrant());
    assert_eq!(smooth.resolve_smooth().unwrap(), smooth);
}

#[test]
fn resolution_of_non_simplicial_cone() {
    let f = Fan::from_cone(&cone(&[&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 1]]));
    let r = f.resolve_smooth().unwrap();
    assert!(r.is_smooth());
    assert!(r.refines(&f).unwrap());
}

#[test]
fn onto_reports() {
    let id = IntMatrix::identity(2);
    let f = Fan::from_cone(&quadrant());
    let rep = cones_map_onto(&id, &f, &f).unwrap();
    assert!(rep.onto);
    assert_eq!(rep.fiber_dims, vec![0]);

    let proj = IntMatrix::from_i64(&[&[1, 0]]);
    let ray = Fan::from_cone(&Cone::orthant(1));
    let rep = cones_map_onto(&proj, &f, &ray).unwrap();
    assert!(rep.onto);
    assert_eq!(rep.fiber_dims, vec![1]);

    let phi = IntMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 1]]);
    let octant = Fan::from_cone(&Cone::orthant(3));
    let rep = cones_map_onto(&phi, &octant, &f).unwrap();
    assert!(!rep.onto);
    let (_, img) = rep.failure.unwrap();
    assert_eq!(img.rays(), vec![ivec(&[1, 1])]);

    let neg = IntMatrix::from_i64(&[&[-1, 0], &[0, 1]]);
    assert_eq!(
        cones_map_onto(&neg, &f, &f),
        Err(Error::ImageEscapesSupport)
    );
}

#[test]
fn charts_of_cones() {
    let std = vec![ivec(&[1, 0]), ivec(&[0, 1])];
    assert_eq!(chart_of_cone(&quadrant(), &std).unwrap(), n2());
    let m = chart_of_cone(&cone(&[&[1, 0], &[1, 1]]), &std).unwrap();
    // dual cone is spanned by (0,1) and (1,-1), which already form a basis
    assert_eq!(m.gens(), &[ivec(&[0, 1]), ivec(&[1, -1])][..]);
    let m = chart_of_cone(&cone(&[&[1, 0]]), &std).unwrap();
    assert_eq!(m.gens(), &[ivec(&[0, -1]), ivec(&[0, 1]), ivec(&[1, 0])][..]);
}

#[test]
fn common_refinement_of_two_splits() {
    let f = Fan::from_cone(&quadrant());
    let a = f.star_subdivide(&ivec(&[1, 1])).unwrap();
    let b = f.star_subdivide(&ivec(&[1, 2])).unwrap();
    let c = a.common_refinement(&b).unwrap();
    assert_eq!(c.max_cones().len(), 3);
    assert!(c.refines(&a).unwrap() && c.refines(&b).unwrap());
}
