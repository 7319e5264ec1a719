use super::*;
use crate::lattice::ivec;

fn vs(xs: &[&[i64]]) -> Vec<IntVector> {
    xs.iter().map(|x| ivec(x)).collect()
}

fn mon(n: usize, gens: &[&[i64]]) -> AffineMonoid {
    AffineMonoid::new(n, &vs(gens)).unwrap()
}

fn ideal(q: &AffineMonoid, gens: &[&[i64]]) -> MonoidIdeal {
    MonoidIdeal::new(q, &vs(gens)).unwrap()
}

#[test]
fn pullbacks() {
    let n2 = AffineMonoid::free(2);
    let k = ideal(&n2, &[&[1, 0], &[0, 1]]);
    let id = MonoidHom::identity(&n2);
    assert_eq!(ideal_pullback(&id, &k).unwrap(), k);

    let n1 = AffineMonoid::free(1);
    let diag = MonoidHom::new(&n1, &n2, &IntMatrix::from_i64(&[&[1], &[1]])).unwrap();
    let pulled = ideal_pullback(&diag, &ideal(&n1, &[&[1]])).unwrap();
    assert_eq!(pulled.gens(), &vs(&[&[1, 1]])[..]);

    let n3 = AffineMonoid::free(3);
    let h = MonoidHom::new(&n2, &n3, &IntMatrix::from_i64(&[&[1, 0], &[1, 1], &[0, 1]])).unwrap();
    let pulled = ideal_pullback(&h, &k).unwrap();
    assert_eq!(pulled.gens(), &vs(&[&[0, 1, 1], &[1, 1, 0]])[..]);

    // functoriality along a composite
    let g = MonoidHom::new(&n1, &n2, &IntMatrix::from_i64(&[&[2], &[1]])).unwrap();
    let k1 = ideal(&n1, &[&[3]]);
    let direct = ideal_pullback(&g.then(&h).unwrap(), &k1).unwrap();
    let stepwise = ideal_pullback(&h, &ideal_pullback(&g, &k1).unwrap()).unwrap();
    assert_eq!(direct, stepwise);

    assert_eq!(ideal_pullback(&h, &ideal(&n3, &[&[1, 0, 0]])), Err(Error::ParentMismatch));
}

#[test]
fn blowup_of_the_plane() {
    let n2 = AffineMonoid::free(2);
    let cover = blowup_charts(&n2, &ideal(&n2, &[&[1, 0], &[0, 1]])).unwrap();
    assert_eq!(cover.charts.len(), 2);
    let monoids: Vec<AffineMonoid> = cover.charts.iter().map(|c| c.monoid.clone()).collect();
    assert!(monoids.contains(&n2.extend_fs(&vs(&[&[-1, 1]])).unwrap()));
    assert!(monoids.contains(&n2.extend_fs(&vs(&[&[1, -1]])).unwrap()));
    assert!(is_locally_principal(&cover));
    let fan = cover.fan().unwrap();
    assert_eq!(fan, Fan::from_cone(&Cone::orthant(2)).star_subdivide(&ivec(&[1, 1])).unwrap());
}

#[test]
fn principal_and_redundant_generators() {
    let n2 = AffineMonoid::free(2);
    let cover = blowup_charts(&n2, &ideal(&n2, &[&[2, 1]])).unwrap();
    assert!(cover.is_trivial());

    let cover = blowup_charts(&n2, &ideal(&n2, &[&[1, 0], &[1, 1]])).unwrap();
    // (1,1) = (1,0) + (0,1) is not a minimal generator
    assert_eq!(cover.charts.len(), 1);
    assert_eq!(cover.charts[0].monoid, n2);
}

#[test]
fn blowup_errors() {
    let n2 = AffineMonoid::free(2);
    assert_eq!(
        blowup_charts(&n2, &MonoidIdeal::empty(&n2)),
        Err(Error::EmptyIdeal)
    );
    let half = mon(2, &[&[1, 0], &[0, 1], &[0, -1]]);
    assert_eq!(
        blowup_charts(&half, &ideal(&half, &[&[1, 0]])),
        Err(Error::NotSharp)
    );
}

#[test]
fn blowup_in_a_sublattice() {
    // N² embedded in Z³ on the plane z = 0, with group 2Z x Z
    let q = mon(3, &[&[2, 0, 0], &[0, 1, 0]]);
    let k = ideal(&q, &[&[2, 0, 0], &[0, 1, 0]]);
    let cover = blowup_charts(&q, &k).unwrap();
    assert_eq!(cover.charts.len(), 2);
    assert!(is_locally_principal(&cover));
    for c in &cover.charts {
        assert_eq!(c.cone.ambient_rank(), 2);
        assert!(c.monoid.contains(&c.label));
    }
}

#[test]
fn local_principality_of_a_hand_made_cover() {
    let n2 = AffineMonoid::free(2);
    let k = ideal(&n2, &[&[1, 0], &[0, 1]]);
    let cover = ChartCover {
        base: n2.clone(),
        ideal: k,
        charts: vec![Chart {
            label: ivec(&[1, 0]),
            monoid: n2.clone(),
            cone: Cone::orthant(2),
        }],
    };
    assert!(!is_locally_principal(&cover));

    let k = ideal(&n2, &[&[1, 1]]);
    let cover = blowup_charts(&n2, &k).unwrap();
    assert!(is_locally_principal(&cover));
}

#[test]
fn common_denominators() {
    let n2 = AffineMonoid::free(2);
    let p = n2.extend_fs(&vs(&[&[1, -1]])).unwrap();
    let (b, a) = common_denominator(&n2, &p).unwrap();
    assert_eq!(b, ivec(&[0, 1]));
    assert_eq!(a, vs(&[&[1, 0]]));

    let p = n2.extend_fs(&vs(&[&[1, -1], &[-1, 1]])).unwrap();
    let (b, a) = common_denominator(&n2, &p).unwrap();
    assert_eq!(b, ivec(&[1, 1]));
    let mut a = a;
    a.sort();
    assert_eq!(a, vs(&[&[0, 2], &[2, 0]]));

    let (b, a) = common_denominator(&n2, &n2).unwrap();
    assert_eq!(b, ivec(&[0, 0]));
    assert!(a.is_empty());

    let doubled = mon(2, &[&[2, 0], &[0, 1]]);
    assert_eq!(common_denominator(&doubled, &n2), Err(Error::NotGpExtension));
}

#[test]
fn base_change_of_an_open_chart() {
    let n2 = AffineMonoid::free(2);
    let p = n2.extend_fs(&vs(&[&[1, -1]])).unwrap();
    let report = base_change_verify(&n2, &p).unwrap();
    assert!(report.ok(), "{:?}", report.failing());
    assert_eq!(report.ideal.gens(), &vs(&[&[0, 1], &[1, 0]])[..]);
    let vj = &report.checks[1];
    // {x + y >= 0} is P with (-1,1) inverted
    let half = mon(2, &[&[1, -1], &[-1, 1], &[0, 1]]);
    assert_eq!(vj.found, half);

    let report = base_change_verify(&n2, &n2).unwrap();
    assert!(report.ok());
    assert!(report.cover.is_trivial());
}

#[test]
fn laws_on_the_plane() {
    let n2 = AffineMonoid::free(2);
    let k = ideal(&n2, &[&[1, 0], &[0, 1]]);
    let r = blowup_laws_check(&n2, &k, &k).unwrap();
    assert!(r.ok());
    assert_eq!(
        r.product_fan,
        Fan::from_cone(&Cone::orthant(2)).star_subdivide(&ivec(&[1, 1])).unwrap()
    );

    let k2 = ideal(&n2, &[&[2, 0], &[0, 1]]);
    let r = blowup_laws_check(&n2, &k, &k2).unwrap();
    assert!(r.ok());
    assert_eq!(r.product_fan.max_cones().len(), 3);

    let p = ideal(&n2, &[&[1, 1]]);
    let r = blowup_laws_check(&n2, &p, &p).unwrap();
    assert!(r.ok());
    assert_eq!(r.product_fan.max_cones().len(), 1);
}
