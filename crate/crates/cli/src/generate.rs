//! Seeded random input documents.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use logmod::{AffineMonoid, Int, IntMatrix, IntVector, MonoidHom};

use crate::doc;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn nonzero_vector(rng: &mut StdRng, n: usize, max: i64) -> IntVector {
    loop {
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=max)).collect();
        if v.iter().any(|&x| x != 0) {
            return v.into_iter().map(Int::from).collect();
        }
    }
}

/// Saturation of at most five nonnegative generators in rank at most three.
pub fn saturated_monoid(rng: &mut StdRng) -> AffineMonoid {
    let n = rng.gen_range(1..=3);
    let k = rng.gen_range(1..=5);
    let gens: Vec<IntVector> = (0..k).map(|_| nonzero_vector(rng, n, 3)).collect();
    AffineMonoid::new(n, &gens)
        .expect("generators have the right length")
        .saturate()
}

/// A hom out of `N^a` sending each basis vector to a sum of target
/// generators.
pub fn hom_from_free(rng: &mut StdRng) -> MonoidHom {
    let target = saturated_monoid(rng);
    let a = rng.gen_range(1..=2);
    let source = AffineMonoid::free(a);
    let cols: Vec<IntVector> = (0..a)
        .map(|_| {
            let mut v = vec![Int::from(0); target.rank()];
            for g in target.gens() {
                let c = Int::from(rng.gen_range(0..=2));
                for (x, y) in v.iter_mut().zip(g) {
                    *x += &c * y;
                }
            }
            v
        })
        .collect();
    let m = IntMatrix::from_columns(target.rank(), &cols).expect("columns have the target rank");
    MonoidHom::new(&source, &target, &m).expect("columns lie in the target")
}

/// `N^2` with the inclusions into one or two random extensions `N^2⟨v⟩`.
pub fn job(rng: &mut StdRng) -> (AffineMonoid, Vec<MonoidHom>) {
    let base = AffineMonoid::free(2);
    let count = rng.gen_range(1..=2);
    let mut homs = Vec::new();
    for _ in 0..count {
        let x = rng.gen_range(1..=3);
        let y = rng.gen_range(1..=3);
        let v = if rng.gen_bool(0.5) { [x, -y] } else { [-x, y] };
        let ext = base
            .extend_fs(&[v.iter().map(|&c| Int::from(c)).collect()])
            .expect("extension of the plane");
        homs.push(MonoidHom::new(&base, &ext, &IntMatrix::identity(2)).expect("inclusion"));
    }
    (base, homs)
}

/// The document of the given kind drawn from `seed`.
pub fn document(kind: &str, seed: u64) -> Option<String> {
    let mut r = rng(seed);
    Some(match kind {
        "monoid" => doc::emit_monoid(&saturated_monoid(&mut r)),
        "hom" => doc::emit_hom(&hom_from_free(&mut r)),
        "job" => {
            let (base, homs) = job(&mut r);
            doc::emit_job(&base, &homs)
        }
        _ => return None,
    })
}
