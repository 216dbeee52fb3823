#![allow(dead_code)]

use pointbasis::{PointSet, Polynomial, PrimeField};
use rand::seq::SliceRandom;
use rand::Rng;

pub const EXAMPLE1: [[i64; 8]; 6] = [
    [1, 2, 0, 1, 1, 0, 3, 5],
    [1, 0, 1, 1, 2, 0, 3, 5],
    [1, 2, 0, 3, 3, 1, 2, 0],
    [0, 0, 2, 0, 4, 0, 2, 0],
    [0, 0, 2, 1, 5, 0, 2, 0],
    [2, 1, 3, 1, 6, 0, 2, 0],
];

pub const LEX_EXAMPLE: [[i64; 4]; 6] = [
    [1, 0, 2, 1],
    [1, 1, 0, 1],
    [3, 0, 2, 1],
    [0, 2, 0, 0],
    [1, 2, 0, 0],
    [1, 3, 1, 2],
];

pub const SERIES: [[u64; 3]; 5] = [[2, 2, 2], [1, 0, 2], [1, 0, 0], [0, 1, 1], [0, 1, 1]];

pub fn rows<const N: usize>(data: &[[i64; N]]) -> Vec<Vec<i64>> {
    data.iter().map(|r| r.to_vec()).collect()
}

pub fn example1() -> PointSet {
    PointSet::new(PrimeField::new(43).unwrap(), rows(&EXAMPLE1)).unwrap()
}

pub fn lex_example() -> PointSet {
    PointSet::new(PrimeField::new(5).unwrap(), rows(&LEX_EXAMPLE)).unwrap()
}

pub fn series_states() -> Vec<Vec<u64>> {
    SERIES.iter().map(|r| r.to_vec()).collect()
}

pub fn series_points() -> PointSet {
    PointSet::from_residues(PrimeField::new(3).unwrap(), series_states()[..4].to_vec()).unwrap()
}

pub fn example_f(n: usize) -> Polynomial {
    Polynomial::parse(PrimeField::new(43).unwrap(), n, "x1*x2*x4+x4*x5*x6*x7").unwrap()
}

/// `m` distinct points of `Z_p^n` drawn uniformly (requires `m <= p^n`).
pub fn random_points(rng: &mut impl Rng, field: PrimeField, n: usize, m: usize) -> PointSet {
    let p = field.modulus();
    let mut pts: Vec<Vec<u64>> = Vec::with_capacity(m);
    while pts.len() < m {
        let q: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        if !pts.contains(&q) {
            pts.push(q);
        }
    }
    PointSet::from_residues(field, pts).unwrap()
}

/// Random polynomial with up to `terms` terms of degree at most `deg`.
pub fn random_poly(
    rng: &mut impl Rng,
    field: PrimeField,
    n: usize,
    terms: usize,
    deg: u32,
) -> Polynomial {
    let mut f = Polynomial::zero(field, n);
    for _ in 0..terms {
        let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=deg)).collect();
        let t = Polynomial::term(
            field,
            pointbasis::Monomial::new(e),
            rng.gen_range(1..field.modulus()),
        );
        f = f.add(&t).unwrap();
    }
    f
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut t: Vec<usize> = (0..n).collect();
    t.shuffle(rng);
    t
}

pub fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}
