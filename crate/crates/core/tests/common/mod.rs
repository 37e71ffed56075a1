#![allow(dead_code)]

use lcd_core::algebra::{Fe, Field, Matrix};
use lcd_core::equiv::MonomialMap;
use lcd_core::LinearCode;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_word<R: Rng>(rng: &mut R, field: Field, n: usize) -> Vec<Fe> {
    (0..n).map(|_| field.elem(rng.gen_range(0..field.order())).unwrap()).collect()
}

pub fn random_nonzero<R: Rng>(rng: &mut R, field: Field) -> Fe {
    field.elem(rng.gen_range(1..field.order())).unwrap()
}

pub fn random_matrix<R: Rng>(rng: &mut R, field: Field, rows: usize, cols: usize) -> Matrix {
    let data = (0..rows).flat_map(|_| random_word(rng, field, cols)).collect();
    Matrix::new(field, rows, cols, data).unwrap()
}

/// A uniformly random full-rank `k×n` generator.
pub fn random_code<R: Rng>(rng: &mut R, field: Field, k: usize, n: usize) -> LinearCode {
    loop {
        let g = random_matrix(rng, field, k, n);
        if g.rank() == k {
            return LinearCode::new(g).unwrap();
        }
    }
}

pub fn random_map<R: Rng>(rng: &mut R, field: Field, n: usize) -> MonomialMap {
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.shuffle(rng);
    let scales = (0..n).map(|_| random_nonzero(rng, field)).collect();
    MonomialMap::new(sigma, scales).unwrap()
}

/// Random invertible `k×k` matrix.
pub fn random_invertible<R: Rng>(rng: &mut R, field: Field, k: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, field, k, k);
        if m.rank() == k {
            return m;
        }
    }
}
