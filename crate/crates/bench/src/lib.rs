//! Fixed inputs shared by the benchmarks.

use fractal_core::biased_lift::{bottom_construct, bottom_solutions, SpikeSpec};
use fractal_core::sparse_paving::{collar_construct, collar_solutions, CHFamily};
use fractal_core::Matroid;

/// First excluded minor from the sparse paving cell equation on `n` elements.
pub fn collar_fixture(n: usize, k: usize) -> CHFamily {
    let phi = collar_solutions(n, k)
        .expect("valid size")
        .next()
        .expect("a solution");
    collar_construct(&phi, n, k).expect("construction")
}

/// First excluded minor from the spike cell equation on `2t` elements.
pub fn bottom_fixture(t: usize, k: usize) -> SpikeSpec {
    let phi = bottom_solutions(t, k)
        .expect("valid size")
        .next()
        .expect("a solution");
    bottom_construct(&phi, t, k).expect("construction")
}

/// `m` with its elements listed in reverse, for isomorphism searches.
pub fn reversed(m: &Matroid) -> Matroid {
    let n = m.n();
    let perm: Vec<usize> = (0..n).map(|e| n - 1 - e).collect();
    m.relabel(&perm)
}
