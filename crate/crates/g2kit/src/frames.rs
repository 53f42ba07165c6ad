//! Cayley-Dickson construction of adapted orthonormal frames on `Im O`
//! and verification against the standard cross-product relations.

use rand::Rng;
use thiserror::Error;

use crate::forms::OMEGA0_TRIPLES;
use crate::octonion::{cross, ImOctonion};

const ORTHO_TOL: f64 = 1e-10;

#[derive(Debug, Error, PartialEq)]
pub enum FrameError {
    #[error("|v1| - 1 = {defect:e} exceeds {ORTHO_TOL:e}")]
    V1NotUnit { defect: f64 },
    #[error("|v2| - 1 = {defect:e} exceeds {ORTHO_TOL:e}")]
    V2NotUnit { defect: f64 },
    #[error("<v1, v2> = {defect:e} exceeds {ORTHO_TOL:e}")]
    V1V2NotOrthogonal { defect: f64 },
    #[error("|v4| - 1 = {defect:e} exceeds {ORTHO_TOL:e}")]
    V4NotUnit { defect: f64 },
    #[error("<v4, span{{v1, v2, v1 x v2}}> component {defect:e} exceeds {ORTHO_TOL:e}")]
    V4NotPerpendicular { defect: f64 },
}

/// Seven orthonormal vectors satisfying the same cross-product relations as
/// the standard basis.
#[derive(Clone, Debug)]
pub struct Frame {
    pub vectors: [ImOctonion; 7],
}

/// Structure constants of the standard basis: `e_i x e_j = sum_k c_ijk e_k`.
fn structure_constant(i: usize, j: usize, k: usize) -> f64 {
    // c_ijk is totally antisymmetric with the seven positive triples of
    // OMEGA0_TRIPLES.
    if i == j || j == k || i == k {
        return 0.0;
    }
    let mut sorted = [i, j, k];
    sorted.sort_unstable();
    for (t, c) in OMEGA0_TRIPLES {
        if t == sorted {
            return c * crate::forms::permutation_sign(&[i, j, k]);
        }
    }
    0.0
}

/// Build the frame `(v1, v2, v1 x v2, v4, v1 x v4, v2 x v4, (v1 x v2) x v4)`.
pub fn cayley_dickson(
    v1: ImOctonion,
    v2: ImOctonion,
    v4: ImOctonion,
) -> Result<Frame, FrameError> {
    let d = (v1.norm() - 1.0).abs();
    if d > ORTHO_TOL {
        return Err(FrameError::V1NotUnit { defect: d });
    }
    let d = (v2.norm() - 1.0).abs();
    if d > ORTHO_TOL {
        return Err(FrameError::V2NotUnit { defect: d });
    }
    let d = v1.dot(v2).abs();
    if d > ORTHO_TOL {
        return Err(FrameError::V1V2NotOrthogonal { defect: d });
    }
    let d = (v4.norm() - 1.0).abs();
    if d > ORTHO_TOL {
        return Err(FrameError::V4NotUnit { defect: d });
    }
    let v3 = cross(v1, v2);
    for b in [v1, v2, v3] {
        let d = b.dot(v4).abs();
        if d > ORTHO_TOL {
            return Err(FrameError::V4NotPerpendicular { defect: d });
        }
    }
    let v5 = cross(v1, v4);
    let v6 = cross(v2, v4);
    let v7 = cross(v3, v4);
    Ok(Frame {
        vectors: [v1, v2, v3, v4, v5, v6, v7],
    })
}

/// Largest deviation of the frame from the standard multiplication table:
/// `max_{i,j} |v_i x v_j - sum_k c_ijk v_k|`.
pub fn verify_frame(f: &Frame) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 1..=7 {
        for j in 1..=7 {
            let mut expected = ImOctonion::ZERO;
            for k in 1..=7 {
                let c = structure_constant(i, j, k);
                if c != 0.0 {
                    expected = expected + f.vectors[k - 1].scale(c);
                }
            }
            let got = cross(f.vectors[i - 1], f.vectors[j - 1]);
            worst = worst.max((got - expected).norm());
        }
    }
    worst
}

/// Determinant of the 7x7 matrix whose columns are the frame vectors.
pub fn frame_determinant(f: &Frame) -> f64 {
    let mut m = [[0.0f64; 7]; 7];
    for (c, v) in f.vectors.iter().enumerate() {
        for r in 0..7 {
            m[r][c] = v.0[r];
        }
    }
    let mut det = 1.0;
    for col in 0..7 {
        let mut piv = col;
        for r in (col + 1)..7 {
            if m[r][col].abs() > m[piv][col].abs() {
                piv = r;
            }
        }
        if m[piv][col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        det *= m[col][col];
        for r in (col + 1)..7 {
            let f = m[r][col] / m[col][col];
            for c in col..7 {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    det
}

/// Sample an admissible `(v1, v2, v4)` triple: Gaussian vectors projected and
/// normalized, with pre-normalization norms below 1e-6 rejected.
pub fn random_admissible_triple(rng: &mut impl Rng) -> (ImOctonion, ImOctonion, ImOctonion) {
    let gaussian = |rng: &mut dyn rand::RngCore| {
        let mut c = [0.0; 7];
        for x in &mut c {
            *x = rng.sample(rand_distr::StandardNormal);
        }
        ImOctonion(c)
    };
    loop {
        let v1 = gaussian(rng);
        if v1.norm() < 1e-6 {
            continue;
        }
        let v1 = v1.normalized();
        let w = gaussian(rng);
        let w = w - v1.scale(v1.dot(w));
        if w.norm() < 1e-6 {
            continue;
        }
        let v2 = w.normalized();
        let v3 = cross(v1, v2);
        let w = gaussian(rng);
        let mut p = w;
        for b in [v1, v2, v3] {
            p = p - b.scale(b.dot(p));
        }
        if p.norm() < 1e-6 {
            continue;
        }
        return (v1, v2, p.normalized());
    }
}
