//! Alternating forms on R^7, the standard 3-form `Omega0`, Hodge star,
//! the associativity tensor `tau`, and the calibration classifiers for
//! 3- and 4-planes.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::octonion::ImOctonion;

/// Sorted coefficients of `Omega0`: the seven signed index triples with
/// `Omega0 = w123 + w145 - w167 + w246 + w257 + w347 - w356`.
pub const OMEGA0_TRIPLES: [([usize; 3], f64); 7] = [
    ([1, 2, 3], 1.0),
    ([1, 4, 5], 1.0),
    ([1, 6, 7], -1.0),
    ([2, 4, 6], 1.0),
    ([2, 5, 7], 1.0),
    ([3, 4, 7], 1.0),
    ([3, 5, 6], -1.0),
];

/// The 28-term expansion of `tau`: `(component, sorted triple, sign)`.
/// Component `a` means the output direction `e_a`.
pub const TAU_TERMS: [(usize, [usize; 3], f64); 28] = [
    (1, [2, 5, 6], 1.0),
    (1, [2, 4, 7], -1.0),
    (1, [3, 4, 6], 1.0),
    (1, [3, 5, 7], -1.0),
    (2, [1, 5, 6], 1.0),
    (2, [1, 4, 7], -1.0),
    (2, [3, 4, 5], -1.0),
    (2, [3, 6, 7], 1.0),
    (3, [2, 4, 5], 1.0),
    (3, [2, 6, 7], -1.0),
    (3, [1, 4, 6], -1.0),
    (3, [1, 5, 7], -1.0),
    (4, [5, 6, 7], 1.0),
    (4, [1, 2, 7], -1.0),
    (4, [1, 3, 6], 1.0),
    (4, [2, 3, 5], -1.0),
    (5, [1, 2, 6], 1.0),
    (5, [4, 6, 7], -1.0),
    (5, [1, 3, 7], 1.0),
    (5, [2, 3, 4], 1.0),
    (6, [4, 5, 7], 1.0),
    (6, [1, 2, 5], -1.0),
    (6, [1, 3, 4], -1.0),
    (6, [2, 3, 7], 1.0),
    (7, [1, 2, 4], 1.0),
    (7, [4, 5, 6], -1.0),
    (7, [1, 3, 5], -1.0),
    (7, [2, 3, 6], -1.0),
];

#[derive(Debug, Error, PartialEq)]
pub enum FormError {
    #[error("contraction requires degree >= 1")]
    DegreeZeroContraction,
    #[error("degenerate input: vectors are rank deficient (rank {rank} < {needed})")]
    DegenerateInput { rank: usize, needed: usize },
}

/// A k-form on R^7 stored as coefficients on strictly increasing index
/// tuples (1-based).
#[derive(Clone, Debug, PartialEq)]
pub struct AlternatingForm {
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, f64>,
}

impl AlternatingForm {
    pub fn zero(degree: usize) -> Self {
        assert!(degree <= 7);
        AlternatingForm {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// Elementary monomial `c * dx^{i1} ^ ... ^ dx^{ik}`; indices need not be
    /// sorted, the permutation sign is folded into the coefficient.
    pub fn monomial(indices: &[usize], c: f64) -> Self {
        let mut form = AlternatingForm::zero(indices.len());
        form.add_term(indices, c);
        form
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Iterate over the stored (sorted tuple, coefficient) pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], f64)> {
        self.coeffs.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, sorted: &[usize]) -> f64 {
        self.coeffs.get(sorted).copied().unwrap_or(0.0)
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add_term(&mut self, indices: &[usize], c: f64) {
        assert_eq!(indices.len(), self.degree, "degree mismatch");
        assert!(indices.iter().all(|&i| (1..=7).contains(&i)));
        let (sorted, sign) = match sort_with_sign(indices) {
            Some(x) => x,
            None => return, // repeated index, term vanishes
        };
        let entry = self.coeffs.entry(sorted).or_insert(0.0);
        *entry += sign * c;
        if *entry == 0.0 {
            let key: Vec<usize> = indices.to_vec();
            let (sorted, _) = sort_with_sign(&key).unwrap();
            self.coeffs.remove(&sorted);
        }
    }

    /// Evaluate on `degree` vectors: the sum over stored tuples of
    /// coefficient times the corresponding minor determinant.
    pub fn eval(&self, vectors: &[ImOctonion]) -> f64 {
        assert_eq!(vectors.len(), self.degree, "wrong number of arguments");
        let mut total = 0.0;
        for (tuple, c) in &self.coeffs {
            total += c * minor_det(tuple, vectors);
        }
        total
    }

    /// Hodge star with the Euclidean metric and `dx^1 ^ ... ^ dx^7` positive.
    pub fn hodge_star(&self) -> AlternatingForm {
        let mut out = AlternatingForm::zero(7 - self.degree);
        for (tuple, &c) in &self.coeffs {
            let complement: Vec<usize> = (1..=7).filter(|i| !tuple.contains(i)).collect();
            let mut joined = tuple.clone();
            joined.extend_from_slice(&complement);
            let sign = permutation_sign(&joined);
            out.add_term(&complement, sign * c);
        }
        out
    }

    /// Contraction `iota_n` by a vector.
    pub fn contract(&self, n: ImOctonion) -> Result<AlternatingForm, FormError> {
        if self.degree == 0 {
            return Err(FormError::DegreeZeroContraction);
        }
        let mut out = AlternatingForm::zero(self.degree - 1);
        for (tuple, &c) in &self.coeffs {
            for (slot, &i) in tuple.iter().enumerate() {
                let coeff = n.0[i - 1];
                if coeff == 0.0 {
                    continue;
                }
                let sign = if slot % 2 == 0 { 1.0 } else { -1.0 };
                let rest: Vec<usize> = tuple
                    .iter()
                    .copied()
                    .enumerate()
                    .filter_map(|(s, j)| (s != slot).then_some(j))
                    .collect();
                out.add_term(&rest, sign * coeff * c);
            }
        }
        Ok(out)
    }

    /// Restrict to the span of the given orthonormal basis: keeps only the
    /// evaluations against those basis vectors, re-expressed in the ambient
    /// coordinates they carry. Used by the self-duality check on 4-planes.
    pub fn restrict_to_plane(&self, basis: &[ImOctonion]) -> Vec<Vec<f64>> {
        // Returns the full antisymmetric array of evaluations on basis pairs
        // (only meaningful for degree 2).
        assert_eq!(self.degree, 2);
        let k = basis.len();
        let mut m = vec![vec![0.0; k]; k];
        for a in 0..k {
            for b in 0..k {
                m[a][b] = self.eval(&[basis[a], basis[b]]);
            }
        }
        m
    }
}

fn sort_with_sign(indices: &[usize]) -> Option<(Vec<usize>, f64)> {
    let mut v: Vec<usize> = indices.to_vec();
    let mut sign = 1.0;
    // insertion sort, counting swaps
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    for w in v.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((v, sign))
}

/// Sign of a permutation of distinct entries, by inversion count.
pub fn permutation_sign(perm: &[usize]) -> f64 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn minor_det(tuple: &[usize], vectors: &[ImOctonion]) -> f64 {
    let k = tuple.len();
    match k {
        0 => 1.0,
        1 => vectors[0].0[tuple[0] - 1],
        2 => {
            let (a, b) = (tuple[0] - 1, tuple[1] - 1);
            vectors[0].0[a] * vectors[1].0[b] - vectors[0].0[b] * vectors[1].0[a]
        }
        3 => {
            let m = |r: usize, c: usize| vectors[c].0[tuple[r] - 1];
            m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
                - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
        }
        _ => det_general(tuple, vectors),
    }
}

fn det_general(tuple: &[usize], vectors: &[ImOctonion]) -> f64 {
    // Gaussian elimination with partial pivoting on the k x k minor.
    let k = tuple.len();
    let mut m = vec![0.0; k * k];
    for r in 0..k {
        for c in 0..k {
            m[r * k + c] = vectors[c].0[tuple[r] - 1];
        }
    }
    let mut det = 1.0;
    for col in 0..k {
        let mut piv = col;
        for r in (col + 1)..k {
            if m[r * k + col].abs() > m[piv * k + col].abs() {
                piv = r;
            }
        }
        if m[piv * k + col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            for c in 0..k {
                m.swap(col * k + c, piv * k + c);
            }
            det = -det;
        }
        det *= m[col * k + col];
        for r in (col + 1)..k {
            let f = m[r * k + col] / m[col * k + col];
            for c in col..k {
                m[r * k + c] -= f * m[col * k + c];
            }
        }
    }
    det
}

/// The standard G2 3-form.
pub fn omega0() -> AlternatingForm {
    let mut f = AlternatingForm::zero(3);
    for (t, c) in OMEGA0_TRIPLES {
        f.add_term(&t, c);
    }
    f
}

/// Hodge star as a free function.
pub fn hodge_star(f: &AlternatingForm) -> AlternatingForm {
    f.hodge_star()
}

/// Contraction as a free function.
pub fn contract(f: &AlternatingForm, n: ImOctonion) -> Result<AlternatingForm, FormError> {
    f.contract(n)
}

/// The associativity tensor as seven coefficient 3-forms, one per output
/// direction.
#[derive(Clone, Debug)]
pub struct TauTensor {
    pub components: [AlternatingForm; 7],
}

impl TauTensor {
    pub fn standard() -> Self {
        let mut components: [AlternatingForm; 7] =
            std::array::from_fn(|_| AlternatingForm::zero(3));
        for (a, t, c) in TAU_TERMS {
            components[a - 1].add_term(&t, c);
        }
        TauTensor { components }
    }

    pub fn eval(&self, u: ImOctonion, v: ImOctonion, w: ImOctonion) -> ImOctonion {
        let args = [u, v, w];
        let mut out = [0.0; 7];
        for (a, comp) in self.components.iter().enumerate() {
            out[a] = comp.eval(&args);
        }
        ImOctonion(out)
    }
}

/// `tau(u, v, w)` via the 28-term expansion. Agrees with the contraction of
/// `*Omega0` evaluated as `(*Omega0)(z, u, v, w)`; the two paths are checked
/// against each other in the tests.
pub fn tau(u: ImOctonion, v: ImOctonion, w: ImOctonion) -> ImOctonion {
    let args = [u, v, w];
    let mut out = [0.0; 7];
    for (a, t, c) in TAU_TERMS {
        out[a - 1] += c * minor_det(&t, &args);
    }
    ImOctonion(out)
}

/// `tau` through the 4-form path: `g(tau(u,v,w), e_a) = (*Omega0)(e_a, u, v, w)`.
pub fn tau_via_star(star_omega0: &AlternatingForm, u: ImOctonion, v: ImOctonion, w: ImOctonion) -> ImOctonion {
    let mut out = [0.0; 7];
    for a in 1..=7 {
        out[a - 1] = star_omega0.eval(&[ImOctonion::basis(a), u, v, w]);
    }
    ImOctonion(out)
}

/// Modified Gram-Schmidt with a rank tolerance. Returns the orthonormal
/// vectors, or an error naming the detected rank.
pub fn orthonormalize(vectors: &[ImOctonion], tol: f64) -> Result<Vec<ImOctonion>, FormError> {
    let mut basis: Vec<ImOctonion> = Vec::with_capacity(vectors.len());
    for &v in vectors {
        let mut w = v;
        for b in &basis {
            w = w - b.scale(b.dot(w));
        }
        // second pass for numerical orthogonality
        for b in &basis {
            w = w - b.scale(b.dot(w));
        }
        let n = w.norm();
        if n <= tol * v.norm().max(1.0) {
            return Err(FormError::DegenerateInput {
                rank: basis.len(),
                needed: vectors.len(),
            });
        }
        basis.push(w.scale(1.0 / n));
    }
    Ok(basis)
}

const RANK_TOL: f64 = 1e-8;
const CALIBRATION_TOL: f64 = 1e-10;

/// Classify a 3-plane spanned by the inputs: associative iff `tau` vanishes
/// on an orthonormal basis. Returns the flag and the residual `|tau(q1,q2,q3)|`.
pub fn is_associative(
    p1: ImOctonion,
    p2: ImOctonion,
    p3: ImOctonion,
) -> Result<(bool, f64), FormError> {
    let q = orthonormalize(&[p1, p2, p3], RANK_TOL)?;
    let residual = tau(q[0], q[1], q[2]).norm();
    Ok((residual <= CALIBRATION_TOL, residual))
}

/// Classify a 4-plane: coassociative iff `Omega0` restricts to zero.
/// The residual is the largest `|Omega0(qi, qj, qk)|` over the four
/// orthonormalized triples.
pub fn is_coassociative(
    p1: ImOctonion,
    p2: ImOctonion,
    p3: ImOctonion,
    p4: ImOctonion,
) -> Result<(bool, f64), FormError> {
    let q = orthonormalize(&[p1, p2, p3, p4], RANK_TOL)?;
    let om = omega0();
    let mut residual: f64 = 0.0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            for k in (j + 1)..4 {
                residual = residual.max(om.eval(&[q[i], q[j], q[k]]).abs());
            }
        }
    }
    Ok((residual <= CALIBRATION_TOL, residual))
}

/// The compatible almost complex structure `J_n w = (n/|n|) x w`.
pub fn jn_action(n: ImOctonion, w: ImOctonion) -> Result<ImOctonion, FormError> {
    let norm = n.norm();
    if norm <= 1e-300 {
        return Err(FormError::DegenerateInput { rank: 0, needed: 1 });
    }
    Ok(crate::octonion::cross(n.scale(1.0 / norm), w))
}
