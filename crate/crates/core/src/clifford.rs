//! Clifford systems `(P₀, …, Pₙ)`: symmetric matrices on `R^{2m}` with
//! `P_iP_j + P_jP_i = 2δ_ij·I`, and their correspondence with umbilical
//! quadratic harmonic morphisms.
//!
//! Irreducible systems are built from anticommuting complex structures
//! `E₁ … E_{n−1}` on `R^{δ(n)}` (left multiplications by imaginary units of
//! C, H or O, extended by the period-8 tensor step):
//!
//! ```text
//! P₀ = diag(I, −I),  P₁ = [[0, I], [I, 0]],  P_{a+1} = [[0, E_a], [E_aᵗ, 0]]
//! ```

use crate::constructions::orth_mult;
use crate::error::{Error, Result};
use crate::map::QuadraticMap;
use crate::matrix::{Matrix, SymMatrix};
use crate::scalar::{Scalar, Tolerance};
use crate::spectral::{is_umbilical, q_rank};
use crate::verify::require_morphism;

#[derive(Clone, PartialEq)]
pub struct CliffordSystem<T> {
    matrices: Vec<SymMatrix<T>>,
}

impl<T: std::fmt::Display> std::fmt::Debug for CliffordSystem<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.matrices).finish()
    }
}

fn relations_hold<T: Scalar>(mats: &[&Matrix<T>], tol: Tolerance) -> bool {
    let dim = mats[0].rows();
    let bound = tol.bound(1.0);
    let two_id = Matrix::<T>::identity(dim).scale(&T::from_i64(2));
    let zero = Matrix::<T>::zeros(dim, dim);
    for i in 0..mats.len() {
        for j in i..mats.len() {
            let anti = mats[i].mul(mats[j]).add(&mats[j].mul(mats[i]));
            let target = if i == j { &two_id } else { &zero };
            if !anti.sub(target).max_abs_entry().is_negligible(bound) {
                return false;
            }
        }
    }
    true
}

/// Whether the matrices form a Clifford system.
///
/// Errors on an empty list, differing sizes, odd dimension or non-symmetric
/// input; otherwise answers the relations (exactly for exact scalars).
pub fn check_clifford<T: Scalar>(matrices: &[Matrix<T>]) -> Result<bool> {
    check_clifford_with(matrices, Tolerance::default())
}

pub fn check_clifford_with<T: Scalar>(matrices: &[Matrix<T>], tol: Tolerance) -> Result<bool> {
    let first = matrices.first().ok_or(Error::EmptyMap)?;
    let dim = first.rows();
    for m in matrices {
        if !m.is_square() {
            return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        if m.rows() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: m.rows() });
        }
        SymMatrix::new(m.clone())?;
    }
    if dim % 2 != 0 {
        return Err(Error::OddDimension(dim));
    }
    let refs: Vec<&Matrix<T>> = matrices.iter().collect();
    Ok(relations_hold(&refs, tol))
}

impl<T: Scalar> CliffordSystem<T> {
    /// Validate and wrap `P₀ … Pₙ`.
    pub fn new(matrices: Vec<SymMatrix<T>>) -> Result<Self> {
        let raw: Vec<Matrix<T>> = matrices.iter().map(|m| m.matrix().clone()).collect();
        if !check_clifford(&raw)? {
            return Err(Error::NotClifford);
        }
        Ok(Self { matrices })
    }

    /// Number of members, `n + 1`.
    pub fn count(&self) -> usize {
        self.matrices.len()
    }

    /// Index `n` of the system `(P₀, …, Pₙ)`.
    pub fn index(&self) -> usize {
        self.matrices.len() - 1
    }

    /// Dimension `2m` of the space acted on.
    pub fn dim(&self) -> usize {
        self.matrices[0].dim()
    }

    pub fn matrices(&self) -> &[SymMatrix<T>] {
        &self.matrices
    }

    pub fn to_f64(&self) -> CliffordSystem<f64> {
        CliffordSystem { matrices: self.matrices.iter().map(SymMatrix::to_f64).collect() }
    }

    /// The same system with `P_i` replaced by `−P_i`.
    pub fn negate_member(&self, i: usize) -> Self {
        let mut matrices = self.matrices.clone();
        matrices[i] = matrices[i].scale(&-T::one());
        Self { matrices }
    }

    /// `(A P_i Aᵗ)_i` for an orthogonal `A`; the result is validated again.
    pub fn conjugate(&self, a: &Matrix<T>) -> Result<Self> {
        let at = a.transpose();
        Self::new(self.matrices.iter().map(|p| p.congruence(&at)).collect())
    }
}

/// Block-diagonal sum `(P₀ ⊕ Q₀, …, Pₙ ⊕ Qₙ)`.
pub fn direct_sum<T: Scalar>(s1: &CliffordSystem<T>, s2: &CliffordSystem<T>) -> Result<CliffordSystem<T>> {
    if s1.count() != s2.count() {
        return Err(Error::CountMismatch(s1.count(), s2.count()));
    }
    let matrices = s1.matrices.iter().zip(&s2.matrices).map(|(p, q)| p.direct_sum(q)).collect();
    Ok(CliffordSystem { matrices })
}

/// `δ(n)`: half the dimension of an irreducible system with `n + 1` members.
pub fn delta(n: usize) -> Result<usize> {
    const TABLE: [usize; 8] = [1, 2, 4, 4, 8, 8, 8, 8];
    match n {
        0 => Err(Error::ZeroCliffordIndex),
        1..=8 => Ok(TABLE[n - 1]),
        _ => Ok(16 * delta(n - 8)?),
    }
}

fn pauli<T: Scalar>() -> (Matrix<T>, Matrix<T>, Matrix<T>) {
    let z = Matrix::from_i64_rows(&[&[1, 0], &[0, -1]]);
    let x = Matrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
    let eps = Matrix::from_i64_rows(&[&[0, -1], &[1, 0]]);
    (z, x, eps)
}

/// `q` pairwise anticommuting skew matrices squaring to `−I`, on the smallest
/// space that carries them (`R^{δ(q+1)}`). Returns the dimension as well,
/// since `q = 0` yields no matrices.
fn complex_structures<T: Scalar>(q: usize) -> (usize, Vec<Matrix<T>>) {
    let imaginary_units = |n: usize| -> Vec<Matrix<T>> {
        let f = orth_mult(n).expect("division algebra dimension");
        (1..=q).map(|a| f.left_mul(a)).collect()
    };
    match q {
        0 => (1, vec![]),
        1 => (2, imaginary_units(2)),
        2 | 3 => (4, imaginary_units(4)),
        4..=7 => (8, imaginary_units(8)),
        _ => {
            // Eight structures on R^16: octonion units doubled by ε ⊗ I.
            let (z, _, eps) = pauli::<T>();
            let octo = orth_mult(8).expect("octonions");
            let mut eight: Vec<Matrix<T>> = (1..8).map(|a| z.kron(&octo.left_mul(a))).collect();
            eight.push(eps.kron(&Matrix::identity(8)));
            let omega = eight.iter().skip(1).fold(eight[0].clone(), |acc, f| acc.mul(f));

            let (d, rest) = complex_structures::<T>(q - 8);
            let id = Matrix::identity(d);
            let mut out: Vec<Matrix<T>> = eight.iter().map(|f| f.kron(&id)).collect();
            out.extend(rest.iter().map(|e| omega.kron(e)));
            (16 * d, out)
        }
    }
}

/// An irreducible Clifford system with `n + 1` members on `R^{2δ(n)}`.
pub fn irreducible<T: Scalar>(n: usize) -> Result<CliffordSystem<T>> {
    let target = delta(n)?;
    let (d, structures) = complex_structures::<T>(n - 1);
    if d != target {
        return Err(Error::Invariant(format!("built dimension {d}, expected δ({n}) = {target}")));
    }
    let (z, x, _) = pauli::<T>();
    let id = Matrix::identity(d);
    let mut matrices = vec![SymMatrix::new(z.kron(&id))?, SymMatrix::new(x.kron(&id))?];
    matrices.extend(structures.iter().map(SymMatrix::off_diagonal));
    CliffordSystem::new(matrices)
}

/// The quadratic map `X ↦ (⟨P₀X, X⟩, …, ⟨PₙX, X⟩)`.
pub fn qhm_from_clifford<T: Scalar>(system: &CliffordSystem<T>) -> Result<QuadraticMap<T>> {
    if system.count() < 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: system.count() });
    }
    QuadraticMap::new(system.matrices.clone())
}

/// An umbilical morphism written as `scale` times the map of a Clifford
/// system.
#[derive(Clone, PartialEq)]
pub struct UmbilicalClifford<T> {
    /// The common positive eigenvalue `λ`.
    pub scale: T,
    /// `A_i / λ`, expressed in the coordinates of the input map.
    pub system: CliffordSystem<T>,
}

/// Recover the Clifford system behind a Q-nonsingular umbilical harmonic
/// morphism. Since `A_i² = λ²I`, the scaled components `A_i/λ` already
/// satisfy the Clifford relations in the original coordinates, so
/// `λ · qhm_from_clifford(system)` equals the input map.
///
/// Exact maps need `λ` to be rational; otherwise
/// [`Error::IrrationalScale`] is returned and the float map should be used.
pub fn clifford_from_umbilical<T: Scalar>(map: &QuadraticMap<T>) -> Result<UmbilicalClifford<T>> {
    require_morphism(map)?;
    let (umbilical, positives) = is_umbilical(map)?;
    if !umbilical {
        return Err(Error::NotUmbilical(positives));
    }
    let m = map.domain_dim();
    let rank = q_rank(map)?;
    if rank != m {
        return Err(Error::QSingular { rank, dim: m });
    }
    let a1 = map.component(0).matrix();
    let lambda2 = a1.mul(a1).trace() / T::from_i64(m as i64);
    let scale = lambda2.sqrt_exact().ok_or_else(|| Error::IrrationalScale(lambda2.to_string()))?;
    let inv = T::one() / scale.clone();
    let matrices = map.components().iter().map(|a| a.scale(&inv)).collect();
    let system = if T::EXACT {
        CliffordSystem::new(matrices)?
    } else {
        // The float relations hold to rounding relative to λ², which the
        // default unit-scale tolerance already covers for well-scaled input.
        let raw: Vec<Matrix<T>> = map.components().iter().map(|a| a.matrix().scale(&inv)).collect();
        let refs: Vec<&Matrix<T>> = raw.iter().collect();
        if !relations_hold(&refs, Tolerance::relative(1e-8)) {
            return Err(Error::NotClifford);
        }
        CliffordSystem { matrices }
    };
    Ok(UmbilicalClifford { scale, system })
}

impl<T: std::fmt::Display> std::fmt::Debug for UmbilicalClifford<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("UmbilicalClifford")
            .field("scale", &format_args!("{}", self.scale))
            .field("system", &self.system)
            .finish()
    }
}

/// Whether `A` is orthogonal and `Q_i = A P_i Aᵗ` for every member.
pub fn equivalence_witness_check<T: Scalar>(
    p: &CliffordSystem<T>,
    q: &CliffordSystem<T>,
    a: &Matrix<T>,
) -> Result<bool> {
    if p.count() != q.count() {
        return Err(Error::CountMismatch(p.count(), q.count()));
    }
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: q.dim() });
    }
    if a.rows() != p.dim() || a.cols() != p.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: a.rows().max(a.cols()) });
    }
    let tol = Tolerance::default();
    if !a.is_orthogonal(tol) {
        return Ok(false);
    }
    let at = a.transpose();
    let bound = tol.bound(1.0);
    Ok(p.matrices
        .iter()
        .zip(&q.matrices)
        .all(|(pi, qi)| a.mul(pi.matrix()).mul(&at).sub(qi.matrix()).max_abs_entry().is_negligible(bound)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceInvariants<T> {
    pub dim: usize,
    pub count: usize,
    /// Number of irreducible summands, `dim / 2δ(n)`.
    pub multiplicity: usize,
    /// `tr(P₀P₁⋯Pₙ)`; vanishes unless `n ≡ 0 (mod 4)`, where its sign
    /// separates the two classes of irreducible systems.
    pub product_trace: T,
}

pub fn equivalence_invariants<T: Scalar>(system: &CliffordSystem<T>) -> Result<EquivalenceInvariants<T>> {
    let n = system.index();
    let unit = 2 * delta(n)?;
    if !system.dim().is_multiple_of(unit) {
        return Err(Error::MalformedSystem { dim: system.dim(), irreducible: unit });
    }
    let product = system.matrices[1..].iter().fold(system.matrices[0].matrix().clone(), |acc, p| acc.mul(p.matrix()));
    Ok(EquivalenceInvariants {
        dim: system.dim(),
        count: system.count(),
        multiplicity: system.dim() / unit,
        product_trace: product.trace(),
    })
}

/// Witness-free equivalence decision: `(dim, count, multiplicity)` agree and,
/// for `n ≡ 0 (mod 4)`, so does the product trace.
///
/// Decisive for irreducible systems; for reducible ones it is only a
/// necessary condition.
pub fn are_equivalent<T: Scalar>(s1: &CliffordSystem<T>, s2: &CliffordSystem<T>) -> Result<bool> {
    let a = equivalence_invariants(s1)?;
    let b = equivalence_invariants(s2)?;
    let same_shape = (a.dim, a.count, a.multiplicity) == (b.dim, b.count, b.multiplicity);
    if !same_shape {
        return Ok(false);
    }
    if !s1.index().is_multiple_of(4) {
        return Ok(true);
    }
    let bound = Tolerance::default().bound(a.dim as f64);
    Ok((a.product_trace - b.product_trace).is_negligible(bound))
}

/// A splitting of the coordinates into two nonempty sets, each spanning a
/// subspace invariant under every member, read off the connected components
/// of the combined support graph. `Some` proves reducibility; `None` is
/// inconclusive.
pub fn coordinate_split<T: Scalar>(system: &CliffordSystem<T>) -> Option<(Vec<usize>, Vec<usize>)> {
    let dim = system.dim();
    let mut component = vec![usize::MAX; dim];
    let mut stack = vec![0];
    component[0] = 0;
    while let Some(i) = stack.pop() {
        for p in &system.matrices {
            for j in 0..dim {
                if component[j] == usize::MAX && !p[(i, j)].is_zero() {
                    component[j] = 0;
                    stack.push(j);
                }
            }
        }
    }
    let (reached, rest): (Vec<usize>, Vec<usize>) = (0..dim).partition(|&i| component[i] == 0);
    (!rest.is_empty()).then_some((reached, rest))
}
