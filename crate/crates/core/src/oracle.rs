//! Brute-force cross-checks over small prime fields: enumerate every
//! candidate endomorphism (or pair of them) and filter by the defining
//! identity, entirely independent of the linear-system solvers. Kept
//! deliberately naive — these exist to catch bugs in the fast path, so
//! they share no code with it.

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::multiplier::Multiplier;
use crate::scalar::{Field, Scalar};

/// Hard cap on the number of candidates an enumeration may visit.
const ENUMERATION_CAP: u128 = 1 << 22;

fn prime_of(a: &FiniteAlgebra) -> Result<u64> {
    match a.field() {
        Field::Fp(p) => Ok(p),
        other => Err(Error::PreconditionViolated(format!(
            "exhaustive enumeration needs a finite prime field, got {other}"
        ))),
    }
}

fn candidate_count(p: u64, cells: usize) -> Result<u128> {
    let mut total: u128 = 1;
    for _ in 0..cells {
        total = total.saturating_mul(p as u128);
        if total > ENUMERATION_CAP {
            return Err(Error::PreconditionViolated(format!(
                "enumeration of {cells} cells over GF({p}) exceeds the \
                 {ENUMERATION_CAP}-candidate cap"
            )));
        }
    }
    Ok(total)
}

/// Iterates over all `n×n` matrices over GF(p) by counting in base p.
struct MatrixCounter {
    p: u64,
    n: usize,
    digits: Vec<u64>,
    done: bool,
}

impl MatrixCounter {
    fn new(p: u64, n: usize) -> MatrixCounter {
        MatrixCounter {
            p,
            n,
            digits: vec![0; n * n],
            done: false,
        }
    }
}

impl Iterator for MatrixCounter {
    type Item = Matrix;

    fn next(&mut self) -> Option<Matrix> {
        if self.done {
            return None;
        }
        let field = Field::Fp(self.p);
        let entries: Vec<Scalar> = self
            .digits
            .iter()
            .map(|&d| Scalar::Fp { val: d, p: self.p })
            .collect();
        let m = Matrix::from_vectorized(field, self.n, self.n, entries);
        // Increment.
        self.done = true;
        for d in &mut self.digits {
            *d += 1;
            if *d < self.p {
                self.done = false;
                break;
            }
            *d = 0;
        }
        Some(m)
    }
}

/// What an exhaustive enumeration found: how many solutions there are and
/// the subspace they span. For a linear solution set over GF(p), the
/// computed space is correct iff `count = p^dim` and every solution lies
/// in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub count: u128,
    pub span: Subspace,
}

impl EnumerationReport {
    /// Does the enumerated solution set equal this subspace exactly?
    pub fn matches(&self, space: &Subspace) -> bool {
        let p = match space.field {
            Field::Fp(p) => p as u128,
            _ => return false,
        };
        self.span == *space && self.count == p.checked_pow(space.dim() as u32).unwrap_or(0)
    }
}

/// Enumerates every endomorphism and keeps those with `y(ab) = (ya)·b`.
pub fn enumerate_left_multipliers(a: &FiniteAlgebra) -> Result<EnumerationReport> {
    let p = prime_of(a)?;
    let n = a.dim();
    candidate_count(p, n * n)?;
    let mut count: u128 = 0;
    let mut solutions = Vec::new();
    for y in MatrixCounter::new(p, n) {
        let mut ok = true;
        'check: for i in 0..n {
            for j in 0..n {
                let lhs = y.apply(&a.mul_basis(i, j));
                let rhs = a.mul(&y.col(i), &a.basis_element(j));
                if lhs != rhs {
                    ok = false;
                    break 'check;
                }
            }
        }
        if ok {
            count += 1;
            solutions.push(y.vectorize());
        }
    }
    Ok(EnumerationReport {
        count,
        span: Subspace::from_spanning(a.field(), n * n, &solutions),
    })
}

/// Enumerates every endomorphism and keeps those with `(ab)z = a·(bz)`.
pub fn enumerate_right_multipliers(a: &FiniteAlgebra) -> Result<EnumerationReport> {
    let p = prime_of(a)?;
    let n = a.dim();
    candidate_count(p, n * n)?;
    let mut count: u128 = 0;
    let mut solutions = Vec::new();
    for z in MatrixCounter::new(p, n) {
        let mut ok = true;
        'check: for i in 0..n {
            for j in 0..n {
                let lhs = z.apply(&a.mul_basis(i, j));
                let rhs = a.mul(&a.basis_element(i), &z.col(j));
                if lhs != rhs {
                    ok = false;
                    break 'check;
                }
            }
        }
        if ok {
            count += 1;
            solutions.push(z.vectorize());
        }
    }
    Ok(EnumerationReport {
        count,
        span: Subspace::from_spanning(a.field(), n * n, &solutions),
    })
}

/// Enumerates every pair of endomorphisms and keeps those satisfying the
/// commutation law `ρ(a)·b = a·λ(b)` — the raw multiplier pairs.
pub fn enumerate_multiplier_pairs(a: &FiniteAlgebra) -> Result<EnumerationReport> {
    let p = prime_of(a)?;
    let n = a.dim();
    candidate_count(p, 2 * n * n)?;
    let mut count: u128 = 0;
    let mut solutions = Vec::new();
    for lambda in MatrixCounter::new(p, n) {
        for rho in MatrixCounter::new(p, n) {
            let pair = Multiplier {
                lambda: lambda.clone(),
                rho,
            };
            if pair.commutes(a) {
                count += 1;
                solutions.push(pair.vectorized());
            }
        }
    }
    Ok(EnumerationReport {
        count,
        span: Subspace::from_spanning(a.field(), 2 * n * n, &solutions),
    })
}

/// Enumerates all elements of a GF(p) algebra and keeps the two-sided
/// units (there is at most one; returned if found).
pub fn enumerate_unit(a: &FiniteAlgebra) -> Result<Option<Vec<Scalar>>> {
    let p = prime_of(a)?;
    let n = a.dim();
    candidate_count(p, n)?;
    let mut digits = vec![0u64; n];
    loop {
        let e: Vec<Scalar> = digits
            .iter()
            .map(|&d| Scalar::Fp { val: d, p })
            .collect();
        let mut ok = true;
        for i in 0..n {
            let b = a.basis_element(i);
            if a.mul(&e, &b) != b || a.mul(&b, &e) != b {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(Some(e));
        }
        let mut carried = true;
        for d in &mut digits {
            *d += 1;
            if *d < p {
                carried = false;
                break;
            }
            *d = 0;
        }
        if carried {
            return Ok(None);
        }
    }
}
