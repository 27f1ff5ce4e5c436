//! Ready-made algebras: matrix units and their multiplicatively closed
//! subalgebras, algebras of functions on a finite set, and the batteries of
//! named fixtures the integration tests sweep over.

use std::collections::BTreeSet;

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::modules::FiniteModule;
use crate::scalar::Field;

fn unit_label(n: usize, r: usize, c: usize) -> String {
    if n < 10 {
        format!("e{r}{c}")
    } else {
        format!("e{r}_{c}")
    }
}

/// The span of the matrix units `e_{rc}` for `(r, c)` in a chosen set of
/// 1-indexed positions inside the `n×n` matrices, under the usual rule
/// `e_{rc}·e_{r'c'} = δ_{c,r'}·e_{rc'}`.
///
/// Fails unless the chosen set is multiplicatively closed. The result
/// carries the conjugate-transpose involution exactly when the set is
/// closed under transposition.
pub fn subalgebra_of_matrix_units(
    n: usize,
    positions: &[(usize, usize)],
    field: Field,
) -> Result<FiniteAlgebra> {
    let set: BTreeSet<(usize, usize)> = positions.iter().copied().collect();
    for &(r, c) in &set {
        if r == 0 || c == 0 || r > n || c > n {
            return Err(Error::DimensionMismatch(format!(
                "position ({r}, {c}) is outside the {n}×{n} grid (positions are 1-indexed)"
            )));
        }
    }
    let index: Vec<(usize, usize)> = set.iter().copied().collect();
    let pos = |r: usize, c: usize| index.iter().position(|&p| p == (r, c));
    let mut constants = Vec::new();
    for (i, &(r, c)) in index.iter().enumerate() {
        for (j, &(r2, c2)) in index.iter().enumerate() {
            if c != r2 {
                continue;
            }
            match pos(r, c2) {
                Some(k) => constants.push((i, j, k, field.one())),
                None => {
                    return Err(Error::PreconditionViolated(format!(
                        "chosen set is not multiplicatively closed: \
                         e{r}{c}·e{r2}{c2} = e{r}{c2} is outside the span"
                    )))
                }
            }
        }
    }
    let labels = index.iter().map(|&(r, c)| unit_label(n, r, c)).collect();
    let transpose_closed = index.iter().all(|&(r, c)| set.contains(&(c, r)));
    let star = transpose_closed.then(|| {
        Matrix::from_fn(field, index.len(), index.len(), |i, j| {
            let (r, c) = index[j];
            if index[i] == (c, r) {
                field.one()
            } else {
                field.zero()
            }
        })
    });
    FiniteAlgebra::new(field, labels, &constants, star)
}

/// The full algebra of `n×n` matrix units (all of `M_n`), with the
/// conjugate-transpose involution.
pub fn matrix_units(n: usize, field: Field) -> FiniteAlgebra {
    let positions: Vec<(usize, usize)> = (1..=n)
        .flat_map(|r| (1..=n).map(move |c| (r, c)))
        .collect();
    subalgebra_of_matrix_units(n, &positions, field).expect("full grid is closed")
}

/// The upper-triangular matrix units (`r ≤ c`), a unital algebra.
pub fn upper_triangular(n: usize, field: Field) -> FiniteAlgebra {
    let positions: Vec<(usize, usize)> = (1..=n)
        .flat_map(|r| (r..=n).map(move |c| (r, c)))
        .collect();
    subalgebra_of_matrix_units(n, &positions, field).expect("upper triangle is closed")
}

/// The "staircase" span of the first row and last column of the `n×n`
/// matrix units: `{e_{1c}} ∪ {e_{rn}}`. Non-degenerate and idempotent for
/// every `n ≥ 2`, yet without one-sided local units — the running
/// small counterexample of the workbench.
pub fn staircase(n: usize, field: Field) -> FiniteAlgebra {
    let mut positions: Vec<(usize, usize)> = (1..=n).map(|c| (1, c)).collect();
    positions.extend((2..=n).map(|r| (r, n)));
    subalgebra_of_matrix_units(n, &positions, field).expect("staircase is closed")
}

/// The five-dimensional staircase inside the 3×3 matrix units, spanned by
/// `e₁₁, e₁₂, e₁₃, e₂₃, e₃₃`. See [`staircase`].
pub fn example_1_16(field: Field) -> FiniteAlgebra {
    staircase(3, field)
}

/// Functions on a set with `x` points: the span of the point indicators
/// `δ₁, …, δₓ` with `δᵢ·δⱼ = δ_{ij}·δᵢ`, carrying pointwise conjugation as
/// its involution. Commutative and unital (the constant function 1).
pub fn finite_functions(x: usize, field: Field) -> FiniteAlgebra {
    let labels = (1..=x).map(|i| format!("d{i}")).collect();
    let constants: Vec<_> = (0..x).map(|i| (i, i, i, field.one())).collect();
    let star = Matrix::identity(field, x);
    FiniteAlgebra::new(field, labels, &constants, Some(star)).expect("diagonal rule is closed")
}

/// The algebra with all products zero — maximally degenerate.
pub fn zero_product(dim: usize, field: Field) -> FiniteAlgebra {
    let labels = (1..=dim).map(|i| format!("z{i}")).collect();
    FiniteAlgebra::new(field, labels, &[], None).expect("empty table is associative")
}

/// Looks a named fixture up, for the command-line interface. Accepts
/// `example_1_16`, `matrix_units_N`, `finite_functions_N`,
/// `upper_triangular_N`, `staircase_N`, and `zero_product_N`.
pub fn by_name(name: &str, field: Field) -> Result<FiniteAlgebra> {
    if name == "example_1_16" {
        return Ok(example_1_16(field));
    }
    let parse_sized = |prefix: &str| -> Option<usize> {
        name.strip_prefix(prefix)?.parse().ok()
    };
    if let Some(n) = parse_sized("matrix_units_") {
        return Ok(matrix_units(n, field));
    }
    if let Some(n) = parse_sized("finite_functions_") {
        return Ok(finite_functions(n, field));
    }
    if let Some(n) = parse_sized("upper_triangular_") {
        return Ok(upper_triangular(n, field));
    }
    if let Some(n) = parse_sized("staircase_") {
        if n < 2 {
            return Err(Error::Parse("staircase needs n ≥ 2".into()));
        }
        return Ok(staircase(n, field));
    }
    if let Some(n) = parse_sized("zero_product_") {
        return Ok(zero_product(n, field));
    }
    Err(Error::Parse(format!(
        "unknown fixture '{name}'; known: example_1_16, matrix_units_N, \
         finite_functions_N, upper_triangular_N, staircase_N, zero_product_N"
    )))
}

/// The standard battery: named fixtures with a non-degenerate product, over
/// a spread of fields, that every sweep-style integration test runs over.
pub fn standard_battery() -> Vec<(String, FiniteAlgebra)> {
    let mut out: Vec<(String, FiniteAlgebra)> = Vec::new();
    let mut push = |name: &str, a: FiniteAlgebra| out.push((name.to_string(), a));

    for field in [
        Field::Q,
        Field::Fp(2),
        Field::Fp(3),
        Field::Fp(5),
        Field::Fp(7),
        Field::Qi,
    ] {
        push(&format!("example_1_16/{field}"), example_1_16(field));
    }
    for field in [Field::Q, Field::Fp(2), Field::Fp(5), Field::Qi] {
        push(&format!("matrix_units_2/{field}"), matrix_units(2, field));
    }
    push("matrix_units_2/GF:7", matrix_units(2, Field::Fp(7)));
    for field in [Field::Q, Field::Fp(2)] {
        push(&format!("matrix_units_3/{field}"), matrix_units(3, field));
    }
    push("finite_functions_1/Q", finite_functions(1, Field::Q));
    for field in [Field::Q, Field::Fp(2), Field::Qi] {
        push(
            &format!("finite_functions_3/{field}"),
            finite_functions(3, field),
        );
    }
    push("finite_functions_2/GF:7", finite_functions(2, Field::Fp(7)));
    push("finite_functions_4/GF:5", finite_functions(4, Field::Fp(5)));
    for field in [Field::Q, Field::Fp(3), Field::Qi] {
        push(
            &format!("upper_triangular_2/{field}"),
            upper_triangular(2, field),
        );
    }
    push("upper_triangular_3/Q", upper_triangular(3, Field::Q));
    push("staircase_4/Q", staircase(4, Field::Q));
    push("staircase_4/GF:2", staircase(4, Field::Fp(2)));
    push(
        "example_1_16+finite_functions_2/Q",
        example_1_16(Field::Q)
            .direct_sum(&finite_functions(2, Field::Q))
            .expect("same field"),
    );
    out
}

/// Small algebras over GF(2), kept to dimension ≤ 3 so that multiplier
/// pairs can be enumerated exhaustively (2^(2·d²·d) candidates at worst is
/// 2^18). Degenerate products are deliberately included: the brute-force
/// cross-checks run on the raw commutation equations, which make sense
/// without non-degeneracy.
pub fn oracle_battery_gf2() -> Vec<(String, FiniteAlgebra)> {
    oracle_battery(Field::Fp(2))
}

/// The same battery of small algebras over an arbitrary field. Exhaustive
/// enumeration is only feasible over small prime fields (and, for p > 2,
/// only in low dimension), so callers over larger fields should restrict
/// the battery by dimension.
pub fn oracle_battery(f: Field) -> Vec<(String, FiniteAlgebra)> {
    let sub = |n, ps: &[(usize, usize)]| {
        subalgebra_of_matrix_units(n, ps, f).expect("oracle sets are closed")
    };
    vec![
        ("nilpotent_line".into(), sub(2, &[(1, 2)])),
        ("idempotent_line".into(), sub(2, &[(1, 1)])),
        ("first_row".into(), sub(2, &[(1, 1), (1, 2)])),
        ("last_column".into(), sub(3, &[(1, 3), (2, 3), (3, 3)])),
        (
            "strict_upper".into(),
            sub(3, &[(1, 2), (1, 3), (2, 3)]),
        ),
        ("functions_2".into(), finite_functions(2, f)),
        ("functions_3".into(), finite_functions(3, f)),
        ("zero_product_2".into(), zero_product(2, f)),
    ]
}

/// The column module `kⁿ` over a matrix-unit subalgebra: each basis unit
/// `e_{rc}` acts on column vectors as the corresponding elementary matrix.
pub fn column_module(
    n: usize,
    positions: &[(usize, usize)],
    field: Field,
) -> Result<FiniteModule> {
    let algebra = subalgebra_of_matrix_units(n, positions, field)?;
    let set: BTreeSet<(usize, usize)> = positions.iter().copied().collect();
    let action = set
        .iter()
        .map(|&(r, c)| {
            Matrix::from_fn(field, n, n, |rr, cc| {
                if rr == r - 1 && cc == c - 1 {
                    field.one()
                } else {
                    field.zero()
                }
            })
        })
        .collect();
    FiniteModule::new(&algebra, n, action)
}

/// The named battery of left modules the sweep-style integration tests run
/// over: regular modules, column modules, dead (zero-action) summands, and
/// mixtures, over both unital algebras and the staircase.
pub fn module_battery() -> Vec<(String, FiniteModule)> {
    let full_2: Vec<(usize, usize)> = vec![(1, 1), (1, 2), (2, 1), (2, 2)];
    let stairs_3: Vec<(usize, usize)> = vec![(1, 1), (1, 2), (1, 3), (2, 3), (3, 3)];
    let upper_2: Vec<(usize, usize)> = vec![(1, 1), (1, 2), (2, 2)];
    let split_functions = {
        let a = finite_functions(2, Field::Q);
        // δ₁ acts as the projection onto the first coordinate, δ₂ as zero:
        // a unital summand next to a dead one.
        let action = vec![
            Matrix::from_fn(Field::Q, 2, 2, |r, c| {
                if r == 0 && c == 0 {
                    Field::Q.one()
                } else {
                    Field::Q.zero()
                }
            }),
            Matrix::zero(Field::Q, 2, 2),
        ];
        FiniteModule::new(&a, 2, action).expect("diagonal idempotents act as projections")
    };
    let columns_plus_dead = {
        let cols = column_module(2, &full_2, Field::Q).expect("full grid is closed");
        let dead = FiniteModule::zero_action(cols.algebra(), 1);
        cols.direct_sum(&dead).expect("same algebra")
    };
    vec![
        (
            "regular/example_1_16/Q".into(),
            FiniteModule::regular(&example_1_16(Field::Q)),
        ),
        (
            "regular/example_1_16/GF:2".into(),
            FiniteModule::regular(&example_1_16(Field::Fp(2))),
        ),
        (
            "regular/finite_functions_3/Q".into(),
            FiniteModule::regular(&finite_functions(3, Field::Q)),
        ),
        (
            "regular/matrix_units_2/GF:2".into(),
            FiniteModule::regular(&matrix_units(2, Field::Fp(2))),
        ),
        (
            "columns/matrix_units_2/Q".into(),
            column_module(2, &full_2, Field::Q).expect("full grid is closed"),
        ),
        (
            "columns/matrix_units_2/GF:5".into(),
            column_module(2, &full_2, Field::Fp(5)).expect("full grid is closed"),
        ),
        (
            "columns/staircase_3/Q".into(),
            column_module(3, &stairs_3, Field::Q).expect("staircase is closed"),
        ),
        (
            "columns/upper_triangular_2/Q".into(),
            column_module(2, &upper_2, Field::Q).expect("upper triangle is closed"),
        ),
        (
            "zero_action_2/finite_functions_2/Q".into(),
            FiniteModule::zero_action(&finite_functions(2, Field::Q), 2),
        ),
        ("split/finite_functions_2/Q".into(), split_functions),
        ("columns+dead/matrix_units_2/Q".into(), columns_plus_dead),
        (
            "regular/zero_product_2/Q".into(),
            FiniteModule::regular(&zero_product(2, Field::Q)),
        ),
        (
            "regular/upper_triangular_3/Q".into(),
            FiniteModule::regular(&upper_triangular(3, Field::Q)),
        ),
        (
            "regular/matrix_units_2/Qi".into(),
            FiniteModule::regular(&matrix_units(2, Field::Qi)),
        ),
        (
            "regular+dead/finite_functions_3/GF:3".into(),
            {
                let a = finite_functions(3, Field::Fp(3));
                FiniteModule::regular(&a)
                    .direct_sum(&FiniteModule::zero_action(&a, 1))
                    .expect("same algebra")
            },
        ),
    ]
}
