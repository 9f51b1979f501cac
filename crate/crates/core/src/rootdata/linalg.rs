use super::vector::Vector;
use crate::qnum::Scalar;
use num_traits::Zero;

/// Solve `sum_j x_j columns[j] = target` exactly over the rationals.
///
/// Returns `None` when the system is inconsistent (target outside the column
/// span).  The columns are assumed linearly independent, so a consistent
/// system has a unique solution.
pub fn solve_columns(columns: &[Vector], target: &Vector) -> Option<Vec<Scalar>> {
    let rows = target.dim();
    let cols = columns.len();
    debug_assert!(columns.iter().all(|c| c.dim() == rows));
    // augmented matrix [A | target], row-reduced with exact pivots
    let mut m: Vec<Vec<Scalar>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Scalar> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivot_rows = Vec::with_capacity(cols);
    let mut r0 = 0usize;
    for c in 0..cols {
        let Some(pr) = (r0..rows).find(|&r| !m[r][c].is_zero()) else {
            // columns independent => every column gets a pivot; if not, the
            // caller passed dependent columns, which we treat as a bug
            panic!("solve_columns: dependent columns");
        };
        m.swap(r0, pr);
        let inv = m[r0][c].recip();
        for v in m[r0].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..rows {
            if r != r0 && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for c2 in 0..=cols {
                    let delta = &f * &m[r0][c2];
                    m[r][c2] = &m[r][c2] - &delta;
                }
            }
        }
        pivot_rows.push(r0);
        r0 += 1;
    }
    // consistency: all non-pivot rows must have zero RHS
    for r in r0..rows {
        if !m[r][cols].is_zero() {
            return None;
        }
    }
    Some((0..cols).map(|c| m[pivot_rows[c]][cols].clone()).collect())
}

/// Inverse of a square rational matrix given by columns.  Panics on a
/// singular input (all call sites pass bases).
pub fn invert_columns(columns: &[Vector]) -> Vec<Vector> {
    let n = columns.len();
    debug_assert!(columns.iter().all(|c| c.dim() == n));
    (0..n)
        .map(|i| {
            let coords = solve_columns(columns, &Vector::unit(n, i))
                .expect("invert_columns: singular matrix");
            Vector(coords)
        })
        .collect()
}
