//! Dense primal simplex in exact rational arithmetic.
//!
//! Solves max c.y subject to A y <= b, y >= 0 with b >= 0, so the slack
//! basis is feasible and no phase-one is needed. Bland's rule makes the pivot
//! sequence deterministic and cycle-free. Everything is BigRational; there
//! are no tolerances.

use num::{BigRational, Signed, Zero};

#[derive(Clone, Debug)]
pub struct SimplexSolution {
    /// Optimal objective value.
    pub objective: BigRational,
    /// Optimal values of the structural variables y.
    pub primal: Vec<BigRational>,
    /// Dual values, one per constraint row (shadow prices).
    pub duals: Vec<BigRational>,
}

/// Maximizes `c.y` over `A y <= b, y >= 0`.
///
/// Requires every entry of `b` to be nonnegative and the LP to be bounded;
/// both hold for the set-cover duals this crate solves. Panics otherwise,
/// since that would be a caller bug rather than a data-dependent condition.
pub fn maximize(c: &[BigRational], a: &[Vec<BigRational>], b: &[BigRational]) -> SimplexSolution {
    let nv = c.len();
    let m = a.len();
    assert_eq!(b.len(), m);
    assert!(b.iter().all(|x| !x.is_negative()), "rhs must be nonnegative");

    // tableau rows: [A | I | b]; objective row holds reduced costs (z - c)
    let width = nv + m + 1;
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for i in 0..m {
        assert_eq!(a[i].len(), nv);
        let mut row = Vec::with_capacity(width);
        row.extend(a[i].iter().cloned());
        for j in 0..m {
            row.push(if i == j { BigRational::from_integer(1.into()) } else { BigRational::zero() });
        }
        row.push(b[i].clone());
        rows.push(row);
    }
    let mut obj: Vec<BigRational> = Vec::with_capacity(width);
    obj.extend(c.iter().map(|x| -x.clone()));
    obj.extend(std::iter::repeat_n(BigRational::zero(), m + 1));

    let mut basis: Vec<usize> = (nv..nv + m).collect();

    // Bland: entering column = smallest index with negative reduced cost
    while let Some(enter) = (0..nv + m).find(|&j| obj[j].is_negative()) {
        // ratio test; Bland ties by smallest basis variable
        let mut leave: Option<usize> = None;
        let mut best: Option<BigRational> = None;
        for i in 0..m {
            if rows[i][enter].is_positive() {
                let ratio = &rows[i][width - 1] / &rows[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let leave = leave.expect("LP is bounded by construction");

        // pivot
        let pivot = rows[leave][enter].clone();
        for x in rows[leave].iter_mut() {
            *x /= &pivot;
        }
        let pivot_row = rows[leave].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == leave || row[enter].is_zero() {
                continue;
            }
            let factor = row[enter].clone();
            for (x, p) in row.iter_mut().zip(pivot_row.iter()) {
                *x -= &factor * p;
            }
        }
        if !obj[enter].is_zero() {
            let factor = obj[enter].clone();
            for (x, p) in obj.iter_mut().zip(pivot_row.iter()) {
                *x -= &factor * p;
            }
        }
        basis[leave] = enter;
    }

    let mut primal = vec![BigRational::zero(); nv];
    for (i, &var) in basis.iter().enumerate() {
        if var < nv {
            primal[var] = rows[i][width - 1].clone();
        }
    }
    // dual of constraint i = reduced cost of its slack column at optimality
    let duals: Vec<BigRational> = (0..m).map(|i| obj[nv + i].clone()).collect();
    SimplexSolution { objective: obj[width - 1].clone(), primal, duals }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rational, rational_from};

    fn r(p: i64, q: i64) -> BigRational {
        rational(p, q)
    }

    #[test]
    fn textbook_two_variable_lp() {
        // max 3x + 5y st x <= 4, 2y <= 12, 3x + 2y <= 18 -> optimum 36 at (2,6)
        let c = vec![r(3, 1), r(5, 1)];
        let a = vec![
            vec![r(1, 1), r(0, 1)],
            vec![r(0, 1), r(2, 1)],
            vec![r(3, 1), r(2, 1)],
        ];
        let b = vec![r(4, 1), r(12, 1), r(18, 1)];
        let sol = maximize(&c, &a, &b);
        assert_eq!(sol.objective, r(36, 1));
        assert_eq!(sol.primal, vec![r(2, 1), r(6, 1)]);
        // duals: y1 = 0, y2 = 3/2, y3 = 1
        assert_eq!(sol.duals, vec![r(0, 1), r(3, 2), r(1, 1)]);
    }

    #[test]
    fn fractional_vertex_packing_of_c5() {
        // max sum y_v over the 5 maximal independent sets of C_5 (the
        // nonadjacent pairs): optimum 5/2 with y = 1/2 everywhere
        let n = 5;
        let sets = [(0, 2), (1, 3), (2, 4), (3, 0), (4, 1)];
        let c = vec![rational_from(1); n];
        let a: Vec<Vec<BigRational>> = sets
            .iter()
            .map(|&(u, v)| {
                (0..n)
                    .map(|j| if j == u || j == v { r(1, 1) } else { r(0, 1) })
                    .collect()
            })
            .collect();
        let b = vec![rational_from(1); sets.len()];
        let sol = maximize(&c, &a, &b);
        assert_eq!(sol.objective, r(5, 2));
        // covering weights on the sets also sum to 5/2 by duality
        let total: BigRational = sol.duals.iter().sum();
        assert_eq!(total, r(5, 2));
    }

    #[test]
    fn degenerate_rhs_zero() {
        // max y st y <= 0 -> 0
        let sol = maximize(&[r(1, 1)], &[vec![r(1, 1)]], &[r(0, 1)]);
        assert_eq!(sol.objective, r(0, 1));
    }
}
