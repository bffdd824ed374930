//! Small exact linear algebra over the rationals: row reduction, rank,
//! and span-membership tests for the handful of dimensions (≤ 6) this
//! crate works in.

use crate::rat::Rational;

/// Reduced row echelon form. Returns the nonzero rows and their pivot
/// column indices, in order.
// index loops: the eliminations read m[row] while writing m[i]
#[allow(clippy::needless_range_loop)]
pub fn rref(rows: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    debug_assert!(m.iter().all(|r| r.len() == ncols));
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for c in col..ncols {
            let v = &m[row][c] * &inv;
            m[row][c] = v;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for c in col..ncols {
                    let v = &m[i][c] - &(&f * &m[row][c]);
                    m[i][c] = v;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    m.truncate(row);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    rref(rows).1.len()
}

/// Is `v` in the span of `basis`?
pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    if v.iter().all(Rational::is_zero) {
        return true;
    }
    let mut rows: Vec<Vec<Rational>> = basis.to_vec();
    let base_rank = rank(&rows);
    rows.push(v.to_vec());
    rank(&rows) == base_rank
}

/// Solve the 2×2 system a·x + b·y = e, c·x + d·y = f exactly.
pub fn solve2(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
    e: &Rational,
    f: &Rational,
) -> Option<(Rational, Rational)> {
    let det = a * d - b * c;
    if det.is_zero() {
        return None;
    }
    let x = &(e * d - b * f) / &det;
    let y = &(a * f - e * c) / &det;
    Some((x, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(vals: &[i64]) -> Vec<Rational> {
        vals.iter().map(|&v| Rational::int(v)).collect()
    }

    #[test]
    fn rref_and_rank() {
        let rows = vec![row(&[1, 2, 3]), row(&[2, 4, 6]), row(&[0, 1, 1])];
        let (m, pivots) = rref(&rows);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(m.len(), 2);
        assert_eq!(rank(&rows), 2);
    }

    #[test]
    fn span_membership() {
        let basis = vec![row(&[1, 0, 1]), row(&[0, 1, 0])];
        assert!(in_span(&basis, &row(&[2, 3, 2])));
        assert!(!in_span(&basis, &row(&[0, 0, 1])));
        assert!(in_span(&basis, &row(&[0, 0, 0])));
    }

    #[test]
    fn solve2_exact() {
        let (x, y) = solve2(
            &Rational::int(2),
            &Rational::int(1),
            &Rational::int(1),
            &Rational::int(-1),
            &Rational::int(4),
            &Rational::int(-1),
        )
        .unwrap();
        assert_eq!(x, Rational::int(1));
        assert_eq!(y, Rational::int(2));
        assert!(solve2(
            &Rational::int(1),
            &Rational::int(2),
            &Rational::int(2),
            &Rational::int(4),
            &Rational::int(0),
            &Rational::int(0)
        )
        .is_none());
    }
}
