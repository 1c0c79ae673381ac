use crate::scalar::Scalar;

/// Outcome of an exact linear solve A·x = b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSolution<T> {
    /// The particular solution with every free variable set to zero, when consistent.
    pub x: Option<Vec<T>>,
    pub rank: usize,
    pub augmented_rank: usize,
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<T: Scalar>(rows: &mut [Vec<T>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = T::one() / rows[r][c].clone();
        for v in rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..rows[i].len() {
                    let d = rows[r][j].clone() * f.clone();
                    rows[i][j] = rows[i][j].clone() - d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<T: Scalar>(a: &[Vec<T>], ncols: usize) -> usize {
    let mut m = a.to_vec();
    rref(&mut m, ncols).len()
}

pub fn solve<T: Scalar>(a: &[Vec<T>], b: &[T], ncols: usize) -> LinearSolution<T> {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let mut aug: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(row, v)| {
            let mut row = row.clone();
            row.push(v.clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    let inconsistent = pivots.last() == Some(&ncols);
    let rank = if inconsistent { pivots.len() - 1 } else { pivots.len() };
    if inconsistent {
        return LinearSolution { x: None, rank, augmented_rank: rank + 1 };
    }
    let mut x = vec![T::zero(); ncols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = aug[row][ncols].clone();
    }
    LinearSolution { x: Some(x), rank, augmented_rank: rank }
}
