use super::FreeMatrix;
use crate::ring::Poly;

/// Rank over the fraction field of `R`, by fraction-free (Bareiss)
/// elimination. Every division is exact.
pub fn generic_rank(m: &FreeMatrix) -> usize {
    let mut a = m.rows();
    let nrows = a.len();
    let ncols = m.ncols();
    let mut prev = Poly::one(m.ring());
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        let (top, below) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below {
            let factor = row[col].clone();
            for (entry, above) in row.iter_mut().zip(pivot_row).skip(col + 1) {
                let num = &(&pivot * &*entry) - &(&factor * above);
                *entry = num.exact_div(&prev).expect("Bareiss quotients are exact");
            }
            row[col] = Poly::zero(m.ring());
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_poly, PolyRing};

    fn mat(rows: &[&[&str]]) -> FreeMatrix {
        let r = PolyRing::rational(&["x", "y", "z"]);
        let ncols = rows.first().map_or(0, |row| row.len());
        FreeMatrix::from_rows(
            &r,
            ncols,
            rows.iter().map(|row| row.iter().map(|s| parse_poly(s, &r).unwrap()).collect()).collect(),
        )
    }

    #[test]
    fn ranks() {
        assert_eq!(generic_rank(&mat(&[&["y", "z"]])), 1);
        assert_eq!(generic_rank(&mat(&[&["0", "0"]])), 0);
        // rows proportional over the fraction field
        assert_eq!(generic_rank(&mat(&[&["x", "y"], &["x*z", "y*z"]])), 1);
        assert_eq!(generic_rank(&mat(&[&["x", "y", "z"], &["y", "z", "x"], &["z", "x", "y"]])), 3);
        // a skipped column before the second pivot
        assert_eq!(generic_rank(&mat(&[&["x", "y", "0"], &["x^2", "x*y", "z"]])), 2);
        // Koszul d2 for (x,y,z): 3x3 of rank 2
        assert_eq!(
            generic_rank(&mat(&[&["-y", "-z", "0"], &["x", "0", "-z"], &["0", "x", "y"]])),
            2
        );
    }
}
