//! Small exact integer linear algebra in dimension three.

use num::integer::gcd;
use num::rational::Ratio;

pub type V3 = [i64; 3];
pub type Q128 = Ratio<i128>;

pub fn dot(a: &V3, b: &V3) -> i128 {
    (0..3).map(|i| a[i] as i128 * b[i] as i128).sum()
}

pub fn cross(a: &V3, b: &V3) -> [i128; 3] {
    let (a0, a1, a2) = (a[0] as i128, a[1] as i128, a[2] as i128);
    let (b0, b1, b2) = (b[0] as i128, b[1] as i128, b[2] as i128);
    [a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0]
}

pub fn det(a: &V3, b: &V3, c: &V3) -> i128 {
    let x = cross(b, c);
    a[0] as i128 * x[0] + a[1] as i128 * x[1] + a[2] as i128 * x[2]
}

pub fn gcd3(v: &[i128; 3]) -> i128 {
    gcd(gcd(v[0], v[1]), v[2])
}

/// Divides out the content; the zero vector maps to itself.
pub fn primitive(v: [i128; 3]) -> V3 {
    let g = gcd3(&v);
    if g == 0 {
        return [0, 0, 0];
    }
    [(v[0] / g) as i64, (v[1] / g) as i64, (v[2] / g) as i64]
}

pub fn rank(vs: &[V3]) -> usize {
    let nonzero: Vec<&V3> = vs.iter().filter(|v| **v != [0, 0, 0]).collect();
    if nonzero.is_empty() {
        return 0;
    }
    for i in 0..nonzero.len() {
        for j in i + 1..nonzero.len() {
            if cross(nonzero[i], nonzero[j]) != [0, 0, 0] {
                for k in j + 1..nonzero.len() {
                    if det(nonzero[i], nonzero[j], nonzero[k]) != 0 {
                        return 3;
                    }
                }
                return 2;
            }
        }
    }
    1
}

/// Coefficients of `p` in the basis `(a, b, c)` (Cramer's rule).
pub fn coordinates(a: &V3, b: &V3, c: &V3, p: &V3) -> Option<[Q128; 3]> {
    let d = det(a, b, c);
    if d == 0 {
        return None;
    }
    Some([
        Q128::new(det(p, b, c), d),
        Q128::new(det(a, p, c), d),
        Q128::new(det(a, b, p), d),
    ])
}

pub fn proportional(a: &V3, b: &V3) -> bool {
    cross(a, b) == [0, 0, 0] && dot(a, b) > 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        assert_eq!(det(&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]), 1);
        assert_eq!(cross(&[1, 0, 0], &[0, 1, 0]), [0, 0, 1]);
        assert_eq!(primitive([4, -6, 8]), [2, -3, 4]);
        assert_eq!(rank(&[[1, 2, 3], [2, 4, 6]]), 1);
        assert_eq!(rank(&[[1, 0, 0], [0, 1, 0], [1, 1, 0]]), 2);
        assert_eq!(rank(&[[1, 0, 0], [0, 1, 0], [1, 1, 1]]), 3);
        let c = coordinates(&[1, 0, 0], &[1, 1, 0], &[1, 1, 1], &[3, 2, 1]).unwrap();
        assert_eq!(c, [Q128::from(1), Q128::from(1), Q128::from(1)]);
        assert!(proportional(&[1, 2, 3], &[2, 4, 6]));
        assert!(!proportional(&[1, 2, 3], &[-1, -2, -3]));
    }
}
