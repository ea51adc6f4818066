//! Small dense linear algebra over F_p, enough to split the class algebra.

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Least generator of (Z/p)^×.
pub(crate) fn primitive_root(p: u64) -> u64 {
    let qs = crate::cyclo::prime_factors(p - 1);
    (2..p)
        .find(|&g| qs.iter().all(|q| pow_mod(g, (p - 1) / q, p) != 1))
        .unwrap_or(1)
}

/// Basis of {v : A v = 0} for a square matrix over F_p.
pub(crate) fn nullspace(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<u64>> = a.to_vec();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for k in 0..cols {
                    m[i][k] = (m[i][k] + p - f * m[r][k] % p) % p;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; cols];
            v[f] = 1;
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (p - m[i][f]) % p;
            }
            v
        })
        .collect()
}

/// Characteristic polynomial, constant term first, via reduction to
/// Hessenberg form.
pub(crate) fn charpoly(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h: Vec<Vec<u64>> = a.to_vec();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = inv_mod(h[m][m - 1], p);
        for i in (m + 1)..n {
            let u = h[i][m - 1] * inv % p;
            if u == 0 {
                continue;
            }
            for k in 0..n {
                h[i][k] = (h[i][k] + p - u * h[m][k] % p) % p;
            }
            for row in h.iter_mut() {
                row[m] = (row[m] + u * row[i]) % p;
            }
        }
    }
    // p_m = (x − h_mm) p_{m−1} − Σ_i (∏ subdiagonal) h_{m−i,m} p_{m−i−1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut cur = vec![0u64; m + 1];
        for (k, &c) in prev.iter().enumerate() {
            cur[k + 1] = (cur[k + 1] + c) % p;
            cur[k] = (cur[k] + p - c * h[m - 1][m - 1] % p) % p;
        }
        let mut t = 1u64;
        for i in 1..m {
            t = t * h[m - i][m - i - 1] % p;
            let coef = t * h[m - i - 1][m - 1] % p;
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[m - i - 1].iter().enumerate() {
                cur[k] = (cur[k] + p - coef * c % p) % p;
            }
        }
        polys.push(cur);
    }
    polys.pop().unwrap()
}

pub(crate) fn roots(poly: &[u64], p: u64) -> Vec<u64> {
    (0..p)
        .filter(|&x| poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % p) == 0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_roots() {
        assert!(is_prime(97) && !is_prime(91));
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(41), 6);
    }

    #[test]
    fn charpoly_matches_determinant_expansion() {
        let p = 101;
        // [[1,2,0],[3,4,5],[0,6,7]]: x^3 − 12x^2 + 3x + 44
        let a = vec![vec![1, 2, 0], vec![3, 4, 5], vec![0, 6, 7]];
        assert_eq!(charpoly(&a, p), vec![44, 3, 101 - 12, 1]);
        let b = vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]];
        // permutation matrix of a 3-cycle: x^3 − 1
        assert_eq!(charpoly(&b, p), vec![100, 0, 0, 1]);
    }

    #[test]
    fn nullspace_dimension() {
        let p = 7;
        let a = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 0, 0]];
        let ns = nullspace(&a, p);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &a {
                assert_eq!(row.iter().zip(&v).map(|(x, y)| x * y).sum::<u64>() % p, 0);
            }
        }
    }
}
