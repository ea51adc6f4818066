//! Text form `c0 + c1*z + c2*z^2; order=n` over the power basis of Q(ζ_n).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::layout::{euler_phi, factor};
use crate::error::{Error, Result};

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
pub(crate) fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    // Φ_n(x) = ∏_{d|n} (x^d − 1)^{μ(n/d)}; multiply the numerator factors,
    // then divide out the denominator factors exactly.
    let primes: Vec<u64> = factor(n).into_iter().map(|(p, _)| p).collect();
    let mut num: Vec<BigInt> = vec![BigInt::one()];
    let mut dens: Vec<u64> = Vec::new();
    for mask in 0u32..(1 << primes.len()) {
        let mut d = n;
        for (i, p) in primes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                d /= p;
            }
        }
        if mask.count_ones() % 2 == 0 {
            num = mul_binomial(&num, d as usize);
        } else {
            dens.push(d);
        }
    }
    for d in dens {
        num = div_binomial(&num, d as usize);
    }
    num
}

fn mul_binomial(p: &[BigInt], d: usize) -> Vec<BigInt> {
    // p · (x^d − 1)
    let mut out = vec![BigInt::zero(); p.len() + d];
    for (i, c) in p.iter().enumerate() {
        out[i + d] += c;
        out[i] -= c;
    }
    out
}

fn div_binomial(p: &[BigInt], d: usize) -> Vec<BigInt> {
    // exact quotient p / (x^d − 1), from the top coefficient down
    let mut rem = p.to_vec();
    let deg = p.len() - 1;
    let mut q = vec![BigInt::zero(); deg - d + 1];
    for i in (d..=deg).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        q[i - d] = c.clone();
        rem[i] -= &c;
        rem[i - d] += &c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

/// x^k mod Φ_n for k = 0..=max_k.
pub(crate) fn reduced_powers(n: u64, max_k: usize) -> Vec<Vec<BigInt>> {
    let phi = euler_phi(n) as usize;
    let poly = cyclotomic_poly(n);
    let mut out = Vec::with_capacity(max_k + 1);
    let mut cur = vec![BigInt::zero(); phi];
    cur[0] = BigInt::one();
    for _ in 0..=max_k {
        out.push(cur.clone());
        // multiply by x
        let top = cur[phi - 1].clone();
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1].clone();
        }
        cur[0] = BigInt::zero();
        if !top.is_zero() {
            for i in 0..phi {
                cur[i] -= &top * &poly[i];
            }
        }
    }
    out
}

pub(crate) fn render(n: u64, coeffs: &[BigRational]) -> String {
    let mut s = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let monomial = match i {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{i}"),
        };
        if i == 0 {
            s.push_str(&mag.to_string());
        } else if mag.is_one() {
            s.push_str(&monomial);
        } else {
            s.push_str(&format!("{mag}*{monomial}"));
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    format!("{s}; order={n}")
}

pub(crate) fn parse(input: &str) -> Result<(u64, Vec<BigRational>)> {
    let bad = |m: &str| Error::Parse(format!("{m} in '{input}'"));
    let (expr, order) = input
        .split_once(';')
        .ok_or_else(|| bad("missing '; order=n'"))?;
    let order = order.trim();
    let n: u64 = order
        .strip_prefix("order=")
        .ok_or_else(|| bad("missing 'order='"))?
        .trim()
        .parse()
        .map_err(|_| bad("bad order"))?;
    if n == 0 {
        return Err(bad("order must be positive"));
    }
    let expr: Vec<char> = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if expr.is_empty() {
        return Err(bad("empty expression"));
    }
    let mut terms: Vec<(usize, BigRational)> = Vec::new();
    let mut pos = 0;
    let number = |pos: &mut usize| -> Option<BigInt> {
        let start = *pos;
        while *pos < expr.len() && expr[*pos].is_ascii_digit() {
            *pos += 1;
        }
        (start < *pos).then(|| expr[start..*pos].iter().collect::<String>().parse().unwrap())
    };
    while pos < expr.len() {
        let mut neg = false;
        if expr[pos] == '+' || expr[pos] == '-' {
            neg = expr[pos] == '-';
            pos += 1;
        } else if !terms.is_empty() {
            return Err(bad("expected '+' or '-'"));
        }
        let mut coeff: Option<BigRational> = None;
        if let Some(p) = number(&mut pos) {
            let mut c = BigRational::from_integer(p);
            if pos < expr.len() && expr[pos] == '/' {
                pos += 1;
                let q = number(&mut pos).ok_or_else(|| bad("bad denominator"))?;
                if q.is_zero() {
                    return Err(bad("zero denominator"));
                }
                c /= BigRational::from_integer(q);
            }
            coeff = Some(c);
            if pos < expr.len() && expr[pos] == '*' {
                pos += 1;
                if pos >= expr.len() || expr[pos] != 'z' {
                    return Err(bad("expected 'z' after '*'"));
                }
            }
        }
        let mut exp = 0usize;
        if pos < expr.len() && expr[pos] == 'z' {
            pos += 1;
            exp = 1;
            if pos < expr.len() && expr[pos] == '^' {
                pos += 1;
                let e = number(&mut pos).ok_or_else(|| bad("bad exponent"))?;
                exp = e.try_into().map_err(|_| bad("exponent too large"))?;
            }
        } else if coeff.is_none() {
            return Err(bad("expected a term"));
        }
        let mut c = coeff.unwrap_or_else(BigRational::one);
        if neg {
            c = -c;
        }
        terms.push((exp, c));
    }
    let len = terms.iter().map(|t| t.0 + 1).max().unwrap_or(1);
    let mut coeffs = vec![BigRational::zero(); len];
    for (e, c) in terms {
        coeffs[e] += c;
    }
    Ok((n, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_poly(105)[7], BigInt::from(-2));
    }

    #[test]
    fn parse_errors() {
        assert!(parse("1 + z").is_err());
        assert!(parse("1 + ; order=3").is_err());
        assert!(parse("1/0; order=3").is_err());
        assert!(parse("z; order=0").is_err());
    }
}
