//! Rational interval enclosures of π, cos and sin, used to certify signs of
//! real cyclotomic numbers. Endpoints are kept dyadic by outward rounding.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug)]
pub(crate) struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}

impl Interval {
    pub fn point(x: BigRational) -> Interval {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn zero() -> Interval {
        Interval::point(BigRational::zero())
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &o.hi,
            hi: &self.hi - &o.lo,
        }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    pub fn scale(&self, c: &BigRational) -> Interval {
        if c.is_negative() {
            Interval {
                lo: &self.hi * c,
                hi: &self.lo * c,
            }
        } else {
            Interval {
                lo: &self.lo * c,
                hi: &self.hi * c,
            }
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    /// Widens the interval to endpoints with denominator 2^bits.
    pub fn round_out(&self, bits: u32) -> Interval {
        let s = BigRational::from_integer(pow2(bits));
        let lo = (&self.lo * &s).floor() / &s;
        let hi = (&self.hi * &s).ceil() / &s;
        Interval { lo, hi }
    }

    pub fn widen(&self, r: &BigRational) -> Interval {
        Interval {
            lo: &self.lo - r,
            hi: &self.hi + r,
        }
    }
}

fn eps(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), pow2(bits))
}

/// atan(1/m) by its alternating series, truncated once terms fall below 2^-bits.
fn atan_inv(m: u64, bits: u32) -> Interval {
    let work = bits + 16;
    let m2 = BigRational::from_integer(BigInt::from(m * m));
    // power = 1/m^(2k+1), kept as a rounded interval
    let mut power = Interval::point(BigRational::new(BigInt::one(), BigInt::from(m))).round_out(work);
    let mut sum = Interval::zero();
    let tol = eps(bits + 4);
    let mut k: u64 = 0;
    loop {
        let denom = BigRational::from_integer(BigInt::from(2 * k + 1));
        let term = Interval {
            lo: &power.lo / &denom,
            hi: &power.hi / &denom,
        }
        .round_out(work);
        if term.hi < tol {
            return sum.widen(&term.hi).round_out(work);
        }
        sum = if k.is_even() { sum.add(&term) } else { sum.sub(&term) };
        power = Interval {
            lo: &power.lo / &m2,
            hi: &power.hi / &m2,
        }
        .round_out(work);
        k += 1;
    }
}

/// Enclosure of π with width about 2^-bits (Machin's formula).
pub(crate) fn pi(bits: u32) -> Interval {
    let a = atan_inv(5, bits + 4).scale(&BigRational::from_integer(16.into()));
    let b = atan_inv(239, bits + 4).scale(&BigRational::from_integer(4.into()));
    a.sub(&b).round_out(bits + 8)
}

/// Taylor enclosure of cos(x) (`odd = false`) or sin(x) (`odd = true`) at a
/// rational point 0 ≤ x ≤ 1, where the series is alternating with
/// decreasing terms.
fn taylor_point(x: &BigRational, odd: bool, bits: u32) -> Interval {
    let work = bits + 16;
    let x2 = Interval::point(x * x).round_out(work);
    let mut term = if odd {
        Interval::point(x.clone()).round_out(work)
    } else {
        Interval::point(BigRational::one())
    };
    let mut sum = Interval::zero();
    let tol = eps(bits + 4);
    let mut j: u64 = 0;
    loop {
        if term.hi < tol {
            return sum.widen(&term.hi).round_out(work);
        }
        sum = if j.is_even() { sum.add(&term) } else { sum.sub(&term) };
        j += 1;
        let d = if odd {
            (2 * j) * (2 * j + 1)
        } else {
            (2 * j - 1) * (2 * j)
        };
        let d = BigRational::from_integer(BigInt::from(d));
        let t = term.mul(&x2);
        term = Interval {
            lo: &t.lo / &d,
            hi: &t.hi / &d,
        }
        .round_out(work);
    }
}

/// Enclosure of cos(2π·r) for a rational r.
pub(crate) fn cos_two_pi(r: &BigRational, pi: &Interval, bits: u32) -> Interval {
    let one = BigRational::one();
    let half = BigRational::new(1.into(), 2.into());
    let quarter = BigRational::new(1.into(), 4.into());
    let eighth = BigRational::new(1.into(), 8.into());

    let mut r = r - r.floor();
    if r > half {
        r = &one - &r;
    }
    let mut negate = false;
    if r > quarter {
        r = &half - &r;
        negate = true;
    }
    let use_sin = r > eighth;
    if use_sin {
        r = &quarter - &r;
    }
    // θ = 2πr ∈ [0, π/4]; cos is decreasing and sin increasing there
    let two_r = &r * BigRational::from_integer(2.into());
    let theta = pi.scale(&two_r).round_out(bits + 16);
    let out = if use_sin {
        let lo = taylor_point(&theta.lo, true, bits);
        let hi = taylor_point(&theta.hi, true, bits);
        Interval { lo: lo.lo, hi: hi.hi }
    } else {
        let lo = taylor_point(&theta.hi, false, bits);
        let hi = taylor_point(&theta.lo, false, bits);
        Interval { lo: lo.lo, hi: hi.hi }
    };
    if negate {
        out.neg()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn mid(i: &Interval) -> f64 {
        ((&i.lo + &i.hi) / BigRational::from_integer(2.into()))
            .to_f64()
            .unwrap()
    }

    #[test]
    fn pi_is_enclosed() {
        let p = pi(128);
        assert!(p.lo.to_f64().unwrap() <= std::f64::consts::PI);
        assert!(p.hi.to_f64().unwrap() >= std::f64::consts::PI);
        assert!((&p.hi - &p.lo) < eps(120));
    }

    #[test]
    fn cosines_match_floating_point() {
        let p = pi(96);
        for n in 1..30i64 {
            for k in 0..n {
                let r = BigRational::new(k.into(), n.into());
                let c = cos_two_pi(&r, &p, 80);
                let expect = (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos();
                assert!((mid(&c) - expect).abs() < 1e-12, "k={k} n={n}");
                assert!(c.lo <= c.hi);
            }
        }
    }
}
