//! Exact arithmetic in cyclotomic fields.
//!
//! Every [`Cyclotomic`] lives in the smallest field Q(ζ_n) that contains it, with
//! n never congruent to 2 mod 4. Coordinates are stored over the tensor product
//! of the prime-power power bases (see `layout`), which makes the reduction to
//! the minimal field a support test and equality a coefficient comparison. The
//! power-basis coordinates modulo Φ_n are available through
//! [`Cyclotomic::coeffs`] and drive the text format.

mod interval;
mod layout;
mod text;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use layout::{canonical_order, factor, mod_inverse, Layout};

pub(crate) use layout::euler_phi;

/// Default ceiling for sign refinement, in bits of working precision.
pub const DEFAULT_PRECISION_CAP: u32 = 4096;

/// An exact element of a cyclotomic field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

fn lcm(a: u64, b: u64) -> u64 {
    a / a.gcd(&b) * b
}

impl Cyclotomic {
    pub fn zero() -> Cyclotomic {
        Cyclotomic {
            order: 1,
            num: vec![BigInt::zero()],
            den: BigInt::one(),
        }
    }

    pub fn one() -> Cyclotomic {
        Cyclotomic::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Cyclotomic {
        Cyclotomic::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(r: BigRational) -> Cyclotomic {
        Cyclotomic {
            order: 1,
            num: vec![r.numer().clone()],
            den: r.denom().clone(),
        }
    }

    /// ζ_n^k with ζ_n = exp(2πi/n).
    pub fn root_of_unity(n: u64, k: i64) -> Cyclotomic {
        assert!(n >= 1, "root of unity of order 0");
        let mut b = RootSum::new(n);
        b.add_root(k, &BigInt::one());
        b.finish()
    }

    /// The primitive root ζ_n.
    pub fn zeta(n: u64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, 1)
    }

    /// Conductor-style order n: the element lies in Q(ζ_n) and in no smaller
    /// cyclotomic field.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.order == 1 && self.num[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.order == 1 && self.num[0].is_one() && self.den.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    pub fn to_integer(&self) -> Option<i64> {
        if self.is_rational() && self.den.is_one() {
            self.num[0].to_i64()
        } else {
            None
        }
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    fn layout(&self) -> Layout {
        Layout::new(self.order)
    }

    /// Builds a canonical element from coordinates over `Layout::new(order)`.
    fn from_parts(mut order: u64, mut num: Vec<BigInt>, mut den: BigInt) -> Cyclotomic {
        if num.iter().all(Zero::is_zero) {
            return Cyclotomic::zero();
        }
        'shrink: loop {
            let layout = Layout::new(order);
            for (t, axis) in layout.axes.iter().enumerate() {
                let fits = num.iter().enumerate().all(|(flat, c)| {
                    if c.is_zero() {
                        return true;
                    }
                    let i = layout.coord(flat, t);
                    if axis.e >= 2 {
                        i as u64 % axis.p == 0
                    } else {
                        i == 0
                    }
                });
                if !fits {
                    continue;
                }
                let mut new_order = order / axis.p;
                if new_order % 4 == 2 {
                    new_order /= 2;
                }
                let target = Layout::new(new_order);
                let keep = target.axes.iter().position(|a| a.p == axis.p);
                let mut out = vec![BigInt::zero(); target.len];
                for (flat, c) in num.iter_mut().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut idx = 0;
                    let mut s = 0;
                    for (u, _) in layout.axes.iter().enumerate() {
                        let i = layout.coord(flat, u);
                        if u == t {
                            if let Some(pos) = keep {
                                idx += (i / axis.p as usize) * target.strides[pos];
                                s += 1;
                            }
                        } else {
                            idx += i * target.strides[s];
                            s += 1;
                        }
                    }
                    out[idx] = std::mem::take(c);
                }
                num = out;
                order = new_order;
                continue 'shrink;
            }
            break;
        }
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for c in num.iter_mut() {
                *c = &*c / &g;
            }
            den = &den / &g;
        }
        Cyclotomic { order, num, den }
    }

    /// Coordinates over the layout of a multiple `target` of the order.
    fn embed(&self, target: &Layout) -> Vec<BigInt> {
        debug_assert_eq!(target.order % self.order, 0);
        if target.order == self.order {
            return self.num.clone();
        }
        let src = self.layout();
        let map: Vec<(usize, usize)> = src
            .axes
            .iter()
            .map(|a| {
                let pos = target.axes.iter().position(|b| b.p == a.p).unwrap();
                let scale = (target.axes[pos].q / a.q) as usize;
                (pos, scale)
            })
            .collect();
        let mut out = vec![BigInt::zero(); target.len];
        for (flat, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut idx = 0;
            for (t, &(pos, scale)) in map.iter().enumerate() {
                idx += src.coord(flat, t) * scale * target.strides[pos];
            }
            out[idx] = c.clone();
        }
        out
    }

    fn combine(&self, other: &Cyclotomic, sign: i32) -> Cyclotomic {
        let order = lcm(self.order, other.order);
        let layout = Layout::new(order);
        let a = self.embed(&layout);
        let b = other.embed(&layout);
        let den = (&self.den).lcm(&other.den);
        let fa = &den / &self.den;
        let fb = &den / &other.den;
        let num = a
            .iter()
            .zip(&b)
            .map(|(x, y)| {
                if sign > 0 {
                    x * &fa + y * &fb
                } else {
                    x * &fa - y * &fb
                }
            })
            .collect();
        Cyclotomic::from_parts(order, num, den)
    }

    fn product(&self, other: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || other.is_zero() {
            return Cyclotomic::zero();
        }
        if self.is_rational() || other.is_rational() {
            let (r, x) = if self.is_rational() {
                (self, other)
            } else {
                (other, self)
            };
            let num = x.num.iter().map(|c| c * &r.num[0]).collect();
            return Cyclotomic::from_parts(x.order, num, &x.den * &r.den);
        }
        let order = lcm(self.order, other.order);
        let layout = Layout::new(order);
        let a = self.embed(&layout);
        let b = other.embed(&layout);
        let num = convolve_small(&layout, &a, &b).unwrap_or_else(|| convolve_big(&layout, &a, &b));
        Cyclotomic::from_parts(order, num, &self.den * &other.den)
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return Err(Error::ZeroDivision);
        }
        if self.is_rational() {
            let r = BigRational::new(self.num[0].clone(), self.den.clone());
            return Ok(Cyclotomic::from_rational(r.recip()));
        }
        let conj = self.conj();
        let n = self * &conj;
        if let Some(r) = n.to_rational() {
            return Ok(conj.scale(&r.recip()));
        }
        // norm down one step of the tower Q(ζ_n) ⊃ Q(ζ_{n/p}) and recurse
        let layout = self.layout();
        let axis = layout.axes.last().unwrap();
        let rest = self.order / axis.q;
        let residues: Vec<u64> = if axis.e >= 2 {
            (1..axis.p).map(|j| 1 + j * (axis.q / axis.p)).collect()
        } else {
            (2..axis.p).collect()
        };
        let mut others = Cyclotomic::one();
        for r in residues {
            // k ≡ r (mod q), k ≡ 1 (mod n/q)
            let m = rest % axis.q;
            let t = ((r + axis.q - 1) % axis.q) * mod_inverse(m, axis.q) % axis.q;
            let k = 1 + rest * t;
            others = &others * &self.galois_act(k as i64)?;
        }
        let norm = self * &others;
        if norm.order >= self.order {
            return Err(Error::Internal(format!(
                "relative norm of {self} did not descend"
            )));
        }
        Ok(&others * &norm.inv()?)
    }

    pub fn checked_div(&self, other: &Cyclotomic) -> Result<Cyclotomic> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, r: &BigRational) -> Cyclotomic {
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        Cyclotomic::from_parts(self.order, num, &self.den * r.denom())
    }

    pub fn pow(&self, e: i64) -> Result<Cyclotomic> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Cyclotomic::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Applies the automorphism ζ_n ↦ ζ_n^k.
    pub fn galois_act(&self, k: i64) -> Result<Cyclotomic> {
        let n = self.order;
        if (k.rem_euclid(n as i64) as u64).gcd(&n) != 1 {
            return Err(Error::InvalidAutomorphism { k, order: n });
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let layout = self.layout();
        let mut out = vec![BigInt::zero(); layout.len];
        let mut exps = vec![0u64; layout.axes.len()];
        for (flat, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, axis) in layout.axes.iter().enumerate() {
                let km = k.rem_euclid(axis.q as i64) as u64;
                exps[t] = (layout.coord(flat, t) as u64 * km) % axis.q;
            }
            layout.accumulate(&exps, &mut out, |slot, s| {
                if s > 0 {
                    *slot += c
                } else {
                    *slot -= c
                }
            });
        }
        Ok(Cyclotomic::from_parts(n, out, self.den.clone()))
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Cyclotomic {
        self.galois_act(-1).expect("-1 is a unit modulo every n")
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Writes the element as Σ c_K ζ_n^K over the tensor basis.
    fn root_terms(&self) -> Vec<(u64, BigRational)> {
        let layout = self.layout();
        self.num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(flat, c)| {
                (
                    layout.root_exponent(flat),
                    BigRational::new(c.clone(), self.den.clone()),
                )
            })
            .collect()
    }

    /// Floating-point approximation (re, im), for diagnostics only.
    pub fn approx(&self) -> (f64, f64) {
        let n = self.order as f64;
        self.root_terms()
            .into_iter()
            .fold((0.0, 0.0), |(re, im), (k, c)| {
                let c = c.to_f64().unwrap_or(f64::NAN);
                let a = 2.0 * std::f64::consts::PI * k as f64 / n;
                (re + c * a.cos(), im + c * a.sin())
            })
    }

    /// Certified sign of a real element, refining rational interval enclosures
    /// of the cosines until zero is excluded or `cap_bits` is exceeded.
    pub fn sign_of_real(&self, cap_bits: u32) -> Result<Ordering> {
        if !self.is_real() {
            return Err(Error::NotReal(self.to_string()));
        }
        if self.is_zero() {
            return Ok(Ordering::Equal);
        }
        if let Some(r) = self.to_rational() {
            return Ok(r.cmp(&BigRational::zero()));
        }
        let terms = self.root_terms();
        let mut bits = 64u32;
        loop {
            let pi = interval::pi(bits + 8);
            let mut total = interval::Interval::zero();
            for (k, c) in &terms {
                let r = BigRational::new(BigInt::from(*k), BigInt::from(self.order));
                let cos = interval::cos_two_pi(&r, &pi, bits + 8);
                total = total.add(&cos.scale(c));
            }
            if total.lo.is_positive() {
                return Ok(Ordering::Greater);
            }
            if total.hi.is_negative() {
                return Ok(Ordering::Less);
            }
            if bits >= cap_bits {
                return Err(Error::PrecisionExhausted { bits });
            }
            bits = (bits * 2).min(cap_bits);
        }
    }

    /// Power-basis coordinates modulo Φ_n, length φ(n).
    pub fn coeffs(&self) -> Vec<BigRational> {
        let n = self.order;
        let phi = euler_phi(n) as usize;
        let terms = self.root_terms();
        let max_k = terms.iter().map(|(k, _)| *k).max().unwrap_or(0) as usize;
        let powers = text::reduced_powers(n, max_k);
        let mut out = vec![BigRational::zero(); phi];
        for (k, c) in terms {
            for (i, v) in powers[k as usize].iter().enumerate() {
                if !v.is_zero() {
                    out[i] += &c * BigRational::from_integer(v.clone());
                }
            }
        }
        out
    }

    /// Builds Σ c_i ζ_n^i from power-basis coordinates (any n ≥ 1).
    pub fn from_coeffs(n: u64, coeffs: &[BigRational]) -> Cyclotomic {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut b = RootSum::new(n);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let scaled = c.numer() * (&den / c.denom());
                b.add_root(i as i64, &scaled);
            }
        }
        b.finish().scale(&BigRational::new(BigInt::one(), den))
    }

    /// Total order used for deterministic sorting: by order, then by
    /// coordinates, larger rationals first.
    pub fn canonical_cmp(&self, other: &Cyclotomic) -> Ordering {
        self.order.cmp(&other.order).then_with(|| {
            for (a, b) in self.num.iter().zip(&other.num) {
                let l = a * &other.den;
                let r = b * &self.den;
                match r.cmp(&l) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

/// Accumulates sums of roots of unity Σ c·ζ_n^k with integer c.
pub struct RootSum {
    n: u64,
    layout: Layout,
    sign_axis: bool,
    mult: Vec<u64>,
    acc: Vec<BigInt>,
    exps: Vec<u64>,
}

impl RootSum {
    pub fn new(n: u64) -> RootSum {
        let canon = canonical_order(n);
        let layout = Layout::new(canon);
        let sign_axis = canon != n;
        let mult = layout
            .axes
            .iter()
            .map(|a| mod_inverse((n / a.q) % a.q, a.q))
            .collect();
        let exps = vec![0; layout.axes.len()];
        let acc = vec![BigInt::zero(); layout.len];
        RootSum {
            n,
            layout,
            sign_axis,
            mult,
            acc,
            exps,
        }
    }

    pub fn add_root(&mut self, k: i64, c: &BigInt) {
        let k = k.rem_euclid(self.n as i64) as u64;
        // ζ_n = (−1)^[2‖n] · ∏ ζ_{q_t}^{u_t}
        let negate = self.sign_axis && k % 2 == 1;
        for (t, axis) in self.layout.axes.iter().enumerate() {
            self.exps[t] = (k % axis.q) * self.mult[t] % axis.q;
        }
        self.layout.accumulate(&self.exps, &mut self.acc, |slot, s| {
            if (s > 0) != negate {
                *slot += c
            } else {
                *slot -= c
            }
        });
    }

    pub fn finish(self) -> Cyclotomic {
        Cyclotomic::from_parts(self.layout.order, self.acc, BigInt::one())
    }
}

// Multiplication: coordinates are convolved on an extended grid with
// 2φ(q_t) − 1 slots per axis and then reduced axis by axis.

trait Coef: Clone {
    fn nil() -> Self;
    fn is_nil(&self) -> bool;
    fn add_product(&mut self, a: &Self, b: &Self) -> bool;
    fn sub_in_place(&mut self, a: &Self) -> bool;
}

impl Coef for i128 {
    fn nil() -> Self {
        0
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn add_product(&mut self, a: &Self, b: &Self) -> bool {
        match a.checked_mul(*b).and_then(|p| self.checked_add(p)) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    fn sub_in_place(&mut self, a: &Self) -> bool {
        match self.checked_sub(*a) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
}

impl Coef for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_product(&mut self, a: &Self, b: &Self) -> bool {
        *self += a * b;
        true
    }
    fn sub_in_place(&mut self, a: &Self) -> bool {
        *self -= a;
        true
    }
}

fn convolve<T: Coef>(layout: &Layout, a: &[T], b: &[T]) -> Option<Vec<T>> {
    let axes = &layout.axes;
    let ext_dims: Vec<usize> = axes.iter().map(|x| 2 * x.phi - 1).collect();
    let mut ext_strides = vec![0; axes.len()];
    let mut ext_len = 1;
    for t in (0..axes.len()).rev() {
        ext_strides[t] = ext_len;
        ext_len *= ext_dims[t];
    }
    let ext_index = |flat: usize| -> usize {
        (0..axes.len())
            .map(|t| layout.coord(flat, t) * ext_strides[t])
            .sum()
    };
    let sa: Vec<(usize, &T)> = a
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_nil())
        .map(|(i, c)| (ext_index(i), c))
        .collect();
    let sb: Vec<(usize, &T)> = b
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_nil())
        .map(|(i, c)| (ext_index(i), c))
        .collect();
    let mut acc = vec![T::nil(); ext_len];
    for (ia, ca) in &sa {
        for (ib, cb) in &sb {
            if !acc[ia + ib].add_product(ca, cb) {
                return None;
            }
        }
    }
    for (t, axis) in axes.iter().enumerate() {
        let inner = ext_strides[t];
        let outer = ext_len / (inner * ext_dims[t]);
        for o in 0..outer {
            let base = o * ext_dims[t] * inner;
            for k in (axis.phi..ext_dims[t]).rev() {
                for i in 0..inner {
                    let pos = base + k * inner + i;
                    if acc[pos].is_nil() {
                        continue;
                    }
                    let v = std::mem::replace(&mut acc[pos], T::nil());
                    for j in 0..(axis.p as usize - 1) {
                        let tgt = base + (k - axis.phi + j * axis.step) * inner + i;
                        if !acc[tgt].sub_in_place(&v) {
                            return None;
                        }
                    }
                }
            }
        }
    }
    Some(
        (0..layout.len)
            .map(|flat| std::mem::replace(&mut acc[ext_index(flat)], T::nil()))
            .collect(),
    )
}

fn convolve_small(layout: &Layout, a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let small = |v: &[BigInt]| -> Option<Vec<i128>> {
        v.iter()
            .map(|c| c.to_i64().map(i128::from))
            .collect()
    };
    let out = convolve(layout, &small(a)?, &small(b)?)?;
    Some(out.into_iter().map(BigInt::from).collect())
}

fn convolve_big(layout: &Layout, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    convolve(layout, a, b).expect("big-integer convolution cannot overflow")
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render(self.order, &self.coeffs()))
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

impl std::str::FromStr for Cyclotomic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Cyclotomic> {
        let (n, coeffs) = text::parse(s)?;
        Ok(Cyclotomic::from_coeffs(n, &coeffs))
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_integer(n)
    }
}

impl From<BigRational> for Cyclotomic {
    fn from(r: BigRational) -> Self {
        Cyclotomic::from_rational(r)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, o: &Cyclotomic) -> Cyclotomic {
                $body(self, o)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, o: Cyclotomic) -> Cyclotomic {
                $body(&self, &o)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, o: &Cyclotomic) -> Cyclotomic {
                $body(&self, o)
            }
        }
        impl $tr<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, o: Cyclotomic) -> Cyclotomic {
                $body(self, &o)
            }
        }
    };
}

binop!(Add, add, |a: &Cyclotomic, b: &Cyclotomic| a.combine(b, 1));
binop!(Sub, sub, |a: &Cyclotomic, b: &Cyclotomic| a.combine(b, -1));
binop!(Mul, mul, |a: &Cyclotomic, b: &Cyclotomic| a.product(b));

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, o: &Cyclotomic) {
        *self = self.combine(o, 1);
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, o: &Cyclotomic) {
        *self = self.combine(o, -1);
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, o: &Cyclotomic) {
        *self = self.product(o);
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Cyclotomic {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for Cyclotomic {
    fn product<I: Iterator<Item = Cyclotomic>>(iter: I) -> Cyclotomic {
        iter.fold(Cyclotomic::one(), |a, b| a * b)
    }
}

/// Smallest prime factor list of n, exposed for callers that need to walk
/// Galois groups.
pub fn prime_factors(n: u64) -> Vec<u64> {
    factor(n).into_iter().map(|(p, _)| p).collect()
}

/// Units of Z/nZ in increasing order.
pub fn units_mod(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|k| k.gcd(&n) == 1).collect()
}
