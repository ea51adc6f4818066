//! Coordinate layout of Q(ζ_n) as a tensor product of prime-power cyclotomic
//! fields.
//!
//! For canonical n = ∏ q_t (each q_t = p^e an odd prime power or a power of two
//! at least 4) the field Q(ζ_n) is the tensor product of the Q(ζ_{q_t}), and each
//! factor carries its power basis 1, ζ_q, …, ζ_q^{φ(q)−1}. A basis element of
//! Q(ζ_n) is therefore a product ∏ ζ_{q_t}^{i_t} with 0 ≤ i_t < φ(q_t). This is an
//! integral basis, and membership in a cyclotomic subfield is a support
//! condition on one axis.

use num_integer::Integer;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Axis {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    pub phi: usize,
    /// p^(e-1)
    pub step: usize,
}

impl Axis {
    fn new(p: u64, e: u32) -> Axis {
        let q = p.pow(e);
        let step = p.pow(e - 1) as usize;
        Axis {
            p,
            e,
            q,
            phi: (p as usize - 1) * step,
            step,
        }
    }

    /// Writes ζ_q^x in the power basis. Powers at or above φ(q) are rewritten
    /// with Φ_q(ζ) = Σ_{j<p} ζ^{j·step} = 0.
    pub fn expand(&self, x: u64, out: &mut Vec<(usize, i64)>) {
        out.clear();
        let x = (x % self.q) as usize;
        if x < self.phi {
            out.push((x, 1));
        } else {
            let base = x - self.phi;
            for j in 0..(self.p as usize - 1) {
                out.push((base + j * self.step, -1));
            }
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Layout {
    pub order: u64,
    pub axes: Vec<Axis>,
    pub strides: Vec<usize>,
    pub len: usize,
}

pub(crate) fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn euler_phi(n: u64) -> u64 {
    factor(n)
        .into_iter()
        .map(|(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

/// Q(ζ_{2m}) = Q(ζ_m) for odd m, so orders ≡ 2 (mod 4) are halved.
pub(crate) fn canonical_order(n: u64) -> u64 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

pub(crate) fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let e = (a as i64).extended_gcd(&(m as i64));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m as i64) as u64
}

impl Layout {
    pub fn new(order: u64) -> Layout {
        debug_assert!(order >= 1 && order % 4 != 2);
        let axes: Vec<Axis> = factor(order)
            .into_iter()
            .map(|(p, e)| Axis::new(p, e))
            .collect();
        let mut strides = vec![0; axes.len()];
        let mut len = 1usize;
        for t in (0..axes.len()).rev() {
            strides[t] = len;
            len *= axes[t].phi;
        }
        Layout {
            order,
            axes,
            strides,
            len,
        }
    }

    pub fn coord(&self, flat: usize, t: usize) -> usize {
        (flat / self.strides[t]) % self.axes[t].phi
    }

    /// Exponent K with ∏ ζ_{q_t}^{i_t} = ζ_n^K.
    pub fn root_exponent(&self, flat: usize) -> u64 {
        let mut k = 0u64;
        for (t, axis) in self.axes.iter().enumerate() {
            let i = self.coord(flat, t) as u64;
            k = (k + i * (self.order / axis.q)) % self.order;
        }
        k
    }

    #[cfg(test)]
    /// CRT multipliers u_t with ζ_n = ∏ ζ_{q_t}^{u_t}.
    pub fn crt_multipliers(&self) -> Vec<u64> {
        self.axes
            .iter()
            .map(|a| mod_inverse((self.order / a.q) % a.q, a.q))
            .collect()
    }

    /// Adds `coeff · ∏ ζ_{q_t}^{x_t}` into a dense accumulator.
    pub fn accumulate<T, F>(&self, exps: &[u64], acc: &mut [T], mut add: F)
    where
        F: FnMut(&mut T, i64),
    {
        let mut parts: Vec<Vec<(usize, i64)>> = Vec::with_capacity(self.axes.len());
        let mut buf = Vec::new();
        for (axis, &x) in self.axes.iter().zip(exps) {
            axis.expand(x, &mut buf);
            parts.push(buf.clone());
        }
        // odometer over the cartesian product of the per-axis expansions
        let mut pos = vec![0usize; parts.len()];
        loop {
            let mut flat = 0;
            let mut sign = 1i64;
            for (t, part) in parts.iter().enumerate() {
                let (i, s) = part[pos[t]];
                flat += i * self.strides[t];
                sign *= s;
            }
            add(&mut acc[flat], sign);
            let mut t = parts.len();
            loop {
                if t == 0 {
                    return;
                }
                t -= 1;
                pos[t] += 1;
                if pos[t] < parts[t].len() {
                    break;
                }
                pos[t] = 0;
            }
        }
    }
}
