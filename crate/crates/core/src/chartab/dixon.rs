//! Dixon's method: the irreducible characters are read off from the common
//! eigenvectors of the class multiplication matrices, computed modulo a prime
//! p ≡ 1 (mod e), and lifted to Q(ζ_e) through eigenvalue multiplicities.

use num_bigint::BigInt;

use super::modp::{charpoly, inv_mod, is_prime, nullspace, pow_mod, primitive_root, roots};
use crate::cyclo::{Cyclotomic, RootSum};
use crate::error::{Error, Result};
use crate::grp::FiniteGroup;

/// Least prime p ≡ 1 (mod e) with p > 2·√|G|·√|G| = 2|G|. Degrees are at most
/// √|G| and eigenvalue multiplicities at most the degree, so both survive
/// reduction mod p unambiguously.
pub(crate) fn dixon_prime(order: usize, exponent: u32) -> u64 {
    let e = exponent as u64;
    let bound = 2 * order as u64;
    let mut p = bound.div_ceil(e) * e + 1;
    while !is_prime(p) {
        p += e;
    }
    p
}

/// Subspace of F_p^r held in column echelon form: `pivots[i]` is a row where
/// vector i has entry 1 and every other vector has entry 0.
struct Space {
    vecs: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Space {
    fn new(mut vecs: Vec<Vec<u64>>, p: u64) -> Space {
        let mut pivots = Vec::with_capacity(vecs.len());
        for i in 0..vecs.len() {
            let row = vecs[i]
                .iter()
                .position(|&x| x != 0)
                .expect("basis vectors are independent");
            let inv = inv_mod(vecs[i][row], p);
            for x in vecs[i].iter_mut() {
                *x = *x * inv % p;
            }
            for j in 0..vecs.len() {
                if j != i && vecs[j][row] != 0 {
                    let f = vecs[j][row];
                    let (src, dst) = if i < j {
                        let (a, b) = vecs.split_at_mut(j);
                        (&a[i], &mut b[0])
                    } else {
                        let (a, b) = vecs.split_at_mut(i);
                        (&b[0], &mut a[j])
                    };
                    for (d, s) in dst.iter_mut().zip(src) {
                        *d = (*d + p - f * s % p) % p;
                    }
                }
            }
            pivots.push(row);
        }
        Space { vecs, pivots }
    }
}

/// Values of the irreducible characters per class, unsorted.
pub(crate) fn irreducible_values(g: &FiniteGroup) -> Result<Vec<Vec<Cyclotomic>>> {
    let n = g.order();
    let cd = g.conjugacy();
    let r = cd.len();
    let e = g.exponent();
    let p = dixon_prime(n, e);

    // a[j][k][l] = #{x ∈ C_j : x⁻¹·z_l ∈ C_k}
    let mut a = vec![vec![vec![0u64; r]; r]; r];
    for l in 0..r {
        let z = cd.rep(l);
        for j in 0..r {
            for &x in cd.class(j) {
                let k = cd.class_of(g.mul(g.inv(x), z));
                a[j][k][l] += 1;
            }
        }
    }

    let id_class = cd.class_of(g.identity());
    let mut spaces = vec![Space::new(
        (0..r)
            .map(|i| {
                let mut v = vec![0; r];
                v[i] = 1;
                v
            })
            .collect(),
        p,
    )];
    for mj in &a {
        let mut next = Vec::with_capacity(spaces.len());
        for space in spaces {
            let d = space.vecs.len();
            if d == 1 {
                next.push(space);
                continue;
            }
            // M v_i written in the basis: coordinates sit at the pivot rows
            let images: Vec<Vec<u64>> = space
                .vecs
                .iter()
                .map(|v| {
                    (0..r)
                        .map(|k| (0..r).map(|l| mj[k][l] * v[l] % p).sum::<u64>() % p)
                        .collect()
                })
                .collect();
            let restricted: Vec<Vec<u64>> = (0..d)
                .map(|row| (0..d).map(|col| images[col][space.pivots[row]]).collect())
                .collect();
            let lambdas = roots(&charpoly(&restricted, p), p);
            if lambdas.len() == 1 {
                next.push(space);
                continue;
            }
            let mut total = 0;
            for lam in lambdas {
                let mut shifted = restricted.clone();
                for (i, row) in shifted.iter_mut().enumerate() {
                    row[i] = (row[i] + p - lam) % p;
                }
                let kernel = nullspace(&shifted, p);
                total += kernel.len();
                let vecs = kernel
                    .iter()
                    .map(|c| {
                        (0..r)
                            .map(|k| {
                                c.iter()
                                    .zip(&space.vecs)
                                    .map(|(ci, v)| ci * v[k] % p)
                                    .sum::<u64>()
                                    % p
                            })
                            .collect()
                    })
                    .collect();
                next.push(Space::new(vecs, p));
            }
            if total != d {
                return Err(Error::Internal(format!(
                    "class algebra is not split modulo {p}"
                )));
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(Error::Internal(format!(
            "found {} common eigenvectors for {r} classes",
            spaces.len()
        )));
    }

    let z = pow_mod(primitive_root(p), (p - 1) / e as u64, p);
    let isqrt = (1..=n).take_while(|d| d * d <= n).last().unwrap_or(1) as u64;
    let mut out = Vec::with_capacity(r);
    for space in spaces {
        let v = &space.vecs[0];
        if v[id_class] == 0 {
            return Err(Error::Internal("eigenvector vanishes at the identity".into()));
        }
        let s = inv_mod(v[id_class], p);
        let omega: Vec<u64> = v.iter().map(|x| x * s % p).collect();
        let norm = (0..r)
            .map(|l| omega[l] * omega[cd.inverse_class(l)] % p * inv_mod(cd.size(l) as u64, p) % p)
            .sum::<u64>()
            % p;
        let deg_sq = n as u64 % p * inv_mod(norm, p) % p;
        let deg = (1..=isqrt)
            .find(|d| d * d % p == deg_sq)
            .ok_or_else(|| Error::Internal("no admissible degree".into()))?;
        let chi: Vec<u64> = (0..r)
            .map(|l| deg * omega[l] % p * inv_mod(cd.size(l) as u64, p) % p)
            .collect();

        let mut values = Vec::with_capacity(r);
        for l in 0..r {
            let o = g.element_order(cd.rep(l)) as u64;
            let step = e as u64 / o;
            let o_inv = inv_mod(o % p, p);
            let mut sum = RootSum::new(o);
            let mut count = 0;
            for k in 0..o {
                let mut m = 0u64;
                for j in 0..o {
                    let val = chi[cd.power_class(l, j as i64)];
                    // z^(−step·j·k)
                    let w = pow_mod(z, (e as u64 - step * j * k % e as u64) % e as u64, p);
                    m = (m + val * w) % p;
                }
                m = m * o_inv % p;
                if m > deg {
                    return Err(Error::Internal(format!(
                        "eigenvalue multiplicity {m} exceeds degree {deg}"
                    )));
                }
                count += m;
                if m > 0 {
                    sum.add_root(k as i64, &BigInt::from(m));
                }
            }
            if count != deg {
                return Err(Error::Internal("eigenvalue multiplicities do not sum to the degree".into()));
            }
            values.push(sum.finish());
        }
        out.push(values);
    }
    Ok(out)
}
