//! Finite fields, Gauss sums, and the tame abelian Galois–Gauss and
//! Galois–Jacobi sums built from them.
//!
//! Convention: τ(F, χ) = 1 for unramified χ. For ramified χ the restriction
//! to Γ₀ ≅ μ_e is pulled back to the residue field along the power-residue
//! map x ↦ x^{(q−1)/e}, and τ is the Gauss sum of that multiplicative
//! character against the trace character x ↦ ζ_p^{Tr(x)}.

use num_bigint::BigInt;

use crate::center::{twist_endo, CentralElement};
use crate::chartab::modp::is_prime;
use crate::chartab::ClassFunction;
use crate::cyclo::{prime_factors, Cyclotomic, RootSum};
use crate::error::{Error, Result};
use crate::localext::LocalExtensionData;

/// F_q = F_p[x]/(m(x)). Elements are encoded as integers Σ c_i p^i with the
/// constant coefficient least significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteFieldData {
    p: u64,
    f: u32,
    modulus: Vec<u64>,
    generator: u64,
}

impl FiniteFieldData {
    pub fn new(p: u64, f: u32) -> Result<FiniteFieldData> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if f == 0 {
            return Err(Error::InvalidField("degree must be positive".into()));
        }
        let q = p
            .checked_pow(f)
            .filter(|&q| q <= 1 << 20)
            .ok_or_else(|| Error::InvalidField(format!("{p}^{f} is too large")))?;
        let modulus = (0..q)
            .map(|low| {
                let mut m = digits(low, p, f as usize);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .expect("irreducible polynomials exist in every degree");
        let mut field = FiniteFieldData {
            p,
            f,
            modulus,
            generator: 0,
        };
        field.generator = (1..q)
            .find(|&x| field.multiplicative_order(x) == q - 1)
            .expect("the multiplicative group is cyclic");
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.f)
    }

    /// Coefficients of the modulus, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let f = self.f as usize;
        let (a, b) = (digits(a, self.p, f), digits(b, self.p, f));
        let mut prod = vec![0u64; 2 * f];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        encode(&reduce(prod, &self.modulus, self.p), self.p)
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        r
    }

    fn multiplicative_order(&self, x: u64) -> u64 {
        let n = self.size() - 1;
        let mut order = n;
        for r in prime_factors(n) {
            while order % r == 0 && self.pow(x, order / r) == 1 {
                order /= r;
            }
        }
        order
    }

    /// Absolute trace to F_p: Σ_{i<f} x^{p^i}, an element of the prime field.
    pub fn trace(&self, x: u64) -> u64 {
        let mut t = 0;
        let mut y = x;
        for _ in 0..self.f {
            t = (t + y % self.p) % self.p;
            y = self.pow(y, self.p);
        }
        t
    }

    /// g(χ̃) = Σ_j ζ_{q−1}^{a·j}·ζ_p^{Tr(γ^j)}, where γ is the generator and a
    /// the character exponent; an element of Q(ζ_{p(q−1)}).
    pub fn gauss_sum(&self, chi_exp: u64) -> Result<Cyclotomic> {
        let q = self.size();
        if chi_exp >= q - 1 {
            return Err(Error::CharacterOutOfRange { exp: chi_exp, q });
        }
        let n = self.p * (q - 1);
        let mut sum = RootSum::new(n);
        let one = BigInt::from(1);
        let mut x = 1;
        for j in 0..q - 1 {
            let k = (chi_exp * j % (q - 1)) * self.p + self.trace(x) * (q - 1);
            sum.add_root((k % n) as i64, &one);
            x = self.mul(x, self.generator);
        }
        Ok(sum.finish())
    }
}

pub fn finite_field(p: u64, f: u32) -> Result<FiniteFieldData> {
    FiniteFieldData::new(p, f)
}

pub fn gauss_sum(k: &FiniteFieldData, chi_exp: u64) -> Result<Cyclotomic> {
    k.gauss_sum(chi_exp)
}

fn digits(mut x: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(x % p);
        x /= p;
    }
    out
}

fn encode(c: &[u64], p: u64) -> u64 {
    c.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Remainder of `a` modulo the monic polynomial `m`, with deg m coefficients.
fn reduce(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    let d = m.len() - 1;
    for i in (d..a.len()).rev() {
        let c = a[i];
        if c == 0 {
            continue;
        }
        for j in 0..=d {
            a[i - d + j] = (a[i - d + j] + p - c * m[j] % p) % p;
        }
    }
    a.truncate(d);
    a.resize(d, 0);
    a
}

/// Irreducibility by trial division with every monic polynomial of degree at
/// most half the degree.
fn is_irreducible(m: &[u64], p: u64) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        for low in 0..p.pow(d as u32) {
            let mut div = digits(low, p, d);
            div.push(1);
            if reduce(m.to_vec(), &div, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// A tamely ramified abelian local extension with its residue field and the
/// identification Γ₀ ≅ μ_e sending the smallest generator c₀ of Γ₀ to
/// γ^{(q−1)/e}.
#[derive(Clone, Debug)]
pub struct TameAbelianLocalDatum {
    base: LocalExtensionData,
    residue: FiniteFieldData,
    inertia_generator: usize,
}

impl TameAbelianLocalDatum {
    pub fn new(base: LocalExtensionData, residue: FiniteFieldData) -> Result<TameAbelianLocalDatum> {
        if !base.group().is_abelian() {
            return Err(Error::InvalidFiltration("the group is not abelian".into()));
        }
        if !base.is_tame() {
            return Err(Error::InvalidFiltration("wild inertia is not trivial".into()));
        }
        if base.p() != residue.p() {
            return Err(Error::InvalidField(format!(
                "residue characteristic {} differs from field characteristic {}",
                base.p(),
                residue.p()
            )));
        }
        if base.f_abs() != residue.degree() {
            return Err(Error::InvalidField(format!(
                "residue field has degree {} but the base field has residue degree {}",
                residue.degree(),
                base.f_abs()
            )));
        }
        let e = base.inertia().order() as u64;
        let q = residue.size();
        if (q - 1) % e != 0 {
            return Err(Error::InvalidField(format!("inertia order {e} does not divide {q} − 1")));
        }
        let inertia_generator = base
            .inertia()
            .cyclic_generator()
            .ok_or_else(|| Error::InvalidFiltration("inertia is not cyclic".into()))?;
        Ok(TameAbelianLocalDatum {
            base,
            residue,
            inertia_generator,
        })
    }

    pub fn base(&self) -> &LocalExtensionData {
        &self.base
    }

    pub fn residue(&self) -> &FiniteFieldData {
        &self.residue
    }

    pub fn inertia_generator(&self) -> usize {
        self.inertia_generator
    }

    /// Exponent a of the residue character x ↦ ζ_{q−1}^{a·log_γ x} attached
    /// to a linear character of Γ.
    pub fn residue_exponent(&self, chi: &ClassFunction) -> Result<u64> {
        if chi.degree_int() != Some(1) {
            return Err(Error::NotLinear);
        }
        let e = self.base.inertia().order() as u64;
        let v = chi.at(self.inertia_generator);
        let s = (0..e)
            .find(|&s| *v == Cyclotomic::root_of_unity(e, s as i64))
            .ok_or(Error::NotLinear)?;
        Ok(s * ((self.residue.size() - 1) / e))
    }

    /// τ(F, χ) for a linear character.
    pub fn tame_tau(&self, chi: &ClassFunction) -> Result<Cyclotomic> {
        let a = self.residue_exponent(chi)?;
        if a == 0 {
            return Ok(Cyclotomic::one());
        }
        self.residue.gauss_sum(a)
    }

    pub fn equivariant_tau(&self) -> Result<CentralElement> {
        let table = self.base.table();
        let coeffs = table
            .irreducibles()
            .iter()
            .map(|chi| self.tame_tau(chi))
            .collect::<Result<_>>()?;
        CentralElement::new(table, coeffs)
    }

    /// τ′ = τ·y⁻¹.
    pub fn modified_tau(&self) -> Result<CentralElement> {
        self.equivariant_tau()?.div(&self.base.equivariant_y()?)
    }

    /// J₂ = (ψ_{2,*} − 2)(τ), with coefficient τ(χ²)·τ(χ)⁻² at linear χ.
    pub fn equivariant_j2(&self) -> Result<CentralElement> {
        twist_endo(&self.equivariant_tau()?, -2, 1, 2)
    }

    /// τ(χ)²·τ(χ²)⁻¹, defined when χ² is ramified.
    pub fn jacobi(&self, chi: &ClassFunction) -> Result<Cyclotomic> {
        let sq = chi * chi;
        if self.residue_exponent(&sq)? == 0 {
            return Err(Error::Precondition("χ² is unramified".into()));
        }
        let t = self.tame_tau(chi)?;
        (&t * &t).checked_div(&self.tame_tau(&sq)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::CharacterTable;
    use crate::grp::{FiniteGroup, Subgroup};
    use std::sync::Arc;

    #[test]
    fn small_fields() {
        let f3 = finite_field(3, 1).unwrap();
        assert_eq!(f3.generator(), 2);
        let f4 = finite_field(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        assert_eq!(finite_field(7, 1).unwrap().generator(), 3);
        assert!(finite_field(9, 1).is_err());
        // x^2 + 1 is irreducible over F3 and comes first among monic quadratics
        assert_eq!(finite_field(3, 2).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn field_axioms_spot_checks() {
        let k = finite_field(2, 4).unwrap();
        let q = k.size();
        for a in 1..q {
            assert_eq!(k.pow(a, q - 1), 1);
            assert!(k.trace(a) < 2);
        }
        // trace is additive (addition is digit-wise xor for p = 2)
        for a in 0..q {
            for b in 0..q {
                assert_eq!(k.trace(a ^ b), (k.trace(a) + k.trace(b)) % 2);
            }
        }
    }

    #[test]
    fn gauss_sum_values() {
        let f3 = finite_field(3, 1).unwrap();
        assert_eq!(f3.gauss_sum(0).unwrap(), Cyclotomic::from_integer(-1));
        let g = f3.gauss_sum(1).unwrap();
        assert_eq!(&g * &g, Cyclotomic::from_integer(-3));
        assert_eq!(g, Cyclotomic::zeta(3) - Cyclotomic::root_of_unity(3, 2));
        assert!(matches!(f3.gauss_sum(2), Err(Error::CharacterOutOfRange { .. })));
        let k = finite_field(2, 3).unwrap();
        for a in 1..7 {
            let g = k.gauss_sum(a).unwrap();
            assert_eq!(&g * &g.conj(), Cyclotomic::from_integer(8));
        }
    }

    fn datum(g: FiniteGroup, p: u64, f: u32, inertia: &[usize], frob: usize) -> TameAbelianLocalDatum {
        let t = Arc::new(CharacterTable::new(&Arc::new(g)).unwrap());
        let i = Subgroup::generated(t.group(), inertia).unwrap();
        let base = LocalExtensionData::new(&t, p, vec![i], frob, f).unwrap();
        TameAbelianLocalDatum::new(base, finite_field(p, f).unwrap()).unwrap()
    }

    #[test]
    fn tame_sums() {
        let d = datum(FiniteGroup::cyclic(2).unwrap(), 3, 1, &[1], 0);
        let t = d.base().table();
        assert!(d.tame_tau(t.get(0)).unwrap().is_one());
        let tau = d.tame_tau(t.get(1)).unwrap();
        assert_eq!(&tau * &tau, Cyclotomic::from_integer(-3));
        let j2 = d.equivariant_j2().unwrap();
        assert!(j2.coeff(0).is_one());
        assert_eq!(
            j2.coeff(1),
            &Cyclotomic::from_integer(-1).checked_div(&Cyclotomic::from_integer(3)).unwrap()
        );
        assert!(crate::center::is_rational_equivariant(&j2).unwrap());

        let d = datum(FiniteGroup::cyclic(3).unwrap(), 7, 1, &[1], 0);
        for chi in d.base().table().irreducibles().iter().skip(1) {
            let tau = d.tame_tau(chi).unwrap();
            assert_eq!(&tau * &tau.conj(), Cyclotomic::from_integer(7));
        }
    }

    #[test]
    fn modified_tau_relation() {
        // C6 = I·⟨σ⟩ with I = C3 over F7
        let d = datum(FiniteGroup::cyclic(6).unwrap(), 7, 1, &[2], 3);
        let tau = d.equivariant_tau().unwrap();
        let tp = d.modified_tau().unwrap();
        for (i, chi) in d.base().table().irreducibles().iter().enumerate() {
            if d.base().is_ramified(chi) {
                assert_eq!(tp.coeff(i), tau.coeff(i));
            } else {
                let det = chi.at(3);
                assert_eq!(tp.coeff(i), &(-(tau.coeff(i) * &det.inv().unwrap())));
            }
        }
    }

    #[test]
    fn rejects_bad_data() {
        let t = Arc::new(CharacterTable::new(&Arc::new(FiniteGroup::cyclic(5).unwrap())).unwrap());
        let i = Subgroup::whole(t.group());
        let base = LocalExtensionData::new(&t, 3, vec![i], 0, 1).unwrap();
        assert!(matches!(
            TameAbelianLocalDatum::new(base.clone(), finite_field(3, 1).unwrap()),
            Err(Error::InvalidField(_))
        ));
        assert!(matches!(
            TameAbelianLocalDatum::new(base, finite_field(3, 4).unwrap()),
            Err(Error::InvalidField(_))
        ));
        let i = Subgroup::whole(t.group());
        let base = LocalExtensionData::new(&t, 3, vec![i], 0, 4).unwrap();
        assert!(TameAbelianLocalDatum::new(base, finite_field(3, 4).unwrap()).is_ok());
    }
}
