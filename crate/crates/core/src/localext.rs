//! Abstract local Galois extensions E/F, described only by the Galois group,
//! its lower ramification filtration, a Frobenius lift and the residue
//! characteristic. No p-adic numbers are ever constructed.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::center::{twist_endo, CentralElement};
use crate::chartab::modp::is_prime;
use crate::chartab::{det_char, same_group, CharacterTable, ClassFunction};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::grp::{FiniteGroup, Subgroup};

#[derive(Clone, Debug)]
pub struct LocalExtensionData {
    table: Arc<CharacterTable>,
    p: u64,
    /// Γ₀ ⊇ Γ₁ ⊇ …; indices past the end are trivial.
    filtration: Vec<Subgroup>,
    frobenius: usize,
    f_abs: u32,
}

/// Least k ≥ 1 with g^k ∈ h.
fn order_modulo(g: &FiniteGroup, x: usize, h: &Subgroup) -> usize {
    let mut y = x;
    let mut k = 1;
    while !h.contains(y) {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

impl LocalExtensionData {
    pub fn new(
        table: &Arc<CharacterTable>,
        p: u64,
        filtration: Vec<Subgroup>,
        frobenius: usize,
        f_abs: u32,
    ) -> Result<LocalExtensionData> {
        let g = table.group();
        let bad = |m: String| Err(Error::InvalidFiltration(m));
        if !is_prime(p) {
            return bad(format!("residue characteristic {p} is not prime"));
        }
        if f_abs == 0 {
            return bad("absolute residue degree must be positive".into());
        }
        g.check_index(frobenius)?;
        for (i, s) in filtration.iter().enumerate() {
            if !same_group(s.parent(), g) {
                return Err(Error::GroupMismatch);
            }
            if !s.is_normal() {
                return bad(format!("Γ_{i} is not normal"));
            }
            if i > 0 && !s.is_subset_of(&filtration[i - 1]) {
                return bad(format!("Γ_{i} is not contained in Γ_{}", i - 1));
            }
        }
        let data = LocalExtensionData {
            table: table.clone(),
            p,
            filtration,
            frobenius,
            f_abs,
        };
        let (g0, g1) = (data.gamma(0), data.gamma(1));
        let p_us = p as usize;
        if !is_power_of(g1.order(), p_us) {
            return bad(format!("Γ₁ has order {}, not a power of {p}", g1.order()));
        }
        let tame_index = g0.order() / g1.order();
        if tame_index % p_us == 0 {
            return bad("Γ₁ is not a Sylow subgroup of Γ₀".into());
        }
        if !g0.elements().iter().any(|&x| order_modulo(g, x, &g1) == tame_index) {
            return bad("Γ₀/Γ₁ is not cyclic".into());
        }
        let unram_index = g.order() / g0.order();
        if order_modulo(g, frobenius, &g0) != unram_index {
            return bad(format!("element {frobenius} does not generate Γ/Γ₀"));
        }
        Ok(data)
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.table.group()
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn frobenius(&self) -> usize {
        self.frobenius
    }

    pub fn f_abs(&self) -> u32 {
        self.f_abs
    }

    pub fn filtration(&self) -> &[Subgroup] {
        &self.filtration
    }

    /// Γ_i, trivial once the supplied chain runs out.
    pub fn gamma(&self, i: usize) -> Subgroup {
        self.filtration
            .get(i)
            .cloned()
            .unwrap_or_else(|| Subgroup::trivial(self.group()))
    }

    pub fn inertia(&self) -> Subgroup {
        self.gamma(0)
    }

    pub fn wild_inertia(&self) -> Subgroup {
        self.gamma(1)
    }

    pub fn is_unramified(&self) -> bool {
        self.gamma(0).is_trivial()
    }

    pub fn is_tame(&self) -> bool {
        self.gamma(1).is_trivial()
    }

    pub fn is_totally_ramified(&self) -> bool {
        self.gamma(0).order() == self.group().order()
    }

    /// ord_E(D_{E/F}) = Σ_{i ≥ 0} (|Γ_i| − 1).
    pub fn different_valuation(&self) -> u64 {
        self.filtration.iter().map(|s| s.order() as u64 - 1).sum()
    }

    /// ord_E of the square root of the inverse different, when it exists.
    pub fn sqrt_inv_different(&self) -> Option<i64> {
        let d = self.different_valuation() as i64;
        (d % 2 == 0).then_some(-d / 2)
    }

    pub fn is_weakly_ramified(&self) -> bool {
        self.gamma(2).is_trivial()
    }

    /// n ≡ 1 (mod |Γ₁|) for n = ord_E of the square root of the inverse different.
    pub fn freeness_congruence(&self) -> Result<bool> {
        let n = self.sqrt_inv_different().ok_or_else(|| {
            Error::Precondition("the inverse different has no square root".into())
        })?;
        let w = self.gamma(1).order() as i64;
        Ok((n - 1).rem_euclid(w) == 0)
    }

    /// An irreducible character is ramified when it is nontrivial on Γ₀.
    pub fn is_ramified(&self, chi: &ClassFunction) -> bool {
        let d = chi.degree();
        self.gamma(0).elements().iter().any(|&g| chi.at(g) != d)
    }

    /// Keeps the irreducible constituents that are trivial on Γ₀.
    pub fn unramified_part(&self, chi: &ClassFunction) -> Result<ClassFunction> {
        let mut m = self.table.decompose(chi)?;
        for (k, mu) in m.iter_mut().zip(self.table.irreducibles()) {
            if self.is_ramified(mu) {
                *k = BigInt::zero();
            }
        }
        Ok(self.table.combination(&m))
    }

    /// y(F, μ) for every irreducible μ: 1 if ramified, otherwise
    /// (−1)^{μ(1)}·det_μ(σ).
    pub fn irreducible_characteristics(&self) -> Result<Vec<Cyclotomic>> {
        self.table
            .irreducibles()
            .iter()
            .map(|mu| {
                if self.is_ramified(mu) {
                    return Ok(Cyclotomic::one());
                }
                let det = det_char(&self.table, mu)?;
                let v = det.at(self.frobenius).clone();
                let d = mu.degree_int().expect("integral degree");
                Ok(if d % 2 == 0 { v } else { -v })
            })
            .collect()
    }

    /// y(F, φ) for a virtual character, multiplicative in φ.
    pub fn unramified_characteristic(&self, phi: &ClassFunction) -> Result<Cyclotomic> {
        self.equivariant_y()?.eval(phi)
    }

    /// y_{E/F} = Σ_χ e_χ·y(F, χ).
    pub fn equivariant_y(&self) -> Result<CentralElement> {
        CentralElement::new(&self.table, self.irreducible_characteristics()?)
    }

    /// (1 − ψ_{2,*})(y_{E/F}).
    pub fn twisted_y(&self) -> Result<CentralElement> {
        twist_endo(&self.equivariant_y()?, 1, -1, 2)
    }

    /// (1 − e_I) + σ⁻¹·e_I, available when |I| is odd and Γ is abelian or
    /// of odd order.
    pub fn closed_form_twisted_y(&self) -> Result<CentralElement> {
        let g = self.group();
        let inertia = self.gamma(0);
        if inertia.order() % 2 == 0 {
            return Err(Error::Precondition("inertia has even order".into()));
        }
        if g.order() % 2 == 0 && !g.is_abelian() {
            return Err(Error::Precondition(
                "the group is neither abelian nor of odd order".into(),
            ));
        }
        let w = Cyclotomic::from_rational(num_rational::BigRational::new(
            1.into(),
            BigInt::from(inertia.order()),
        ));
        let mut a = vec![Cyclotomic::zero(); g.order()];
        a[g.identity()] = Cyclotomic::one();
        let s_inv = g.inv(self.frobenius);
        for &h in inertia.elements() {
            a[h] -= &w;
            a[g.mul(s_inv, h)] += &w;
        }
        CentralElement::from_group_algebra(&self.table, &a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(g: FiniteGroup) -> Arc<CharacterTable> {
        Arc::new(CharacterTable::new(&Arc::new(g)).unwrap())
    }

    fn sub(t: &Arc<CharacterTable>, gens: &[usize]) -> Subgroup {
        Subgroup::generated(t.group(), gens).unwrap()
    }

    #[test]
    fn hilbert_formula_examples() {
        let c3 = table(FiniteGroup::cyclic(3).unwrap());
        let unram = LocalExtensionData::new(&c3, 5, vec![], 1, 1).unwrap();
        assert_eq!(unram.different_valuation(), 0);
        let tame = LocalExtensionData::new(&c3, 7, vec![sub(&c3, &[1])], 0, 1).unwrap();
        assert_eq!(tame.different_valuation(), 2);
        assert_eq!(tame.sqrt_inv_different(), Some(-1));
        assert!(tame.is_weakly_ramified() && tame.freeness_congruence().unwrap());
        let wild = LocalExtensionData::new(&c3, 3, vec![sub(&c3, &[1]), sub(&c3, &[1])], 0, 1).unwrap();
        assert_eq!(wild.different_valuation(), 4);
        assert_eq!(wild.sqrt_inv_different(), Some(-2));
        assert!(wild.freeness_congruence().unwrap());

        let c2 = table(FiniteGroup::cyclic(2).unwrap());
        let tame2 = LocalExtensionData::new(&c2, 3, vec![sub(&c2, &[1])], 0, 1).unwrap();
        assert_eq!(tame2.sqrt_inv_different(), None);
        assert!(matches!(tame2.freeness_congruence(), Err(Error::Precondition(_))));
        let wild2 = LocalExtensionData::new(&c2, 2, vec![sub(&c2, &[1]), sub(&c2, &[1])], 0, 1).unwrap();
        assert_eq!(wild2.sqrt_inv_different(), Some(-1));
        assert!(wild2.freeness_congruence().unwrap());
    }

    #[test]
    fn invalid_filtrations() {
        let c6 = table(FiniteGroup::cyclic(6).unwrap());
        // Γ₁ of order 3 is not a 2-group
        let r = LocalExtensionData::new(&c6, 2, vec![sub(&c6, &[1]), sub(&c6, &[2])], 0, 1);
        assert!(matches!(r, Err(Error::InvalidFiltration(_))));
        // Γ₁ = 1 inside Γ₀ = C6 with p = 3: 3 divides the tame index
        let r = LocalExtensionData::new(&c6, 3, vec![sub(&c6, &[1])], 0, 1);
        assert!(matches!(r, Err(Error::InvalidFiltration(_))));
        // Frobenius 2 does not generate Γ/Γ₀ = C6/C3
        let r = LocalExtensionData::new(&c6, 5, vec![sub(&c6, &[2])], 2, 1);
        assert!(matches!(r, Err(Error::InvalidFiltration(_))));
        // a non-normal Γ₀
        let s3 = table(FiniteGroup::dihedral(6).unwrap());
        let r = LocalExtensionData::new(&s3, 5, vec![sub(&s3, &[3])], 0, 1);
        assert!(matches!(r, Err(Error::InvalidFiltration(_))));
        assert!(LocalExtensionData::new(&c6, 4, vec![], 1, 1).is_err());
    }

    #[test]
    fn unramified_characteristic_of_trivial_and_ramified() {
        let c3 = table(FiniteGroup::cyclic(3).unwrap());
        let tame = LocalExtensionData::new(&c3, 7, vec![sub(&c3, &[1])], 0, 1).unwrap();
        let y = tame.irreducible_characteristics().unwrap();
        assert_eq!(y[0], Cyclotomic::from_integer(-1));
        assert!(y[1].is_one() && y[2].is_one());
        let triv = ClassFunction::trivial(c3.group());
        assert_eq!(tame.unramified_part(&triv).unwrap(), triv);
        assert!(tame.unramified_part(c3.get(1)).unwrap().is_zero());
    }

    #[test]
    fn twisted_characteristic() {
        // totally ramified of odd order: the identity
        let c3 = table(FiniteGroup::cyclic(3).unwrap());
        let d = LocalExtensionData::new(&c3, 7, vec![sub(&c3, &[1])], 0, 1).unwrap();
        assert!(d.twisted_y().unwrap().is_one());
        assert!(d.closed_form_twisted_y().unwrap().is_one());

        // C6 with I = C3 and σ of order 2
        let c6 = table(FiniteGroup::cyclic(6).unwrap());
        let d = LocalExtensionData::new(&c6, 7, vec![sub(&c6, &[2])], 3, 1).unwrap();
        assert_eq!(d.twisted_y().unwrap(), d.closed_form_twisted_y().unwrap());

        // unramified C5: coefficient φ(σ)⁻¹ at linear φ
        let c5 = table(FiniteGroup::cyclic(5).unwrap());
        let d = LocalExtensionData::new(&c5, 11, vec![], 1, 1).unwrap();
        let ty = d.twisted_y().unwrap();
        for (i, phi) in c5.irreducibles().iter().enumerate() {
            assert_eq!(ty.coeff(i), &phi.at(1).inv().unwrap());
        }

        let s3 = table(FiniteGroup::dihedral(6).unwrap());
        let d = LocalExtensionData::new(&s3, 5, vec![sub(&s3, &[1])], 3, 1).unwrap();
        assert!(matches!(d.closed_form_twisted_y(), Err(Error::Precondition(_))));
    }
}
