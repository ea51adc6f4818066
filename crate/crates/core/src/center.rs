//! Central elements of Q^c[Γ] written in the basis of primitive central
//! idempotents: x = Σ_χ e_χ·x_χ with one coefficient per irreducible.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::chartab::{adams, restrict, same_group, CharacterTable, ClassFunction};
use crate::cyclo::{units_mod, Cyclotomic};
use crate::error::{Error, Result};
use crate::grp::Subgroup;

#[derive(Clone, PartialEq, Eq)]
pub struct CentralElement {
    table: Arc<CharacterTable>,
    coeffs: Vec<Cyclotomic>,
}

impl CentralElement {
    pub fn new(table: &Arc<CharacterTable>, coeffs: Vec<Cyclotomic>) -> Result<CentralElement> {
        if coeffs.len() != table.len() {
            return Err(Error::InvalidParameters(format!(
                "expected {} coefficients, got {}",
                table.len(),
                coeffs.len()
            )));
        }
        Ok(CentralElement {
            table: table.clone(),
            coeffs,
        })
    }

    pub fn from_fn(
        table: &Arc<CharacterTable>,
        f: impl Fn(usize, &ClassFunction) -> Cyclotomic,
    ) -> CentralElement {
        CentralElement {
            table: table.clone(),
            coeffs: table
                .irreducibles()
                .iter()
                .enumerate()
                .map(|(i, chi)| f(i, chi))
                .collect(),
        }
    }

    pub fn one(table: &Arc<CharacterTable>) -> CentralElement {
        CentralElement::from_fn(table, |_, _| Cyclotomic::one())
    }

    /// The primitive central idempotent e_χ.
    pub fn idempotent(table: &Arc<CharacterTable>, i: usize) -> CentralElement {
        CentralElement::from_fn(table, |j, _| Cyclotomic::from_integer((i == j) as i64))
    }

    /// e_I = (1/|I|) Σ_{h ∈ I} h for a normal subgroup I.
    pub fn normal_idempotent(table: &Arc<CharacterTable>, i: &Subgroup) -> Result<CentralElement> {
        if !same_group(table.group(), i.parent()) {
            return Err(Error::GroupMismatch);
        }
        if !i.is_normal() {
            return Err(Error::NotNormal);
        }
        let w = Cyclotomic::from_rational(BigRational::new(1.into(), BigInt::from(i.order())));
        let mut a = vec![Cyclotomic::zero(); table.group().order()];
        for &h in i.elements() {
            a[h] = w.clone();
        }
        CentralElement::from_group_algebra(table, &a)
    }

    /// Image of a central element of the group algebra, given by its
    /// coordinates a(g): x_χ = (1/χ(1)) Σ_g a(g)·χ(g).
    pub fn from_group_algebra(table: &Arc<CharacterTable>, a: &[Cyclotomic]) -> Result<CentralElement> {
        let g = table.group();
        if a.len() != g.order() {
            return Err(Error::InvalidParameters(format!(
                "group algebra element needs {} coordinates",
                g.order()
            )));
        }
        let cd = g.conjugacy();
        for c in 0..cd.len() {
            let first = &a[cd.rep(c)];
            if let Some(&bad) = cd.class(c).iter().find(|&&x| &a[x] != first) {
                return Err(Error::NotCentral(bad));
            }
        }
        let coeffs = table
            .irreducibles()
            .iter()
            .map(|chi| {
                let s: Cyclotomic = (0..cd.len())
                    .map(|c| {
                        &a[cd.rep(c)] * chi.value(c) * Cyclotomic::from_integer(cd.size(c) as i64)
                    })
                    .sum();
                let d = chi.degree_int().expect("degrees are integers");
                s.scale(&BigRational::new(1.into(), BigInt::from(d)))
            })
            .collect();
        Ok(CentralElement {
            table: table.clone(),
            coeffs,
        })
    }

    /// As [`CentralElement::from_group_algebra`], but rejects non-units.
    pub fn unit_from_group_algebra(table: &Arc<CharacterTable>, a: &[Cyclotomic]) -> Result<CentralElement> {
        let x = CentralElement::from_group_algebra(table, a)?;
        if let Some(i) = x.coeffs.iter().position(Cyclotomic::is_zero) {
            return Err(Error::NotUnit(format!("coefficient {i} vanishes")));
        }
        Ok(x)
    }

    /// Coordinates in the group basis: a(g) = Σ_χ x_χ·χ(1)·χ(g⁻¹)/|G|.
    pub fn to_group_algebra(&self) -> Vec<Cyclotomic> {
        let g = self.table.group();
        let n = BigRational::new(1.into(), BigInt::from(g.order()));
        let per_class: Vec<Cyclotomic> = (0..g.conjugacy().len())
            .map(|c| {
                let inv = g.conjugacy().inverse_class(c);
                self.table
                    .irreducibles()
                    .iter()
                    .zip(&self.coeffs)
                    .map(|(chi, x)| x * chi.degree() * chi.value(inv))
                    .sum::<Cyclotomic>()
                    .scale(&n)
            })
            .collect();
        (0..g.order())
            .map(|x| per_class[g.conjugacy().class_of(x)].clone())
            .collect()
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn coeffs(&self) -> &[Cyclotomic] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Cyclotomic {
        &self.coeffs[i]
    }

    pub fn is_unit(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.iter().all(Cyclotomic::is_one)
    }

    fn check_same(&self, o: &CentralElement) -> Result<()> {
        if Arc::ptr_eq(&self.table, &o.table) || same_group(self.table.group(), o.table.group()) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    fn zip(&self, o: &CentralElement, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Result<Cyclotomic>) -> Result<CentralElement> {
        self.check_same(o)?;
        Ok(CentralElement {
            table: self.table.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| f(a, b))
                .collect::<Result<_>>()?,
        })
    }

    pub fn mul(&self, o: &CentralElement) -> Result<CentralElement> {
        self.zip(o, |a, b| Ok(a * b))
    }

    pub fn add(&self, o: &CentralElement) -> Result<CentralElement> {
        self.zip(o, |a, b| Ok(a + b))
    }

    pub fn sub(&self, o: &CentralElement) -> Result<CentralElement> {
        self.zip(o, |a, b| Ok(a - b))
    }

    pub fn div(&self, o: &CentralElement) -> Result<CentralElement> {
        self.zip(o, |a, b| a.checked_div(b).map_err(|_| not_unit(b)))
    }

    pub fn inv(&self) -> Result<CentralElement> {
        self.pow(-1)
    }

    pub fn pow(&self, e: i64) -> Result<CentralElement> {
        Ok(CentralElement {
            table: self.table.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.pow(e).map_err(|_| not_unit(c)))
                .collect::<Result<_>>()?,
        })
    }

    /// x_ψ = Π x_{χ_i}^{m_i} for ψ = Σ m_i χ_i.
    pub fn eval_multiplicities(&self, m: &[BigInt]) -> Result<Cyclotomic> {
        let mut out = Cyclotomic::one();
        for (x, k) in self.coeffs.iter().zip(m) {
            if k.is_zero() {
                continue;
            }
            let k = k
                .to_i64()
                .ok_or_else(|| Error::InvalidParameters("multiplicity too large".into()))?;
            out *= &x.pow(k).map_err(|_| not_unit(x))?;
        }
        Ok(out)
    }

    /// Evaluation at a virtual character.
    pub fn eval(&self, psi: &ClassFunction) -> Result<Cyclotomic> {
        let m = self.table.decompose(psi)?;
        self.eval_multiplicities(&m)
    }

    /// Galois action on the coefficients together with the induced
    /// permutation of characters: (x^ω)_{χ^ω} = ω(x_χ).
    pub fn galois(&self, w: i64) -> Result<CentralElement> {
        let e = self.table.group().exponent() as i64;
        let perm = self.table.galois_permutation(w.rem_euclid(e.max(1)))?;
        let mut coeffs = vec![Cyclotomic::zero(); self.coeffs.len()];
        for (i, x) in self.coeffs.iter().enumerate() {
            coeffs[perm[i]] = x.galois_act(w)?;
        }
        Ok(CentralElement {
            table: self.table.clone(),
            coeffs,
        })
    }

    /// Least common multiple of the coefficient orders and the exponent.
    pub fn field_order(&self) -> u64 {
        self.coeffs
            .iter()
            .fold(self.table.group().exponent() as u64, |a, c| a.lcm(&c.order()))
    }
}

fn not_unit(c: &Cyclotomic) -> Error {
    Error::NotUnit(format!("coefficient {c} is not invertible"))
}

impl fmt::Debug for CentralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter().map(|v| v.to_string())).finish()
    }
}

/// One `chi_i : value` line per irreducible, in table order.
impl fmt::Display for CentralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "chi_{i} : {c}")?;
        }
        Ok(())
    }
}

/// ((m + n·ψ_{k,*})(x))_χ = x_χ^m · x_{ψ_k(χ)}^n.
pub fn twist_endo(x: &CentralElement, m: i64, n: i64, k: i64) -> Result<CentralElement> {
    let table = &x.table;
    let coeffs = table
        .irreducibles()
        .iter()
        .zip(&x.coeffs)
        .map(|(chi, xc)| {
            let base = xc.pow(m).map_err(|_| not_unit(xc))?;
            if n == 0 {
                return Ok(base);
            }
            let twisted = x.eval(&adams(chi, k))?;
            Ok(base * twisted.pow(n).map_err(|_| not_unit(&twisted))?)
        })
        .collect::<Result<_>>()?;
    Ok(CentralElement {
        table: table.clone(),
        coeffs,
    })
}

/// ĩ_J^G(x)_χ = Π_{φ ∈ Irr(J)} x_φ^{⟨res χ, φ⟩_J}, for x central in Q^c[J].
pub fn central_induce(
    x: &CentralElement,
    j: &Subgroup,
    g_table: &Arc<CharacterTable>,
) -> Result<CentralElement> {
    if !same_group(x.table.group(), j.group()) || !same_group(g_table.group(), j.parent()) {
        return Err(Error::GroupMismatch);
    }
    let coeffs = g_table
        .irreducibles()
        .iter()
        .map(|chi| {
            let res = restrict(chi, j)?;
            x.eval(&res)
        })
        .collect::<Result<_>>()?;
    Ok(CentralElement {
        table: g_table.clone(),
        coeffs,
    })
}

/// Whether the coefficient family is Galois-equivariant, i.e. x lies in the
/// centre of Q[Γ]. The Galois group is taken over the field generated by the
/// character values and the coefficients.
pub fn is_rational_equivariant(x: &CentralElement) -> Result<bool> {
    let n = x.field_order();
    let e = x.table.group().exponent() as u64;
    for w in units_mod(n) {
        let perm = x.table.galois_permutation((w % e.max(1)) as i64)?;
        for (i, c) in x.coeffs.iter().enumerate() {
            if x.coeffs[perm[i]] != c.galois_act(w as i64)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityVerdict {
    pub positive: bool,
    pub diagnostics: Vec<String>,
}

/// Checks x_{χ̄} = conj(x_χ) for every χ and x_χ > 0 on symplectic χ.
/// Problems are reported in the verdict rather than as errors, except when a
/// sign cannot be certified within the precision cap.
pub fn is_symplectic_positive(x: &CentralElement, cap_bits: u32) -> Result<PositivityVerdict> {
    let table = &x.table;
    let mut diagnostics = Vec::new();
    for (i, chi) in table.irreducibles().iter().enumerate() {
        let bar = table
            .index_of(&chi.conj())
            .ok_or_else(|| Error::Internal("conjugate of an irreducible".into()))?;
        if x.coeffs[bar] != x.coeffs[i].conj() {
            diagnostics.push(format!("chi_{bar} is not the conjugate of chi_{i}"));
        }
    }
    for i in table.symplectic_chars() {
        let c = &x.coeffs[i];
        if !c.is_real() {
            diagnostics.push(format!("symplectic coordinate chi_{i} = {c} is not real"));
            continue;
        }
        match c.sign_of_real(cap_bits)? {
            Ordering::Greater => {}
            _ => diagnostics.push(format!("symplectic coordinate chi_{i} = {c} is not positive")),
        }
    }
    Ok(PositivityVerdict {
        positive: diagnostics.is_empty(),
        diagnostics,
    })
}
