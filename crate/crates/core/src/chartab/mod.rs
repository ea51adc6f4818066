//! Irreducible character tables with exact values in Q(ζ_e), and the
//! operations on class functions built on top of them.

mod dixon;
pub(crate) mod modp;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::grp::{FiniteGroup, Quotient, Subgroup};

/// Two group handles refer to the same group if they share an allocation or
/// have identical tables.
pub fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A function on conjugacy classes, one value per class in class order.
#[derive(Clone, PartialEq, Eq)]
pub struct ClassFunction {
    group: Arc<FiniteGroup>,
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(group: &Arc<FiniteGroup>, values: Vec<Cyclotomic>) -> Result<ClassFunction> {
        let r = group.conjugacy().len();
        if values.len() != r {
            return Err(Error::InvalidParameters(format!(
                "class function needs {r} values, got {}",
                values.len()
            )));
        }
        Ok(ClassFunction {
            group: group.clone(),
            values,
        })
    }

    /// Builds a class function from its values at the class representatives.
    pub fn from_fn(group: &Arc<FiniteGroup>, f: impl Fn(usize) -> Cyclotomic) -> ClassFunction {
        let cd = group.conjugacy();
        ClassFunction {
            group: group.clone(),
            values: (0..cd.len()).map(|c| f(cd.rep(c))).collect(),
        }
    }

    pub fn trivial(group: &Arc<FiniteGroup>) -> ClassFunction {
        ClassFunction::constant(group, 1)
    }

    pub fn constant(group: &Arc<FiniteGroup>, c: i64) -> ClassFunction {
        ClassFunction::from_fn(group, |_| Cyclotomic::from_integer(c))
    }

    pub fn regular(group: &Arc<FiniteGroup>) -> ClassFunction {
        let id = group.identity();
        let n = group.order() as i64;
        ClassFunction::from_fn(group, |g| Cyclotomic::from_integer(if g == id { n } else { 0 }))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at an element index.
    pub fn at(&self, g: usize) -> &Cyclotomic {
        &self.values[self.group.conjugacy().class_of(g)]
    }

    /// χ(1).
    pub fn degree(&self) -> &Cyclotomic {
        self.at(self.group.identity())
    }

    pub fn degree_int(&self) -> Option<i64> {
        self.degree().to_integer()
    }

    pub fn conj(&self) -> ClassFunction {
        self.map(Cyclotomic::conj)
    }

    pub fn galois(&self, k: i64) -> Result<ClassFunction> {
        let values = self
            .values
            .iter()
            .map(|v| v.galois_act(k))
            .collect::<Result<_>>()?;
        Ok(ClassFunction {
            group: self.group.clone(),
            values,
        })
    }

    pub fn scaled(&self, k: i64) -> ClassFunction {
        let k = Cyclotomic::from_integer(k);
        self.map(|v| v * &k)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }

    /// Least common multiple of the orders of the values.
    pub fn conductor(&self) -> u64 {
        use num_integer::Integer;
        self.values.iter().fold(1, |a, v| a.lcm(&v.order()))
    }

    fn map(&self, f: impl Fn(&Cyclotomic) -> Cyclotomic) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(f).collect(),
        }
    }

    fn zip(&self, o: &ClassFunction, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> ClassFunction {
        assert!(
            same_group(&self.group, &o.group),
            "class functions live on different groups"
        );
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&o.values).map(|(a, b)| f(a, b)).collect(),
        }
    }

    fn check_same(&self, o: &ClassFunction) -> Result<()> {
        if same_group(&self.group, &o.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    fn canonical_cmp(&self, o: &ClassFunction) -> Ordering {
        for (a, b) in self.values.iter().zip(&o.values) {
            match a.canonical_cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.values.iter().map(|v| v.to_string())).finish()
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(" | "))
    }
}

// Pointwise arithmetic. Mixing class functions of different groups is a
// programming error and panics.
macro_rules! pointwise {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&ClassFunction> for &ClassFunction {
            type Output = ClassFunction;
            fn $method(self, o: &ClassFunction) -> ClassFunction {
                self.zip(o, |a, b| a $op b)
            }
        }
        impl $tr<ClassFunction> for ClassFunction {
            type Output = ClassFunction;
            fn $method(self, o: ClassFunction) -> ClassFunction {
                (&self).$method(&o)
            }
        }
        impl $tr<&ClassFunction> for ClassFunction {
            type Output = ClassFunction;
            fn $method(self, o: &ClassFunction) -> ClassFunction {
                (&self).$method(o)
            }
        }
    };
}

pointwise!(Add, add, +);
pointwise!(Sub, sub, -);
pointwise!(Mul, mul, *);

impl Neg for &ClassFunction {
    type Output = ClassFunction;
    fn neg(self) -> ClassFunction {
        self.map(|v| -v)
    }
}

impl Neg for ClassFunction {
    type Output = ClassFunction;
    fn neg(self) -> ClassFunction {
        -&self
    }
}

/// ⟨χ, φ⟩ = (1/|G|) Σ_c |c|·χ(c)·conj(φ(c)).
pub fn inner_product(chi: &ClassFunction, phi: &ClassFunction) -> Result<Cyclotomic> {
    chi.check_same(phi)?;
    let cd = chi.group.conjugacy();
    let mut sum = Cyclotomic::zero();
    for c in 0..cd.len() {
        let term = &chi.values[c] * &phi.values[c].conj();
        sum += &(term * Cyclotomic::from_integer(cd.size(c) as i64));
    }
    Ok(sum.scale(&BigRational::new(1.into(), BigInt::from(chi.group.order()))))
}

/// Irreducible characters of a group, sorted by degree and then by values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    irr: Vec<ClassFunction>,
}

impl CharacterTable {
    /// Computes the table with Dixon's method and checks both orthogonality
    /// relations exactly before returning it.
    pub fn new(group: &Arc<FiniteGroup>) -> Result<CharacterTable> {
        let rows = dixon::irreducible_values(group)?;
        let mut irr: Vec<ClassFunction> = rows
            .into_iter()
            .map(|values| ClassFunction {
                group: group.clone(),
                values,
            })
            .collect();
        irr.sort_by(|a, b| {
            a.degree()
                .canonical_cmp(b.degree())
                .reverse()
                .then_with(|| a.canonical_cmp(b))
        });
        let table = CharacterTable {
            group: group.clone(),
            irr,
        };
        table.verify()?;
        Ok(table)
    }

    fn verify(&self) -> Result<()> {
        let n = self.group.order() as i64;
        let cd = self.group.conjugacy();
        let r = cd.len();
        if self.irr.len() != r {
            return Err(Error::Internal("wrong number of irreducibles".into()));
        }
        let degree_sq: i64 = self
            .irr
            .iter()
            .map(|c| c.degree_int().map(|d| d * d).unwrap_or(-1))
            .sum();
        if degree_sq != n {
            return Err(Error::Internal(format!(
                "squared degrees sum to {degree_sq}, not {n}"
            )));
        }
        let conjs: Vec<ClassFunction> = self.irr.iter().map(ClassFunction::conj).collect();
        for i in 0..r {
            for j in i..r {
                let ip = inner_product(&self.irr[i], &self.irr[j])?;
                let want = Cyclotomic::from_integer((i == j) as i64);
                if ip != want {
                    return Err(Error::Internal(format!(
                        "rows {i} and {j} are not orthonormal"
                    )));
                }
            }
        }
        for a in 0..r {
            for b in a..r {
                let s: Cyclotomic = (0..r)
                    .map(|i| &self.irr[i].values[a] * &conjs[i].values[b])
                    .sum();
                let want = if a == b { n / cd.size(a) as i64 } else { 0 };
                if s != Cyclotomic::from_integer(want) {
                    return Err(Error::Internal(format!(
                        "columns {a} and {b} are not orthogonal"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// The prime used by Dixon's method for this group.
    pub fn dixon_prime(&self) -> u64 {
        dixon::dixon_prime(self.group.order(), self.group.exponent())
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irr
    }

    pub fn len(&self) -> usize {
        self.irr.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irr.is_empty()
    }

    pub fn get(&self, i: usize) -> &ClassFunction {
        &self.irr[i]
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.irr.iter().map(|c| c.degree_int().unwrap_or(0)).collect()
    }

    /// Position of an irreducible character in the table.
    pub fn index_of(&self, chi: &ClassFunction) -> Option<usize> {
        self.irr.iter().position(|c| c == chi)
    }

    /// Multiplicities ⟨f, χ_i⟩; fails unless they are all rational integers.
    pub fn decompose(&self, f: &ClassFunction) -> Result<Vec<BigInt>> {
        self.irr
            .iter()
            .map(|chi| {
                let ip = inner_product(f, chi)?;
                ip.to_rational()
                    .filter(|r| r.is_integer())
                    .map(|r| r.to_integer())
                    .ok_or_else(|| Error::NotVirtualCharacter(format!("multiplicity {ip}")))
            })
            .collect()
    }

    /// Σ m_i χ_i.
    pub fn combination(&self, coeffs: &[BigInt]) -> ClassFunction {
        let r = self.group.conjugacy().len();
        let mut values = vec![Cyclotomic::zero(); r];
        for (chi, m) in self.irr.iter().zip(coeffs) {
            if m.is_zero() {
                continue;
            }
            let m = Cyclotomic::from_rational(BigRational::from_integer(m.clone()));
            for (v, x) in values.iter_mut().zip(&chi.values) {
                *v += &(x * &m);
            }
        }
        ClassFunction {
            group: self.group.clone(),
            values,
        }
    }

    pub fn is_character(&self, f: &ClassFunction) -> bool {
        self.decompose(f)
            .map(|m| m.iter().all(|x| !x.is_negative()))
            .unwrap_or(false)
    }

    pub fn is_irreducible(&self, f: &ClassFunction) -> bool {
        self.index_of(f).is_some()
    }

    /// Indices of the irreducible characters with Frobenius–Schur indicator −1.
    pub fn symplectic_chars(&self) -> Vec<usize> {
        (0..self.irr.len())
            .filter(|&i| frobenius_schur_unchecked(&self.irr[i]) == -1)
            .collect()
    }

    /// The permutation i ↦ j with χ_i^σ_k = χ_j, for k prime to the exponent.
    pub fn galois_permutation(&self, k: i64) -> Result<Vec<usize>> {
        self.irr
            .iter()
            .map(|chi| {
                let image = chi.galois(k)?;
                self.index_of(&image)
                    .ok_or_else(|| Error::Internal("Galois image is not irreducible".into()))
            })
            .collect()
    }
}

pub fn char_table(group: &Arc<FiniteGroup>) -> Result<CharacterTable> {
    CharacterTable::new(group)
}

/// Restriction to a subgroup, as a class function on `h.group()`.
pub fn restrict(chi: &ClassFunction, h: &Subgroup) -> Result<ClassFunction> {
    if !same_group(&chi.group, h.parent()) {
        return Err(Error::GroupMismatch);
    }
    let sub = h.group();
    Ok(ClassFunction::from_fn(sub, |local| chi.at(h.elements()[local]).clone()))
}

/// Frobenius induction of a class function on `h.group()` up to the parent.
pub fn induce(phi: &ClassFunction, h: &Subgroup) -> Result<ClassFunction> {
    if !same_group(&phi.group, h.group()) {
        return Err(Error::GroupMismatch);
    }
    let g = h.parent();
    let cd = g.conjugacy();
    let values = (0..cd.len())
        .map(|c| {
            let mut s = Cyclotomic::zero();
            for &x in cd.class(c) {
                if let Some(local) = h.local_index(x) {
                    s += phi.at(local);
                }
            }
            // |G| / (|H|·|c|) · Σ_{x ∈ H ∩ c} φ(x)
            s.scale(&BigRational::new(
                BigInt::from(g.order()),
                BigInt::from(h.order() * cd.size(c)),
            ))
        })
        .collect();
    Ok(ClassFunction {
        group: g.clone(),
        values,
    })
}

/// Inflation of a class function on a quotient back to the parent group.
pub fn inflate(chi: &ClassFunction, q: &Quotient) -> Result<ClassFunction> {
    if !same_group(&chi.group, q.group()) {
        return Err(Error::GroupMismatch);
    }
    Ok(ClassFunction::from_fn(q.parent(), |g| chi.at(q.project(g)).clone()))
}

/// ψ_k(χ)(g) = χ(g^k).
pub fn adams(chi: &ClassFunction, k: i64) -> ClassFunction {
    let cd = chi.group.conjugacy();
    ClassFunction {
        group: chi.group.clone(),
        values: (0..cd.len())
            .map(|c| chi.values[cd.power_class(c, k)].clone())
            .collect(),
    }
}

/// Determinant of an honest character from its power sums: with
/// p_i = χ(g^i), Newton's identities give the elementary symmetric
/// functions of the eigenvalues and det = e_d.
fn det_honest(chi: &ClassFunction, d: usize) -> Result<ClassFunction> {
    let cd = chi.group.conjugacy();
    let mut values = Vec::with_capacity(cd.len());
    for c in 0..cd.len() {
        let p: Vec<&Cyclotomic> = (1..=d)
            .map(|i| &chi.values[cd.power_class(c, i as i64)])
            .collect();
        let mut e = vec![Cyclotomic::one()];
        for i in 1..=d {
            let mut s = Cyclotomic::zero();
            for j in 1..=i {
                let t = &e[i - j] * p[j - 1];
                if j % 2 == 1 {
                    s += &t;
                } else {
                    s -= &t;
                }
            }
            e.push(s.scale(&BigRational::new(1.into(), BigInt::from(i))));
        }
        values.push(e.pop().unwrap());
    }
    Ok(ClassFunction {
        group: chi.group.clone(),
        values,
    })
}

/// Determinant character; virtual characters are handled multiplicatively,
/// det(χ − φ) = det(χ)·det(φ)⁻¹.
pub fn det_char(table: &CharacterTable, chi: &ClassFunction) -> Result<ClassFunction> {
    chi.check_same(&table.irr[0])?;
    let m = table.decompose(chi)?;
    let pos: Vec<BigInt> = m.iter().map(|x| if x.is_positive() { x.clone() } else { BigInt::zero() }).collect();
    let neg: Vec<BigInt> = m.iter().map(|x| if x.is_negative() { -x } else { BigInt::zero() }).collect();
    let part = |coeffs: &[BigInt]| -> Result<ClassFunction> {
        let f = table.combination(coeffs);
        let d = f
            .degree_int()
            .and_then(|d| d.to_usize())
            .ok_or_else(|| Error::Internal("degree of a character".into()))?;
        det_honest(&f, d)
    };
    let dp = part(&pos)?;
    if neg.iter().all(Zero::is_zero) {
        return Ok(dp);
    }
    let dn = part(&neg)?;
    let values = dp
        .values
        .iter()
        .zip(&dn.values)
        .map(|(a, b)| a.checked_div(b))
        .collect::<Result<_>>()?;
    Ok(ClassFunction {
        group: chi.group.clone(),
        values,
    })
}

fn frobenius_schur_unchecked(chi: &ClassFunction) -> i64 {
    let cd = chi.group.conjugacy();
    let mut s = Cyclotomic::zero();
    for c in 0..cd.len() {
        s += &(&chi.values[cd.power_class(c, 2)] * &Cyclotomic::from_integer(cd.size(c) as i64));
    }
    s.scale(&BigRational::new(1.into(), BigInt::from(chi.group.order())))
        .to_integer()
        .expect("indicator of an irreducible character is an integer")
}

/// (1/|G|) Σ_g χ(g²) ∈ {−1, 0, 1} for an irreducible χ.
pub fn frobenius_schur(table: &CharacterTable, chi: &ClassFunction) -> Result<i64> {
    chi.check_same(&table.irr[0])?;
    if !table.is_irreducible(chi) {
        return Err(Error::NotIrreducible);
    }
    Ok(frobenius_schur_unchecked(chi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(g: Result<FiniteGroup>) -> CharacterTable {
        CharacterTable::new(&Arc::new(g.unwrap())).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Cyclotomic> {
        v.iter().map(|&x| Cyclotomic::from_integer(x)).collect()
    }

    #[test]
    fn small_tables() {
        let c3 = table(FiniteGroup::cyclic(3));
        assert_eq!(c3.degrees(), vec![1, 1, 1]);
        assert!(c3.get(0).values().iter().all(Cyclotomic::is_one));
        let z3 = Cyclotomic::zeta(3);
        assert!(c3.irreducibles().iter().any(|c| c.value(1) == &z3));

        let q8 = table(FiniteGroup::quaternion(8));
        assert_eq!(q8.degrees(), vec![1, 1, 1, 1, 2]);
        let m21 = table(FiniteGroup::metacyclic(7, 3, 2));
        assert_eq!(m21.degrees(), vec![1, 1, 1, 3, 3]);
        assert_eq!(table(FiniteGroup::dihedral(6)).degrees(), vec![1, 1, 2]);
        assert_eq!(table(FiniteGroup::quaternion(12)).degrees(), vec![1, 1, 1, 1, 2, 2]);
    }

    #[test]
    fn trivial_character_comes_first() {
        for g in [
            FiniteGroup::dihedral(8),
            FiniteGroup::quaternion(16),
            FiniteGroup::abelian(&[2, 4]),
            FiniteGroup::metacyclic(5, 4, 2),
        ] {
            let t = table(g);
            assert_eq!(t.get(0), &ClassFunction::trivial(t.group()));
        }
    }

    #[test]
    fn quaternion_two_dim_character() {
        let t = table(FiniteGroup::quaternion(8));
        let chi = t.get(4);
        // 2×2 unitary model: x ↦ diag(i, −i), y ↦ [[0, −1], [1, 0]];
        // traces: x^a ↦ i^a + (−i)^a, x^a y ↦ 0
        let g = t.group();
        for e in 0..8 {
            let want = if e < 4 {
                Cyclotomic::root_of_unity(4, e as i64) + Cyclotomic::root_of_unity(4, -(e as i64))
            } else {
                Cyclotomic::zero()
            };
            assert_eq!(chi.at(e), &want, "element {e}");
        }
        assert_eq!(frobenius_schur(&t, chi).unwrap(), -1);
        assert_eq!(t.symplectic_chars(), vec![4]);
        assert_eq!(det_char(&t, chi).unwrap(), ClassFunction::trivial(g));

        let psi2 = adams(chi, 2);
        let triv = ClassFunction::trivial(g);
        assert_eq!(inner_product(&psi2, &triv).unwrap(), Cyclotomic::from_integer(-1));
        let m = t.decompose(&psi2).unwrap();
        assert_eq!(m, [-1, 1, 1, 1, 0].map(BigInt::from).to_vec());
        assert!(!t.is_character(&psi2));
    }

    #[test]
    fn regular_character() {
        let t = table(FiniteGroup::dihedral(10));
        let reg = ClassFunction::regular(t.group());
        assert_eq!(inner_product(&reg, t.get(0)).unwrap(), Cyclotomic::one());
        let m = t.decompose(&reg).unwrap();
        let degs: Vec<BigInt> = t.degrees().into_iter().map(BigInt::from).collect();
        assert_eq!(m, degs);
    }

    #[test]
    fn induction_from_cyclic_subgroup_of_q8() {
        let t = table(FiniteGroup::quaternion(8));
        let g = t.group().clone();
        let c4 = Subgroup::generated(&g, &[1]).unwrap();
        let h = c4.group().clone();
        // local index i is x^i, since the elements of ⟨x⟩ are 0..4
        let faithful = ClassFunction::from_fn(&h, |i| Cyclotomic::root_of_unity(4, i as i64));
        assert_eq!(induce(&faithful, &c4).unwrap(), *t.get(4));
        let lam = ClassFunction::from_fn(&h, |i| Cyclotomic::root_of_unity(2, i as i64));
        let ind = induce(&lam, &c4).unwrap();
        let m = t.decompose(&ind).unwrap();
        assert_eq!(m.iter().filter(|x| x == &&BigInt::from(1)).count(), 2);
        assert_eq!(m.iter().map(|x| x.to_i64().unwrap()).sum::<i64>(), 2);
        // reciprocity against every irreducible
        for chi in t.irreducibles() {
            assert_eq!(
                inner_product(&ind, chi).unwrap(),
                inner_product(&lam, &restrict(chi, &c4).unwrap()).unwrap()
            );
        }
        // classes of H8: {1}, {x, x³}, {x²}, {y, x²y}, {xy, x³y}
        assert_eq!(ind.values(), ints(&[2, -2, 2, 0, 0]).as_slice());
    }

    #[test]
    fn inflation_and_restriction() {
        let t = table(FiniteGroup::quaternion(8));
        let g = t.group().clone();
        let center = Subgroup::generated(&g, &[2]).unwrap();
        let q = crate::grp::quotient(&center).unwrap();
        let tq = CharacterTable::new(q.group()).unwrap();
        for chi in tq.irreducibles() {
            let inf = inflate(chi, &q).unwrap();
            assert!(t.is_irreducible(&inf));
        }
        let triv = restrict(&ClassFunction::trivial(&g), &center).unwrap();
        assert_eq!(triv, ClassFunction::trivial(center.group()));
    }

    #[test]
    fn determinant_in_h12() {
        let t = table(FiniteGroup::quaternion(12));
        let g = t.group();
        for chi in t.irreducibles().iter().filter(|c| c.degree_int() == Some(2)) {
            let det = det_char(&t, chi).unwrap();
            // eigenvalues at x are ζ and ζ⁻¹ for some 6th root ζ
            assert!(det.at(1).is_one());
            assert!(t.is_irreducible(&det));
            assert_eq!(det.degree_int(), Some(1));
        }
        let _ = g;
    }

    #[test]
    fn frobenius_schur_values() {
        let c3 = table(FiniteGroup::cyclic(3));
        assert_eq!(frobenius_schur(&c3, c3.get(0)).unwrap(), 1);
        assert_eq!(frobenius_schur(&c3, c3.get(1)).unwrap(), 0);
        let q8 = table(FiniteGroup::quaternion(8));
        let not_irr = q8.get(0) + q8.get(1);
        assert_eq!(frobenius_schur(&q8, &not_irr), Err(Error::NotIrreducible));
    }

    #[test]
    fn galois_permutation_of_c5() {
        let t = table(FiniteGroup::cyclic(5));
        let perm = t.galois_permutation(2).unwrap();
        assert_eq!(perm[0], 0);
        let mut sorted = perm.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1, 2, 3, 4]);
    }
}
