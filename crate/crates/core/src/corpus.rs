//! Deterministic corpora: families of small groups, every admissible local
//! datum on them, tame abelian realizations and a fixed set of global data.
//!
//! Everything here is generated in a fixed order so that suites and reports
//! are reproducible run to run.

use std::sync::Arc;

use crate::chartab::CharacterTable;
use crate::error::Result;
use crate::gauss::{finite_field, TameAbelianLocalDatum};
use crate::global::{GlobalExtensionData, PlaceRecord};
use crate::grp::{all_subgroups, normal_subgroups, FiniteGroup, Subgroup};
use crate::localext::LocalExtensionData;

/// Residue characteristics swept by the local suites.
pub const SWEEP_PRIMES: [u64; 4] = [2, 3, 5, 7];

/// Every group the family constructors produce up to `max_order`, without
/// obvious duplicates (e.g. D₄ is left to the abelian family), sorted by
/// order so that the first failure a sweep meets is a smallest one.
pub fn family_groups(max_order: usize) -> Result<Vec<Arc<FiniteGroup>>> {
    let mut out = Vec::new();
    let mut push = |g: FiniteGroup| {
        if g.order() <= max_order {
            out.push(Arc::new(g));
        }
    };
    for n in 1..=max_order.min(24) {
        push(FiniteGroup::cyclic(n)?);
    }
    for orders in abelian_invariants(max_order.min(24)) {
        push(FiniteGroup::abelian(&orders)?);
    }
    for n in (6..=max_order.min(24)).step_by(2) {
        push(FiniteGroup::dihedral(n)?);
    }
    for n in (8..=max_order.min(24)).step_by(4) {
        push(FiniteGroup::quaternion(n)?);
    }
    for (p, q, r) in [(7, 3, 2), (5, 4, 2), (3, 8, 2)] {
        if p * q <= max_order {
            push(FiniteGroup::metacyclic(p, q, r)?);
        }
    }
    if max_order >= 12 {
        push(FiniteGroup::alternating(4)?);
    }
    if max_order >= 24 {
        push(FiniteGroup::symmetric(4)?);
        push(FiniteGroup::special_linear_2(3)?);
    }
    let products: [(fn() -> Result<FiniteGroup>, fn() -> Result<FiniteGroup>); 6] = [
        (|| FiniteGroup::cyclic(2), || FiniteGroup::dihedral(8)),
        (|| FiniteGroup::cyclic(2), || FiniteGroup::quaternion(8)),
        (|| FiniteGroup::cyclic(3), || FiniteGroup::dihedral(6)),
        (|| FiniteGroup::cyclic(2), || FiniteGroup::alternating(4)),
        (|| FiniteGroup::cyclic(3), || FiniteGroup::quaternion(8)),
        (|| FiniteGroup::cyclic(4), || FiniteGroup::dihedral(6)),
    ];
    for (a, b) in products {
        let (a, b) = (a()?, b()?);
        if a.order() * b.order() <= max_order {
            push(FiniteGroup::direct_product(&a, &b)?);
        }
    }
    out.sort_by_key(|g| g.order());
    Ok(out)
}

/// Invariant-factor lists d₁ | d₂ | … with at least two factors, d₁ ≥ 2 and
/// product at most `max_order`: the non-cyclic abelian groups.
fn abelian_invariants(max_order: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, product: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        let last = *prefix.last().unwrap();
        let mut next = last;
        while product * next <= max {
            prefix.push(next);
            extend(prefix, product * next, max, out);
            prefix.pop();
            next += last;
        }
    }
    let mut out = Vec::new();
    for d in 2..=max_order {
        extend(&mut vec![d], d, max_order, &mut out);
    }
    out.sort_by_key(|v| (v.iter().product::<usize>(), v.clone()));
    out
}

/// The groups of the Adams-operation suite: cyclic groups up to order 12,
/// dihedral groups up to order 16, H₈, H₁₂, the metacyclic group of order 21
/// and abelian products up to order 16.
pub fn adams_groups() -> Result<Vec<Arc<FiniteGroup>>> {
    let mut out = Vec::new();
    for n in 1..=12 {
        out.push(FiniteGroup::cyclic(n)?);
    }
    for n in (6..=16).step_by(2) {
        out.push(FiniteGroup::dihedral(n)?);
    }
    out.push(FiniteGroup::quaternion(8)?);
    out.push(FiniteGroup::quaternion(12)?);
    out.push(FiniteGroup::metacyclic(7, 3, 2)?);
    for orders in abelian_invariants(16) {
        out.push(FiniteGroup::abelian(&orders)?);
    }
    Ok(out.into_iter().map(Arc::new).collect())
}

/// Character tables for a list of groups, computed once each.
pub fn tables(groups: &[Arc<FiniteGroup>]) -> Result<Vec<Arc<CharacterTable>>> {
    groups
        .iter()
        .map(|g| CharacterTable::new(g).map(Arc::new))
        .collect()
}

/// How much of the higher ramification filtration to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HigherGroups {
    /// Only Γ₀ ⊇ Γ₁, so every wild datum is weakly ramified.
    Minimal,
    /// Every descending chain of normal subgroups inside Γ₁, each member
    /// repeated once or twice.
    AllChains,
}

/// Least k ≥ 1 with x^k ∈ h.
pub(crate) fn order_modulo(g: &FiniteGroup, x: usize, h: &Subgroup) -> usize {
    let mut y = x;
    let mut k = 1;
    while !h.contains(y) {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

/// Smallest element of `within` whose image generates `within`/`normal`,
/// if that quotient is cyclic.
pub fn least_generator_modulo(within: &Subgroup, normal: &Subgroup) -> Option<usize> {
    let g = within.parent();
    let index = within.order() / normal.order();
    within
        .elements()
        .iter()
        .copied()
        .find(|&x| order_modulo(g, x, normal) == index)
}

/// The Sylow p-subgroup of `h` when it is normal, i.e. when the elements of
/// p-power order form a subgroup of the right size.
pub fn normal_sylow(h: &Subgroup, p: u64) -> Option<Subgroup> {
    let g = h.parent();
    let p = p as usize;
    let is_p_power = |mut n: usize| {
        while n % p == 0 {
            n /= p;
        }
        n == 1
    };
    let mut sylow_order = 1;
    while h.order() % (sylow_order * p) == 0 {
        sylow_order *= p;
    }
    let elems: Vec<usize> = h
        .elements()
        .iter()
        .copied()
        .filter(|&x| is_p_power(g.element_order(x) as usize))
        .collect();
    if elems.len() != sylow_order {
        return None;
    }
    Subgroup::from_elements(g, &elems).ok()
}

fn chains_from(top: &Subgroup, normals: &[Subgroup]) -> Vec<Vec<Subgroup>> {
    let mut tails = vec![Vec::new()];
    for n in normals {
        if !n.is_trivial() && n.order() < top.order() && n.is_subset_of(top) {
            tails.extend(chains_from(n, normals));
        }
    }
    let mut out = Vec::with_capacity(2 * tails.len());
    for reps in 1..=2 {
        for tail in &tails {
            let mut chain = vec![top.clone(); reps];
            chain.extend(tail.iter().cloned());
            out.push(chain);
        }
    }
    out
}

/// Every valid local datum on the table's group with residue characteristic
/// `p`: Γ₀ ranges over normal subgroups with cyclic quotient, Γ₁ is the
/// (necessarily normal) Sylow p-subgroup of Γ₀ and the Frobenius lift is the
/// least element generating Γ/Γ₀.
pub fn local_data(
    table: &Arc<CharacterTable>,
    p: u64,
    higher: HigherGroups,
    f_abs: u32,
) -> Result<Vec<LocalExtensionData>> {
    let g = table.group();
    let whole = Subgroup::whole(g);
    let normals = normal_subgroups(g);
    let mut out = Vec::new();
    for g0 in &normals {
        let Some(frob) = least_generator_modulo(&whole, g0) else {
            continue;
        };
        let Some(g1) = normal_sylow(g0, p) else {
            continue;
        };
        if least_generator_modulo(g0, &g1).is_none() {
            continue;
        }
        let chains = if g1.is_trivial() {
            vec![Vec::new()]
        } else {
            match higher {
                HigherGroups::Minimal => vec![vec![g1.clone()]],
                HigherGroups::AllChains => chains_from(&g1, &normals),
            }
        };
        for chain in chains {
            let filtration = if g0.is_trivial() {
                Vec::new()
            } else {
                std::iter::once(g0.clone()).chain(chain).collect()
            };
            out.push(LocalExtensionData::new(table, p, filtration, frob, f_abs)?);
        }
    }
    Ok(out)
}

/// Local data over all family groups of order at most `max_order` and all
/// sweep primes.
pub fn local_corpus(max_order: usize, higher: HigherGroups) -> Result<Vec<LocalExtensionData>> {
    let mut out = Vec::new();
    for table in tables(&family_groups(max_order)?)? {
        for p in SWEEP_PRIMES {
            out.extend(local_data(&table, p, higher, 1)?);
        }
    }
    Ok(out)
}

/// Tame abelian data on abelian family groups of order at most `max_order`,
/// over every residue field F_q with q ≤ `max_q` and e | q − 1.
pub fn tame_abelian_corpus(max_order: usize, max_q: u64) -> Result<Vec<TameAbelianLocalDatum>> {
    let mut out = Vec::new();
    let groups: Vec<_> = family_groups(max_order)?
        .into_iter()
        .filter(|g| g.is_abelian())
        .collect();
    for table in tables(&groups)? {
        for p in (2..=max_q).filter(|&p| crate::chartab::modp::is_prime(p)) {
            let mut q = p;
            let mut f = 1;
            while q <= max_q {
                let field = finite_field(p, f)?;
                for base in local_data(&table, p, HigherGroups::Minimal, f)? {
                    if base.is_tame() && (q - 1) % base.inertia().order() as u64 == 0 {
                        out.push(TameAbelianLocalDatum::new(base, field.clone())?);
                    }
                }
                q *= p;
                f += 1;
            }
        }
    }
    Ok(out)
}

/// Least element of the given order.
fn least_of_order(g: &FiniteGroup, k: u32) -> usize {
    (0..g.order())
        .find(|&x| g.element_order(x) == k)
        .expect("an element of the requested order")
}

fn sub(g: &Arc<FiniteGroup>, gens: &[usize]) -> Result<Subgroup> {
    Subgroup::generated(g, gens)
}

fn normal_of_order(g: &Arc<FiniteGroup>, n: usize) -> Subgroup {
    normal_subgroups(g)
        .into_iter()
        .find(|s| s.order() == n)
        .expect("a normal subgroup of the requested order")
}

/// A place whose Frobenius is the least element generating decomp/Γ₀.
fn place(
    label: &str,
    decomp: Subgroup,
    p: u64,
    filtration: Vec<Subgroup>,
    residue_degree: Option<u32>,
) -> Result<PlaceRecord> {
    let g0 = filtration
        .first()
        .cloned()
        .unwrap_or_else(|| Subgroup::trivial(decomp.parent()));
    let frob = least_generator_modulo(&decomp, &g0).expect("cyclic quotient by inertia");
    let f = residue_degree.unwrap_or(1);
    let residue = residue_degree.map(|f| finite_field(p, f)).transpose()?;
    PlaceRecord::from_parent(label, decomp, p, &filtration, frob, f, residue)
}

fn global(g: FiniteGroup, places: impl FnOnce(&Arc<FiniteGroup>) -> Result<Vec<PlaceRecord>>) -> Result<GlobalExtensionData> {
    let g = Arc::new(g);
    let table = Arc::new(CharacterTable::new(&g)?);
    GlobalExtensionData::new(&table, places(&g)?)
}

/// Ten global data mixing tame, wild, unramified and totally ramified places
/// over abelian, dihedral, quaternion, metacyclic and symmetric groups.
pub fn global_fixtures() -> Result<Vec<(String, GlobalExtensionData)>> {
    let mut out = Vec::new();
    let mut add = |name: &str, data: GlobalExtensionData| out.push((name.to_string(), data));

    add(
        "C6 tame and unramified",
        global(FiniteGroup::cyclic(6)?, |g| {
            Ok(vec![
                place("v7", Subgroup::whole(g), 7, vec![sub(g, &[2])?], Some(1))?,
                place("v5", sub(g, &[3])?, 5, vec![], Some(1))?,
            ])
        })?,
    );
    add(
        "S3 three places",
        global(FiniteGroup::dihedral(6)?, |g| {
            Ok(vec![
                place("v7", sub(g, &[1])?, 7, vec![sub(g, &[1])?], None)?,
                place("v5", sub(g, &[3])?, 5, vec![], None)?,
                place("v13", Subgroup::whole(g), 13, vec![sub(g, &[1])?], None)?,
            ])
        })?,
    );
    add(
        "D8 two tame places",
        global(FiniteGroup::dihedral(8)?, |g| {
            Ok(vec![
                place("v3", sub(g, &[1])?, 3, vec![sub(g, &[2])?], None)?,
                place("v5", sub(g, &[4])?, 5, vec![sub(g, &[4])?], None)?,
            ])
        })?,
    );
    add(
        "H8 tame",
        global(FiniteGroup::quaternion(8)?, |g| {
            Ok(vec![
                place("v3", Subgroup::whole(g), 3, vec![sub(g, &[1])?], None)?,
                place("v5", sub(g, &[4])?, 5, vec![], None)?,
            ])
        })?,
    );
    add(
        "H8 wild",
        global(FiniteGroup::quaternion(8)?, |g| {
            let w = Subgroup::whole(g);
            Ok(vec![place("v2", w.clone(), 2, vec![w.clone(), w, sub(g, &[2])?], None)?])
        })?,
    );
    add(
        "H12 symplectic",
        global(FiniteGroup::quaternion(12)?, |g| {
            Ok(vec![place("v7", Subgroup::whole(g), 7, vec![sub(g, &[2])?], None)?])
        })?,
    );
    add(
        "A4 wild and tame",
        global(FiniteGroup::alternating(4)?, |g| {
            let v4 = normal_of_order(g, 4);
            let c3 = sub(g, &[least_of_order(g, 3)])?;
            Ok(vec![
                place("v2", v4.clone(), 2, vec![v4.clone(), v4.clone()], None)?,
                place("v7", c3.clone(), 7, vec![c3], None)?,
                place("w2", Subgroup::whole(g), 2, vec![v4.clone(), v4], None)?,
            ])
        })?,
    );
    add(
        "C7:C3 odd order",
        global(FiniteGroup::metacyclic(7, 3, 2)?, |g| {
            let c7 = sub(g, &[1])?;
            let c3 = sub(g, &[7])?;
            Ok(vec![
                place("v29", Subgroup::whole(g), 29, vec![c7], None)?,
                place("v5", c3.clone(), 5, vec![], None)?,
                place("v7", c3.clone(), 7, vec![c3], None)?,
            ])
        })?,
    );
    add(
        "V4 three tame places",
        global(FiniteGroup::abelian(&[2, 2])?, |g| {
            Ok(vec![
                place("v3", sub(g, &[1])?, 3, vec![sub(g, &[1])?], Some(1))?,
                place("v5", sub(g, &[2])?, 5, vec![sub(g, &[2])?], Some(1))?,
                place("v7", sub(g, &[3])?, 7, vec![sub(g, &[3])?], Some(1))?,
            ])
        })?,
    );
    add(
        "S4 wild and tame",
        global(FiniteGroup::symmetric(4)?, |g| {
            let v4 = normal_of_order(g, 4);
            let a4 = normal_of_order(g, 12);
            let d8 = all_subgroups(g)
                .into_iter()
                .find(|s| s.order() == 8)
                .expect("a Sylow 2-subgroup");
            let c3 = sub(g, &[least_of_order(g, 3)])?;
            Ok(vec![
                place("v2", d8.clone(), 2, vec![d8.clone(), d8, v4.clone()], None)?,
                place("v5", c3.clone(), 5, vec![c3], None)?,
                place("w2", Subgroup::whole(g), 2, vec![a4, v4], None)?,
            ])
        })?,
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_invariant_lists() {
        let lists = abelian_invariants(16);
        assert!(lists.contains(&vec![2, 2]) && lists.contains(&vec![2, 2, 2, 2]) && lists.contains(&vec![4, 4]));
        assert!(!lists.contains(&vec![2, 3]));
        assert!(lists.iter().all(|v| v.windows(2).all(|w| w[1] % w[0] == 0)));
    }

    #[test]
    fn local_data_of_c3() {
        let t = tables(&[Arc::new(FiniteGroup::cyclic(3).unwrap())]).unwrap().remove(0);
        // p = 3: unramified, and C3 wild with chains [C3], [C3, C3]
        assert_eq!(local_data(&t, 3, HigherGroups::AllChains, 1).unwrap().len(), 3);
        // p = 7: unramified and tame
        assert_eq!(local_data(&t, 7, HigherGroups::AllChains, 1).unwrap().len(), 2);
    }

    #[test]
    fn a4_has_a_weakly_ramified_wild_datum() {
        let t = tables(&[Arc::new(FiniteGroup::alternating(4).unwrap())]).unwrap().remove(0);
        let data = local_data(&t, 2, HigherGroups::Minimal, 1).unwrap();
        assert!(data.iter().any(|d| d.inertia().order() == 12 && d.wild_inertia().order() == 4));
    }

    #[test]
    fn fixtures_build() {
        let fixtures = global_fixtures().unwrap();
        assert_eq!(fixtures.len(), 10);
    }
}
