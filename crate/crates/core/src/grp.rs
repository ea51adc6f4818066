//! Finite groups given by explicit multiplication tables.
//!
//! Family constructors number elements by the normal form of the presentation
//! word, `x^i y^j ↦ j·|x| + i`, so indices are stable across runs.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Above this order the associativity check samples triples.
const FULL_CHECK_LIMIT: usize = 512;
const SAMPLED_TRIPLES: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyData {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    exponent: u32,
    /// power[c][k mod exponent] is the class of g^k for g in class c
    power: Vec<Vec<usize>>,
    inverse_class: Vec<usize>,
}

impl ConjugacyData {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    /// Smallest element index of the class.
    pub fn rep(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    /// Class of the k-th powers of the elements of class `c`.
    pub fn power_class(&self, c: usize, k: i64) -> usize {
        self.power[c][k.rem_euclid(self.exponent as i64) as usize]
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse_class[c]
    }
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
    label: Option<String>,
    element_orders: Vec<u32>,
    exponent: u32,
    conjugacy: ConjugacyData,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Validates and wraps an explicit multiplication table
    /// (`table[a][b]` is the index of `a·b`).
    pub fn from_table(table: &[Vec<usize>], label: Option<String>) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        let mut mul = Vec::with_capacity(n * n);
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!(
                    "row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, order: n });
                }
                mul.push(x as u32);
            }
        }
        FiniteGroup::from_flat(n, mul, label)
    }

    fn from_flat(n: usize, mul: Vec<u32>, label: Option<String>) -> Result<FiniteGroup> {
        let at = |a: usize, b: usize| mul[a * n + b] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        let mut inv = vec![0u32; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| Error::InvalidTable(format!("element {a} has no inverse")))?;
            inv[a] = b as u32;
        }
        if n <= FULL_CHECK_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = at(a, b);
                    for c in 0..n {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(Error::NotAssociative { a, b, c });
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..SAMPLED_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if at(at(a, b), c) != at(a, at(b, c)) {
                    return Err(Error::NotAssociative { a, b, c });
                }
            }
        }
        let mut element_orders = vec![0u32; n];
        for g in 0..n {
            let mut x = g;
            let mut k = 1;
            while x != identity {
                x = at(x, g);
                k += 1;
            }
            element_orders[g] = k;
        }
        let exponent = element_orders.iter().fold(1u32, |a, &b| a.lcm(&b));
        let conjugacy = compute_conjugacy(n, &mul, &inv, identity, exponent);
        Ok(FiniteGroup {
            order: n,
            mul,
            inv,
            identity,
            label,
            element_orders,
            exponent,
            conjugacy,
        })
    }

    fn from_fn(n: usize, label: String, f: impl Fn(usize, usize) -> usize) -> Result<FiniteGroup> {
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mul.push(f(a, b) as u32);
            }
        }
        FiniteGroup::from_flat(n, mul, Some(label))
    }

    /// Cyclic group C_n; element i is x^i.
    pub fn cyclic(n: usize) -> Result<FiniteGroup> {
        if n == 0 {
            return Err(Error::InvalidParameters("cyclic group of order 0".into()));
        }
        FiniteGroup::from_fn(n, format!("C{n}"), |a, b| (a + b) % n)
    }

    /// Dihedral group of the given (even) order 2n: x^n = y^2 = 1, yxy⁻¹ = x⁻¹.
    pub fn dihedral(order: usize) -> Result<FiniteGroup> {
        if order < 2 || order % 2 != 0 {
            return Err(Error::InvalidParameters(format!(
                "dihedral order must be even and positive, got {order}"
            )));
        }
        let n = order / 2;
        FiniteGroup::from_fn(order, format!("D{order}"), |a, b| {
            let (i, j) = (a % n, a / n);
            let (k, l) = (b % n, b / n);
            let k = if j == 1 { (n - k) % n } else { k };
            (i + k) % n + n * ((j + l) % 2)
        })
    }

    /// Generalised quaternion group H_{4m}: x^{2m} = 1, y² = x^m, yxy⁻¹ = x⁻¹.
    pub fn quaternion(order: usize) -> Result<FiniteGroup> {
        if order < 4 || order % 4 != 0 {
            return Err(Error::InvalidParameters(format!(
                "quaternion order must be a positive multiple of 4, got {order}"
            )));
        }
        let m = order / 4;
        let n = 2 * m;
        FiniteGroup::from_fn(order, format!("H{order}"), |a, b| {
            let (i, j) = (a % n, a / n);
            let (k, l) = (b % n, b / n);
            let k = if j == 1 { (n - k) % n } else { k };
            let mut e = i + k;
            if j + l == 2 {
                e += m;
            }
            e % n + n * ((j + l) % 2)
        })
    }

    /// C_p ⋊ C_q with y x y⁻¹ = x^r, requiring r^q ≡ 1 (mod p).
    pub fn metacyclic(p: usize, q: usize, r: usize) -> Result<FiniteGroup> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidParameters("metacyclic orders must be positive".into()));
        }
        let mut rq = 1 % p;
        for _ in 0..q {
            rq = rq * r % p;
        }
        if rq != 1 % p || (p > 1 && r.gcd(&p) != 1) {
            return Err(Error::InvalidParameters(format!(
                "{r}^{q} is not 1 modulo {p}"
            )));
        }
        let mut rpow = vec![1 % p; q];
        for j in 1..q {
            rpow[j] = rpow[j - 1] * r % p;
        }
        FiniteGroup::from_fn(p * q, format!("C{p}:C{q}[{r}]"), |a, b| {
            let (i, j) = (a % p, a / p);
            let (k, l) = (b % p, b / p);
            (i + k * rpow[j]) % p + p * ((j + l) % q)
        })
    }

    /// Direct product; the pair (a, b) has index a·|B| + b.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
        let nb = b.order;
        let label = format!(
            "{}x{}",
            a.label.as_deref().unwrap_or("G"),
            b.label.as_deref().unwrap_or("G")
        );
        FiniteGroup::from_fn(a.order * nb, label, |x, y| {
            a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)
        })
    }

    /// Direct product of cyclic groups of the given orders.
    pub fn abelian(orders: &[usize]) -> Result<FiniteGroup> {
        let mut g = FiniteGroup::cyclic(1)?;
        for &n in orders {
            g = FiniteGroup::direct_product(&g, &FiniteGroup::cyclic(n)?)?;
        }
        g.label = Some(
            orders
                .iter()
                .map(|n| format!("C{n}"))
                .collect::<Vec<_>>()
                .join("x"),
        );
        Ok(g)
    }

    /// Symmetric group S_n on {0, …, n−1}; permutations are numbered in
    /// lexicographic order of their images and composed right to left.
    pub fn symmetric(n: usize) -> Result<FiniteGroup> {
        FiniteGroup::permutations(n, false, format!("S{n}"))
    }

    /// Alternating group A_n, numbered like [`FiniteGroup::symmetric`].
    pub fn alternating(n: usize) -> Result<FiniteGroup> {
        FiniteGroup::permutations(n, true, format!("A{n}"))
    }

    fn permutations(n: usize, even_only: bool, label: String) -> Result<FiniteGroup> {
        if n == 0 || n > 6 {
            return Err(Error::InvalidParameters(format!(
                "permutation degree must be between 1 and 6, got {n}"
            )));
        }
        let mut perms = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            if !even_only || parity(&cur) == 0 {
                perms.push(cur.clone());
            }
            if !next_permutation(&mut cur) {
                break;
            }
        }
        let index: HashMap<Vec<usize>, usize> =
            perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        FiniteGroup::from_fn(perms.len(), label, |a, b| {
            let c: Vec<usize> = (0..n).map(|i| perms[a][perms[b][i]]).collect();
            index[&c]
        })
    }

    /// SL(2, p) for a prime p. The identity comes first, the remaining
    /// matrices [[a, b], [c, d]] follow in lexicographic order of (a, b, c, d).
    pub fn special_linear_2(p: usize) -> Result<FiniteGroup> {
        if p < 2 || p > 7 || (2..p).any(|d| p % d == 0) {
            return Err(Error::InvalidParameters(format!(
                "SL(2, p) needs a prime p ≤ 7, got {p}"
            )));
        }
        let id = [1, 0, 0, 1];
        let mut mats = vec![id];
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        let m = [a, b, c, d];
                        if (a * d + p * p - b * c) % p == 1 % p && m != id {
                            mats.push(m);
                        }
                    }
                }
            }
        }
        let index: HashMap<[usize; 4], usize> = mats.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        FiniteGroup::from_fn(mats.len(), format!("SL2({p})"), |x, y| {
            let ([a, b, c, d], [e, f, g, h]) = (mats[x], mats[y]);
            index[&[(a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p]]
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let o = self.element_orders[g] as i64;
        let mut k = k.rem_euclid(o);
        let mut x = self.identity;
        while k > 0 {
            x = self.mul(x, g);
            k -= 1;
        }
        x
    }

    pub fn conjugate(&self, g: usize, by: usize) -> usize {
        self.mul(self.mul(by, g), self.inv(by))
    }

    pub fn element_order(&self, g: usize) -> u32 {
        self.element_orders[g]
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn conjugacy(&self) -> &ConjugacyData {
        &self.conjugacy
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn check_index(&self, g: usize) -> Result<()> {
        if g < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: g,
                order: self.order,
            })
        }
    }
}

fn parity(perm: &[usize]) -> usize {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Conjugacy classes and power maps, computed from the table.
pub fn conjugacy(g: &FiniteGroup) -> ConjugacyData {
    g.conjugacy.clone()
}

fn compute_conjugacy(n: usize, mul: &[u32], inv: &[u32], identity: usize, exponent: u32) -> ConjugacyData {
    let at = |a: usize, b: usize| mul[a * n + b] as usize;
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for g in 0..n {
        if class_of[g] != usize::MAX {
            continue;
        }
        let c = classes.len();
        let mut members = BTreeSet::new();
        for x in 0..n {
            members.insert(at(at(x, g), inv[x] as usize));
        }
        for &m in &members {
            class_of[m] = c;
        }
        classes.push(members.into_iter().collect());
    }
    let power = classes
        .iter()
        .map(|cl| {
            let g = cl[0];
            let mut x = identity;
            (0..exponent)
                .map(|_| {
                    let c = class_of[x];
                    x = at(x, g);
                    c
                })
                .collect()
        })
        .collect();
    let inverse_class = classes
        .iter()
        .map(|cl| class_of[inv[cl[0]] as usize])
        .collect();
    ConjugacyData {
        classes,
        class_of,
        exponent,
        power,
        inverse_class,
    }
}

/// A subgroup together with its own relabelled table: element i of
/// [`Subgroup::group`] is `elements()[i]` of the parent.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<usize>,
    group: Arc<FiniteGroup>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && *self.parent == *other.parent
    }
}

impl Subgroup {
    /// Closure of `gens` under multiplication.
    pub fn generated(parent: &Arc<FiniteGroup>, gens: &[usize]) -> Result<Subgroup> {
        for &g in gens {
            parent.check_index(g)?;
        }
        let mut set = BTreeSet::from([parent.identity()]);
        let mut frontier = vec![parent.identity()];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = parent.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Subgroup::build(parent, set.into_iter().collect())
    }

    /// Wraps an explicit element list after checking closure.
    pub fn from_elements(parent: &Arc<FiniteGroup>, elements: &[usize]) -> Result<Subgroup> {
        for &g in elements {
            parent.check_index(g)?;
        }
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        if !set.contains(&parent.identity()) {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        for &a in &set {
            if !set.contains(&parent.inv(a)) {
                return Err(Error::NotSubgroup(format!("inverse of {a} missing")));
            }
            for &b in &set {
                if !set.contains(&parent.mul(a, b)) {
                    return Err(Error::NotSubgroup(format!("product {a}*{b} missing")));
                }
            }
        }
        Subgroup::build(parent, set.into_iter().collect())
    }

    pub fn trivial(parent: &Arc<FiniteGroup>) -> Subgroup {
        Subgroup::build(parent, vec![parent.identity()]).expect("trivial subgroup")
    }

    pub fn whole(parent: &Arc<FiniteGroup>) -> Subgroup {
        Subgroup::build(parent, (0..parent.order()).collect()).expect("whole group")
    }

    fn build(parent: &Arc<FiniteGroup>, elements: Vec<usize>) -> Result<Subgroup> {
        let mut local = vec![usize::MAX; parent.order()];
        for (i, &g) in elements.iter().enumerate() {
            local[g] = i;
        }
        let n = elements.len();
        let mut mul = Vec::with_capacity(n * n);
        for &a in &elements {
            for &b in &elements {
                mul.push(local[parent.mul(a, b)] as u32);
            }
        }
        let label = if n == parent.order() {
            parent.label.clone()
        } else {
            None
        };
        let group = FiniteGroup::from_flat(n, mul, label)?;
        Ok(Subgroup {
            parent: parent.clone(),
            elements,
            group: Arc::new(group),
        })
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn local_index(&self, g: usize) -> Option<usize> {
        self.elements.binary_search(&g).ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        self.elements
            .iter()
            .all(|&h| (0..g.order()).all(|x| self.contains(g.conjugate(h, x))))
    }

    /// Whether the subgroup is cyclic.
    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u32;
        self.elements
            .iter()
            .any(|&g| self.parent.element_order(g) == n)
    }

    /// Smallest element generating the subgroup, if cyclic.
    pub fn cyclic_generator(&self) -> Option<usize> {
        let n = self.order() as u32;
        self.elements
            .iter()
            .copied()
            .find(|&g| self.parent.element_order(g) == n)
    }
}

/// G/N with its coset table; cosets are numbered by their smallest element.
#[derive(Clone, Debug)]
pub struct Quotient {
    normal: Subgroup,
    group: Arc<FiniteGroup>,
    projection: Vec<usize>,
}

impl Quotient {
    pub fn normal(&self) -> &Subgroup {
        &self.normal
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        self.normal.parent()
    }

    /// Image of a parent element in the quotient.
    pub fn project(&self, g: usize) -> usize {
        self.projection[g]
    }
}

pub fn quotient(normal: &Subgroup) -> Result<Quotient> {
    if !normal.is_normal() {
        return Err(Error::NotNormal);
    }
    let g = normal.parent();
    let mut projection = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if projection[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &n in normal.elements() {
            projection[g.mul(x, n)] = c;
        }
    }
    let k = reps.len();
    let mut mul = Vec::with_capacity(k * k);
    for &a in &reps {
        for &b in &reps {
            mul.push(projection[g.mul(a, b)] as u32);
        }
    }
    let label = g.label().map(|l| format!("{l}/N{}", normal.order()));
    let group = FiniteGroup::from_flat(k, mul, label)?;
    Ok(Quotient {
        normal: normal.clone(),
        group: Arc::new(group),
        projection,
    })
}

/// Every subgroup, ordered by size and then by element list.
pub fn all_subgroups(g: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue: Vec<Vec<usize>> = Vec::new();
    for x in 0..g.order() {
        let s = Subgroup::generated(g, &[x]).expect("valid index");
        if found.insert(s.elements.clone()) {
            queue.push(s.elements.clone());
        }
    }
    let cyclic: Vec<Vec<usize>> = found.iter().cloned().collect();
    while let Some(h) = queue.pop() {
        for c in &cyclic {
            if c.iter().all(|x| h.binary_search(x).is_ok()) {
                continue;
            }
            let mut gens = h.clone();
            gens.push(c[1.min(c.len() - 1)]);
            gens.extend_from_slice(c);
            let s = Subgroup::generated(g, &gens).expect("valid index");
            if found.insert(s.elements.clone()) {
                queue.push(s.elements.clone());
            }
        }
    }
    let mut subs: Vec<Vec<usize>> = found.into_iter().collect();
    subs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subs.into_iter()
        .map(|e| Subgroup::build(g, e).expect("closed subset"))
        .collect()
}

pub fn normal_subgroups(g: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    all_subgroups(g).into_iter().filter(Subgroup::is_normal).collect()
}
