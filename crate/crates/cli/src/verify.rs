//! Property suites over the generated corpus. Each check walks the corpus in
//! increasing group order and keeps the first counterexample it meets, so a
//! failing verdict always names a smallest witness.

use std::sync::Arc;

use galjac_core::center::is_rational_equivariant;
use galjac_core::chartab::{
    adams, det_char, frobenius_schur, induce, inflate, restrict, CharacterTable, ClassFunction,
};
use galjac_core::corpus::{
    adams_groups, family_groups, global_fixtures, local_corpus, tables, tame_abelian_corpus, HigherGroups,
};
use galjac_core::gauss::finite_field;
use galjac_core::global::{GlobalExtensionData, PlaceRecord, Sign};
use galjac_core::grp::{all_subgroups, normal_subgroups, quotient, Subgroup};
use galjac_core::localext::LocalExtensionData;
use galjac_core::{Cyclotomic, Error, Result};
use num_integer::Integer;

use crate::report::{Report, Verdict};

pub const SUITES: [&str; 8] = [
    "hilbert",
    "adams",
    "twisted-y",
    "gauss",
    "j2",
    "decomposition",
    "symplectic",
    "all",
];

/// Field sizes of the Gauss-sum suite.
pub const GAUSS_FIELDS: [u64; 11] = [3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 49];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    pub max_order: usize,
    pub precision_cap: u32,
}

impl Default for Params {
    fn default() -> Params {
        Params {
            max_order: 24,
            precision_cap: galjac_core::cyclo::DEFAULT_PRECISION_CAP,
        }
    }
}

/// Accumulates one property over many cases.
struct Check {
    name: String,
    checked: usize,
    witness: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            checked: 0,
            witness: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn verdict(self) -> Verdict {
        match self.witness {
            None => Verdict::pass(self.name, format!("{} cases", self.checked)),
            Some(w) => Verdict::fail(self.name, format!("smallest counterexample: {w}")),
        }
    }
}

fn label(g: &galjac_core::grp::FiniteGroup) -> String {
    g.label().map(str::to_string).unwrap_or_else(|| format!("group of order {}", g.order()))
}

/// Short description of a local datum for witnesses and reports.
pub fn describe_local(d: &LocalExtensionData) -> String {
    let orders: Vec<String> = d.filtration().iter().map(|s| s.order().to_string()).collect();
    format!(
        "{} p={} |Γ_i|=[{}] frobenius={}",
        label(d.group()),
        d.p(),
        orders.join(","),
        d.frobenius()
    )
}

pub fn run(suite: &str, params: Params) -> Result<Report> {
    if !SUITES.contains(&suite) {
        return Err(Error::UnknownSuite {
            name: suite.to_string(),
            available: SUITES.join(", "),
        });
    }
    let mut report = Report::new(
        "verify",
        serde_json::json!({
            "suite": suite,
            "max_order": params.max_order,
            "precision_cap": params.precision_cap,
        }),
    );
    let names: Vec<&str> = if suite == "all" {
        SUITES[..SUITES.len() - 1].to_vec()
    } else {
        vec![suite]
    };
    for name in names {
        let verdicts = match name {
            "hilbert" => hilbert(params)?,
            "adams" => adams_suite(params)?,
            "twisted-y" => twisted_y(params)?,
            "gauss" => gauss()?,
            "j2" => j2(params)?,
            "decomposition" => decomposition()?,
            "symplectic" => symplectic(params)?,
            _ => unreachable!("suite names are checked above"),
        };
        for mut v in verdicts {
            v.check = format!("{name}: {}", v.check);
            report.verdict(v);
        }
    }
    report.provenance("corpus", "family groups sorted by order; local data over p in {2, 3, 5, 7}");
    Ok(report)
}

/// Σ_{g ≠ 1} #{i : g ∈ Γ_i}, counted element by element.
fn brute_different(d: &LocalExtensionData) -> u64 {
    let g = d.group();
    (0..g.order())
        .filter(|&x| x != g.identity())
        .map(|x| d.filtration().iter().filter(|s| s.contains(x)).count() as u64)
        .sum()
}

fn hilbert(params: Params) -> Result<Vec<Verdict>> {
    let data = local_corpus(params.max_order, HigherGroups::AllChains)?;
    let mut different = Check::new("different valuation equals the element-wise sum");
    let mut congruence = Check::new("weakly ramified with square root implies n ≡ 1 mod |Γ₁|");
    let mut tame_odd = Check::new("tame with square root implies |Γ₀| odd");
    let mut p_odd = Check::new("odd p with square root implies |Γ₀| odd");
    for d in &data {
        different.record(d.different_valuation() == brute_different(d), || describe_local(d));
        if d.sqrt_inv_different().is_none() {
            continue;
        }
        let odd_inertia = d.inertia().order() % 2 == 1;
        if d.is_weakly_ramified() {
            congruence.record(d.freeness_congruence()?, || describe_local(d));
        }
        if d.is_tame() {
            tame_odd.record(odd_inertia, || describe_local(d));
        }
        if d.p() % 2 == 1 {
            p_odd.record(odd_inertia, || describe_local(d));
        }
    }
    Ok(vec![different.verdict(), congruence.verdict(), tame_odd.verdict(), p_odd.verdict()])
}

fn power(chi: &ClassFunction, k: u32) -> Result<ClassFunction> {
    let values = chi.values().iter().map(|v| v.pow(k as i64)).collect::<Result<Vec<_>>>()?;
    ClassFunction::new(chi.group(), values)
}

fn adams_suite(params: Params) -> Result<Vec<Verdict>> {
    let groups: Vec<_> = adams_groups()?
        .into_iter()
        .filter(|g| g.order() <= params.max_order)
        .collect();
    let mut integral = Check::new("psi_k of an irreducible is a virtual character");
    let mut det = Check::new("det of psi_k(chi) equals (det chi)^k");
    let mut res = Check::new("psi_k commutes with restriction");
    let mut inf = Check::new("psi_k commutes with inflation");
    let mut ind = Check::new("psi_k commutes with induction for odd order and k prime to |G|");
    for t in tables(&groups)? {
        let g = t.group();
        let exp = g.exponent();
        let subgroups = all_subgroups(g);
        let sub_tables = subgroups
            .iter()
            .map(|h| CharacterTable::new(h.group()))
            .collect::<Result<Vec<_>>>()?;
        for k in 1..=exp {
            for (i, chi) in t.irreducibles().iter().enumerate() {
                let psi = adams(chi, k as i64);
                let w = || format!("{} chi_{i} k={k}", label(g));
                integral.record(t.decompose(&psi).is_ok(), w);
                det.record(det_char(&t, &psi)? == power(&det_char(&t, chi)?, k)?, w);
                for h in &subgroups {
                    let lhs = restrict(&psi, h)?;
                    let rhs = adams(&restrict(chi, h)?, k as i64);
                    res.record(lhs == rhs, || format!("{} chi_{i} k={k} H={:?}", label(g), h.elements()));
                }
            }
            for n in normal_subgroups(g) {
                let q = quotient(&n)?;
                let qt = CharacterTable::new(q.group())?;
                for (i, phi) in qt.irreducibles().iter().enumerate() {
                    let lhs = inflate(&adams(phi, k as i64), &q)?;
                    let rhs = adams(&inflate(phi, &q)?, k as i64);
                    inf.record(lhs == rhs, || {
                        format!("{} N={:?} phi_{i} k={k}", label(g), n.elements())
                    });
                }
            }
            if g.order() % 2 == 1 && (k as usize).gcd(&g.order()) == 1 {
                for (h, ht) in subgroups.iter().zip(&sub_tables) {
                    for (i, phi) in ht.irreducibles().iter().enumerate() {
                        let lhs = adams(&induce(phi, h)?, k as i64);
                        let rhs = induce(&adams(phi, k as i64), h)?;
                        ind.record(lhs == rhs, || {
                            format!("{} H={:?} phi_{i} k={k}", label(g), h.elements())
                        });
                    }
                }
            }
        }
    }
    let mut out = vec![integral.verdict(), det.verdict(), res.verdict(), inf.verdict(), ind.verdict()];
    out.push(quaternion_counterexample()?);
    Ok(out)
}

/// ψ₂ ∘ ind − ind ∘ ψ₂ on a faithful character of C₄ ⊂ H₈ is χ − 1 for the
/// linear χ with kernel C₄.
fn quaternion_counterexample() -> Result<Verdict> {
    let name = "H8 over C4 with k = 2 gives chi - trivial";
    let g = Arc::new(galjac_core::grp::FiniteGroup::quaternion(8)?);
    let t = CharacterTable::new(&g)?;
    let c4 = Subgroup::generated(&g, &[1])?;
    let ht = CharacterTable::new(c4.group())?;
    let phi = ht
        .irreducibles()
        .iter()
        .find(|phi| phi.at(1).order() == 4)
        .ok_or_else(|| Error::Internal("no faithful character of C4".into()))?;
    let diff = adams(&induce(phi, &c4)?, 2) - induce(&adams(phi, 2), &c4)?;
    let kernel_c4 = t
        .irreducibles()
        .iter()
        .position(|chi| chi.degree_int() == Some(1) && chi.at(1).is_one() && !chi.at(4).is_one())
        .ok_or_else(|| Error::Internal("no linear character with kernel C4".into()))?;
    let want = t.get(kernel_c4) - &ClassFunction::trivial(&g);
    Ok(Verdict::from_bool(
        name,
        diff == want,
        format!("difference {diff}, expected chi_{kernel_c4} - chi_0"),
    ))
}

/// |I| odd, and Γ abelian or of odd order.
pub fn closed_form_applies(d: &LocalExtensionData) -> bool {
    let g = d.group();
    d.inertia().order() % 2 == 1 && (g.is_abelian() || g.order() % 2 == 1)
}

fn twisted_y(params: Params) -> Result<Vec<Verdict>> {
    let mut closed = Check::new("twisted y equals (1 - e_I) + sigma^-1 e_I");
    let mut identity = Check::new("totally ramified odd data give the identity");
    for d in local_corpus(params.max_order, HigherGroups::Minimal)? {
        if !closed_form_applies(&d) {
            continue;
        }
        let ty = d.twisted_y()?;
        closed.record(ty == d.closed_form_twisted_y()?, || describe_local(&d));
        if d.is_totally_ramified() {
            identity.record(ty.is_one(), || describe_local(&d));
        }
    }
    Ok(vec![closed.verdict(), identity.verdict()])
}

fn gauss() -> Result<Vec<Verdict>> {
    let mut norm = Check::new("|g(chi)|^2 = q for nontrivial chi");
    let mut trivial = Check::new("g(trivial) = -1");
    for q in GAUSS_FIELDS {
        let (p, f) = prime_power(q);
        let k = finite_field(p, f)?;
        trivial.record(k.gauss_sum(0)? == Cyclotomic::from_integer(-1), || format!("q={q}"));
        for a in 1..q - 1 {
            let g = k.gauss_sum(a)?;
            norm.record(&g * &g.conj() == Cyclotomic::from_integer(q as i64), || {
                format!("q={q} exponent {a}")
            });
        }
    }
    let g = finite_field(3, 1)?.gauss_sum(1)?;
    let square = &g * &g;
    Ok(vec![
        norm.verdict(),
        trivial.verdict(),
        Verdict::from_bool(
            "quadratic sum over F3 squares to -3",
            square == Cyclotomic::from_integer(-3),
            format!("g^2 = {square}"),
        ),
    ])
}

pub fn prime_power(q: u64) -> (u64, u32) {
    let p = (2..=q).find(|d| q % d == 0).expect("q > 1");
    let (mut r, mut f) = (q, 0);
    while r % p == 0 {
        r /= p;
        f += 1;
    }
    (p, f)
}

fn j2(params: Params) -> Result<Vec<Verdict>> {
    let mut check = Check::new("J2 is rational-equivariant for tame abelian data with q <= 49");
    for d in tame_abelian_corpus(params.max_order, 49)? {
        let ok = is_rational_equivariant(&d.equivariant_j2()?)?;
        check.record(ok, || format!("{} q={}", describe_local(d.base()), d.residue().size()));
    }
    Ok(vec![check.verdict()])
}

fn decomposition() -> Result<Vec<Verdict>> {
    let mut check = Check::new("product of induced local twists equals the global twist");
    for (name, data) in global_fixtures()? {
        let ok = data.twisted_y_by_induction()? == data.twisted_y_direct()?;
        check.record(ok, || name.clone());
    }
    Ok(vec![check.verdict()])
}

/// (1/|G|)·Σ_g χ(g²), summed over elements.
fn brute_indicator(chi: &ClassFunction) -> Cyclotomic {
    let g = chi.group();
    let sum: Cyclotomic = (0..g.order()).map(|x| chi.at(g.mul(x, x)).clone()).sum();
    sum.checked_div(&Cyclotomic::from_integer(g.order() as i64))
        .expect("nonzero order")
}

fn symplectic(params: Params) -> Result<Vec<Verdict>> {
    let mut fs = Check::new("Frobenius-Schur indicator matches the element-wise sum");
    let mut odd = Check::new("odd-order data give the identity J'");
    let groups = family_groups(params.max_order)?;
    for t in tables(&groups)? {
        for (i, chi) in t.irreducibles().iter().enumerate() {
            let ind = frobenius_schur(&t, chi)?;
            fs.record(brute_indicator(chi) == Cyclotomic::from_integer(ind), || {
                format!("{} chi_{i}", label(t.group()))
            });
        }
        if t.group().order() % 2 == 1 {
            for p in galjac_core::corpus::SWEEP_PRIMES {
                for d in galjac_core::corpus::local_data(&t, p, HigherGroups::Minimal, 1)? {
                    let place = PlaceRecord::new("v", Subgroup::whole(t.group()), d.clone())?;
                    let data = GlobalExtensionData::new(&t, vec![place])?;
                    odd.record(data.equivariant_symplectic_j()?.is_one(), || describe_local(&d));
                }
            }
        }
    }
    let mut out = vec![fs.verdict()];

    let mut fixtures = Check::new("determinate J' squares to one and is rational-equivariant");
    let mut wild = Check::new("symplectic characters at wild or even-inertia places are indeterminate");
    for (name, data) in global_fixtures()? {
        match data.equivariant_symplectic_j() {
            Ok(j) => {
                let ok = j.mul(&j)?.is_one() && is_rational_equivariant(&j)?;
                fixtures.record(ok, || name.clone());
                if data.table().group().order() % 2 == 1 {
                    odd.record(j.is_one(), || name.clone());
                }
            }
            Err(Error::IndeterminateSign { .. }) => {
                let blocked = data.places().iter().any(|p| !p.is_tame() || p.local().inertia().order() % 2 == 0);
                wild.record(blocked && !data.table().symplectic_chars().is_empty(), || name.clone());
            }
            Err(e) => return Err(e),
        }
    }
    out.push(fixtures.verdict());
    out.push(wild.verdict());
    out.push(odd.verdict());
    out.extend(h12_anchor(params.precision_cap)?);
    Ok(out)
}

fn h12_anchor(cap: u32) -> Result<Vec<Verdict>> {
    let (_, data) = global_fixtures()?
        .into_iter()
        .find(|(name, _)| name == "H12 symplectic")
        .ok_or_else(|| Error::Internal("H12 fixture missing".into()))?;
    let t = data.table().clone();
    let symp = t.symplectic_chars();
    let faithful = symp
        .iter()
        .copied()
        .find(|&i| {
            let chi = t.get(i);
            (1..t.group().order()).all(|x| chi.at(x) != chi.degree())
        })
        .ok_or_else(|| Error::Internal("H12 has no faithful symplectic character".into()))?;
    let chi = t.get(faithful);
    let y_psi2 = data.global_y(&adams(chi, 2))?;
    let sign = data.symplectic_sign(chi)?;
    let j = data.equivariant_symplectic_j()?;
    let order_two = !j.is_one() && j.mul(&j)?.is_one();
    let twisted = data.global_twisted_y()?;
    let certified = twisted.coeff(faithful).sign_of_real(cap)?;
    Ok(vec![
        Verdict::from_bool(
            "H12 y(F, psi_2 chi) = -1 at the faithful symplectic chi",
            y_psi2 == Cyclotomic::from_integer(-1),
            format!("chi_{faithful}: {}", crate::report::exact(&y_psi2)),
        ),
        Verdict::from_bool("H12 symplectic sign is -1", sign == Sign::Minus, format!("chi_{faithful}: {sign}")),
        Verdict::from_bool("H12 J' has order exactly 2", order_two, crate::report::central(&j).replace('\n', ", ")),
        Verdict::from_bool(
            "H12 twisted y is certified negative at the faithful symplectic chi",
            certified == std::cmp::Ordering::Less,
            format!("sign {:?} within {cap} bits", certified),
        ),
    ])
}
