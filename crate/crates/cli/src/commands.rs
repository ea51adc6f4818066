//! The report-producing commands behind each subcommand.

use std::sync::Arc;

use galjac_core::center::{is_rational_equivariant, is_symplectic_positive, CentralElement};
use galjac_core::chartab::{adams, frobenius_schur, CharacterTable};
use galjac_core::gauss::TameAbelianLocalDatum;
use galjac_core::global::{GlobalExtensionData, Sign};
use galjac_core::grp::FiniteGroup;
use galjac_core::localext::LocalExtensionData;
use galjac_core::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::descriptor::{Descriptor, GroupSpec, LocalDescriptor};
use crate::report::{central, exact, Report, Verdict};
use crate::verify::{closed_form_applies, describe_local};

const CHARACTER_ORDER: &str = "by ascending degree, then class by class: values of \
     smaller conductor first, ties broken by exact coordinates, larger first; \
     classes ordered by least element";

/// Dispatches a parsed descriptor to its command.
pub fn run_descriptor(desc: &Descriptor, inputs: serde_json::Value, cap: u32) -> Result<Report> {
    match desc {
        Descriptor::Group(g) => cmd_group(&g.group, inputs),
        Descriptor::Local(l) => cmd_local(l, inputs),
        Descriptor::TameAbelian(l) => cmd_tame_abelian(l, inputs),
        Descriptor::Global(g) => cmd_global(&g.build()?, inputs, cap),
    }
}

fn group_line(g: &FiniteGroup) -> String {
    format!(
        "{} (order {}, exponent {}, {})",
        g.label().unwrap_or("G"),
        g.order(),
        g.exponent(),
        if g.is_abelian() { "abelian" } else { "non-abelian" }
    )
}

/// "2*chi_0 - chi_3", or "0".
fn combination(m: &[BigInt]) -> String {
    let mut s = String::new();
    for (i, c) in m.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() { "-" } else { "+" };
        if s.is_empty() {
            if c.is_negative() {
                s.push('-');
            }
        } else {
            s.push_str(&format!(" {sign} "));
        }
        if !c.abs().is_one() {
            s.push_str(&format!("{}*", c.abs()));
        }
        s.push_str(&format!("chi_{i}"));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn table_provenance(report: &mut Report, t: &CharacterTable) {
    report.provenance("dixon prime", t.dixon_prime().to_string());
    report.provenance("character order", CHARACTER_ORDER);
}

/// Character table, Frobenius–Schur types and ψ_k decompositions.
pub fn cmd_group(spec: &GroupSpec, inputs: serde_json::Value) -> Result<Report> {
    let g = Arc::new(spec.build()?);
    let t = CharacterTable::new(&g)?;
    let mut r = Report::new("group", inputs);
    r.invariant("group", group_line(&g));
    let cd = g.conjugacy();
    let classes: Vec<String> = (0..cd.len())
        .map(|c| {
            format!(
                "C{c}: representative {}, size {}, element order {}",
                cd.rep(c),
                cd.size(c),
                g.element_order(cd.rep(c))
            )
        })
        .collect();
    r.invariant("classes", classes.join("\n"));
    let mut rows = Vec::new();
    let mut kinds = Vec::new();
    for (i, chi) in t.irreducibles().iter().enumerate() {
        let values: Vec<String> = chi.values().iter().map(exact).collect();
        rows.push(format!("chi_{i}: {}", values.join(" | ")));
        let ind = frobenius_schur(&t, chi)?;
        let kind = match ind {
            1 => "real",
            0 => "complex",
            _ => "symplectic",
        };
        kinds.push(format!("chi_{i}: indicator {ind} ({kind})"));
    }
    r.invariant("character table", rows.join("\n"));
    r.invariant("frobenius-schur", kinds.join("\n"));
    let symp: Vec<String> = t.symplectic_chars().iter().map(|i| format!("chi_{i}")).collect();
    r.invariant("symplectic characters", format!("{{{}}}", symp.join(", ")));
    let mut lines = Vec::new();
    for k in 2..=g.exponent() as i64 {
        for (i, chi) in t.irreducibles().iter().enumerate() {
            let m = t.decompose(&adams(chi, k))?;
            lines.push(format!("psi_{k}(chi_{i}) = {}", combination(&m)));
        }
    }
    if !lines.is_empty() {
        r.invariant("adams operations", lines.join("\n"));
    }
    r.verdict(Verdict::pass("orthogonality relations", "both verified exactly"));
    table_provenance(&mut r, &t);
    Ok(r)
}

fn local_section(r: &mut Report, d: &LocalExtensionData) -> Result<()> {
    r.invariant("datum", describe_local(d));
    let orders: Vec<String> = d.filtration().iter().map(|s| s.order().to_string()).collect();
    r.invariant("ramification orders", format!("[{}]", orders.join(", ")));
    r.invariant("ord(D)", d.different_valuation().to_string());
    match d.sqrt_inv_different() {
        Some(n) => r.invariant("square root of inverse different", format!("exists, n = {n}")),
        None => r.invariant("square root of inverse different", "does not exist"),
    }
    let weak = d.is_weakly_ramified();
    r.invariant("weakly ramified", if weak { "yes" } else { "no" });
    match (d.sqrt_inv_different(), weak) {
        (None, _) => r.verdict(Verdict::unknown("freeness congruence", "no square root of the inverse different")),
        (Some(n), true) => r.verdict(Verdict::from_bool(
            "freeness congruence",
            d.freeness_congruence()?,
            format!("n = {n}, |Γ₁| = {}", d.wild_inertia().order()),
        )),
        (Some(n), false) => r.verdict(Verdict::unknown(
            "freeness congruence",
            format!(
                "not weakly ramified; n = {n} is {}congruent to 1 mod {}",
                if d.freeness_congruence()? { "" } else { "not " },
                d.wild_inertia().order()
            ),
        )),
    }
    if d.sqrt_inv_different().is_some() && (d.is_tame() || d.p() % 2 == 1) {
        let odd = d.inertia().order() % 2 == 1;
        r.verdict(Verdict::from_bool(
            "odd inertia",
            odd,
            format!("|Γ₀| = {}", d.inertia().order()),
        ));
    }
    r.invariant("y family", central(&d.equivariant_y()?));
    let ty = d.twisted_y()?;
    r.invariant("twisted y family", central(&ty));
    if closed_form_applies(d) {
        let cf = d.closed_form_twisted_y()?;
        r.verdict(Verdict::from_bool(
            "closed form (1 - e_I) + sigma^-1 e_I",
            cf == ty,
            "compared coefficient by coefficient",
        ));
    } else {
        r.verdict(Verdict::unknown(
            "closed form (1 - e_I) + sigma^-1 e_I",
            "hypotheses not met (needs |I| odd and Γ abelian or of odd order)",
        ));
    }
    Ok(())
}

pub fn cmd_local(desc: &LocalDescriptor, inputs: serde_json::Value) -> Result<Report> {
    let t = desc.table()?;
    let d = desc.build(&t)?;
    let mut r = Report::new("local", inputs);
    r.invariant("group", group_line(t.group()));
    local_section(&mut r, &d)?;
    table_provenance(&mut r, &t);
    Ok(r)
}

fn tame_section(r: &mut Report, datum: &TameAbelianLocalDatum) -> Result<()> {
    r.invariant("tau family", central(&datum.equivariant_tau()?));
    r.invariant("modified tau family", central(&datum.modified_tau()?));
    let j2 = datum.equivariant_j2()?;
    r.invariant("J2", central(&j2));
    r.verdict(Verdict::from_bool(
        "J2 is rational-equivariant",
        is_rational_equivariant(&j2)?,
        "checked under every Galois automorphism",
    ));
    let k = datum.residue();
    let modulus: Vec<String> = k.modulus().iter().map(u64::to_string).collect();
    r.provenance(
        "residue field",
        format!("F_{} = F_{}[t]/(m), m coefficients (constant first) [{}], generator {}", k.size(), k.p(), modulus.join(", "), k.generator()),
    );
    r.provenance("inertia generator", datum.inertia_generator().to_string());
    Ok(())
}

pub fn cmd_tame_abelian(desc: &LocalDescriptor, inputs: serde_json::Value) -> Result<Report> {
    let t = desc.table()?;
    let datum = desc.build_tame(&t)?;
    let mut r = Report::new("tame_abelian", inputs);
    r.invariant("group", group_line(t.group()));
    local_section(&mut r, datum.base())?;
    tame_section(&mut r, &datum)?;
    table_provenance(&mut r, &t);
    Ok(r)
}

fn sign_text(s: &Sign) -> String {
    s.to_string()
}

pub fn cmd_global(data: &GlobalExtensionData, inputs: serde_json::Value, cap: u32) -> Result<Report> {
    let t = data.table();
    let mut r = Report::new("global", inputs);
    r.invariant("group", group_line(t.group()));
    let places: Vec<String> = data
        .places()
        .iter()
        .map(|p| {
            format!(
                "{}: decomposition group of order {}, {}",
                p.label(),
                p.decomp().order(),
                describe_local(p.local())
            )
        })
        .collect();
    r.invariant("places", if places.is_empty() { "none".to_string() } else { places.join("\n") });
    r.invariant("global y family", central(&data.equivariant_y()?));
    let by_induction = data.twisted_y_by_induction()?;
    let direct = data.twisted_y_direct()?;
    r.invariant("twisted y family", central(&direct));
    if by_induction != direct {
        return Err(Error::Internal(format!(
            "twisted characteristic differs between routes:\n{}\nversus\n{}",
            central(&by_induction),
            central(&direct)
        )));
    }
    r.verdict(Verdict::pass(
        "decomposition identity",
        "product of induced local twists equals the global twist",
    ));

    let symp = t.symplectic_chars();
    let signs = symp
        .iter()
        .map(|&i| Ok(format!("chi_{i}: {}", sign_text(&data.symplectic_sign(t.get(i))?))))
        .collect::<Result<Vec<_>>>()?;
    r.invariant(
        "symplectic signs",
        if signs.is_empty() { "no symplectic characters".to_string() } else { signs.join("\n") },
    );
    match data.equivariant_symplectic_j() {
        Ok(j) => {
            r.invariant("J'", central(&j));
            let squares_to_one = j.mul(&j)?.is_one();
            r.verdict(Verdict::from_bool(
                "J' squares to one and is rational-equivariant",
                squares_to_one && is_rational_equivariant(&j)?,
                if j.is_one() { "trivial" } else { "order 2" },
            ));
        }
        Err(Error::IndeterminateSign { place, reason }) => {
            r.verdict(Verdict::unknown("J'", format!("indeterminate at place {place}: {reason}")));
        }
        Err(e) => return Err(e),
    }
    let positivity = is_symplectic_positive(&direct, cap)?;
    r.invariant(
        "twisted y at symplectic characters",
        if positivity.positive {
            "positive".to_string()
        } else {
            format!("not positive: {}", positivity.diagnostics.join("; "))
        },
    );
    if data.places().iter().all(|p| p.tame_abelian().is_some()) {
        let j2: CentralElement = data.assemble_global_j2()?;
        r.invariant("J2", central(&j2));
        r.verdict(Verdict::from_bool(
            "global J2 is rational-equivariant",
            is_rational_equivariant(&j2)?,
            "product of centrally induced local J2",
        ));
    } else {
        r.verdict(Verdict::unknown("global J2", "some place has no tame abelian realization"));
    }
    table_provenance(&mut r, t);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_render() {
        let m: Vec<BigInt> = [2, 0, -1, 1].into_iter().map(BigInt::from).collect();
        assert_eq!(combination(&m), "2*chi_0 - chi_2 + chi_3");
        assert_eq!(combination(&[BigInt::zero()]), "0");
        assert_eq!(combination(&[BigInt::from(-1)]), "-chi_0");
    }

    #[test]
    fn quaternion_report_lists_one_symplectic_character() {
        let r = cmd_group(&GroupSpec::family("quaternion", &[8]), serde_json::Value::Null).unwrap();
        let symp = r.invariants.iter().find(|e| e.name == "symplectic characters").unwrap();
        assert_eq!(symp.value, "{chi_4}");
    }
}
