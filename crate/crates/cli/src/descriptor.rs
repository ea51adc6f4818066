//! JSON descriptors for groups, local data, tame abelian data and global data.
//!
//! Element indices are 0-based positions in the group's numbering. Subgroups
//! are given as explicit element lists and must be closed under
//! multiplication. Parse errors carry the line and column reported by the
//! JSON parser; semantic errors carry the path of the offending field.

use std::sync::Arc;

use galjac_core::chartab::CharacterTable;
use galjac_core::gauss::{finite_field, FiniteFieldData, TameAbelianLocalDatum};
use galjac_core::global::{GlobalExtensionData, PlaceRecord};
use galjac_core::grp::{FiniteGroup, Subgroup};
use galjac_core::localext::LocalExtensionData;
use galjac_core::{Error, Result};
use serde::{Deserialize, Serialize};

/// A parsed descriptor; the JSON field "kind" selects the variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Descriptor {
    Group(GroupDescriptor),
    Local(LocalDescriptor),
    TameAbelian(LocalDescriptor),
    Global(GlobalDescriptor),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDescriptor {
    #[serde(default, skip_serializing)]
    pub kind: Option<String>,
    pub group: GroupSpec,
}

/// A group given by exactly one of: a named family with integer parameters,
/// an explicit multiplication table, or a direct product of other specs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product: Option<Vec<GroupSpec>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResidueSpec {
    pub p: u64,
    pub f: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocalDescriptor {
    #[serde(default, skip_serializing)]
    pub kind: Option<String>,
    pub group: GroupSpec,
    pub p: u64,
    #[serde(default = "one")]
    pub f_abs: u32,
    #[serde(default)]
    pub filtration: Vec<Vec<usize>>,
    pub frobenius: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residue: Option<ResidueSpec>,
}

/// Local data of a place, in the numbering of the global group G.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaceLocalSpec {
    pub p: u64,
    #[serde(default = "one")]
    pub f_abs: u32,
    #[serde(default)]
    pub filtration: Vec<Vec<usize>>,
    pub frobenius: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlaceSpec {
    pub label: String,
    pub decomp: Vec<usize>,
    pub local: PlaceLocalSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residue: Option<ResidueSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GlobalDescriptor {
    #[serde(default, skip_serializing)]
    pub kind: Option<String>,
    pub group: GroupSpec,
    #[serde(default)]
    pub places: Vec<PlaceSpec>,
}

fn one() -> u32 {
    1
}

/// Wraps an error with the path of the field that caused it. Input errors
/// become descriptor errors; anything else is passed through untouched.
fn at(path: &str) -> impl Fn(Error) -> Error + '_ {
    move |e| {
        if e.is_input() && !matches!(e, Error::Descriptor(_)) {
            Error::Descriptor(format!("{path}: {e}"))
        } else {
            e
        }
    }
}

/// Parses a descriptor, returning it together with the raw JSON for echoing.
pub fn parse(text: &str) -> Result<(Descriptor, serde_json::Value)> {
    let raw: serde_json::Value = serde_json::from_str(text).map_err(|e| {
        Error::Descriptor(format!("line {} column {}: {e}", e.line(), e.column()))
    })?;
    fn typed<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
        serde_json::from_str(text).map_err(|e| {
            Error::Descriptor(format!("line {} column {}: {e}", e.line(), e.column()))
        })
    }
    let kind = raw
        .get("kind")
        .ok_or_else(|| Error::Descriptor("kind: missing field".into()))?;
    let desc = match kind.as_str() {
        Some("group") => Descriptor::Group(typed(text)?),
        Some("local") => Descriptor::Local(typed(text)?),
        Some("tame_abelian") => Descriptor::TameAbelian(typed(text)?),
        Some("global") => Descriptor::Global(typed(text)?),
        _ => {
            return Err(Error::Descriptor(format!(
                "kind: expected one of group, local, tame_abelian, global, found {kind}"
            )))
        }
    };
    Ok((desc, raw))
}

impl GroupSpec {
    pub fn family(name: &str, params: &[usize]) -> GroupSpec {
        GroupSpec {
            family: Some(name.to_string()),
            params: params.to_vec(),
            table: None,
            label: None,
            product: None,
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        self.build_at("group")
    }

    fn build_at(&self, path: &str) -> Result<FiniteGroup> {
        let given = [self.family.is_some(), self.table.is_some(), self.product.is_some()];
        if given.iter().filter(|&&b| b).count() != 1 {
            return Err(Error::Descriptor(format!(
                "{path}: exactly one of 'family', 'table' or 'product' is required"
            )));
        }
        if let Some(table) = &self.table {
            return FiniteGroup::from_table(table, self.label.clone()).map_err(at(&format!("{path}.table")));
        }
        if let Some(parts) = &self.product {
            let mut g = FiniteGroup::cyclic(1)?;
            for (i, part) in parts.iter().enumerate() {
                let h = part.build_at(&format!("{path}.product[{i}]"))?;
                g = if i == 0 { h } else { FiniteGroup::direct_product(&g, &h)? };
            }
            return Ok(g);
        }
        let family = self.family.as_deref().unwrap_or_default();
        let params = &self.params;
        let arity = |n: usize| {
            if params.len() == n {
                Ok(())
            } else {
                Err(Error::Descriptor(format!(
                    "{path}.params: family '{family}' takes {n} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let g = match family {
            "cyclic" => arity(1).and_then(|_| FiniteGroup::cyclic(params[0])),
            "dihedral" => arity(1).and_then(|_| FiniteGroup::dihedral(params[0])),
            "quaternion" => arity(1).and_then(|_| FiniteGroup::quaternion(params[0])),
            "symmetric" => arity(1).and_then(|_| FiniteGroup::symmetric(params[0])),
            "alternating" => arity(1).and_then(|_| FiniteGroup::alternating(params[0])),
            "sl2" => arity(1).and_then(|_| FiniteGroup::special_linear_2(params[0])),
            "metacyclic" => arity(3).and_then(|_| FiniteGroup::metacyclic(params[0], params[1], params[2])),
            "abelian" => FiniteGroup::abelian(params),
            other => Err(Error::Descriptor(format!(
                "{path}.family: unknown family '{other}' (expected cyclic, dihedral, quaternion, \
                 metacyclic, abelian, symmetric, alternating or sl2)"
            ))),
        };
        g.map_err(at(&format!("{path}.params")))
    }
}

fn subgroup(g: &Arc<FiniteGroup>, elements: &[usize], path: &str) -> Result<Subgroup> {
    Subgroup::from_elements(g, elements).map_err(at(path))
}

fn residue_field(r: &ResidueSpec, path: &str) -> Result<FiniteFieldData> {
    finite_field(r.p, r.f).map_err(at(path))
}

impl LocalDescriptor {
    pub fn table(&self) -> Result<Arc<CharacterTable>> {
        let g = Arc::new(self.group.build()?);
        Ok(Arc::new(CharacterTable::new(&g)?))
    }

    pub fn build(&self, table: &Arc<CharacterTable>) -> Result<LocalExtensionData> {
        let g = table.group();
        let filtration = self
            .filtration
            .iter()
            .enumerate()
            .map(|(i, elems)| subgroup(g, elems, &format!("filtration[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        LocalExtensionData::new(table, self.p, filtration, self.frobenius, self.f_abs).map_err(at("local"))
    }

    pub fn build_tame(&self, table: &Arc<CharacterTable>) -> Result<TameAbelianLocalDatum> {
        let residue = self
            .residue
            .as_ref()
            .ok_or_else(|| Error::Descriptor("residue: required for kind tame_abelian".into()))?;
        let field = residue_field(residue, "residue")?;
        TameAbelianLocalDatum::new(self.build(table)?, field).map_err(at("residue"))
    }
}

impl GlobalDescriptor {
    pub fn build(&self) -> Result<GlobalExtensionData> {
        let g = Arc::new(self.group.build()?);
        let table = Arc::new(CharacterTable::new(&g)?);
        let mut places = Vec::with_capacity(self.places.len());
        for (i, spec) in self.places.iter().enumerate() {
            let path = format!("places[{i}]");
            let decomp = subgroup(&g, &spec.decomp, &format!("{path}.decomp"))?;
            let filtration = spec
                .local
                .filtration
                .iter()
                .enumerate()
                .map(|(j, elems)| subgroup(&g, elems, &format!("{path}.local.filtration[{j}]")))
                .collect::<Result<Vec<_>>>()?;
            g.check_index(spec.local.frobenius)
                .map_err(at(&format!("{path}.local.frobenius")))?;
            let residue = spec
                .residue
                .as_ref()
                .map(|r| residue_field(r, &format!("{path}.residue")))
                .transpose()?;
            let place = PlaceRecord::from_parent(
                spec.label.clone(),
                decomp,
                spec.local.p,
                &filtration,
                spec.local.frobenius,
                spec.local.f_abs,
                residue,
            )
            .map_err(at(&path))?;
            places.push(place);
        }
        GlobalExtensionData::new(&table, places).map_err(at("places"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_kind() {
        let (d, raw) = parse(r#"{"kind": "group", "group": {"family": "quaternion", "params": [8]}}"#).unwrap();
        assert_eq!(raw["kind"], "group");
        let Descriptor::Group(g) = d else { panic!() };
        assert_eq!(g.group.build().unwrap().order(), 8);

        let (d, _) = parse(
            r#"{"kind": "local", "group": {"family": "cyclic", "params": [3]}, "p": 3,
                "filtration": [[0, 1, 2], [0, 1, 2]], "frobenius": 0}"#,
        )
        .unwrap();
        let Descriptor::Local(l) = d else { panic!() };
        let data = l.build(&l.table().unwrap()).unwrap();
        assert_eq!(data.different_valuation(), 4);

        let (d, _) = parse(
            r#"{"kind": "tame_abelian", "group": {"family": "cyclic", "params": [2]}, "p": 3,
                "filtration": [[0, 1]], "frobenius": 0, "residue": {"p": 3, "f": 1}}"#,
        )
        .unwrap();
        let Descriptor::TameAbelian(l) = d else { panic!() };
        assert!(l.build_tame(&l.table().unwrap()).is_ok());

        let (d, _) = parse(
            r#"{"kind": "global", "group": {"product": [{"family": "cyclic", "params": [2]}, {"family": "cyclic", "params": [3]}]},
                "places": [{"label": "v7", "decomp": [0,1,2,3,4,5], "local": {"p": 7, "filtration": [[0,1,2]], "frobenius": 3}}]}"#,
        )
        .unwrap();
        let Descriptor::Global(gd) = d else { panic!() };
        assert_eq!(gd.build().unwrap().places().len(), 1);
    }

    #[test]
    fn diagnostics_name_the_problem() {
        let err = parse("{\"kind\": \"group\",\n \"group\": {\"family\": 3}}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");

        let err = parse(r#"{"kind": "nope"}"#).unwrap_err();
        assert!(matches!(err, Error::Descriptor(_)));

        let (d, _) = parse(r#"{"kind": "group", "group": {"table": [[0,1],[1,1]]}}"#).unwrap();
        let Descriptor::Group(g) = d else { panic!() };
        let err = g.group.build().unwrap_err();
        assert!(err.to_string().contains("group.table"), "{err}");

        let (d, _) = parse(
            r#"{"kind": "local", "group": {"family": "cyclic", "params": [4]}, "p": 2,
                "filtration": [[0, 1]], "frobenius": 0}"#,
        )
        .unwrap();
        let Descriptor::Local(l) = d else { panic!() };
        let err = l.build(&l.table().unwrap()).unwrap_err();
        assert!(err.to_string().contains("filtration[0]"), "{err}");
        assert!(err.is_input());

        let (d, _) = parse(r#"{"kind": "group", "group": {"family": "cyclic", "params": [2, 3]}}"#).unwrap();
        let Descriptor::Group(g) = d else { panic!() };
        assert!(g.group.build().unwrap_err().to_string().contains("params"));
    }
}
