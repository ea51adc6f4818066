//! Formal global Galois extensions L/K: the group G together with one record
//! per ramified place, each carrying the decomposition subgroup and the local
//! extension data on it.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::center::{central_induce, twist_endo, CentralElement};
use crate::chartab::{adams, frobenius_schur, restrict, same_group, CharacterTable, ClassFunction};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::gauss::{FiniteFieldData, TameAbelianLocalDatum};
use crate::grp::Subgroup;
use crate::localext::LocalExtensionData;

#[derive(Clone, Debug)]
pub struct PlaceRecord {
    label: String,
    decomp: Subgroup,
    local: LocalExtensionData,
    tame_abelian: Option<TameAbelianLocalDatum>,
}

impl PlaceRecord {
    pub fn new(label: impl Into<String>, decomp: Subgroup, local: LocalExtensionData) -> Result<PlaceRecord> {
        let label = label.into();
        if !same_group(local.group(), decomp.group()) {
            return Err(Error::InvalidGlobal(format!(
                "local group at place {label} is not the decomposition subgroup"
            )));
        }
        Ok(PlaceRecord {
            label,
            decomp,
            local,
            tame_abelian: None,
        })
    }

    /// A place realized by a tame abelian datum, which enables Gauss sums.
    pub fn with_tame_abelian(
        label: impl Into<String>,
        decomp: Subgroup,
        datum: TameAbelianLocalDatum,
    ) -> Result<PlaceRecord> {
        let mut rec = PlaceRecord::new(label, decomp, datum.base().clone())?;
        rec.tame_abelian = Some(datum);
        Ok(rec)
    }

    /// Builds a place from data expressed in the numbering of G: the
    /// filtration subgroups and the Frobenius lift must lie in `decomp` and are
    /// translated into its local numbering. With a residue field the place is
    /// realized as a tame abelian datum.
    pub fn from_parent(
        label: impl Into<String>,
        decomp: Subgroup,
        p: u64,
        filtration: &[Subgroup],
        frobenius: usize,
        f_abs: u32,
        residue: Option<FiniteFieldData>,
    ) -> Result<PlaceRecord> {
        let label = label.into();
        let outside = |what: String| {
            Error::InvalidGlobal(format!("{what} at place {label} is not in the decomposition group"))
        };
        let mut local_filt = Vec::with_capacity(filtration.len());
        for (i, s) in filtration.iter().enumerate() {
            let elems = s
                .elements()
                .iter()
                .map(|&g| decomp.local_index(g))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| outside(format!("Γ_{i}")))?;
            local_filt.push(Subgroup::from_elements(decomp.group(), &elems)?);
        }
        let frob = decomp
            .local_index(frobenius)
            .ok_or_else(|| outside(format!("Frobenius {frobenius}")))?;
        let table = Arc::new(CharacterTable::new(decomp.group())?);
        let local = LocalExtensionData::new(&table, p, local_filt, frob, f_abs)?;
        match residue {
            Some(field) => PlaceRecord::with_tame_abelian(label, decomp, TameAbelianLocalDatum::new(local, field)?),
            None => PlaceRecord::new(label, decomp, local),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn decomp(&self) -> &Subgroup {
        &self.decomp
    }

    pub fn local(&self) -> &LocalExtensionData {
        &self.local
    }

    pub fn tame_abelian(&self) -> Option<&TameAbelianLocalDatum> {
        self.tame_abelian.as_ref()
    }

    pub fn is_tame(&self) -> bool {
        self.local.is_tame()
    }

    /// Why the tame root-number rule does not apply here, if it does not.
    fn sign_obstruction(&self) -> Option<String> {
        if !self.local.is_tame() {
            Some("wildly ramified".into())
        } else if self.local.inertia().order() % 2 == 0 {
            Some(format!("inertia of even order {}", self.local.inertia().order()))
        } else {
            None
        }
    }
}

#[derive(Clone, Debug)]
pub struct GlobalExtensionData {
    table: Arc<CharacterTable>,
    places: Vec<PlaceRecord>,
}

/// Value of the symplectic sign J′_{2,S}(L/K, χ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
    Unknown { place: String, reason: String },
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => f.write_str("+1"),
            Sign::Minus => f.write_str("-1"),
            Sign::Unknown { place, reason } => write!(f, "unknown (place {place}: {reason})"),
        }
    }
}

impl GlobalExtensionData {
    pub fn new(table: &Arc<CharacterTable>, places: Vec<PlaceRecord>) -> Result<GlobalExtensionData> {
        let mut labels = BTreeSet::new();
        for place in &places {
            if !labels.insert(place.label.clone()) {
                return Err(Error::InvalidGlobal(format!("duplicate place {}", place.label)));
            }
            if !same_group(place.decomp.parent(), table.group()) {
                return Err(Error::InvalidGlobal(format!(
                    "decomposition group at {} is not a subgroup of G",
                    place.label
                )));
            }
        }
        Ok(GlobalExtensionData {
            table: table.clone(),
            places,
        })
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn places(&self) -> &[PlaceRecord] {
        &self.places
    }

    /// y(K, χ) = Π_v y(K_v, res χ).
    pub fn global_y(&self, chi: &ClassFunction) -> Result<Cyclotomic> {
        let mut out = Cyclotomic::one();
        for place in &self.places {
            let res = restrict(chi, &place.decomp)?;
            out *= &place.local.unramified_characteristic(&res)?;
        }
        Ok(out)
    }

    /// The central element with coefficients y(K, χ).
    pub fn equivariant_y(&self) -> Result<CentralElement> {
        let coeffs = self
            .table
            .irreducibles()
            .iter()
            .map(|chi| self.global_y(chi))
            .collect::<Result<_>>()?;
        CentralElement::new(&self.table, coeffs)
    }

    /// Π_v ĩ_{G_w}^G((1 − ψ_{2,*})(y_{L_w/K_v})).
    pub fn twisted_y_by_induction(&self) -> Result<CentralElement> {
        let mut out = CentralElement::one(&self.table);
        for place in &self.places {
            let local = place.local.twisted_y()?;
            out = out.mul(&central_induce(&local, &place.decomp, &self.table)?)?;
        }
        Ok(out)
    }

    /// (1 − ψ_{2,*}) applied to the global family y(K, ·).
    pub fn twisted_y_direct(&self) -> Result<CentralElement> {
        twist_endo(&self.equivariant_y()?, 1, -1, 2)
    }

    /// The global twisted characteristic; both routes are computed and must
    /// agree.
    pub fn global_twisted_y(&self) -> Result<CentralElement> {
        let by_induction = self.twisted_y_by_induction()?;
        let direct = self.twisted_y_direct()?;
        if by_induction != direct {
            return Err(Error::Internal(
                "twisted characteristic differs between the local and global routes".into(),
            ));
        }
        Ok(direct)
    }

    /// sign(τ(K, ψ₂χ − 2χ))·y(K, χ − ψ₂χ) for symplectic χ, with the τ-sign
    /// taken to be +1 at tame places of odd inertia; +1 for other χ.
    pub fn symplectic_sign(&self, chi: &ClassFunction) -> Result<Sign> {
        if frobenius_schur(&self.table, chi)? != -1 {
            return Ok(Sign::Plus);
        }
        if let Some(place) = self.places.iter().find(|p| p.sign_obstruction().is_some()) {
            return Ok(Sign::Unknown {
                place: place.label.clone(),
                reason: place.sign_obstruction().unwrap_or_default(),
            });
        }
        let y = self.global_y(chi)?.checked_div(&self.global_y(&adams(chi, 2))?)?;
        if y.is_one() {
            Ok(Sign::Plus)
        } else if y == Cyclotomic::from_integer(-1) {
            Ok(Sign::Minus)
        } else {
            Err(Error::Internal(format!("symplectic sign evaluated to {y}")))
        }
    }

    /// J′_{2,S,L/K} = Σ_χ e_χ·J′_{2,S}(L/K, χ).
    pub fn equivariant_symplectic_j(&self) -> Result<CentralElement> {
        let coeffs = self
            .table
            .irreducibles()
            .iter()
            .map(|chi| match self.symplectic_sign(chi)? {
                Sign::Plus => Ok(Cyclotomic::one()),
                Sign::Minus => Ok(Cyclotomic::from_integer(-1)),
                Sign::Unknown { place, reason } => Err(Error::IndeterminateSign { place, reason }),
            })
            .collect::<Result<_>>()?;
        CentralElement::new(&self.table, coeffs)
    }

    /// J_{2,L/K} = Π_v ĩ_{G_w}^G(J_{2,L_w/K_v}).
    pub fn assemble_global_j2(&self) -> Result<CentralElement> {
        let mut out = CentralElement::one(&self.table);
        for place in &self.places {
            let datum = place.tame_abelian.as_ref().ok_or_else(|| {
                Error::InvalidGlobal(format!("place {} has no tame abelian realization", place.label))
            })?;
            let local = datum.equivariant_j2()?;
            out = out.mul(&central_induce(&local, &place.decomp, &self.table)?)?;
        }
        Ok(out)
    }
}
