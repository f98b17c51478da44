//! JSON descriptors of braces.
//!
//! Matrices are row-major integer arrays in the column-vector convention of
//! [`Automorphism`]; maps over a group are dense arrays in lexicographic element
//! order.

use serde::{Deserialize, Serialize};

use crate::automorphism::Automorphism;
use crate::brace::{trivial_brace, LambdaKind, LambdaTable, LeftBrace};
use crate::error::{BraceError, Result};
use crate::extension::{build_extension, ExtensionData};
use crate::families::{
    build_hegedus, build_simple_family, HegedusParams, QuadraticForm, SimpleFamilyParams,
};
use crate::group::{enumeration_cap, AbelianGroup, Element};
use crate::matched::{build_matched_product, MatchedPairData};
use crate::matrix::MatrixModP;

pub const DESCRIPTOR_VERSION: u32 = 1;

type Rows = Vec<Vec<i64>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraceDescriptor {
    pub version: u32,
    pub group: GroupSpec,
    pub lambda: LambdaSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub moduli: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "snake_case")]
pub enum LambdaSpec {
    Trivial {},
    Table(TableSpec),
    Hegedus(HegedusSpec),
    SimpleFamily(SimpleFamilySpec),
    MatchedProduct(Box<MatchedSpec>),
    Extension(Box<ExtensionSpec>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableSpec {
    /// Distinct lambda maps as full matrices.
    pub classes: Vec<Rows>,
    /// For each element, the index of its lambda map in `classes`.
    pub class_of: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HegedusSpec {
    pub p: u32,
    pub n: usize,
    /// Upper-triangular coefficients of the quadratic form.
    pub q: Rows,
    pub f: Rows,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimpleFamilySpec {
    pub p1: u32,
    pub p2: u32,
    pub n: usize,
    pub q: Rows,
    pub f: Rows,
    pub gamma: u32,
    pub c: Rows,
    pub z: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatchedSpec {
    pub left: BraceDescriptor,
    pub right: BraceDescriptor,
    /// One automorphism of the left group per element of the right brace.
    pub alpha: Vec<Rows>,
    /// One automorphism of the right group per element of the left brace.
    pub beta: Vec<Rows>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionSpec {
    pub base: BraceDescriptor,
    pub kernel: GroupSpec,
    pub sigma: Vec<Rows>,
    pub nu: Vec<Rows>,
    /// Indexed by `h1 * |H| + h2`.
    pub tau: Vec<Vec<u32>>,
    pub beta: Vec<Vec<u32>>,
}

fn rows_of(m: &MatrixModP) -> Rows {
    m.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(i64::from).collect())
        .collect()
}

fn aut_rows(a: &Automorphism) -> Rows {
    a.to_matrix()
        .into_iter()
        .map(|r| r.into_iter().map(i64::from).collect())
        .collect()
}

fn bad(msg: impl Into<String>) -> BraceError {
    BraceError::Descriptor(msg.into())
}

fn check_order(g: &AbelianGroup) -> Result<()> {
    let cap = enumeration_cap();
    if g.order() > cap {
        return Err(BraceError::EnumerationCap {
            order: g.order(),
            cap,
        });
    }
    Ok(())
}

impl BraceDescriptor {
    pub fn parse(json: &str) -> Result<BraceDescriptor> {
        // read the version first so a future format gets a clear message
        let raw: serde_json::Value = serde_json::from_str(json)?;
        match raw.get("version").and_then(|v| v.as_u64()) {
            Some(v) if v == DESCRIPTOR_VERSION as u64 => {}
            Some(v) => return Err(bad(format!("unsupported version {v}"))),
            None => return Err(bad("missing version")),
        }
        serde_json::from_value(raw).map_err(|e| bad(e.to_string()))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Structured form where the brace records its origin; `materialize`
    /// forces the explicit table.
    pub fn from_brace(b: &LeftBrace, materialize: bool) -> BraceDescriptor {
        let group = GroupSpec {
            moduli: b.group().moduli().to_vec(),
        };
        let lambda = if materialize {
            table_spec(b)
        } else {
            match b.kind() {
                LambdaKind::Trivial => LambdaSpec::Trivial {},
                LambdaKind::Table => table_spec(b),
                LambdaKind::Hegedus(h) => LambdaSpec::Hegedus(HegedusSpec {
                    p: h.p,
                    n: h.n,
                    q: rows_of(h.q.coefficients()),
                    f: rows_of(&h.f),
                }),
                LambdaKind::SimpleFamily(s) => LambdaSpec::SimpleFamily(SimpleFamilySpec {
                    p1: s.p1,
                    p2: s.p2,
                    n: s.n,
                    q: rows_of(s.q.coefficients()),
                    f: rows_of(&s.f),
                    gamma: s.gamma,
                    c: rows_of(&s.c),
                    z: s.z.clone(),
                }),
                LambdaKind::MatchedProduct(d) => {
                    LambdaSpec::MatchedProduct(Box::new(MatchedSpec {
                        left: BraceDescriptor::from_brace(d.left(), false),
                        right: BraceDescriptor::from_brace(d.right(), false),
                        alpha: d.alpha_table().iter().map(aut_rows).collect(),
                        beta: d.beta_table().iter().map(aut_rows).collect(),
                    }))
                }
                LambdaKind::Extension(d) => LambdaSpec::Extension(Box::new(ExtensionSpec {
                    base: BraceDescriptor::from_brace(d.base(), false),
                    kernel: GroupSpec {
                        moduli: d.kernel().moduli().to_vec(),
                    },
                    sigma: d.sigma_table().iter().map(aut_rows).collect(),
                    nu: d.nu_table().iter().map(aut_rows).collect(),
                    tau: d
                        .tau_table()
                        .into_iter()
                        .map(Element::into_coords)
                        .collect(),
                    beta: d
                        .beta_table()
                        .into_iter()
                        .map(Element::into_coords)
                        .collect(),
                })),
            }
        };
        BraceDescriptor {
            version: DESCRIPTOR_VERSION,
            group,
            lambda,
        }
    }

    /// Builds and validates the brace.
    pub fn to_brace(&self) -> Result<LeftBrace> {
        if self.version != DESCRIPTOR_VERSION {
            return Err(bad(format!("unsupported version {}", self.version)));
        }
        let g = AbelianGroup::new(self.group.moduli.clone())?;
        check_order(&g)?;
        let b = match &self.lambda {
            LambdaSpec::Trivial {} => trivial_brace(&g),
            LambdaSpec::Table(t) => {
                let classes = t
                    .classes
                    .iter()
                    .map(|rows| Automorphism::from_matrix(&g, rows))
                    .collect::<Result<Vec<_>>>()?;
                if t.class_of.iter().any(|&c| c as usize >= classes.len()) {
                    return Err(bad("class index out of range"));
                }
                let table = LambdaTable::new(classes, t.class_of.clone())?;
                LeftBrace::from_table(g.clone(), table)?.validated()?
            }
            LambdaSpec::Hegedus(h) => {
                if self.group.moduli != vec![h.p; h.n + 1] {
                    return Err(bad("group does not match the hegedus parameters"));
                }
                build_hegedus(&hegedus_params(h)?)?
            }
            LambdaSpec::SimpleFamily(s) => {
                let mut want = vec![s.p1];
                want.extend(std::iter::repeat_n(s.p2, s.n + 1));
                if self.group.moduli != want {
                    return Err(bad("group does not match the family parameters"));
                }
                build_simple_family(&simple_params(s)?)?
            }
            LambdaSpec::MatchedProduct(m) => {
                let left = m.left.to_brace()?;
                let right = m.right.to_brace()?;
                let (lg, rg) = (left.group().clone(), right.group().clone());
                let alpha = m
                    .alpha
                    .iter()
                    .map(|rows| Automorphism::from_matrix(&lg, rows))
                    .collect::<Result<Vec<_>>>()?;
                let beta = m
                    .beta
                    .iter()
                    .map(|rows| Automorphism::from_matrix(&rg, rows))
                    .collect::<Result<Vec<_>>>()?;
                build_matched_product(&MatchedPairData::new(left, right, alpha, beta)?)?
            }
            LambdaSpec::Extension(e) => {
                let h = e.base.to_brace()?;
                let i = AbelianGroup::new(e.kernel.moduli.clone())?;
                check_order(&i)?;
                let auts = |v: &[Rows]| -> Result<Vec<Automorphism>> {
                    v.iter()
                        .map(|rows| Automorphism::from_matrix(&i, rows))
                        .collect()
                };
                let sigma = auts(&e.sigma)?;
                let nu = auts(&e.nu)?;
                let elems = |v: &[Vec<u32>]| -> Vec<Element> {
                    v.iter().map(|c| Element::new(c.clone())).collect()
                };
                let d = ExtensionData::new(h, i.clone(), sigma, nu, elems(&e.tau), elems(&e.beta))?;
                build_extension(&d)?
            }
        };
        if b.group().moduli() != self.group.moduli.as_slice() {
            return Err(bad(format!(
                "declared group {:?} but the construction yields {:?}",
                self.group.moduli,
                b.group().moduli()
            )));
        }
        Ok(b)
    }
}

fn table_spec(b: &LeftBrace) -> LambdaSpec {
    LambdaSpec::Table(TableSpec {
        classes: b.table().classes().iter().map(aut_rows).collect(),
        class_of: b.table().class_of().to_vec(),
    })
}

fn hegedus_params(h: &HegedusSpec) -> Result<HegedusParams> {
    Ok(HegedusParams {
        p: h.p,
        n: h.n,
        q: QuadraticForm::from_rows(h.p, &h.q)?,
        f: MatrixModP::from_rows(h.p, &h.f)?,
    })
}

fn simple_params(s: &SimpleFamilySpec) -> Result<SimpleFamilyParams> {
    Ok(SimpleFamilyParams {
        p1: s.p1,
        p2: s.p2,
        n: s.n,
        q: QuadraticForm::from_rows(s.p2, &s.q)?,
        f: MatrixModP::from_rows(s.p2, &s.f)?,
        gamma: s.gamma,
        c: MatrixModP::from_rows(s.p2, &s.c)?,
        z: s.z.clone(),
    })
}

/// Parses and builds in one step.
pub fn parse_brace(json: &str) -> Result<LeftBrace> {
    BraceDescriptor::parse(json)?.to_brace()
}

/// Serializes a brace in structured form.
pub fn serialize_brace(b: &LeftBrace, materialize: bool) -> Result<String> {
    BraceDescriptor::from_brace(b, materialize).to_json()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::same_lambda;

    #[test]
    fn trivial_round_trip() {
        let g = AbelianGroup::new(vec![5]).unwrap();
        let s = serialize_brace(&trivial_brace(&g), false).unwrap();
        assert!(s.contains("\"trivial\""));
        let b = parse_brace(&s).unwrap();
        assert!(same_lambda(&b, &trivial_brace(&g)));
        assert_eq!(serialize_brace(&b, false).unwrap(), s);
    }

    #[test]
    fn materialized_round_trip() {
        let g = AbelianGroup::new(vec![2, 2]).unwrap();
        let s = serialize_brace(&trivial_brace(&g), true).unwrap();
        assert!(s.contains("\"table\""));
        let b = parse_brace(&s).unwrap();
        assert!(same_lambda(&b, &trivial_brace(&g)));
        assert_eq!(serialize_brace(&b, false).unwrap(), s);
    }

    #[test]
    fn unknown_kind_and_version_rejected() {
        let e = parse_brace(
            r#"{"version":1,"group":{"moduli":[2]},"lambda":{"kind":"magic","params":{}}}"#,
        );
        assert!(matches!(e, Err(BraceError::Descriptor(_))));
        let e = parse_brace(
            r#"{"version":2,"group":{"moduli":[2]},"lambda":{"kind":"trivial","params":{}}}"#,
        );
        assert!(matches!(e, Err(BraceError::Descriptor(m)) if m.contains("version")));
    }

    #[test]
    fn mismatched_group_rejected() {
        let e = parse_brace(
            r#"{"version":1,"group":{"moduli":[2,2]},"lambda":{"kind":"hegedus","params":{"p":2,"n":2,"q":[[0,1],[0,0]],"f":[[0,1],[1,0]]}}}"#,
        );
        assert!(matches!(e, Err(BraceError::Descriptor(_))));
    }
}
