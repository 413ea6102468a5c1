//! JSON and CSV encodings.
//!
//! Rationals are strings `"p/q"` (`"p"` when `q = 1`). Object keys appear in
//! the order of the struct fields below, so output is byte-stable.

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::appendix::{AppendixBattery, OmegaPair, PairingAudit};
use crate::diffop::FactoredEigenfunction;
use crate::error::{Error, Result};
use crate::exactnum::{parse_rational, Polynomial, QuadExt, Rational};
use crate::matrices::Tridiagonal;
use crate::report::SpectralReport;

pub fn rational_str(r: &Rational) -> String {
    r.to_string()
}

fn rational_strs(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational_str).collect()
}

fn parse_all(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadExtJson {
    pub rat: String,
    pub surd: String,
    pub radicand: String,
}

impl From<&QuadExt> for QuadExtJson {
    fn from(q: &QuadExt) -> Self {
        QuadExtJson {
            rat: rational_str(q.rat()),
            surd: rational_str(q.surd()),
            radicand: rational_str(q.radicand()),
        }
    }
}

impl TryFrom<&QuadExtJson> for QuadExt {
    type Error = Error;

    fn try_from(j: &QuadExtJson) -> Result<Self> {
        Ok(QuadExt::new(
            parse_rational(&j.rat)?,
            parse_rational(&j.surd)?,
            parse_rational(&j.radicand)?,
        ))
    }
}

pub fn polynomial_json(p: &Polynomial) -> Vec<QuadExtJson> {
    p.coeffs().iter().map(QuadExtJson::from).collect()
}

pub fn polynomial_from_json(v: &[QuadExtJson]) -> Result<Polynomial> {
    Ok(Polynomial::new(
        v.iter().map(QuadExt::try_from).collect::<Result<_>>()?,
    ))
}

/// Rational coefficient strings; `None` if a coefficient is irrational.
pub fn rational_polynomial_json(p: &Polynomial) -> Option<Vec<String>> {
    p.to_rationals().map(|v| rational_strs(&v))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub size: usize,
    pub sub: Vec<String>,
    pub main: Vec<String>,
    #[serde(rename = "super")]
    pub sup: Vec<String>,
}

impl From<&Tridiagonal> for MatrixJson {
    fn from(t: &Tridiagonal) -> Self {
        MatrixJson {
            size: t.size(),
            sub: rational_strs(t.sub()),
            main: rational_strs(t.main()),
            sup: rational_strs(t.sup()),
        }
    }
}

impl TryFrom<&MatrixJson> for Tridiagonal {
    type Error = Error;

    fn try_from(m: &MatrixJson) -> Result<Self> {
        let t = Tridiagonal::new(parse_all(&m.sub)?, parse_all(&m.main)?, parse_all(&m.sup)?)?;
        if t.size() != m.size {
            return Err(Error::DimensionMismatch {
                expected: m.size,
                found: t.size(),
            });
        }
        Ok(t)
    }
}

pub fn matrix_to_json(t: &Tridiagonal) -> String {
    to_json(&MatrixJson::from(t))
}

pub fn matrix_from_json(s: &str) -> Result<Tridiagonal> {
    let m: MatrixJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    Tridiagonal::try_from(&m)
}

/// Ordered `name -> "p/q"` object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamsJson(pub Vec<(String, String)>);

impl Serialize for ParamsJson {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairJson {
    pub j: i64,
    pub value: QuadExtJson,
    pub vector: Vec<QuadExtJson>,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralReportJson {
    pub family: String,
    pub params: ParamsJson,
    #[serde(rename = "N")]
    pub n: usize,
    pub values: Vec<String>,
    pub pairs: Vec<PairJson>,
    pub char_poly: Vec<QuadExtJson>,
}

impl From<&SpectralReport> for SpectralReportJson {
    fn from(r: &SpectralReport) -> Self {
        SpectralReportJson {
            family: r.family.to_string(),
            params: ParamsJson(
                r.params
                    .iter()
                    .map(|(k, v)| (k.clone(), rational_str(v)))
                    .collect(),
            ),
            n: r.n,
            values: r.values().iter().map(|v| v.to_string()).collect(),
            pairs: r
                .pairs
                .iter()
                .map(|p| PairJson {
                    j: p.index,
                    value: QuadExtJson::from(&p.value),
                    vector: p.vector.iter().map(QuadExtJson::from).collect(),
                    verified: p.verified(),
                })
                .collect(),
            char_poly: polynomial_json(&r.char_poly),
        }
    }
}

/// Summary produced by the `verify` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationJson {
    pub family: String,
    pub params: ParamsJson,
    #[serde(rename = "N")]
    pub n: usize,
    pub pairs_total: usize,
    pub pairs_verified: usize,
    pub char_poly_match: bool,
    pub radicand: Option<String>,
    pub passed: bool,
}

impl From<&SpectralReport> for VerificationJson {
    fn from(r: &SpectralReport) -> Self {
        VerificationJson {
            family: r.family.to_string(),
            params: ParamsJson(
                r.params
                    .iter()
                    .map(|(k, v)| (k.clone(), rational_str(v)))
                    .collect(),
            ),
            n: r.n,
            pairs_total: r.pairs.len(),
            pairs_verified: r.verified_count(),
            char_poly_match: r.char_poly_match,
            radicand: r.radicand.as_ref().map(rational_str),
            passed: r.all_verified(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingAuditJson {
    pub family: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub mapping: Vec<Option<usize>>,
    pub all_verified: bool,
}

impl From<&PairingAudit> for PairingAuditJson {
    fn from(a: &PairingAudit) -> Self {
        PairingAuditJson {
            family: a.family.to_string(),
            n: a.n,
            mapping: a.mapping.clone(),
            all_verified: a.all_verified(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaPairJson {
    #[serde(rename = "N")]
    pub n: usize,
    pub omega0: Vec<String>,
    pub omega1: Vec<String>,
}

impl From<&OmegaPair> for OmegaPairJson {
    fn from(p: &OmegaPair) -> Self {
        let strs =
            |q: &Polynomial| rational_polynomial_json(q).expect("omega polynomials are rational");
        OmegaPairJson {
            n: p.n,
            omega0: strs(&p.omega0),
            omega1: strs(&p.omega1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorJson {
    pub root: QuadExtJson,
    pub exp: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactoredEigenfunctionJson {
    pub j: i64,
    pub scale: QuadExtJson,
    pub factors: Vec<FactorJson>,
}

impl From<&FactoredEigenfunction> for FactoredEigenfunctionJson {
    fn from(f: &FactoredEigenfunction) -> Self {
        FactoredEigenfunctionJson {
            j: f.j,
            scale: QuadExtJson::from(&f.scale),
            factors: f
                .factors
                .iter()
                .map(|(root, exp)| FactorJson {
                    root: QuadExtJson::from(root),
                    exp: *exp,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppendixBatteryJson {
    #[serde(rename = "N")]
    pub n: usize,
    pub checks: Vec<CheckJson>,
    pub omega: Option<OmegaPairJson>,
    pub audits: Vec<PairingAuditJson>,
    pub all_passed: bool,
}

impl From<&AppendixBattery> for AppendixBatteryJson {
    fn from(b: &AppendixBattery) -> Self {
        AppendixBatteryJson {
            n: b.n,
            checks: b
                .checks
                .iter()
                .map(|c| CheckJson {
                    name: c.name.clone(),
                    passed: c.passed,
                    detail: c.detail.clone(),
                })
                .collect(),
            omega: b.omega.as_ref().map(OmegaPairJson::from),
            audits: b.audits.iter().map(PairingAuditJson::from).collect(),
            all_passed: b.all_passed(),
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("payloads serialize infallibly");
    s.push('\n');
    s
}

fn csv_from_rows(header: &[String], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Parse(e.to_string());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
}

/// Dense matrix: header `c0..c{n-1}`, then one row per matrix row.
pub fn matrix_to_csv(t: &Tridiagonal) -> Result<String> {
    let header: Vec<String> = (0..t.size()).map(|k| format!("c{k}")).collect();
    let rows: Vec<Vec<String>> = t.to_dense().iter().map(|r| rational_strs(r)).collect();
    csv_from_rows(&header, &rows)
}

/// One row per pair: `j, value, verified, v0..vN`, values in `x + y*sqrt(d)` form.
pub fn report_to_csv(r: &SpectralReport) -> Result<String> {
    let mut header: Vec<String> = ["j", "value", "verified"].map(String::from).to_vec();
    header.extend((0..=r.n).map(|k| format!("v{k}")));
    let rows: Vec<Vec<String>> = r
        .pairs
        .iter()
        .map(|p| {
            let mut row = vec![
                p.index.to_string(),
                p.value.to_string(),
                p.verified().to_string(),
            ];
            row.extend(p.vector.iter().map(|x| x.to_string()));
            row
        })
        .collect();
    csv_from_rows(&header, &rows)
}

pub fn verification_to_csv(r: &SpectralReport) -> Result<String> {
    let v = VerificationJson::from(r);
    let header = [
        "family",
        "N",
        "pairs_total",
        "pairs_verified",
        "char_poly_match",
        "radicand",
        "passed",
    ]
    .map(String::from)
    .to_vec();
    let row = vec![
        v.family,
        v.n.to_string(),
        v.pairs_total.to_string(),
        v.pairs_verified.to_string(),
        v.char_poly_match.to_string(),
        v.radicand.unwrap_or_default(),
        v.passed.to_string(),
    ];
    csv_from_rows(&header, &[row])
}

/// `check, passed` rows, followed by one `right_mapping_{family}_j{j}` row
/// per audited index carrying the matched eigenvalue index (empty if none).
pub fn battery_to_csv(b: &AppendixBattery) -> Result<String> {
    let header = vec!["check".to_string(), "value".to_string()];
    let mut rows: Vec<Vec<String>> = b
        .checks
        .iter()
        .map(|c| vec![c.name.clone(), c.passed.to_string()])
        .collect();
    for a in &b.audits {
        for (j, m) in a.mapping.iter().enumerate() {
            rows.push(vec![
                format!("right_mapping_{}_j{j}", a.family),
                m.map(|k| k.to_string()).unwrap_or_default(),
            ]);
        }
    }
    csv_from_rows(&header, &rows)
}
