//! JSON documents for symmetric functions and reports.
//!
//! Rationals are always strings `"p/q"` in lowest terms with `q > 0`, integers
//! included (`"3/1"`). Terms are listed in reverse-lexicographic order.

use serde::{Deserialize, Serialize};
use sprout_core::positivity::{MinorReport, PositivityReport};
use sprout_core::{Basis, Error, Partition, Rational, Result, SymFunc};

pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Invalid(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = num.parse().map_err(|_| bad())?;
    let den: sprout_core::BigInt = den.parse().map_err(|_| bad())?;
    if den == 0.into() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub partition: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncDoc {
    pub basis: String,
    pub degree: usize,
    pub terms: Vec<TermDoc>,
}

impl From<&SymFunc> for SymFuncDoc {
    fn from(f: &SymFunc) -> Self {
        SymFuncDoc {
            basis: f.basis().to_string(),
            degree: f.degree(),
            terms: f
                .terms()
                .map(|(lambda, c)| TermDoc { partition: lambda.parts().to_vec(), coeff: rational_to_string(c) })
                .collect(),
        }
    }
}

impl SymFuncDoc {
    pub fn to_symfunc(&self) -> Result<SymFunc> {
        let basis = Basis::from_symbol(&self.basis)
            .ok_or_else(|| Error::Invalid(format!("unknown basis {:?}", self.basis)))?;
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((Partition::new(t.partition.clone())?, parse_rational(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        SymFunc::from_terms(basis, self.degree, terms)
    }
}

pub fn symfunc_to_json(f: &SymFunc) -> String {
    serde_json::to_string_pretty(&SymFuncDoc::from(f)).expect("serializable")
}

pub fn symfunc_from_json(s: &str) -> Result<SymFunc> {
    let doc: SymFuncDoc = serde_json::from_str(s).map_err(|e| Error::Invalid(format!("bad JSON: {e}")))?;
    doc.to_symfunc()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationDoc {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub det: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorReportDoc {
    pub max_order: usize,
    pub max_degree: usize,
    pub decimation: Option<usize>,
    pub minors_checked: u64,
    pub passed: bool,
    pub summary: String,
    pub violations: Vec<ViolationDoc>,
}

impl From<&MinorReport> for MinorReportDoc {
    fn from(r: &MinorReport) -> Self {
        let summary = if r.passed() {
            format!("no violation found up to (order {}, degree {})", r.max_order, r.max_degree)
        } else {
            format!("{} negative minors up to (order {}, degree {})", r.violations.len(), r.max_order, r.max_degree)
        };
        MinorReportDoc {
            max_order: r.max_order,
            max_degree: r.max_degree,
            decimation: r.decimation,
            minors_checked: r.minors_checked,
            passed: r.passed(),
            summary,
            violations: r
                .violations
                .iter()
                .map(|(rows, cols, det)| ViolationDoc {
                    rows: rows.clone(),
                    cols: cols.clone(),
                    det: rational_to_string(det),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeDoc {
    pub n: usize,
    pub partition: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityReportDoc {
    pub basis: String,
    pub n_max: usize,
    pub passed: bool,
    pub first_negative: Option<NegativeDoc>,
    pub e_precheck_failure: Option<usize>,
}

impl From<&PositivityReport> for PositivityReportDoc {
    fn from(r: &PositivityReport) -> Self {
        PositivityReportDoc {
            basis: r.basis.to_string(),
            n_max: r.n_max,
            passed: r.passed(),
            first_negative: r.first_negative.as_ref().map(|(n, lambda, c)| NegativeDoc {
                n: *n,
                partition: lambda.parts().to_vec(),
                coeff: rational_to_string(c),
            }),
            e_precheck_failure: r.e_precheck_failure,
        }
    }
}
