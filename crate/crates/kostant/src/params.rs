//! Parameter files and the default parameter grid.

use std::fmt;
use std::path::Path;

use kostant_core::module::ModuleParams;
use kostant_core::Q;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

/// A parameter file: either raw weights `{"c": [...]}` or geometric data
/// `{"genus": g, "d": d, "degL": [...]}`.
#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
    #[serde(default, rename = "degL", skip_serializing_if = "Option::is_none")]
    pub deg_l: Option<Vec<i64>>,
}

/// Parameters together with a stable description of where they came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedParams {
    pub label: String,
    pub params: ModuleParams,
}

impl fmt::Display for NamedParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.label, self.params)
    }
}

fn rational(v: &Value) -> Result<Q, CliError> {
    match v {
        Value::String(s) => s.trim().parse().map_err(|e| CliError::Usage(format!("bad rational {s:?}: {e}"))),
        Value::Number(x) => x
            .as_i64()
            .map(Q::from_int)
            .ok_or_else(|| CliError::Usage(format!("c entries must be integers or \"p/q\" strings, got {x}"))),
        other => Err(CliError::Usage(format!("bad rational {other}"))),
    }
}

pub fn geometric(n: u32, genus: i64, d: i64, deg_l: &[i64]) -> Result<NamedParams, CliError> {
    if deg_l.len() != n as usize {
        return Err(CliError::Usage(format!("degL has {} entries, expected {n}", deg_l.len())));
    }
    let params = ModuleParams::from_geometry(genus, d, deg_l).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(NamedParams {
        label: format!("g={genus},d={d},degL={deg_l:?}").replace(' ', ""),
        params,
    })
}

impl ParamsFile {
    pub fn resolve(&self, n: u32) -> Result<NamedParams, CliError> {
        let geo = self.genus.is_some() || self.d.is_some() || self.deg_l.is_some();
        match (&self.c, geo) {
            (Some(_), true) => Err(CliError::Usage("params: give either \"c\" or genus/d/degL, not both".into())),
            (None, false) => Err(CliError::Usage("params: empty specification".into())),
            (Some(c), false) => {
                if c.len() != n as usize {
                    return Err(CliError::Usage(format!("c has {} entries, expected {n}", c.len())));
                }
                let values = c.iter().map(rational).collect::<Result<Vec<_>, _>>()?;
                let params = ModuleParams::new(values).map_err(|e| CliError::Usage(e.to_string()))?;
                Ok(NamedParams {
                    label: "c".into(),
                    params,
                })
            }
            (None, true) => {
                let genus = self.genus.ok_or_else(|| CliError::Usage("params: missing genus".into()))?;
                let d = self.d.ok_or_else(|| CliError::Usage("params: missing d".into()))?;
                let deg_l = self.deg_l.clone().unwrap_or_else(|| vec![0; n as usize]);
                geometric(n, genus, d, &deg_l)
            }
        }
    }
}

pub fn load(path: &Path, n: u32) -> Result<NamedParams, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let file: ParamsFile =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    file.resolve(n)
}

/// `(n, g, d)` of the default grid; line bundle degrees are all zero.
pub const DEFAULT_GRID: [(u32, i64, i64); 5] = [(2, 0, 1), (2, 1, 0), (3, 0, 1), (3, 0, -2), (4, 0, 1)];

/// The grid entries for rank `n`, or `g = 0, d = 1` if the grid has none.
pub fn default_grid(n: u32) -> Vec<NamedParams> {
    let mut out: Vec<NamedParams> = DEFAULT_GRID
        .iter()
        .filter(|(m, _, _)| *m == n)
        .map(|&(m, g, d)| geometric(m, g, d, &vec![0; m as usize]).unwrap())
        .collect();
    if out.is_empty() {
        out.push(geometric(n, 0, 1, &vec![0; n as usize]).unwrap());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> ParamsFile {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn raw_weights() {
        let p = parse(r#"{"c": ["5/2", "-1", 0]}"#).resolve(3).unwrap();
        assert_eq!(p.params.values(), &[Q::new(5, 2), Q::from_int(-1), Q::ZERO]);
        assert!(parse(r#"{"c": ["1"]}"#).resolve(3).is_err());
    }

    #[test]
    fn geometry() {
        let p = parse(r#"{"genus": 0, "d": 1, "degL": [0, 0]}"#).resolve(2).unwrap();
        assert_eq!(p.params.c0(), Q::from_int(5));
        assert!(parse(r#"{"genus": 0, "d": 1, "c": ["1", "2"]}"#).resolve(2).is_err());
        assert!(serde_json::from_str::<ParamsFile>(r#"{"genus": 0, "e": 1}"#).is_err());
    }

    #[test]
    fn grid() {
        assert_eq!(default_grid(2).len(), 2);
        assert_eq!(default_grid(3)[1].params.c0(), Q::from_int(4));
        assert_eq!(default_grid(5).len(), 1);
    }
}
