//! Dimension, stratum and component tables, and operator matrices.

use std::fmt::Write as _;

use kostant_core::heis::{heis_a, heis_a0};
use kostant_core::module::{chevalley, eps_coeff, m_coeff, phi_coeff, Generator, ModuleParams};
use kostant_core::op::{matrix_of, LinOp, PieceMatrix};
use kostant_core::strata::{components_over_source, components_over_target, dim_stratum, ComponentKind};
use kostant_core::{enumerate_kostant, enumerate_multipartitions, DimVec, Residue, Q};
use serde::Serialize;

use crate::report::{csv_error, Format};
use crate::CliError;

/// A rectangular table of strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Table {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("table serializes");
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.columns).map_err(csv_error)?;
                for r in &self.rows {
                    w.write_record(r).map_err(csv_error)?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
                Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
            }
            Format::Text => {
                let mut width: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
                for r in &self.rows {
                    for (w, cell) in width.iter_mut().zip(r) {
                        *w = (*w).max(cell.chars().count());
                    }
                }
                let mut out = String::new();
                for r in std::iter::once(&self.columns).chain(&self.rows) {
                    let line: Vec<String> = r
                        .iter()
                        .zip(&width)
                        .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                        .collect();
                    writeln!(out, "{}", line.join("  ").trim_end()).unwrap();
                }
                Ok(out)
            }
        }
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";")
}

/// Weight-space and stratum data for every `|α| <= max_degree`; the `h`
/// column lists the eigenvalues `c_i + ⟨i', α⟩`.
pub fn dims_table(params: &ModuleParams, max_degree: i64) -> Table {
    let n = params.rank();
    let mut t = Table::new(&["alpha", "norm", "FK", "FM", "max_stratum_dim", "top_strata", "h"]);
    for alpha in DimVec::all_up_to_norm(n, max_degree) {
        let fk = enumerate_kostant(&alpha).len();
        let strata = enumerate_multipartitions(&alpha);
        let dims: Vec<i64> = strata.iter().map(|m| dim_stratum(m).dim).collect();
        let max = dims.iter().copied().max().unwrap_or(0);
        let h = Residue::all(n).map(|i| params.c(i) + Q::from_int(alpha.cartan_pairing(i.value())));
        t.push(vec![
            alpha.to_string(),
            alpha.norm().to_string(),
            fk.to_string(),
            strata.len().to_string(),
            max.to_string(),
            dims.iter().filter(|&&d| d == max).count().to_string(),
            join(h),
        ]);
    }
    t
}

/// The strata `K_μ` of `K_α` with their dimensions.
pub fn strata_table(alpha: &DimVec) -> Table {
    let mut t = Table::new(&["multipartition", "dim", "covering_degree", "fiber_dims", "top"]);
    for mu in enumerate_multipartitions(alpha) {
        let r = dim_stratum(&mu);
        t.push(vec![
            mu.to_string(),
            r.dim.to_string(),
            mu.covering_degree().to_string(),
            join(&r.fiber_dims),
            (r.dim == alpha.norm()).to_string(),
        ]);
    }
    t
}

/// Components of the Hecke correspondence over the top components of
/// `K_α` and `K_{α+i}`, each with its contribution to the matrix coefficient
/// and the full coefficient `φ_i(A', A)` or `ε_i(A, A')`.
pub fn components_table(alpha: &DimVec, i: Residue, params: &ModuleParams) -> Result<Table, CliError> {
    let n = params.rank();
    let up = alpha + &DimVec::simple(n, i.value());
    let mut t = Table::new(&["over", "kind", "source", "target", "multiplicity", "pivot", "value", "coefficient"]);
    let mut push = |over: &str, r: &kostant_core::strata::ComponentRecord, value: Q, coefficient: Q| {
        t.push(vec![
            over.into(),
            r.kind.as_str().into(),
            r.source.to_string(),
            r.target.to_string(),
            r.multiplicity.to_string(),
            r.pivot.map(|p| p.to_string()).unwrap_or_default(),
            value.to_string(),
            coefficient.to_string(),
        ])
    };
    for a in enumerate_kostant(alpha) {
        for r in components_over_source(&a, i) {
            let m = Q::from(r.multiplicity);
            let value = match r.kind {
                ComponentKind::HorizontalCFibration => m_coeff(&a, i, params),
                ComponentKind::VerticalP1Fibration => -m,
                _ => m,
            };
            push("source", &r, value, phi_coeff(&r.target, &r.source, i, params)?);
        }
    }
    for a2 in enumerate_kostant(&up) {
        for r in components_over_target(&a2, i) {
            push("target", &r, Q::from(r.multiplicity), Q::from(eps_coeff(&r.source, &r.target, i)?));
        }
    }
    Ok(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OpKind {
    E,
    F,
    H,
    A,
}

pub fn operator(kind: OpKind, i: Residue, p: i64, params: &ModuleParams) -> LinOp {
    match kind {
        OpKind::E => chevalley(Generator::E, i, params),
        OpKind::F => chevalley(Generator::F, i, params),
        OpKind::H => chevalley(Generator::H, i, params),
        OpKind::A if p == 0 => heis_a0(params),
        OpKind::A => heis_a(p, params),
    }
}

/// Largest basis for which matrices are written out densely.
pub const DENSE_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixReport {
    pub operator: String,
    pub source: String,
    pub target: String,
    pub source_basis: Vec<String>,
    pub target_basis: Vec<String>,
    pub layout: &'static str,
    /// Rows of the dense matrix, if `layout` is `dense`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dense: Option<Vec<Vec<String>>>,
    /// `(row, col, value)` for nonzero entries, if `layout` is `sparse`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sparse: Option<Vec<(usize, usize, String)>>,
}

/// Matrix of `op` on the piece `α`, columns indexed by the source basis.
pub fn matrix_report(name: String, op: &LinOp, alpha: &DimVec) -> Result<MatrixReport, CliError> {
    let PieceMatrix {
        source,
        target,
        source_basis,
        target_basis,
        matrix,
    } = matrix_of(op, alpha)?;
    let dense_ok = source_basis.len().max(target_basis.len()) <= DENSE_LIMIT;
    let cell = |r: usize, c: usize| matrix[(r, c)].to_string();
    let (dense, sparse) = if dense_ok {
        let rows = (0..matrix.rows()).map(|r| (0..matrix.cols()).map(|c| cell(r, c)).collect()).collect();
        (Some(rows), None)
    } else {
        let mut entries = Vec::new();
        for r in 0..matrix.rows() {
            for c in 0..matrix.cols() {
                if !matrix[(r, c)].is_zero() {
                    entries.push((r, c, cell(r, c)));
                }
            }
        }
        (None, Some(entries))
    };
    Ok(MatrixReport {
        operator: name,
        source: source.to_string(),
        target: target.to_string(),
        source_basis: source_basis.iter().map(|a| a.to_string()).collect(),
        target_basis: target_basis.iter().map(|a| a.to_string()).collect(),
        layout: if dense_ok { "dense" } else { "sparse" },
        dense,
        sparse,
    })
}

impl MatrixReport {
    /// Nonzero entries as a `(target, source, value)` table.
    pub fn triplets(&self) -> Table {
        let mut t = Table::new(&["target", "source", "value"]);
        let mut add = |r: usize, c: usize, v: &str| {
            t.push(vec![self.target_basis[r].clone(), self.source_basis[c].clone(), v.to_string()])
        };
        if let Some(rows) = &self.dense {
            for (r, row) in rows.iter().enumerate() {
                for (c, v) in row.iter().enumerate() {
                    if v != "0" {
                        add(r, c, v);
                    }
                }
            }
        }
        for (r, c, v) in self.sparse.iter().flatten() {
            add(*r, *c, v);
        }
        t
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("matrix serializes");
                s.push('\n');
                Ok(s)
            }
            Format::Csv => self.triplets().render(Format::Csv),
            Format::Text => {
                let mut out = format!("{}: {} -> {} ({})\n", self.operator, self.source, self.target, self.layout);
                out.push_str(&self.triplets().render(Format::Text)?);
                Ok(out)
            }
        }
    }
}
