//! Determinant tables from a parameter file.
//!
//! A parameter file has one `m1,m2,n,l` literal per line, optionally followed
//! by whitespace and a free-form name. Blank lines and lines starting with `#`
//! are skipped. Every row is computed by all routes and cross-checked before
//! anything is rendered.

use std::fmt::Write as _;

use braidet_core::braid::TghwParams;
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::record::{run_routes, Input, Route};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub params: TghwParams,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for LineError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

/// Parses every line, collecting all errors rather than stopping at the first.
pub fn parse_params_file(text: &str) -> Result<Vec<TableRow>, Vec<LineError>> {
    let mut rows = Vec::new();
    let mut errors = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (literal, name) = match line.split_once(char::is_whitespace) {
            Some((lit, rest)) => (lit, rest.trim()),
            None => (line, ""),
        };
        match literal.parse::<TghwParams>() {
            Ok(params) => rows.push(TableRow {
                params,
                name: name.to_string(),
            }),
            Err(e) => errors.push(LineError {
                line: i + 1,
                message: e.to_string(),
            }),
        }
    }
    if errors.is_empty() {
        Ok(rows)
    } else {
        Err(errors)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRecord {
    pub m1: u32,
    pub m2: u32,
    pub n: u32,
    pub l: i32,
    pub name: String,
    pub det: String,
}

/// Computes each row's determinant by every route, in input order.
pub fn compute_rows(rows: &[TableRow]) -> Result<Vec<(TableRow, BigUint)>> {
    rows.par_iter()
        .map(|row| {
            let values = run_routes(&Input::Params(row.params), Route::All)?;
            let det = values.agreed(&row.params.to_string())?.clone();
            Ok((row.clone(), det))
        })
        .collect()
}

fn records(rows: &[(TableRow, BigUint)]) -> impl Iterator<Item = TableRecord> + '_ {
    rows.iter().map(|(row, det)| TableRecord {
        m1: row.params.m1(),
        m2: row.params.m2(),
        n: row.params.n(),
        l: row.params.l(),
        name: row.name.clone(),
        det: det.to_string(),
    })
}

pub fn render(rows: &[(TableRow, BigUint)], format: TableFormat) -> String {
    match format {
        TableFormat::Json => render_json(rows),
        TableFormat::Csv => render_csv(rows),
        TableFormat::Latex => render_latex(rows),
    }
}

fn render_json(rows: &[(TableRow, BigUint)]) -> String {
    let mut out = String::new();
    for rec in records(rows) {
        out.push_str(&serde_json::to_string(&rec).expect("plain struct serializes"));
        out.push('\n');
    }
    out
}

fn render_csv(rows: &[(TableRow, BigUint)]) -> String {
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    writer
        .write_record(["m1", "m2", "n", "l", "name", "det"])
        .expect("in-memory write");
    for rec in records(rows) {
        writer.serialize(rec).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

/// `10_161 = 10_162` -> `10_{161} = 10_{162}`; single-character subscripts
/// stay unbraced (`3_1`).
fn latex_knot_name(name: &str) -> String {
    let mut out = String::new();
    let mut chars = name.chars().peekable();
    while let Some(c) = chars.next() {
        if c == '_' && chars.peek().is_some_and(char::is_ascii_alphanumeric) {
            let mut sub = String::new();
            while let Some(d) = chars.next_if(char::is_ascii_alphanumeric) {
                sub.push(d);
            }
            if sub.len() == 1 {
                out.push('_');
                out.push_str(&sub);
            } else {
                out.push_str("_{");
                out.push_str(&sub);
                out.push('}');
            }
        } else {
            out.push(c);
        }
    }
    out
}

fn render_latex(rows: &[(TableRow, BigUint)]) -> String {
    let mut out = String::new();
    out.push_str("\\begin{tabular}{lcr}\n\\toprule\n");
    out.push_str(
        "$(m_1,m_2,n,l)$ & $\\hat{Q}_3(m_1,-m_2,n,\\ell)$ & $\\det(\\hat{Q}_3(m_1,-m_2,n,\\ell))$\\\\\n",
    );
    out.push_str("\\midrule\n");
    for (row, det) in rows {
        let name = if row.name.is_empty() {
            String::new()
        } else {
            format!("${}$", latex_knot_name(&row.name))
        };
        writeln!(out, "$({})$ & {} & ${}$\\\\", row.params, name, det).expect("string write");
    }
    out.push_str("\\bottomrule\n\\end{tabular}\n");
    out
}

/// Parses, computes and renders; parse errors become one input error listing
/// every bad line.
pub fn cmd_table(text: &str, format: TableFormat) -> Result<String> {
    let rows = parse_params_file(text).map_err(|errors| {
        Error::Input(
            errors
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("\n"),
        )
    })?;
    let computed = compute_rows(&rows)?;
    Ok(render(&computed, format))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_with_names_and_comments() {
        let rows = parse_params_file("# header\n\n3,1,1,0  3_1\n1,5,1,2 10_161 = 10_162\n9,1,1,0\n").unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].name, "3_1");
        assert_eq!(rows[1].name, "10_161 = 10_162");
        assert_eq!(rows[2].name, "");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let errors = parse_params_file("3,1,1,0\nnot a row\n1,1,0,0\n").unwrap_err();
        assert_eq!(errors.iter().map(|e| e.line).collect::<Vec<_>>(), [2, 3]);
        assert!(errors[0].to_string().starts_with("line 2:"));
    }

    #[test]
    fn empty_file_renders_header_only() {
        assert_eq!(cmd_table("", TableFormat::Csv).unwrap(), "m1,m2,n,l,name,det\n");
        assert_eq!(cmd_table("", TableFormat::Json).unwrap(), "");
    }

    #[test]
    fn formats() {
        let text = "3,1,1,0 3_1\n1,1,4,-1 10_157\n";
        assert_eq!(
            cmd_table(text, TableFormat::Csv).unwrap(),
            "m1,m2,n,l,name,det\n3,1,1,0,3_1,3\n1,1,4,-1,10_157,49\n"
        );
        assert_eq!(
            cmd_table(text, TableFormat::Json).unwrap().lines().next().unwrap(),
            r#"{"m1":3,"m2":1,"n":1,"l":0,"name":"3_1","det":"3"}"#
        );
        let latex = cmd_table(text, TableFormat::Latex).unwrap();
        assert!(latex.contains("$(1,1,4,-1)$ & $10_{157}$ & $49$\\\\\n"));
    }

    #[test]
    fn latex_names() {
        assert_eq!(latex_knot_name("10_161 = 10_162"), "10_{161} = 10_{162}");
        assert_eq!(latex_knot_name("3_1"), "3_1");
        assert_eq!(latex_knot_name("8_18"), "8_{18}");
        assert_eq!(latex_knot_name("Perko"), "Perko");
    }
}
