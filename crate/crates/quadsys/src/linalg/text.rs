//! Plain-text matrix format.
//!
//! First line `rows cols domain`, then one row per line with
//! space-separated entries. Domains: `Q`, `Q(sqrt(D))`, `F<p>` (for
//! example `F101`) and `Z`.

use std::fmt::Write;

use super::{IntMatrix, LinalgError, Matrix};
use crate::scalar::{parse_rational, QuadNumber, Rational};

/// A matrix together with its scalar domain.
#[derive(Clone, Debug, PartialEq)]
pub enum DomainMatrix {
    Rational(Matrix<Rational>),
    Quadratic(Matrix<QuadNumber>, i64),
    Modular { p: u32, cols: usize, rows: Vec<Vec<u32>> },
    Integer(IntMatrix),
}

impl DomainMatrix {
    fn header(&self) -> (usize, usize, String) {
        match self {
            DomainMatrix::Rational(m) => (m.rows(), m.cols(), "Q".into()),
            DomainMatrix::Quadratic(m, d) => (m.rows(), m.cols(), format!("Q(sqrt({d}))")),
            DomainMatrix::Modular { p, cols, rows } => (rows.len(), *cols, format!("F{p}")),
            DomainMatrix::Integer(m) => (m.rows(), m.cols(), "Z".into()),
        }
    }

    pub fn to_text(&self) -> String {
        let (r, c, dom) = self.header();
        let mut out = format!("{r} {c} {dom}\n");
        let rows: Vec<Vec<String>> = match self {
            DomainMatrix::Rational(m) => m.row_vecs().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
            DomainMatrix::Quadratic(m, _) => m.row_vecs().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
            DomainMatrix::Modular { rows, .. } => rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
            DomainMatrix::Integer(m) => m.row_vecs().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
        };
        for row in rows {
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }

    pub fn from_text(s: &str) -> Result<Self, LinalgError> {
        let err = |m: &str| LinalgError::Parse(m.to_string());
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| err("missing header"))?;
        let mut parts = header.split_whitespace();
        let r: usize = parts.next().and_then(|x| x.parse().ok()).ok_or_else(|| err("bad row count"))?;
        let c: usize = parts.next().and_then(|x| x.parse().ok()).ok_or_else(|| err("bad column count"))?;
        let dom = parts.next().ok_or_else(|| err("missing domain"))?;
        let cells: Vec<Vec<&str>> = lines.map(|l| l.split_whitespace().collect()).collect();
        if cells.len() != r || cells.iter().any(|row| row.len() != c) {
            return Err(err("shape does not match header"));
        }
        if dom == "Q" {
            let rows = cells
                .iter()
                .map(|row| row.iter().map(|x| parse_rational(x).ok_or_else(|| err(x))).collect())
                .collect::<Result<Vec<Vec<Rational>>, _>>()?;
            Ok(DomainMatrix::Rational(Matrix::from_rows(rows, c)))
        } else if dom == "Z" {
            let rows = cells
                .iter()
                .map(|row| row.iter().map(|x| x.parse::<i64>().map_err(|_| err(x))).collect())
                .collect::<Result<Vec<Vec<i64>>, _>>()?;
            Ok(DomainMatrix::Integer(IntMatrix::from_rows(&rows, c)))
        } else if let Some(p) = dom.strip_prefix('F') {
            let p: u32 = p.parse().map_err(|_| err("bad modulus"))?;
            if !crate::scalar::is_prime(p) {
                return Err(err("modulus is not prime"));
            }
            let rows = cells
                .iter()
                .map(|row| row.iter().map(|x| x.parse::<i64>().map(|v| crate::scalar::reduce_i64(v, p)).map_err(|_| err(x))).collect())
                .collect::<Result<Vec<Vec<u32>>, _>>()?;
            Ok(DomainMatrix::Modular { p, cols: c, rows })
        } else if let Some(d) = dom.strip_prefix("Q(sqrt(").and_then(|x| x.strip_suffix("))")) {
            let d: i64 = d.parse().map_err(|_| err("bad radicand"))?;
            let rows = cells
                .iter()
                .map(|row| row.iter().map(|x| x.parse::<QuadNumber>().map_err(|e| err(&e))).collect())
                .collect::<Result<Vec<Vec<QuadNumber>>, _>>()?;
            Ok(DomainMatrix::Quadratic(Matrix::from_rows(rows, c), d))
        } else {
            Err(err("unknown domain"))
        }
    }
}
