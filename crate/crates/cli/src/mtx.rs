//! Dense Matrix Market (`array` format) reader and writer.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use conjulin::{Complex64, ComplexMatrix, RealMatrix};

const REAL_HEADER: &str = "%%MatrixMarket matrix array real general";
const COMPLEX_HEADER: &str = "%%MatrixMarket matrix array complex general";

#[derive(Debug, thiserror::Error)]
pub enum MtxError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("expected {expected} entries, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("expected a real matrix, found complex entries")]
    NotReal,
    #[error("expected a column vector, found {rows}x{cols}")]
    NotVector { rows: usize, cols: usize },
}

/// Contents of a matrix file; real files promote to complex on demand.
#[derive(Debug, Clone, PartialEq)]
pub enum MatrixFile {
    Real(RealMatrix),
    Complex(ComplexMatrix),
}

impl MatrixFile {
    pub fn shape(&self) -> (usize, usize) {
        match self {
            MatrixFile::Real(m) => m.shape(),
            MatrixFile::Complex(m) => m.shape(),
        }
    }

    pub fn into_complex(self) -> ComplexMatrix {
        match self {
            MatrixFile::Real(m) => m.to_complex(),
            MatrixFile::Complex(m) => m,
        }
    }

    pub fn into_real(self) -> Result<RealMatrix, MtxError> {
        match self {
            MatrixFile::Real(m) => Ok(m),
            MatrixFile::Complex(_) => Err(MtxError::NotReal),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> MtxError {
    MtxError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_float(tok: &str, line: usize) -> Result<f64, MtxError> {
    let x: f64 = tok
        .parse()
        .map_err(|_| parse_err(line, format!("invalid number {tok:?}")))?;
    if !x.is_finite() {
        return Err(parse_err(line, format!("non-finite value {tok:?}")));
    }
    Ok(x)
}

pub fn parse_str(text: &str) -> Result<MatrixFile, MtxError> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l));
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let complex = match header.trim_end() {
        REAL_HEADER => false,
        COMPLEX_HEADER => true,
        other => return Err(parse_err(1, format!("unsupported header {other:?}"))),
    };

    let mut body = lines.filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('%')
    });
    let (dim_line, dims) = body.next().ok_or_else(|| parse_err(2, "missing dimension line"))?;
    let dims: Vec<&str> = dims.split_whitespace().collect();
    if dims.len() != 2 {
        return Err(parse_err(dim_line, "dimension line must be \"rows cols\""));
    }
    let parse_dim = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| parse_err(dim_line, format!("invalid dimension {s:?}")))
    };
    let (rows, cols) = (parse_dim(dims[0])?, parse_dim(dims[1])?);
    let expected = rows * cols;

    let width = if complex { 2 } else { 1 };
    let mut values = Vec::with_capacity(expected);
    for (line, entry) in body {
        let toks: Vec<&str> = entry.split_whitespace().collect();
        if toks.len() != width {
            return Err(parse_err(line, format!("expected {width} value(s), found {}", toks.len())));
        }
        let re = parse_float(toks[0], line)?;
        let im = if complex { parse_float(toks[1], line)? } else { 0.0 };
        values.push(Complex64::new(re, im));
    }
    if values.len() != expected {
        return Err(MtxError::Dimension {
            expected,
            found: values.len(),
        });
    }

    // column-major on disk
    if complex {
        Ok(MatrixFile::Complex(ComplexMatrix::from_fn(rows, cols, |i, j| values[j * rows + i])))
    } else {
        Ok(MatrixFile::Real(RealMatrix::from_fn(rows, cols, |i, j| values[j * rows + i].re)))
    }
}

pub fn read(path: &Path) -> Result<MatrixFile, MtxError> {
    let text = fs::read_to_string(path).map_err(|source| MtxError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_str(&text)
}

pub fn read_complex(path: &Path) -> Result<ComplexMatrix, MtxError> {
    read(path).map(MatrixFile::into_complex)
}

pub fn read_real(path: &Path) -> Result<RealMatrix, MtxError> {
    read(path)?.into_real()
}

fn column(file: MatrixFile) -> Result<MatrixFile, MtxError> {
    match file.shape() {
        (_, 1) => Ok(file),
        (rows, cols) => Err(MtxError::NotVector { rows, cols }),
    }
}

pub fn read_complex_vector(path: &Path) -> Result<Vec<Complex64>, MtxError> {
    Ok(column(read(path)?)?.into_complex().column(0))
}

pub fn read_real_vector(path: &Path) -> Result<Vec<f64>, MtxError> {
    Ok(column(read(path)?)?.into_real()?.column(0))
}

/// 17 significant digits.
fn num(out: &mut String, x: f64) {
    write!(out, "{x:.16e}").unwrap();
}

pub fn format_real(m: &RealMatrix) -> String {
    let mut out = format!("{REAL_HEADER}\n{} {}\n", m.rows(), m.cols());
    for j in 0..m.cols() {
        for i in 0..m.rows() {
            num(&mut out, m[(i, j)]);
            out.push('\n');
        }
    }
    out
}

pub fn format_complex(m: &ComplexMatrix) -> String {
    let mut out = format!("{COMPLEX_HEADER}\n{} {}\n", m.rows(), m.cols());
    for j in 0..m.cols() {
        for i in 0..m.rows() {
            let z = m[(i, j)];
            num(&mut out, z.re);
            out.push(' ');
            num(&mut out, z.im);
            out.push('\n');
        }
    }
    out
}

pub fn format_real_vector(v: &[f64]) -> String {
    format_real(&RealMatrix::from_columns(v.len(), &[v.to_vec()]))
}

pub fn format_complex_vector(v: &[Complex64]) -> String {
    format_complex(&ComplexMatrix::from_columns(v.len(), &[v.to_vec()]))
}
