//! Text formats: matrix files and extended-real numbers.
//!
//! A matrix file is JSON:
//!
//! ```json
//! {"kind": "state", "dim": 2, "data": [[[0.5, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.5, 0.0]]]}
//! ```
//!
//! Entries are `[re, im]` pairs, rows first. A `channel` file carries
//! `dim` (input), `dim_out` and a list of `dim_out × dim` Kraus matrices
//! in `data`. Floats are written in the shortest form that parses back to
//! the same bits, so a written file reloads exactly.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::channels::KrausChannel;
use crate::error::{Error, Result};
use crate::matrix::{c, ComplexMatrix, PositiveFunctional};

/// Trace tolerance for `state` files.
pub const STATE_TRACE_TOL: f64 = 1e-9;

/// Parse a real number, accepting `inf`/`infinity`/`∞` (optionally signed)
/// and fractions `a/b`.
pub fn parse_real(s: &str) -> Result<f64> {
    let t = s.trim();
    let bad = || Error::InvalidInput(format!("cannot parse number '{s}'"));
    let lower = t.to_ascii_lowercase();
    match lower.trim_start_matches('+') {
        "inf" | "infinity" | "∞" => return Ok(f64::INFINITY),
        _ => {}
    }
    if let Some((num, den)) = t.split_once('/') {
        let n: f64 = num.trim().parse().map_err(|_| bad())?;
        let d: f64 = den.trim().parse().map_err(|_| bad())?;
        if d == 0.0 || !n.is_finite() || !d.is_finite() {
            return Err(bad());
        }
        return Ok(n / d);
    }
    let v: f64 = t.parse().map_err(|_| bad())?;
    if v.is_nan() {
        return Err(bad());
    }
    Ok(v)
}

/// 17 significant digits in scientific notation, `inf` for `+∞`.
pub fn format_real(x: f64) -> String {
    if x == f64::INFINITY {
        "inf".into()
    } else if x == f64::NEG_INFINITY {
        "-inf".into()
    } else if x.is_nan() {
        "nan".into()
    } else {
        format!("{x:.16e}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FileKind {
    Matrix,
    State,
    Functional,
    Channel,
}

/// Contents of a matrix file. The raw matrices are kept as read, so writing
/// them back is lossless; conversions validate and build the numerical types.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixFile {
    pub kind: FileKind,
    pub dim: usize,
    /// Output dimension of a channel; equals `dim` otherwise.
    pub dim_out: usize,
    pub matrices: Vec<ComplexMatrix>,
}

type RawMatrix = Vec<Vec<[f64; 2]>>;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    kind: FileKind,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim_out: Option<usize>,
    data: Value,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn decode(raw: RawMatrix, rows: usize, cols: usize) -> Result<ComplexMatrix> {
    if raw.len() != rows || raw.iter().any(|r| r.len() != cols) {
        return Err(invalid(format!("data shape does not match declared {rows}x{cols}")));
    }
    if raw.iter().flatten().flatten().any(|x| !x.is_finite()) {
        return Err(invalid("non-finite entry"));
    }
    Ok(ComplexMatrix::from_fn(rows, cols, |i, j| c(raw[i][j][0], raw[i][j][1])))
}

fn encode(m: &ComplexMatrix) -> RawMatrix {
    (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect()).collect()
}

impl MatrixFile {
    pub fn matrix(m: ComplexMatrix) -> Self {
        Self { kind: FileKind::Matrix, dim: m.nrows(), dim_out: m.nrows(), matrices: vec![m] }
    }

    pub fn state(s: &PositiveFunctional) -> Self {
        Self { kind: FileKind::State, ..Self::matrix(s.density().clone()) }
    }

    pub fn functional(s: &PositiveFunctional) -> Self {
        Self { kind: FileKind::Functional, ..Self::matrix(s.density().clone()) }
    }

    pub fn channel(ch: &KrausChannel) -> Self {
        Self { kind: FileKind::Channel, dim: ch.d_in(), dim_out: ch.d_out(), matrices: ch.kraus_ops().to_vec() }
    }

    /// Parse and validate.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| invalid(format!("matrix file: {e}")))?;
        let dim = raw.dim;
        if dim == 0 {
            return Err(invalid("dim must be positive"));
        }
        let shape_err = |e: serde_json::Error| invalid(format!("matrix file data: {e}"));
        let file = match raw.kind {
            FileKind::Channel => {
                let dim_out = raw.dim_out.ok_or_else(|| invalid("channel file needs dim_out"))?;
                let list: Vec<RawMatrix> = serde_json::from_value(raw.data).map_err(shape_err)?;
                if list.is_empty() {
                    return Err(invalid("channel file has no Kraus operators"));
                }
                let matrices = list.into_iter().map(|m| decode(m, dim_out, dim)).collect::<Result<_>>()?;
                Self { kind: raw.kind, dim, dim_out, matrices }
            }
            kind => {
                if raw.dim_out.is_some_and(|d| d != dim) {
                    return Err(invalid("dim_out only applies to channel files"));
                }
                let m: RawMatrix = serde_json::from_value(raw.data).map_err(shape_err)?;
                Self { kind, dim, dim_out: dim, matrices: vec![decode(m, dim, dim)?] }
            }
        };
        file.validate()?;
        Ok(file)
    }

    fn validate(&self) -> Result<()> {
        match self.kind {
            FileKind::Matrix => Ok(()),
            FileKind::Functional => PositiveFunctional::new(self.matrices[0].clone()).map(|_| ()),
            FileKind::State => {
                let f = PositiveFunctional::new(self.matrices[0].clone())?;
                if (f.trace() - 1.0).abs() > STATE_TRACE_TOL {
                    return Err(Error::NotAState(f.trace()));
                }
                Ok(())
            }
            FileKind::Channel => KrausChannel::new(self.matrices.clone()).map(|_| ()),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        if self.matrices.iter().flat_map(|m| m.iter()).any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(invalid("cannot write non-finite entries"));
        }
        let data = match self.kind {
            FileKind::Channel => serde_json::to_value(self.matrices.iter().map(encode).collect::<Vec<_>>()),
            _ => serde_json::to_value(encode(&self.matrices[0])),
        }
        .map_err(|e| invalid(e.to_string()))?;
        let raw = RawFile {
            kind: self.kind,
            dim: self.dim,
            dim_out: (self.kind == FileKind::Channel).then_some(self.dim_out),
            data,
        };
        serde_json::to_string(&raw).map_err(|e| invalid(e.to_string()))
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_json()? + "\n").map_err(|e| invalid(format!("{}: {e}", path.display())))
    }

    /// The single matrix of a non-channel file.
    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        match self.kind {
            FileKind::Channel => Err(invalid("expected a matrix, found a channel")),
            _ => Ok(self.matrices[0].clone()),
        }
    }

    /// A `state` or `functional` file as a positive functional. States are
    /// rescaled to unit trace after the load-time check.
    pub fn to_functional(&self) -> Result<PositiveFunctional> {
        match self.kind {
            FileKind::State => {
                let f = PositiveFunctional::new(self.matrices[0].clone())?;
                f.normalized()
            }
            FileKind::Functional => PositiveFunctional::new(self.matrices[0].clone()),
            _ => Err(invalid("expected a state or functional file")),
        }
    }

    pub fn to_channel(&self) -> Result<KrausChannel> {
        match self.kind {
            FileKind::Channel => KrausChannel::new(self.matrices.clone()),
            _ => Err(invalid("expected a channel file")),
        }
    }
}
