//! Text format for structure constants.
//!
//! ```text
//! homhopf 1
//! name ax1
//! dim 2
//! field_char 0
//! basis 1 x
//! block mul 2 2 2
//! 0 0 0 1
//! 0 1 1 -1
//! ...
//! ```
//!
//! Blocks hold sparse entries `index... value`; unlisted entries are zero,
//! values are integers or reduced `p/q`. `#` starts a comment. Serialization
//! is canonical: fixed header order, blocks sorted by name, entries sorted by
//! index, zeros omitted.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;
use sha2::{Digest, Sha256};

use crate::catalog::{BicrossInput, CatalogEntry};
use crate::error::{HomError, Result};
use crate::exactlin::{format_scalar, parse_scalar, Matrix, Scalar, Tensor3, Vector};
use crate::structures::{
    ComoduleCoaction, HomAlgebra, HomBialgebra, HomHopfAlgebra, ModuleAction, RMatrix, Side, TwoCocycle,
};

pub const SCHEMA_VERSION: u32 = 1;

/// A sparse array with a fixed shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub shape: Vec<usize>,
    pub entries: BTreeMap<Vec<usize>, Scalar>,
}

impl Block {
    fn from_dense(shape: Vec<usize>, values: &[Scalar]) -> Self {
        let mut entries = BTreeMap::new();
        for (flat, v) in values.iter().enumerate() {
            if !v.is_zero() {
                let mut idx = vec![0; shape.len()];
                let mut rest = flat;
                for s in (0..shape.len()).rev() {
                    idx[s] = rest % shape[s];
                    rest /= shape[s];
                }
                entries.insert(idx, v.clone());
            }
        }
        Block { shape, entries }
    }

    pub fn from_tensor(t: &Tensor3) -> Self {
        let (a, b, c) = t.shape();
        Block::from_dense(vec![a, b, c], t.entries())
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        Block::from_dense(vec![m.rows(), m.cols()], m.entries())
    }

    pub fn from_vector(v: &[Scalar]) -> Self {
        Block::from_dense(vec![v.len()], v)
    }

    fn dense(&self) -> Vec<Scalar> {
        let total: usize = self.shape.iter().product();
        let mut out = vec![Scalar::zero(); total];
        for (idx, v) in &self.entries {
            let flat = idx.iter().zip(&self.shape).fold(0, |acc, (i, s)| acc * s + i);
            out[flat] = v.clone();
        }
        out
    }

    pub fn to_tensor(&self) -> Tensor3 {
        let d = self.dense();
        let (b, c) = (self.shape[1], self.shape[2]);
        Tensor3::from_fn(self.shape[0], b, c, |i, j, k| d[(i * b + j) * c + k].clone())
    }

    pub fn to_matrix(&self) -> Matrix {
        let d = self.dense();
        let c = self.shape[1];
        Matrix::from_fn(self.shape[0], c, |i, j| d[i * c + j].clone())
    }

    pub fn to_vector(&self) -> Vector {
        self.dense()
    }
}

/// Parsed contents of a structure-constant file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    /// Labels of the acting algebra when action blocks are present.
    pub actor_basis: Vec<String>,
    /// Side of the `cocycle` block.
    pub side: Option<Side>,
    pub blocks: BTreeMap<String, Block>,
}

/// Expected rank of each block and which dimension each axis uses:
/// `n` is the file's dimension, `m` the acting algebra's, `r` free.
const BLOCKS: &[(&str, &str)] = &[
    ("mul", "nnn"),
    ("unit", "n"),
    ("comul", "nnn"),
    ("counit", "n"),
    ("alpha", "nn"),
    ("antipode", "nn"),
    ("rmatrix", "nn"),
    ("cocycle", "nn"),
    ("pairing", "nr"),
    ("actor_mul", "mmm"),
    ("actor_unit", "m"),
    ("actor_comul", "mmm"),
    ("actor_counit", "m"),
    ("actor_alpha", "mm"),
    ("actor_antipode", "mm"),
    ("action", "mnn"),
    ("coaction", "mmn"),
];

/// A Hom-algebra, Hom-bialgebra or Hom-Hopf algebra read from a file.
#[derive(Clone, Debug, PartialEq)]
pub enum Structure {
    Algebra(HomAlgebra),
    Bialgebra(HomBialgebra),
    Hopf(HomHopfAlgebra),
}

impl Structure {
    pub fn algebra(&self) -> &HomAlgebra {
        match self {
            Structure::Algebra(a) => a,
            Structure::Bialgebra(b) => b.algebra(),
            Structure::Hopf(h) => h.algebra(),
        }
    }

    pub fn bialgebra(&self) -> Option<&HomBialgebra> {
        match self {
            Structure::Algebra(_) => None,
            Structure::Bialgebra(b) => Some(b),
            Structure::Hopf(h) => Some(h.bialgebra()),
        }
    }

    pub fn hopf(&self) -> Option<&HomHopfAlgebra> {
        match self {
            Structure::Hopf(h) => Some(h),
            _ => None,
        }
    }
}

/// Labels `b*` for the dual basis.
pub fn dual_labels(basis: &[String]) -> Vec<String> {
    basis.iter().map(|b| format!("{b}*")).collect()
}

/// Labels `a{sep}b` for a tensor product basis, row-major.
pub fn pair_labels(left: &[String], sep: &str, right: &[String]) -> Vec<String> {
    left.iter().flat_map(|a| right.iter().map(move |b| format!("{a}{sep}{b}"))).collect()
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

impl AlgebraFile {
    pub fn new(name: impl Into<String>, dim: usize, basis: Option<Vec<String>>) -> Self {
        AlgebraFile {
            name: name.into(),
            dim,
            basis: basis.unwrap_or_else(|| default_labels(dim)),
            actor_basis: Vec::new(),
            side: None,
            blocks: BTreeMap::new(),
        }
    }

    pub fn set_block(&mut self, name: &str, block: Block) {
        self.blocks.insert(name.to_string(), block);
    }

    pub fn from_algebra(name: &str, basis: Option<Vec<String>>, a: &HomAlgebra) -> Self {
        let mut f = AlgebraFile::new(name, a.dim(), basis);
        f.set_block("mul", Block::from_tensor(a.mul()));
        f.set_block("unit", Block::from_vector(a.unit()));
        f.set_block("alpha", Block::from_matrix(a.alpha()));
        f
    }

    pub fn from_bialgebra(name: &str, basis: Option<Vec<String>>, b: &HomBialgebra) -> Self {
        let mut f = AlgebraFile::from_algebra(name, basis, b.algebra());
        f.set_block("comul", Block::from_tensor(b.comul()));
        f.set_block("counit", Block::from_vector(b.counit()));
        f
    }

    pub fn from_hopf(name: &str, basis: Option<Vec<String>>, h: &HomHopfAlgebra) -> Self {
        let mut f = AlgebraFile::from_bialgebra(name, basis, h.bialgebra());
        f.set_block("antipode", Block::from_matrix(h.antipode()));
        f
    }

    /// A catalog entry with its R-matrix and action data, if any.
    pub fn from_entry(entry: &CatalogEntry) -> Self {
        let mut f = AlgebraFile::from_hopf(&entry.name, Some(entry.basis.clone()), &entry.hopf);
        if let Some(r) = &entry.r_matrix {
            f.set_block("rmatrix", Block::from_matrix(&r.entries));
        }
        if let Some(b) = &entry.bicross {
            let h = &b.actor;
            f.actor_basis = b.actor_basis.clone();
            f.set_block("actor_mul", Block::from_tensor(h.mul()));
            f.set_block("actor_unit", Block::from_vector(h.unit()));
            f.set_block("actor_comul", Block::from_tensor(h.comul()));
            f.set_block("actor_counit", Block::from_vector(h.counit()));
            f.set_block("actor_alpha", Block::from_matrix(h.alpha()));
            f.set_block("actor_antipode", Block::from_matrix(h.antipode()));
            f.set_block("action", Block::from_tensor(b.action.act()));
            f.set_block("coaction", Block::from_tensor(b.coaction.coact()));
        }
        f
    }

    pub fn from_cocycle(name: &str, sigma: &TwoCocycle) -> Self {
        let mut f = AlgebraFile::new(name, sigma.dim(), None);
        f.side = Some(sigma.side);
        f.set_block("cocycle", Block::from_matrix(&sigma.gram));
        f
    }

    fn need(&self, name: &str) -> Result<&Block> {
        self.blocks.get(name).ok_or_else(|| HomError::InvalidParameter(format!("{}: missing block {name}", self.name)))
    }

    /// The richest structure the blocks describe: `mul`, `unit`, `alpha`
    /// give an algebra, plus `comul`, `counit` a bialgebra, plus `antipode`
    /// a Hopf algebra.
    pub fn structure(&self) -> Result<Structure> {
        let a = HomAlgebra::new(
            self.need("mul")?.to_tensor(),
            self.need("unit")?.to_vector(),
            self.need("alpha")?.to_matrix(),
        )?;
        let (Some(comul), Some(counit)) = (self.blocks.get("comul"), self.blocks.get("counit")) else {
            return Ok(Structure::Algebra(a));
        };
        let b = HomBialgebra::from_parts(
            a.mul().clone(),
            a.unit().clone(),
            comul.to_tensor(),
            counit.to_vector(),
            a.alpha().clone(),
        )?;
        match self.blocks.get("antipode") {
            Some(s) => Ok(Structure::Hopf(HomHopfAlgebra::new(b, s.to_matrix())?)),
            None => Ok(Structure::Bialgebra(b)),
        }
    }

    pub fn hopf(&self) -> Result<HomHopfAlgebra> {
        match self.structure()? {
            Structure::Hopf(h) => Ok(h),
            _ => Err(HomError::InvalidParameter(format!("{} is not a Hom-Hopf algebra (missing blocks)", self.name))),
        }
    }

    pub fn cocycle(&self) -> Result<Option<TwoCocycle>> {
        let Some(b) = self.blocks.get("cocycle") else { return Ok(None) };
        let side = self.side.ok_or_else(|| HomError::InvalidParameter("cocycle block without side".into()))?;
        Ok(Some(TwoCocycle::new(b.to_matrix(), side)?))
    }

    pub fn r_matrix(&self) -> Result<Option<RMatrix>> {
        self.blocks.get("rmatrix").map(|b| RMatrix::new(b.to_matrix())).transpose()
    }

    pub fn bicross(&self) -> Result<Option<BicrossInput>> {
        let Some(action) = self.blocks.get("action") else { return Ok(None) };
        let actor = HomHopfAlgebra::from_parts(
            self.need("actor_mul")?.to_tensor(),
            self.need("actor_unit")?.to_vector(),
            self.need("actor_comul")?.to_tensor(),
            self.need("actor_counit")?.to_vector(),
            self.need("actor_alpha")?.to_matrix(),
            self.need("actor_antipode")?.to_matrix(),
        )?;
        let carrier_alpha = self.need("alpha")?.to_matrix();
        let act = ModuleAction::left(action.to_tensor(), carrier_alpha)?;
        let coaction = ComoduleCoaction::right(self.need("coaction")?.to_tensor(), actor.alpha().clone())?;
        let actor_basis =
            if self.actor_basis.is_empty() { default_labels(actor.dim()) } else { self.actor_basis.clone() };
        Ok(Some(BicrossInput { actor, actor_basis, action: act, coaction }))
    }

    /// Catalog-style entry for a Hom-Hopf algebra file.
    pub fn to_entry(&self) -> Result<CatalogEntry> {
        Ok(CatalogEntry {
            name: self.name.clone(),
            basis: self.basis.clone(),
            hopf: self.hopf()?,
            bicross: self.bicross()?,
            r_matrix: self.r_matrix()?,
            group: None,
        })
    }
}

/// Labels and names are single tokens; whitespace and `#` become `_`.
fn token(s: &str) -> String {
    s.chars().map(|c| if c.is_whitespace() || c == '#' { '_' } else { c }).collect()
}

fn label_line(labels: &[String]) -> String {
    labels.iter().map(|l| token(l)).collect::<Vec<_>>().join(" ")
}

/// Canonical text of a file.
pub fn serialize(f: &AlgebraFile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "homhopf {SCHEMA_VERSION}");
    if !f.name.is_empty() {
        let _ = writeln!(out, "name {}", token(&f.name));
    }
    let _ = writeln!(out, "dim {}", f.dim);
    let _ = writeln!(out, "field_char 0");
    let _ = writeln!(out, "basis {}", label_line(&f.basis));
    if !f.actor_basis.is_empty() {
        let _ = writeln!(out, "actor_basis {}", label_line(&f.actor_basis));
    }
    if let Some(side) = f.side {
        let _ = writeln!(out, "side {}", side.as_str());
    }
    for (name, block) in &f.blocks {
        let shape: Vec<String> = block.shape.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "block {name} {}", shape.join(" "));
        for (idx, v) in &block.entries {
            if v.is_zero() {
                continue;
            }
            let idx: Vec<String> = idx.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{} {}", idx.join(" "), format_scalar(v));
        }
    }
    out
}

/// SHA-256 of the text, hex encoded.
pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

struct Token<'a> {
    text: &'a str,
    col: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (pos, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(pos),
            (true, Some(s)) => {
                out.push(Token { text: &line[s..pos], col: s + 1 });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn parse_err(line: usize, col: usize, message: impl Into<String>) -> HomError {
    HomError::Parse { line, col, message: message.into() }
}

fn parse_count(tok: &Token<'_>, line: usize, what: &str) -> Result<usize> {
    tok.text
        .parse()
        .map_err(|_| parse_err(line, tok.col, format!("{what} must be a nonnegative integer, got {:?}", tok.text)))
}

/// Parses and validates a file.
pub fn parse(text: &str) -> Result<AlgebraFile> {
    let mut saw_header = false;
    let mut name = None;
    let mut dim: Option<usize> = None;
    let mut basis = None;
    let mut actor_basis = Vec::new();
    let mut side = None;
    let mut blocks: BTreeMap<String, Block> = BTreeMap::new();
    let mut block_lines: BTreeMap<String, usize> = BTreeMap::new();
    let mut current: Option<String> = None;
    let mut last_line = 0;

    for (no, raw) in text.lines().enumerate() {
        let line_no = no + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        let Some(first) = toks.first() else { continue };
        if !saw_header {
            if first.text != "homhopf" {
                return Err(parse_err(line_no, first.col, "expected header `homhopf <version>`"));
            }
            let version = toks.get(1).ok_or_else(|| parse_err(line_no, first.col, "missing schema version"))?;
            if version.text != SCHEMA_VERSION.to_string() {
                return Err(parse_err(line_no, version.col, format!("unsupported schema version {:?}", version.text)));
            }
            saw_header = true;
            continue;
        }
        let keyword = first.text;
        if keyword.chars().next().is_some_and(|c| c.is_ascii_digit()) {
            let Some(block_name) = &current else {
                return Err(parse_err(line_no, first.col, "entry outside of a block"));
            };
            let block = blocks.get_mut(block_name).expect("current block exists");
            let rank = block.shape.len();
            if toks.len() != rank + 1 {
                return Err(parse_err(
                    line_no,
                    first.col,
                    format!("block {block_name} expects {rank} indices and a value, got {} fields", toks.len()),
                ));
            }
            let mut idx = Vec::with_capacity(rank);
            for (axis, tok) in toks[..rank].iter().enumerate() {
                let i = parse_count(tok, line_no, "index")?;
                if i >= block.shape[axis] {
                    return Err(HomError::Range {
                        line: line_no,
                        message: format!("index {i} on axis {axis} of block {block_name} with shape {:?}", block.shape),
                    });
                }
                idx.push(i);
            }
            let vtok = &toks[rank];
            let value = parse_scalar(vtok.text).map_err(|e| parse_err(line_no, vtok.col, e.to_string()))?;
            if block.entries.contains_key(&idx) {
                return Err(HomError::DuplicateEntry {
                    line: line_no,
                    message: format!("index {idx:?} of block {block_name} given twice"),
                });
            }
            // Explicit zeros are kept until the end so duplicates are caught.
            block.entries.insert(idx, value);
            continue;
        }
        let rest = &toks[1..];
        let one = |what: &str| -> Result<&Token<'_>> {
            match rest {
                [t] => Ok(t),
                _ => Err(parse_err(line_no, first.col, format!("`{what}` takes exactly one value"))),
            }
        };
        match keyword {
            "name" => {
                let start = rest.first().ok_or_else(|| parse_err(line_no, first.col, "empty name"))?.col - 1;
                name = Some(content[start..].trim_end().to_string());
            }
            "dim" => {
                let t = one("dim")?;
                let d = parse_count(t, line_no, "dim")?;
                if d == 0 {
                    return Err(parse_err(line_no, t.col, "dim must be positive"));
                }
                dim = Some(d);
            }
            "field_char" => {
                let t = one("field_char")?;
                if t.text != "0" {
                    return Err(parse_err(line_no, t.col, "only characteristic 0 is supported"));
                }
            }
            "basis" => basis = Some(rest.iter().map(|t| t.text.to_string()).collect::<Vec<_>>()),
            "actor_basis" => actor_basis = rest.iter().map(|t| t.text.to_string()).collect(),
            "side" => {
                let t = one("side")?;
                side = Some(t.text.parse::<Side>().map_err(|e| parse_err(line_no, t.col, e.to_string()))?);
            }
            "block" => {
                let n = dim.ok_or_else(|| parse_err(line_no, first.col, "`dim` must precede blocks"))?;
                let bname = rest.first().ok_or_else(|| parse_err(line_no, first.col, "block without a name"))?;
                let Some(&(_, axes)) = BLOCKS.iter().find(|(b, _)| *b == bname.text) else {
                    return Err(parse_err(line_no, bname.col, format!("unknown block {:?}", bname.text)));
                };
                if blocks.contains_key(bname.text) {
                    return Err(HomError::DuplicateEntry {
                        line: line_no,
                        message: format!("block {} given twice", bname.text),
                    });
                }
                let dims = &rest[1..];
                if dims.len() != axes.len() {
                    return Err(parse_err(
                        line_no,
                        bname.col,
                        format!("block {} has rank {}, got {} dimensions", bname.text, axes.len(), dims.len()),
                    ));
                }
                let mut shape = Vec::with_capacity(dims.len());
                for (t, axis) in dims.iter().zip(axes.chars()) {
                    let d = parse_count(t, line_no, "block dimension")?;
                    if axis == 'n' && d != n {
                        return Err(parse_err(
                            line_no,
                            t.col,
                            format!("block {} must use dimension {n} here", bname.text),
                        ));
                    }
                    if d == 0 {
                        return Err(parse_err(line_no, t.col, "block dimensions must be positive"));
                    }
                    shape.push(d);
                }
                blocks.insert(bname.text.to_string(), Block { shape, entries: BTreeMap::new() });
                block_lines.insert(bname.text.to_string(), line_no);
                current = Some(bname.text.to_string());
            }
            other => return Err(parse_err(line_no, first.col, format!("unknown keyword {other:?}"))),
        }
    }
    if !saw_header {
        return Err(parse_err(last_line.max(1), 1, "missing header `homhopf 1`"));
    }
    let dim = dim.ok_or_else(|| parse_err(last_line.max(1), 1, "missing `dim`"))?;
    let basis = basis.unwrap_or_else(|| default_labels(dim));
    if basis.len() != dim {
        return Err(parse_err(1, 1, format!("basis has {} labels for dimension {dim}", basis.len())));
    }
    for block in blocks.values_mut() {
        block.entries.retain(|_, v| !v.is_zero());
    }
    // Blocks on the acting algebra must agree on its dimension.
    let mut actor_dim = None;
    for (bname, block) in &blocks {
        let axes = BLOCKS.iter().find(|(b, _)| b == bname).expect("validated").1;
        for (d, axis) in block.shape.iter().zip(axes.chars()) {
            if axis == 'm' {
                match actor_dim {
                    None => actor_dim = Some(*d),
                    Some(m) if m != *d => {
                        return Err(parse_err(
                            block_lines[bname],
                            1,
                            format!("block {bname} disagrees on the acting algebra's dimension ({d} vs {m})"),
                        ));
                    }
                    _ => {}
                }
            }
        }
    }
    if let Some(m) = actor_dim {
        if !actor_basis.is_empty() && actor_basis.len() != m {
            return Err(parse_err(1, 1, format!("actor_basis has {} labels for dimension {m}", actor_basis.len())));
        }
    }
    Ok(AlgebraFile { name: name.unwrap_or_default(), dim, basis, actor_basis, side, blocks })
}
