//! Structure-constant files: a line-oriented text format with rational
//! scalars, plus a JSON mirror for machine use.
//!
//! ```text
//! # comment
//! name su2
//! dim 3
//! basis e1 e2 e3
//! bracket e1 e2 = 1 e3
//! automorphism swap order 2
//! row -1 0 0
//! row 0 -1 0
//! row 0 0 -1
//! ```
//!
//! Brackets list [e_i, e_j] as coefficient/label pairs; the antisymmetric
//! counterpart is implied. Scalars are rationals like `-3/2` or `2`.

use std::fmt;

use covext_core::catalogue::CatalogueEntry;
use covext_core::lie::LieAlgebra;
use covext_core::matrix::Mat;
use covext_core::scalar::Rat;
use num_traits::Zero;
use serde::Deserialize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
}

impl ParseError {
    fn new(msg: impl Into<String>) -> Self {
        ParseError { message: msg.into() }
    }

    fn at(line: usize, msg: impl fmt::Display) -> Self {
        ParseError { message: format!("line {line}: {msg}") }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error: {}", self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone)]
pub struct NamedAutomorphism {
    pub name: String,
    pub matrix: Mat,
    pub order: u8,
}

/// A parsed algebra description: the algebra plus named finite-order
/// automorphisms. Structural validation (Jacobi, automorphism property) is
/// left to the commands so that violations surface as failed checks rather
/// than syntax errors.
#[derive(Debug, Clone)]
pub struct AlgebraFile {
    pub name: String,
    pub algebra: LieAlgebra,
    pub automorphisms: Vec<NamedAutomorphism>,
}

impl AlgebraFile {
    /// Parse either the text format or its JSON mirror, detected from the
    /// leading non-whitespace character.
    pub fn parse(input: &str) -> Result<Self, ParseError> {
        if input.trim_start().starts_with('{') {
            Self::parse_json(input)
        } else {
            Self::parse_text(input)
        }
    }

    pub fn parse_text(input: &str) -> Result<Self, ParseError> {
        let mut name: Option<String> = None;
        let mut dim: Option<usize> = None;
        let mut basis: Vec<String> = Vec::new();
        let mut brackets: Vec<(usize, usize, Vec<(usize, Rat)>)> = Vec::new();
        let mut automorphisms: Vec<NamedAutomorphism> = Vec::new();
        let mut pending_rows: Option<(String, u8, Vec<Vec<Rat>>)> = None;

        let label_index = |basis: &[String], label: &str, line: usize| -> Result<usize, ParseError> {
            basis
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| ParseError::at(line, format!("unknown basis label `{label}`")))
        };

        for (lineno, raw) in input.lines().enumerate() {
            let line = lineno + 1;
            let text = raw.split('#').next().unwrap_or("").trim();
            if text.is_empty() {
                continue;
            }
            let mut words = text.split_whitespace();
            let keyword = words.next().unwrap();
            match keyword {
                "name" => {
                    name = Some(
                        words
                            .next()
                            .ok_or_else(|| ParseError::at(line, "missing name"))?
                            .to_string(),
                    );
                }
                "dim" => {
                    let d: usize = words
                        .next()
                        .ok_or_else(|| ParseError::at(line, "missing dimension"))?
                        .parse()
                        .map_err(|e| ParseError::at(line, format!("bad dimension: {e}")))?;
                    dim = Some(d);
                }
                "basis" => {
                    basis = words.map(str::to_string).collect();
                    if let Some(d) = dim {
                        if basis.len() != d {
                            return Err(ParseError::at(
                                line,
                                format!("expected {d} basis labels, found {}", basis.len()),
                            ));
                        }
                    }
                    let mut seen = basis.clone();
                    seen.sort();
                    seen.dedup();
                    if seen.len() != basis.len() {
                        return Err(ParseError::at(line, "duplicate basis labels"));
                    }
                }
                "bracket" => {
                    finish_automorphism(&mut pending_rows, &mut automorphisms, basis.len(), line)?;
                    let i_label = words
                        .next()
                        .ok_or_else(|| ParseError::at(line, "bracket requires two labels"))?;
                    let j_label = words
                        .next()
                        .ok_or_else(|| ParseError::at(line, "bracket requires two labels"))?;
                    let eq = words.next();
                    if eq != Some("=") {
                        return Err(ParseError::at(line, "expected `=` after bracket labels"));
                    }
                    let i = label_index(&basis, i_label, line)?;
                    let j = label_index(&basis, j_label, line)?;
                    let rest: Vec<&str> = words.collect();
                    if rest.len() % 2 != 0 {
                        return Err(ParseError::at(
                            line,
                            "bracket result must be coefficient/label pairs",
                        ));
                    }
                    let mut terms = Vec::new();
                    for pair in rest.chunks(2) {
                        let coeff: Rat = pair[0]
                            .parse()
                            .map_err(|e| ParseError::at(line, format!("bad rational `{}`: {e}", pair[0])))?;
                        let k = label_index(&basis, pair[1], line)?;
                        if !coeff.is_zero() {
                            terms.push((k, coeff));
                        }
                    }
                    brackets.push((i, j, terms));
                }
                "automorphism" => {
                    finish_automorphism(&mut pending_rows, &mut automorphisms, basis.len(), line)?;
                    let auto_name = words
                        .next()
                        .ok_or_else(|| ParseError::at(line, "missing automorphism name"))?
                        .to_string();
                    if words.next() != Some("order") {
                        return Err(ParseError::at(line, "expected `order <d>`"));
                    }
                    let order: u8 = words
                        .next()
                        .ok_or_else(|| ParseError::at(line, "missing order"))?
                        .parse()
                        .map_err(|e| ParseError::at(line, format!("bad order: {e}")))?;
                    pending_rows = Some((auto_name, order, Vec::new()));
                }
                "row" => {
                    let Some((_, _, rows)) = pending_rows.as_mut() else {
                        return Err(ParseError::at(line, "`row` outside an automorphism block"));
                    };
                    let mut entries = Vec::new();
                    for w in words {
                        entries.push(
                            w.parse::<Rat>()
                                .map_err(|e| ParseError::at(line, format!("bad rational `{w}`: {e}")))?,
                        );
                    }
                    if entries.len() != basis.len() {
                        return Err(ParseError::at(
                            line,
                            format!("expected {} entries, found {}", basis.len(), entries.len()),
                        ));
                    }
                    rows.push(entries);
                }
                other => {
                    return Err(ParseError::at(line, format!("unknown keyword `{other}`")));
                }
            }
        }
        finish_automorphism(&mut pending_rows, &mut automorphisms, basis.len(), input.lines().count())?;

        let name = name.ok_or_else(|| ParseError::new("missing `name` line"))?;
        let dim = dim.ok_or_else(|| ParseError::new("missing `dim` line"))?;
        if basis.len() != dim {
            return Err(ParseError::new(format!(
                "dim {dim} does not match {} basis labels",
                basis.len()
            )));
        }
        // Duplicate unordered pairs must agree (after antisymmetry).
        let algebra = build_algebra(basis, &brackets)?;
        Ok(AlgebraFile { name, algebra, automorphisms })
    }

    pub fn parse_json(input: &str) -> Result<Self, ParseError> {
        let raw: JsonAlgebra =
            serde_json::from_str(input).map_err(|e| ParseError::new(format!("bad JSON: {e}")))?;
        if raw.basis.len() != raw.dim {
            return Err(ParseError::new(format!(
                "dim {} does not match {} basis labels",
                raw.dim,
                raw.basis.len()
            )));
        }
        let label_index = |label: &str| -> Result<usize, ParseError> {
            raw.basis
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| ParseError::new(format!("unknown basis label `{label}`")))
        };
        let mut brackets = Vec::new();
        for b in &raw.brackets {
            let i = label_index(&b.i)?;
            let j = label_index(&b.j)?;
            let mut terms = Vec::new();
            for (label, coeff) in &b.result {
                let k = label_index(label)?;
                let c: Rat = coeff
                    .parse()
                    .map_err(|e| ParseError::new(format!("bad rational `{coeff}`: {e}")))?;
                if !c.is_zero() {
                    terms.push((k, c));
                }
            }
            brackets.push((i, j, terms));
        }
        let algebra = build_algebra(raw.basis.clone(), &brackets)?;
        let mut automorphisms = Vec::new();
        for a in &raw.automorphisms {
            if a.matrix.len() != raw.dim || a.matrix.iter().any(|r| r.len() != raw.dim) {
                return Err(ParseError::new(format!(
                    "automorphism `{}` matrix must be {}x{}",
                    a.name, raw.dim, raw.dim
                )));
            }
            let mut rows = Vec::new();
            for row in &a.matrix {
                let mut out = Vec::new();
                for entry in row {
                    out.push(
                        entry
                            .parse::<Rat>()
                            .map_err(|e| ParseError::new(format!("bad rational `{entry}`: {e}")))?,
                    );
                }
                rows.push(out);
            }
            automorphisms.push(NamedAutomorphism {
                name: a.name.clone(),
                matrix: Mat::from_rows(rows),
                order: a.order,
            });
        }
        Ok(AlgebraFile { name: raw.name, algebra, automorphisms })
    }

    /// Canonical text rendering; `parse_text` inverts it exactly. Used by
    /// the golden-file test that keeps `algebras/` in sync.
    #[allow(dead_code)]
    pub fn to_text(&self) -> String {
        let alg = &self.algebra;
        let n = alg.dim();
        let mut out = String::new();
        out.push_str(&format!("name {}\n", self.name));
        out.push_str(&format!("dim {n}\n"));
        out.push_str(&format!("basis {}\n", alg.labels().join(" ")));
        for i in 0..n {
            for j in (i + 1)..n {
                let terms: Vec<String> = (0..n)
                    .filter(|&k| !alg.structure_constant(i, j, k).is_zero())
                    .map(|k| format!("{} {}", alg.structure_constant(i, j, k), alg.label(k)))
                    .collect();
                if !terms.is_empty() {
                    out.push_str(&format!(
                        "bracket {} {} = {}\n",
                        alg.label(i),
                        alg.label(j),
                        terms.join(" ")
                    ));
                }
            }
        }
        for a in &self.automorphisms {
            out.push_str(&format!("automorphism {} order {}\n", a.name, a.order));
            for r in 0..n {
                let row: Vec<String> = (0..n).map(|c| a.matrix[(r, c)].to_string()).collect();
                out.push_str(&format!("row {}\n", row.join(" ")));
            }
        }
        out
    }

    #[allow(dead_code)]
    pub fn from_catalogue(entry: &CatalogueEntry) -> Self {
        AlgebraFile {
            name: entry.name.to_string(),
            algebra: entry.algebra.clone(),
            automorphisms: entry
                .automorphisms
                .iter()
                .map(|(name, matrix, order)| NamedAutomorphism {
                    name: name.to_string(),
                    matrix: matrix.clone(),
                    order: *order,
                })
                .collect(),
        }
    }

    /// Look up a named automorphism; `identity` is implicit unless redefined.
    pub fn automorphism(&self, name: &str) -> Option<NamedAutomorphism> {
        if let Some(found) = self.automorphisms.iter().find(|a| a.name == name) {
            return Some(found.clone());
        }
        (name == "identity").then(|| NamedAutomorphism {
            name: "identity".to_string(),
            matrix: Mat::identity(self.algebra.dim()),
            order: 1,
        })
    }
}

fn finish_automorphism(
    pending: &mut Option<(String, u8, Vec<Vec<Rat>>)>,
    out: &mut Vec<NamedAutomorphism>,
    dim: usize,
    line: usize,
) -> Result<(), ParseError> {
    if let Some((name, order, rows)) = pending.take() {
        if rows.len() != dim {
            return Err(ParseError::at(
                line,
                format!("automorphism `{name}` has {} rows, expected {dim}", rows.len()),
            ));
        }
        out.push(NamedAutomorphism { name, matrix: Mat::from_rows(rows), order });
    }
    Ok(())
}

fn build_algebra(
    basis: Vec<String>,
    brackets: &[(usize, usize, Vec<(usize, Rat)>)],
) -> Result<LieAlgebra, ParseError> {
    // Reject inconsistent duplicates of the same unordered pair.
    for (a, (i1, j1, t1)) in brackets.iter().enumerate() {
        for (i2, j2, t2) in brackets.iter().skip(a + 1) {
            let same = i1 == i2 && j1 == j2;
            let swapped = i1 == j2 && j1 == i2;
            if same || swapped {
                let mut n1 = t1.clone();
                let mut n2: Vec<(usize, Rat)> = t2
                    .iter()
                    .map(|(k, c)| (*k, if swapped { -c.clone() } else { c.clone() }))
                    .collect();
                n1.sort_by_key(|(k, _)| *k);
                n2.sort_by_key(|(k, _)| *k);
                if n1 != n2 {
                    return Err(ParseError::new(format!(
                        "inconsistent duplicate bracket for ({}, {})",
                        basis[*i1], basis[*j1]
                    )));
                }
            }
        }
    }
    Ok(LieAlgebra::from_brackets(basis, brackets))
}

#[derive(Deserialize)]
struct JsonAlgebra {
    name: String,
    dim: usize,
    basis: Vec<String>,
    #[serde(default)]
    brackets: Vec<JsonBracket>,
    #[serde(default)]
    automorphisms: Vec<JsonAutomorphism>,
}

#[derive(Deserialize)]
struct JsonBracket {
    i: String,
    j: String,
    result: Vec<(String, String)>,
}

#[derive(Deserialize)]
struct JsonAutomorphism {
    name: String,
    order: u8,
    matrix: Vec<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use covext_core::catalogue;

    #[test]
    fn text_round_trip_for_catalogue() {
        for entry in catalogue::entries() {
            let file = AlgebraFile::from_catalogue(&entry);
            let text = file.to_text();
            let parsed = AlgebraFile::parse(&text).unwrap();
            assert_eq!(parsed.algebra, entry.algebra, "{} round trip", entry.name);
            assert_eq!(parsed.automorphisms.len(), entry.automorphisms.len());
            for (a, (name, matrix, order)) in parsed.automorphisms.iter().zip(&entry.automorphisms)
            {
                assert_eq!(&a.name, name);
                assert_eq!(&a.matrix, matrix);
                assert_eq!(a.order, *order);
            }
        }
    }

    #[test]
    fn json_mirror_parses() {
        let json = r#"{
            "name": "su2",
            "dim": 3,
            "basis": ["e1", "e2", "e3"],
            "brackets": [
                {"i": "e1", "j": "e2", "result": [["e3", "1"]]},
                {"i": "e2", "j": "e3", "result": [["e1", "1"]]},
                {"i": "e3", "j": "e1", "result": [["e2", "1"]]}
            ]
        }"#;
        let parsed = AlgebraFile::parse(json).unwrap();
        assert_eq!(parsed.algebra, catalogue::su2());
    }

    #[test]
    fn syntax_errors_are_reported_with_lines() {
        let err = AlgebraFile::parse("name x\ndim 2\nbasis a b\nbracket a c = 1 a\n").unwrap_err();
        assert!(err.message.contains("line 4"), "{err}");
        let err = AlgebraFile::parse("dim 2\nbasis a b\n").unwrap_err();
        assert!(err.message.contains("name"), "{err}");
        // Inconsistent duplicate pair.
        let err = AlgebraFile::parse(
            "name x\ndim 2\nbasis a b\nbracket a b = 1 a\nbracket b a = 1 a\n",
        )
        .unwrap_err();
        assert!(err.message.contains("inconsistent"), "{err}");
    }

    #[test]
    fn implicit_identity_twist() {
        let file = AlgebraFile::from_catalogue(&catalogue::entries()[0]);
        let id = file.automorphism("identity").unwrap();
        assert_eq!(id.order, 1);
        assert!(file.automorphism("swap").is_none());
    }
}
