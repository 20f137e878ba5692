//! Parsers and printers for the on-disk formats.
//!
//! * **MAT** — generator matrices: a header line `n k`, then `k` lines of
//!   exactly `n` characters from `{0,1}`. Blank lines and lines starting
//!   with `#` are ignored. Emitted matrices are always the canonical
//!   reduced-row-echelon basis.
//! * **BVEC** — vectors over `F2[x]/(x^p+1)`: one vector per line, its
//!   entries comma-separated, each entry a length-`p` coefficient string
//!   whose `i`-th character is the coefficient of `x^i`. Blank lines and
//!   `#` comments are ignored.
//! * **Permutations** — 1-indexed cycle notation such as `(1,2,3)(4,5)`,
//!   or a whitespace-separated image list; `()` is the identity. Lists of
//!   permutations are separated by `;`.

use autcode_core::{BinaryCode, BitVector, Error, ExtFieldElem, Permutation, QuotientPoly, Result};

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with('#'))
}

/// Parses MAT text into a code (rows need not be independent; the result
/// is canonicalized).
pub fn parse_mat(text: &str) -> Result<BinaryCode> {
    let mut lines = content_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| Error::Input("empty matrix file".into()))?;
    let mut fields = header.split_whitespace();
    let (n, k) = match (fields.next(), fields.next(), fields.next()) {
        (Some(n), Some(k), None) => {
            let n: usize = n
                .parse()
                .map_err(|_| Error::Input(format!("bad length in header `{header}`")))?;
            let k: usize = k
                .parse()
                .map_err(|_| Error::Input(format!("bad row count in header `{header}`")))?;
            (n, k)
        }
        _ => {
            return Err(Error::Input(format!(
                "header `{header}` is not of the form `n k`"
            )))
        }
    };
    let mut rows = Vec::with_capacity(k);
    for line in lines {
        let row = BitVector::from_bit_str(line)?;
        if row.len() != n {
            return Err(Error::Input(format!(
                "row `{line}` has {} characters, the header says {n}",
                row.len()
            )));
        }
        rows.push(row);
    }
    if rows.len() != k {
        return Err(Error::Input(format!(
            "found {} rows, the header says {k}",
            rows.len()
        )));
    }
    BinaryCode::from_rows(n, &rows)
}

/// Renders a code as MAT text (canonical basis).
pub fn render_mat(code: &BinaryCode) -> String {
    let mut out = format!("{} {}\n", code.length(), code.dim());
    for row in code.basis() {
        out.push_str(&row.to_bit_string());
        out.push('\n');
    }
    out
}

/// Parses BVEC text into rows of quotient-ring elements with modulus
/// `x^p + 1`.
pub fn parse_bvec(text: &str, p: usize) -> Result<Vec<Vec<QuotientPoly>>> {
    let mut rows = Vec::new();
    for line in content_lines(text) {
        let mut row = Vec::new();
        for entry in line.split(',') {
            let poly = QuotientPoly::from_bit_str(entry.trim())?;
            if poly.modulus_exponent() != p {
                return Err(Error::Input(format!(
                    "entry `{}` has {} coefficients, expected {p}",
                    entry.trim(),
                    poly.modulus_exponent()
                )));
            }
            row.push(poly);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Renders rows of field elements as BVEC text.
pub fn render_bvec(rows: &[Vec<ExtFieldElem>]) -> String {
    let mut out = String::new();
    for row in rows {
        let entries: Vec<String> = row.iter().map(|e| e.poly().to_bit_string()).collect();
        out.push_str(&entries.join(","));
        out.push('\n');
    }
    out
}

/// Parses a `;`-separated list of permutations, all of the given degree.
pub fn parse_perm_list(text: &str, degree: usize) -> Result<Vec<Permutation>> {
    text.split(';')
        .map(str::trim)
        .filter(|part| !part.is_empty())
        .map(|part| Permutation::parse(part, degree))
        .collect()
}

/// Human-readable polynomial notation for a coefficient vector:
/// `1 + x + x^2`, or `0` for the zero polynomial.
pub fn poly_notation(coeffs: &BitVector) -> String {
    let terms: Vec<String> = coeffs
        .support()
        .into_iter()
        .map(|e| match e {
            0 => "1".to_string(),
            1 => "x".to_string(),
            e => format!("x^{e}"),
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}
