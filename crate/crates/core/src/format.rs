//! Line-based text format for structure constants.
//!
//! ```text
//! # s_{3,2}
//! dim 3
//! basis x y z
//! [3,1] = 1*e1
//! [3,2] = 1*e1 + 1*e2
//! ```
//!
//! `#` starts a comment and blank lines are ignored. Indices are 1-based.
//! Every bracket not listed is zero, and `[j,i]` is derived from `[i,j]`;
//! listing both orientations is an error. Coefficients are integers or
//! fractions such as `-3/4`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{default_labels, LieAlgebra, StructureConstants, Validation, Violation};
use crate::error::Error;
use crate::linalg::{zero_vector, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("missing `dim` declaration")]
    MissingDim,

    #[error("line {line}: bracket [{i},{j}] is defined more than once (counting [{j},{i}])")]
    DuplicateBracket { line: usize, i: usize, j: usize },

    #[error("line {line}: index {index} is out of range 1..={dim}")]
    IndexOutOfRange {
        line: usize,
        index: usize,
        dim: usize,
    },

    #[error("line {line}: {message}")]
    Labels { line: usize, message: String },

    /// The text is well-formed but the brackets do not define a Lie algebra.
    #[error("{0}")]
    Invalid(Violation),
}

impl ParseError {
    /// Whether the failure is a bracket-axiom violation rather than a
    /// syntax problem.
    pub fn is_invalid_algebra(&self) -> bool {
        matches!(self, ParseError::Invalid(_))
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Parses `-?digits(/digits)?`.
pub fn parse_rational(token: &str) -> Option<Rational> {
    let (sign, body) = match token.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, token),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || !den.is_none_or(digits) {
        return None;
    }
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = match den {
        Some(d) => d.parse().ok()?,
        None => BigInt::from(1),
    };
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n * sign, d))
}

fn parse_index(token: &str, line: usize, dim: usize) -> Result<usize, ParseError> {
    let token = token.trim();
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(
            line,
            format!("expected a basis index, found '{token}'"),
        ));
    }
    let index: usize = token
        .parse()
        .map_err(|_| syntax(line, format!("index '{token}' is too large")))?;
    if index == 0 || index > dim {
        return Err(ParseError::IndexOutOfRange { line, index, dim });
    }
    Ok(index - 1)
}

fn parse_rhs(rhs: &str, line: usize, dim: usize) -> Result<Vec<Rational>, ParseError> {
    let mut image = zero_vector(dim);
    if rhs.trim() == "0" {
        return Ok(image);
    }
    for term in rhs.split('+') {
        let term = term.trim();
        let Some((coeff, basis)) = term.split_once('*') else {
            return Err(syntax(
                line,
                format!("expected '<rational>*e<k>', found '{term}'"),
            ));
        };
        let coeff = parse_rational(coeff.trim())
            .ok_or_else(|| syntax(line, format!("bad coefficient '{}'", coeff.trim())))?;
        let basis = basis.trim();
        let Some(k) = basis.strip_prefix('e') else {
            return Err(syntax(line, format!("expected 'e<k>', found '{basis}'")));
        };
        let k = parse_index(k, line, dim)?;
        image[k] += coeff;
    }
    Ok(image)
}

pub fn parse_algebra(text: &str) -> Result<LieAlgebra, ParseError> {
    let mut dim: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut builder = None;

    for (number, raw) in text.lines().enumerate() {
        let line = number + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut words = content.split_whitespace();
        let head = words.next().unwrap_or("");

        if head == "dim" {
            if dim.is_some() {
                return Err(syntax(line, "`dim` declared more than once"));
            }
            let rest: Vec<&str> = words.collect();
            let [n] = rest.as_slice() else {
                return Err(syntax(line, "expected `dim <n>`"));
            };
            if !n.bytes().all(|b| b.is_ascii_digit()) {
                return Err(syntax(line, format!("bad dimension '{n}'")));
            }
            let n: usize = n
                .parse()
                .map_err(|_| syntax(line, format!("bad dimension '{n}'")))?;
            dim = Some(n);
            builder = Some(StructureConstants::builder(n));
        } else if head == "basis" {
            let Some(n) = dim else {
                return Err(syntax(line, "`basis` must follow the `dim` line"));
            };
            if labels.is_some() {
                return Err(syntax(line, "`basis` declared more than once"));
            }
            let names: Vec<String> = words.map(str::to_string).collect();
            if names.len() != n {
                return Err(ParseError::Labels {
                    line,
                    message: format!("expected {n} basis names, found {}", names.len()),
                });
            }
            let mut seen = std::collections::HashSet::new();
            if let Some(dup) = names.iter().find(|s| !seen.insert(s.as_str())) {
                return Err(ParseError::Labels {
                    line,
                    message: format!("basis name '{dup}' appears twice"),
                });
            }
            labels = Some(names);
        } else if content.starts_with('[') {
            let (Some(n), Some(b)) = (dim, builder.as_mut()) else {
                return Err(syntax(
                    line,
                    "bracket definitions must follow the `dim` line",
                ));
            };
            let close = content
                .find(']')
                .ok_or_else(|| syntax(line, "missing ']'"))?;
            let (i, j) = content[1..close]
                .split_once(',')
                .ok_or_else(|| syntax(line, "expected '[i,j]'"))?;
            let (i, j) = (parse_index(i, line, n)?, parse_index(j, line, n)?);
            let rhs = content[close + 1..]
                .trim_start()
                .strip_prefix('=')
                .ok_or_else(|| syntax(line, "expected '=' after the bracket"))?;
            let image = parse_rhs(rhs, line, n)?;
            b.bracket(i, j, &image).map_err(|e| match e {
                Error::DuplicateBracket { i, j } => ParseError::DuplicateBracket {
                    line,
                    i: i + 1,
                    j: j + 1,
                },
                Error::InvalidAlgebra(v) => ParseError::Invalid(v),
                other => syntax(line, other.to_string()),
            })?;
        } else {
            return Err(syntax(line, format!("unrecognized line '{content}'")));
        }
    }

    let (Some(n), Some(b)) = (dim, builder) else {
        return Err(ParseError::MissingDim);
    };
    let labels = labels.unwrap_or_else(|| default_labels(n));
    let algebra = LieAlgebra::new(b.build(), labels).map_err(|e| ParseError::Labels {
        line: 0,
        message: e.to_string(),
    })?;
    match algebra.validate() {
        Validation::Valid => Ok(algebra),
        Validation::Violated(v) => Err(ParseError::Invalid(v)),
    }
}

/// Writes `l` in the text format, one line per nonzero `[e_i, e_j]` with
/// `i < j`.
pub fn render_algebra(l: &LieAlgebra) -> String {
    let n = l.dim();
    let mut out = String::new();
    writeln!(out, "dim {n}").unwrap();
    if n > 0 {
        writeln!(out, "basis {}", l.labels().join(" ")).unwrap();
    }
    for i in 0..n {
        for j in i + 1..n {
            let image = l.constants().bracket_of_basis(i, j);
            let terms: Vec<String> = image
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("{c}*e{}", k + 1))
                .collect();
            if !terms.is_empty() {
                writeln!(out, "[{},{}] = {}", i + 1, j + 1, terms.join(" + ")).unwrap();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::linalg::{int_vector, ratio};

    #[test]
    fn parses_s3_2() {
        let text = "dim 3\nbasis x y z\n[3,1] = 1*e1\n[3,2] = 1*e1 + 1*e2\n";
        let l = parse_algebra(text).unwrap();
        assert_eq!(l, catalog::get("s3_2").unwrap().algebra);
    }

    #[test]
    fn bare_dim_is_abelian() {
        let l = parse_algebra("dim 2").unwrap();
        assert_eq!(l, LieAlgebra::abelian(2));
    }

    #[test]
    fn duplicate_orientation_is_rejected() {
        let err = parse_algebra("dim 3\n[1,2] = 1*e1\n[2,1] = 1*e1\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::DuplicateBracket {
                line: 3,
                i: 2,
                j: 1
            }
        );
    }

    #[test]
    fn comments_blank_lines_and_crlf() {
        let text = "# header\r\n\r\ndim 3 # three\r\n[1,2] = 1*e3  # heis\r\n";
        let l = parse_algebra(text).unwrap();
        assert_eq!(l, catalog::get("heis3").unwrap().algebra);
    }

    #[test]
    fn fractions_negatives_and_zero_rhs() {
        let l = parse_algebra("dim 2\n[1,2] = -3/6*e2\n").unwrap();
        assert_eq!(
            l.constants().bracket_of_basis(0, 1),
            &[ratio(0, 1), ratio(-1, 2)][..]
        );
        assert_eq!(
            l.constants().bracket_of_basis(1, 0),
            &[ratio(0, 1), ratio(1, 2)][..]
        );
        let l = parse_algebra("dim 2\n[1,2] = 0\n").unwrap();
        assert_eq!(l, LieAlgebra::abelian(2));
    }

    #[test]
    fn jacobi_failure_is_reported_with_triple() {
        let text = "dim 3\n[1,2] = 1*e1\n[2,3] = 1*e2\n[3,1] = 1*e3\n";
        match parse_algebra(text).unwrap_err() {
            ParseError::Invalid(Violation::Jacobi { i, j, k, sum }) => {
                assert_eq!((i, j, k), (0, 1, 2));
                assert_eq!(sum, int_vector(&[-1, -1, -1]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let cases = [
            ("[1,2] = 1*e1\ndim 2", 1),
            ("dim 2\n[1,2] = e1", 2),
            ("dim 2\n[1,2] = 1*e1 - 1*e2", 2),
            ("dim 2\n\nfoo", 3),
            ("dim 2\ndim 3", 2),
            ("dim x", 1),
            ("dim 2\n[1,2] = 1/0*e1", 2),
            ("dim 2\n[1 2] = 1*e1", 2),
        ];
        for (text, expected) in cases {
            match parse_algebra(text) {
                Err(ParseError::Syntax { line, .. }) => assert_eq!(line, expected, "{text:?}"),
                other => panic!("{text:?}: unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn index_out_of_range() {
        assert_eq!(
            parse_algebra("dim 2\n[1,3] = 1*e1").unwrap_err(),
            ParseError::IndexOutOfRange {
                line: 2,
                index: 3,
                dim: 2
            }
        );
        assert_eq!(
            parse_algebra("dim 2\n[1,2] = 1*e0").unwrap_err(),
            ParseError::IndexOutOfRange {
                line: 2,
                index: 0,
                dim: 2
            }
        );
    }

    #[test]
    fn missing_dim_and_bad_basis() {
        assert_eq!(
            parse_algebra("# nothing\n").unwrap_err(),
            ParseError::MissingDim
        );
        assert!(matches!(
            parse_algebra("dim 2\nbasis a"),
            Err(ParseError::Labels { line: 2, .. })
        ));
        assert!(matches!(
            parse_algebra("dim 2\nbasis a a"),
            Err(ParseError::Labels { line: 2, .. })
        ));
    }

    #[test]
    fn nonzero_self_bracket_is_invalid() {
        let err = parse_algebra("dim 2\n[1,1] = 1*e2").unwrap_err();
        assert!(err.is_invalid_algebra());
    }

    #[test]
    fn rational_tokens() {
        assert_eq!(parse_rational("-3/4"), Some(ratio(-3, 4)));
        assert_eq!(parse_rational("12"), Some(ratio(12, 1)));
        for bad in ["", "-", "1/", "/2", "+1", "1.5", "--1", "1/-2", "1/0"] {
            assert_eq!(parse_rational(bad), None, "{bad}");
        }
    }

    #[test]
    fn catalog_round_trips() {
        for entry in catalog::all() {
            let text = render_algebra(&entry.algebra);
            let back = parse_algebra(&text).unwrap();
            assert_eq!(back, entry.algebra, "{}", entry.name);
        }
    }
}
