//! Reader for the complex text format:
//!
//! ```text
//! vertices: 6
//! 1 2 3
//! 1 4 5
//! 3 4 6
//! ```
//!
//! One facet per line as space-separated 1-based vertices; `#` starts a
//! comment. A line `{}` denotes the empty facet, so `vertices: n` followed by
//! `{}` is the irrelevant complex and `vertices: n` alone is the void complex.

use super::complex::SimplicialComplex;
use crate::error::ParseError;
use crate::subset::{Subset, MAX_GROUND_SET};

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, ParseError> {
    let mut n: Option<usize> = None;
    let mut facets = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = match raw.find('#') {
            Some(i) => raw[..i].trim(),
            None => raw.trim(),
        };
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertices:") {
            if n.is_some() {
                return Err(ParseError::new(line_no, "duplicate `vertices:` header"));
            }
            let v: usize = rest
                .trim()
                .parse()
                .map_err(|_| ParseError::new(line_no, format!("bad vertex count `{}`", rest.trim())))?;
            if v >= MAX_GROUND_SET {
                return Err(ParseError::new(line_no, format!("at most {} vertices supported", MAX_GROUND_SET - 1)));
            }
            n = Some(v);
            continue;
        }
        let n = n.ok_or_else(|| ParseError::new(line_no, "missing `vertices: n` header"))?;
        if line == "{}" {
            facets.push(Subset::EMPTY);
            continue;
        }
        let mut face = Subset::EMPTY;
        for tok in line.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| ParseError::new(line_no, format!("bad vertex `{tok}`")))?;
            if v == 0 || v > n {
                return Err(ParseError::new(line_no, format!("vertex {v} outside 1..{n}")));
            }
            face = face.with(v - 1);
        }
        facets.push(face);
    }
    let n = n.ok_or_else(|| ParseError::new(0, "missing `vertices: n` header"))?;
    SimplicialComplex::new(n, facets).map_err(|e| ParseError::new(0, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_facets() {
        let c = parse_complex("vertices: 6\n1 2 3\n1 4 5  # second\n\n3 4 6\n").unwrap();
        assert_eq!(c.facet_lists(), vec![vec![1, 2, 3], vec![1, 4, 5], vec![3, 4, 6]]);
    }

    #[test]
    fn void_and_irrelevant() {
        assert!(parse_complex("vertices: 3\n").unwrap().is_void());
        assert_eq!(
            parse_complex("vertices: 3\n{}\n").unwrap(),
            SimplicialComplex::irrelevant(3)
        );
    }

    #[test]
    fn round_trip_through_display() {
        let c = parse_complex("vertices: 5\n1 2\n2 3 4\n5\n").unwrap();
        assert_eq!(parse_complex(&c.to_string()).unwrap(), c);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_complex("1 2\n").unwrap_err().line, 1);
        assert_eq!(parse_complex("vertices: 3\n1 4\n").unwrap_err().line, 2);
        assert!(parse_complex("vertices: 3\n1 a\n").is_err());
        assert!(parse_complex("vertices: x\n").is_err());
        assert!(parse_complex("").is_err());
    }
}
