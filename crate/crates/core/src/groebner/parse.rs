//! Reader for the ideal text format:
//!
//! ```text
//! # 2x2 minors of a 2x3 matrix
//! vars: 6
//! char: 0
//! x1*x5 - x2*x4
//! x1*x6 - x3*x4
//! x2*x6 - x3*x5
//! ```
//!
//! `vars:` comes first; `char:` is optional. Each further non-empty line is
//! one generator with integer coefficients built from `x1..xn`, `+ - * ^`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::ideal::Ideal;
use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::Polynomial;
use crate::error::ParseError;
use crate::field::{FieldSpec, Rationals};

/// An ideal file: integer generators plus an optional declared characteristic.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealFile {
    pub nvars: usize,
    pub characteristic: Option<FieldSpec>,
    pub ideal: Ideal<Rationals>,
}

pub fn parse_ideal(text: &str) -> Result<IdealFile, ParseError> {
    let mut nvars: Option<usize> = None;
    let mut characteristic = None;
    let mut gens = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars:") {
            if nvars.is_some() {
                return Err(ParseError::new(line_no, "duplicate `vars:` header"));
            }
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| ParseError::new(line_no, format!("bad variable count `{}`", rest.trim())))?;
            if n == 0 {
                return Err(ParseError::new(line_no, "variable count must be positive"));
            }
            nvars = Some(n);
            continue;
        }
        if let Some(rest) = line.strip_prefix("char:") {
            if nvars.is_none() {
                return Err(ParseError::new(line_no, "`char:` must follow `vars:`"));
            }
            let c: u64 = rest
                .trim()
                .parse()
                .map_err(|_| ParseError::new(line_no, format!("bad characteristic `{}`", rest.trim())))?;
            let spec = FieldSpec::new(c).map_err(|e| ParseError::new(line_no, e.to_string()))?;
            characteristic = Some(spec);
            continue;
        }
        let n = nvars.ok_or_else(|| ParseError::new(line_no, "missing `vars: n` header"))?;
        let p = parse_polynomial(line, n).map_err(|msg| ParseError::new(line_no, msg))?;
        gens.push(p);
    }
    let nvars = nvars.ok_or_else(|| ParseError::new(0, "missing `vars: n` header"))?;
    let ideal = Ideal::new(Rationals, nvars, gens).expect("parsed generators share the ambient");
    Ok(IdealFile {
        nvars,
        characteristic,
        ideal,
    })
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => line[..i].trim(),
        None => line.trim(),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(s: &str, nvars: usize) -> Result<Vec<Token>, String> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Token::Int(digits.parse().expect("digits")));
            }
            'x' => {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err("variable `x` needs an index".into());
                }
                let digits: String = chars[start..i].iter().collect();
                let idx: usize = digits.parse().map_err(|_| format!("bad variable x{digits}"))?;
                if idx == 0 || idx > nvars {
                    return Err(format!("variable x{idx} outside x1..x{nvars}"));
                }
                out.push(Token::Var(idx - 1));
            }
            other => return Err(format!("unexpected character `{other}`")),
        }
    }
    Ok(out)
}

/// Parses one polynomial over the rationals with integer coefficients.
pub fn parse_polynomial(s: &str, nvars: usize) -> Result<Polynomial<Rationals>, String> {
    let tokens = tokenize(s, nvars)?;
    if tokens.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut pos = 0;
    let mut terms = Vec::new();
    let mut first = true;
    while pos < tokens.len() {
        let mut negative = false;
        match tokens[pos] {
            Token::Plus => pos += 1,
            Token::Minus => {
                negative = true;
                pos += 1;
            }
            _ if first => {}
            _ => return Err("expected `+` or `-` between terms".into()),
        }
        first = false;
        let (coeff, mono) = parse_term(&tokens, &mut pos, nvars)?;
        let coeff = if negative { -coeff } else { coeff };
        terms.push((mono, BigRational::from_integer(coeff)));
    }
    Ok(Polynomial::from_terms(Rationals, nvars, MonomialOrder::DegRevLex, terms))
}

fn parse_term(tokens: &[Token], pos: &mut usize, nvars: usize) -> Result<(BigInt, Monomial), String> {
    let mut coeff = BigInt::one();
    let mut exps = vec![0u32; nvars];
    let mut expect_factor = true;
    while *pos < tokens.len() {
        if !expect_factor {
            match tokens[*pos] {
                Token::Star => {
                    *pos += 1;
                    expect_factor = true;
                    continue;
                }
                Token::Plus | Token::Minus => break,
                _ => return Err("expected `*` between factors".into()),
            }
        }
        match &tokens[*pos] {
            Token::Int(v) => {
                *pos += 1;
                let power = parse_power(tokens, pos)?;
                coeff *= num_traits::pow(v.clone(), power as usize);
            }
            Token::Var(i) => {
                *pos += 1;
                let power = parse_power(tokens, pos)?;
                exps[*i] = exps[*i]
                    .checked_add(power)
                    .ok_or_else(|| "exponent overflow".to_string())?;
            }
            _ => return Err("expected a number or a variable".into()),
        }
        expect_factor = false;
    }
    if expect_factor {
        return Err("dangling operator".into());
    }
    Ok((coeff, Monomial::new(exps)))
}

fn parse_power(tokens: &[Token], pos: &mut usize) -> Result<u32, String> {
    if *pos < tokens.len() && tokens[*pos] == Token::Caret {
        *pos += 1;
        match tokens.get(*pos) {
            Some(Token::Int(v)) => {
                *pos += 1;
                u32::try_from(v.clone()).map_err(|_| "exponent too large".to_string())
            }
            _ => Err("`^` needs a non-negative integer exponent".into()),
        }
    } else {
        Ok(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_syntax() {
        let p = parse_polynomial("x1^3 + x2^3", 9).unwrap();
        assert_eq!(p.to_string(), "x1^3 + x2^3");
        let p = parse_polynomial("-2*x1*x1 + 3 - x2^2*x1", 2).unwrap();
        assert_eq!(p.to_string(), "-x1*x2^2 - 2*x1^2 + 3");
        let p = parse_polynomial("2^3*x1", 1).unwrap();
        assert_eq!(p.to_string(), "8*x1");
    }

    #[test]
    fn polynomial_errors() {
        assert!(parse_polynomial("x7", 6).is_err());
        assert!(parse_polynomial("x0", 6).is_err());
        assert!(parse_polynomial("x1 x2", 6).is_err());
        assert!(parse_polynomial("x1 +", 6).is_err());
        assert!(parse_polynomial("x1 / x2", 6).is_err());
        assert!(parse_polynomial("x^2", 6).is_err());
        assert!(parse_polynomial("", 6).is_err());
    }

    #[test]
    fn ideal_file() {
        let text = "# determinantal\nvars: 6\nchar: 5\nx1*x5 - x2*x4  # first minor\n\nx1*x6 - x3*x4\n";
        let f = parse_ideal(text).unwrap();
        assert_eq!(f.nvars, 6);
        assert_eq!(f.characteristic, Some(FieldSpec::new(5).unwrap()));
        assert_eq!(f.ideal.generators().len(), 2);
    }

    #[test]
    fn ideal_file_errors() {
        assert_eq!(parse_ideal("x1\n").unwrap_err().line, 1);
        assert_eq!(parse_ideal("vars: 2\nx3\n").unwrap_err().line, 2);
        assert!(parse_ideal("vars: 2\nchar: 4\n").is_err());
        assert!(parse_ideal("vars: 0\n").is_err());
        assert!(parse_ideal("").is_err());
    }

    #[test]
    fn zero_generators_are_dropped() {
        let f = parse_ideal("vars: 2\nx1 - x1\nx2\n").unwrap();
        assert_eq!(f.ideal.generators().len(), 1);
    }
}
