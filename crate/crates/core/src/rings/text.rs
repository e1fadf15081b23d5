//! Shared tokenizer, term parser and term printer for the textual formats
//! (cyclotomic values, truncated polynomials, line expressions, Clifford
//! elements). A term is a product of rational literals and symbols with
//! integer exponents, optionally divided by integer literals.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Term {
    pub coeff: Rational,
    pub symbols: Vec<(String, i64)>,
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' => {
                out.push(Token::Star);
                i += 1
            }
            '/' => {
                out.push(Token::Slash);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Token::Num(text.parse().expect("digits")));
            }
            a if a.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?} in {s:?}"))),
        }
    }
    Ok(out)
}

/// Parses a signed sum of terms.
pub(crate) fn parse_terms(s: &str) -> Result<Vec<Term>> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let err = |msg: &str| Error::Parse(format!("{msg} in {s:?}"));
    let mut terms = Vec::new();
    let mut pos = 0;
    let mut first = true;
    while pos < toks.len() {
        let mut negative = false;
        match toks[pos] {
            Token::Plus => pos += 1,
            Token::Minus => {
                negative = true;
                pos += 1
            }
            _ if first => {}
            _ => return Err(err("expected '+' or '-'")),
        }
        first = false;
        let mut coeff = Rational::one();
        let mut symbols = Vec::new();
        let mut expect_factor = true;
        while pos < toks.len() {
            if expect_factor {
                match &toks[pos] {
                    Token::Num(n) => {
                        coeff *= Rational::from_integer(n.clone());
                        pos += 1;
                    }
                    Token::Ident(name) => {
                        pos += 1;
                        let mut exp = 1i64;
                        if pos < toks.len() && toks[pos] == Token::Caret {
                            pos += 1;
                            let mut neg = false;
                            if pos < toks.len() && toks[pos] == Token::Minus {
                                neg = true;
                                pos += 1;
                            }
                            match toks.get(pos) {
                                Some(Token::Num(n)) => {
                                    exp = i64::try_from(n.clone()).map_err(|_| err("exponent too large"))?;
                                    if neg {
                                        exp = -exp;
                                    }
                                    pos += 1;
                                }
                                _ => return Err(err("expected exponent after '^'")),
                            }
                        }
                        symbols.push((name.clone(), exp));
                    }
                    _ => return Err(err("expected a number or symbol")),
                }
                expect_factor = false;
            } else {
                match toks[pos] {
                    Token::Star => {
                        pos += 1;
                        expect_factor = true;
                    }
                    Token::Slash => {
                        pos += 1;
                        match toks.get(pos) {
                            Some(Token::Num(n)) if !n.is_zero() => {
                                coeff /= Rational::from_integer(n.clone());
                                pos += 1;
                            }
                            _ => return Err(err("expected a nonzero integer after '/'")),
                        }
                    }
                    _ => break,
                }
            }
        }
        if expect_factor {
            return Err(err("dangling operator"));
        }
        if negative {
            coeff = -coeff;
        }
        terms.push(Term { coeff, symbols });
    }
    Ok(terms)
}

/// Formats `Σ c·m` where `m` is an already formatted monomial ("" for the
/// constant term). Zero coefficients are skipped; the empty sum prints "0".
pub(crate) fn format_terms<I>(terms: I) -> String
where
    I: IntoIterator<Item = (Rational, String)>,
{
    let mut out = String::new();
    for (c, mono) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let num = c.numer().abs();
        let den = c.denom().clone();
        if mono.is_empty() {
            out.push_str(&num.to_string());
        } else {
            if !num.is_one() {
                out.push_str(&num.to_string());
                out.push('*');
            }
            out.push_str(&mono);
        }
        if !den.is_one() {
            out.push('/');
            out.push_str(&den.to_string());
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
