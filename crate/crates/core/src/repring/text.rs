//! Shared term-level printing and tokenizing for the polynomial text forms.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::{Error, Result};

pub(crate) struct Term {
    pub coeff: BigInt,
    pub factors: Vec<String>,
}

/// Joins `(coefficient, monomial body)` pairs as `a*m1 - m2 + c`. An empty
/// body denotes the constant monomial.
pub(crate) fn format_terms<'a>(terms: impl Iterator<Item = (&'a BigInt, String)>) -> String {
    let mut out = String::new();
    for (i, (c, body)) in terms.enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = c.abs();
        if body.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&mag.to_string());
            out.push('*');
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Splits a sum of products into signed terms. Signs inside parentheses are
/// part of the factor.
pub(crate) fn split_terms(input: &str) -> Result<Vec<Term>> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::parse(input, "empty polynomial"));
    }
    let mut raw: Vec<(bool, String)> = Vec::new();
    let mut depth = 0i32;
    let mut negative = false;
    let mut current = String::new();
    for (i, ch) in s.chars().enumerate() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::parse(input, "unbalanced parentheses"));
                }
                current.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if i > 0 {
                    if current.is_empty() {
                        return Err(Error::parse(input, "empty term"));
                    }
                    raw.push((negative, std::mem::take(&mut current)));
                }
                negative = ch == '-';
            }
            _ => current.push(ch),
        }
    }
    if depth != 0 {
        return Err(Error::parse(input, "unbalanced parentheses"));
    }
    if current.is_empty() {
        return Err(Error::parse(input, "empty term"));
    }
    raw.push((negative, current));

    raw.into_iter()
        .map(|(neg, body)| {
            let factors: Vec<String> = body.split('*').map(str::to_string).collect();
            if factors.iter().any(String::is_empty) {
                return Err(Error::parse(input, "empty factor"));
            }
            let coeff = if neg { -BigInt::one() } else { BigInt::one() };
            Ok(Term { coeff, factors })
        })
        .collect()
}
