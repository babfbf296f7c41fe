//! Shared helpers for the plain-text term grammars.
//!
//! Every printable type in this crate writes sums as `t1 + t2 - t3` with
//! factors joined by `*`. Coefficients that themselves contain spaces are
//! wrapped in parentheses so that splitting at depth zero is unambiguous.

use crate::error::ParseError;

/// Splits `s` into signed terms at top-level `+`/`-` separators.
///
/// Returns `(negated, term)` pairs. A sign directly following `^`, `*`, `/`
/// or `(` belongs to the factor, not the sum.
pub(crate) fn split_terms(s: &str) -> Result<Vec<(bool, String)>, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseError::new("empty expression"));
    }
    let mut terms = Vec::new();
    let mut depth: i32 = 0;
    let mut current = String::new();
    let mut negated = false;
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(ParseError::new(format!("unbalanced brackets in `{s}`")));
                }
            }
            _ => {}
        }
        let is_sep = depth == 0
            && (ch == '+' || ch == '-')
            && !matches!(prev, Some('^') | Some('*') | Some('/') | Some('(') | Some('['));
        if is_sep {
            if current.trim().is_empty() {
                // leading unary sign, or a doubled sign such as `a + -b`
                if ch == '-' {
                    negated = !negated;
                }
            } else {
                terms.push((negated, current.trim().to_string()));
                current.clear();
                negated = ch == '-';
            }
        } else {
            current.push(ch);
        }
        if !ch.is_whitespace() {
            prev = Some(ch);
        }
    }
    if depth != 0 {
        return Err(ParseError::new(format!("unbalanced brackets in `{s}`")));
    }
    if current.trim().is_empty() {
        return Err(ParseError::new(format!("dangling operator in `{s}`")));
    }
    terms.push((negated, current.trim().to_string()));
    Ok(terms)
}

/// Splits a term into its top-level `*` factors.
pub(crate) fn split_factors(term: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for ch in term.chars() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if ch == '*' && depth == 0 {
            out.push(current.trim().to_string());
            current.clear();
        } else {
            current.push(ch);
        }
    }
    out.push(current.trim().to_string());
    out
}

/// Removes one pair of enclosing parentheses if they wrap the whole string.
pub(crate) fn strip_outer_parens(s: &str) -> &str {
    let t = s.trim();
    if !(t.starts_with('(') && t.ends_with(')')) {
        return t;
    }
    let mut depth = 0i32;
    for (idx, ch) in t.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && idx != t.len() - 1 {
                    return t;
                }
            }
            _ => {}
        }
    }
    t[1..t.len() - 1].trim()
}

/// Splits `s` at the single top-level occurrence of `sep`, if any.
pub(crate) fn split_top_level(s: &str, sep: char) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (idx, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => return Some((&s[..idx], &s[idx + 1..])),
            _ => {}
        }
    }
    None
}

/// Parses `var`, `var^e`, `var^-e` or `var^(e)`. Returns `None` if the factor
/// is not a power of `var`.
pub(crate) fn parse_power(factor: &str, var: &str) -> Option<Result<i64, ParseError>> {
    let f = factor.trim();
    let rest = f.strip_prefix(var)?;
    if rest.is_empty() {
        return Some(Ok(1));
    }
    let exp = rest.strip_prefix('^')?;
    let exp = strip_outer_parens(exp);
    Some(
        exp.parse::<i64>()
            .map_err(|_| ParseError::new(format!("bad exponent in `{f}`"))),
    )
}

/// Formats a power of a variable: `""` for exponent 0, `v` for 1, `v^e` otherwise.
pub(crate) fn fmt_power(var: &str, exp: i64) -> String {
    match exp {
        0 => String::new(),
        1 => var.to_string(),
        e => format!("{var}^{e}"),
    }
}

/// Joins monomial factors with `*`, skipping empty ones.
pub(crate) fn join_factors<'a>(parts: impl IntoIterator<Item = &'a str>) -> String {
    parts
        .into_iter()
        .filter(|p| !p.is_empty())
        .collect::<Vec<_>>()
        .join("*")
}

/// Writes `coef*monomial` terms joined by ` + ` / ` - `.
///
/// `terms` yields `(coefficient text, is_one, is_minus_one, monomial text)`.
pub(crate) fn write_sum<I>(terms: I) -> String
where
    I: IntoIterator<Item = (String, bool, bool, String)>,
{
    let mut out = String::new();
    for (coef, is_one, is_minus_one, mon) in terms {
        let term = if mon.is_empty() {
            wrap_compound(&coef)
        } else if is_one {
            mon
        } else if is_minus_one {
            format!("-{mon}")
        } else {
            format!("{}*{}", wrap_compound(&coef), mon)
        };
        if out.is_empty() {
            out = term;
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

fn wrap_compound(coef: &str) -> String {
    if coef.contains(' ') {
        format!("({coef})")
    } else {
        coef.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_signed_terms() {
        let t = split_terms("x^2 - 2*x - 2*y").unwrap();
        assert_eq!(
            t,
            vec![
                (false, "x^2".to_string()),
                (true, "2*x".to_string()),
                (true, "2*y".to_string())
            ]
        );
        let t = split_terms("-q^-1 + (q - 1)*x").unwrap();
        assert_eq!(t, vec![(true, "q^-1".to_string()), (false, "(q - 1)*x".to_string())]);
    }

    #[test]
    fn exponent_sign_is_not_a_separator() {
        let t = split_terms("l1^-2*l2^-1").unwrap();
        assert_eq!(t.len(), 1);
    }

    #[test]
    fn strips_only_enclosing_parens() {
        assert_eq!(strip_outer_parens("(a)/(b)"), "(a)/(b)");
        assert_eq!(strip_outer_parens("((a)/(b))"), "(a)/(b)");
    }

    #[test]
    fn rejects_unbalanced() {
        assert!(split_terms("(x + 1").is_err());
        assert!(split_terms("x +").is_err());
    }
}
