//! Text notation for `IS_n` elements: products of cycles `(..)`, chains
//! `[..]` and open chains `<..>`, with `0` and `1` as literals. The rank is
//! supplied out-of-band when parsing.

use crate::error::{Error, Result};
use crate::isn::{chain, chain_decompose, cycle, open_chain, PartialBijection};

/// Prints an element in canonical chain-decomposition form.
pub fn print(f: &PartialBijection) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    if f.is_unity() {
        return "1".to_string();
    }
    let d = chain_decompose(f);
    let mut out = String::new();
    for c in &d.cycles {
        out.push('(');
        out.push_str(&join(c));
        out.push(')');
    }
    for c in &d.chains {
        out.push('[');
        out.push_str(&join(c));
        out.push(']');
    }
    out
}

fn join(points: &[usize]) -> String {
    points
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses the notation back into an element of `IS_n`.
pub fn parse(input: &str, n: usize) -> Result<PartialBijection> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    if s == "0" {
        return Ok(PartialBijection::zero(n));
    }
    if s == "1" {
        return Ok(PartialBijection::unity(n));
    }
    let mut acc = PartialBijection::unity(n);
    let mut chars = s.char_indices().peekable();
    while let Some((start, open)) = chars.next() {
        let close = match open {
            '(' => ')',
            '[' => ']',
            '<' => '>',
            c if c.is_whitespace() => continue,
            c => return Err(Error::Parse(format!("unexpected character '{c}'"))),
        };
        let mut end = None;
        for (i, c) in chars.by_ref() {
            if c == close {
                end = Some(i);
                break;
            }
        }
        let end = end.ok_or_else(|| Error::Parse(format!("unclosed '{open}'")))?;
        let body = &s[start + 1..end];
        let points = parse_points(body)?;
        let factor = match open {
            '(' => cycle(n, &points)?,
            '[' => chain(n, &points)?,
            _ => open_chain(n, &points)?,
        };
        acc = acc.compose(&factor)?;
    }
    Ok(acc)
}

fn parse_points(body: &str) -> Result<Vec<usize>> {
    body.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad point '{p}'")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isn::enumerate_is;
    use proptest::prelude::*;

    #[test]
    fn literals() {
        assert_eq!(print(&PartialBijection::zero(3)), "0");
        assert_eq!(print(&PartialBijection::unity(3)), "1");
        assert_eq!(parse("0", 3).unwrap(), PartialBijection::zero(3));
        assert_eq!(parse("1", 3).unwrap(), PartialBijection::unity(3));
    }

    #[test]
    fn mixed_terms() {
        let f = parse("(1,2)[3]", 3).unwrap();
        assert_eq!(f, PartialBijection::make(3, &[(1, 2), (2, 1)]).unwrap());
        let g = parse("<1,2,3>", 3).unwrap();
        assert_eq!(g, PartialBijection::make(3, &[(1, 2), (2, 3)]).unwrap());
    }

    #[test]
    fn parse_errors() {
        assert!(parse("", 3).is_err());
        assert!(parse("(1,2", 3).is_err());
        assert!(parse("x", 3).is_err());
        assert!(parse("[4]", 3).is_err());
    }

    #[test]
    fn round_trip_exhaustive() {
        for n in 1..=4 {
            for f in enumerate_is(n).unwrap() {
                assert_eq!(parse(&print(&f), n).unwrap(), f);
            }
        }
    }

    proptest! {
        #[test]
        fn round_trip_random_rank6(images in proptest::collection::vec(proptest::option::of(1usize..=6), 6)) {
            // Keep only injective samples.
            let mut seen = std::collections::HashSet::new();
            prop_assume!(images.iter().flatten().all(|&y| seen.insert(y)));
            let pairs: Vec<_> = images
                .iter()
                .enumerate()
                .filter_map(|(i, v)| v.map(|y| (i + 1, y)))
                .collect();
            let f = PartialBijection::make(6, &pairs).unwrap();
            prop_assert_eq!(parse(&print(&f), 6).unwrap(), f);
        }
    }
}
