//! Line-oriented group files.
//!
//! ```text
//! # comment
//! group Z3 order 3
//! table
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! label g 1
//! ```
//!
//! or `perm <m>` followed by one generator per line in cycle notation on
//! points `1..=m`. A block ends at the end of input or at the next line
//! starting with `group`, `proj`, `extension` or `end`.

use super::{perm, FiniteGroup, GroupError, DEFAULT_ORDER_CAP};

/// Significant lines with their 1-based line numbers; comments and blank
/// lines dropped.
pub(crate) fn significant_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> GroupError {
    GroupError::Parse { line, msg: msg.into() }
}

fn is_block_end(line: &str) -> bool {
    matches!(
        line.split_whitespace().next(),
        Some("group" | "proj" | "extension" | "end")
    )
}

/// Parses a whole group file.
pub fn load_group(text: &str) -> Result<FiniteGroup, GroupError> {
    load_group_with_cap(text, DEFAULT_ORDER_CAP)
}

pub fn load_group_with_cap(text: &str, cap: usize) -> Result<FiniteGroup, GroupError> {
    let lines = significant_lines(text);
    let (g, used) = parse_group_block(&lines, cap)?;
    if let Some((n, l)) = lines.get(used) {
        if !l.starts_with("end") {
            return Err(parse_err(*n, format!("unexpected `{l}` after the group block")));
        }
    }
    Ok(g)
}

/// Parses one group block from the front of `lines`; returns the group and
/// the number of lines consumed.
pub fn parse_group_block(lines: &[(usize, &str)], cap: usize) -> Result<(FiniteGroup, usize), GroupError> {
    let (hline, header) = *lines.first().ok_or_else(|| parse_err(0, "missing `group` header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "group" || toks[2] != "order" {
        return Err(parse_err(hline, "expected `group <name> order <n>`"));
    }
    let name = toks[1];
    let declared: usize = toks[3]
        .parse()
        .map_err(|_| parse_err(hline, format!("bad order `{}`", toks[3])))?;
    let mut pos = 1;
    let (kline, kind) = *lines
        .get(pos)
        .ok_or_else(|| parse_err(hline, "expected `table` or `perm <m>`"))?;
    pos += 1;
    let kind_toks: Vec<&str> = kind.split_whitespace().collect();
    let mut group = match kind_toks.as_slice() {
        ["table"] => {
            let mut rows = Vec::with_capacity(declared);
            while rows.len() < declared {
                let (n, l) = *lines
                    .get(pos)
                    .ok_or_else(|| parse_err(kline, format!("table needs {declared} rows")))?;
                if is_block_end(l) || l.starts_with("label") {
                    return Err(parse_err(n, format!("table needs {declared} rows")));
                }
                let row = l
                    .split_whitespace()
                    .map(|t| t.parse::<u32>().map_err(|_| parse_err(n, format!("bad entry `{t}`"))))
                    .collect::<Result<Vec<_>, _>>()?;
                rows.push(row);
                pos += 1;
            }
            FiniteGroup::from_table(name, rows)?
        }
        ["perm", m] => {
            let degree: usize = m.parse().map_err(|_| parse_err(kline, format!("bad degree `{m}`")))?;
            let mut gens = Vec::new();
            while let Some(&(n, l)) = lines.get(pos) {
                if !l.starts_with('(') {
                    break;
                }
                gens.push(perm::parse_cycles(l, degree).map_err(|e| parse_err(n, e))?);
                pos += 1;
            }
            FiniteGroup::from_permutations(name, degree, &gens, cap)?
        }
        _ => return Err(parse_err(kline, "expected `table` or `perm <m>`")),
    };
    if group.order() != declared {
        return Err(GroupError::OrderMismatch { declared, actual: group.order() });
    }
    while let Some(&(n, l)) = lines.get(pos) {
        if is_block_end(l) {
            break;
        }
        let rest = l
            .strip_prefix("label")
            .ok_or_else(|| parse_err(n, format!("unexpected `{l}`")))?
            .trim();
        let (label, spec) = rest
            .split_once(char::is_whitespace)
            .ok_or_else(|| parse_err(n, "expected `label <name> <element>`"))?;
        let x = group.resolve(spec).map_err(|e| parse_err(n, e.to_string()))?;
        group.set_label(label, x);
        pos += 1;
    }
    Ok((group, pos))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_table() {
        let g = load_group("group Z3 order 3\ntable\n0 1 2\n1 2 0\n2 0 1\nlabel g 1\n").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.label("g").unwrap().0, 1);
    }

    #[test]
    fn a5_from_generators() {
        let g = load_group("group A5 order 60\nperm 5\n(1 2 3 4 5)\n(1 2 3)\nlabel c (1 2 3 4 5)\n").unwrap();
        assert_eq!(g.order(), 60);
        assert_eq!(g.element_order(g.label("c").unwrap()), 5);
    }

    #[test]
    fn repeated_row_entry() {
        let err = load_group("group X order 3\ntable\n0 1 1\n1 2 0\n2 0 1\n").unwrap_err();
        assert_eq!(err, GroupError::NonBijectiveRow { row: 0 });
    }

    #[test]
    fn order_cap_and_mismatch() {
        let err = load_group_with_cap("group A5 order 60\nperm 5\n(1 2 3 4 5)\n(1 2 3)\n", 30).unwrap_err();
        assert_eq!(err, GroupError::OrderCapExceeded { cap: 30 });
        let err = load_group("group A5 order 61\nperm 5\n(1 2 3 4 5)\n(1 2 3)\n").unwrap_err();
        assert!(matches!(err, GroupError::OrderMismatch { declared: 61, actual: 60 }));
    }

    #[test]
    fn non_associative_latin_square() {
        // A Latin square with identity 0 that is not a group.
        let text = "group L order 5\ntable\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
        let err = load_group(text).unwrap_err();
        assert!(matches!(err, GroupError::NotAssociative { .. }));
    }
}
