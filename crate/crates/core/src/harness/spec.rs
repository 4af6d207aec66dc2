//! Line-oriented group specification files.
//!
//! ```text
//! # comment
//! name A5
//! degree 5
//! gen (1 2 3 4 5)
//! gen (3 4 5)
//! tag simple
//! ```
//! or `construct Frobenius(5,2)` in place of `degree`/`gen`.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::permcore::{Construct, PermGroup, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSource {
    /// Generators as disjoint 1-based cycles.
    Generators { degree: usize, gens: Vec<Vec<Vec<usize>>> },
    Construct(Construct),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub source: GroupSource,
    pub tags: Vec<String>,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses `(1 2 3)(4 5)`; `offset` is the 0-based column of `text` within its line.
fn parse_cycles(text: &str, line: usize, offset: usize) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut seen = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut chars = text.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        let col = offset + i + 1;
        match c {
            '(' if current.is_none() => current = Some(Vec::new()),
            ')' => match current.take() {
                // `()` is the identity
                Some(cycle) => {
                    if !cycle.is_empty() {
                        cycles.push(cycle);
                    }
                }
                None => return Err(parse_error(line, col, "unmatched ')'")),
            },
            c if c.is_whitespace() || c == ',' => {}
            c if c.is_ascii_digit() => {
                let mut end = i + c.len_utf8();
                while let Some(&(j, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = j + d.len_utf8();
                    chars.next();
                }
                let cycle = current
                    .as_mut()
                    .ok_or_else(|| parse_error(line, col, "point outside parentheses"))?;
                let point: usize = text[i..end]
                    .parse()
                    .map_err(|_| parse_error(line, col, "point out of range"))?;
                if point == 0 {
                    return Err(parse_error(line, col, "points are 1-based"));
                }
                if seen.contains(&point) {
                    return Err(parse_error(line, col, format!("point {point} repeated")));
                }
                seen.push(point);
                cycle.push(point);
            }
            other => return Err(parse_error(line, col, format!("unexpected '{other}'"))),
        }
    }
    if current.is_some() {
        return Err(parse_error(line, offset + text.len() + 1, "unclosed '('"));
    }
    Ok(cycles)
}

pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    let mut name: Option<String> = None;
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    let mut construct: Option<Construct> = None;
    let mut tags = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let (keyword, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
        let rest_offset = indent + keyword.len() + (rest.len() - rest.trim_start().len()) + 1;
        let rest_trimmed = rest.trim();
        let value_col = rest_offset.min(content.len()) + 1;
        if rest_trimmed.is_empty() {
            return Err(parse_error(line, indent + keyword.len() + 1, format!("'{keyword}' needs a value")));
        }
        match keyword {
            "name" => {
                if name.is_some() {
                    return Err(parse_error(line, indent + 1, "duplicate name"));
                }
                if rest_trimmed.contains(char::is_whitespace) {
                    return Err(parse_error(line, value_col, "name must be a single word"));
                }
                name = Some(rest_trimmed.to_string());
            }
            "degree" => {
                if degree.is_some() {
                    return Err(parse_error(line, indent + 1, "duplicate degree"));
                }
                degree = Some(
                    rest_trimmed
                        .parse()
                        .map_err(|_| parse_error(line, value_col, format!("bad degree '{rest_trimmed}'")))?,
                );
            }
            "gen" => gens.push((line, parse_cycles(rest_trimmed, line, value_col - 1)?)),
            "construct" => {
                if construct.is_some() {
                    return Err(parse_error(line, indent + 1, "duplicate construct"));
                }
                let c = Construct::parse(rest_trimmed).map_err(|e| match e {
                    Error::Parse { column, message, .. } => parse_error(line, value_col - 1 + column, message),
                    other => other,
                })?;
                c.validate()?;
                construct = Some(c);
            }
            "tag" => tags.extend(rest_trimmed.split_whitespace().map(str::to_string)),
            other => return Err(parse_error(line, indent + 1, format!("unknown keyword '{other}'"))),
        }
    }
    let name = name.ok_or_else(|| parse_error(1, 1, "missing 'name'"))?;
    if construct.is_some() && (degree.is_some() || !gens.is_empty()) {
        let line = gens.first().map_or(1, |g| g.0);
        return Err(parse_error(line, 1, "'construct' cannot be combined with 'degree' or 'gen'"));
    }
    let source = match (construct, degree) {
        (Some(c), _) => GroupSource::Construct(c),
        (None, Some(degree)) => {
            for (line, cycles) in &gens {
                if let Some(&pt) = cycles.iter().flatten().find(|&&pt| pt > degree) {
                    return Err(parse_error(*line, 1, format!("point {pt} exceeds degree {degree}")));
                }
            }
            GroupSource::Generators {
                degree,
                gens: gens.into_iter().map(|(_, g)| g).collect(),
            }
        }
        (None, None) => return Err(parse_error(1, 1, "need either 'construct' or 'degree'")),
    };
    Ok(GroupSpec { name, source, tags })
}

impl GroupSpec {
    /// Canonical text: one directive per line, single spaces, no comments.
    pub fn emit(&self) -> String {
        let mut out = format!("name {}\n", self.name);
        out.push_str(&self.source_text());
        for t in &self.tags {
            let _ = writeln!(out, "tag {t}");
        }
        out
    }

    /// The canonical lines describing the group alone, without name or tags.
    pub fn source_text(&self) -> String {
        let mut out = String::new();
        match &self.source {
            GroupSource::Construct(c) => {
                let _ = writeln!(out, "construct {c}");
            }
            GroupSource::Generators { degree, gens } => {
                let _ = writeln!(out, "degree {degree}");
                for g in gens {
                    let cycles: String = g
                        .iter()
                        .map(|c| format!("({})", c.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")))
                        .collect();
                    let _ = writeln!(out, "gen {}", if cycles.is_empty() { "()".into() } else { cycles });
                }
            }
        }
        out
    }

    pub fn build(&self) -> Result<PermGroup> {
        match &self.source {
            GroupSource::Construct(c) => c.build(),
            GroupSource::Generators { degree, gens } => {
                let perms = gens
                    .iter()
                    .map(|g| Permutation::from_cycles(*degree, g))
                    .collect::<Result<Vec<_>>>()?;
                PermGroup::new(*degree, perms)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_spec() {
        let s = parse_spec("name A5\ndegree 5\ngen (1 2 3 4 5)\ngen (3 4 5)").unwrap();
        assert_eq!(s.name, "A5");
        assert_eq!(s.build().unwrap().order(), 60);
    }

    #[test]
    fn constructor_spec() {
        let s = parse_spec("name F52\nconstruct Frobenius(5,2)").unwrap();
        assert_eq!(s.source, GroupSource::Construct(Construct::Frobenius(5, 2)));
        assert_eq!(s.build().unwrap().order(), 10);
    }

    #[test]
    fn repeated_point_is_located() {
        let e = parse_spec("name X\ndegree 3\ngen (1 2 2)").unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                line: 3,
                column: 10,
                message: "point 2 repeated".into()
            }
        );
    }

    #[test]
    fn constructor_constraints_named() {
        let e = parse_spec("name X\nconstruct Frobenius(7,4)").unwrap_err();
        assert!(e.to_string().contains("does not divide"), "{e}");
        let e = parse_spec("name X\nconstruct Frobenius(7,").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn emit_normalizes_whitespace() {
        let text = "# header\n  name   Q8 \ndegree 8\ngen   (1 2 3 4)(5 6 7 8)   # i\ngen (1 5 3 7)(2 8 4 6)\ntag  extra\n";
        let s = parse_spec(text).unwrap();
        let emitted = s.emit();
        assert_eq!(
            emitted,
            "name Q8\ndegree 8\ngen (1 2 3 4)(5 6 7 8)\ngen (1 5 3 7)(2 8 4 6)\ntag extra\n"
        );
        assert_eq!(parse_spec(&emitted).unwrap(), s);
    }

    #[test]
    fn missing_source_rejected() {
        assert!(parse_spec("name X\n").is_err());
        assert!(parse_spec("degree 3\ngen (1 2)").is_err());
    }
}
