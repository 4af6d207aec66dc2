//! Module-action files: `p <prime>`, `dim <n>`, then one `mat` line of `n*n`
//! row-major entries per generator.

use crate::bounds::ModuleAction;
use crate::error::{Error, Result};

fn at(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column: 1,
        message: message.into(),
    }
}

pub fn parse_module(text: &str) -> Result<ModuleAction> {
    let mut p: Option<u64> = None;
    let mut dim: Option<usize> = None;
    let mut mats = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut words = content.split_whitespace();
        let keyword = words.next().unwrap();
        let values = words
            .map(|w| w.parse::<u64>().map_err(|_| at(line, format!("bad number '{w}'"))))
            .collect::<Result<Vec<_>>>()?;
        match keyword {
            "p" if values.len() == 1 => p = Some(values[0]),
            "dim" if values.len() == 1 => dim = Some(values[0] as usize),
            "mat" => {
                let n = dim.ok_or_else(|| at(line, "'dim' must precede 'mat'"))?;
                if values.len() != n * n {
                    return Err(at(line, format!("expected {} entries, found {}", n * n, values.len())));
                }
                mats.push(values.chunks(n).map(|r| r.to_vec()).collect());
            }
            "p" | "dim" => return Err(at(line, format!("'{keyword}' takes one value"))),
            other => return Err(at(line, format!("unknown keyword '{other}'"))),
        }
    }
    let p = p.ok_or_else(|| at(1, "missing 'p'"))?;
    if !crate::arith::is_prime(p) {
        return Err(Error::Input(format!("{p} is not prime")));
    }
    let dim = dim.ok_or_else(|| at(1, "missing 'dim'"))?;
    ModuleAction::new(p, dim, mats)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_order_three_action() {
        let m = parse_module("p 5\ndim 2\n# x -> x^2 + x + 1\nmat 0 1 4 4\n").unwrap();
        assert_eq!(m.orbit_count().unwrap(), 9);
    }

    #[test]
    fn wrong_entry_count() {
        assert!(matches!(parse_module("p 5\ndim 2\nmat 1 0 0"), Err(Error::Parse { line: 3, .. })));
    }
}
