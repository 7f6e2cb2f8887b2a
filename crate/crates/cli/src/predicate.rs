// SPDX-License-Identifier: Apache-2.0

//! Predicate descriptions accepted on the command line.

use boolobs::boolfun::{even_parity, predicate_family_by_name, table_of, TruthTable};

use crate::error::{CliError, CliResult};

pub const PREDICATE_HELP: &str =
    "zero | ones | even-parity | odd-parity | atom:POINT | var:I | hex:DIGITS | pi1 | pi2 | delta";

pub fn parse(spec: &str, n: u32) -> CliResult<TruthTable> {
    let bad = |what: &str| {
        CliError::Usage(format!(
            "invalid predicate {spec:?}: {what}; expected {PREDICATE_HELP}"
        ))
    };
    let t = match spec.split_once(':') {
        Some(("atom", p)) => TruthTable::atom(n, p.parse().map_err(|_| bad("point"))?)?,
        Some(("var", i)) => TruthTable::variable(n, i.parse().map_err(|_| bad("index"))?)?,
        Some(("hex", h)) => TruthTable::from_hex(n, h)?,
        Some(_) => return Err(bad("unknown kind")),
        None => match spec {
            "zero" => TruthTable::zero(n)?,
            "ones" => TruthTable::ones(n)?,
            "even-parity" => even_parity(n)?,
            "odd-parity" => !&even_parity(n)?,
            family => table_of(&predicate_family_by_name(family, n)?),
        },
    };
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs() {
        assert_eq!(
            parse("atom:7", 3).unwrap().support().collect::<Vec<_>>(),
            vec![7]
        );
        assert_eq!(
            parse("var:1", 1).unwrap(),
            TruthTable::from_fn(1, |x| x == 1).unwrap()
        );
        assert_eq!(parse("odd-parity", 2).unwrap().weight(), 2);
        assert!(parse("atom:x", 3).is_err());
        assert!(parse("pi7", 3).is_err());
        assert!(parse("atom:9", 3).is_err());
    }
}
