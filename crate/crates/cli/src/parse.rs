//! Parsing of partitions and tableau files.

use hecke_core::tableaux::{Partition, StandardTableau};

use crate::commands::CliError;

/// Comma-separated weakly decreasing non-negative integers; trailing zeros are dropped,
/// and an empty string or `0` is the empty partition.
pub fn parse_partition(s: &str) -> Result<Partition, CliError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| CliError::Usage(format!("'{p}' in '{s}' is not a non-negative integer"))))
        .collect::<Result<Vec<u32>, _>>()?;
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(CliError::Usage(format!("'{s}' is not weakly decreasing")));
    }
    Partition::new(&parts).map_err(CliError::from)
}

/// A straight tableau, either as JSON rows (`[[1,2],[3]]`) or one row per line with
/// entries separated by commas or whitespace.
pub fn parse_tableau(text: &str) -> Result<StandardTableau, CliError> {
    let trimmed = text.trim();
    let rows: Vec<Vec<u32>> = if trimmed.starts_with('[') {
        serde_json::from_str(trimmed).map_err(|e| CliError::Usage(format!("bad tableau JSON: {e}")))?
    } else {
        trimmed
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|line| {
                line.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<u32>().map_err(|_| CliError::Usage(format!("'{t}' is not a tableau entry"))))
                    .collect()
            })
            .collect::<Result<_, _>>()?
    };
    StandardTableau::from_straight_rows(&rows).map_err(CliError::from)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions() {
        assert_eq!(parse_partition("3,1").unwrap(), Partition::new(&[3, 1]).unwrap());
        assert_eq!(parse_partition(" 2, 2 ,0").unwrap(), Partition::new(&[2, 2]).unwrap());
        assert_eq!(parse_partition("").unwrap(), Partition::empty());
        assert!(parse_partition("1,3").is_err());
        assert!(parse_partition("a").is_err());
        assert!(parse_partition("-1").is_err());
    }

    #[test]
    fn tableaux() {
        let a = parse_tableau("1 2\n3\n").unwrap();
        let b = parse_tableau("[[1,2],[3]]").unwrap();
        assert_eq!(a, b);
        assert!(parse_tableau("2 1\n3").is_err());
        assert!(parse_tableau("1 x").is_err());
    }
}
