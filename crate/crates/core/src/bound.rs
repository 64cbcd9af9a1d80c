use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Maximum degree allowed inside a color class.
///
/// `Unbounded` only asks that every class induce a forest. Ordering puts every
/// finite bound below `Unbounded`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DegreeBound {
    Finite(u32),
    Unbounded,
}

impl DegreeBound {
    pub fn allows(self, degree: usize) -> bool {
        match self {
            DegreeBound::Finite(k) => degree <= k as usize,
            DegreeBound::Unbounded => true,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, DegreeBound::Finite(_))
    }

    /// True when the bound admits a single edge, i.e. `k >= 1`.
    pub fn allows_edges(self) -> bool {
        self.allows(1)
    }
}

impl From<u32> for DegreeBound {
    fn from(k: u32) -> Self {
        DegreeBound::Finite(k)
    }
}

impl fmt::Display for DegreeBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeBound::Finite(k) => write!(f, "{k}"),
            DegreeBound::Unbounded => f.write_str("inf"),
        }
    }
}

impl FromStr for DegreeBound {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") {
            return Ok(DegreeBound::Unbounded);
        }
        s.parse::<u32>()
            .map(DegreeBound::Finite)
            .map_err(|_| Error::Unknown {
                kind: "degree bound",
                value: s.to_string(),
            })
    }
}

/// Parses a comma-separated list such as `1,2,inf`.
pub fn parse_bound_list(s: &str) -> Result<Vec<DegreeBound>, Error> {
    s.split(',')
        .filter(|part| !part.trim().is_empty())
        .map(str::parse)
        .collect()
}

// Finite bounds serialize as JSON numbers, the unbounded case as "inf".
impl Serialize for DegreeBound {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            DegreeBound::Finite(k) => serializer.serialize_u32(*k),
            DegreeBound::Unbounded => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for DegreeBound {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(u32),
            Text(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Num(k) => Ok(DegreeBound::Finite(k)),
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_order() {
        assert_eq!(
            "inf".parse::<DegreeBound>().unwrap(),
            DegreeBound::Unbounded
        );
        assert_eq!("2".parse::<DegreeBound>().unwrap(), DegreeBound::Finite(2));
        assert!("-1".parse::<DegreeBound>().is_err());
        assert!(DegreeBound::Finite(100) < DegreeBound::Unbounded);
        assert_eq!(
            parse_bound_list("1, 2,inf").unwrap(),
            vec![
                DegreeBound::Finite(1),
                DegreeBound::Finite(2),
                DegreeBound::Unbounded
            ]
        );
    }

    #[test]
    fn json_form() {
        let v = serde_json::to_string(&[DegreeBound::Finite(3), DegreeBound::Unbounded]).unwrap();
        assert_eq!(v, r#"[3,"inf"]"#);
        let back: Vec<DegreeBound> = serde_json::from_str(&v).unwrap();
        assert_eq!(back, vec![DegreeBound::Finite(3), DegreeBound::Unbounded]);
    }
}
