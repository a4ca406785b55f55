//! JSON form: an array of `[e, "c"]` pairs sorted by ascending `v`-exponent,
//! coefficients as decimal strings.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::LaurentV;

impl Serialize for LaurentV {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for (e, c) in self.terms() {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentV {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<(i64, String)> = Vec::deserialize(deserializer)?;
        let terms = raw
            .into_iter()
            .map(|(e, c)| {
                BigInt::from_str(c.trim())
                    .map(|c| (e, c))
                    .map_err(|_| de::Error::custom(format!("bad coefficient {c:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LaurentV::from_terms(terms))
    }
}

impl LaurentV {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("LaurentV serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn emits_sorted_string_coefficients() {
        let f = LaurentV::from_terms([(4, -1), (-4, 1)]);
        assert_eq!(f.to_json(), r#"[[-4,"1"],[4,"-1"]]"#);
        assert_eq!(LaurentV::zero().to_json(), "[]");
    }

    #[test]
    fn parses_and_canonicalizes() {
        let f = LaurentV::from_json(r#"[[2,"3"],[0,"0"],[-1,"123456789012345678901234567890"]]"#)
            .unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.min_exp(), Some(-1));
        assert!(LaurentV::from_json(r#"[[1,"x"]]"#).is_err());
    }
}
