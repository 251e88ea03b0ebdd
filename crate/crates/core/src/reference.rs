//! Embedded published reference values (pattern counts, characteristic
//! polynomials, and the bounds comparison table), hash-verified at load.

use std::collections::BTreeMap;

use once_cell::sync::Lazy;
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::exactmath::{Int, IntPolynomial};

const RAW: &str = include_str!("../data/reference.json");
const RAW_SHA256: &str = "b6650018190c4d56fe35de5f477870976de6ce85ad79add85eb76afda5eea8fe";

#[derive(Deserialize)]
struct ReferenceJson {
    schema: String,
    r0: BTreeMap<String, String>,
    q: BTreeMap<String, String>,
    q_ie: BTreeMap<String, String>,
    chi_mid_9: Vec<String>,
    chi_mid_10: Vec<String>,
    table1: Vec<Table1Row>,
}

/// One printed row of the bounds comparison table. `ell` and `u` are
/// display strings: exact integers where the table prints them, otherwise
/// three-significant-digit scientific notation like "1.82e6".
#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
pub struct Table1Row {
    pub m: usize,
    pub r0: String,
    pub a: String,
    pub ell: String,
    pub u: String,
    pub f: String,
}

pub struct ReferenceData {
    pub r0: BTreeMap<usize, Int>,
    pub q: BTreeMap<usize, Int>,
    pub q_ie: BTreeMap<usize, Int>,
    pub chi_mid_9: IntPolynomial,
    pub chi_mid_10: IntPolynomial,
    pub table1: Vec<Table1Row>,
}

fn int_map(src: &BTreeMap<String, String>) -> BTreeMap<usize, Int> {
    src.iter()
        .map(|(k, v)| (k.parse().unwrap(), v.parse().unwrap()))
        .collect()
}

static DATA: Lazy<ReferenceData> = Lazy::new(|| {
    let digest = format!("{:x}", Sha256::digest(RAW.as_bytes()));
    assert_eq!(digest, RAW_SHA256, "reference data file corrupted");
    let j: ReferenceJson = serde_json::from_str(RAW).expect("reference data parses");
    assert_eq!(j.schema, "1");
    ReferenceData {
        r0: int_map(&j.r0),
        q: int_map(&j.q),
        q_ie: int_map(&j.q_ie),
        chi_mid_9: IntPolynomial::from_decimal_strings(&j.chi_mid_9).unwrap(),
        chi_mid_10: IntPolynomial::from_decimal_strings(&j.chi_mid_10).unwrap(),
        table1: j.table1,
    }
});

pub fn reference() -> &'static ReferenceData {
    &DATA
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{factorial, int};

    #[test]
    fn loads_and_verifies() {
        let r = reference();
        assert_eq!(r.r0[&4], int(2));
        assert_eq!(r.q[&8], int(347326344));
        assert_eq!(r.q_ie[&6], int(55));
        assert_eq!(r.table1.len(), 7);
    }

    #[test]
    fn embedded_polynomials_match_r0() {
        let r = reference();
        // (-1)^m chi(-1) / m! recovers the published counts.
        let v9 = -r.chi_mid_9.eval(&Int::from(-1));
        assert_eq!(&v9 / factorial(9), r.r0[&9]);
        let v10 = r.chi_mid_10.eval(&Int::from(-1));
        assert_eq!(&v10 / factorial(10), r.r0[&10]);
        assert_eq!(r.chi_mid_9.degree(), 9);
        assert_eq!(r.chi_mid_10.degree(), 10);
        assert!(r.chi_mid_9.is_monic() && r.chi_mid_10.is_monic());
    }
}
