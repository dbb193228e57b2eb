//! Built-in named diagrams.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::diagram::{parse_pd, Diagram};
use crate::error::Result;
use crate::pretzel::{pretzel, PretzelSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub pd: String,
}

impl CatalogEntry {
    fn new(name: &str, pd: &str) -> Self {
        CatalogEntry {
            name: name.to_string(),
            pd: pd.to_string(),
        }
    }

    fn pretzel(twists: &[i32]) -> Self {
        let spec = PretzelSpec::new(twists.to_vec()).expect("valid built-in pretzel");
        let d = pretzel(&spec).expect("built-in pretzel generates");
        CatalogEntry {
            name: spec.to_string(),
            pd: d.to_string(),
        }
    }

    pub fn diagram(&self) -> Result<Diagram> {
        parse_pd(&self.pd)
    }
}

pub const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

/// Environment variable naming a PD file for the optional `k11n151` slot.
pub const K11N151_ENV: &str = "CIRCLENUM_K11N151";

/// File name looked up in corpus directories for the optional slot.
pub const K11N151_FILE: &str = "k11n151.pd";

/// The fixed catalog: unknot-loop, curl, hopf, trefoil, figure-eight,
/// P(3,3,3), P(4,-3,3) and switched-trefoil.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry::new("unknot-loop", "loops=1"),
        CatalogEntry::new("curl", "X[1,1,2,2]"),
        CatalogEntry::new("hopf", "X[4,1,3,2] X[2,3,1,4]"),
        CatalogEntry::new("trefoil", TREFOIL),
        CatalogEntry::new(
            "figure-eight",
            "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]",
        ),
        CatalogEntry::pretzel(&[3, 3, 3]),
        CatalogEntry::pretzel(&[4, -3, 3]),
        // Crossing 0 of the trefoil switched.
        CatalogEntry::new("switched-trefoil", "X[4,2,5,1] X[3,6,4,1] X[5,2,6,3]"),
    ]
}

/// Alternating diagrams whose switch subsets make up the exhaustive search
/// family. Includes the alternating catalog entries plus knot-table diagrams
/// and small pretzels.
pub fn search_seeds() -> Vec<CatalogEntry> {
    let mut seeds: Vec<CatalogEntry> = catalog()
        .into_iter()
        .filter(|e| {
            matches!(
                e.name.as_str(),
                "hopf" | "trefoil" | "figure-eight" | "P(3,3,3)"
            )
        })
        .collect();
    seeds.extend([
        CatalogEntry::new("5_1", "X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]"),
        CatalogEntry::new("5_2", "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]"),
        CatalogEntry::new(
            "6_1",
            "X[1,4,2,5] X[7,10,8,11] X[3,9,4,8] X[9,3,10,2] X[5,12,6,1] X[11,6,12,7]",
        ),
        CatalogEntry::new(
            "6_2",
            "X[1,4,2,5] X[5,10,6,11] X[3,9,4,8] X[9,3,10,2] X[7,12,8,1] X[11,6,12,7]",
        ),
        CatalogEntry::new(
            "6_3",
            "X[4,2,5,1] X[8,4,9,3] X[12,9,1,10] X[10,5,11,6] X[6,11,7,12] X[2,8,3,7]",
        ),
        CatalogEntry::new(
            "borromean",
            "X[6,1,7,2] X[12,8,9,7] X[4,12,1,11] X[10,5,11,6] X[8,4,5,3] X[2,9,3,10]",
        ),
        CatalogEntry::new(
            "7_1",
            "X[1,8,2,9] X[3,10,4,11] X[5,12,6,13] X[7,14,8,1] X[9,2,10,3] X[11,4,12,5] X[13,6,14,7]",
        ),
    ]);
    for twists in [
        &[2, 2][..],
        &[2, 2, 2],
        &[1, 1, 1, 1],
        &[3, 3, 2],
        &[2, 2, 2, 2],
        &[2, 1, 2, 1],
        &[4, 4],
    ] {
        seeds.push(CatalogEntry::pretzel(twists));
    }
    seeds
}

pub fn find(name: &str) -> Option<CatalogEntry> {
    catalog()
        .into_iter()
        .chain(search_seeds())
        .find(|e| e.name.eq_ignore_ascii_case(name))
}

/// Load the user-supplied `k11n151` diagram, if one is present: first the file
/// named by [`K11N151_ENV`], then [`K11N151_FILE`] in each of `dirs`.
pub fn k11n151_slot<P: AsRef<Path>>(dirs: &[P]) -> Option<std::io::Result<CatalogEntry>> {
    let mut candidates: Vec<PathBuf> = Vec::new();
    if let Some(p) = std::env::var_os(K11N151_ENV) {
        candidates.push(PathBuf::from(p));
    }
    candidates.extend(dirs.iter().map(|d| d.as_ref().join(K11N151_FILE)));
    let path = candidates.into_iter().find(|p| p.is_file())?;
    Some(std::fs::read_to_string(path).map(|pd| CatalogEntry {
        name: "k11n151".to_string(),
        pd,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_parses() {
        for e in catalog().into_iter().chain(search_seeds()) {
            e.diagram()
                .unwrap_or_else(|err| panic!("{}: {err}", e.name));
        }
    }

    #[test]
    fn names() {
        let names: Vec<String> = catalog().into_iter().map(|e| e.name).collect();
        assert_eq!(
            names,
            [
                "unknot-loop",
                "curl",
                "hopf",
                "trefoil",
                "figure-eight",
                "P(3,3,3)",
                "P(4,-3,3)",
                "switched-trefoil"
            ]
        );
        assert!(find("p(4,-3,3)").is_some());
        assert!(find("borromean").is_some());
        assert!(find("nope").is_none());
    }
}
