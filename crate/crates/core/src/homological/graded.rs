use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::linear::NormalForm;

/// Degree-indexed normal forms over a computed window `[lo, hi]`. Degrees outside the window
/// are uncomputed, never implicitly zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedGroups {
    pub lo: i64,
    pub hi: i64,
    pub groups: BTreeMap<i64, NormalForm>,
}

impl GradedGroups {
    pub fn new(lo: i64, hi: i64) -> Self {
        GradedGroups { lo, hi, groups: BTreeMap::new() }
    }

    pub fn insert(&mut self, i: i64, nf: NormalForm) {
        self.lo = self.lo.min(i);
        self.hi = self.hi.max(i);
        self.groups.insert(i, nf);
    }

    /// `None` when degree `i` was not computed.
    pub fn get(&self, i: i64) -> Option<&NormalForm> {
        self.groups.get(&i)
    }

    pub fn is_computed(&self, i: i64) -> bool {
        self.groups.contains_key(&i)
    }

    /// Dimensions (number of canonical generators) per computed degree.
    pub fn dims(&self) -> BTreeMap<i64, usize> {
        self.groups.iter().map(|(i, g)| (*i, g.generators())).collect()
    }

    pub fn to_json(&self) -> Value {
        let groups: serde_json::Map<String, Value> = self
            .groups
            .iter()
            .map(|(i, g)| {
                let torsion: Vec<String> = g.torsion.iter().map(ToString::to_string).collect();
                (i.to_string(), json!({"free_rank": g.free_rank, "torsion": torsion, "display": g.to_string()}))
            })
            .collect();
        json!({"lo": self.lo, "hi": self.hi, "groups": groups})
    }
}

impl fmt::Display for GradedGroups {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in &self.groups {
            writeln!(f, "  [{i:>3}] {g}")?;
        }
        Ok(())
    }
}
