//! JSON interchange format `{"size": n, "covers": [[i, j], …], "labels": […]}`.

use serde::{Deserialize, Serialize};

use super::{Poset, PosetError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub size: usize,
    pub covers: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl PosetFile {
    pub fn from_poset(p: &Poset) -> Self {
        Self { size: p.len(), covers: p.covers(), labels: p.labels().map(<[String]>::to_vec) }
    }

    /// Close and validate the relation.
    pub fn to_poset(&self) -> Result<Poset, PosetError> {
        let p = Poset::from_covers(self.size, &self.covers)?;
        match &self.labels {
            Some(labels) => p.with_labels(labels.clone()),
            None => Ok(p),
        }
    }
}

impl Poset {
    pub fn from_json(text: &str) -> Result<Self, PosetError> {
        let file: PosetFile =
            serde_json::from_str(text).map_err(|e| PosetError::Malformed(e.to_string()))?;
        file.to_poset()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PosetFile::from_poset(self)).expect("serializable")
    }
}
