use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{MatQ, Rat};

/// A central arrangement of `d` hyperplanes in Q^n, each given by a nonzero
/// normal vector. Hyperplane order is significant: NBC bases use it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    name: String,
    ambient_dim: usize,
    normals: Vec<Vec<Rat>>,
}

/// On-disk form: `{"name": ..., "ambient_dim": n, "hyperplanes": [["p/q", ...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrangementFile {
    pub name: String,
    pub ambient_dim: usize,
    pub hyperplanes: Vec<Vec<Rat>>,
}

impl Arrangement {
    /// Validate normals and collapse proportional duplicates. Returns the
    /// arrangement and a warning for every dropped hyperplane.
    pub fn new(
        name: impl Into<String>,
        ambient_dim: usize,
        normals: Vec<Vec<Rat>>,
    ) -> Result<(Arrangement, Vec<String>)> {
        let mut kept: Vec<Vec<Rat>> = Vec::with_capacity(normals.len());
        let mut kept_keys: Vec<Vec<Rat>> = Vec::new();
        let mut warnings = Vec::new();
        for (idx, v) in normals.into_iter().enumerate() {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                    context: format!("hyperplane {idx}"),
                });
            }
            let Some(key) = projective_key(&v) else {
                return Err(Error::ZeroNormal { index: idx });
            };
            if let Some(first) = kept_keys.iter().position(|k| *k == key) {
                let msg = format!("hyperplane {idx} is proportional to hyperplane {first}; dropped");
                log::warn!("{msg}");
                warnings.push(msg);
                continue;
            }
            kept_keys.push(key);
            kept.push(v);
        }
        Ok((
            Arrangement {
                name: name.into(),
                ambient_dim,
                normals: kept,
            },
            warnings,
        ))
    }

    /// Like [`Arrangement::new`] but for inputs known to be reduced.
    pub fn from_normals(name: impl Into<String>, ambient_dim: usize, normals: Vec<Vec<Rat>>) -> Result<Arrangement> {
        Arrangement::new(name, ambient_dim, normals).map(|(a, _)| a)
    }

    pub fn from_i64(name: &str, ambient_dim: usize, normals: &[&[i64]]) -> Result<Arrangement> {
        Arrangement::from_normals(
            name,
            ambient_dim,
            normals
                .iter()
                .map(|v| v.iter().map(|&x| Rat::from(x)).collect())
                .collect(),
        )
    }

    pub fn from_file(file: ArrangementFile) -> Result<(Arrangement, Vec<String>)> {
        Arrangement::new(file.name, file.ambient_dim, file.hyperplanes)
    }

    pub fn from_json(text: &str) -> Result<(Arrangement, Vec<String>)> {
        let file: ArrangementFile = serde_json::from_str(text)?;
        Arrangement::from_file(file)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<(Arrangement, Vec<String>)> {
        Arrangement::from_json(&fs::read_to_string(path)?)
    }

    pub fn to_file(&self) -> ArrangementFile {
        ArrangementFile {
            name: self.name.clone(),
            ambient_dim: self.ambient_dim,
            hyperplanes: self.normals.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("arrangement serializes")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Arrangement {
        self.name = name.into();
        self
    }

    /// Number of hyperplanes.
    pub fn d(&self) -> usize {
        self.normals.len()
    }

    /// Ambient dimension.
    pub fn n(&self) -> usize {
        self.ambient_dim
    }

    pub fn normals(&self) -> &[Vec<Rat>] {
        &self.normals
    }

    pub fn normal_matrix(&self) -> MatQ {
        MatQ::from_rows(self.normals.clone())
    }

    /// Rank of the normals indexed by the bits of `mask`.
    pub fn rank_of(&self, mask: u64) -> usize {
        let rows: Vec<Vec<Rat>> = (0..self.d())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| self.normals[i].clone())
            .collect();
        if rows.is_empty() {
            0
        } else {
            MatQ::from_rows(rows).rank()
        }
    }

    pub fn rank(&self) -> usize {
        if self.normals.is_empty() {
            0
        } else {
            self.normal_matrix().rank()
        }
    }

    pub fn is_essential(&self) -> bool {
        self.rank() == self.ambient_dim
    }

    /// Rewrite the normals in coordinates of their span, giving an essential
    /// arrangement with the same matroid. A no-op when already essential.
    pub fn essentialize(&self) -> Arrangement {
        if self.is_essential() {
            return self.clone();
        }
        let (rref, pivots) = self.normal_matrix().transpose().rref();
        // Columns of the transpose are the normals; express each in the basis
        // of pivot normals using the reduced echelon coordinates.
        let r = pivots.len();
        let normals = (0..self.d())
            .map(|j| (0..r).map(|i| rref.get(i, j).clone()).collect())
            .collect();
        Arrangement {
            name: self.name.clone(),
            ambient_dim: r,
            normals,
        }
    }

    /// Deletion: drop hyperplane `k`.
    pub fn delete(&self, k: usize) -> Arrangement {
        let mut normals = self.normals.clone();
        normals.remove(k);
        Arrangement {
            name: format!("{}\\{}", self.name, k + 1),
            ambient_dim: self.ambient_dim,
            normals,
        }
    }

    /// Restriction to hyperplane `k`: the traces of the other hyperplanes,
    /// as an arrangement in a coordinate system of dimension n - 1.
    pub fn restrict_to(&self, k: usize) -> Arrangement {
        let row = MatQ::from_rows(vec![self.normals[k].clone()]);
        let basis = row.rank_and_nullspace().basis;
        let restricted: Vec<Vec<Rat>> = (0..self.d())
            .filter(|&j| j != k)
            .map(|j| {
                basis
                    .iter()
                    .map(|b| b.iter().zip(&self.normals[j]).map(|(x, y)| x * y).sum())
                    .collect()
            })
            .collect();
        let (a, _) = Arrangement::new(format!("{}^{}", self.name, k + 1), self.ambient_dim - 1, restricted)
            .expect("traces of distinct hyperplanes are nonzero");
        a
    }

    /// Restrict to the subspace spanned by the columns of `basis` (n x m).
    pub(crate) fn restrict_to_subspace(&self, basis: &MatQ, name: String) -> Result<(Arrangement, Vec<String>)> {
        let normals = self
            .normals
            .iter()
            .map(|v| {
                (0..basis.cols())
                    .map(|c| v.iter().enumerate().map(|(i, x)| x * basis.get(i, c)).sum())
                    .collect()
            })
            .collect();
        Arrangement::new(name, basis.cols(), normals)
    }
}

/// Normal vector scaled so its first nonzero entry is 1; `None` for zero.
fn projective_key(v: &[Rat]) -> Option<Vec<Rat>> {
    let lead = v.iter().find(|x| !x.is_zero())?.clone();
    Some(v.iter().map(|x| x / &lead).collect())
}
