//! Brute-force computations on explicit small groups, used to check the
//! symbolic results: unipotent centralizers and induced Gelfand-Graev
//! characters of `GL_n(F_p)` and `SL_n(F_p)` for `n <= 3`, Kostka-Foulkes
//! polynomials from tableaux and Young subgroup branching.
//!
//! Expensive results can be kept in an [`OracleCache`].

pub mod branching;
pub mod field;
pub mod kostka;
pub mod unipotent;

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exactalg::{parse_rational, rational_to_string, ExactScalar};

pub use branching::{branching_bruteforce, symmetric_characters, BranchingEntry};
pub use field::FpMatrix;
pub use kostka::{charge, kostka_foulkes, ssyt};
pub use unipotent::{
    count_unipotent_by_type, enumerate_unipotent, induced_ggg, jordan_matrix, FiniteMatrixGroup,
    UnipotentClassInfo, UnipotentValues, MAX_ENUMERATION,
};

/// Bumped whenever a cached computation changes its output.
pub const CACHE_VERSION: u32 = 1;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "GREENFN_CACHE_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CacheStatus {
    Hit,
    Miss,
    Disabled,
}

/// Content-addressed store of oracle results, one JSON file per key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCache {
    dir: Option<PathBuf>,
}

impl OracleCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        OracleCache {
            dir: Some(dir.into()),
        }
    }

    pub fn disabled() -> Self {
        OracleCache { dir: None }
    }

    /// Uses `$GREENFN_CACHE_DIR` if set, otherwise no cache.
    pub fn from_env() -> Self {
        std::env::var_os(CACHE_ENV).map_or_else(Self::disabled, Self::new)
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn key(kind: &str, params: &Value) -> String {
        let mut h = Sha256::new();
        h.update(kind.as_bytes());
        h.update(b"\n");
        // serde_json maps are sorted, so this is canonical
        h.update(params.to_string().as_bytes());
        h.update(b"\n");
        h.update(CACHE_VERSION.to_string().as_bytes());
        hex::encode(h.finalize())
    }

    /// Returns the stored value for `(kind, params)` or computes and stores
    /// it. Unreadable or mismatching entries are recomputed.
    pub fn get_or_compute<T, F>(
        &self,
        kind: &str,
        params: &Value,
        compute: F,
    ) -> Result<(T, CacheStatus)>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T>,
    {
        let Some(dir) = &self.dir else {
            return Ok((compute()?, CacheStatus::Disabled));
        };
        let path = dir.join(format!("{}.json", Self::key(kind, params)));
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(entry) = serde_json::from_str::<Value>(&text) {
                if entry["kind"] == kind
                    && &entry["params"] == params
                    && entry["version"] == CACHE_VERSION
                {
                    if let Ok(v) = serde_json::from_value(entry["value"].clone()) {
                        return Ok((v, CacheStatus::Hit));
                    }
                }
            }
        }
        let value = compute()?;
        fs::create_dir_all(dir).map_err(|e| Error::Cache(format!("{}: {e}", dir.display())))?;
        let entry =
            json!({ "kind": kind, "params": params, "version": CACHE_VERSION, "value": value });
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, entry.to_string())
            .map_err(|e| Error::Cache(format!("{}: {e}", tmp.display())))?;
        fs::rename(&tmp, &path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        Ok((value, CacheStatus::Miss))
    }
}

fn group_params(g: &FiniteMatrixGroup) -> Value {
    json!({ "kind": g.kind, "n": g.n, "q": g.q })
}

pub fn cached_unipotent(
    cache: &OracleCache,
    g: &FiniteMatrixGroup,
) -> Result<(Vec<UnipotentClassInfo>, CacheStatus)> {
    cache.get_or_compute("unipotent", &group_params(g), || Ok(enumerate_unipotent(g)))
}

#[derive(Serialize, Deserialize)]
struct StoredScalar {
    conductor: u32,
    coeffs: Vec<String>,
}

impl From<&ExactScalar> for StoredScalar {
    fn from(x: &ExactScalar) -> Self {
        StoredScalar {
            conductor: x.conductor(),
            coeffs: x.coeffs().iter().map(rational_to_string).collect(),
        }
    }
}

impl StoredScalar {
    fn restore(&self) -> Result<ExactScalar> {
        let c = self
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactScalar::from_power_basis(self.conductor, c))
    }
}

pub fn cached_induced_ggg(
    cache: &OracleCache,
    g: &FiniteMatrixGroup,
    lambda: &[usize],
    psi: u32,
) -> Result<(UnipotentValues, CacheStatus)> {
    let mut params = group_params(g);
    params["lambda"] = json!(lambda);
    params["psi"] = json!(psi);
    let (stored, status) = cache.get_or_compute("induced_ggg", &params, || {
        Ok(induced_ggg(g, lambda, psi)?
            .iter()
            .map(|(mu, v)| (mu.clone(), StoredScalar::from(v)))
            .collect::<Vec<_>>())
    })?;
    let values = stored
        .into_iter()
        .map(|(mu, s)| Ok((mu, s.restore()?)))
        .collect::<Result<_>>()?;
    Ok((values, status))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ggg::LinearKind;

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = OracleCache::new(dir.path());
        let g = FiniteMatrixGroup::new(LinearKind::Gl, 2, 3).unwrap();
        let (a, s1) = cached_induced_ggg(&cache, &g, &[2], 1).unwrap();
        let (b, s2) = cached_induced_ggg(&cache, &g, &[2], 1).unwrap();
        assert_eq!((s1, s2), (CacheStatus::Miss, CacheStatus::Hit));
        assert_eq!(a, b);
        let (_, s3) = cached_unipotent(&OracleCache::disabled(), &g).unwrap();
        assert_eq!(s3, CacheStatus::Disabled);
    }

    #[test]
    fn corrupt_entries_are_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let cache = OracleCache::new(dir.path());
        let g = FiniteMatrixGroup::new(LinearKind::Sl, 2, 3).unwrap();
        let (a, _) = cached_unipotent(&cache, &g).unwrap();
        let key = OracleCache::key("unipotent", &group_params(&g));
        fs::write(dir.path().join(format!("{key}.json")), "not json").unwrap();
        let (b, s) = cached_unipotent(&cache, &g).unwrap();
        assert_eq!((a, s), (b, CacheStatus::Miss));
    }
}
