// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Run manifests: enough to check that a run is reproducible.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const SEED_VAR: &str = "CUBECRUX_SEED";

/// `CUBECRUX_SEED` when set and numeric, otherwise `default`.
pub fn seed_or(default: u64) -> u64 {
    std::env::var(SEED_VAR).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(default)
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub subcommand: String,
    pub inputs: Vec<InputDigest>,
    pub seed: Option<u64>,
    pub version: String,
    pub result_sha256: String,
}

impl RunManifest {
    pub fn new(subcommand: &str, inputs: &[(String, Vec<u8>)], seed: Option<u64>, result: &[u8]) -> RunManifest {
        RunManifest {
            subcommand: subcommand.to_string(),
            inputs: inputs
                .iter()
                .map(|(name, bytes)| InputDigest { name: name.clone(), sha256: digest(bytes) })
                .collect(),
            seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
            result_sha256: digest(result),
        }
    }

    /// Same inputs, seed and version.
    pub fn same_run(&self, other: &RunManifest) -> bool {
        self.subcommand == other.subcommand
            && self.inputs == other.inputs
            && self.seed == other.seed
            && self.version == other.version
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sha256_of_empty_input() {
        assert_eq!(digest(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }

    #[test]
    fn manifests_compare_runs() {
        let a = RunManifest::new("median", &[("x.json".into(), b"{}".to_vec())], None, b"out");
        let b = RunManifest::new("median", &[("x.json".into(), b"{}".to_vec())], None, b"out");
        assert!(a.same_run(&b));
        assert_eq!(a, b);
    }
}
