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

//! Runs every acceptance criterion and prints one line per criterion.

use std::io::Write;

use cubecrux::accept::{run_all, DEFAULT_SEED};
use cubecrux::manifest::seed_or;

#[test]
fn acceptance_criteria() {
    let seed = seed_or(DEFAULT_SEED);
    let reports = run_all(seed);
    // Written to the raw handle so the summary shows without --nocapture.
    let mut text = format!("\nacceptance (seed {seed})\n");
    for (i, r) in reports.iter().enumerate() {
        text += &format!("[{}] {}\n", i + 1, r.line());
        for f in &r.failures {
            text += &format!("      {f}\n");
        }
    }
    std::io::stdout().lock().write_all(text.as_bytes()).expect("stdout");
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed).map(|r| r.name).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
