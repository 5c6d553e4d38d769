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

pub mod accept;
pub mod actions;
pub mod chart;
pub mod construct;
pub mod crossratio;
pub mod cubes;
pub mod error;
pub mod extension;
pub mod generators;
pub mod io;
pub mod manifest;
pub mod median;
pub mod pocset;
pub mod wallset;
pub mod weight;

pub use chart::{ComplexChart, Halfspace, RawChart, Sign, SparseChart, Wall};
pub use error::{Error, Result};
pub use wallset::WallSet;
pub use weight::Weight;
