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

//! Automorphisms, translation lengths and contracting elements.

pub mod automorphism;
pub mod contracting;
pub mod length;

pub use automorphism::{Automorphism, BallChart};
pub use contracting::{
    cr_from_ell_check, cr_from_ell_check_with, neatly_contracting_witness, CrFromEllReport, NeatWitness,
};

pub use length::{
    inversion_report, min_set, product_action, tau_and_reduced, translation_length, InversionReport, LengthCertificate,
    Method, MinSet, TauReport, Transform,
};
