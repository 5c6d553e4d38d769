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

//! Exact rational edge weights.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Edge lengths and every metric quantity derived from them.
pub type Weight = Ratio<i64>;

pub fn int(n: i64) -> Weight {
    Ratio::from_integer(n)
}

/// Parses `"3"`, `"-2"`, `"0.125"` or `"5/3"`.
pub fn parse_weight(text: &str) -> Result<Weight, Error> {
    let bad = || Error::Schema { path: String::new(), message: format!("not a rational number: {text:?}") };
    let s = text.trim();
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if frac.is_empty() && whole_digits.is_empty() {
            return Err(bad());
        }
        if !frac.chars().all(|c| c.is_ascii_digit())
            || !whole_digits.chars().all(|c| c.is_ascii_digit())
            || frac.len() > 15
        {
            return Err(bad());
        }
        let w: i64 = if whole_digits.is_empty() { 0 } else { whole_digits.parse().map_err(|_| bad())? };
        let f: i64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        let den = 10i64.pow(frac.len() as u32);
        let value = Ratio::new(w.checked_mul(den).ok_or_else(bad)? + f, den);
        return Ok(if negative { -value } else { value });
    }
    s.parse::<i64>().map(Ratio::from_integer).map_err(|_| bad())
}

/// Canonical text form: an integer, or `p/q` in lowest terms.
pub fn format_weight(w: &Weight) -> String {
    if w.is_integer() {
        w.numer().to_string()
    } else {
        format!("{}/{}", w.numer(), w.denom())
    }
}

/// Wrapper giving [`Weight`] the canonical `Display`.
pub struct Show<'a>(pub &'a Weight);

impl fmt::Display for Show<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_weight(self.0))
    }
}

/// Largest rational `g` such that every input is an integer multiple of `g`.
///
/// Every nonnegative integer combination of the inputs lies on `g·ℕ`; this
/// is the lattice translation lengths live on.
pub fn lattice_step<'a>(weights: impl IntoIterator<Item = &'a Weight>) -> Weight {
    let mut num = 0i64;
    let mut den = 1i64;
    for w in weights {
        let w = w.abs();
        if w.is_zero() {
            continue;
        }
        // gcd(a/b, c/d) = gcd(a·d', c·b') / lcm(b, d) over the common denominator
        let l = den.lcm(w.denom());
        num = (num * (l / den)).gcd(&(w.numer() * (l / w.denom())));
        den = l;
    }
    if num == 0 {
        Weight::one()
    } else {
        Ratio::new(num, den)
    }
}

pub fn ceil_to_i64(w: &Weight) -> i64 {
    w.ceil().to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_forms() {
        assert_eq!(parse_weight("3").unwrap(), int(3));
        assert_eq!(parse_weight("0.5").unwrap(), Ratio::new(1, 2));
        assert_eq!(parse_weight("-1.25").unwrap(), Ratio::new(-5, 4));
        assert_eq!(parse_weight("6/4").unwrap(), Ratio::new(3, 2));
        assert_eq!(parse_weight(".5").unwrap(), Ratio::new(1, 2));
        assert!(parse_weight("1/0").is_err());
        assert!(parse_weight("abc").is_err());
        assert!(parse_weight("").is_err());
        assert!(parse_weight("1.2.3").is_err());
    }

    #[test]
    fn canonical_format() {
        assert_eq!(format_weight(&Ratio::new(4, 2)), "2");
        assert_eq!(format_weight(&Ratio::new(1, 3)), "1/3");
        assert_eq!(format_weight(&Ratio::new(-3, 6)), "-1/2");
    }

    #[test]
    fn lattice_steps() {
        assert_eq!(lattice_step(&[int(2), int(4)]), int(2));
        assert_eq!(lattice_step(&[Ratio::new(1, 2), Ratio::new(1, 3)]), Ratio::new(1, 6));
        assert_eq!(lattice_step(&[Ratio::new(2, 3), Ratio::new(4, 3)]), Ratio::new(2, 3));
        assert_eq!(lattice_step(&[]), int(1));
    }
}
