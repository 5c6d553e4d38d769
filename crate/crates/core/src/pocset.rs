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

//! Halfspace relations, facing triples, irreducible factors and
//! sector-heaviness.

use crate::chart::{ComplexChart, Halfspace, Sign, WallId};
use crate::error::{Error, Result};

/// How two halfspaces over distinct walls sit relative to each other.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Transverse,
    /// `h1 ⊆ h2`
    Subset,
    /// `h2 ⊆ h1`
    Superset,
    /// `h1 ⊆ h2*`
    Disjoint,
    /// `h1* ⊆ h2`
    Covering,
}

impl Relation {
    pub fn name(self) -> &'static str {
        match self {
            Relation::Transverse => "transverse",
            Relation::Subset => "h1<=h2",
            Relation::Superset => "h2<=h1",
            Relation::Disjoint => "h1<=h2*",
            Relation::Covering => "h1*<=h2",
        }
    }

    /// Relation of `(h1*, h2)` given the relation of `(h1, h2)`.
    pub fn complement_first(self) -> Relation {
        match self {
            Relation::Transverse => Relation::Transverse,
            Relation::Subset => Relation::Covering,
            Relation::Superset => Relation::Disjoint,
            Relation::Disjoint => Relation::Superset,
            Relation::Covering => Relation::Subset,
        }
    }
}

impl ComplexChart {
    /// Side of `w` containing the wall `other`, for non-transverse walls.
    pub fn side_facing(&self, w: WallId, other: WallId) -> Sign {
        let (a, _) = self.carrier_edge(other);
        self.sign(a, w)
    }

    pub fn relation(&self, h1: Halfspace, h2: Halfspace) -> Result<Relation> {
        let (w1, w2) = (h1.wall, h2.wall);
        if w1 == w2 {
            return Err(Error::SameHyperplane { wall: self.wall(w1).id.clone() });
        }
        if self.transverse(w1, w2) {
            return Ok(Relation::Transverse);
        }
        // The cell (away from w2, away from w1) is the empty one.
        let s1 = self.side_facing(w1, w2);
        let s2 = self.side_facing(w2, w1);
        Ok(match (h1.sign == s1, h2.sign == s2) {
            (false, false) => Relation::Disjoint,
            (false, true) => Relation::Subset,
            (true, false) => Relation::Superset,
            (true, true) => Relation::Covering,
        })
    }

    pub fn is_subset(&self, h1: Halfspace, h2: Halfspace) -> bool {
        h1 == h2 || (h1.wall != h2.wall && self.relation(h1, h2) == Ok(Relation::Subset))
    }

    pub fn are_disjoint(&self, h1: Halfspace, h2: Halfspace) -> bool {
        h1 == h2.complement() || (h1.wall != h2.wall && self.relation(h1, h2) == Ok(Relation::Disjoint))
    }

    /// Sides can be chosen pairwise disjoint.
    pub fn facing_triple(&self, w1: WallId, w2: WallId, w3: WallId) -> Result<bool> {
        let ws = [w1, w2, w3];
        for i in 0..3 {
            for j in i + 1..3 {
                if ws[i] == ws[j] {
                    return Err(Error::SameHyperplane { wall: self.wall(ws[i]).id.clone() });
                }
                if self.transverse(ws[i], ws[j]) {
                    return Ok(false);
                }
            }
        }
        // Each wall must see the other two on the same side.
        Ok((0..3).all(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            self.side_facing(ws[i], ws[j]) == self.side_facing(ws[i], ws[k])
        }))
    }

    /// Connected components of the non-transversality graph, each sorted,
    /// ordered by least element.
    pub fn irreducible_components(&self) -> Vec<Vec<WallId>> {
        let mut unvisited: Vec<WallId> = self.wall_ids().collect();
        let mut out = Vec::new();
        while let Some(start) = unvisited.first().copied() {
            unvisited.remove(0);
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(a) = stack.pop() {
                let t = self.transverse_walls(a);
                let (keep, reach): (Vec<WallId>, Vec<WallId>) =
                    unvisited.iter().partition(|&&b| t.binary_search(&b).is_ok());
                unvisited = keep;
                comp.extend(&reach);
                stack.extend(reach);
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Pairwise-transverse halfspace families of size `2..=max_size` whose
    /// intersection contains no halfspace of the chart.
    pub fn sector_heavy_defects(&self, max_size: Option<usize>) -> Vec<Vec<Halfspace>> {
        let max_size = max_size.unwrap_or_else(|| self.dimension());
        let mut out = Vec::new();
        let mut clique = Vec::new();
        for w in self.wall_ids() {
            clique.push(w);
            self.grow_cliques(&mut clique, max_size, &mut out);
            clique.pop();
        }
        out
    }

    fn grow_cliques(&self, clique: &mut Vec<WallId>, max_size: usize, out: &mut Vec<Vec<Halfspace>>) {
        if clique.len() >= 2 {
            for mask in 0..(1u32 << clique.len()) {
                let family: Vec<Halfspace> = clique
                    .iter()
                    .enumerate()
                    .map(|(i, &w)| Halfspace::new(w, if mask >> i & 1 == 1 { Sign::Plus } else { Sign::Minus }))
                    .collect();
                if !self.sector_contains_halfspace(&family) {
                    out.push(family);
                }
            }
        }
        if clique.len() == max_size {
            return;
        }
        let last = *clique.last().expect("clique is nonempty");
        let candidates: Vec<WallId> = self
            .transverse_walls(last)
            .iter()
            .copied()
            .filter(|&b| b > last && clique.iter().all(|&a| self.transverse(a, b)))
            .collect();
        for b in candidates {
            clique.push(b);
            self.grow_cliques(clique, max_size, out);
            clique.pop();
        }
    }

    fn sector_contains_halfspace(&self, family: &[Halfspace]) -> bool {
        self.wall_ids().filter(|w| family.iter().all(|h| h.wall != *w)).any(|w| {
            [Sign::Minus, Sign::Plus].iter().any(|&s| {
                let h = Halfspace::new(w, s);
                family.iter().all(|&f| self.relation(h, f) == Ok(Relation::Subset))
            })
        })
    }
}
