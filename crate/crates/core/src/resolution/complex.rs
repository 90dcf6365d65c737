//! Stanley–Reisner complexes and reduced simplicial homology.

use std::collections::HashMap;
use std::sync::Arc;

use super::linalg::rank;
use super::Field;
use crate::graph::bits;
use crate::monomial::{MonomialIdeal, VariableUniverse};

/// The simplicial complex whose faces are the squarefree monomials outside
/// an ideal, on the ground set `ground`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleyReisnerComplex {
    universe: Arc<VariableUniverse>,
    nonfaces: Vec<u64>,
    ground: u64,
}

pub fn stanley_reisner(ideal: &MonomialIdeal) -> StanleyReisnerComplex {
    StanleyReisnerComplex {
        universe: ideal.universe().clone(),
        nonfaces: ideal.generators().iter().map(|g| g.mask()).collect(),
        ground: ideal.universe().mask(),
    }
}

impl StanleyReisnerComplex {
    pub fn universe(&self) -> &Arc<VariableUniverse> {
        &self.universe
    }

    pub fn ground(&self) -> u64 {
        self.ground
    }

    pub fn is_face(&self, face: u64) -> bool {
        face & !self.ground == 0 && !self.nonfaces.iter().any(|&n| n & !face == 0)
    }

    /// `Δ_W`: the faces contained in `w`.
    pub fn restrict(&self, w: u64) -> StanleyReisnerComplex {
        StanleyReisnerComplex { ground: self.ground & w, ..self.clone() }
    }

    /// All faces (including the empty face, unless the complex is void).
    pub fn faces(&self) -> Vec<u64> {
        enumerate_faces(self.ground, &|f| self.is_face(f))
    }

    pub fn reduced_homology(&self, field: Field) -> HomologyRanks {
        reduced_homology_of_faces(&self.faces(), field)
    }
}

/// Faces of a downward-closed family inside `ground`, found by growing faces
/// one vertex at a time in increasing order.
pub(crate) fn enumerate_faces(ground: u64, is_face: &dyn Fn(u64) -> bool) -> Vec<u64> {
    fn grow(face: u64, from: u64, ground: u64, is_face: &dyn Fn(u64) -> bool, out: &mut Vec<u64>) {
        out.push(face);
        for v in bits(ground & from) {
            let next = face | 1 << v;
            if is_face(next) {
                let above = u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0);
                grow(next, above, ground, is_face, out);
            }
        }
    }
    let mut out = Vec::new();
    if is_face(0) {
        grow(0, u64::MAX, ground, is_face, &mut out);
    }
    out
}

/// Reduced homology ranks indexed from dimension -1.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyRanks {
    ranks: Vec<usize>,
}

impl HomologyRanks {
    pub fn get(&self, dim: isize) -> usize {
        usize::try_from(dim + 1).ok().and_then(|i| self.ranks.get(i)).copied().unwrap_or(0)
    }

    /// `(dimension, rank)` for every nonzero rank.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(i, &r)| (i as isize - 1, r))
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

/// Reduced homology of the complex with the given faces. The void complex
/// (no faces) has zero homology; `{∅}` has rank one in dimension -1.
pub fn reduced_homology_of_faces(faces: &[u64], field: Field) -> HomologyRanks {
    if faces.is_empty() {
        return HomologyRanks::default();
    }
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    for level in &mut by_size {
        level.sort_unstable();
    }
    // boundary_rank[s] = rank of the boundary from size-s faces to size-(s-1) faces
    let mut boundary_rank = vec![0usize; top + 2];
    for s in 1..=top {
        let index: HashMap<u64, usize> = by_size[s - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let matrix: Vec<Vec<i64>> = by_size[s]
            .iter()
            .map(|&f| {
                let mut row = vec![0i64; by_size[s - 1].len()];
                for (pos, v) in bits(f).enumerate() {
                    let col = index[&(f & !(1 << v))];
                    row[col] = if pos % 2 == 0 { 1 } else { -1 };
                }
                row
            })
            .collect();
        boundary_rank[s] = rank(&matrix, field);
    }
    let ranks = (0..=top)
        .map(|s| by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1])
        .collect();
    HomologyRanks { ranks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::monomial::SquarefreeMonomial;
    use crate::power::edge_ideal;

    fn ideal(names: &[&str], gens: &[&str]) -> MonomialIdeal {
        let u = Arc::new(VariableUniverse::new(names.iter().copied()).unwrap());
        let gens: Vec<_> = gens.iter().map(|g| u.parse_monomial(g).unwrap()).collect();
        MonomialIdeal::new(u, gens).unwrap()
    }

    #[test]
    fn stanley_reisner_examples() {
        let hollow = stanley_reisner(&ideal(&["x", "y", "z"], &["x*y*z"]));
        assert_eq!(hollow.faces().len(), 7);
        assert!(!hollow.is_face(0b111));

        let g = Graph::path(4).unwrap();
        let ind = stanley_reisner(&edge_ideal(&g).unwrap());
        for f in 0u64..16 {
            assert_eq!(ind.is_face(f), g.edges_within(f) == 0);
        }

        let point = stanley_reisner(&ideal(&["x"], &["x"]));
        assert_eq!(point.faces(), [0]);
        assert_eq!(point.reduced_homology(Field::Rationals).get(-1), 1);
    }

    #[test]
    fn restriction_examples() {
        let hollow = stanley_reisner(&ideal(&["x", "y", "z"], &["x*y*z"]));
        assert_eq!(hollow.restrict(0b111), hollow);
        assert_eq!(hollow.restrict(0).faces(), [0]);
        let edge = hollow.restrict(0b011);
        assert_eq!(edge.faces().len(), 4);
        assert!(edge.reduced_homology(Field::Rationals).is_acyclic());
    }

    #[test]
    fn homology_examples() {
        let q = Field::Rationals;
        let hollow = stanley_reisner(&ideal(&["x", "y", "z"], &["x*y*z"])).reduced_homology(q);
        assert_eq!(hollow.nonzero().collect::<Vec<_>>(), [(1, 1)]);

        // full simplex: faces of the ideal (w) on {x,y,z}
        let full = stanley_reisner(&ideal(&["x", "y", "z", "w"], &["w"])).reduced_homology(q);
        assert!(full.is_acyclic());

        let two_points = reduced_homology_of_faces(&[0, 0b01, 0b10], q);
        assert_eq!(two_points.nonzero().collect::<Vec<_>>(), [(0, 1)]);

        assert!(reduced_homology_of_faces(&[], q).is_acyclic());
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // 6-vertex triangulation of RP^2: H~_1 = Z/2, so rank 1 over F_2 in
        // dims 1 and 2 and acyclic over Q and F_3.
        let tris = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ];
        let mut faces: Vec<u64> = Vec::new();
        for t in tris {
            let m = SquarefreeMonomial::from_indices(t).mask();
            let mut sub = m;
            loop {
                faces.push(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & m;
            }
        }
        faces.sort_unstable();
        faces.dedup();
        assert!(reduced_homology_of_faces(&faces, Field::Rationals).is_acyclic());
        assert!(reduced_homology_of_faces(&faces, Field::Prime(3)).is_acyclic());
        let mod2 = reduced_homology_of_faces(&faces, Field::Prime(2));
        assert_eq!(mod2.nonzero().collect::<Vec<_>>(), [(1, 1), (2, 1)]);
    }
}
