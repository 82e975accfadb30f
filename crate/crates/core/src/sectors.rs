//! Twisted sectors: finite stabilizers (the box), the group they generate,
//! logweights, ages, fixed coordinate sets, and sector faces.

use crate::arith::{frac, lcm, Int, Rat};
use crate::error::{Error, Result};
use crate::input::Instance;
use crate::matrix::{lattice_coset_reps, rank_rat, IntMat};
use crate::polytope::{Face, LabeledPolytope};
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// A twisted-sector label: the logweights of a finite-order element of K on
/// the N coordinate lines, each in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Logweights(pub Vec<Rat>);

impl Logweights {
    pub fn identity(n: usize) -> Self {
        Logweights(vec![Rat::zero(); n])
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|a| a.is_zero())
    }

    pub fn compose(&self, other: &Logweights) -> Logweights {
        Logweights(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| frac(&(a + b)))
                .collect(),
        )
    }

    pub fn inverse(&self) -> Logweights {
        Logweights(self.0.iter().map(|a| frac(&(-a))).collect())
    }

    /// Order as a group element: lcm of the logweight denominators.
    pub fn order(&self) -> Int {
        let mut l = Int::one();
        for a in &self.0 {
            l = lcm(&l, a.denom());
        }
        l
    }

    pub fn age(&self) -> Rat {
        self.0.iter().sum()
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn fixed_coords(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, a)| a.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

/// The geometric face of the moment polytope attached to a sector. Circle
/// mode synthesizes faces of the simplex `{sum b_i x_i = level, x >= 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SectorFace {
    Empty,
    SimplexDim(usize),
    Poly(Face),
}

impl SectorFace {
    pub fn is_empty(&self) -> bool {
        matches!(self, SectorFace::Empty)
    }

    pub fn h_vector(&self, polytope: Option<&LabeledPolytope>) -> Option<Vec<usize>> {
        match self {
            SectorFace::Empty => None,
            SectorFace::SimplexDim(k) => Some(vec![1; k + 1]),
            SectorFace::Poly(face) => Some(polytope.expect("polytope mode").h_vector(face)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SectorData {
    pub g: Logweights,
    pub age: Rat,
    pub fixed_coords: BTreeSet<usize>,
    pub sector_face: SectorFace,
    pub in_box: bool,
    pub degree_shift: Rat,
}

#[derive(Clone, Debug)]
pub struct GammaTable {
    pub box_elems: Vec<Logweights>,
    /// All of Γ in lexicographic order; index 0 is the identity.
    pub sectors: Vec<SectorData>,
    pub exponent: Int,
}

impl GammaTable {
    pub fn len(&self) -> usize {
        self.sectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sectors.is_empty()
    }

    pub fn index_of(&self, g: &Logweights) -> Option<usize> {
        self.sectors.binary_search_by(|s| s.g.cmp(g)).ok()
    }

    pub fn elem(&self, i: usize) -> &Logweights {
        &self.sectors[i].g
    }

    pub fn compose_idx(&self, i: usize, j: usize) -> usize {
        let gh = self.elem(i).compose(self.elem(j));
        self.index_of(&gh).expect("gamma is closed under products")
    }

    pub fn inverse_idx(&self, i: usize) -> usize {
        let inv = self.elem(i).inverse();
        self.index_of(&inv).expect("gamma is closed under inverses")
    }
}

/// Is `g` an element of K? In circle mode this means the logweights come
/// from a single parameter `s`; in polytope mode, `varpi . a` is integral.
pub fn is_in_k(inst: &Instance, g: &Logweights) -> bool {
    let data = inst.data();
    if g.0.len() != data.n {
        return false;
    }
    if g.0.iter().any(|a| a.is_negative() || *a >= Rat::one()) {
        return false;
    }
    match inst {
        Instance::Circle { weights, .. } => circle_parameter(weights, g).is_some(),
        Instance::Polytope { .. } => {
            let img = data.varpi.mul_vec_rat(&g.0);
            img.iter().all(|x| x.denom().is_one())
        }
    }
}

/// Recover `s` in `[0,1)` with `a_i = frac(s b_i)`, if any.
pub fn circle_parameter(weights: &[Int], g: &Logweights) -> Option<Rat> {
    let b0 = &weights[0];
    let mut k = Int::zero();
    while &k < b0 {
        let s = (&g.0[0] + Rat::from_integer(k.clone())) / Rat::from_integer(b0.clone());
        let ok = weights
            .iter()
            .zip(&g.0)
            .all(|(b, a)| frac(&(&s * Rat::from_integer(b.clone()))) == *a);
        if ok {
            return Some(s);
        }
        k += 1;
    }
    None
}

/// The logweight vector of `exp(2 pi i s)` in circle mode.
pub fn circle_element(weights: &[Int], s: &Rat) -> Logweights {
    Logweights(
        weights
            .iter()
            .map(|b| frac(&(s * Rat::from_integer(b.clone()))))
            .collect(),
    )
}

/// All elements of K fixing a point over the face `f`, i.e. supported on
/// the active facets of `f`. Polytope mode only; circle-mode boxes are
/// enumerated by `enumerate_box`.
pub fn stabilizer_of_face(inst: &Instance, face: &Face) -> Result<Vec<Logweights>> {
    let data = inst.data();
    data.require_connected()?;
    let polytope = inst.polytope_ref().expect("polytope mode");
    // work at any vertex of the face and filter by support
    let vertex = &polytope.vertices[face.vertices[0]];
    let reps = vertex_group(data, vertex.active.iter().copied().collect())?;
    let mut out: Vec<Logweights> = reps
        .into_iter()
        .filter(|g| g.support().is_subset(&face.active))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

fn vertex_group(
    data: &crate::delzant::DelzantData,
    active: Vec<usize>,
) -> Result<Vec<Logweights>> {
    let d = data.d;
    assert_eq!(active.len(), d);
    let mut m = IntMat::zeros(d, d);
    for (j, &i) in active.iter().enumerate() {
        for r in 0..d {
            m[(r, j)] = data.varpi[(r, i)].clone();
        }
    }
    let reps = lattice_coset_reps(&m)?;
    Ok(reps
        .into_iter()
        .map(|rep| {
            let mut v = vec![Rat::zero(); data.n];
            for (j, &i) in active.iter().enumerate() {
                v[i] = rep[j].clone();
            }
            Logweights(v)
        })
        .collect())
}

/// Union of the vertex stabilizer groups, deduplicated and sorted.
pub fn enumerate_box(inst: &Instance) -> Result<Vec<Logweights>> {
    let data = inst.data();
    data.require_connected()?;
    let mut box_elems: BTreeSet<Logweights> = BTreeSet::new();
    match inst {
        Instance::Circle { weights, .. } => {
            for b in weights {
                let mut k = Int::zero();
                while &k < b {
                    let s = Rat::new(k.clone(), b.clone());
                    box_elems.insert(circle_element(weights, &s));
                    k += 1;
                }
            }
        }
        Instance::Polytope { polytope, .. } => {
            for v in &polytope.vertices {
                for g in vertex_group(data, v.active.iter().copied().collect())? {
                    box_elems.insert(g);
                }
            }
        }
    }
    Ok(box_elems.into_iter().collect())
}

/// Close the box under the group law and attach sector data to every
/// element of the resulting group Γ.
pub fn gamma_group(inst: &Instance, box_elems: &[Logweights]) -> Result<GammaTable> {
    let data = inst.data();
    data.require_connected()?;
    let n = data.n;
    let mut gamma: BTreeSet<Logweights> = BTreeSet::new();
    gamma.insert(Logweights::identity(n));
    for g in box_elems {
        gamma.insert(g.clone());
    }
    let mut frontier: Vec<Logweights> = gamma.iter().cloned().collect();
    while let Some(g) = frontier.pop() {
        for h in box_elems {
            let gh = g.compose(h);
            if gamma.insert(gh.clone()) {
                frontier.push(gh);
            }
        }
    }
    let mut exponent = Int::one();
    for g in &gamma {
        exponent = lcm(&exponent, &g.order());
    }
    let box_set: BTreeSet<&Logweights> = box_elems.iter().collect();
    let sectors = gamma
        .iter()
        .map(|g| {
            let mut s = sector_data(inst, g);
            s.in_box = box_set.contains(g);
            debug_assert_eq!(s.in_box, !s.sector_face.is_empty());
            s
        })
        .collect();
    Ok(GammaTable {
        box_elems: box_elems.to_vec(),
        sectors,
        exponent,
    })
}

/// Convenience: box + closure in one call.
pub fn gamma_table(inst: &Instance) -> Result<GammaTable> {
    let box_elems = enumerate_box(inst)?;
    gamma_group(inst, &box_elems)
}

pub fn sector_data(inst: &Instance, g: &Logweights) -> SectorData {
    let age = g.age();
    let fixed = g.fixed_coords();
    let support = g.support();
    let sector_face = match inst {
        Instance::Circle { .. } => {
            if fixed.is_empty() {
                SectorFace::Empty
            } else {
                SectorFace::SimplexDim(fixed.len() - 1)
            }
        }
        Instance::Polytope { polytope, .. } => match polytope.face_from_facets(&support) {
            Some(face) => SectorFace::Poly(face),
            None => SectorFace::Empty,
        },
    };
    let in_box = !sector_face.is_empty();
    SectorData {
        degree_shift: &age * Rat::from_integer(Int::from(2)),
        g: g.clone(),
        age,
        fixed_coords: fixed,
        sector_face,
        in_box,
    }
}

/// Finite-stabilizer criterion: the K-weights of the coordinate lines fixed
/// by `g` span the character lattice of K over Q.
pub fn fixed_weights_span(inst: &Instance, g: &Logweights) -> bool {
    let data = inst.data();
    let rows: Vec<Vec<Rat>> = g
        .fixed_coords()
        .iter()
        .map(|&i| {
            data.weights[i]
                .iter()
                .cloned()
                .map(Rat::from_integer)
                .collect()
        })
        .collect();
    rank_rat(&rows) == data.k_rank
}

/// Logweight table rows, one per coordinate line: row i lists `a_i(g)` for
/// every g in Γ, in sector order.
pub fn logweight_rows(gamma: &GammaTable) -> Vec<Vec<Rat>> {
    let n = gamma.sectors.first().map_or(0, |s| s.g.0.len());
    (0..n)
        .map(|i| gamma.sectors.iter().map(|s| s.g.0[i].clone()).collect())
        .collect()
}

/// Orders of the vertex groups of a polytope instance: |det M_v| per vertex.
pub fn vertex_group_orders(inst: &Instance) -> Result<BTreeMap<Vec<Rat>, Int>> {
    let polytope = inst.polytope_ref().expect("polytope mode");
    let data = inst.data();
    let mut out = BTreeMap::new();
    for v in &polytope.vertices {
        let g = vertex_group(data, v.active.iter().copied().collect())?;
        out.insert(v.point.clone(), Int::from(g.len()));
    }
    Ok(out)
}

/// Deterministic display name for a sector: `k/n` in circle mode, the
/// comma-separated logweights otherwise.
pub fn sector_name(inst: &Instance, g: &Logweights) -> String {
    match inst {
        Instance::Circle { weights, .. } => {
            let s = circle_parameter(weights, g).expect("element of K");
            crate::arith::show_rat(&s)
        }
        Instance::Polytope { .. } => g
            .0
            .iter()
            .map(crate::arith::show_rat)
            .collect::<Vec<_>>()
            .join(","),
    }
}

/// Parse a sector name back into a logweight vector (without membership
/// checks beyond shape).
pub fn parse_sector_name(inst: &Instance, name: &str) -> Result<Logweights> {
    let err = || Error::Parse(format!("bad sector element {name}"));
    match inst {
        Instance::Circle { weights, .. } => {
            let s = crate::arith::parse_rat(name).ok_or_else(err)?;
            if s.is_negative() || s >= Rat::one() {
                return Err(err());
            }
            Ok(circle_element(weights, &s))
        }
        Instance::Polytope { .. } => {
            let entries: Vec<Rat> = name
                .split(',')
                .map(|t| crate::arith::parse_rat(t).ok_or_else(err))
                .collect::<Result<_>>()?;
            if entries.len() != inst.data().n {
                return Err(err());
            }
            Ok(Logweights(entries))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, rat_int};
    use crate::input::parse_input;

    fn lw(entries: &[(i64, i64)]) -> Logweights {
        Logweights(entries.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    fn circle_123() -> Instance {
        parse_input("mode circle\nweights 1 2 3\nlevel 1\n").unwrap()
    }

    #[test]
    fn box_of_123() {
        let inst = circle_123();
        let box_elems = enumerate_box(&inst).unwrap();
        assert_eq!(
            box_elems,
            vec![
                lw(&[(0, 1), (0, 1), (0, 1)]),
                lw(&[(1, 3), (2, 3), (0, 1)]),
                lw(&[(1, 2), (0, 1), (1, 2)]),
                lw(&[(2, 3), (1, 3), (0, 1)]),
            ]
        );
    }

    #[test]
    fn gamma_of_123_is_z6_with_paper_logweights() {
        let inst = circle_123();
        let gamma = gamma_table(&inst).unwrap();
        assert_eq!(gamma.len(), 6);
        assert_eq!(gamma.exponent, int(6));
        // zeta_1 = exp(2 pi i / 6) has logweights (1/6, 1/3, 1/2)
        assert_eq!(gamma.sectors[1].g, lw(&[(1, 6), (1, 3), (1, 2)]));
        // degree shifts 0,2,2,2,2,4 in sector order
        let shifts: Vec<Rat> = gamma.sectors.iter().map(|s| s.degree_shift.clone()).collect();
        assert_eq!(
            shifts,
            vec![rat_int(0), rat_int(2), rat_int(2), rat_int(2), rat_int(2), rat_int(4)]
        );
    }

    #[test]
    fn sector_data_of_123() {
        let inst = circle_123();
        let gamma = gamma_table(&inst).unwrap();
        // zeta_1 fixes nothing
        assert!(gamma.sectors[1].fixed_coords.is_empty());
        assert!(!gamma.sectors[1].in_box);
        assert_eq!(gamma.sectors[1].age, rat_int(1));
        // zeta_2 fixes the third line
        assert_eq!(gamma.sectors[2].g, lw(&[(1, 3), (2, 3), (0, 1)]));
        assert_eq!(gamma.sectors[2].fixed_coords, BTreeSet::from([2]));
        assert_eq!(gamma.sectors[2].age, rat_int(1));
        // identity
        assert_eq!(gamma.sectors[0].age, rat_int(0));
        assert_eq!(gamma.sectors[0].fixed_coords.len(), 3);
    }

    #[test]
    fn box_of_113_equals_gamma() {
        let inst = parse_input("mode circle\nweights 1 1 3\nlevel 1\n").unwrap();
        let box_elems = enumerate_box(&inst).unwrap();
        assert_eq!(box_elems.len(), 3);
        let gamma = gamma_group(&inst, &box_elems).unwrap();
        assert_eq!(gamma.len(), 3);
        assert_eq!(gamma.exponent, int(3));
    }

    #[test]
    fn smooth_simplex_box_is_trivial() {
        let inst = parse_input(
            "mode polytope\ndim 2\nfacet 1 0 ; 0 ; 1\nfacet 0 1 ; 0 ; 1\nfacet -1 -1 ; -1 ; 1\n",
        )
        .unwrap();
        let box_elems = enumerate_box(&inst).unwrap();
        assert_eq!(box_elems, vec![Logweights::identity(3)]);
    }

    #[test]
    fn p123_vertex_stabilizers() {
        // facets: 0 = (-2,-3) (the z_1 line misses it), 1 = (1,0), 2 = (0,1)
        let inst = parse_input(
            "mode polytope\ndim 2\nfacet -2 -3 ; -1 ; 1\nfacet 1 0 ; 0 ; 1\nfacet 0 1 ; 0 ; 1\n",
        )
        .unwrap();
        let polytope = inst.polytope_ref().unwrap();
        // vertex with only z_2 nonzero: facets 0 and 2 are active
        let v = polytope
            .face_from_facets(&BTreeSet::from([0, 2]))
            .expect("vertex");
        let stab = stabilizer_of_face(&inst, &v).unwrap();
        assert_eq!(
            stab,
            vec![
                Logweights::identity(3),
                lw(&[(1, 2), (0, 1), (1, 2)]),
            ]
        );
        // vertex with only z_1 nonzero: weight 1, trivial group
        let v1 = polytope
            .face_from_facets(&BTreeSet::from([1, 2]))
            .expect("vertex");
        assert_eq!(
            stabilizer_of_face(&inst, &v1).unwrap(),
            vec![Logweights::identity(3)]
        );
        // vertex with only z_3 nonzero: Z_3
        let v3 = polytope
            .face_from_facets(&BTreeSet::from([0, 1]))
            .expect("vertex");
        let stab3 = stabilizer_of_face(&inst, &v3).unwrap();
        assert_eq!(stab3.len(), 3);
        for g in &stab3 {
            assert!(g.0[2].is_zero());
        }
        // order of each vertex group equals |det M_v|
        let orders = vertex_group_orders(&inst).unwrap();
        let mut sorted: Vec<Int> = orders.values().cloned().collect();
        sorted.sort();
        assert_eq!(sorted, vec![int(1), int(2), int(3)]);
    }

    #[test]
    fn gamma_invariants() {
        for text in [
            "mode circle\nweights 1 2 3\nlevel 1\n",
            "mode circle\nweights 1 1 3\nlevel 1\n",
            "mode polytope\ndim 2\nfacet -2 -3 ; -1 ; 1\nfacet 1 0 ; 0 ; 1\nfacet 0 1 ; 0 ; 1\n",
        ] {
            let inst = parse_input(text).unwrap();
            let gamma = gamma_table(&inst).unwrap();
            for s in &gamma.sectors {
                assert!(is_in_k(&inst, &s.g));
                // age(g) + age(g^{-1}) counts the moving coordinates
                let inv = s.g.inverse();
                let moving = Rat::from_integer(Int::from(s.g.support().len()));
                assert_eq!(&s.age + inv.age(), moving);
                // denominators divide the exponent
                for a in &s.g.0 {
                    assert!((gamma.exponent.clone() % a.denom()).is_zero());
                }
                if s.in_box {
                    assert!(fixed_weights_span(&inst, &s.g));
                }
            }
        }
    }

    #[test]
    fn sector_names_round_trip() {
        let inst = circle_123();
        let gamma = gamma_table(&inst).unwrap();
        for s in &gamma.sectors {
            let name = sector_name(&inst, &s.g);
            let back = parse_sector_name(&inst, &name).unwrap();
            assert_eq!(back, s.g);
        }
        assert_eq!(sector_name(&inst, &gamma.sectors[1].g), "1/6");
    }
}
