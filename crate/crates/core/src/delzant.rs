//! The Lerman-Tolman lift: from a labeled polytope (or a circle weight
//! vector) to the subtorus K of T^N, its character lattice, and the
//! K-weights on the coordinate lines of C^N.

use crate::arith::{Int, Rat};
use crate::error::{Error, Result};
use crate::matrix::{rank, smith_normal_form, IntMat};
use crate::polytope::LabeledPolytope;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Circle,
    Polytope,
}

#[derive(Clone, Debug)]
pub struct DelzantData {
    /// Number of coordinate lines of C^N.
    pub n: usize,
    /// Rank of the ambient torus quotient (0 in circle mode).
    pub d: usize,
    /// d x N matrix whose i-th column is `m_i * y_i`.
    pub varpi: IntMat,
    pub k_rank: usize,
    /// K-character of each coordinate line, in the chosen basis of the
    /// character lattice of K.
    pub weights: Vec<Vec<Int>>,
    pub connected: bool,
    /// The facet offsets, or the reduction level in circle mode.
    pub moment_offsets: Vec<Rat>,
    pub mode: Mode,
}

#[derive(Clone, Debug)]
pub struct CircleAction {
    pub weights: Vec<Int>,
}

impl CircleAction {
    pub fn new(weights: Vec<Int>) -> Result<Self> {
        if weights.is_empty() || weights.iter().any(|b| !b.is_positive()) {
            return Err(Error::NonPositiveWeight);
        }
        Ok(CircleAction { weights })
    }
}

/// Character basis of K from the Smith decomposition of varpi-transpose:
/// the bottom `N - d` rows of U map Z^N onto the (free part of the)
/// character lattice and kill the image of varpi-transpose.
pub fn delzant_lift(polytope: &LabeledPolytope) -> Result<DelzantData> {
    let d = polytope.dim;
    let n = polytope.facets.len();
    let mut varpi = IntMat::zeros(d, n);
    for (i, f) in polytope.facets.iter().enumerate() {
        for r in 0..d {
            varpi[(r, i)] = &f.normal[r] * Int::from(f.label);
        }
    }
    if rank(&varpi) != d {
        // cannot happen for a validated polytope (normals span R^d)
        return Err(Error::Degenerate);
    }
    let snf = smith_normal_form(&varpi.transpose());
    let connected = snf.diagonal().iter().all(|x| x.is_one());
    let k_rank = n - d;
    let mut weights: Vec<Vec<Int>> = (0..n)
        .map(|i| (d..n).map(|r| snf.u[(r, i)].clone()).collect())
        .collect();
    if k_rank == 1 {
        normalize_rank_one_sign(&mut weights);
    }
    Ok(DelzantData {
        n,
        d,
        varpi,
        k_rank,
        weights,
        connected,
        moment_offsets: polytope.facets.iter().map(|f| f.offset.clone()).collect(),
        mode: Mode::Polytope,
    })
}

fn normalize_rank_one_sign(weights: &mut [Vec<Int>]) {
    let sum: Int = weights.iter().map(|w| w[0].clone()).sum();
    let flip = if sum.is_zero() {
        weights
            .iter()
            .find(|w| !w[0].is_zero())
            .map(|w| w[0].is_negative())
            .unwrap_or(false)
    } else {
        sum.is_negative()
    };
    if flip {
        for w in weights.iter_mut() {
            w[0] = -w[0].clone();
        }
    }
}

pub fn circle_action_data(action: &CircleAction, level: &Rat) -> Result<DelzantData> {
    if !level.is_positive() {
        return Err(Error::Parse(
            "reduction level must be a positive rational".into(),
        ));
    }
    let n = action.weights.len();
    Ok(DelzantData {
        n,
        d: 0,
        varpi: IntMat::zeros(0, n),
        k_rank: 1,
        weights: action.weights.iter().map(|b| vec![b.clone()]).collect(),
        connected: true,
        moment_offsets: vec![level.clone()],
        mode: Mode::Circle,
    })
}

impl DelzantData {
    /// Circle-mode weights as plain integers.
    pub fn circle_weights(&self) -> Option<Vec<Int>> {
        if self.mode != Mode::Circle {
            return None;
        }
        Some(self.weights.iter().map(|w| w[0].clone()).collect())
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.connected {
            Ok(())
        } else {
            Err(Error::DisconnectedK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat_int};
    use crate::polytope::parse_polytope;

    fn weights_of(d: &DelzantData) -> Vec<i64> {
        d.weights
            .iter()
            .map(|w| {
                assert_eq!(w.len(), 1);
                i64::try_from(&w[0]).unwrap()
            })
            .collect()
    }

    #[test]
    fn p123_moment_triangle_gives_circle_with_weights_1_2_3() {
        let p = parse_polytope(
            "mode polytope\ndim 2\nfacet -2 -3 ; -1 ; 1\nfacet 1 0 ; 0 ; 1\nfacet 0 1 ; 0 ; 1\n",
        )
        .unwrap();
        let d = delzant_lift(&p).unwrap();
        assert!(d.connected);
        assert_eq!(d.k_rank, 1);
        assert_eq!(weights_of(&d), vec![1, 2, 3]);
    }

    #[test]
    fn standard_simplex_gives_weights_1_1_1() {
        let p = parse_polytope(
            "mode polytope\ndim 2\nfacet 1 0 ; 0 ; 1\nfacet 0 1 ; 0 ; 1\nfacet -1 -1 ; -1 ; 1\n",
        )
        .unwrap();
        let d = delzant_lift(&p).unwrap();
        assert!(d.connected);
        assert_eq!(d.k_rank, 1);
        assert_eq!(weights_of(&d), vec![1, 1, 1]);
    }

    #[test]
    fn interval_with_even_labels_is_disconnected() {
        let p = parse_polytope("mode polytope\ndim 1\nfacet 1 ; 0 ; 2\nfacet -1 ; -1 ; 2\n")
            .unwrap();
        let d = delzant_lift(&p).unwrap();
        assert!(!d.connected);
        assert!(d.require_connected().is_err());
    }

    #[test]
    fn weight_relation_kernel_annihilates_varpi() {
        for text in [
            "mode polytope\ndim 2\nfacet 1 0 ; 0 ; 1\nfacet 0 1 ; 0 ; 1\nfacet -1 -1 ; -1 ; 1\n",
            "mode polytope\ndim 2\nfacet 1 0 ; 0 ; 1\nfacet 0 1 ; 0 ; 1\nfacet -1 0 ; -1 ; 2\nfacet 0 -1 ; -1 ; 3\n",
        ] {
            let p = parse_polytope(text).unwrap();
            let d = delzant_lift(&p).unwrap();
            // composite Z^d -> Z^N -> characters of K is zero
            let q = IntMat::from_rows(
                (0..d.k_rank)
                    .map(|r| d.weights.iter().map(|w| w[r].clone()).collect())
                    .collect(),
            );
            assert!(q.mul(&d.varpi.transpose()).is_zero());
            assert_eq!(crate::matrix::rank(&q), d.k_rank);
        }
    }

    #[test]
    fn offsets_do_not_change_group_data() {
        let a = delzant_lift(
            &parse_polytope(
                "mode polytope\ndim 2\nfacet 1 0 ; 0 ; 1\nfacet 0 1 ; 0 ; 1\nfacet -1 -1 ; -1 ; 1\n",
            )
            .unwrap(),
        )
        .unwrap();
        let b = delzant_lift(
            &parse_polytope(
                "mode polytope\ndim 2\nfacet 1 0 ; -2 ; 1\nfacet 0 1 ; -2 ; 1\nfacet -1 -1 ; -9 ; 1\n",
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(a.weights, b.weights);
        assert_eq!(a.connected, b.connected);
        assert_ne!(a.moment_offsets, b.moment_offsets);
    }

    #[test]
    fn circle_data() {
        let c = CircleAction::new(vec![int(1), int(2), int(3)]).unwrap();
        let d = circle_action_data(&c, &rat_int(1)).unwrap();
        assert_eq!(d.k_rank, 1);
        assert!(d.connected);
        assert_eq!(weights_of(&d), vec![1, 2, 3]);
        assert!(CircleAction::new(vec![int(0)]).is_err());
        assert!(CircleAction::new(vec![int(-1)]).is_err());
        let one = CircleAction::new(vec![int(1)]).unwrap();
        assert_eq!(
            weights_of(&circle_action_data(&one, &rat_int(1)).unwrap()),
            vec![1]
        );
    }
}
