//! Graded abelian groups presented degreewise by integer relation matrices.

use crate::arith::{Int, Rat};
use crate::matrix::{cokernel_structure, IntMat};
use std::collections::BTreeMap;

/// One graded slice: `Z^free_rank + Z/t_1 + ... + Z/t_k` with t_i | t_{i+1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSlice {
    pub free_rank: usize,
    pub torsion: Vec<Int>,
}

impl GroupSlice {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedAbelianGroup {
    pub slices: BTreeMap<Rat, GroupSlice>,
}

/// Quotient each degree slice of the free group on the given generators by
/// the row span of that degree's relation matrix. A relation matrix for
/// degree `d` must have one column per generator of degree `d`, in order.
pub fn graded_slice_group(
    generator_degrees: &[Rat],
    relations: &BTreeMap<Rat, IntMat>,
) -> GradedAbelianGroup {
    let mut counts: BTreeMap<Rat, usize> = BTreeMap::new();
    for d in generator_degrees {
        *counts.entry(d.clone()).or_insert(0) += 1;
    }
    let mut slices = BTreeMap::new();
    for (d, n) in counts {
        let slice = match relations.get(&d) {
            None => GroupSlice {
                free_rank: n,
                torsion: vec![],
            },
            Some(m) => {
                assert_eq!(
                    m.cols(),
                    n,
                    "relation matrix at degree {d} does not match the slice basis"
                );
                // cokernel of the transpose: relations are rows over the basis
                let (free, torsion) = cokernel_structure(&m.transpose());
                GroupSlice {
                    free_rank: free,
                    torsion,
                }
            }
        };
        if !slice.is_trivial() {
            slices.insert(d, slice);
        }
    }
    GradedAbelianGroup { slices }
}

/// Render a slice the way cohomology tables are usually written:
/// `Z`, `Z^2`, `Z + Z/2`, `Z/2 + Z/2`, or `0`.
pub fn show_slice(s: &GroupSlice) -> String {
    let mut parts = Vec::new();
    match s.free_rank {
        0 => {}
        1 => parts.push("Z".to_string()),
        r => parts.push(format!("Z^{r}")),
    }
    for t in &s.torsion {
        parts.push(format!("Z/{t}"));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}
