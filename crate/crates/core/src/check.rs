//! The property suite: ring identities and rational cross-checks run
//! against a single instance. Used by the CLI `check` command and by the
//! acceptance tests.

use crate::arith::{Int, Rat};
use crate::error::Result;
use crate::inertial::{
    res_monomial, smile_structure_constant, star_exponents, star_structure_constant,
    structure_constants,
};
use crate::input::Instance;
use crate::kirwan::{kirwan_kernel_generators, module_slice_ranks_q, poincare_series_q, KernelIdeal};
use crate::matrix::{kernel_basis, primitive_part, IntMat};
use crate::polytope::{Facet, LabeledPolytope};
use crate::sectors::{gamma_table, GammaTable};
use num_traits::{One, Zero};

#[derive(Clone, Debug)]
pub struct PropertyCheck {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
}

#[derive(Clone, Debug)]
pub struct PropertyReport {
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0)
    }
}

pub fn run_property_suite(inst: &Instance, max_degree: &Rat) -> Result<PropertyReport> {
    let gamma = gamma_table(inst)?;
    let mut checks = Vec::new();
    checks.push(check_star_exponents(&gamma));
    checks.push(check_associativity(inst, &gamma));
    checks.push(check_grading(inst, &gamma));
    checks.push(check_smile_equals_star(inst, &gamma));
    checks.push(check_res_multiplicative(inst, &gamma));
    checks.push(check_q_consistency(inst, &gamma, max_degree)?);
    if matches!(inst, Instance::Circle { .. }) && inst.data().n > 1 {
        checks.push(check_circle_sr_agreement(inst, &gamma, max_degree)?);
    }
    Ok(PropertyReport { checks })
}

fn check_star_exponents(gamma: &GammaTable) -> PropertyCheck {
    let mut cases = 0;
    let mut failures = 0;
    for i in 0..gamma.len() {
        for j in 0..gamma.len() {
            cases += 1;
            let eps = star_exponents(gamma.elem(i), gamma.elem(j));
            if !eps.iter().all(|e| e.is_zero() || e.is_one()) {
                failures += 1;
            }
        }
    }
    PropertyCheck {
        name: "star exponents in {0,1}".into(),
        cases,
        failures,
    }
}

fn check_associativity(inst: &Instance, gamma: &GammaTable) -> PropertyCheck {
    let sc = structure_constants(inst, gamma);
    let m = gamma.len();
    let mut cases = 0;
    let mut failures = 0;
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                cases += 1;
                let (ij, cij) = &sc.table[&(i, j)];
                let (_, c_ij_k) = &sc.table[&(*ij, k)];
                let (jk, cjk) = &sc.table[&(j, k)];
                let (_, c_i_jk) = &sc.table[&(i, *jk)];
                if cij.mul(c_ij_k) != cjk.mul(c_i_jk) {
                    failures += 1;
                }
            }
        }
    }
    PropertyCheck {
        name: "associativity c(g,h)c(gh,k) = c(h,k)c(g,hk)".into(),
        cases,
        failures,
    }
}

fn check_grading(inst: &Instance, gamma: &GammaTable) -> PropertyCheck {
    let _ = inst;
    let mut cases = 0;
    let mut failures = 0;
    for i in 0..gamma.len() {
        for j in 0..gamma.len() {
            cases += 1;
            let g = gamma.elem(i);
            let h = gamma.elem(j);
            let eps_sum: Rat = star_exponents(g, h).into_iter().sum();
            if g.age() + h.age() != g.compose(h).age() + eps_sum {
                failures += 1;
            }
        }
    }
    PropertyCheck {
        name: "grading age(g)+age(h) = age(gh)+sum(eps)".into(),
        cases,
        failures,
    }
}

fn check_smile_equals_star(inst: &Instance, gamma: &GammaTable) -> PropertyCheck {
    let mut cases = 0;
    let mut failures = 0;
    for i in 0..gamma.len() {
        for j in 0..gamma.len() {
            cases += 1;
            let (t1, star) = star_structure_constant(inst, gamma.elem(i), gamma.elem(j));
            let (t2, smile) = smile_structure_constant(inst, gamma.elem(i), gamma.elem(j));
            if t1 != t2 || star != smile.total {
                failures += 1;
            }
        }
    }
    PropertyCheck {
        name: "obstruction-bundle route equals star route".into(),
        cases,
        failures,
    }
}

fn check_res_multiplicative(inst: &Instance, gamma: &GammaTable) -> PropertyCheck {
    let mut cases = 0;
    let mut failures = 0;
    for i in 0..gamma.len() {
        for j in 0..gamma.len() {
            cases += 1;
            let (gh, c) = star_structure_constant(inst, gamma.elem(i), gamma.elem(j));
            let lhs = res_monomial(inst, gamma.elem(i)).mul(&res_monomial(inst, gamma.elem(j)));
            let rhs = res_monomial(inst, &gh).mul(&c);
            if lhs != rhs {
                failures += 1;
            }
        }
    }
    PropertyCheck {
        name: "res is multiplicative".into(),
        cases,
        failures,
    }
}

/// The h-vector Poincare series must equal the Q-ranks of the quotient's
/// degree slices computed by exact linear algebra.
fn check_q_consistency(
    inst: &Instance,
    gamma: &GammaTable,
    max_degree: &Rat,
) -> Result<PropertyCheck> {
    let series = poincare_series_q(inst, gamma, max_degree)?;
    let kernel = kirwan_kernel_generators(inst, gamma)?;
    let ranks = module_slice_ranks_q(inst, gamma, &kernel, max_degree)?;
    let mut cases = 0;
    let mut failures = 0;
    for (deg, rank) in &ranks {
        cases += 1;
        if series.get(deg).copied().unwrap_or(0) != *rank {
            failures += 1;
        }
    }
    for (deg, count) in &series {
        if !ranks.contains_key(deg) {
            cases += 1;
            if *count != 0 {
                failures += 1;
            }
        }
    }
    Ok(PropertyCheck {
        name: "Poincare series equals Q-ranks of presentation slices".into(),
        cases,
        failures,
    })
}

/// Realize a circle action as the labeled simplex polytope whose Delzant
/// lift recovers the same weights.
pub fn circle_as_polytope(weights: &[Int]) -> Result<LabeledPolytope> {
    let n = weights.len();
    assert!(n > 1, "a point has no moment simplex");
    let b = IntMat::from_rows(vec![weights.to_vec()]);
    let kern = kernel_basis(&b); // n x (n-1)
    let mut facets = Vec::new();
    for i in 0..n {
        let column: Vec<Int> = (0..n - 1).map(|r| kern[(i, r)].clone()).collect();
        let (content, normal) = primitive_part(&column);
        facets.push(Facet {
            normal,
            offset: Rat::from_integer(-Int::one()),
            label: u64::try_from(&content).expect("small label"),
        });
    }
    LabeledPolytope::new(n - 1, facets)
}

/// Morse-route and Stanley-Reisner-route kernels generate the same ideal
/// over Q, compared slice by slice through the quotient ranks.
fn check_circle_sr_agreement(
    inst: &Instance,
    gamma: &GammaTable,
    max_degree: &Rat,
) -> Result<PropertyCheck> {
    let Instance::Circle { weights, .. } = inst else {
        unreachable!()
    };
    let polytope = circle_as_polytope(weights)?;
    let poly_inst = Instance::polytope(polytope)?;
    assert_eq!(poly_inst.data().weights, inst.data().weights);
    let poly_gamma = gamma_table(&poly_inst)?;
    assert_eq!(
        gamma.sectors.iter().map(|s| &s.g).collect::<Vec<_>>(),
        poly_gamma.sectors.iter().map(|s| &s.g).collect::<Vec<_>>(),
    );
    let morse = kirwan_kernel_generators(inst, gamma)?;
    let sr = kirwan_kernel_generators(&poly_inst, &poly_gamma)?;
    let mut union = KernelIdeal {
        generators: morse.generators.clone(),
    };
    union.generators.extend(sr.generators.iter().cloned());

    let r_morse = module_slice_ranks_q(inst, gamma, &morse, max_degree)?;
    let r_sr = module_slice_ranks_q(inst, gamma, &sr, max_degree)?;
    let r_union = module_slice_ranks_q(inst, gamma, &union, max_degree)?;
    let mut cases = 0;
    let mut failures = 0;
    for (deg, rank) in &r_morse {
        cases += 1;
        let ok = r_sr.get(deg) == Some(rank) && r_union.get(deg) == Some(rank);
        if !ok {
            failures += 1;
        }
    }
    Ok(PropertyCheck {
        name: "Morse and Stanley-Reisner kernels agree over Q".into(),
        cases,
        failures,
    })
}
