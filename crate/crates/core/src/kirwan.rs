//! The inertial Kirwan map: kernel generators per sector, Chen-Ruan ring
//! presentations of the quotient, rational Poincare series, and integral
//! graded groups for circle quotients.

use crate::arith::{Int, Rat};
use crate::error::{Error, Result};
use crate::graded::{graded_slice_group, GradedAbelianGroup};
use crate::input::Instance;
use crate::inertial::{
    nh_presentation, reduce_relations, star_structure_constant, RingPresentation,
};
use crate::matrix::{kernel_basis, IntMat};
use crate::monomial::WeightMonomial;
use crate::poly::Poly;
use crate::sectors::{GammaTable, Logweights};
use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// One kernel generator: an Euler-class coefficient supported in a single
/// sector summand.
#[derive(Clone, Debug)]
pub struct KernelGenerator {
    pub sector: usize,
    /// Coordinates whose weights multiply into the coefficient.
    pub coords: Vec<usize>,
    pub euler: WeightMonomial,
}

#[derive(Clone, Debug)]
pub struct KernelIdeal {
    pub generators: Vec<KernelGenerator>,
}

fn euler_of_coords(inst: &Instance, coords: &[usize]) -> WeightMonomial {
    let data = inst.data();
    let one = Rat::one();
    let mut m = WeightMonomial::one();
    for &i in coords {
        m = m.mul(&WeightMonomial::character_power(&data.weights[i], &one));
    }
    m
}

/// Tolman-Weitsman kernel generators. Circle mode walks the Morse route at
/// the single fixed point: one generator per sector, the Euler class of the
/// sector's fixed subspace. Polytope mode takes the Stanley-Reisner route:
/// the minimal facet sets that miss the sector face.
pub fn kirwan_kernel_generators(inst: &Instance, gamma: &GammaTable) -> Result<KernelIdeal> {
    inst.data().require_connected()?;
    let mut generators = Vec::new();
    match inst {
        Instance::Circle { .. } => {
            for (s, sec) in gamma.sectors.iter().enumerate() {
                let coords: Vec<usize> = sec.fixed_coords.iter().copied().collect();
                generators.push(KernelGenerator {
                    sector: s,
                    euler: euler_of_coords(inst, &coords),
                    coords,
                });
            }
        }
        Instance::Polytope { polytope, .. } => {
            for (s, sec) in gamma.sectors.iter().enumerate() {
                let support = sec.g.support();
                let fixed: Vec<usize> = sec.fixed_coords.iter().copied().collect();
                for coords in minimal_missing_sets(polytope, &support, &fixed) {
                    generators.push(KernelGenerator {
                        euler: euler_of_coords(inst, &coords),
                        sector: s,
                        coords,
                    });
                }
            }
        }
    }
    Ok(KernelIdeal { generators })
}

/// Minimal subsets S of `fixed` such that the facets S together with the
/// sector support have empty common face.
fn minimal_missing_sets(
    polytope: &crate::polytope::LabeledPolytope,
    support: &BTreeSet<usize>,
    fixed: &[usize],
) -> Vec<Vec<usize>> {
    let mut minimal: Vec<Vec<usize>> = Vec::new();
    for size in 0..=fixed.len() {
        for subset in fixed.iter().copied().combinations(size) {
            if minimal
                .iter()
                .any(|m| m.iter().all(|x| subset.contains(x)))
            {
                continue;
            }
            let mut facets: BTreeSet<usize> = support.clone();
            facets.extend(subset.iter().copied());
            if polytope.face_from_facets(&facets).is_none() {
                minimal.push(subset);
            }
        }
    }
    minimal
}

/// Danilov-style presentation of one sector's quotient over Q.
#[derive(Clone, Debug)]
pub struct StanleyReisnerPresentation {
    pub sector: Logweights,
    /// Coordinate indices carrying the variables x_i.
    pub vars: Vec<usize>,
    /// Squarefree generators of the monomial ideal, as index sets into
    /// `vars`' coordinates.
    pub monomial_ideal: Vec<Vec<usize>>,
    /// Integer linear forms over `vars`.
    pub linear_forms: Vec<Vec<Int>>,
    /// Marker for an empty sector face (the zero ring).
    pub zero_ring: bool,
}

pub fn stanley_reisner(inst: &Instance, gamma: &GammaTable, sector: usize) -> Result<StanleyReisnerPresentation> {
    let data = inst.data();
    data.require_connected()?;
    let polytope = inst
        .polytope_ref()
        .ok_or(Error::Parse("stanley_reisner needs polytope mode".into()))?;
    let sec = &gamma.sectors[sector];
    let support = sec.g.support();
    let vars: Vec<usize> = sec.fixed_coords.iter().copied().collect();
    let monomial_ideal = minimal_missing_sets(polytope, &support, &vars);
    // linear forms: integer kernel of the weight matrix on the fixed columns
    let k = data.k_rank;
    let mut wmat = IntMat::zeros(k, vars.len());
    for (j, &i) in vars.iter().enumerate() {
        for r in 0..k {
            wmat[(r, j)] = data.weights[i][r].clone();
        }
    }
    let kern = kernel_basis(&wmat);
    let linear_forms: Vec<Vec<Int>> = (0..kern.cols()).map(|c| kern.col(c)).collect();
    let zero_ring = sec.sector_face.is_empty();
    Ok(StanleyReisnerPresentation {
        sector: sec.g.clone(),
        vars,
        monomial_ideal,
        linear_forms,
        zero_ring,
    })
}

/// The Chen-Ruan presentation: inertial relations plus kernel generators.
pub fn hcr_presentation(inst: &Instance, gamma: &GammaTable) -> Result<RingPresentation> {
    let mut pres = nh_presentation(inst, gamma)?;
    let kernel = kirwan_kernel_generators(inst, gamma)?;
    let mut rels = pres.relations.clone();
    for g in &kernel.generators {
        let p = pres.sector_class(&g.euler, g.sector);
        if !p.is_zero() {
            rels.push(p.normalize_sign());
        }
    }
    pres.relations = reduce_relations(rels, &pres.ring);
    Ok(pres)
}

/// Kernel generators rendered in the presentation's variables.
pub fn kernel_polynomials(
    pres: &RingPresentation,
    kernel: &KernelIdeal,
) -> Vec<(usize, Poly)> {
    kernel
        .generators
        .iter()
        .map(|g| (g.sector, pres.sector_class(&g.euler, g.sector)))
        .collect()
}

/// Rational Poincare series by the h-vector route: each box sector
/// contributes `t^{2 age} * h_face(t^2)`.
pub fn poincare_series_q(
    inst: &Instance,
    gamma: &GammaTable,
    cutoff: &Rat,
) -> Result<BTreeMap<Rat, usize>> {
    inst.data().require_connected()?;
    let two = Rat::from_integer(Int::from(2));
    let mut series: BTreeMap<Rat, usize> = BTreeMap::new();
    for sec in &gamma.sectors {
        let Some(h) = sec.sector_face.h_vector(inst.polytope_ref()) else {
            continue;
        };
        for (j, &hj) in h.iter().enumerate() {
            if hj == 0 {
                continue;
            }
            let deg = &sec.degree_shift + Rat::from_integer(Int::from(j as i64)) * &two;
            if &deg <= cutoff {
                *series.entry(deg).or_insert(0) += hj;
            }
        }
    }
    Ok(series)
}

/// The reduced kernel-submodule elements `gen_j * y_h`, as (coefficient
/// polynomial over the coefficient variables, target sector, base degree).
struct ModuleElement {
    coeff: Poly,
    sector: usize,
    degree: Rat,
}

fn kernel_submodule_elements(
    inst: &Instance,
    gamma: &GammaTable,
    kernel: &KernelIdeal,
    pres: &RingPresentation,
) -> Vec<ModuleElement> {
    let mut out = Vec::new();
    for gen in &kernel.generators {
        for h in 0..gamma.len() {
            let (target, c) = star_structure_constant(inst, gamma.elem(gen.sector), gamma.elem(h));
            let t = gamma.index_of(&target).expect("closed");
            let coeff = pres.expand_coefficient(&gen.euler.mul(&c));
            if coeff.is_zero() {
                continue;
            }
            let cdeg: Rat = coeff
                .homogeneous_degree(&coeff_ring(pres))
                .expect("homogeneous coefficient");
            out.push(ModuleElement {
                coeff,
                sector: t,
                degree: cdeg + &gamma.sectors[t].degree_shift,
            });
        }
    }
    out
}

fn coeff_ring(pres: &RingPresentation) -> crate::poly::PolyRing {
    crate::poly::PolyRing::new(pres.ring.vars.clone())
}

/// Integral graded groups of the quotient for circle-type data: per degree,
/// the cokernel of the kernel-ideal slice inside the free module
/// `(+)_g Z[u] y_g`, computed degreewise by `graded_slice_group`.
pub fn graded_groups_z(
    inst: &Instance,
    gamma: &GammaTable,
    cutoff: &Rat,
) -> Result<GradedAbelianGroup> {
    let data = inst.data();
    data.require_connected()?;
    if data.k_rank != 1 {
        return Err(Error::IntegralUnsupported);
    }
    let kernel = kirwan_kernel_generators(inst, gamma)?;
    let pres = nh_presentation(inst, gamma)?;
    let two = Rat::from_integer(Int::from(2));

    // slice bases: (u-power, sector) pairs per degree
    let mut basis: BTreeMap<Rat, Vec<(usize, usize)>> = BTreeMap::new();
    for (s, sec) in gamma.sectors.iter().enumerate() {
        let mut a = 0usize;
        loop {
            let deg = &sec.degree_shift + Rat::from_integer(Int::from(a as i64)) * &two;
            if &deg > cutoff {
                break;
            }
            basis.entry(deg).or_default().push((a, s));
            a += 1;
        }
    }
    for v in basis.values_mut() {
        v.sort();
    }

    let mut rows: BTreeMap<Rat, Vec<Vec<Int>>> = BTreeMap::new();
    for el in kernel_submodule_elements(inst, gamma, &kernel, &pres) {
        // single coefficient variable: the polynomial is c * u^e
        debug_assert_eq!(el.coeff.terms.len(), 1);
        let (exps, c) = el.coeff.terms.iter().next().unwrap();
        let e = exps[0] as usize;
        let mut a = 0usize;
        loop {
            let deg = &el.degree + Rat::from_integer(Int::from(a as i64)) * &two;
            if &deg > cutoff {
                break;
            }
            let slice = basis.get(&deg).expect("basis covers the ideal");
            let mut row = vec![Int::zero(); slice.len()];
            let pos = slice
                .binary_search(&(e + a, el.sector))
                .expect("basis element");
            row[pos] = c.clone();
            rows.entry(deg).or_default().push(row);
            a += 1;
        }
    }

    let mut generator_degrees: Vec<Rat> = Vec::new();
    for (deg, b) in &basis {
        for _ in b {
            generator_degrees.push(deg.clone());
        }
    }
    let mut relations: BTreeMap<Rat, IntMat> = BTreeMap::new();
    for (deg, mut r) in rows {
        r.sort();
        r.dedup();
        relations.insert(deg, IntMat::from_rows(r));
    }
    Ok(graded_slice_group(&generator_degrees, &relations))
}

/// Q-rank of the quotient's degree slice computed in the module basis
/// `{u^a y_g}`. The kernel ideal is a direct sum over sectors, so each
/// slice matrix is block diagonal and ranks are taken sector by sector.
pub fn module_slice_ranks_q(
    inst: &Instance,
    gamma: &GammaTable,
    kernel: &KernelIdeal,
    cutoff: &Rat,
) -> Result<BTreeMap<Rat, usize>> {
    let data = inst.data();
    data.require_connected()?;
    let pres = nh_presentation(inst, gamma)?;
    let k = data.k_rank;
    let two = Rat::from_integer(Int::from(2));
    let uring = crate::poly::PolyRing::new(pres.ring.vars[..k].to_vec());

    // degrees at which the quotient can be nonzero
    let mut degrees: BTreeSet<Rat> = BTreeSet::new();
    for sec in &gamma.sectors {
        let mut a = 0i64;
        loop {
            let deg = &sec.degree_shift + Rat::from_integer(Int::from(a)) * &two;
            if &deg > cutoff {
                break;
            }
            degrees.insert(deg);
            a += 1;
        }
    }

    // group the ideal elements by their sector summand, deduplicated
    let mut by_sector: Vec<Vec<(Poly, Rat)>> = vec![Vec::new(); gamma.len()];
    let mut seen: BTreeSet<(usize, Vec<(Vec<u32>, Int)>)> = BTreeSet::new();
    for el in kernel_submodule_elements(inst, gamma, kernel, &pres) {
        if &el.degree > cutoff {
            continue;
        }
        let key: Vec<(Vec<u32>, Int)> = el
            .coeff
            .terms
            .iter()
            .map(|(e, c)| (e[..k].to_vec(), c.clone()))
            .collect();
        if seen.insert((el.sector, key)) {
            by_sector[el.sector].push((el.coeff, el.degree));
        }
    }

    let mut out = BTreeMap::new();
    for deg in degrees {
        let mut dim = 0usize;
        let mut rank = 0usize;
        for (s, sec) in gamma.sectors.iter().enumerate() {
            let rem = &deg - &sec.degree_shift;
            if rem.is_negative() {
                continue;
            }
            let monomials = uring.monomials_of_degree(&rem);
            if monomials.is_empty() {
                continue;
            }
            dim += monomials.len();
            let index: BTreeMap<&Vec<u32>, usize> = monomials
                .iter()
                .enumerate()
                .map(|(i, m)| (m, i))
                .collect();
            let mut rows: Vec<Vec<Rat>> = Vec::new();
            for (coeff, cdeg) in &by_sector[s] {
                let shift = &deg - cdeg;
                if shift.is_negative() {
                    continue;
                }
                for m in uring.monomials_of_degree(&shift) {
                    let shifted = coeff.mul_monomial(&m, &Int::one());
                    let mut row = vec![Rat::zero(); monomials.len()];
                    for (e, c) in &shifted.terms {
                        row[index[&e[..k].to_vec()]] = Rat::from_integer(c.clone());
                    }
                    rows.push(row);
                }
            }
            rows.sort();
            rows.dedup();
            rank += crate::matrix::rank_rat(&rows);
        }
        if dim > 0 {
            out.insert(deg, dim - rank);
        }
    }
    Ok(out)
}

/// Brute-force Q-rank of a presentation's degree slice in the free
/// polynomial ring: monomial count minus the rank of the relation span.
pub fn presentation_slice_rank_q(pres: &RingPresentation, degree: &Rat) -> usize {
    let monomials = pres.ring.monomials_of_degree(degree);
    if monomials.is_empty() {
        return 0;
    }
    let index: BTreeMap<&Vec<u32>, usize> = monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for rel in &pres.relations {
        let Some(rdeg) = rel.homogeneous_degree(&pres.ring) else {
            continue;
        };
        let rem = degree - &rdeg;
        if rem.is_negative() {
            continue;
        }
        for m in pres.ring.monomials_of_degree(&rem) {
            let shifted = rel.mul_monomial(&m, &Int::one());
            let mut row = vec![Rat::zero(); monomials.len()];
            for (e, c) in &shifted.terms {
                row[index[e]] = Rat::from_integer(c.clone());
            }
            rows.push(row);
        }
    }
    monomials.len() - crate::matrix::rank_rat(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, rat_int};
    use crate::graded::GroupSlice;
    use crate::input::parse_input;
    use crate::sectors::gamma_table;

    fn circle(weights: &str) -> Instance {
        parse_input(&format!("mode circle\nweights {weights}\nlevel 1\n")).unwrap()
    }

    fn kernel_strings(inst: &Instance) -> Vec<String> {
        let gamma = gamma_table(inst).unwrap();
        let pres = nh_presentation(inst, &gamma).unwrap();
        let kernel = kirwan_kernel_generators(inst, &gamma).unwrap();
        kernel_polynomials(&pres, &kernel)
            .into_iter()
            .map(|(_, p)| p.render(&pres.ring))
            .collect()
    }

    #[test]
    fn kernel_of_123_matches_paper() {
        let inst = circle("1 2 3");
        assert_eq!(
            kernel_strings(&inst),
            vec!["6*u^3", "y1", "3*u*y2", "2*u*y3", "3*u*y4", "y5"]
        );
    }

    #[test]
    fn kernel_of_113_matches_paper() {
        let inst = circle("1 1 3");
        // generators before reduction: 3u^3, 3u*a, 3u*a^2
        assert_eq!(kernel_strings(&inst), vec!["3*u^3", "3*u*y1", "3*u*y1^2"]);
    }

    #[test]
    fn kernel_of_smooth_p2() {
        let inst = circle("1 1 1");
        assert_eq!(kernel_strings(&inst), vec!["u^3"]);
    }

    #[test]
    fn hcr_presentation_113() {
        let inst = circle("1 1 3");
        let gamma = gamma_table(&inst).unwrap();
        let pres = hcr_presentation(&inst, &gamma).unwrap();
        assert_eq!(
            pres.relation_strings(),
            vec!["3*u*y1", "u^2-y1^3", "3*u^3"]
        );
        assert_eq!(pres.ring.vars[1].degree, rat(4, 3));
    }

    #[test]
    fn hcr_presentation_121() {
        let inst = circle("1 2 1");
        let gamma = gamma_table(&inst).unwrap();
        let pres = hcr_presentation(&inst, &gamma).unwrap();
        assert_eq!(
            pres.relation_strings(),
            vec!["2*u*y1", "u^2-y1^2", "2*u^3"]
        );
    }

    #[test]
    fn hcr_presentation_point() {
        let inst = circle("1");
        let gamma = gamma_table(&inst).unwrap();
        let pres = hcr_presentation(&inst, &gamma).unwrap();
        assert_eq!(pres.relation_strings(), vec!["u"]);
    }

    #[test]
    fn poincare_123() {
        let inst = circle("1 2 3");
        let gamma = gamma_table(&inst).unwrap();
        let s = poincare_series_q(&inst, &gamma, &rat_int(20)).unwrap();
        let expect: BTreeMap<Rat, usize> =
            [(rat_int(0), 1), (rat_int(2), 4), (rat_int(4), 1)].into();
        assert_eq!(s, expect);
    }

    #[test]
    fn poincare_121_and_smooth() {
        let inst = circle("1 2 1");
        let gamma = gamma_table(&inst).unwrap();
        let s = poincare_series_q(&inst, &gamma, &rat_int(20)).unwrap();
        let expect: BTreeMap<Rat, usize> =
            [(rat_int(0), 1), (rat_int(2), 2), (rat_int(4), 1)].into();
        assert_eq!(s, expect);

        let inst = circle("1 1 1");
        let gamma = gamma_table(&inst).unwrap();
        let s = poincare_series_q(&inst, &gamma, &rat_int(20)).unwrap();
        let expect: BTreeMap<Rat, usize> =
            [(rat_int(0), 1), (rat_int(2), 1), (rat_int(4), 1)].into();
        assert_eq!(s, expect);
    }

    #[test]
    fn poincare_matches_presentation_slice_ranks() {
        for w in ["1 2 3", "1 1 3", "1 2 1", "2 3"] {
            let inst = circle(w);
            let gamma = gamma_table(&inst).unwrap();
            let cutoff = rat_int(16);
            let series = poincare_series_q(&inst, &gamma, &cutoff).unwrap();
            let pres = hcr_presentation(&inst, &gamma).unwrap();
            // collect every candidate degree up to the cutoff
            let kernel = kirwan_kernel_generators(&inst, &gamma).unwrap();
            let module = module_slice_ranks_q(&inst, &gamma, &kernel, &cutoff).unwrap();
            for (deg, rank) in &module {
                assert_eq!(
                    series.get(deg).copied().unwrap_or(0),
                    *rank,
                    "weights {w} degree {deg} disagrees"
                );
                assert_eq!(
                    presentation_slice_rank_q(&pres, deg),
                    *rank,
                    "presentation route disagrees at {w}, degree {deg}"
                );
            }
            for (deg, count) in &series {
                assert_eq!(module.get(deg).copied().unwrap_or(0), *count);
            }
        }
    }

    #[test]
    fn graded_groups_121_torsion_pattern() {
        let inst = circle("1 2 1");
        let gamma = gamma_table(&inst).unwrap();
        let g = graded_groups_z(&inst, &gamma, &rat_int(12)).unwrap();
        let z = |r| GroupSlice {
            free_rank: r,
            torsion: vec![],
        };
        assert_eq!(g.slices[&rat_int(0)], z(1));
        assert_eq!(g.slices[&rat_int(2)], z(2));
        assert_eq!(
            g.slices[&rat_int(4)],
            GroupSlice {
                free_rank: 1,
                torsion: vec![int(2)]
            }
        );
        for d in [6, 8, 10, 12] {
            assert_eq!(
                g.slices[&rat_int(d)],
                GroupSlice {
                    free_rank: 0,
                    torsion: vec![int(2), int(2)]
                },
                "degree {d}"
            );
        }
        // nothing in odd degrees
        for d in [1, 3, 5, 7, 9, 11] {
            assert!(!g.slices.contains_key(&rat_int(d)));
        }
    }

    #[test]
    fn graded_groups_point_and_113() {
        let inst = circle("1");
        let gamma = gamma_table(&inst).unwrap();
        let g = graded_groups_z(&inst, &gamma, &rat_int(10)).unwrap();
        assert_eq!(g.slices.len(), 1);
        assert_eq!(g.slices[&rat_int(0)].free_rank, 1);

        let inst = circle("1 1 3");
        let gamma = gamma_table(&inst).unwrap();
        let g = graded_groups_z(&inst, &gamma, &rat_int(4)).unwrap();
        assert_eq!(g.slices[&rat_int(2)].free_rank, 1);
        assert_eq!(g.slices[&rat(4, 3)].free_rank, 1);
        assert_eq!(
            g.slices[&rat(10, 3)],
            GroupSlice {
                free_rank: 0,
                torsion: vec![int(3)]
            }
        );
    }

    #[test]
    fn z_mode_rejects_higher_rank() {
        let inst = parse_input(
            "mode polytope\ndim 2\nfacet 1 0 ; 0 ; 1\nfacet 0 1 ; 0 ; 1\nfacet -1 0 ; -1 ; 1\nfacet 0 -1 ; -1 ; 1\n",
        )
        .unwrap();
        let gamma = gamma_table(&inst).unwrap();
        assert!(matches!(
            graded_groups_z(&inst, &gamma, &rat_int(10)),
            Err(Error::IntegralUnsupported)
        ));
    }

    #[test]
    fn stanley_reisner_identity_sector_of_p2() {
        let inst = parse_input(
            "mode polytope\ndim 2\nfacet 1 0 ; 0 ; 1\nfacet 0 1 ; 0 ; 1\nfacet -1 -1 ; -1 ; 1\n",
        )
        .unwrap();
        let gamma = gamma_table(&inst).unwrap();
        let sr = stanley_reisner(&inst, &gamma, 0).unwrap();
        assert!(!sr.zero_ring);
        assert_eq!(sr.vars, vec![0, 1, 2]);
        assert_eq!(sr.monomial_ideal, vec![vec![0, 1, 2]]);
        // linear ideal has rank d = 2
        assert_eq!(sr.linear_forms.len(), 2);
    }

    #[test]
    fn stanley_reisner_vertex_sector_of_p123() {
        let inst = parse_input(
            "mode polytope\ndim 2\nfacet -2 -3 ; -1 ; 1\nfacet 1 0 ; 0 ; 1\nfacet 0 1 ; 0 ; 1\n",
        )
        .unwrap();
        let gamma = gamma_table(&inst).unwrap();
        // the order-3 sector (1/3, 2/3, 0) fixes coordinate 2
        let idx = gamma
            .index_of(&Logweights(vec![rat(1, 3), rat(2, 3), rat_int(0)]))
            .unwrap();
        let sr = stanley_reisner(&inst, &gamma, idx).unwrap();
        assert!(!sr.zero_ring);
        assert_eq!(sr.vars, vec![2]);
        // the single variable is itself a minimal non-face: Q[x]/(x)
        assert_eq!(sr.monomial_ideal, vec![vec![2]]);
        assert!(sr.linear_forms.is_empty());
    }

    #[test]
    fn smooth_polytope_p2_hcr_matches_circle_route() {
        let poly_inst = parse_input(
            "mode polytope\ndim 2\nfacet 1 0 ; 0 ; 1\nfacet 0 1 ; 0 ; 1\nfacet -1 -1 ; -1 ; 1\n",
        )
        .unwrap();
        let gamma = gamma_table(&poly_inst).unwrap();
        let pres = hcr_presentation(&poly_inst, &gamma).unwrap();
        assert_eq!(pres.relation_strings(), vec!["u^3"]);
    }
}
