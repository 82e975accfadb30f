//! The inertial cohomology ring of C^N with a linear K-action: sector
//! generators, star-product structure constants, the obstruction-bundle
//! route as an independent derivation, and the restriction map into the
//! real-exponent base ring.

use crate::arith::{Int, Rat};
use crate::error::Result;
use crate::input::Instance;
use crate::monomial::WeightMonomial;
use crate::poly::{Poly, PolyRing, VarInfo};
use crate::sectors::{GammaTable, Logweights};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Componentwise exponents `a_i(g) + a_i(h) - a_i(gh)`; each entry is 0 or 1.
pub fn star_exponents(g: &Logweights, h: &Logweights) -> Vec<Rat> {
    let gh = g.compose(h);
    g.0.iter()
        .zip(&h.0)
        .zip(&gh.0)
        .map(|((a, b), c)| a + b - c)
        .collect()
}

/// n-ary exponents `sum_k a_i(g_k) - a_i(g_1...g_n)`, the floor of the
/// logweight sums componentwise.
pub fn nary_star_exponents(gs: &[Logweights]) -> Vec<Rat> {
    assert!(!gs.is_empty());
    let n = gs[0].0.len();
    let mut prod = Logweights::identity(n);
    for g in gs {
        prod = prod.compose(g);
    }
    (0..n)
        .map(|i| {
            let sum: Rat = gs.iter().map(|g| g.0[i].clone()).sum();
            sum - &prod.0[i]
        })
        .collect()
}

/// The star product of two sector generators: the target sector `gh` and
/// the Euler-class monomial `prod_i weight_i^{eps_i}`.
pub fn star_structure_constant(
    inst: &Instance,
    g: &Logweights,
    h: &Logweights,
) -> (Logweights, WeightMonomial) {
    let data = inst.data();
    let eps = star_exponents(g, h);
    let mut m = WeightMonomial::one();
    for (i, e) in eps.iter().enumerate() {
        if !e.is_zero() {
            m = m.mul(&WeightMonomial::character_power(&data.weights[i], e));
        }
    }
    (g.compose(h), m)
}

/// The obstruction-bundle derivation of the same product.
#[derive(Clone, Debug)]
pub struct SmileBreakdown {
    /// Coordinates whose three logweights for (g, h, (gh)^{-1}) sum to 2.
    pub obstruction_coords: Vec<usize>,
    /// Euler class of the obstruction bundle.
    pub epsilon: WeightMonomial,
    /// Coordinates normal to Y^{g,h} inside Y^{gh}.
    pub pushforward_coords: Vec<usize>,
    /// Euler class of that normal bundle.
    pub pushforward: WeightMonomial,
    pub total: WeightMonomial,
}

pub fn smile_structure_constant(
    inst: &Instance,
    g: &Logweights,
    h: &Logweights,
) -> (Logweights, SmileBreakdown) {
    let data = inst.data();
    let gh = g.compose(h);
    let g3 = gh.inverse();
    let two = Rat::from_integer(Int::from(2));
    let mut obstruction_coords = Vec::new();
    let mut pushforward_coords = Vec::new();
    for i in 0..data.n {
        let sum = &g.0[i] + &h.0[i] + &g3.0[i];
        if sum == two {
            obstruction_coords.push(i);
        }
        if gh.0[i].is_zero() && (!g.0[i].is_zero() || !h.0[i].is_zero()) {
            pushforward_coords.push(i);
        }
    }
    let one = Rat::one();
    let mut epsilon = WeightMonomial::one();
    for &i in &obstruction_coords {
        epsilon = epsilon.mul(&WeightMonomial::character_power(&data.weights[i], &one));
    }
    let mut pushforward = WeightMonomial::one();
    for &i in &pushforward_coords {
        pushforward = pushforward.mul(&WeightMonomial::character_power(&data.weights[i], &one));
    }
    let total = epsilon.mul(&pushforward);
    (
        gh,
        SmileBreakdown {
            obstruction_coords,
            epsilon,
            pushforward_coords,
            pushforward,
            total,
        },
    )
}

/// Restriction of the rank-1 generator of the `g` sector to the fixed
/// point: `prod_i weight_i^{a_i(g)}`.
pub fn res_monomial(inst: &Instance, g: &Logweights) -> WeightMonomial {
    let data = inst.data();
    let mut m = WeightMonomial::one();
    for (i, a) in g.0.iter().enumerate() {
        if !a.is_zero() {
            m = m.mul(&WeightMonomial::character_power(&data.weights[i], a));
        }
    }
    m
}

/// The full pair table `(g, h) -> (gh, coefficient)` over sector indices.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    pub table: BTreeMap<(usize, usize), (usize, WeightMonomial)>,
}

pub fn structure_constants(inst: &Instance, gamma: &GammaTable) -> StructureConstants {
    let mut table = BTreeMap::new();
    for i in 0..gamma.len() {
        for j in 0..gamma.len() {
            let (target, m) = star_structure_constant(inst, gamma.elem(i), gamma.elem(j));
            let t = gamma.index_of(&target).expect("closed under products");
            table.insert((i, j), (t, m));
        }
    }
    StructureConstants { table }
}

/// A finitely presented graded ring: coefficient variables of degree 2
/// followed by one variable per surviving sector generator.
#[derive(Clone, Debug)]
pub struct RingPresentation {
    pub ring: PolyRing,
    pub num_coeff_vars: usize,
    /// (ring variable index, sector index) for each surviving generator.
    pub sector_vars: Vec<(usize, usize)>,
    /// For every sector, its expression as a monomial in the ring
    /// variables (identity -> 1; eliminated sectors -> products).
    pub sector_monomials: Vec<Vec<u32>>,
    pub relations: Vec<Poly>,
}

impl RingPresentation {
    pub fn basis_names(&self) -> Vec<String> {
        self.ring.vars[..self.num_coeff_vars]
            .iter()
            .map(|v| v.name.clone())
            .collect()
    }

    /// `Z[u,y1,...]` header.
    pub fn ring_header(&self) -> String {
        let vars: Vec<&str> = self.ring.vars.iter().map(|v| v.name.as_str()).collect();
        format!("Z[{}]", vars.join(","))
    }

    pub fn relation_strings(&self) -> Vec<String> {
        self.relations.iter().map(|r| r.render(&self.ring)).collect()
    }

    /// Expand a weight monomial with integer exponents into the coefficient
    /// subring.
    pub fn expand_coefficient(&self, m: &WeightMonomial) -> Poly {
        expand_monomial(m, self.num_coeff_vars, self.ring.num_vars())
    }

    /// The polynomial representing `m * y_sector`.
    pub fn sector_class(&self, m: &WeightMonomial, sector: usize) -> Poly {
        let coeff = self.expand_coefficient(m);
        coeff.mul_monomial(&self.sector_monomials[sector], &Int::one())
    }
}

fn expand_monomial(m: &WeightMonomial, num_coeff_vars: usize, nvars: usize) -> Poly {
    if m.is_zero() {
        return Poly::zero();
    }
    let mut out = Poly::constant(m.scalar.clone(), nvars);
    for (chara, exp) in &m.terms {
        assert!(
            exp.denom().is_one(),
            "cannot expand fractional power {exp} into the polynomial ring"
        );
        let mut form = Poly::zero();
        for (j, c) in chara.iter().enumerate() {
            assert!(j < num_coeff_vars);
            if !c.is_zero() {
                let mut e = vec![0u32; nvars];
                e[j] = 1;
                form = form.add(&Poly::monomial(e, c.clone()));
            }
        }
        let n = u32::try_from(exp.numer().clone()).expect("small exponent");
        out = out.mul(&form.pow(n));
    }
    out
}

/// Presentation of the Gamma-subring of inertial cohomology. Sector
/// generators whose square equals another generator exactly (coefficient 1)
/// are eliminated greedily by increasing degree, which reproduces the
/// minimal presentations of the worked examples.
pub fn nh_presentation(inst: &Instance, gamma: &GammaTable) -> Result<RingPresentation> {
    let data = inst.data();
    data.require_connected()?;
    let k = data.k_rank;
    let m = gamma.len();

    // elimination pass over nontrivial sectors, by (degree, sector order)
    let mut order: Vec<usize> = (1..m).collect();
    order.sort_by(|&a, &b| {
        (&gamma.sectors[a].degree_shift, a).cmp(&(&gamma.sectors[b].degree_shift, b))
    });
    let mut eliminated: Vec<Option<usize>> = vec![None; m]; // h -> g with g*g = h, c = 1
    for &h in &order {
        for g in 1..m {
            if g == h || eliminated[g].is_some() {
                continue;
            }
            if gamma.compose_idx(g, g) != h {
                continue;
            }
            let (_, c) = star_structure_constant(inst, gamma.elem(g), gamma.elem(g));
            if c.is_one() {
                eliminated[h] = Some(g);
                break;
            }
        }
    }

    let survivors: Vec<usize> = (1..m).filter(|&i| eliminated[i].is_none()).collect();
    let mut vars: Vec<VarInfo> = (0..k)
        .map(|j| VarInfo {
            name: if k == 1 {
                "u".to_string()
            } else {
                format!("u{}", j + 1)
            },
            degree: Rat::from_integer(Int::from(2)),
        })
        .collect();
    let mut sector_vars = Vec::new();
    for (pos, &s) in survivors.iter().enumerate() {
        sector_vars.push((vars.len(), s));
        vars.push(VarInfo {
            name: format!("y{}", pos + 1),
            degree: gamma.sectors[s].degree_shift.clone(),
        });
    }
    let ring = PolyRing::new(vars);
    let nvars = ring.num_vars();

    // monomial expression of every sector in the surviving variables
    let mut sector_monomials: Vec<Vec<u32>> = vec![vec![0; nvars]; m];
    for (var, s) in &sector_vars {
        sector_monomials[*s][*var] = 1;
    }
    for &h in &order {
        if let Some(g) = eliminated[h] {
            // degrees strictly increase, so g's monomial is already final
            let doubled: Vec<u32> = sector_monomials[g].iter().map(|e| e * 2).collect();
            sector_monomials[h] = doubled;
        }
    }

    let mut relations = Vec::new();
    for i in 1..m {
        for j in i..m {
            let (target, c) = star_structure_constant(inst, gamma.elem(i), gamma.elem(j));
            let t = gamma.index_of(&target).expect("closed");
            let lhs: Vec<u32> = sector_monomials[i]
                .iter()
                .zip(&sector_monomials[j])
                .map(|(a, b)| a + b)
                .collect();
            let lhs = Poly::monomial(lhs, Int::one());
            let rhs = expand_monomial(&c, k, nvars)
                .mul_monomial(&sector_monomials[t], &Int::one());
            let rel = lhs.sub(&rhs);
            if !rel.is_zero() {
                relations.push(rel.normalize_sign());
            }
        }
    }
    let relations = reduce_relations(relations, &ring);

    Ok(RingPresentation {
        ring,
        num_coeff_vars: k,
        sector_vars,
        sector_monomials,
        relations,
    })
}

/// Deduplicate, then drop any relation that is a coefficient-1 monomial
/// multiple of another; sort by (degree, leading monomial).
pub fn reduce_relations(mut rels: Vec<Poly>, ring: &PolyRing) -> Vec<Poly> {
    rels.sort_by_key(|r| {
        (
            r.homogeneous_degree(ring),
            r.leading().map(|(e, _)| e.clone()),
        )
    });
    rels.dedup();
    let mut keep: Vec<bool> = vec![true; rels.len()];
    for i in 0..rels.len() {
        for j in 0..rels.len() {
            if i == j || !keep[j] || !keep[i] {
                continue;
            }
            if i > j && rels[i] == rels[j] {
                keep[i] = false;
                continue;
            }
            if rels[i].monomial_quotient_by(&rels[j]).map_or(false, |m| m.iter().any(|&e| e > 0)) {
                keep[i] = false;
            }
        }
    }
    rels.into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(r, _)| r)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, rat_int};
    use crate::input::parse_input;
    use crate::sectors::gamma_table;

    fn circle(weights: &str) -> Instance {
        parse_input(&format!("mode circle\nweights {weights}\nlevel 1\n")).unwrap()
    }

    #[test]
    fn star_exponents_examples() {
        let inst = circle("1 2 3");
        let gamma = gamma_table(&inst).unwrap();
        let z1 = gamma.elem(1);
        assert_eq!(
            star_exponents(z1, z1),
            vec![rat_int(0), rat_int(0), rat_int(1)]
        );
        let id = gamma.elem(0);
        assert_eq!(
            star_exponents(id, gamma.elem(4)),
            vec![rat_int(0), rat_int(0), rat_int(0)]
        );
        // zeta_2 * zeta_3 = zeta_5 with no Euler factor: beta gamma = eta
        assert_eq!(
            star_exponents(gamma.elem(2), gamma.elem(3)),
            vec![rat_int(0), rat_int(0), rat_int(0)]
        );
    }

    #[test]
    fn nary_exponents() {
        let inst = circle("1 2 3");
        let gamma = gamma_table(&inst).unwrap();
        let z1 = gamma.elem(1).clone();
        let e = nary_star_exponents(&[z1.clone(), z1.clone(), z1.clone()]);
        // third component: 3 * 1/2 - 1/2 = 1 = floor(3/2)
        assert_eq!(e[2], rat_int(1));
        assert_eq!(e, vec![rat_int(0), rat_int(1), rat_int(1)]);
        let id = Logweights::identity(3);
        assert_eq!(
            nary_star_exponents(&[id.clone(), id.clone(), id]),
            vec![rat_int(0); 3]
        );
    }

    #[test]
    fn eta_star_eta_is_6u3_delta() {
        let inst = circle("1 2 3");
        let gamma = gamma_table(&inst).unwrap();
        let (target, m) = star_structure_constant(&inst, gamma.elem(5), gamma.elem(5));
        assert_eq!(gamma.index_of(&target), Some(4));
        assert_eq!(m.render(&["u".into()]), "6*u^3");
    }

    #[test]
    fn alpha_star_alpha_is_3u_beta() {
        let inst = circle("1 2 3");
        let gamma = gamma_table(&inst).unwrap();
        let (target, m) = star_structure_constant(&inst, gamma.elem(1), gamma.elem(1));
        assert_eq!(gamma.index_of(&target), Some(2));
        assert_eq!(m.render(&["u".into()]), "3*u");
    }

    #[test]
    fn smile_matches_paper_breakdown() {
        let inst = circle("1 2 3");
        let gamma = gamma_table(&inst).unwrap();
        let (target, b) = smile_structure_constant(&inst, gamma.elem(5), gamma.elem(5));
        assert_eq!(gamma.index_of(&target), Some(4));
        assert_eq!(b.obstruction_coords, vec![0, 1]);
        assert_eq!(b.epsilon.render(&["u".into()]), "2*u^2");
        assert_eq!(b.pushforward_coords, vec![2]);
        assert_eq!(b.pushforward.render(&["u".into()]), "3*u");
        assert_eq!(b.total.render(&["u".into()]), "6*u^3");
    }

    #[test]
    fn res_examples() {
        let inst = circle("1 1 3");
        let gamma = gamma_table(&inst).unwrap();
        let r = res_monomial(&inst, gamma.elem(1));
        assert_eq!(r.render(&["u".into()]), "u^2/3");
        let r2 = res_monomial(&inst, gamma.elem(2));
        assert_eq!(r2.render(&["u".into()]), "u^4/3");
        assert!(res_monomial(&inst, gamma.elem(0)).is_one());
    }

    #[test]
    fn ring_identities_on_examples() {
        for w in ["1 2 3", "1 1 3", "1 2 1", "2 3", "1 4 6"] {
            let inst = circle(w);
            let gamma = gamma_table(&inst).unwrap();
            let m = gamma.len();
            for i in 0..m {
                for j in 0..m {
                    let (gh, c) = star_structure_constant(&inst, gamma.elem(i), gamma.elem(j));
                    // exponents integral in {0,1}
                    for e in star_exponents(gamma.elem(i), gamma.elem(j)) {
                        assert!(e.is_zero() || e.is_one());
                    }
                    // commutativity
                    let (_, c2) = star_structure_constant(&inst, gamma.elem(j), gamma.elem(i));
                    assert_eq!(c, c2);
                    // star = smile
                    let (_, smile) = smile_structure_constant(&inst, gamma.elem(i), gamma.elem(j));
                    assert_eq!(c, smile.total);
                    // res multiplicativity
                    let lhs = res_monomial(&inst, gamma.elem(i))
                        .mul(&res_monomial(&inst, gamma.elem(j)));
                    let rhs = res_monomial(&inst, &gh).mul(&c);
                    assert_eq!(lhs, rhs);
                    // gradedness
                    let eps_sum: Rat = star_exponents(gamma.elem(i), gamma.elem(j))
                        .into_iter()
                        .sum();
                    assert_eq!(
                        gamma.elem(i).age() + gamma.elem(j).age(),
                        gh.age() + eps_sum
                    );
                }
            }
            // associativity over all triples
            let sc = structure_constants(&inst, &gamma);
            for i in 0..m {
                for j in 0..m {
                    for l in 0..m {
                        let (ij, cij) = sc.table[&(i, j)].clone();
                        let (_, c_ij_l) = sc.table[&(ij, l)].clone();
                        let (jl, cjl) = sc.table[&(j, l)].clone();
                        let (_, c_i_jl) = sc.table[&(i, jl)].clone();
                        assert_eq!(cij.mul(&c_ij_l), cjl.mul(&c_i_jl));
                    }
                }
            }
        }
    }

    #[test]
    fn nh_presentation_113_is_u_a_with_a_cubed() {
        let inst = circle("1 1 3");
        let gamma = gamma_table(&inst).unwrap();
        let p = nh_presentation(&inst, &gamma).unwrap();
        // the 2/3 sector survives as y1 = a; the 4/3 sector is a^2
        assert_eq!(p.sector_vars.len(), 1);
        assert_eq!(p.ring.vars[1].degree, rat(4, 3));
        assert_eq!(p.relation_strings(), vec!["u^2-y1^3"]);
    }

    #[test]
    fn nh_presentation_123_keeps_five_generators_and_15_relations() {
        let inst = circle("1 2 3");
        let gamma = gamma_table(&inst).unwrap();
        let p = nh_presentation(&inst, &gamma).unwrap();
        assert_eq!(p.sector_vars.len(), 5);
        assert_eq!(p.relations.len(), 15);
    }

    #[test]
    fn trivial_gamma_gives_polynomial_ring() {
        let inst = circle("1");
        let gamma = gamma_table(&inst).unwrap();
        let p = nh_presentation(&inst, &gamma).unwrap();
        assert_eq!(p.sector_vars.len(), 0);
        assert!(p.relations.is_empty());
        assert_eq!(p.ring_header(), "Z[u]");
    }

    #[test]
    fn expand_coefficient_multi_rank() {
        // character (1,1) squared expands to u1^2 + 2 u1 u2 + u2^2
        let m = WeightMonomial::character_power(&[int(1), int(1)], &rat_int(2));
        let p = expand_monomial(&m, 2, 2);
        assert_eq!(p.terms.len(), 3);
        assert_eq!(p.terms[&vec![1, 1]], int(2));
    }
}
