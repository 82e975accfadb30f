//! Root systems, affine Dynkin marks, special conjugacy classes, and the
//! finite stabilizers of the maximal torus acting on K/T.
//!
//! Roots live in root-lattice coordinates (simple roots are the standard
//! basis); torus elements live in fundamental-coweight coordinates, where
//! pairing a root against a point is a dot product and the i-th coroot is
//! the i-th row of the Cartan matrix.

use crate::arith::{lcm, Int, Rat};
use crate::error::{Error, Result};
use crate::matrix::{invert_rat, rank_rat, row_lattice_basis, smith_normal_form, IntMat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            RootType::A => 'A',
            RootType::B => 'B',
            RootType::C => 'C',
            RootType::D => 'D',
            RootType::E => 'E',
            RootType::F => 'F',
            RootType::G => 'G',
        };
        write!(f, "{c}")
    }
}

#[derive(Clone, Debug)]
pub struct RootSystemData {
    pub rtype: RootType,
    pub rank: usize,
    /// cartan[i][j] = <alpha_j, alpha_i-coroot>
    pub cartan: Vec<Vec<i64>>,
    /// Symmetrizers: (alpha_i, alpha_i) = 2 d_i.
    pub symmetrizer: Vec<i64>,
    /// Simple roots in root-lattice coordinates (the standard basis).
    pub simple_roots: Vec<Vec<Int>>,
    pub all_roots: Vec<Vec<Int>>,
    pub lowest_root: Vec<Int>,
    /// Coefficients c_alpha in `lowest + sum c_alpha alpha = 0`.
    pub marks: Vec<Int>,
    pub weyl_order: Int,
}

pub fn parse_type(s: &str) -> Result<(RootType, usize)> {
    let s = s.trim();
    let err = || Error::UnsupportedRootSystem(s.to_string());
    let mut chars = s.chars();
    let letter = chars.next().ok_or_else(err)?;
    let rank: usize = chars.as_str().parse().map_err(|_| err())?;
    let rtype = match letter.to_ascii_uppercase() {
        'A' => RootType::A,
        'B' => RootType::B,
        'C' => RootType::C,
        'D' => RootType::D,
        'E' => RootType::E,
        'F' => RootType::F,
        'G' => RootType::G,
        _ => return Err(err()),
    };
    Ok((rtype, rank))
}

fn cartan_matrix(rtype: RootType, rank: usize) -> Result<(Vec<Vec<i64>>, Vec<i64>)> {
    let err = || Error::UnsupportedRootSystem(format!("{rtype}{rank}"));
    let path = |n: usize| -> Vec<Vec<i64>> {
        let mut c = vec![vec![0i64; n]; n];
        for i in 0..n {
            c[i][i] = 2;
            if i + 1 < n {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
        }
        c
    };
    match rtype {
        RootType::A => {
            if rank < 1 || rank > 8 {
                return Err(err());
            }
            Ok((path(rank), vec![1; rank]))
        }
        RootType::B => {
            if rank < 2 || rank > 8 {
                return Err(err());
            }
            let mut c = path(rank);
            c[rank - 1][rank - 2] = -2;
            let mut d = vec![2; rank];
            d[rank - 1] = 1;
            Ok((c, d))
        }
        RootType::C => {
            if rank < 2 || rank > 8 {
                return Err(err());
            }
            let mut c = path(rank);
            c[rank - 2][rank - 1] = -2;
            let mut d = vec![1; rank];
            d[rank - 1] = 2;
            Ok((c, d))
        }
        RootType::D => {
            if rank < 3 || rank > 8 {
                return Err(err());
            }
            let mut c = path(rank - 1);
            for row in c.iter_mut() {
                row.push(0);
            }
            c.push(vec![0; rank]);
            c[rank - 1][rank - 1] = 2;
            // the fork node attaches to alpha_{rank-2}
            c[rank - 1][rank - 3] = -1;
            c[rank - 3][rank - 1] = -1;
            Ok((c, vec![1; rank]))
        }
        RootType::E => {
            if !(6..=8).contains(&rank) {
                return Err(err());
            }
            let mut c = vec![vec![0i64; rank]; rank];
            for (i, row) in c.iter_mut().enumerate() {
                row[i] = 2;
            }
            let mut edges = vec![(0usize, 2usize), (1, 3), (2, 3), (3, 4), (4, 5)];
            if rank >= 7 {
                edges.push((5, 6));
            }
            if rank == 8 {
                edges.push((6, 7));
            }
            for (a, b) in edges {
                c[a][b] = -1;
                c[b][a] = -1;
            }
            Ok((c, vec![1; rank]))
        }
        RootType::F => {
            if rank != 4 {
                return Err(err());
            }
            let mut c = path(4);
            c[1][2] = -1;
            c[2][1] = -2;
            Ok((c, vec![2, 2, 1, 1]))
        }
        RootType::G => {
            if rank != 2 {
                return Err(err());
            }
            Ok((vec![vec![2, -3], vec![-1, 2]], vec![1, 3]))
        }
    }
}

fn weyl_order_formula(rtype: RootType, rank: usize) -> Int {
    let fact = |n: usize| -> Int {
        let mut f = Int::one();
        for k in 2..=n {
            f *= Int::from(k as u64);
        }
        f
    };
    let pow2 = |n: usize| -> Int {
        let mut p = Int::one();
        for _ in 0..n {
            p *= Int::from(2);
        }
        p
    };
    match rtype {
        RootType::A => fact(rank + 1),
        RootType::B | RootType::C => pow2(rank) * fact(rank),
        RootType::D => pow2(rank - 1) * fact(rank),
        RootType::E => match rank {
            6 => Int::from(51840u64),
            7 => Int::from(2903040u64),
            _ => Int::from(696729600u64),
        },
        RootType::F => Int::from(1152u64),
        RootType::G => Int::from(12u64),
    }
}

fn root_count_formula(rtype: RootType, rank: usize) -> usize {
    match rtype {
        RootType::A => rank * (rank + 1),
        RootType::B | RootType::C => 2 * rank * rank,
        RootType::D => 2 * rank * (rank - 1),
        RootType::E => match rank {
            6 => 72,
            7 => 126,
            _ => 240,
        },
        RootType::F => 48,
        RootType::G => 12,
    }
}

pub fn root_system_data(rtype: RootType, rank: usize) -> Result<RootSystemData> {
    let (cartan, symmetrizer) = cartan_matrix(rtype, rank)?;
    let simple_roots: Vec<Vec<Int>> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| if i == j { Int::one() } else { Int::zero() })
                .collect()
        })
        .collect();
    // close the simple roots under the simple reflections
    let mut roots: BTreeSet<Vec<Int>> = simple_roots.iter().cloned().collect();
    let mut frontier: Vec<Vec<Int>> = simple_roots.clone();
    while let Some(beta) = frontier.pop() {
        for i in 0..rank {
            let pairing: Int = (0..rank)
                .map(|j| &beta[j] * Int::from(cartan[i][j]))
                .sum();
            let mut refl = beta.clone();
            refl[i] = &refl[i] - pairing;
            if roots.insert(refl.clone()) {
                frontier.push(refl);
            }
        }
    }
    // reflections of roots stay roots; negatives appear automatically
    let all_roots: Vec<Vec<Int>> = roots.into_iter().collect();
    assert_eq!(
        all_roots.len(),
        root_count_formula(rtype, rank),
        "root count disagrees with the classification"
    );
    let highest = all_roots
        .iter()
        .max_by_key(|r| (r.iter().sum::<Int>(), (*r).clone()))
        .unwrap()
        .clone();
    let lowest_root: Vec<Int> = highest.iter().map(|x| -x.clone()).collect();
    let marks = highest;
    Ok(RootSystemData {
        rtype,
        rank,
        cartan,
        symmetrizer,
        simple_roots,
        all_roots,
        lowest_root,
        marks,
        weyl_order: weyl_order_formula(rtype, rank),
    })
}

impl RootSystemData {
    /// W-invariant form: `(beta, gamma) = sum_i sum_j b_i g_j d_i C[i][j]`.
    pub fn form(&self, beta: &[Int], gamma: &[Int]) -> Int {
        let mut acc = Int::zero();
        for i in 0..self.rank {
            if beta[i].is_zero() {
                continue;
            }
            for j in 0..self.rank {
                if gamma[j].is_zero() || self.cartan[i][j] == 0 {
                    continue;
                }
                acc += &beta[i]
                    * &gamma[j]
                    * Int::from(self.symmetrizer[i])
                    * Int::from(self.cartan[i][j]);
            }
        }
        acc
    }

    /// Pairing of a root against a torus point in fundamental-coweight
    /// coordinates.
    pub fn pair(&self, root: &[Int], t: &[Rat]) -> Rat {
        root.iter()
            .zip(t)
            .map(|(r, x)| Rat::from_integer(r.clone()) * x)
            .sum()
    }

    fn reflect(&self, i: usize, t: &[Rat]) -> Vec<Rat> {
        // s_i(t) = t - t_i * (row i of the Cartan matrix)
        let ti = t[i].clone();
        t.iter()
            .enumerate()
            .map(|(j, x)| x - &ti * Rat::from_integer(Int::from(self.cartan[i][j])))
            .collect()
    }

    /// Canonical representative modulo the coroot lattice.
    fn reduce_mod_coroots(&self, t: &[Rat]) -> Vec<Rat> {
        let n = self.rank;
        let ct: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Rat::from_integer(Int::from(self.cartan[j][i])))
                    .collect()
            })
            .collect();
        let inv = invert_rat(&ct).expect("Cartan matrix is nonsingular");
        let coords: Vec<Rat> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| &inv[i][j] * &t[j])
                    .sum::<Rat>()
            })
            .collect();
        let fracs: Vec<Rat> = coords.iter().map(crate::arith::frac).collect();
        (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| &fracs[i] * Rat::from_integer(Int::from(self.cartan[i][j])))
                    .sum::<Rat>()
            })
            .collect()
    }

    /// Order of `exp(t)` in the adjoint torus: denominators in the
    /// fundamental-coweight coordinates.
    pub fn adjoint_order(&self, t: &[Rat]) -> Int {
        let mut l = Int::one();
        for x in t {
            l = lcm(&l, x.denom());
        }
        l
    }

    /// Order of `exp(t)` in the simply connected group: denominators of the
    /// coroot coordinates.
    pub fn group_order_of(&self, t: &[Rat]) -> Int {
        let n = self.rank;
        let ct: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Rat::from_integer(Int::from(self.cartan[j][i])))
                    .collect()
            })
            .collect();
        let inv = invert_rat(&ct).expect("nonsingular");
        let mut l = Int::one();
        for row in &inv {
            let coord: Rat = row.iter().zip(t).map(|(a, b)| a * b).sum();
            l = lcm(&l, coord.denom());
        }
        l
    }
}

/// One special conjugacy class: an alcove vertex with its centralizer data.
#[derive(Clone, Debug)]
pub struct SpecialClass {
    /// Alcove vertex in fundamental-coweight coordinates.
    pub vertex: Vec<Rat>,
    pub adjoint_order: Int,
    /// Simple roots of the centralizer subsystem.
    pub subsystem_simple: Vec<Vec<Int>>,
    /// Recognized type, e.g. "A2" or "A1xA1".
    pub type_string: String,
    /// Conventional group name, e.g. "SU(3)" or "SO(4)".
    pub name: String,
    pub w_t_order: Int,
    pub component_count: Int,
    pub centralizer_semisimple: bool,
}

#[derive(Clone, Debug)]
pub struct SpecialClassTable {
    pub entries: Vec<SpecialClass>,
}

/// Borel-de Siebenthal: one special class per affine Dynkin vertex. The
/// affine node gives the identity; node j gives `varpi_j-coweight / c_j`.
pub fn special_classes(data: &RootSystemData) -> SpecialClassTable {
    let n = data.rank;
    let mut entries = Vec::new();
    let mut vertices: Vec<(Vec<Rat>, Int)> = Vec::new();
    vertices.push((vec![Rat::zero(); n], Int::one()));
    for j in 0..n {
        let mut v = vec![Rat::zero(); n];
        v[j] = Rat::new(Int::one(), data.marks[j].clone());
        vertices.push((v, data.marks[j].clone()));
    }
    for (vertex, order) in vertices {
        let integral: Vec<Vec<Int>> = data
            .all_roots
            .iter()
            .filter(|r| data.pair(r, &vertex).denom().is_one())
            .cloned()
            .collect();
        let simple = simple_system(&integral);
        let (type_string, name, w_t_order) = recognize_subsystem(data, &simple);
        let semisimple = {
            let rows: Vec<Vec<Rat>> = simple
                .iter()
                .map(|r| r.iter().cloned().map(Rat::from_integer).collect())
                .collect();
            rank_rat(&rows) == n
        };
        let component_count = &data.weyl_order / &w_t_order;
        assert_eq!(
            &component_count * &w_t_order,
            data.weyl_order,
            "|W_t| must divide |W|"
        );
        assert_eq!(data.adjoint_order(&vertex), order);
        entries.push(SpecialClass {
            vertex,
            adjoint_order: order,
            subsystem_simple: simple,
            type_string,
            name,
            w_t_order,
            component_count,
            centralizer_semisimple: semisimple,
        });
    }
    SpecialClassTable { entries }
}

/// Positive elements not expressible as a sum of two positive elements.
fn simple_system(roots: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let positive: Vec<&Vec<Int>> = roots
        .iter()
        .filter(|r| r.iter().sum::<Int>().is_positive())
        .collect();
    let set: BTreeSet<&Vec<Int>> = positive.iter().copied().collect();
    positive
        .iter()
        .filter(|&&candidate| {
            !positive.iter().any(|&a| {
                let diff: Vec<Int> = candidate.iter().zip(a).map(|(c, x)| c - x).collect();
                !diff.iter().all(|x| x.is_zero()) && set.contains(&diff)
            })
        })
        .map(|&r| r.clone())
        .collect()
}

/// Identify the isomorphism type of a subsystem from its simple roots, and
/// return (type string, conventional name, Weyl group order).
fn recognize_subsystem(data: &RootSystemData, simple: &[Vec<Int>]) -> (String, String, Int) {
    if simple.is_empty() {
        return ("1".to_string(), "T".to_string(), Int::one());
    }
    // split into connected components of the Dynkin graph
    let n = simple.len();
    let mut bonds = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let num = Int::from(2) * data.form(&simple[i], &simple[j]);
            let den_i = data.form(&simple[i], &simple[i]);
            let den_j = data.form(&simple[j], &simple[j]);
            let nij = &num / &den_i;
            let nji = &num / &den_j;
            bonds[i][j] = i64::try_from(&(nij * nji)).unwrap();
        }
    }
    let mut seen = vec![false; n];
    let mut parts: Vec<(String, String, Int)> = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for u in 0..n {
                if !seen[u] && bonds[v][u] != 0 {
                    seen[u] = true;
                    comp.push(u);
                    stack.push(u);
                }
            }
        }
        comp.sort();
        parts.push(recognize_component(data, simple, &bonds, &comp));
    }
    parts.sort();
    let type_string = parts
        .iter()
        .map(|(t, _, _)| t.clone())
        .collect::<Vec<_>>()
        .join("x");
    let name = if type_string == "A1xA1" {
        "SO(4)".to_string()
    } else {
        parts
            .iter()
            .map(|(_, n, _)| n.clone())
            .collect::<Vec<_>>()
            .join(" x ")
    };
    let mut order = Int::one();
    for (_, _, o) in &parts {
        order *= o;
    }
    (type_string, name, order)
}

fn recognize_component(
    data: &RootSystemData,
    simple: &[Vec<Int>],
    bonds: &[Vec<i64>],
    comp: &[usize],
) -> (String, String, Int) {
    let r = comp.len();
    let named = |t: RootType, r: usize| -> (String, String, Int) {
        let name = match (t, r) {
            (RootType::A, n) => format!("SU({})", n + 1),
            (RootType::B, n) => format!("SO({})", 2 * n + 1),
            (RootType::C, n) => format!("Sp({n})"),
            (RootType::D, n) => format!("SO({})", 2 * n),
            (RootType::E, n) => format!("E{n}"),
            (RootType::F, _) => "F4".to_string(),
            (RootType::G, _) => "G2".to_string(),
        };
        (format!("{t}{r}"), name, weyl_order_formula(t, r))
    };
    if r == 1 {
        return named(RootType::A, 1);
    }
    let mut max_bond = 0;
    for &i in comp {
        for &j in comp {
            max_bond = max_bond.max(bonds[i][j]);
        }
    }
    if max_bond == 3 {
        return named(RootType::G, 2);
    }
    if max_bond == 2 {
        if r == 2 {
            return named(RootType::B, 2);
        }
        // count short simple roots via the ambient form
        let norms: Vec<Int> = comp
            .iter()
            .map(|&i| data.form(&simple[i], &simple[i]))
            .collect();
        let min_norm = norms.iter().min().unwrap().clone();
        let short = norms.iter().filter(|&x| *x == min_norm).count();
        if r == 4 && short == 2 && is_f4_shape(bonds, comp) {
            return named(RootType::F, 4);
        }
        if short == 1 {
            return named(RootType::B, r);
        }
        return named(RootType::C, r);
    }
    // simply laced: path is A, fork is D or E
    let degree = |i: usize| -> usize { comp.iter().filter(|&&j| bonds[i][j] != 0).count() };
    let forks: Vec<usize> = comp.iter().copied().filter(|&i| degree(i) == 3).collect();
    if forks.is_empty() {
        return named(RootType::A, r);
    }
    let fork = forks[0];
    let mut lengths: Vec<usize> = Vec::new();
    for &nb in comp.iter().filter(|&&j| bonds[fork][j] != 0) {
        let mut len = 1;
        let mut prev = fork;
        let mut cur = nb;
        loop {
            let next: Vec<usize> = comp
                .iter()
                .copied()
                .filter(|&j| j != prev && bonds[cur][j] != 0)
                .collect();
            if next.is_empty() {
                break;
            }
            prev = cur;
            cur = next[0];
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort();
    match lengths.as_slice() {
        [1, 1, _] => named(RootType::D, r),
        [1, 2, 2] => named(RootType::E, 6),
        [1, 2, 3] => named(RootType::E, 7),
        [1, 2, 4] => named(RootType::E, 8),
        other => panic!("unrecognized simply laced diagram with branches {other:?}"),
    }
}

fn is_f4_shape(bonds: &[Vec<i64>], comp: &[usize]) -> bool {
    // F4: a path whose double bond joins the two interior nodes
    let degree = |i: usize| -> usize { comp.iter().filter(|&&j| bonds[i][j] != 0).count() };
    if comp.iter().any(|&i| degree(i) > 2) {
        return false;
    }
    for &i in comp {
        for &j in comp {
            if i < j && bonds[i][j] == 2 && degree(i) == 2 && degree(j) == 2 {
                return true;
            }
        }
    }
    false
}

/// The finite stabilizers of T on K/T for simply connected K: the Weyl
/// orbit of the alcove vertices modulo the coroot lattice, plus the group
/// they generate inside T.
#[derive(Clone, Debug)]
pub struct FlagGamma {
    /// Orbit points in fundamental-coweight coordinates, lex sorted.
    pub stabilizers: Vec<Vec<Rat>>,
    pub group_order: Int,
    /// Invariant factors > 1 of the generated group, in divisibility order.
    pub invariant_factors: Vec<Int>,
}

pub fn gamma_flag(data: &RootSystemData) -> FlagGamma {
    let n = data.rank;
    let mut vertices: Vec<Vec<Rat>> = vec![vec![Rat::zero(); n]];
    for j in 0..n {
        let mut v = vec![Rat::zero(); n];
        v[j] = Rat::new(Int::one(), data.marks[j].clone());
        vertices.push(v);
    }
    let mut orbit: BTreeSet<Vec<Rat>> = BTreeSet::new();
    for v in &vertices {
        let start = data.reduce_mod_coroots(v);
        let mut frontier = vec![start.clone()];
        orbit.insert(start);
        while let Some(t) = frontier.pop() {
            for i in 0..n {
                let r = data.reduce_mod_coroots(&data.reflect(i, &t));
                if orbit.insert(r.clone()) {
                    frontier.push(r);
                }
            }
        }
    }
    let stabilizers: Vec<Vec<Rat>> = orbit.into_iter().collect();

    // generated subgroup of t / coroot-lattice, via the lattice it spans
    let mut q = Int::one();
    for v in &stabilizers {
        for x in v {
            q = lcm(&q, x.denom());
        }
    }
    let coroot_rows: Vec<Vec<Int>> = (0..n)
        .map(|i| (0..n).map(|j| Int::from(data.cartan[i][j]) * &q).collect())
        .collect();
    let mut stacked = coroot_rows.clone();
    for v in &stabilizers {
        stacked.push(
            v.iter()
                .map(|x| {
                    let y = x * Rat::from_integer(q.clone());
                    debug_assert!(y.denom().is_one());
                    y.to_integer()
                })
                .collect(),
        );
    }
    let basis = row_lattice_basis(&IntMat::from_rows(stacked));
    // express the scaled coroot lattice in the basis of the full lattice
    let basis_rat: Vec<Vec<Rat>> = (0..basis.rows())
        .map(|i| basis.row(i).into_iter().map(Rat::from_integer).collect())
        .collect();
    let binv = invert_rat(&basis_rat).expect("full-rank lattice");
    let mut x = IntMat::zeros(n, n);
    for (i, row) in coroot_rows.iter().enumerate() {
        for j in 0..n {
            let v: Rat = (0..n)
                .map(|k| Rat::from_integer(row[k].clone()) * &binv[k][j])
                .sum();
            debug_assert!(v.denom().is_one(), "coroot lattice not contained");
            x[(i, j)] = v.to_integer();
        }
    }
    let snf = smith_normal_form(&x);
    let mut group_order = Int::one();
    let mut invariant_factors = Vec::new();
    for dq in snf.diagonal() {
        group_order *= &dq;
        if !dq.is_one() {
            invariant_factors.push(dq);
        }
    }
    FlagGamma {
        stabilizers,
        group_order,
        invariant_factors,
    }
}
