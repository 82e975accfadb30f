//! Labeled simple rational polytopes given by facet inequalities
//! `<x, y_i> >= eta_i` with a positive integer label on each facet.

use crate::arith::{parse_rat, show_rat, Int, Rat};
use crate::error::{Error, Result};
use crate::matrix::{primitive_part, rank_rat, solve_square};
use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    /// Primitive inward-pointing normal in `Z^d`.
    pub normal: Vec<Int>,
    pub offset: Rat,
    pub label: u64,
}

#[derive(Clone, Debug)]
pub struct Vertex {
    pub point: Vec<Rat>,
    /// Facets active (tight) at this vertex; exactly `d` of them.
    pub active: BTreeSet<usize>,
}

#[derive(Clone, Debug)]
pub struct LabeledPolytope {
    pub dim: usize,
    pub facets: Vec<Facet>,
    pub vertices: Vec<Vertex>,
}

/// A nonempty face, identified by the set of facets containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub active: BTreeSet<usize>,
    pub dim: usize,
    /// Indices into the polytope's vertex list.
    pub vertices: Vec<usize>,
}

impl LabeledPolytope {
    pub fn new(dim: usize, facets: Vec<Facet>) -> Result<Self> {
        for f in &facets {
            if f.normal.len() != dim {
                return Err(Error::Parse(format!(
                    "normal {:?} does not have dimension {dim}",
                    f.normal
                )));
            }
            if f.label == 0 {
                return Err(Error::Parse("label must be a positive integer".into()));
            }
            let (c, _) = primitive_part(&f.normal);
            if f.normal.iter().all(|x| x.is_zero()) || !c.is_one() {
                return Err(Error::NormalNotPrimitive);
            }
        }
        check_bounded(dim, &facets)?;
        let vertices = compute_vertices(dim, &facets)?;
        if vertices.is_empty() {
            return Err(Error::Degenerate);
        }
        // full-dimensionality: affine hull of the vertices must be d-dimensional
        let base = &vertices[0].point;
        let dirs: Vec<Vec<Rat>> = vertices[1..]
            .iter()
            .map(|v| {
                v.point
                    .iter()
                    .zip(base)
                    .map(|(a, b)| a - b)
                    .collect::<Vec<Rat>>()
            })
            .collect();
        if rank_rat(&dirs) != dim {
            return Err(Error::Degenerate);
        }
        for v in &vertices {
            if v.active.len() != dim {
                return Err(Error::NotSimple);
            }
        }
        for i in 0..facets.len() {
            if !vertices.iter().any(|v| v.active.contains(&i)) {
                return Err(Error::RedundantFacet(i));
            }
        }
        Ok(LabeledPolytope {
            dim,
            facets,
            vertices,
        })
    }

    pub fn whole_face(&self) -> Face {
        Face {
            active: BTreeSet::new(),
            dim: self.dim,
            vertices: (0..self.vertices.len()).collect(),
        }
    }

    /// The face on which (at least) the facets in `s` are tight, or `None`
    /// if that intersection is empty.
    pub fn face_from_facets(&self, s: &BTreeSet<usize>) -> Option<Face> {
        let verts: Vec<usize> = (0..self.vertices.len())
            .filter(|&v| s.is_subset(&self.vertices[v].active))
            .collect();
        if verts.is_empty() {
            return None;
        }
        // canonical active set: facets containing every vertex of the face
        let mut active = self.vertices[verts[0]].active.clone();
        for &v in &verts[1..] {
            active = active
                .intersection(&self.vertices[v].active)
                .copied()
                .collect();
        }
        Some(Face {
            dim: self.dim - active.len(),
            active,
            vertices: verts,
        })
    }

    /// All nonempty faces, including the polytope itself and all vertices,
    /// sorted by (dimension, active set).
    pub fn enumerate_faces(&self) -> Vec<Face> {
        let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut out = Vec::new();
        for v in &self.vertices {
            let active: Vec<usize> = v.active.iter().copied().collect();
            for k in 0..=active.len() {
                for subset in active.iter().combinations(k) {
                    let s: BTreeSet<usize> = subset.into_iter().copied().collect();
                    if let Some(face) = self.face_from_facets(&s) {
                        if seen.insert(face.active.clone()) {
                            out.push(face);
                        }
                    }
                }
            }
        }
        out.sort_by(|a, b| (a.dim, &a.active).cmp(&(b.dim, &b.active)));
        out
    }

    /// Neighbors of a vertex inside the face `f` (endpoints of edges of `f`).
    fn neighbors_in_face(&self, f: &Face, v: usize) -> Vec<usize> {
        f.vertices
            .iter()
            .copied()
            .filter(|&u| u != v)
            .filter(|&u| {
                let shared: BTreeSet<usize> = self.vertices[u]
                    .active
                    .intersection(&self.vertices[v].active)
                    .copied()
                    .collect();
                shared.len() == self.dim - 1 && f.active.is_subset(&shared)
            })
            .collect()
    }

    /// h-vector of a face by counting vertex down-degrees under a generic
    /// linear functional (1, M, M^2, ...), retrying with larger M on ties.
    pub fn h_vector(&self, f: &Face) -> Vec<usize> {
        if f.dim == 0 {
            return vec![1];
        }
        let mut m = max_coordinate_magnitude(self, f) * Int::from(2) + Int::from(2);
        loop {
            let values: Vec<Rat> = f
                .vertices
                .iter()
                .map(|&v| {
                    let mut weight = Rat::one();
                    let mut acc = Rat::zero();
                    for x in &self.vertices[v].point {
                        acc += x * &weight;
                        weight *= Rat::from_integer(m.clone());
                    }
                    acc
                })
                .collect();
            let distinct: BTreeSet<&Rat> = values.iter().collect();
            if distinct.len() == values.len() {
                let mut h = vec![0usize; f.dim + 1];
                for (i, &v) in f.vertices.iter().enumerate() {
                    let down = self
                        .neighbors_in_face(f, v)
                        .iter()
                        .filter(|&&u| {
                            let j = f.vertices.iter().position(|&w| w == u).unwrap();
                            values[j] < values[i]
                        })
                        .count();
                    h[down] += 1;
                }
                return h;
            }
            m *= Int::from(2);
        }
    }
}

fn max_coordinate_magnitude(p: &LabeledPolytope, f: &Face) -> Int {
    let mut m = Int::one();
    for &v in &f.vertices {
        for x in &p.vertices[v].point {
            let bound = x.numer().abs() * x.denom().abs();
            if bound > m {
                m = bound;
            }
        }
    }
    m
}

/// Boundedness: the recession cone `{v : <v, y_i> >= 0}` must be `{0}`.
/// A nonzero cone either contains a line (normals do not span) or has an
/// extreme ray cut out by d-1 independent active constraints.
fn check_bounded(dim: usize, facets: &[Facet]) -> Result<()> {
    let normal_rows: Vec<Vec<Rat>> = facets
        .iter()
        .map(|f| f.normal.iter().cloned().map(Rat::from_integer).collect())
        .collect();
    if rank_rat(&normal_rows) < dim {
        return Err(Error::Unbounded);
    }
    if dim == 1 {
        let pos = facets.iter().any(|f| f.normal[0].is_positive());
        let neg = facets.iter().any(|f| f.normal[0].is_negative());
        if !(pos && neg) {
            return Err(Error::Unbounded);
        }
        return Ok(());
    }
    for subset in (0..facets.len()).combinations(dim - 1) {
        let rows: Vec<Vec<Rat>> = subset.iter().map(|&i| normal_rows[i].clone()).collect();
        if rank_rat(&rows) != dim - 1 {
            continue;
        }
        let ray = orthogonal_line(&rows, dim);
        for r in [ray.clone(), ray.iter().map(|x| -x).collect()] {
            let ok = facets.iter().all(|f| {
                let dot: Rat = f
                    .normal
                    .iter()
                    .zip(&r)
                    .map(|(a, b)| Rat::from_integer(a.clone()) * b)
                    .sum();
                !dot.is_negative()
            });
            if ok {
                return Err(Error::Unbounded);
            }
        }
    }
    Ok(())
}

/// A nonzero vector orthogonal to `dim - 1` independent rows.
fn orthogonal_line(rows: &[Vec<Rat>], dim: usize) -> Vec<Rat> {
    // append candidate unit rows until the system is square, then solve
    for extra in 0..dim {
        let mut m = rows.to_vec();
        let mut unit = vec![Rat::zero(); dim];
        unit[extra] = Rat::one();
        m.push(unit);
        if rank_rat(&m) != dim {
            continue;
        }
        let mut rhs = vec![Rat::zero(); dim];
        rhs[dim - 1] = Rat::one();
        if let Some(x) = solve_square(&m, &rhs) {
            return x;
        }
    }
    unreachable!("rows have rank dim - 1");
}

fn compute_vertices(dim: usize, facets: &[Facet]) -> Result<Vec<Vertex>> {
    let mut verts: Vec<Vertex> = Vec::new();
    for subset in (0..facets.len()).combinations(dim) {
        let rows: Vec<Vec<Rat>> = subset
            .iter()
            .map(|&i| {
                facets[i]
                    .normal
                    .iter()
                    .cloned()
                    .map(Rat::from_integer)
                    .collect()
            })
            .collect();
        let rhs: Vec<Rat> = subset.iter().map(|&i| facets[i].offset.clone()).collect();
        if rank_rat(&rows) != dim {
            continue;
        }
        let Some(p) = solve_square(&rows, &rhs) else {
            continue;
        };
        let feasible = facets.iter().all(|f| {
            let dot: Rat = f
                .normal
                .iter()
                .zip(&p)
                .map(|(a, b)| Rat::from_integer(a.clone()) * b)
                .sum();
            dot >= f.offset
        });
        if !feasible {
            continue;
        }
        if verts.iter().any(|v| v.point == p) {
            continue;
        }
        let active: BTreeSet<usize> = facets
            .iter()
            .enumerate()
            .filter(|(_, f)| {
                let dot: Rat = f
                    .normal
                    .iter()
                    .zip(&p)
                    .map(|(a, b)| Rat::from_integer(a.clone()) * b)
                    .sum();
                dot == f.offset
            })
            .map(|(i, _)| i)
            .collect();
        verts.push(Vertex { point: p, active });
    }
    verts.sort_by(|a, b| a.point.cmp(&b.point));
    Ok(verts)
}

/// Parse the line-oriented polytope file format:
///
/// ```text
/// mode polytope
/// dim 2
/// facet  1 0   ; 0   ; 1
/// facet  0 1   ; 0   ; 1
/// facet -1 -1  ; -1  ; 1
/// ```
pub fn parse_polytope(text: &str) -> Result<LabeledPolytope> {
    let mut dim: Option<usize> = None;
    let mut facets = Vec::new();
    let mut saw_mode = false;
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match keyword {
            "mode" => {
                if rest.trim() != "polytope" {
                    return Err(Error::Parse(format!("expected mode polytope, got {rest}")));
                }
                saw_mode = true;
            }
            "dim" => {
                dim = Some(
                    rest.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad dimension {rest}")))?,
                );
            }
            "facet" => {
                let parts: Vec<&str> = rest.split(';').collect();
                if parts.len() != 3 {
                    return Err(Error::Parse(format!(
                        "facet line needs `normal ; offset ; label`: {line}"
                    )));
                }
                let normal: Vec<Int> = parts[0]
                    .split_whitespace()
                    .map(|t| {
                        t.parse()
                            .map_err(|_| Error::Parse(format!("bad normal entry {t}")))
                    })
                    .collect::<Result<_>>()?;
                let offset =
                    parse_rat(parts[1]).ok_or_else(|| Error::Parse(format!("bad offset {}", parts[1])))?;
                let label: u64 = parts[2]
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad label {}", parts[2])))?;
                facets.push(Facet {
                    normal,
                    offset,
                    label,
                });
            }
            other => return Err(Error::Parse(format!("unknown keyword {other}"))),
        }
    }
    if !saw_mode {
        return Err(Error::Parse("missing `mode polytope` line".into()));
    }
    let dim = dim.ok_or_else(|| Error::Parse("missing `dim` line".into()))?;
    LabeledPolytope::new(dim, facets)
}

/// Canonical text form; parsing it back yields an identical polytope.
pub fn render_polytope(p: &LabeledPolytope) -> String {
    let mut s = String::from("mode polytope\n");
    s.push_str(&format!("dim {}\n", p.dim));
    for f in &p.facets {
        let normal = f
            .normal
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        s.push_str(&format!(
            "facet {} ; {} ; {}\n",
            normal,
            show_rat(&f.offset),
            f.label
        ));
    }
    s
}
