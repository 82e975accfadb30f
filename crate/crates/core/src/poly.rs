//! Small multivariate polynomials over Z with rationally graded variables,
//! enough to hold ring presentations and slice them by degree.

use crate::arith::{Int, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarInfo {
    pub name: String,
    pub degree: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    pub vars: Vec<VarInfo>,
}

impl PolyRing {
    pub fn new(vars: Vec<VarInfo>) -> Self {
        assert!(vars.iter().all(|v| v.degree.is_positive()));
        PolyRing { vars }
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn monomial_degree(&self, exps: &[u32]) -> Rat {
        exps.iter()
            .zip(&self.vars)
            .map(|(&e, v)| Rat::from_integer(Int::from(e)) * &v.degree)
            .sum()
    }

    /// All exponent vectors of exact degree `target` (every variable has
    /// positive degree, so this is finite).
    pub fn monomials_of_degree(&self, target: &Rat) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut current = vec![0u32; self.vars.len()];
        self.enumerate(0, target.clone(), &mut current, &mut out);
        out
    }

    fn enumerate(&self, i: usize, remaining: Rat, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining.is_zero() {
            for c in current[i..].iter_mut() {
                *c = 0;
            }
            out.push(current.clone());
            return;
        }
        if remaining.is_negative() || i == self.vars.len() {
            return;
        }
        let deg = &self.vars[i].degree;
        let mut k = 0u32;
        let mut left = remaining.clone();
        loop {
            current[i] = k;
            self.enumerate(i + 1, left.clone(), current, out);
            left -= deg;
            if left.is_negative() {
                break;
            }
            k += 1;
        }
        current[i] = 0;
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    /// exponent vector -> nonzero coefficient
    pub terms: BTreeMap<Vec<u32>, Int>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Poly::constant(Int::one(), 0)
    }

    pub fn constant(c: Int, nvars: usize) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = Poly::zero();
        p.terms.insert(exps, Int::one());
        p
    }

    pub fn monomial(exps: Vec<u32>, coeff: Int) -> Self {
        let mut p = Poly::zero();
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let entry = out.terms.entry(e.clone()).or_insert_with(Int::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(e);
            }
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out: BTreeMap<Vec<u32>, Int> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *out.entry(e).or_insert_with(Int::zero) += c1 * c2;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Poly { terms: out }
    }

    pub fn mul_monomial(&self, exps: &[u32], coeff: &Int) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    (
                        e.iter().zip(exps).map(|(a, b)| a + b).collect(),
                        c * coeff,
                    )
                })
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::constant(Int::one(), self.num_vars_hint());
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    fn num_vars_hint(&self) -> usize {
        self.terms.keys().next().map_or(0, |e| e.len())
    }

    /// The degree if homogeneous, None for 0 or inhomogeneous.
    pub fn homogeneous_degree(&self, ring: &PolyRing) -> Option<Rat> {
        let mut deg: Option<Rat> = None;
        for e in self.terms.keys() {
            let d = ring.monomial_degree(e);
            match &deg {
                None => deg = Some(d),
                Some(existing) if *existing == d => {}
                Some(_) => return None,
            }
        }
        deg
    }

    /// Leading term under the lexicographic exponent order.
    pub fn leading(&self) -> Option<(&Vec<u32>, &Int)> {
        self.terms.iter().next_back()
    }

    /// Canonical sign: leading coefficient positive.
    pub fn normalize_sign(&self) -> Poly {
        match self.leading() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// If `self == m * other` for a coefficient-1 monomial `m`, return it.
    pub fn monomial_quotient_by(&self, other: &Poly) -> Option<Vec<u32>> {
        let (le_s, lc_s) = self.leading()?;
        let (le_o, lc_o) = other.leading()?;
        if lc_s != lc_o {
            return None;
        }
        if le_s.len() != le_o.len() || le_s.iter().zip(le_o).any(|(a, b)| a < b) {
            return None;
        }
        let m: Vec<u32> = le_s.iter().zip(le_o).map(|(a, b)| a - b).collect();
        if self.sub(&other.mul_monomial(&m, &Int::one())).is_zero() {
            Some(m)
        } else {
            None
        }
    }

    pub fn render(&self, ring: &PolyRing) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        // highest term first reads like the worked presentations
        let mut s = String::new();
        for (e, c) in self.terms.iter().rev() {
            let mono = render_monomial(e, ring);
            let piece = match (mono.as_str(), c) {
                ("1", c) => c.to_string(),
                (m, c) if c.is_one() => m.to_string(),
                (m, c) if *c == -Int::one() => format!("-{m}"),
                (m, c) => format!("{c}*{m}"),
            };
            if s.is_empty() {
                s.push_str(&piece);
            } else if piece.starts_with('-') {
                s.push_str(&piece);
            } else {
                s.push('+');
                s.push_str(&piece);
            }
        }
        s
    }
}

pub fn render_monomial(exps: &[u32], ring: &PolyRing) -> String {
    let mut parts = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if e == 1 {
            parts.push(ring.vars[i].name.clone());
        } else {
            parts.push(format!("{}^{}", ring.vars[i].name, e));
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({:?})", self.terms)
    }
}
