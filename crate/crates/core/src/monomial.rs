//! Monomials in the real-exponent equivariant base ring: an integer scalar
//! times a product of characters raised to nonnegative rational powers.
//!
//! Only the monomial fragment is needed: restrictions of rank-1 sector
//! generators are single monomials. Canonical form factors the content of a
//! character out of integer powers (`(2u)^3 = 8 u^3`) but never out of
//! fractional ones, so structural equality is sound for the fixed weight
//! list of one instance.

use crate::arith::{Int, Rat};
use crate::matrix::primitive_part;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct WeightMonomial {
    pub scalar: Int,
    /// character -> positive rational exponent
    pub terms: BTreeMap<Vec<Int>, Rat>,
}

impl WeightMonomial {
    pub fn one() -> Self {
        WeightMonomial {
            scalar: Int::one(),
            terms: BTreeMap::new(),
        }
    }

    pub fn zero() -> Self {
        WeightMonomial {
            scalar: Int::zero(),
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.scalar.is_one() && self.terms.is_empty()
    }

    pub fn scalar(c: Int) -> Self {
        let mut m = WeightMonomial::one();
        m.scalar = c;
        m.normalize();
        m
    }

    pub fn character_power(character: &[Int], exponent: &Rat) -> Self {
        let mut m = WeightMonomial::one();
        m.push(character, exponent);
        m.normalize();
        m
    }

    fn push(&mut self, character: &[Int], exponent: &Rat) {
        if exponent.is_zero() {
            return;
        }
        assert!(exponent.is_positive(), "negative exponent");
        if character.iter().all(|x| x.is_zero()) {
            // Euler class of a trivially-weighted line
            self.scalar = Int::zero();
            return;
        }
        let e = self.terms.entry(character.to_vec()).or_insert_with(Rat::zero);
        *e += exponent;
    }

    pub fn mul(&self, other: &WeightMonomial) -> WeightMonomial {
        let mut out = self.clone();
        out.scalar = &out.scalar * &other.scalar;
        for (c, e) in &other.terms {
            out.push(c, e);
        }
        out.normalize();
        out
    }

    /// Split integer powers of non-primitive characters off as scalars:
    /// `(c mu)^(n+f) = c^n mu^n (c mu)^f`.
    fn normalize(&mut self) {
        if self.scalar.is_zero() {
            self.terms.clear();
            return;
        }
        loop {
            let mut next: BTreeMap<Vec<Int>, Rat> = BTreeMap::new();
            let mut changed = false;
            for (chara, exp) in std::mem::take(&mut self.terms) {
                if exp.is_zero() {
                    changed = true;
                    continue;
                }
                let n = exp.floor();
                let f = &exp - &n;
                let (c, prim) = primitive_part(&chara);
                if n.is_zero() || c.is_one() {
                    merge(&mut next, chara, exp);
                    continue;
                }
                changed = true;
                let n_int = n.to_integer();
                self.scalar *= pow_int(&c, &n_int);
                merge(&mut next, prim, Rat::from_integer(n_int));
                if !f.is_zero() {
                    merge(&mut next, chara, f);
                }
            }
            self.terms = next;
            if !changed {
                break;
            }
        }
    }

    /// Total degree in the cohomological (doubled) convention.
    pub fn degree(&self) -> Rat {
        let two = Rat::from_integer(Int::from(2));
        self.terms.values().map(|e| e * &two).sum()
    }

    /// Render with the given names for the character-lattice basis, e.g.
    /// `6*u^3` or `(u1+2*u2)^1/2`.
    pub fn render(&self, basis_names: &[String]) -> String {
        if self.scalar.is_zero() {
            return "0".to_string();
        }
        let mut factors: Vec<String> = Vec::new();
        for (chara, exp) in &self.terms {
            let base = render_character(chara, basis_names);
            let composite = base.contains('+') || base.contains('*') || base.contains('-');
            let shown = if composite {
                format!("({base})")
            } else {
                base
            };
            if exp.is_one() {
                factors.push(shown);
            } else {
                factors.push(format!("{}^{}", shown, crate::arith::show_rat(exp)));
            }
        }
        let body = factors.join("*");
        if body.is_empty() {
            self.scalar.to_string()
        } else if self.scalar.is_one() {
            body
        } else if self.scalar == -Int::one() {
            format!("-{body}")
        } else {
            format!("{}*{}", self.scalar, body)
        }
    }
}

fn merge(map: &mut BTreeMap<Vec<Int>, Rat>, key: Vec<Int>, exp: Rat) {
    if exp.is_zero() {
        return;
    }
    let e = map.entry(key).or_insert_with(Rat::zero);
    *e += exp;
}

fn pow_int(base: &Int, exp: &Int) -> Int {
    let mut out = Int::one();
    let mut k = Int::zero();
    while &k < exp {
        out *= base;
        k += 1;
    }
    out
}

pub fn render_character(chara: &[Int], basis_names: &[String]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, c) in chara.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let name = &basis_names[i];
        let term = if c.is_one() {
            name.clone()
        } else if *c == -Int::one() {
            format!("-{name}")
        } else {
            format!("{c}*{name}")
        };
        if parts.is_empty() || term.starts_with('-') {
            parts.push(term);
        } else {
            parts.push(format!("+{term}"));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.concat()
    }
}

impl fmt::Debug for WeightMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..8).map(|i| format!("u{i}")).collect();
        write!(f, "{}", self.render(&names))
    }
}
