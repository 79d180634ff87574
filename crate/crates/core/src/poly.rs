//! Sparse multivariate polynomials with exact coefficients.
//!
//! Term lists are kept strictly descending under the canonical storage order
//! (grevlex, the derived `Ord` on `Monomial`), so structural equality is
//! mathematical equality. Engines that work under a different term order
//! re-sort copies internally.

use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Exp, Monomial};
use crate::ring::Ring;
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Scalar,
    pub mon: Monomial,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Polynomial {
        Polynomial { ring: Arc::clone(ring), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Polynomial {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: Arc::clone(ring),
            terms: vec![Term { coeff: c, mon: Monomial::one(ring.nvars()) }],
        }
    }

    /// The variable `x[i,j]` (1-based).
    pub fn var(ring: &Arc<Ring>, i: usize, j: usize) -> Result<Polynomial> {
        let idx = ring.var(i, j)?;
        Ok(Polynomial::var_by_index(ring, idx))
    }

    pub fn var_by_index(ring: &Arc<Ring>, idx: usize) -> Polynomial {
        Polynomial {
            ring: Arc::clone(ring),
            terms: vec![Term {
                coeff: ring.field().one(),
                mon: Monomial::var(ring.nvars(), idx),
            }],
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates,
    /// drops zeros.
    pub fn from_terms(ring: &Arc<Ring>, mut terms: Vec<Term>) -> Polynomial {
        for t in &terms {
            assert_eq!(t.mon.nvars(), ring.nvars(), "term width mismatch");
        }
        terms.sort_by(|a, b| b.mon.cmp(&a.mon));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.mon == t.mon {
                    last.coeff = last.coeff.add(&t.coeff);
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !t.coeff.is_zero() {
                out.push(t);
            }
        }
        Polynomial { ring: Arc::clone(ring), terms: out }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mon.is_one() && self.terms[0].coeff.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|t| t.mon.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term under the canonical storage order.
    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mon.deg()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.mon.deg();
                self.terms.iter().all(|t| t.mon.deg() == d)
            }
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: t.coeff.neg(), mon: t.mon.clone() })
                .collect(),
        }
    }

    fn merge(&self, rhs: &Polynomial, negate_rhs: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let a = &self.terms[i];
            let b = &rhs.terms[j];
            match b.mon.cmp(&a.mon) {
                std::cmp::Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let coeff = if negate_rhs { b.coeff.neg() } else { b.coeff.clone() };
                    out.push(Term { coeff, mon: b.mon.clone() });
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let coeff = if negate_rhs {
                        a.coeff.sub(&b.coeff)
                    } else {
                        a.coeff.add(&b.coeff)
                    };
                    if !coeff.is_zero() {
                        out.push(Term { coeff, mon: a.mon.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for b in &rhs.terms[j..] {
            let coeff = if negate_rhs { b.coeff.neg() } else { b.coeff.clone() };
            out.push(Term { coeff, mon: b.mon.clone() });
        }
        Polynomial { ring: Arc::clone(&self.ring), terms: out }
    }

    pub fn add(&self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        self.merge(rhs, false)
    }

    pub fn sub(&self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        self.merge(rhs, true)
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        // Accumulate into a map keyed by monomial; grevlex Ord keeps the
        // final collect sorted.
        let mut acc: std::collections::BTreeMap<Monomial, Scalar> = std::collections::BTreeMap::new();
        for a in &self.terms {
            for b in &rhs.terms {
                let mon = a.mon.mul(&b.mon);
                let c = a.coeff.mul(&b.coeff);
                match acc.entry(mon) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = e.get().add(&c);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                }
            }
        }
        let terms = acc
            .into_iter()
            .rev()
            .map(|(mon, coeff)| Term { coeff, mon })
            .collect();
        Polynomial { ring: Arc::clone(&self.ring), terms }
    }

    pub fn mul_term(&self, coeff: &Scalar, mon: &Monomial) -> Polynomial {
        if coeff.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: t.coeff.mul(coeff), mon: t.mon.mul(mon) })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: t.coeff.mul(c), mon: t.mon.clone() })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divides every coefficient so the leading coefficient becomes 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some(lt) => {
                if lt.coeff.is_one() {
                    self.clone()
                } else {
                    let inv = lt.coeff.inv();
                    self.scale(&inv)
                }
            }
        }
    }

    /// Over the rationals: clears denominators and divides by the integer
    /// content, normalizing the leading coefficient to be positive. Over a
    /// prime field this is `monic`.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        match self.ring.field() {
            Field::Prime(_) => self.monic(),
            Field::Rational => {
                let mut den_lcm = BigInt::one();
                for t in &self.terms {
                    let (_, d) = t.coeff.as_rational().expect("rational ring");
                    den_lcm = den_lcm.lcm(d);
                }
                let mut content = BigInt::zero();
                let scaled: Vec<BigInt> = self
                    .terms
                    .iter()
                    .map(|t| {
                        let (n, d) = t.coeff.as_rational().unwrap();
                        let v = n * (&den_lcm / d);
                        content = content.gcd(&v);
                        v
                    })
                    .collect();
                if content.is_zero() {
                    content = BigInt::one();
                }
                if scaled[0].is_negative() {
                    content = -content;
                }
                let terms = self
                    .terms
                    .iter()
                    .zip(scaled)
                    .map(|(t, v)| Term {
                        coeff: Scalar::Rat(BigRational::from_integer(v / &content)),
                        mon: t.mon.clone(),
                    })
                    .collect();
                Polynomial { ring: Arc::clone(&self.ring), terms }
            }
        }
    }

    /// Formal partial derivative with respect to variable `idx`.
    pub fn derivative(&self, idx: usize) -> Polynomial {
        let field = self.ring.field();
        let terms = self
            .terms
            .iter()
            .filter(|t| t.mon.exp(idx) > 0)
            .filter_map(|t| {
                let e = t.mon.exp(idx);
                let mut exps: Vec<Exp> = t.mon.exps().to_vec();
                exps[idx] = e - 1;
                let coeff = t.coeff.mul(&field.from_i64(e as i64));
                if coeff.is_zero() {
                    None
                } else {
                    Some(Term { coeff, mon: Monomial::from_exps(&exps) })
                }
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Exact substitution at a full point; every variable occurring in the
    /// polynomial must be assigned.
    pub fn evaluate(&self, point: &[Option<Scalar>]) -> Result<Scalar> {
        assert_eq!(point.len(), self.ring.nvars());
        let field = self.ring.field();
        let mut acc = field.zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for idx in t.mon.support() {
                let x = point[idx]
                    .as_ref()
                    .ok_or_else(|| Error::Unassigned(self.ring.var_name(idx)))?;
                v = v.mul(&x.pow(t.mon.exp(idx) as u32));
            }
            acc = acc.add(&v);
        }
        Ok(acc)
    }

    /// Moves the polynomial into a ring with more auxiliary variables.
    pub fn lift(&self, to: &Arc<Ring>) -> Polynomial {
        assert_eq!(to.n(), self.ring.n());
        assert!(to.aux() >= self.ring.aux());
        assert_eq!(to.field(), self.ring.field());
        let extra = to.nvars() - self.ring.nvars();
        Polynomial {
            ring: Arc::clone(to),
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: t.coeff.clone(), mon: t.mon.lift(extra) })
                .collect(),
        }
    }

    /// Moves the polynomial back to a smaller ring; the dropped auxiliary
    /// variables must not occur.
    pub fn project(&self, to: &Arc<Ring>) -> Polynomial {
        assert_eq!(to.n(), self.ring.n());
        assert!(to.aux() <= self.ring.aux());
        assert_eq!(to.field(), self.ring.field());
        let extra = self.ring.nvars() - to.nvars();
        Polynomial {
            ring: Arc::clone(to),
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: t.coeff.clone(), mon: t.mon.project(extra) })
                .collect(),
        }
    }

    /// True when the auxiliary variables do not occur.
    pub fn aux_free(&self) -> bool {
        let base = self.ring.n() * self.ring.n();
        self.terms
            .iter()
            .all(|t| t.mon.support().all(|idx| idx < base))
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

/// Spec-level arithmetic entry point with ring checking.
pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: PolyOp) -> Result<Polynomial> {
    Ring::same(f.ring(), g.ring())?;
    Ok(match op {
        PolyOp::Add => f.add(g),
        PolyOp::Sub => f.sub(g),
        PolyOp::Mul => f.mul(g),
    })
}

/// Determinant of a square matrix of polynomials, by expansion along rows
/// with memoization over column subsets (fraction-free: no divisions).
pub fn poly_det(m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(Error::Invalid("determinant of a non-square matrix".into()));
        }
    }
    if n == 0 {
        return Err(Error::Invalid("determinant of an empty matrix".into()));
    }
    let ring = m[0][0].ring().clone();
    for row in m {
        for e in row {
            Ring::same(&ring, e.ring())?;
        }
    }
    assert!(n <= 16, "determinant expansion limited to n <= 16");
    // level k holds det of rows 0..k on each k-subset of columns
    let mut level: Vec<Polynomial> = vec![Polynomial::one(&ring)];
    let mut masks: Vec<u32> = vec![0];
    for k in 0..n {
        let mut next_masks: Vec<u32> = Vec::new();
        let mut index: std::collections::HashMap<u32, usize> = std::collections::HashMap::new();
        let mut next: Vec<Polynomial> = Vec::new();
        for (mi, &mask) in masks.iter().enumerate() {
            let sub = &level[mi];
            if sub.is_zero() {
                continue;
            }
            let mut pos = 0; // number of mask bits below column j
            for j in 0..n {
                if mask & (1 << j) != 0 {
                    pos += 1;
                    continue;
                }
                let entry = &m[k][j];
                if entry.is_zero() {
                    continue;
                }
                // Expansion along row k: cofactor sign is (-1)^(k + pos).
                let piece = if (k + pos) % 2 == 0 {
                    sub.mul(entry)
                } else {
                    sub.mul(entry).neg()
                };
                let nm = mask | (1 << j);
                match index.get(&nm) {
                    Some(&slot) => next[slot] = next[slot].add(&piece),
                    None => {
                        index.insert(nm, next.len());
                        next_masks.push(nm);
                        next.push(piece);
                    }
                }
            }
        }
        masks = next_masks;
        level = next;
        if masks.is_empty() {
            return Ok(Polynomial::zero(&ring));
        }
    }
    Ok(level.pop().unwrap())
}

/// The row/column multidegree of a multihomogeneous polynomial: entry `r_i`
/// counts total degree in row-`i` variables, `c_j` in column-`j` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multidegree {
    pub rows: Vec<u32>,
    pub cols: Vec<u32>,
}

impl Multidegree {
    pub fn total(&self) -> u32 {
        self.rows.iter().sum()
    }
}

impl std::fmt::Display for Multidegree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rs: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        let cs: Vec<String> = self.cols.iter().map(|c| c.to_string()).collect();
        write!(f, "({};{})", rs.join(","), cs.join(","))
    }
}

fn term_multidegree(ring: &Ring, mon: &Monomial) -> Option<Multidegree> {
    let n = ring.n();
    let mut rows = vec![0u32; n];
    let mut cols = vec![0u32; n];
    for idx in mon.support() {
        let (i, j) = ring.row_col(idx)?; // auxiliary variable: not graded
        rows[i - 1] += mon.exp(idx) as u32;
        cols[j - 1] += mon.exp(idx) as u32;
    }
    Some(Multidegree { rows, cols })
}

/// Multidegree of `f` when every term agrees; `Ok(None)` when `f` is not
/// multihomogeneous, `Err` on the zero polynomial.
pub fn multidegree(f: &Polynomial) -> Result<Option<Multidegree>> {
    if f.is_zero() {
        return Err(Error::Invalid("multidegree of the zero polynomial".into()));
    }
    let mut it = f.terms().iter();
    let first = match term_multidegree(f.ring(), &it.next().unwrap().mon) {
        Some(d) => d,
        None => return Ok(None),
    };
    for t in it {
        match term_multidegree(f.ring(), &t.mon) {
            Some(d) if d == first => {}
            _ => return Ok(None),
        }
    }
    Ok(Some(first))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn q2() -> Arc<Ring> {
        Ring::matrix(2, Field::Rational)
    }

    fn p(ring: &Arc<Ring>, s: &str) -> Polynomial {
        parse_poly(ring, s).unwrap()
    }

    #[test]
    fn product_of_sum_and_difference() {
        let r = q2();
        // (x+y)(x-y) = x^2 - y^2 with x = x[1,1], y = x[2,2]
        let lhs = p(&r, "(x[1,1]+x[2,2])*(x[1,1]-x[2,2])");
        let rhs = p(&r, "x[1,1]^2 - x[2,2]^2");
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn times_zero() {
        let r = q2();
        let f = p(&r, "x[1,1]^2 - 3*x[1,2]");
        assert!(f.mul(&Polynomial::zero(&r)).is_zero());
    }

    #[test]
    fn frobenius_square_char_two() {
        let r = Ring::matrix(2, Field::Prime(2));
        let f = p(&r, "x[1,1]+x[2,2]");
        let sq = f.mul(&f);
        assert_eq!(sq, p(&r, "x[1,1]^2+x[2,2]^2"));
    }

    #[test]
    fn ring_mismatch_reported() {
        let a = p(&q2(), "x[1,1]");
        let b = p(&Ring::matrix(3, Field::Rational), "x[1,1]");
        assert!(matches!(poly_arith(&a, &b, PolyOp::Add), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn det_2x2_generic() {
        let r = q2();
        let m = vec![
            vec![p(&r, "x[1,1]"), p(&r, "x[1,2]")],
            vec![p(&r, "x[2,1]"), p(&r, "x[2,2]")],
        ];
        assert_eq!(poly_det(&m).unwrap(), p(&r, "x[1,1]*x[2,2]-x[1,2]*x[2,1]"));
    }

    #[test]
    fn det_identity_and_nonsquare() {
        let r = q2();
        let id = vec![
            vec![Polynomial::one(&r), Polynomial::zero(&r)],
            vec![Polynomial::zero(&r), Polynomial::one(&r)],
        ];
        assert!(poly_det(&id).unwrap().is_one());
        let bad = vec![vec![Polynomial::one(&r)], vec![Polynomial::zero(&r)]];
        assert!(poly_det(&bad).is_err());
    }

    /// Independent oracle: determinant by cofactor expansion along the first
    /// row, no memoization.
    fn det_cofactor(m: &[Vec<Polynomial>]) -> Polynomial {
        let n = m.len();
        let ring = m[0][0].ring().clone();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = Polynomial::zero(&ring);
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let sub: Vec<Vec<Polynomial>> = (1..n)
                .map(|r| (0..n).filter(|&c| c != j).map(|c| m[r][c].clone()).collect())
                .collect();
            let cof = m[0][j].mul(&det_cofactor(&sub));
            acc = if j % 2 == 0 { acc.add(&cof) } else { acc.sub(&cof) };
        }
        acc
    }

    #[test]
    fn det_matches_cofactor_oracle_on_generic_3x3() {
        let r = Ring::matrix(3, Field::Rational);
        let m: Vec<Vec<Polynomial>> = (1..=3)
            .map(|i| (1..=3).map(|j| Polynomial::var(&r, i, j).unwrap()).collect())
            .collect();
        assert_eq!(poly_det(&m).unwrap(), det_cofactor(&m));
    }

    #[test]
    fn det_of_rank_witness_matrix() {
        // (0 0 0 1; 1 1 1 0; 0 1 1 0; 0 0 1 0) has determinant -1.
        let r = Ring::matrix(4, Field::Rational);
        let rows = [[0i64, 0, 0, 1], [1, 1, 1, 0], [0, 1, 1, 0], [0, 0, 1, 0]];
        let m: Vec<Vec<Polynomial>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| Polynomial::constant(&r, Field::Rational.from_i64(v)))
                    .collect()
            })
            .collect();
        let d = poly_det(&m).unwrap();
        assert_eq!(d, Polynomial::constant(&r, Field::Rational.from_i64(-1)));
        assert_eq!(det_cofactor(&m), d);
    }

    #[test]
    fn multidegree_of_single_variable() {
        let r = q2();
        let d = multidegree(&p(&r, "x[1,2]")).unwrap().unwrap();
        assert_eq!(d.rows, vec![1, 0]);
        assert_eq!(d.cols, vec![0, 1]);
    }

    #[test]
    fn multidegree_rejects_mixed_columns() {
        let r = q2();
        assert_eq!(multidegree(&p(&r, "x[1,1]+x[1,2]")).unwrap(), None);
        assert!(multidegree(&Polynomial::zero(&r)).is_err());
    }

    #[test]
    fn evaluate_requires_assignment() {
        let r = q2();
        let f = p(&r, "x[1,1]*x[2,2]");
        let mut point = vec![None; 4];
        point[0] = Some(Field::Rational.from_i64(2));
        assert!(f.evaluate(&point).is_err());
        point[3] = Some(Field::Rational.from_i64(5));
        assert_eq!(f.evaluate(&point).unwrap(), Field::Rational.from_i64(10));
    }

    #[test]
    fn derivative_basic() {
        let r = q2();
        let f = p(&r, "x[1,1]^3*x[2,2] + 2*x[1,2]");
        let df = f.derivative(0);
        assert_eq!(df, p(&r, "3*x[1,1]^2*x[2,2]"));
    }

    #[test]
    fn primitive_strips_content_and_sign() {
        let r = q2();
        // -(4x - 6y) has negative leading coefficient; primitive form flips it.
        let f = p(&r, "4*x[1,1] - 6*x[2,2]").neg();
        assert_eq!(f.primitive(), p(&r, "2*x[1,1]-3*x[2,2]"));
        let third = Field::Rational.from_i64(1).div(&Field::Rational.from_i64(3));
        assert_eq!(f.scale(&third).primitive(), p(&r, "2*x[1,1]-3*x[2,2]"));
    }
}
