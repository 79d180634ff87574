//! Monomials as exponent vectors and the term orders on them.

use std::cmp::Ordering;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exp = u16;

// Inline capacity covers 4x4 rings plus one elimination variable.
const INLINE: usize = 18;

/// A monomial in a fixed ring: an exponent vector with cached total degree.
///
/// The derived `Ord` below is graded reverse lexicographic; it is the
/// canonical storage order for polynomial term lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[Exp; INLINE]>,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial { exps: SmallVec::from_elem(0, nvars), deg: 0 }
    }

    pub fn var(nvars: usize, idx: usize) -> Monomial {
        assert!(idx < nvars);
        let mut m = Monomial::one(nvars);
        m.exps[idx] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exps(exps: &[Exp]) -> Monomial {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps: SmallVec::from_slice(exps), deg }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn deg(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exp(&self, idx: usize) -> Exp {
        self.exps[idx]
    }

    pub fn exps(&self) -> &[Exp] {
        &self.exps
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), rhs.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&rhs.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial { exps, deg: self.deg + rhs.deg }
    }

    /// `self / rhs` when `rhs` divides `self`.
    pub fn try_div(&self, rhs: &Monomial) -> Option<Monomial> {
        assert_eq!(self.exps.len(), rhs.exps.len());
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&rhs.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps, deg: self.deg - rhs.deg })
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    pub fn lcm(&self, rhs: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), rhs.exps.len());
        let exps: SmallVec<[Exp; INLINE]> =
            self.exps.iter().zip(&rhs.exps).map(|(&a, &b)| a.max(b)).collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    /// True when the supports are disjoint, i.e. lcm = product.
    pub fn coprime(&self, rhs: &Monomial) -> bool {
        self.exps.iter().zip(&rhs.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Extends the vector with `extra` zero exponents (ring extension).
    pub fn lift(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat(0).take(extra));
        Monomial { exps, deg: self.deg }
    }

    /// Drops the last `extra` exponents, which must all be zero.
    pub fn project(&self, extra: usize) -> Monomial {
        let keep = self.exps.len() - extra;
        assert!(self.exps[keep..].iter().all(|&e| e == 0), "projecting nonzero exponent");
        Monomial { exps: SmallVec::from_slice(&self.exps[..keep]), deg: self.deg }
    }

    fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for k in (0..self.exps.len()).rev() {
            match self.exps[k].cmp(&other.exps[k]) {
                Ordering::Equal => {}
                // Smaller exponent in the last differing position wins.
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    fn cmp_lex(&self, other: &Monomial) -> Ordering {
        for k in 0..self.exps.len() {
            match self.exps[k].cmp(&other.exps[k]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    fn cmp_masked_grevlex(&self, other: &Monomial, mask: &[bool], want: bool) -> Ordering {
        let da: u32 = self
            .exps
            .iter()
            .zip(mask)
            .filter(|(_, &m)| m == want)
            .map(|(&e, _)| e as u32)
            .sum();
        let db: u32 = other
            .exps
            .iter()
            .zip(mask)
            .filter(|(_, &m)| m == want)
            .map(|(&e, _)| e as u32)
            .sum();
        match da.cmp(&db) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for k in (0..self.exps.len()).rev() {
            if mask[k] != want {
                continue;
            }
            match self.exps[k].cmp(&other.exps[k]) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    fn cmp_masked_lex(&self, other: &Monomial, mask: &[bool], want: bool) -> Ordering {
        for k in 0..self.exps.len() {
            if mask[k] != want {
                continue;
            }
            match self.exps[k].cmp(&other.exps[k]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.cmp_grevlex(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "m{:?}", self.exps.as_slice())
    }
}

/// A total multiplicative well-order on monomials.
///
/// `Block` ranks any monomial containing an eliminated variable above every
/// monomial free of them, which is the defining property of an elimination
/// order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TermOrder {
    Grevlex,
    Lex,
    Block { elim: Vec<usize>, inner: Box<TermOrder> },
}

impl TermOrder {
    /// Standard elimination order: grevlex on the eliminated block, grevlex
    /// on the rest.
    pub fn elimination(mut elim: Vec<usize>) -> TermOrder {
        elim.sort_unstable();
        elim.dedup();
        TermOrder::Block { elim, inner: Box::new(TermOrder::Grevlex) }
    }

    pub fn parse(s: &str) -> Result<TermOrder> {
        match s.trim() {
            "grevlex" => Ok(TermOrder::Grevlex),
            "lex" => Ok(TermOrder::Lex),
            other => Err(Error::Invalid(format!("unknown order `{other}`"))),
        }
    }

    /// Compiles the order for a concrete ring width.
    pub(crate) fn compile(&self, nvars: usize) -> CompiledOrder {
        match self {
            TermOrder::Grevlex => CompiledOrder::Grevlex,
            TermOrder::Lex => CompiledOrder::Lex,
            TermOrder::Block { elim, inner } => {
                let mut mask = vec![false; nvars];
                for &v in elim {
                    assert!(v < nvars, "eliminated variable out of range");
                    mask[v] = true;
                }
                let inner_lex = match **inner {
                    TermOrder::Grevlex => false,
                    TermOrder::Lex => true,
                    TermOrder::Block { .. } => panic!("nested block orders are not supported"),
                };
                CompiledOrder::Block { mask, inner_lex }
            }
        }
    }
}

impl std::fmt::Display for TermOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TermOrder::Grevlex => write!(f, "grevlex"),
            TermOrder::Lex => write!(f, "lex"),
            TermOrder::Block { elim, inner } => write!(f, "block(elim={elim:?}, {inner})"),
        }
    }
}

/// Order resolved against a ring width; cheap to apply in reduction loops.
#[derive(Clone, Debug)]
pub(crate) enum CompiledOrder {
    Grevlex,
    Lex,
    Block { mask: Vec<bool>, inner_lex: bool },
}

impl CompiledOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            CompiledOrder::Grevlex => a.cmp_grevlex(b),
            CompiledOrder::Lex => a.cmp_lex(b),
            CompiledOrder::Block { mask, inner_lex } => {
                match a.cmp_masked_grevlex(b, mask, true) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                if *inner_lex {
                    a.cmp_masked_lex(b, mask, false)
                } else {
                    a.cmp_masked_grevlex(b, mask, false)
                }
            }
        }
    }
}

/// Compares two monomials under `ord`. Errors on mismatched lengths.
pub fn cmp_monomials(a: &Monomial, b: &Monomial, ord: &TermOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::RingMismatch(format!(
            "monomials of different widths: {} vs {}",
            a.nvars(),
            b.nvars()
        )));
    }
    Ok(ord.compile(a.nvars()).cmp(a, b))
}
