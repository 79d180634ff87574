//! Buchberger's algorithm with the Gebauer-Moeller pair filters (product and
//! chain criteria) and sugar-degree pair selection.
//!
//! Over a prime field basis elements are kept monic; over the rationals they
//! are kept as primitive integer polynomials and reductions are fraction-free
//! up to a global scalar, which is harmless everywhere a result is compared
//! to zero or re-normalized.

use std::collections::BTreeSet;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{CompiledOrder, Monomial, TermOrder};
use crate::poly::{Polynomial, Term};
use crate::ring::Ring;
use crate::scalar::{Field, Scalar};

/// Deterministic computation limits. Overruns surface as explicit
/// `Error::Budget`, never as a silently wrong answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of S-pairs processed in one basis computation.
    pub max_pairs: u64,
    /// Maximum number of terms held by any intermediate polynomial.
    pub max_terms: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_pairs: 1_000_000, max_terms: 1_000_000 }
    }
}

impl Budget {
    pub fn new(max_pairs: u64, max_terms: usize) -> Budget {
        Budget { max_pairs, max_terms }
    }
}

/// A reduced Groebner basis: monic, auto-reduced, sorted descending by
/// leading monomial. Canonical for the pair (ideal, order).
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    order: TermOrder,
    polys: Vec<Polynomial>,
    lms: Vec<Monomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    /// Leading monomials, parallel to `polys`.
    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.lms
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// True when the basis is `{1}`, i.e. the ideal is the whole ring.
    pub fn is_improper(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_one()
    }

    /// Wraps polynomials already known to form a reduced basis for `order`
    /// (used when an elimination step hands back a ready-made basis).
    pub(crate) fn assemble(
        ring: Arc<Ring>,
        order: TermOrder,
        polys: Vec<Polynomial>,
        lms: Vec<Monomial>,
    ) -> GroebnerBasis {
        debug_assert_eq!(polys.len(), lms.len());
        GroebnerBasis { ring, order, polys, lms }
    }
}

pub(crate) type WTerm = (Scalar, Monomial);

/// Basis element in working representation: terms sorted strictly descending
/// under the working order.
pub(crate) struct Elem {
    pub terms: Vec<WTerm>,
    pub sugar: u32,
}

impl Elem {
    #[inline]
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].1
    }

    #[inline]
    pub fn lc(&self) -> &Scalar {
        &self.terms[0].0
    }
}

pub(crate) fn to_work(f: &Polynomial, cmp: &CompiledOrder) -> Vec<WTerm> {
    let mut terms: Vec<WTerm> =
        f.terms().iter().map(|t| (t.coeff.clone(), t.mon.clone())).collect();
    terms.sort_by(|a, b| cmp.cmp(&b.1, &a.1));
    terms
}

pub(crate) fn from_work(ring: &Arc<Ring>, terms: Vec<WTerm>) -> Polynomial {
    Polynomial::from_terms(
        ring,
        terms.into_iter().map(|(coeff, mon)| Term { coeff, mon }).collect(),
    )
}

fn int_of(s: &Scalar) -> &BigInt {
    match s.as_rational() {
        Some((n, d)) => {
            debug_assert!(d.is_one(), "fraction-free path saw a non-integer");
            n
        }
        None => unreachable!("fraction-free path is rational-only"),
    }
}

/// Divides all coefficients by their integer gcd (rational case only).
fn strip_content(parts: &mut [&mut Vec<WTerm>]) {
    let mut g = BigInt::zero();
    for part in parts.iter() {
        for (c, _) in part.iter() {
            g = g.gcd(int_of(c));
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for part in parts.iter_mut() {
        for (c, _) in part.iter_mut() {
            *c = Scalar::Rat(BigRational::from_integer(int_of(c) / &g));
        }
    }
}

/// `sa*rest(a) - sb*x^delta*rest(b)` where both head terms cancel.
fn merge_tail(
    a: &[WTerm],
    sa: &Scalar,
    b: &[WTerm],
    sb: &Scalar,
    delta: &Monomial,
    cmp: &CompiledOrder,
) -> Vec<WTerm> {
    let mut out = Vec::with_capacity(a.len() + b.len() - 2);
    let (mut i, mut j) = (1, 1);
    let scale_a = !sa.is_one();
    while i < a.len() && j < b.len() {
        let bm = b[j].1.mul(delta);
        match cmp.cmp(&a[i].1, &bm) {
            std::cmp::Ordering::Greater => {
                let c = if scale_a { a[i].0.mul(sa) } else { a[i].0.clone() };
                out.push((c, a[i].1.clone()));
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((b[j].0.mul(sb).neg(), bm));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let ca = if scale_a { a[i].0.mul(sa) } else { a[i].0.clone() };
                let c = ca.sub(&b[j].0.mul(sb));
                if !c.is_zero() {
                    out.push((c, bm));
                }
                i += 1;
                j += 1;
            }
        }
    }
    while i < a.len() {
        let c = if scale_a { a[i].0.mul(sa) } else { a[i].0.clone() };
        out.push((c, a[i].1.clone()));
        i += 1;
    }
    while j < b.len() {
        out.push((b[j].0.mul(sb).neg(), b[j].1.mul(delta)));
        j += 1;
    }
    out
}

pub(crate) struct ReduceOutcome {
    pub terms: Vec<WTerm>,
    pub sugar: u32,
}

/// Full normal form of `p` against `reducers`.
///
/// `exact` keeps coefficients exactly (field divisions); otherwise the result
/// is correct up to a positive scalar (fraction-free over the rationals).
pub(crate) fn reduce_full(
    mut p: Vec<WTerm>,
    mut sugar: u32,
    reducers: &[&Elem],
    cmp: &CompiledOrder,
    field: Field,
    max_terms: usize,
    exact: bool,
) -> Result<ReduceOutcome> {
    let fraction_free = !exact && field == Field::Rational;
    let mut out: Vec<WTerm> = Vec::new();
    let mut steps = 0u32;
    // cursor into p: everything before it has moved to `out`
    let mut cur = 0usize;
    'outer: while cur < p.len() {
        if p.len() - cur + out.len() > max_terms {
            return Err(Error::Budget { what: "terms", limit: max_terms as u64 });
        }
        let c = p[cur].0.clone();
        let m = p[cur].1.clone();
        for g in reducers {
            if let Some(delta) = m.try_div(g.lm()) {
                sugar = sugar.max(g.sugar + delta.deg());
                if fraction_free {
                    let d = int_of(&c).gcd(int_of(g.lc()));
                    let sa = Scalar::Rat(BigRational::from_integer(int_of(g.lc()) / &d));
                    let sb = Scalar::Rat(BigRational::from_integer(int_of(&c) / &d));
                    if !sa.is_one() {
                        for (oc, _) in out.iter_mut() {
                            *oc = oc.mul(&sa);
                        }
                    }
                    p = merge_tail(&p[cur..], &sa, &g.terms, &sb, &delta, cmp);
                    steps += 1;
                    if steps % 64 == 0 {
                        strip_content(&mut [&mut out, &mut p]);
                    }
                } else {
                    let sb = c.div(g.lc());
                    p = merge_tail(&p[cur..], &field.one(), &g.terms, &sb, &delta, cmp);
                }
                cur = 0;
                continue 'outer;
            }
        }
        // head term irreducible: move it to the result
        out.push(p[cur].clone());
        cur += 1;
    }
    if fraction_free {
        strip_content(&mut [&mut out]);
    }
    Ok(ReduceOutcome { terms: out, sugar })
}

/// Normalizes a work polynomial for storage in the basis: monic over a prime
/// field, primitive integer with positive leading coefficient over Q.
fn normalize(terms: &mut Vec<WTerm>, field: Field) {
    if terms.is_empty() {
        return;
    }
    match field {
        Field::Prime(_) => {
            let inv = terms[0].0.inv();
            if !inv.is_one() {
                for (c, _) in terms.iter_mut() {
                    *c = c.mul(&inv);
                }
            }
        }
        Field::Rational => {
            let mut den = BigInt::one();
            for (c, _) in terms.iter() {
                let (_, d) = c.as_rational().unwrap();
                den = den.lcm(d);
            }
            if !den.is_one() {
                let s = Scalar::Rat(BigRational::from_integer(den));
                for (c, _) in terms.iter_mut() {
                    *c = c.mul(&s);
                }
            }
            strip_content(&mut [terms]);
            if int_of(&terms[0].0).is_negative() {
                for (c, _) in terms.iter_mut() {
                    *c = c.neg();
                }
            }
        }
    }
}

struct Engine {
    cmp: CompiledOrder,
    field: Field,
    budget: Budget,
    basis: Vec<Elem>,
    // (sugar, lcm degree, j, i) with i < j: deterministic selection order.
    pairs: BTreeSet<(u32, u32, u32, u32)>,
    pairs_processed: u64,
}

impl Engine {
    fn lcm(&self, i: usize, j: usize) -> Monomial {
        self.basis[i].lm().lcm(self.basis[j].lm())
    }

    fn pair_key(&self, i: usize, j: usize) -> (u32, u32, u32, u32) {
        let lcm = self.lcm(i, j);
        let si = self.basis[i].sugar + (lcm.deg() - self.basis[i].lm().deg());
        let sj = self.basis[j].sugar + (lcm.deg() - self.basis[j].lm().deg());
        (si.max(sj), lcm.deg(), j as u32, i as u32)
    }

    /// Gebauer-Moeller update: installs the element already pushed onto
    /// `basis` as index `m`, filtering old and new pairs.
    fn update_pairs(&mut self, m: usize) {
        let lm_h = self.basis[m].lm().clone();

        // Chain criterion on surviving old pairs.
        let old: Vec<(u32, u32, u32, u32)> = self.pairs.iter().copied().collect();
        for key in old {
            let (i, j) = (key.3 as usize, key.2 as usize);
            let lij = self.lcm(i, j);
            if lm_h.divides(&lij)
                && self.lcm(i, m) != lij
                && self.lcm(j, m) != lij
            {
                self.pairs.remove(&key);
            }
        }

        // New candidates (h, g_i), filtered among themselves.
        let cands: Vec<(usize, Monomial, bool)> = (0..m)
            .map(|i| {
                let l = self.lcm(i, m);
                let coprime = self.basis[i].lm().coprime(&lm_h);
                (i, l, coprime)
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (pos, cand) in cands.iter().enumerate() {
            let dominated = kept.iter().any(|k| k.1.divides(&cand.1))
                || cands[pos + 1..].iter().any(|c| c.1.divides(&cand.1));
            if cand.2 || !dominated {
                kept.push(cand.clone());
            }
        }
        for (i, _, coprime) in kept {
            if !coprime {
                let key = self.pair_key(i, m);
                self.pairs.insert(key);
            }
        }
    }

    fn insert(&mut self, terms: Vec<WTerm>, sugar: u32) {
        self.basis.push(Elem { terms, sugar });
        let m = self.basis.len() - 1;
        self.update_pairs(m);
    }

    fn spoly(&self, i: usize, j: usize) -> (Vec<WTerm>, u32) {
        let (a, b) = (&self.basis[i], &self.basis[j]);
        let lcm = a.lm().lcm(b.lm());
        let da = lcm.try_div(a.lm()).unwrap();
        let db = lcm.try_div(b.lm()).unwrap();
        // lc_b * x^da * a - lc_a * x^db * b; heads cancel by construction.
        let sa = b.lc().clone();
        let sb = a.lc().clone();
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut p, mut q) = (0, 0);
        while p < a.terms.len() && q < b.terms.len() {
            let am = a.terms[p].1.mul(&da);
            let bm = b.terms[q].1.mul(&db);
            match self.cmp.cmp(&am, &bm) {
                std::cmp::Ordering::Greater => {
                    out.push((a.terms[p].0.mul(&sa), am));
                    p += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b.terms[q].0.mul(&sb).neg(), bm));
                    q += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a.terms[p].0.mul(&sa).sub(&b.terms[q].0.mul(&sb));
                    if !c.is_zero() {
                        out.push((c, am));
                    }
                    p += 1;
                    q += 1;
                }
            }
        }
        while p < a.terms.len() {
            out.push((a.terms[p].0.mul(&sa), a.terms[p].1.mul(&da)));
            p += 1;
        }
        while q < b.terms.len() {
            out.push((b.terms[q].0.mul(&sb).neg(), b.terms[q].1.mul(&db)));
            q += 1;
        }
        let sugar_pair = (a.sugar + da.deg()).max(b.sugar + db.deg());
        (out, sugar_pair)
    }

    fn run(&mut self) -> Result<bool> {
        while let Some(&key) = self.pairs.iter().next() {
            self.pairs.remove(&key);
            self.pairs_processed += 1;
            if self.pairs_processed > self.budget.max_pairs {
                return Err(Error::Budget { what: "s-pairs", limit: self.budget.max_pairs });
            }
            let (i, j) = (key.3 as usize, key.2 as usize);
            let (s, sugar) = self.spoly(i, j);
            if s.is_empty() {
                continue;
            }
            let reducers: Vec<&Elem> = self.basis.iter().collect();
            let red = reduce_full(
                s,
                sugar,
                &reducers,
                &self.cmp,
                self.field,
                self.budget.max_terms,
                false,
            )?;
            let mut terms = red.terms;
            if terms.is_empty() {
                continue;
            }
            if terms[0].1.is_one() {
                // A unit: the ideal is the whole ring.
                return Ok(true);
            }
            normalize(&mut terms, self.field);
            self.insert(terms, red.sugar);
        }
        Ok(false)
    }
}

/// Computes the reduced Groebner basis of the ideal generated by `gens`
/// under `ord`. Deterministic for fixed input and order.
pub fn buchberger(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    ord: &TermOrder,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    let cmp = ord.compile(ring.nvars());
    let field = ring.field();
    let mut engine = Engine {
        cmp,
        field,
        budget: *budget,
        basis: Vec::new(),
        pairs: BTreeSet::new(),
        pairs_processed: 0,
    };

    let mut improper = false;
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let mut terms = to_work(&g.primitive(), &engine.cmp);
        if terms[0].1.is_one() {
            improper = true;
            break;
        }
        normalize(&mut terms, field);
        let sugar = terms.iter().map(|(_, m)| m.deg()).max().unwrap();
        engine.insert(terms, sugar);
    }

    if !improper {
        improper = engine.run()?;
    }
    if improper {
        return Ok(GroebnerBasis {
            ring: Arc::clone(ring),
            order: ord.clone(),
            polys: vec![Polynomial::one(ring)],
            lms: vec![Monomial::one(ring.nvars())],
        });
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another surviving one.
    let mut alive: Vec<bool> = vec![true; engine.basis.len()];
    for i in 0..engine.basis.len() {
        if !alive[i] {
            continue;
        }
        for j in 0..engine.basis.len() {
            if i == j || !alive[j] {
                continue;
            }
            let li = engine.basis[i].lm();
            let lj = engine.basis[j].lm();
            if lj.divides(li) && (li != lj || j < i) {
                alive[i] = false;
                break;
            }
        }
    }

    // Interreduce tails. Reducibility only depends on the other elements'
    // leading monomials, which are fixed here, so one full pass yields the
    // unique reduced basis.
    let keep: Vec<usize> = (0..engine.basis.len()).filter(|&i| alive[i]).collect();
    let mut polys: Vec<(Monomial, Polynomial)> = Vec::with_capacity(keep.len());
    for (pos, &i) in keep.iter().enumerate() {
        let others: Vec<&Elem> = keep
            .iter()
            .enumerate()
            .filter(|(q, _)| *q != pos)
            .map(|(_, &k)| &engine.basis[k])
            .collect();
        let red = reduce_full(
            engine.basis[i].terms.clone(),
            engine.basis[i].sugar,
            &others,
            &engine.cmp,
            field,
            budget.max_terms,
            false,
        )?;
        let mut t = red.terms;
        debug_assert!(!t.is_empty());
        // Canonical form is monic.
        let inv = t[0].0.inv();
        if !inv.is_one() {
            for (c, _) in t.iter_mut() {
                *c = c.mul(&inv);
            }
        }
        let lm = t[0].1.clone();
        polys.push((lm, from_work(ring, t)));
    }
    polys.sort_by(|a, b| engine.cmp.cmp(&b.0, &a.0));
    let (lms, polys): (Vec<Monomial>, Vec<Polynomial>) = polys.into_iter().unzip();
    Ok(GroebnerBasis { ring: Arc::clone(ring), order: ord.clone(), polys, lms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn q2() -> Arc<Ring> {
        Ring::matrix(2, Field::Rational)
    }

    fn gb(ring: &Arc<Ring>, gens: &[&str], ord: TermOrder) -> GroebnerBasis {
        let gens: Vec<Polynomial> = gens.iter().map(|s| parse_poly(ring, s).unwrap()).collect();
        buchberger(ring, &gens, &ord, &Budget::default()).unwrap()
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let r = q2();
        let basis = gb(&r, &["x[1,1]*x[2,2]-x[1,2]*x[2,1]"], TermOrder::Grevlex);
        assert_eq!(basis.polys().len(), 1);
        // Monic under grevlex, where the leading term is x[1,2]*x[2,1].
        assert_eq!(
            basis.polys()[0],
            parse_poly(&r, "x[1,2]*x[2,1]-x[1,1]*x[2,2]").unwrap()
        );
    }

    #[test]
    fn textbook_lex_example() {
        // (x^2 - 1, x*y - 1) under lex x > y has reduced basis {x - y, y^2 - 1}.
        let r = q2();
        let basis = gb(&r, &["x[1,1]^2-1", "x[1,1]*x[2,2]-1"], TermOrder::Lex);
        let expect: Vec<Polynomial> = ["x[1,1]-x[2,2]", "x[2,2]^2-1"]
            .iter()
            .map(|s| parse_poly(&r, s).unwrap())
            .collect();
        assert_eq!(basis.polys(), expect.as_slice());
    }

    #[test]
    fn diagonal_variables_for_p1() {
        // P_1 generators are already the reduced basis: the diagonal entries.
        let r = Ring::matrix(3, Field::Prime(32003));
        let basis = gb(&r, &["x[3,3]", "x[1,1]", "x[2,2]"], TermOrder::Grevlex);
        assert_eq!(basis.len(), 3);
        for p in basis.polys() {
            assert_eq!(p.num_terms(), 1);
        }
    }

    #[test]
    fn improper_detected() {
        let r = q2();
        let basis = gb(&r, &["x[1,1]", "x[1,1]-1"], TermOrder::Grevlex);
        assert!(basis.is_improper());
    }

    #[test]
    fn zero_ideal() {
        let r = q2();
        let basis = buchberger(&r, &[], &TermOrder::Grevlex, &Budget::default()).unwrap();
        assert!(basis.is_empty());
        assert!(!basis.is_improper());
    }

    #[test]
    fn budget_overrun_is_explicit() {
        let r = Ring::matrix(2, Field::Rational);
        let gens: Vec<Polynomial> = ["x[1,1]^2-x[1,2]", "x[1,1]*x[1,2]-x[2,1]", "x[2,1]^3-x[2,2]"]
            .iter()
            .map(|s| parse_poly(&r, s).unwrap())
            .collect();
        let err = buchberger(&r, &gens, &TermOrder::Lex, &Budget::new(1, 1_000_000));
        match err {
            Err(Error::Budget { what, .. }) => assert_eq!(what, "s-pairs"),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn basis_independent_of_generator_order_and_scaling() {
        let r = Ring::matrix(2, Field::Rational);
        let g1 = ["x[1,1]^2-1", "x[1,1]*x[2,2]-1"];
        let g2 = ["x[1,1]*x[2,2]-1", "x[1,1]^2-1"];
        let b1 = gb(&r, &g1, TermOrder::Lex);
        let b2 = gb(&r, &g2, TermOrder::Lex);
        assert_eq!(b1.polys(), b2.polys());
        // scale a generator by 7/3
        let gens: Vec<Polynomial> = g1
            .iter()
            .map(|s| parse_poly(&r, s).unwrap())
            .map(|p| p.scale(&Field::Rational.from_i64(7).div(&Field::Rational.from_i64(3))))
            .collect();
        let b3 = buchberger(&r, &gens, &TermOrder::Lex, &Budget::default()).unwrap();
        assert_eq!(b1.polys(), b3.polys());
    }

    #[test]
    fn every_generator_reduces_to_zero() {
        let r = Ring::matrix(2, Field::Prime(5));
        let gens: Vec<Polynomial> = ["x[1,1]^2*x[2,2]-x[1,2]", "x[1,1]*x[2,1]-2*x[2,2]^2"]
            .iter()
            .map(|s| parse_poly(&r, s).unwrap())
            .collect();
        let basis = buchberger(&r, &gens, &TermOrder::Grevlex, &Budget::default()).unwrap();
        for g in &gens {
            assert!(super::super::ops::normal_form(g, &basis).is_zero());
        }
    }
}
