//! Ideal operations expressed through elimination: membership, equality,
//! intersection, colon, saturation, radical membership.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::TermOrder;
use crate::poly::{Polynomial, Term};
use crate::ring::Ring;

use super::engine::{from_work, reduce_full, to_work, Budget, Elem, GroebnerBasis};

/// The unique normal form of `f` against a reduced basis: no term of the
/// result is divisible by a leading monomial of the basis, and the
/// difference lies in the ideal.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    Ring::same(f.ring(), gb.ring()).expect("normal form in a different ring");
    if gb.is_empty() || f.is_zero() {
        return f.clone();
    }
    let cmp = gb.order().compile(f.ring().nvars());
    let reducers: Vec<Elem> = gb
        .polys()
        .iter()
        .map(|p| Elem { terms: to_work(p, &cmp), sugar: 0 })
        .collect();
    let refs: Vec<&Elem> = reducers.iter().collect();
    let out = reduce_full(to_work(f, &cmp), 0, &refs, &cmp, f.ring().field(), usize::MAX, true)
        .expect("exact reduction cannot exceed a budget");
    from_work(f.ring(), out.terms)
}

/// True iff `f` lies in `I`.
pub fn ideal_member(f: &Polynomial, ideal: &Ideal, budget: &Budget) -> Result<bool> {
    Ring::same(f.ring(), ideal.ring())?;
    let gb = ideal.groebner(&TermOrder::Grevlex, budget)?;
    Ok(normal_form(f, &gb).is_zero())
}

/// Ideal equality via canonical reduced bases.
pub fn eq_ideal(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<bool> {
    Ring::same(a.ring(), b.ring())?;
    let ga = a.groebner(&TermOrder::Grevlex, budget)?;
    let gb = b.groebner(&TermOrder::Grevlex, budget)?;
    Ok(ga.polys() == gb.polys())
}

/// Exact division `f / g`; errors when `g` does not divide `f`.
pub fn exact_div(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    Ring::same(f.ring(), g.ring())?;
    if g.is_zero() {
        return Err(Error::Invalid("division by the zero polynomial".into()));
    }
    let ring = f.ring().clone();
    let glt = g.leading().unwrap();
    let mut rem = f.clone();
    let mut quot: Vec<Term> = Vec::new();
    while let Some(lt) = rem.leading() {
        let mon = lt
            .mon
            .try_div(&glt.mon)
            .ok_or_else(|| Error::Invalid("inexact polynomial division".into()))?;
        let coeff = lt.coeff.div(&glt.coeff);
        let piece = g.mul_term(&coeff, &mon);
        quot.push(Term { coeff, mon });
        rem = rem.sub(&piece);
    }
    Ok(Polynomial::from_terms(&ring, quot))
}

/// Generators of `I` intersected with the subring omitting `vars`: compute a
/// basis under a block order eliminating `vars` and keep the elements free
/// of them. The result lives in the same ambient ring.
pub fn eliminate(ideal: &Ideal, vars: &[usize], budget: &Budget) -> Result<Ideal> {
    let ring = ideal.ring();
    for &v in vars {
        if v >= ring.nvars() {
            return Err(Error::OutOfRange(format!("variable index {v}")));
        }
    }
    if vars.is_empty() {
        return Ok(ideal.clone());
    }
    let ord = TermOrder::elimination(vars.to_vec());
    let gb = ideal.groebner(&ord, budget)?;
    let kept: Vec<Polynomial> = gb
        .polys()
        .iter()
        .filter(|p| p.terms().iter().all(|t| vars.iter().all(|&v| t.mon.exp(v) == 0)))
        .cloned()
        .collect();
    Ideal::new(ring, kept)
}

/// Runs `body` on the ring extended by one auxiliary variable, eliminates
/// the variable, and projects the result back down. The surviving elements
/// of the reduced block basis form the reduced grevlex basis of the result,
/// which is cached.
fn eliminate_aux(
    ring: &Arc<Ring>,
    ext_gens: Vec<Polynomial>,
    budget: &Budget,
) -> Result<Ideal> {
    let ext = ext_gens
        .first()
        .map(|g| g.ring().clone())
        .expect("auxiliary elimination needs at least one generator");
    let t_idx = ext.aux_var(ext.aux() - 1);
    let work = Ideal::new(&ext, ext_gens)?;
    let ord = TermOrder::elimination(vec![t_idx]);
    let gb = work.groebner(&ord, budget)?;
    let downstairs: Vec<Polynomial> = gb
        .polys()
        .iter()
        .filter(|p| p.terms().iter().all(|t| t.mon.exp(t_idx) == 0))
        .map(|p| p.project(ring))
        .collect();
    let result = Ideal::new(ring, downstairs)?;
    if !result.is_zero_ideal() {
        let lms = result.gens().iter().map(|p| p.leading().unwrap().mon.clone()).collect();
        let seeded = GroebnerBasis::assemble(
            ring.clone(),
            TermOrder::Grevlex,
            result.gens().to_vec(),
            lms,
        );
        result.seed_cache(TermOrder::Grevlex, seeded);
    }
    Ok(result)
}

/// Generators of `I ∩ J` via the single auxiliary variable `t`:
/// eliminate `t` from `t*I + (1-t)*J`.
pub fn intersect(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<Ideal> {
    Ring::same(a.ring(), b.ring())?;
    let ring = a.ring();
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ideal::new(ring, Vec::new());
    }
    let ext = ring.extended();
    let t = Polynomial::var_by_index(&ext, ext.aux_var(ext.aux() - 1));
    let one_minus_t = Polynomial::one(&ext).sub(&t);
    let mut gens = Vec::with_capacity(a.num_gens() + b.num_gens());
    for f in a.gens() {
        gens.push(t.mul(&f.lift(&ext)));
    }
    for g in b.gens() {
        gens.push(one_minus_t.mul(&g.lift(&ext)));
    }
    eliminate_aux(ring, gens, budget)
}

/// The colon ideal `I : f = { g : g*f ∈ I }`, computed as `(I ∩ (f)) / f`.
pub fn colon_poly(ideal: &Ideal, f: &Polynomial, budget: &Budget) -> Result<Ideal> {
    Ring::same(ideal.ring(), f.ring())?;
    if f.is_zero() {
        return Err(Error::Invalid("colon by the zero polynomial".into()));
    }
    let principal = Ideal::new(ideal.ring(), vec![f.clone()])?;
    let inter = intersect(ideal, &principal, budget)?;
    let quotients: Result<Vec<Polynomial>> =
        inter.gens().iter().map(|g| exact_div(g, f)).collect();
    Ideal::new(ideal.ring(), quotients?)
}

/// The colon ideal `I : J = ∩_g (I : g)` over the generators of `J`.
pub fn colon_ideal(ideal: &Ideal, j: &Ideal, budget: &Budget) -> Result<Ideal> {
    Ring::same(ideal.ring(), j.ring())?;
    if j.is_zero_ideal() {
        return Err(Error::Invalid("colon by the zero ideal".into()));
    }
    let mut acc: Option<Ideal> = None;
    for g in j.gens() {
        let part = colon_poly(ideal, g, budget)?;
        acc = Some(match acc {
            None => part,
            Some(prev) => intersect(&prev, &part, budget)?,
        });
    }
    Ok(acc.unwrap())
}

/// The saturation `I : f^∞`: eliminate `t` from `I + (t*f - 1)`.
pub fn saturate(ideal: &Ideal, f: &Polynomial, budget: &Budget) -> Result<Ideal> {
    Ring::same(ideal.ring(), f.ring())?;
    if f.is_zero() {
        return Err(Error::Invalid("saturation by the zero polynomial".into()));
    }
    let ring = ideal.ring();
    if ideal.is_zero_ideal() {
        return Ideal::new(ring, Vec::new());
    }
    let ext = ring.extended();
    let t = Polynomial::var_by_index(&ext, ext.aux_var(ext.aux() - 1));
    let mut gens: Vec<Polynomial> = ideal.gens().iter().map(|g| g.lift(&ext)).collect();
    gens.push(t.mul(&f.lift(&ext)).sub(&Polynomial::one(&ext)));
    eliminate_aux(ring, gens, budget)
}

/// True iff `f` vanishes on the zero set of `I`, i.e. some power of `f`
/// lies in `I`: check that `I + (t*f - 1)` is the unit ideal.
pub fn radical_member(f: &Polynomial, ideal: &Ideal, budget: &Budget) -> Result<bool> {
    Ring::same(f.ring(), ideal.ring())?;
    if f.is_zero() {
        return Err(Error::Invalid("radical membership of the zero polynomial".into()));
    }
    let ext = ideal.ring().extended();
    let t = Polynomial::var_by_index(&ext, ext.aux_var(ext.aux() - 1));
    let mut gens: Vec<Polynomial> = ideal.gens().iter().map(|g| g.lift(&ext)).collect();
    gens.push(t.mul(&f.lift(&ext)).sub(&Polynomial::one(&ext)));
    let work = Ideal::new(&ext, gens)?;
    let gb = work.groebner(&TermOrder::Grevlex, budget)?;
    Ok(gb.is_improper())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::scalar::Field;

    fn ring2() -> Arc<Ring> {
        Ring::matrix(2, Field::Rational)
    }

    fn ideal(ring: &Arc<Ring>, gens: &[&str]) -> Ideal {
        let gens = gens.iter().map(|s| parse_poly(ring, s).unwrap()).collect();
        Ideal::new(ring, gens).unwrap()
    }

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn normal_form_properties() {
        let r = ring2();
        let i = ideal(&r, &["x[1,1]*x[2,2]-x[1,2]*x[2,1]"]);
        let gb = i.groebner(&TermOrder::Grevlex, &b()).unwrap();
        let one = Polynomial::one(&r);
        assert_eq!(normal_form(&one, &gb), one);
        let f = parse_poly(&r, "x[1,1]^2*x[2,2] + x[1,2]").unwrap();
        let nf = normal_form(&f, &gb);
        assert_eq!(normal_form(&nf, &gb), nf, "normal form must be idempotent");
        let diff = f.sub(&nf);
        assert!(ideal_member(&diff, &i, &b()).unwrap());
    }

    #[test]
    fn eliminate_textbook() {
        // eliminate t from (t*x - 1, t*y): the result is (y).
        // Use x = x[1,1], y = x[1,2], t = x[2,2].
        let r = ring2();
        let i = ideal(&r, &["x[2,2]*x[1,1]-1", "x[2,2]*x[1,2]"]);
        let t_idx = r.var(2, 2).unwrap();
        let e = eliminate(&i, &[t_idx], &b()).unwrap();
        let expect = ideal(&r, &["x[1,2]"]);
        assert!(eq_ideal(&e, &expect, &b()).unwrap());
        // eliminating nothing returns the same ideal
        let same = eliminate(&i, &[], &b()).unwrap();
        assert!(eq_ideal(&same, &i, &b()).unwrap());
    }

    #[test]
    fn eliminate_everything_from_proper_ideal() {
        let r = ring2();
        let i = ideal(&r, &["x[1,1]-x[2,2]", "x[1,2]*x[2,1]-1"]);
        let all: Vec<usize> = (0..r.nvars()).collect();
        let e = eliminate(&i, &all, &b()).unwrap();
        assert!(e.is_zero_ideal());
    }

    #[test]
    fn intersect_of_coordinate_ideals() {
        let r = ring2();
        let ix = ideal(&r, &["x[1,1]"]);
        let iy = ideal(&r, &["x[2,2]"]);
        let meet = intersect(&ix, &iy, &b()).unwrap();
        assert!(eq_ideal(&meet, &ideal(&r, &["x[1,1]*x[2,2]"]), &b()).unwrap());
        // idempotence
        let same = intersect(&ix, &ix, &b()).unwrap();
        assert!(eq_ideal(&same, &ix, &b()).unwrap());
    }

    #[test]
    fn colon_and_saturation_basics() {
        let r = ring2();
        let x = parse_poly(&r, "x[1,1]").unwrap();
        // (xy) : x = (y)
        let i = ideal(&r, &["x[1,1]*x[2,2]"]);
        let c = colon_poly(&i, &x, &b()).unwrap();
        assert!(eq_ideal(&c, &ideal(&r, &["x[2,2]"]), &b()).unwrap());
        // (x^2 y) : x^inf = (y)
        let j = ideal(&r, &["x[1,1]^2*x[2,2]"]);
        let s = saturate(&j, &x, &b()).unwrap();
        assert!(eq_ideal(&s, &ideal(&r, &["x[2,2]"]), &b()).unwrap());
    }

    #[test]
    fn colon_chain_stabilizes_at_saturation() {
        let r = ring2();
        let x = parse_poly(&r, "x[1,1]").unwrap();
        let i = ideal(&r, &["x[1,1]^3*x[2,2]", "x[1,1]*x[1,2]^2"]);
        let sat = saturate(&i, &x, &b()).unwrap();
        let mut power = x.clone();
        let mut prev = colon_poly(&i, &power, &b()).unwrap();
        // I : x ⊆ I : x^2 ⊆ ... and the chain's limit is the saturation
        for _ in 0..6 {
            power = power.mul(&x);
            let next = colon_poly(&i, &power, &b()).unwrap();
            for g in prev.gens() {
                assert!(ideal_member(g, &next, &b()).unwrap());
            }
            prev = next;
        }
        assert!(eq_ideal(&prev, &sat, &b()).unwrap());
    }

    #[test]
    fn saturation_by_nonmember_of_prime_is_identity() {
        // P1(X_2) is prime; det is not in it, so saturation changes nothing.
        let r = ring2();
        let p1 = ideal(&r, &["x[1,1]", "x[2,2]"]);
        let det = parse_poly(&r, "x[1,1]*x[2,2]-x[1,2]*x[2,1]").unwrap();
        let s = saturate(&p1, &det, &b()).unwrap();
        assert!(eq_ideal(&s, &p1, &b()).unwrap());
    }

    #[test]
    fn radical_membership() {
        let r = ring2();
        let i = ideal(&r, &["x[1,1]^2"]);
        let x = parse_poly(&r, "x[1,1]").unwrap();
        assert!(radical_member(&x, &i, &b()).unwrap());
        assert!(!ideal_member(&x, &i, &b()).unwrap());
        let y = parse_poly(&r, "x[2,2]").unwrap();
        assert!(!radical_member(&y, &i, &b()).unwrap());
        // (x+y) ∈ rad((x+y)^3)
        let c = ideal(&r, &["(x[1,1]+x[2,2])^3"]);
        let f = parse_poly(&r, "x[1,1]+x[2,2]").unwrap();
        assert!(radical_member(&f, &c, &b()).unwrap());
    }

    #[test]
    fn exact_division() {
        let r = ring2();
        let f = parse_poly(&r, "(x[1,1]+x[2,2])*(x[1,1]-x[2,2])").unwrap();
        let g = parse_poly(&r, "x[1,1]+x[2,2]").unwrap();
        let q = exact_div(&f, &g).unwrap();
        assert_eq!(q, parse_poly(&r, "x[1,1]-x[2,2]").unwrap());
        let bad = parse_poly(&r, "x[1,2]").unwrap();
        assert!(exact_div(&f, &bad).is_err());
    }

    #[test]
    fn membership_is_linear() {
        let r = ring2();
        let i = ideal(&r, &["x[1,1]*x[2,2]-1", "x[1,2]^2"]);
        let f = parse_poly(&r, "x[1,1]*x[2,2]-1").unwrap();
        let g = parse_poly(&r, "x[1,2]^2").unwrap();
        let combo = f.scale(&Field::Rational.from_i64(3)).add(&g.scale(&Field::Rational.from_i64(-5)));
        assert!(ideal_member(&combo, &i, &b()).unwrap());
    }
}
