//! Krull dimension through the combinatorics of leading-term ideals: the
//! dimension equals the size of the largest set of variables meeting no
//! leading monomial's support.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::TermOrder;
use crate::poly::{poly_det, Polynomial};

use super::engine::Budget;

/// Largest independent variable set, by branch-and-bound over bitmasks.
fn max_independent(nvars: usize, supports: &[u64]) -> usize {
    // Keep only minimal supports; supersets never constrain first.
    let mut minimal: Vec<u64> = Vec::new();
    for &s in supports {
        if minimal.iter().any(|&m| s & m == m) {
            continue;
        }
        minimal.retain(|&m| m & s != s);
        minimal.push(s);
    }

    fn rec(v: usize, nvars: usize, chosen: u64, count: usize, best: &mut usize, supports: &[u64]) {
        if count + (nvars - v) <= *best {
            return;
        }
        if v == nvars {
            *best = (*best).max(count);
            return;
        }
        let with = chosen | (1 << v);
        if supports.iter().all(|&s| s & !with != 0) {
            rec(v + 1, nvars, with, count + 1, best, supports);
        }
        rec(v + 1, nvars, chosen, count, best, supports);
    }

    let mut best = 0;
    rec(0, nvars, 0, 0, &mut best, &minimal);
    best
}

/// Dimension of `K[X]/I`.
pub fn dimension(ideal: &Ideal, budget: &Budget) -> Result<usize> {
    let gb = ideal.groebner(&TermOrder::Grevlex, budget)?;
    if gb.is_improper() {
        return Err(Error::ImproperIdeal);
    }
    let nvars = ideal.ring().nvars();
    assert!(nvars <= 64);
    let supports: Vec<u64> = gb
        .leading_monomials()
        .iter()
        .map(|m| m.support().fold(0u64, |acc, v| acc | (1 << v)))
        .collect();
    Ok(max_independent(nvars, &supports))
}

/// Codimension (height) of a proper ideal: `nvars - dim`.
pub fn codim(ideal: &Ideal, budget: &Budget) -> Result<usize> {
    Ok(ideal.ring().nvars() - dimension(ideal, budget)?)
}

/// Height equals the number of supplied generators.
pub fn is_complete_intersection(ideal: &Ideal, budget: &Budget) -> Result<bool> {
    Ok(codim(ideal, budget)? == ideal.num_gens())
}

/// Codimension of the singular locus of `V(I)`: the codimension of
/// `I + (size-c minors of the Jacobian of the generators)` with `c = codim I`.
pub fn singular_locus_codim(ideal: &Ideal, budget: &Budget) -> Result<usize> {
    let c = codim(ideal, budget)?;
    let gens = ideal.gens();
    let nvars = ideal.ring().nvars();
    if c == 0 {
        return Err(Error::Invalid("singular locus of the zero ideal".into()));
    }
    if c > gens.len() || c > nvars {
        return Err(Error::Invalid(format!(
            "codimension {c} exceeds the Jacobian format {}x{nvars}",
            gens.len()
        )));
    }
    let jac: Vec<Vec<Polynomial>> = gens
        .iter()
        .map(|g| (0..nvars).map(|v| g.derivative(v)).collect())
        .collect();

    let mut aug = ideal.gens().to_vec();
    let rows = subsets(gens.len(), c);
    let cols = subsets(nvars, c);
    for rs in &rows {
        for cs in &cols {
            let sub: Vec<Vec<Polynomial>> =
                rs.iter().map(|&r| cs.iter().map(|&cc| jac[r][cc].clone()).collect()).collect();
            let d = poly_det(&sub)?;
            if !d.is_zero() {
                aug.push(d);
            }
        }
    }
    let j = Ideal::new(ideal.ring(), aug)?;
    codim(&j, budget)
}

/// All size-`k` subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
