//! Binomial-ideal machinery for the toric primality certificate: exponent
//! lattices of binomial generators, lattice saturation via the Smith normal
//! form over the integers, and lattice ideals by saturating at the
//! coordinate hyperplanes.
//!
//! A proper binomial ideal equal to the lattice ideal of a saturated lattice
//! is the toric ideal of a semigroup ring, hence prime over every field.

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::{eq_ideal, saturate, Budget};
use crate::ideal::Ideal;
use crate::minors::principal_minor_ideal;
use crate::poly::{Polynomial, Term};
use crate::ring::Ring;
use crate::scalar::Field;

/// An integer lattice spanned by rows of exponent-difference vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerLattice {
    ncols: usize,
    rows: Vec<Vec<BigInt>>,
}

impl IntegerLattice {
    pub fn new(ncols: usize, rows: Vec<Vec<BigInt>>) -> Result<IntegerLattice> {
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Invalid("lattice rows of unequal width".into()));
        }
        Ok(IntegerLattice { ncols, rows })
    }

    pub fn from_i64(ncols: usize, rows: &[Vec<i64>]) -> Result<IntegerLattice> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        IntegerLattice::new(ncols, rows)
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|v| v.is_zero()))
    }

    pub fn rank(&self) -> usize {
        smith_normal_form(&self.rows, self.ncols)
            .iter()
            .filter(|d| !d.is_zero())
            .count()
    }
}

impl std::fmt::Display for IntegerLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Invariant factors (the diagonal of the Smith normal form), normalized
/// non-negative with each dividing the next; trailing zeros included up to
/// `min(rows, cols)`.
pub fn smith_normal_form(rows: &[Vec<BigInt>], ncols: usize) -> Vec<BigInt> {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let nr = m.len();
    let nc = ncols;
    let k = nr.min(nc);
    let mut out = Vec::with_capacity(k);
    let mut top = 0usize;

    while top < k {
        // find a nonzero pivot of minimal absolute value
        let mut pivot: Option<(usize, usize)> = None;
        for i in top..nr {
            for j in top..nc {
                if !m[i][j].is_zero()
                    && pivot.is_none_or(|(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break;
        };
        m.swap(top, pi);
        for row in m.iter_mut() {
            row.swap(top, pj);
        }

        // clear the pivot row and column by division steps
        let mut dirty = true;
        while dirty {
            dirty = false;
            for i in top + 1..nr {
                if m[i][top].is_zero() {
                    continue;
                }
                let q = &m[i][top] / &m[top][top];
                for j in top..nc {
                    let sub = &q * &m[top][j];
                    m[i][j] -= sub;
                }
                if !m[i][top].is_zero() {
                    // remainder smaller than pivot: swap up and restart
                    m.swap(top, i);
                    dirty = true;
                }
            }
            for j in top + 1..nc {
                if m[top][j].is_zero() {
                    continue;
                }
                let q = &m[top][j] / &m[top][top];
                for row in m.iter_mut().take(nr).skip(top) {
                    let sub = &q * &row[top];
                    row[j] -= sub;
                }
                if !m[top][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(top, j);
                    }
                    dirty = true;
                }
            }
        }
        top += 1;
    }

    for d in 0..k {
        out.push(m[d][d].abs());
    }
    // enforce the divisibility chain d1 | d2 | ...
    for i in 0..k {
        for j in i + 1..k {
            if out[i].is_zero() && out[j].is_zero() {
                continue;
            }
            let g = out[i].gcd(&out[j]);
            let l = if g.is_zero() { BigInt::zero() } else { (&out[i] * &out[j]) / &g };
            out[i] = g;
            out[j] = l;
        }
    }
    out
}

/// Reads off one lattice row `u - v` per binomial generator `x^u - x^v`.
/// Every generator must be a difference of two monomials with unit
/// coefficients.
pub fn binomial_exponent_lattice(ideal: &Ideal) -> Result<IntegerLattice> {
    let nvars = ideal.ring().nvars();
    let mut rows = Vec::with_capacity(ideal.num_gens());
    for g in ideal.gens() {
        let terms = g.terms();
        let ok = terms.len() == 2
            && ((terms[0].coeff.is_one() && terms[1].coeff.is_minus_one())
                || (terms[0].coeff.is_minus_one() && terms[1].coeff.is_one()));
        if !ok {
            return Err(Error::NonBinomial(g.to_string()));
        }
        let (plus, minus) = if terms[0].coeff.is_one() {
            (&terms[0].mon, &terms[1].mon)
        } else {
            (&terms[1].mon, &terms[0].mon)
        };
        let row: Vec<BigInt> = (0..nvars)
            .map(|v| BigInt::from(plus.exp(v) as i64 - minus.exp(v) as i64))
            .collect();
        rows.push(row);
    }
    IntegerLattice::new(nvars, rows)
}

/// True iff the lattice is saturated in the ambient integer lattice:
/// `q*v` in L for a nonzero integer q forces `v` in L. Equivalently all
/// nonzero invariant factors equal 1.
pub fn lattice_is_saturated(lattice: &IntegerLattice) -> Result<bool> {
    if lattice.is_zero() {
        return Err(Error::Invalid("saturation of the zero lattice".into()));
    }
    let inv = smith_normal_form(&lattice.rows, lattice.ncols);
    Ok(inv.iter().all(|d| d.is_zero() || d.is_one()))
}

fn basis_binomial(ring: &std::sync::Arc<Ring>, row: &[BigInt]) -> Polynomial {
    let field = ring.field();
    let mut plus = vec![0u16; ring.nvars()];
    let mut minus = vec![0u16; ring.nvars()];
    for (v, e) in row.iter().enumerate() {
        if e.is_positive() {
            plus[v] = u16::try_from(e).expect("exponent too large");
        } else if e.is_negative() {
            minus[v] = u16::try_from(-e).expect("exponent too large");
        }
    }
    Polynomial::from_terms(
        ring,
        vec![
            Term { coeff: field.one(), mon: crate::monomial::Monomial::from_exps(&plus) },
            Term {
                coeff: field.one().neg(),
                mon: crate::monomial::Monomial::from_exps(&minus),
            },
        ],
    )
}

/// The lattice ideal: the basis binomials `x^(u+) - x^(u-)` saturated at
/// every coordinate, i.e. by `(prod x_i)^infinity` one variable at a time.
pub fn lattice_ideal(
    lattice: &IntegerLattice,
    ring: &std::sync::Arc<Ring>,
    budget: &Budget,
) -> Result<Ideal> {
    if lattice.is_zero() {
        return Err(Error::Invalid("ideal of the zero lattice".into()));
    }
    if lattice.ncols != ring.nvars() {
        return Err(Error::RingMismatch(format!(
            "lattice width {} vs ring width {}",
            lattice.ncols,
            ring.nvars()
        )));
    }
    let gens: Vec<Polynomial> =
        lattice.rows.iter().map(|row| basis_binomial(ring, row)).collect();
    let mut ideal = Ideal::new(ring, gens)?;
    for v in 0..ring.nvars() {
        let x = Polynomial::var_by_index(ring, v);
        ideal = saturate(&ideal, &x, budget)?;
    }
    Ok(ideal)
}

/// Outcome of the three-part toric primality certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimalityCertificate {
    pub binomial_generators: bool,
    pub lattice_saturated: bool,
    pub lattice_ideal_matches: bool,
}

impl PrimalityCertificate {
    pub fn holds(&self) -> bool {
        self.binomial_generators && self.lattice_saturated && self.lattice_ideal_matches
    }
}

/// Certifies that the principal 2-minor ideal is prime: (a) its generators
/// are unit binomials, (b) their exponent lattice is saturated, (c) the
/// lattice ideal recovers the ideal itself. Together these exhibit the
/// quotient as a semigroup ring over any coefficient field.
pub fn p2_prime_certificate(n: usize, field: Field, budget: &Budget) -> Result<PrimalityCertificate> {
    if !(2..=4).contains(&n) {
        return Err(Error::Budget { what: "p2 certificate matrix size", limit: 4 });
    }
    let p2 = principal_minor_ideal(n, 2, field)?;
    let lattice = match binomial_exponent_lattice(&p2) {
        Ok(l) => l,
        Err(Error::NonBinomial(_)) => {
            return Ok(PrimalityCertificate {
                binomial_generators: false,
                lattice_saturated: false,
                lattice_ideal_matches: false,
            })
        }
        Err(e) => return Err(e),
    };
    let saturated = lattice_is_saturated(&lattice)?;
    let lid = lattice_ideal(&lattice, p2.ring(), budget)?;
    let matches = eq_ideal(&lid, &p2, budget)?;
    Ok(PrimalityCertificate {
        binomial_generators: true,
        lattice_saturated: saturated,
        lattice_ideal_matches: matches,
    })
}
