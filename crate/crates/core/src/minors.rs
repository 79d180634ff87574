//! Generic matrices and the ideals cut out by their minors: principal minor
//! ideals, determinantal ideals, cofactors and adjugates, the minor identity
//! for adjugates, the inversion duality on principal minors, and the
//! saturation ideal of the full-rank locus.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{saturate, subsets, Budget};
use crate::ideal::Ideal;
use crate::poly::{poly_det, Polynomial, Term};
use crate::ring::Ring;
use crate::scalar::{Field, Scalar};

/// Row and column index sets of equal size, 1-based and strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexPair {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl IndexPair {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<IndexPair> {
        if rows.len() != cols.len() {
            return Err(Error::Invalid("row and column sets differ in size".into()));
        }
        for set in [&rows, &cols] {
            if set.windows(2).any(|w| w[0] >= w[1]) || set.first().is_some_and(|&v| v < 1) {
                return Err(Error::Invalid(format!(
                    "index set {set:?} not strictly increasing from 1"
                )));
            }
        }
        Ok(IndexPair { rows, cols })
    }

    pub fn principal(set: Vec<usize>) -> Result<IndexPair> {
        IndexPair::new(set.clone(), set)
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn is_principal(&self) -> bool {
        self.rows == self.cols
    }

    /// The complementary pair inside `{1..n}`.
    pub fn complement(&self, n: usize) -> IndexPair {
        let rows = (1..=n).filter(|i| !self.rows.contains(i)).collect();
        let cols = (1..=n).filter(|j| !self.cols.contains(j)).collect();
        IndexPair { rows, cols }
    }

    /// Sum of all row and column indices, the cofactor sign exponent.
    pub fn sigma(&self) -> usize {
        self.rows.iter().sum::<usize>() + self.cols.iter().sum::<usize>()
    }
}

impl std::fmt::Display for IndexPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?};{:?})", self.rows, self.cols)
    }
}

/// The n-by-n matrix of variables `x[i,j]` over a fixed ring.
#[derive(Clone, Debug)]
pub struct GenericMatrix {
    ring: Arc<Ring>,
}

impl GenericMatrix {
    pub fn new(n: usize, field: Field) -> GenericMatrix {
        GenericMatrix { ring: Ring::matrix(n, field) }
    }

    pub fn from_ring(ring: &Arc<Ring>) -> GenericMatrix {
        GenericMatrix { ring: ring.base() }
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn entry(&self, i: usize, j: usize) -> Result<Polynomial> {
        Polynomial::var(&self.ring, i, j)
    }

    fn check(&self, p: &IndexPair) -> Result<()> {
        let n = self.n();
        if p.rows.iter().chain(&p.cols).any(|&v| v > n) {
            return Err(Error::OutOfRange(format!("{p} in a {n}x{n} matrix")));
        }
        Ok(())
    }

    /// Determinant of the submatrix selected by `p`; the empty pair gives 1.
    pub fn minor(&self, p: &IndexPair) -> Result<Polynomial> {
        self.check(p)?;
        if p.size() == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        let sub: Result<Vec<Vec<Polynomial>>> = p
            .rows
            .iter()
            .map(|&i| p.cols.iter().map(|&j| self.entry(i, j)).collect())
            .collect();
        poly_det(&sub?)
    }

    /// The determinant of the full matrix.
    pub fn determinant(&self) -> Polynomial {
        let full: Vec<usize> = (1..=self.n()).collect();
        self.minor(&IndexPair::principal(full).unwrap()).unwrap()
    }

    /// The signed complementary minor `(-1)^sigma * det X(rows^c; cols^c)`.
    pub fn cofactor(&self, p: &IndexPair) -> Result<Polynomial> {
        self.check(p)?;
        let comp = p.complement(self.n());
        let m = self.minor(&comp)?;
        if p.sigma() % 2 == 0 {
            Ok(m)
        } else {
            Ok(m.neg())
        }
    }

    /// The transpose of the cofactor matrix.
    pub fn adjugate(&self) -> Result<Vec<Vec<Polynomial>>> {
        let n = self.n();
        let mut adj = vec![vec![Polynomial::zero(&self.ring); n]; n];
        for i in 1..=n {
            for j in 1..=n {
                let p = IndexPair::new(vec![j], vec![i])?;
                adj[i - 1][j - 1] = self.cofactor(&p)?;
            }
        }
        Ok(adj)
    }
}

pub(crate) fn subsets_1based(n: usize, t: usize) -> Vec<Vec<usize>> {
    subsets(n, t)
        .into_iter()
        .map(|s| s.into_iter().map(|v| v + 1).collect())
        .collect()
}

/// The ideal generated by the size-`t` principal minors, one generator per
/// size-`t` subset of `{1..n}`.
pub fn principal_minor_ideal(n: usize, t: usize, field: Field) -> Result<Ideal> {
    if t < 1 || t > n {
        return Err(Error::OutOfRange(format!(
            "principal minors of size {t} in a {n}x{n} matrix"
        )));
    }
    let x = GenericMatrix::new(n, field);
    let gens: Result<Vec<Polynomial>> = subsets_1based(n, t)
        .into_iter()
        .map(|s| x.minor(&IndexPair::principal(s)?))
        .collect();
    Ideal::new(x.ring(), gens?)
}

/// The determinantal ideal generated by all size-`t` minors.
pub fn determinantal_ideal(n: usize, t: usize, field: Field) -> Result<Ideal> {
    if t < 1 || t > n {
        return Err(Error::OutOfRange(format!("minors of size {t} in a {n}x{n} matrix")));
    }
    let x = GenericMatrix::new(n, field);
    let sets = subsets_1based(n, t);
    let mut gens = Vec::with_capacity(sets.len() * sets.len());
    for rows in &sets {
        for cols in &sets {
            gens.push(x.minor(&IndexPair::new(rows.clone(), cols.clone())?)?);
        }
    }
    Ideal::new(x.ring(), gens)
}

/// Checks the adjugate-minor identity symbolically for every pair of size-`t`
/// index sets: the minor of Adj(X) on rows `i`, columns `j` equals
/// `det(X)^(t-1)` times the `(j,i)` cofactor of `X`.
pub fn muir_verify(n: usize, t: usize, field: Field) -> Result<bool> {
    if t < 1 || t > n {
        return Err(Error::OutOfRange(format!("muir({n},{t})")));
    }
    if n > 4 {
        return Err(Error::Budget { what: "muir matrix size", limit: 4 });
    }
    let x = GenericMatrix::new(n, field);
    let adj = x.adjugate()?;
    let delta_pow = x.determinant().pow(t as u32 - 1);
    let sets = subsets_1based(n, t);
    for rows in &sets {
        for cols in &sets {
            let sub: Vec<Vec<Polynomial>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| adj[i - 1][j - 1].clone()).collect())
                .collect();
            let lhs = poly_det(&sub)?;
            let swapped = IndexPair::new(cols.clone(), rows.clone())?;
            let rhs = delta_pow.mul(&x.cofactor(&swapped)?);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks the inversion duality on principal minors: for every size-`t`
/// subset S, the principal minor of Adj(X) on S equals `det(X)^(t-1)` times
/// the complementary principal minor of X. This is the denominator-cleared
/// form of the statement that inverting X swaps size-t and size-(n-t)
/// principal minors up to a power of the determinant.
pub fn inversion_duality_verify(n: usize, t: usize, field: Field) -> Result<bool> {
    if t < 1 || t >= n {
        return Err(Error::OutOfRange(format!("duality({n},{t})")));
    }
    if n > 4 {
        return Err(Error::Budget { what: "duality matrix size", limit: 4 });
    }
    let x = GenericMatrix::new(n, field);
    let adj = x.adjugate()?;
    let delta_pow = x.determinant().pow(t as u32 - 1);
    for s in subsets_1based(n, t) {
        let sub: Vec<Vec<Polynomial>> = s
            .iter()
            .map(|&i| s.iter().map(|&j| adj[i - 1][j - 1].clone()).collect())
            .collect();
        let lhs = poly_det(&sub)?;
        let comp = IndexPair::principal(s)?.complement(n);
        let rhs = delta_pow.mul(&x.minor(&comp)?);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The saturation of the size-(n-1) principal minor ideal by the
/// determinant: the defining ideal of the closure of its full-rank points.
pub fn q_ideal(n: usize, field: Field, budget: &Budget) -> Result<Ideal> {
    if !(2..=4).contains(&n) {
        return Err(Error::Budget { what: "q_ideal matrix size", limit: 4 });
    }
    let p = principal_minor_ideal(n, n - 1, field)?;
    let delta = GenericMatrix::new(n, field).determinant();
    saturate(&p, &delta, budget)
}

/// The degree-4 polynomial that, together with the principal 3-minors,
/// generates the saturation ideal for n = 4. Hard-coded by its six signed
/// terms; the identification with the computed saturation is re-verified by
/// the check suite.
pub fn f_polynomial(ring: &Arc<Ring>) -> Result<Polynomial> {
    if ring.n() != 4 || ring.aux() != 0 {
        return Err(Error::Invalid("the quartic generator lives in the 4x4 matrix ring".into()));
    }
    let spec: [(i64, [(usize, usize); 4]); 6] = [
        (-1, [(1, 4), (2, 1), (3, 3), (4, 2)]),
        (1, [(1, 1), (2, 3), (3, 4), (4, 2)]),
        (1, [(1, 4), (2, 2), (3, 1), (4, 3)]),
        (-1, [(1, 1), (2, 2), (3, 4), (4, 3)]),
        (-1, [(1, 2), (2, 3), (3, 1), (4, 4)]),
        (1, [(1, 2), (2, 1), (3, 3), (4, 4)]),
    ];
    let field = ring.field();
    let mut terms = Vec::with_capacity(6);
    for (sign, vars) in spec {
        let mut exps = vec![0u16; ring.nvars()];
        for (i, j) in vars {
            exps[ring.var(i, j)?] += 1;
        }
        terms.push(Term {
            coeff: field.from_i64(sign),
            mon: crate::monomial::Monomial::from_exps(&exps),
        });
    }
    Ok(Polynomial::from_terms(ring, terms))
}

/// An n-by-n matrix of field elements, used as a witness point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessMatrix {
    n: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl WitnessMatrix {
    pub fn from_rows(rows: &[Vec<i64>], field: Field) -> Result<WitnessMatrix> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("witness matrix must be square".into()));
        }
        let entries = rows.iter().flatten().map(|&v| field.from_i64(v)).collect();
        Ok(WitnessMatrix { n, field, entries })
    }

    /// Parses a whitespace/semicolon-delimited integer grid, rows split by
    /// `;` or newlines.
    pub fn parse(text: &str, field: Field) -> Result<WitnessMatrix> {
        let rows: Result<Vec<Vec<i64>>> = text
            .split(|c| c == ';' || c == '\n')
            .map(str::trim)
            .filter(|r| !r.is_empty())
            .map(|r| {
                r.split_whitespace()
                    .map(|tok| {
                        tok.parse::<i64>()
                            .map_err(|_| Error::Invalid(format!("bad matrix entry `{tok}`")))
                    })
                    .collect()
            })
            .collect();
        WitnessMatrix::from_rows(&rows?, field)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    /// Swaps two 1-based rows.
    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.n {
            self.entries.swap((a - 1) * self.n + j, (b - 1) * self.n + j);
        }
    }

    /// Variable assignment for polynomials over a matching ring; auxiliary
    /// variables stay unassigned.
    pub fn assignment(&self, ring: &Arc<Ring>) -> Result<Vec<Option<Scalar>>> {
        if ring.n() != self.n || ring.field() != self.field {
            return Err(Error::RingMismatch(format!(
                "witness {}x{} over {}",
                self.n, self.n, self.field
            )));
        }
        let mut point = vec![None; ring.nvars()];
        for idx in 0..self.n * self.n {
            point[idx] = Some(self.entries[idx].clone());
        }
        Ok(point)
    }

    /// Evaluates a polynomial at this matrix.
    pub fn eval(&self, f: &Polynomial) -> Result<Scalar> {
        f.evaluate(&self.assignment(f.ring())?)
    }
}

impl std::fmt::Display for WitnessMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<String> = (1..=self.n)
            .map(|i| {
                (1..=self.n)
                    .map(|j| self.get(i, j).to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", rows.join("; "))
    }
}

/// The 0/1 matrix of a permutation (entry (i, perm(i)) is 1), plus whether
/// the permutation is fixed-point-free.
pub fn permutation_witness(perm: &[usize], field: Field) -> Result<(WitnessMatrix, bool)> {
    let n = perm.len();
    let mut seen = vec![false; n + 1];
    for &v in perm {
        if v < 1 || v > n || seen[v] {
            return Err(Error::Invalid(format!("{perm:?} is not a permutation of 1..={n}")));
        }
        seen[v] = true;
    }
    let mut rows = vec![vec![0i64; n]; n];
    let mut derangement = true;
    for (i, &v) in perm.iter().enumerate() {
        rows[i][v - 1] = 1;
        if v == i + 1 {
            derangement = false;
        }
    }
    Ok((WitnessMatrix::from_rows(&rows, field)?, derangement))
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// The full-rank 0/1 witness matrix whose principal 3-minors all vanish.
pub fn full_rank_vanishing_witness(field: Field) -> WitnessMatrix {
    WitnessMatrix::from_rows(
        &[
            vec![0, 0, 0, 1],
            vec![1, 1, 1, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 0],
        ],
        field,
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{eq_ideal, ideal_member};
    use crate::poly::multidegree;

    const Q: Field = Field::Rational;

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn single_entry_and_full_minors() {
        let x = GenericMatrix::new(3, Q);
        let m = x.minor(&IndexPair::principal(vec![1]).unwrap()).unwrap();
        assert_eq!(m, x.entry(1, 1).unwrap());
        let full = x.minor(&IndexPair::principal(vec![1, 2, 3]).unwrap()).unwrap();
        assert_eq!(full, x.determinant());
        assert!(x.minor(&IndexPair::principal(vec![4]).unwrap()).is_err());
    }

    #[test]
    fn index_pair_validation() {
        assert!(IndexPair::new(vec![1, 2], vec![1]).is_err());
        assert!(IndexPair::new(vec![2, 1], vec![1, 2]).is_err());
        assert!(IndexPair::new(vec![0, 1], vec![1, 2]).is_err());
        let p = IndexPair::new(vec![1, 3], vec![2, 4]).unwrap();
        assert_eq!(p.sigma(), 10);
        assert_eq!(p.complement(4).rows(), &[2, 4]);
        assert!(!p.is_principal());
    }

    #[test]
    fn ideal_generator_counts() {
        assert_eq!(principal_minor_ideal(2, 2, Q).unwrap().num_gens(), 1);
        assert_eq!(principal_minor_ideal(4, 1, Q).unwrap().num_gens(), 4);
        assert_eq!(principal_minor_ideal(4, 3, Q).unwrap().num_gens(), 4);
        assert_eq!(determinantal_ideal(2, 1, Q).unwrap().num_gens(), 4);
        assert_eq!(determinantal_ideal(4, 3, Q).unwrap().num_gens(), 16);
        assert!(principal_minor_ideal(3, 4, Q).is_err());
        assert!(determinantal_ideal(3, 0, Q).is_err());
    }

    #[test]
    fn p1_generators_are_diagonal() {
        let p1 = principal_minor_ideal(3, 1, Q).unwrap();
        let r = p1.ring();
        for (k, g) in p1.gens().iter().enumerate() {
            assert_eq!(*g, Polynomial::var(r, k + 1, k + 1).unwrap());
        }
    }

    #[test]
    fn cofactor_signs_2x2() {
        let x = GenericMatrix::new(2, Q);
        let c11 = x.cofactor(&IndexPair::new(vec![1], vec![1]).unwrap()).unwrap();
        assert_eq!(c11, x.entry(2, 2).unwrap());
        let c12 = x.cofactor(&IndexPair::new(vec![1], vec![2]).unwrap()).unwrap();
        assert_eq!(c12, x.entry(2, 1).unwrap().neg());
    }

    #[test]
    fn adjugate_2x2_closed_form() {
        let x = GenericMatrix::new(2, Q);
        let adj = x.adjugate().unwrap();
        assert_eq!(adj[0][0], x.entry(2, 2).unwrap());
        assert_eq!(adj[0][1], x.entry(1, 2).unwrap().neg());
        assert_eq!(adj[1][0], x.entry(2, 1).unwrap().neg());
        assert_eq!(adj[1][1], x.entry(1, 1).unwrap());
    }

    #[test]
    fn adjugate_identity_symbolic_3x3() {
        // X * Adj(X) = Adj(X) * X = det(X) * I, expanded symbolically.
        let x = GenericMatrix::new(3, Q);
        let adj = x.adjugate().unwrap();
        let delta = x.determinant();
        for i in 1..=3 {
            for j in 1..=3 {
                let mut left = Polynomial::zero(x.ring());
                let mut right = Polynomial::zero(x.ring());
                for k in 1..=3 {
                    left = left.add(&x.entry(i, k).unwrap().mul(&adj[k - 1][j - 1]));
                    right = right.add(&adj[i - 1][k - 1].mul(&x.entry(k, j).unwrap()));
                }
                let expect = if i == j { delta.clone() } else { Polynomial::zero(x.ring()) };
                assert_eq!(left, expect);
                assert_eq!(right, expect);
            }
        }
    }

    #[test]
    fn det_of_adjugate_is_delta_squared_3x3() {
        let x = GenericMatrix::new(3, Q);
        let adj = x.adjugate().unwrap();
        assert_eq!(poly_det(&adj).unwrap(), x.determinant().pow(2));
    }

    #[test]
    fn muir_small_cases() {
        assert!(muir_verify(2, 1, Q).unwrap());
        assert!(muir_verify(2, 2, Q).unwrap());
        assert!(muir_verify(3, 1, Q).unwrap());
        assert!(muir_verify(3, 2, Q).unwrap());
        assert!(muir_verify(3, 3, Q).unwrap());
        assert!(muir_verify(5, 1, Q).is_err());
    }

    #[test]
    fn duality_small_cases() {
        assert!(inversion_duality_verify(2, 1, Q).unwrap());
        assert!(inversion_duality_verify(3, 1, Q).unwrap());
        assert!(inversion_duality_verify(3, 2, Q).unwrap());
        assert!(inversion_duality_verify(3, 3, Q).is_err());
    }

    #[test]
    fn q_ideal_small() {
        // n=2: the diagonal ideal is prime and the determinant avoids it.
        let q2 = q_ideal(2, Q, &b()).unwrap();
        let p1 = principal_minor_ideal(2, 1, Q).unwrap();
        assert!(eq_ideal(&q2, &p1, &b()).unwrap());
        assert!(q_ideal(5, Q, &b()).is_err());
    }

    #[test]
    fn q_ideal_n3_is_p2() {
        let f = Field::Prime(32003);
        let q3 = q_ideal(3, f, &b()).unwrap();
        let p2 = principal_minor_ideal(3, 2, f).unwrap();
        assert!(eq_ideal(&q3, &p2, &b()).unwrap());
    }

    #[test]
    fn quartic_generator_shape() {
        let ring = Ring::matrix(4, Q);
        let f = f_polynomial(&ring).unwrap();
        assert_eq!(f.num_terms(), 6);
        assert_eq!(f.total_degree(), Some(4));
        let d = multidegree(&f).unwrap().unwrap();
        assert_eq!(d.rows, vec![1, 1, 1, 1]);
        assert_eq!(d.cols, vec![1, 1, 1, 1]);
        // evaluates to zero at the identity: every term has an off-diagonal factor
        let id = WitnessMatrix::from_rows(
            &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]],
            Q,
        )
        .unwrap();
        assert!(id.eval(&f).unwrap().is_zero());
        assert!(f_polynomial(&Ring::matrix(3, Q)).is_err());
    }

    #[test]
    fn rank_witness_matrix_checks() {
        let w = full_rank_vanishing_witness(Q);
        let x = GenericMatrix::new(4, Q);
        assert_eq!(w.eval(&x.determinant()).unwrap(), Q.from_i64(-1));
        for s in subsets_1based(4, 3) {
            let m = x.minor(&IndexPair::principal(s).unwrap()).unwrap();
            assert!(w.eval(&m).unwrap().is_zero());
        }
    }

    #[test]
    fn permutation_witnesses() {
        // 3-cycle: principal 2-minors vanish, determinant 1.
        let (w, der) = permutation_witness(&[2, 3, 1], Q).unwrap();
        assert!(der);
        let x = GenericMatrix::new(3, Q);
        for s in subsets_1based(3, 2) {
            let m = x.minor(&IndexPair::principal(s).unwrap()).unwrap();
            assert!(w.eval(&m).unwrap().is_zero());
        }
        assert!(w.eval(&x.determinant()).unwrap().is_one());

        // identity permutation: not in V(P_1)
        let (id, der) = permutation_witness(&[1, 2, 3], Q).unwrap();
        assert!(!der);
        assert!(!id.eval(&x.entry(1, 1).unwrap()).unwrap().is_zero());

        assert!(permutation_witness(&[1, 1, 3], Q).is_err());
    }

    #[test]
    fn minor_sign_flips_under_row_swap() {
        let x = GenericMatrix::new(4, Field::Prime(101));
        let pair = IndexPair::new(vec![1, 3], vec![2, 4]).unwrap();
        let m = x.minor(&pair).unwrap();
        let mut w = WitnessMatrix::from_rows(
            &[vec![3, 1, 4, 1], vec![5, 9, 2, 6], vec![5, 3, 5, 8], vec![9, 7, 9, 3]],
            Field::Prime(101),
        )
        .unwrap();
        let before = w.eval(&m).unwrap();
        w.swap_rows(1, 3);
        let after = w.eval(&m).unwrap();
        assert_eq!(after, before.neg());
    }

    #[test]
    fn principal_minors_sit_inside_determinantal_ideal() {
        for (n, t) in [(3, 2), (4, 3)] {
            let f = Field::Prime(32003);
            let p = principal_minor_ideal(n, t, f).unwrap();
            let i = determinantal_ideal(n, t, f).unwrap();
            for g in p.gens() {
                assert!(ideal_member(g, &i, &b()).unwrap());
            }
        }
    }

    #[test]
    fn conjugation_by_permutation_preserves_principal_minor_generators() {
        // x_{ij} -> x_{perm(i)perm(j)} maps each principal minor generator
        // to plus or minus another one.
        for n in [3usize, 4] {
            let p = principal_minor_ideal(n, n - 1, Q).unwrap();
            let ring = p.ring();
            let cycles: Vec<Vec<usize>> = vec![(1..=n).rev().collect(), {
                let mut v: Vec<usize> = (2..=n).collect();
                v.push(1);
                v
            }];
            for perm in cycles {
                for g in p.gens() {
                    let terms = g
                        .terms()
                        .iter()
                        .map(|t| {
                            let mut exps = vec![0u16; ring.nvars()];
                            for idx in t.mon.support() {
                                let (i, j) = ring.row_col(idx).unwrap();
                                let tgt = ring.var(perm[i - 1], perm[j - 1]).unwrap();
                                exps[tgt] = t.mon.exp(idx);
                            }
                            Term {
                                coeff: t.coeff.clone(),
                                mon: crate::monomial::Monomial::from_exps(&exps),
                            }
                        })
                        .collect();
                    let mapped = Polynomial::from_terms(ring, terms);
                    let hit = p.gens().iter().any(|h| mapped == *h || mapped == h.neg());
                    assert!(hit, "conjugated generator escaped the set");
                }
            }
        }
    }
}
