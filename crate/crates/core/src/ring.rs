//! Ring contexts: the polynomial ring in the entries of an n-by-n generic
//! matrix, optionally extended by auxiliary elimination variables.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Field;

/// The ambient polynomial ring `K[x_ij]`. Variables are indexed row-major:
/// `x[i,j]` has index `(i-1)*n + (j-1)`, and `x[1,1] > x[1,2] > ... > x[n,n]`
/// in the variable precedence. Auxiliary variables (used for elimination
/// tricks) come after all matrix entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    n: usize,
    aux: usize,
    field: Field,
}

impl Ring {
    pub fn matrix(n: usize, field: Field) -> Arc<Ring> {
        assert!(n >= 1, "matrix ring needs n >= 1");
        Arc::new(Ring { n, aux: 0, field })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn aux(&self) -> usize {
        self.aux
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.n * self.n + self.aux
    }

    /// Index of `x[i,j]`, 1-based.
    pub fn var(&self, i: usize, j: usize) -> Result<usize> {
        if i < 1 || i > self.n || j < 1 || j > self.n {
            return Err(Error::OutOfRange(format!("x[{i},{j}] in a {0}x{0} ring", self.n)));
        }
        Ok((i - 1) * self.n + (j - 1))
    }

    /// Index of the k-th auxiliary variable, 0-based.
    pub fn aux_var(&self, k: usize) -> usize {
        assert!(k < self.aux);
        self.n * self.n + k
    }

    /// Row and column (1-based) for a matrix variable; `None` for auxiliary.
    pub fn row_col(&self, idx: usize) -> Option<(usize, usize)> {
        if idx < self.n * self.n {
            Some((idx / self.n + 1, idx % self.n + 1))
        } else {
            None
        }
    }

    pub fn var_name(&self, idx: usize) -> String {
        match self.row_col(idx) {
            Some((i, j)) => format!("x[{i},{j}]"),
            None => {
                let k = idx - self.n * self.n;
                if self.aux == 1 {
                    "t".to_string()
                } else {
                    format!("t{}", k + 1)
                }
            }
        }
    }

    /// The same ring with one more auxiliary variable.
    pub fn extended(self: &Arc<Ring>) -> Arc<Ring> {
        Arc::new(Ring { n: self.n, aux: self.aux + 1, field: self.field })
    }

    /// The underlying matrix ring without auxiliary variables.
    pub fn base(self: &Arc<Ring>) -> Arc<Ring> {
        if self.aux == 0 {
            Arc::clone(self)
        } else {
            Arc::new(Ring { n: self.n, aux: 0, field: self.field })
        }
    }

    pub fn same(a: &Arc<Ring>, b: &Arc<Ring>) -> Result<()> {
        if a == b {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{a} vs {b}", a = a, b = b)))
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}x{}]", self.field, self.n, self.n)?;
        if self.aux > 0 {
            write!(f, "+{}aux", self.aux)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn var_indexing_row_major() {
        let r = Ring::matrix(3, Field::Rational);
        assert_eq!(r.var(1, 1).unwrap(), 0);
        assert_eq!(r.var(1, 3).unwrap(), 2);
        assert_eq!(r.var(2, 1).unwrap(), 3);
        assert_eq!(r.var(3, 3).unwrap(), 8);
        assert!(r.var(0, 1).is_err());
        assert!(r.var(1, 4).is_err());
        assert_eq!(r.row_col(5), Some((2, 3)));
    }

    #[test]
    fn extension_and_names() {
        let r = Ring::matrix(2, Field::Prime(5));
        let e = r.extended();
        assert_eq!(e.nvars(), 5);
        assert_eq!(e.var_name(4), "t");
        assert_eq!(e.base(), r);
        assert!(Ring::same(&r, &e).is_err());
    }
}
