//! Ideals: generator lists with a ring context and cached reduced Groebner
//! bases keyed by term order.

use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::groebner::{Budget, GroebnerBasis};
use crate::monomial::TermOrder;
use crate::parse::{parse_poly, print_poly};
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::scalar::Field;

#[derive(Clone)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    // Shared across clones: the clones denote the same ideal.
    cache: Arc<RwLock<BTreeMap<TermOrder, Arc<GroebnerBasis>>>>,
}

impl Ideal {
    /// Builds an ideal from generators; zero generators are dropped.
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            Ring::same(ring, g.ring())?;
        }
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal {
            ring: Arc::clone(ring),
            gens,
            cache: Arc::new(RwLock::new(BTreeMap::new())),
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// The reduced Groebner basis under `ord`, computed on demand and cached.
    pub fn groebner(&self, ord: &TermOrder, budget: &Budget) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cache.read().unwrap().get(ord) {
            return Ok(Arc::clone(gb));
        }
        let gb = Arc::new(crate::groebner::buchberger(&self.ring, &self.gens, ord, budget)?);
        let mut cache = self.cache.write().unwrap();
        let entry = cache.entry(ord.clone()).or_insert_with(|| Arc::clone(&gb));
        Ok(Arc::clone(entry))
    }

    /// Seeds the cache with a basis known to be the reduced GB for `ord`.
    pub(crate) fn seed_cache(&self, ord: TermOrder, gb: GroebnerBasis) {
        self.cache.write().unwrap().insert(ord, Arc::new(gb));
    }

    /// Serializes to the ideal file format: a `ring` header line then one
    /// generator per line; `#` starts a comment.
    pub fn to_file_string(&self) -> String {
        let field = self.ring.field();
        let mut out = format!("ring n={} field={}\n", self.ring.n(), field);
        for g in &self.gens {
            // Over Q, the primitive integer form keeps the text inside the
            // grammar; prime-field coefficients print verbatim.
            let printable = match field {
                Field::Rational => g.primitive(),
                Field::Prime(_) => g.clone(),
            };
            out.push_str(&print_poly(&printable, &TermOrder::Grevlex));
            out.push('\n');
        }
        out
    }

    /// Parses the ideal file format.
    pub fn from_file_string(text: &str) -> Result<Ideal> {
        let mut ring: Option<Arc<Ring>> = None;
        let mut gens = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(k) => &raw[..k],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("ring") {
                let mut n: Option<usize> = None;
                let mut field: Option<Field> = None;
                for tok in rest.split_whitespace() {
                    if let Some(v) = tok.strip_prefix("n=") {
                        n = Some(v.parse().map_err(|_| Error::Parse {
                            pos: lineno,
                            msg: format!("bad n in header: {v}"),
                        })?);
                    } else if let Some(v) = tok.strip_prefix("field=") {
                        field = Some(Field::parse(v)?);
                    } else {
                        return Err(Error::Parse {
                            pos: lineno,
                            msg: format!("unexpected header token {tok}"),
                        });
                    }
                }
                let n = n.ok_or_else(|| Error::Parse { pos: lineno, msg: "header missing n=".into() })?;
                let field = field
                    .ok_or_else(|| Error::Parse { pos: lineno, msg: "header missing field=".into() })?;
                ring = Some(Ring::matrix(n, field));
                continue;
            }
            let ring = ring.as_ref().ok_or_else(|| Error::Parse {
                pos: lineno,
                msg: "generator before ring header".into(),
            })?;
            gens.push(parse_poly(ring, line)?);
        }
        let ring = ring.ok_or_else(|| Error::Parse { pos: 0, msg: "missing ring header".into() })?;
        Ideal::new(&ring, gens)
    }

    pub fn write_file(&self, path: &std::path::Path) -> Result<()> {
        std::fs::write(path, self.to_file_string())?;
        Ok(())
    }

    pub fn read_file(path: &std::path::Path) -> Result<Ideal> {
        let text = std::fs::read_to_string(path)?;
        Ideal::from_file_string(&text)
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ideal({} gens over {})", self.gens.len(), self.ring)
    }
}
