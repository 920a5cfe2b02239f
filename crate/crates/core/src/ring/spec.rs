use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::RingError;

/// Compositional description of a finite ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingSpec {
    /// Integers modulo `n`.
    Zn(usize),
    /// The field with `p^k` elements.
    Gf { p: usize, k: usize },
    /// Full `n x n` matrices over `base`.
    Mat { n: usize, base: Box<RingSpec> },
    /// Upper triangular `n x n` matrices over a finite field.
    Tri { n: usize, base: Box<RingSpec> },
    /// Direct product; the first factor is the most significant digit of an id.
    Prod(Vec<RingSpec>),
    /// Explicit operation tables.
    Table(Arc<TableSpec>),
}

/// Operation tables of a ring given by enumeration. Tables are row-major and
/// 0-indexed: `add[a][b]` is the id of `a + b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableSpec {
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
    /// Where the tables were loaded from, used when printing the spec.
    #[serde(skip)]
    pub source: Option<String>,
}

impl TableSpec {
    pub fn from_json(text: &str) -> Result<Self, RingError> {
        serde_json::from_str(text).map_err(|e| RingError::TableFormat(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, RingError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| RingError::TableFormat(format!("{}: {e}", path.display())))?;
        let mut t = Self::from_json(&text)?;
        t.source = Some(path.display().to_string());
        Ok(t)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table spec serializes")
    }
}

impl RingSpec {
    pub fn gf(q: usize) -> Option<RingSpec> {
        super::gf::prime_power(q).map(|(p, k)| RingSpec::Gf { p, k: k as usize })
    }

    pub fn mat(n: usize, base: RingSpec) -> RingSpec {
        RingSpec::Mat { n, base: Box::new(base) }
    }

    pub fn tri(n: usize, base: RingSpec) -> RingSpec {
        RingSpec::Tri { n, base: Box::new(base) }
    }

    pub fn table(t: TableSpec) -> RingSpec {
        RingSpec::Table(Arc::new(t))
    }

    /// Number of elements, or `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        match self {
            RingSpec::Zn(n) => Some(*n as u128),
            RingSpec::Gf { p, k } => (*p as u128).checked_pow(*k as u32),
            RingSpec::Mat { n, base } => base.order()?.checked_pow((n * n) as u32),
            RingSpec::Tri { n, base } => base.order()?.checked_pow((n * (n + 1) / 2) as u32),
            RingSpec::Prod(fs) => fs.iter().try_fold(1u128, |acc, f| acc.checked_mul(f.order()?)),
            RingSpec::Table(t) => Some(t.order as u128),
        }
    }

    /// True for `GF(q)` and `Z(p)` with `p` prime.
    pub fn is_field(&self) -> bool {
        match self {
            RingSpec::Gf { .. } => true,
            RingSpec::Zn(n) => super::gf::is_prime(*n),
            _ => false,
        }
    }

    fn fmt_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Prod(_) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }
}

impl fmt::Display for RingSpec {
    /// Prints the ring-expression syntax accepted by the parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zn(n) => write!(f, "Z({n})"),
            RingSpec::Gf { p, k: 1 } => write!(f, "GF({p})"),
            RingSpec::Gf { p, k } => write!(f, "GF({p},{k})"),
            RingSpec::Mat { n, base } => write!(f, "M({n},{base})"),
            RingSpec::Tri { n, base } => write!(f, "T({n},{base})"),
            RingSpec::Prod(fs) => {
                for (i, factor) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    factor.fmt_factor(f)?;
                }
                Ok(())
            }
            RingSpec::Table(t) => match &t.source {
                Some(src) => write!(f, "@{src}"),
                None => write!(f, "@<table:{}>", t.order),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let m = RingSpec::mat(2, RingSpec::Gf { p: 2, k: 2 });
        assert_eq!(m.order(), Some(256));
        let t = RingSpec::tri(3, RingSpec::Zn(2));
        assert_eq!(t.order(), Some(64));
        let p = RingSpec::Prod(vec![RingSpec::Zn(4), RingSpec::Zn(3)]);
        assert_eq!(p.order(), Some(12));
        let huge = RingSpec::mat(40, RingSpec::Zn(1000));
        assert_eq!(huge.order(), None);
    }

    #[test]
    fn display() {
        let s = RingSpec::Prod(vec![
            RingSpec::mat(2, RingSpec::Gf { p: 2, k: 1 }),
            RingSpec::Prod(vec![RingSpec::Zn(3), RingSpec::Gf { p: 2, k: 2 }]),
        ]);
        assert_eq!(s.to_string(), "M(2,GF(2)) x (Z(3) x GF(2,2))");
    }

    #[test]
    fn table_json() {
        let t =
            TableSpec::from_json(r#"{"order":2,"add":[[0,1],[1,0]],"mul":[[0,0],[0,1]],"zero":0,"one":1}"#).unwrap();
        assert_eq!(t.order, 2);
        assert_eq!(TableSpec::from_json(&t.to_json()).unwrap(), t);
        assert!(TableSpec::from_json(r#"{"order":2}"#).is_err());
    }
}
